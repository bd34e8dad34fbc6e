#pragma once

#include "bigint.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

// Exact integer linear algebra: fraction-free elimination for ranks and
// determinants, kernels of corank-1 row sets via signed maximal minors, and
// Hermite-style echelon bases for lattice membership. No floating point.

namespace polybase {

using Vec = std::vector<BigInt>;
using Mat = std::vector<Vec>;

inline BigInt vec_gcd(const Vec& v) {
    BigInt g = 0;
    for (const BigInt& x : v) g = boost::multiprecision::gcd(g, x);
    return g;
}

/// Divide by the content; direction is preserved. Zero vectors stay zero.
inline void make_primitive(Vec& v) {
    BigInt g = vec_gcd(v);
    if (g > 1)
        for (BigInt& x : v) x /= g;
}

inline BigInt dot(const Vec& a, const Vec& b) {
    BigInt r = 0;
    for (size_t k = 0; k < a.size(); ++k) r += a[k] * b[k];
    return r;
}

inline BigInt dot(const Vec& a, const std::vector<int>& b) {
    BigInt r = 0;
    for (size_t k = 0; k < a.size(); ++k) r += a[k] * b[k];
    return r;
}

/// Incremental row-echelon accumulator over the integers. Rows are reduced
/// cross-multiplicatively and content-normalized, so entries stay small at
/// the ranks this library works at.
struct EchelonBasis {
    Mat rows; // echelon rows, pivot columns strictly increasing
    std::vector<int> pivot_cols;

    int rank() const { return static_cast<int>(rows.size()); }

    // Returns true when the row enlarged the span.
    bool add(Vec row) {
        for (size_t r = 0; r < rows.size(); ++r) {
            int c = pivot_cols[r];
            if (row[static_cast<size_t>(c)] == 0) continue;
            BigInt f1 = rows[r][static_cast<size_t>(c)], f2 = row[static_cast<size_t>(c)];
            for (size_t k = 0; k < row.size(); ++k)
                row[k] = row[k] * f1 - rows[r][k] * f2;
            make_primitive(row);
        }
        int c = -1;
        for (size_t k = 0; k < row.size(); ++k)
            if (row[k] != 0) { c = static_cast<int>(k); break; }
        if (c < 0) return false;
        size_t pos = 0;
        while (pos < rows.size() && pivot_cols[pos] < c) ++pos;
        rows.insert(rows.begin() + static_cast<long>(pos), std::move(row));
        pivot_cols.insert(pivot_cols.begin() + static_cast<long>(pos), c);
        return true;
    }
};

inline int rank_of(const Mat& m) {
    EchelonBasis eb;
    for (const Vec& r : m) eb.add(r);
    return eb.rank();
}

inline int rank_of_points(const std::vector<std::vector<int>>& pts) {
    EchelonBasis eb;
    for (const auto& p : pts) eb.add(Vec(p.begin(), p.end()));
    return eb.rank();
}

/// Bareiss fraction-free determinant. Exact; divisions are guaranteed exact.
inline BigInt det_bareiss(Mat a) {
    size_t n = a.size();
    if (n == 0) return 1;
    BigInt sign = 1, prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

/// Primitive integer kernel vector of a row set of rank n-1 inside Z^n,
/// computed from signed maximal minors of an independent row subset.
/// Returns nullopt when the rank is not n-1.
inline std::optional<Vec> kernel_vector_primitive(const Mat& rows, int n) {
    EchelonBasis eb;
    for (const Vec& r : rows) eb.add(r);
    if (eb.rank() != n - 1) return std::nullopt;
    const Mat& b = eb.rows; // n-1 independent rows, same row space
    Vec z(static_cast<size_t>(n));
    for (int col = 0; col < n; ++col) {
        Mat minor;
        minor.reserve(static_cast<size_t>(n - 1));
        for (const Vec& r : b) {
            Vec m;
            m.reserve(static_cast<size_t>(n - 1));
            for (int k = 0; k < n; ++k)
                if (k != col) m.push_back(r[static_cast<size_t>(k)]);
            minor.push_back(std::move(m));
        }
        BigInt d = det_bareiss(std::move(minor));
        z[static_cast<size_t>(col)] = (col % 2 == 0) ? d : -d;
    }
    make_primitive(z);
    bool zero = true;
    for (const BigInt& x : z)
        if (x != 0) { zero = false; break; }
    if (zero) return std::nullopt;
    return z;
}

inline BigInt floordiv(const BigInt& a, const BigInt& b) {
    BigInt q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

/// Integer lattice given by a Hermite-form row basis; membership is decided
/// exactly by successive pivot elimination.
struct Lattice {
    int n = 0;
    Mat basis;                   // echelon rows, positive pivots, reduced above
    std::vector<int> pivot_cols; // strictly increasing

    int rank() const { return static_cast<int>(basis.size()); }

    bool contains(Vec z) const {
        for (size_t r = 0; r < basis.size(); ++r) {
            size_t c = static_cast<size_t>(pivot_cols[r]);
            if (z[c] == 0) continue;
            if (z[c] % basis[r][c] != 0) return false;
            BigInt q = z[c] / basis[r][c];
            for (size_t k = c; k < z.size(); ++k) z[k] -= q * basis[r][k];
        }
        for (const BigInt& x : z)
            if (x != 0) return false;
        return true;
    }

    bool contains(const std::vector<int>& z) const {
        return contains(Vec(z.begin(), z.end()));
    }
};

inline Lattice lattice_from_rows(Mat a, int n) {
    Lattice lat;
    lat.n = n;
    size_t r = 0;
    for (int c = 0; c < n && r < a.size(); ++c) {
        // gcd elimination within column c on rows r..end
        while (true) {
            size_t best = a.size();
            for (size_t k = r; k < a.size(); ++k) {
                if (a[k][static_cast<size_t>(c)] == 0) continue;
                if (best == a.size() ||
                    boost::multiprecision::abs(a[k][static_cast<size_t>(c)]) <
                        boost::multiprecision::abs(a[best][static_cast<size_t>(c)]))
                    best = k;
            }
            if (best == a.size()) break; // column clear below r
            std::swap(a[r], a[best]);
            bool clean = true;
            for (size_t k = r + 1; k < a.size(); ++k) {
                if (a[k][static_cast<size_t>(c)] == 0) continue;
                BigInt q = a[k][static_cast<size_t>(c)] / a[r][static_cast<size_t>(c)];
                if (q != 0)
                    for (int col2 = 0; col2 < n; ++col2)
                        a[k][static_cast<size_t>(col2)] -= q * a[r][static_cast<size_t>(col2)];
                if (a[k][static_cast<size_t>(c)] != 0) clean = false;
            }
            if (clean) break;
        }
        if (a[r][static_cast<size_t>(c)] == 0) continue;
        if (a[r][static_cast<size_t>(c)] < 0)
            for (int col2 = 0; col2 < n; ++col2) a[r][static_cast<size_t>(col2)] = -a[r][static_cast<size_t>(col2)];
        lat.pivot_cols.push_back(c);
        ++r;
    }
    a.resize(r);
    // reduce entries above each pivot into [0, pivot)
    for (size_t rr = 0; rr < a.size(); ++rr) {
        size_t c = static_cast<size_t>(lat.pivot_cols[rr]);
        for (size_t k = 0; k < rr; ++k) {
            BigInt q = floordiv(a[k][c], a[rr][c]);
            if (q != 0)
                for (size_t col2 = 0; col2 < a[k].size(); ++col2)
                    a[k][col2] -= q * a[rr][col2];
        }
    }
    lat.basis = std::move(a);
    return lat;
}

} // namespace polybase
