#pragma once

#include "bigint.hpp"

#include <stdexcept>

namespace polybase {

/// Binomial coefficient C(a, b). Zero when b < 0 or b > a >= 0; C(a, 0) = 1
/// for a >= 0. Negative a yields 0 for every b (only nonnegative upper
/// arguments occur in this library).
inline BigInt binomial(long long a, long long b) {
    if (b < 0 || a < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    BigInt r = 1;
    for (long long s = 1; s <= b; ++s) {
        r *= a - b + s;
        r /= s; // exact at every step
    }
    return r;
}

inline BigInt factorial(int m) {
    BigInt r = 1;
    for (int s = 2; s <= m; ++s) r *= s;
    return r;
}

/// Eulerian number A(m, k) via A(m,k) = k*A(m-1,k) + (m-k+1)*A(m-1,k-1),
/// A(m,1) = A(m,m) = 1. Zero outside 1 <= k <= m.
inline IntSequence eulerian_row(int m) {
    if (m < 1) throw std::invalid_argument("eulerian_row: m must be >= 1");
    IntSequence row{1};
    for (int mm = 2; mm <= m; ++mm) {
        IntSequence next(static_cast<size_t>(mm));
        for (int k = 1; k <= mm; ++k) {
            BigInt a = (k <= mm - 1) ? row[static_cast<size_t>(k - 1)] : BigInt(0);
            BigInt b = (k >= 2) ? row[static_cast<size_t>(k - 2)] : BigInt(0);
            next[static_cast<size_t>(k - 1)] = k * a + (mm - k + 1) * b;
        }
        row = std::move(next);
    }
    return row;
}

inline BigInt eulerian(int m, long long k) {
    if (m < 1) throw std::invalid_argument("eulerian: m must be >= 1");
    if (k < 1 || k > m) return 0;
    return eulerian_row(m)[static_cast<size_t>(k - 1)];
}

/// Worpitzky identity: k^m = sum_{s=1}^{m} A(m,s) * C(k+s-1, m).
inline bool worpitzky_check(int m, int k) {
    if (m < 1 || k < 1) throw std::invalid_argument("worpitzky_check: m, k must be >= 1");
    BigInt lhs = boost::multiprecision::pow(BigInt(k), static_cast<unsigned>(m));
    BigInt rhs = 0;
    IntSequence row = eulerian_row(m);
    for (int s = 1; s <= m; ++s)
        rhs += row[static_cast<size_t>(s - 1)] * binomial(k + s - 1, m);
    return lhs == rhs;
}

/// Numerator coefficients of a Hilbert series over (1-t)^denom_power from the
/// leading Hilbert-function values: h_j = sum_{s=0}^{j} (-1)^s h(j-s) C(d, s).
/// Output has the same length as the input; trailing zeros are the caller's
/// business.
inline IntSequence numerator_from_hilbert(const IntSequence& values, int denom_power) {
    if (denom_power < 0) throw std::invalid_argument("numerator_from_hilbert: denom_power must be >= 0");
    IntSequence out(values.size());
    for (size_t j = 0; j < values.size(); ++j) {
        BigInt acc = 0;
        for (size_t s = 0; s <= j; ++s) {
            BigInt term = values[j - s] * binomial(denom_power, static_cast<long long>(s));
            if (s % 2 == 0) acc += term; else acc -= term;
        }
        out[j] = acc;
    }
    return out;
}

} // namespace polybase
