#pragma once

#include "combinatorics.hpp"
#include "linalg.hpp"
#include "vectors.hpp"

#include <algorithm>
#include <stdexcept>

// Polyhedral cones over exponent sets: the n-facet-plus-one family of
// halfspace representations, irreducibility verification, extremal rays,
// facet recovery from the generators, and the integer lattice spanned by an
// exponent set. Everything is exact.

namespace polybase {

/// Integer hyperplane through the origin. `normal` is stored as given (the
/// family vectors are kept unreduced, entries -j and n-j); primitive() is the
/// content-reduced form used for comparisons.
struct Hyperplane {
    Vec normal;

    Vec primitive() const {
        Vec p = normal;
        make_primitive(p);
        return p;
    }

    BigInt eval(const ExponentVector& x) const { return dot(normal, x); }
    BigInt eval(const Vec& x) const { return dot(normal, x); }

    bool operator==(const Hyperplane& o) const { return normal == o.normal; }
};

struct ConeRep {
    int n = 0;
    std::vector<Hyperplane> normals;
};

/// Canonical comparison form: sorted primitive normals.
inline std::vector<Vec> canonical_normals(const ConeRep& rep) {
    std::vector<Vec> out;
    out.reserve(rep.normals.size());
    for (const auto& h : rep.normals) out.push_back(h.primitive());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline bool same_cone_rep(const ConeRep& a, const ConeRep& b) {
    return canonical_normals(a) == canonical_normals(b);
}

/// Parameters of the family: sigma is the cycle (1,2,...,n) and
/// sigma^t[i] = {sigma^t(1),...,sigma^t(i)} is a cyclic window of length i.
struct FamilyParams {
    int n = 0, i = 0, j = 0, t = 0;

    void validate() const {
        if (n < 3) throw std::invalid_argument("FamilyParams: need n >= 3");
        if (i < 1 || i > n - 2) throw std::invalid_argument("FamilyParams: need 1 <= i <= n-2");
        if (j < 1 || j > n - 1) throw std::invalid_argument("FamilyParams: need 1 <= j <= n-1");
        if (t < 0 || t > n - 1) throw std::invalid_argument("FamilyParams: need 0 <= t <= n-1");
    }

    Subset window_mask() const {
        Subset w = 0;
        for (int k = 1; k <= i; ++k) w |= Subset(1) << ((k - 1 + t) % n);
        return w;
    }
};

/// The vector nu^j_{sigma^t[i]}: entry -j on the window, n-j elsewhere.
/// Kept unreduced; primitive() divides out gcd(j, n).
inline Hyperplane nu_vector(const FamilyParams& p) {
    p.validate();
    Subset w = p.window_mask();
    Vec v(static_cast<size_t>(p.n));
    for (int k = 0; k < p.n; ++k)
        v[static_cast<size_t>(k)] = (w >> k) & 1 ? BigInt(-p.j) : BigInt(p.n - p.j);
    return Hyperplane{std::move(v)};
}

/// Exponent set of the family: all alpha in Z_+^n with |alpha| = n and
/// window sum <= n-j.
inline ExponentSet family_exponents(const FamilyParams& p) {
    p.validate();
    Subset w = p.window_mask();
    ExponentSet out;
    for_each_composition(p.n, p.n, [&](const ExponentVector& a) {
        if (sum_on(a, w) <= p.n - p.j) out.push_back(a);
    });
    return out;
}

/// The n+1 halfspace normals {nu, e_1, ..., e_n}.
inline ConeRep family_cone_rep(const FamilyParams& p) {
    ConeRep rep;
    rep.n = p.n;
    rep.normals.push_back(nu_vector(p));
    for (int k = 0; k < p.n; ++k) {
        Vec e(static_cast<size_t>(p.n), 0);
        e[static_cast<size_t>(k)] = 1;
        rep.normals.push_back(Hyperplane{std::move(e)});
    }
    return rep;
}

template <class V>
inline bool cone_membership(const ConeRep& rep, const V& x, bool strict) {
    for (const auto& h : rep.normals) {
        BigInt v = h.eval(x);
        if (strict ? v <= 0 : v < 0) return false;
    }
    return true;
}

/// Primitive generators of the 1-dimensional faces: each ray arises as the
/// kernel of some corank-1 subset of the normals, oriented into the cone.
inline std::vector<Vec> extremal_rays(const ConeRep& rep) {
    int n = rep.n;
    Mat all;
    for (const auto& h : rep.normals) all.push_back(h.normal);
    // pointed <=> no kernel direction satisfies every constraint with its
    // negation, i.e. the normals span R^n
    if (rank_of(all) != n) throw std::domain_error("extremal_rays: cone is not pointed");

    int m = static_cast<int>(rep.normals.size());
    std::vector<Vec> rays;
    std::vector<int> idx(static_cast<size_t>(n - 1));
    std::function<void(int, int)> rec = [&](int pos, int from) {
        if (pos == n - 1) {
            Mat rows;
            for (int k : idx) rows.push_back(rep.normals[static_cast<size_t>(k)].normal);
            auto z = kernel_vector_primitive(rows, n);
            if (!z) return;
            bool pos_ok = cone_membership(rep, *z, false);
            if (!pos_ok) {
                for (BigInt& c : *z) c = -c;
                if (!cone_membership(rep, *z, false)) return;
            }
            rays.push_back(*z);
            return;
        }
        for (int k = from; k < m; ++k) {
            idx[static_cast<size_t>(pos)] = k;
            rec(pos + 1, k + 1);
        }
    };
    if (n >= 2) rec(0, 0);
    std::sort(rays.begin(), rays.end());
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    return rays;
}

/// True when z is a positive rational multiple of a.
inline bool is_positive_multiple(const Vec& z, const ExponentVector& a) {
    size_t n = z.size();
    for (size_t k = 0; k < n; ++k)
        for (size_t l = k + 1; l < n; ++l)
            if (z[k] * a[l] != z[l] * a[k]) return false;
    return dot(z, a) > 0;
}

/// Irreducible-representation verification: (1) every generator satisfies
/// every halfspace, (2) each normal is facet-defining (incidence rank n-1),
/// (3) every extremal ray of the rep is a positive multiple of a generator,
/// so both cones coincide.
inline bool irreducible_rep_check(const ExponentSet& a, const ConeRep& rep) {
    if (a.empty()) throw std::domain_error("irreducible_rep_check: not full-dimensional");
    int n = static_cast<int>(a.front().size());
    if (rank_of_points(a) != n) throw std::domain_error("irreducible_rep_check: not full-dimensional");
    for (const auto& alpha : a)
        if (!cone_membership(rep, alpha, false)) return false;
    for (const auto& h : rep.normals) {
        Mat incident;
        for (const auto& alpha : a)
            if (h.eval(alpha) == 0) incident.push_back(Vec(alpha.begin(), alpha.end()));
        if (rank_of(incident) != n - 1) return false;
    }
    for (const Vec& ray : extremal_rays(rep)) {
        bool hit = false;
        for (const auto& alpha : a)
            if (is_positive_multiple(ray, alpha)) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

/// Facet normals of R_+A recovered from the generators alone. Candidate
/// normals are grown as kernels of maximal-rank incidence groups: starting
/// from a simplicial seed, every further generator refines the supporting
/// normals, combining only adjacent pairs, so the scan stays polynomial in
/// |A| at the documented scale (n <= 7, |A| <= 2500). The result is
/// validated to support A with incidence rank n-1 per normal.
inline ConeRep cone_facets_bruteforce(const ExponentSet& a) {
    if (a.empty()) throw std::domain_error("cone_facets_bruteforce: not full-dimensional");
    int n = static_cast<int>(a.front().size());
    size_t m = a.size();

    // independent seed
    EchelonBasis eb;
    std::vector<size_t> seed;
    std::vector<char> in_seed(m, 0);
    for (size_t k = 0; k < m && eb.rank() < n; ++k)
        if (eb.add(Vec(a[k].begin(), a[k].end()))) {
            seed.push_back(k);
            in_seed[k] = 1;
        }
    if (static_cast<int>(seed.size()) != n)
        throw std::domain_error("cone_facets_bruteforce: not full-dimensional");

    std::vector<size_t> order = seed;
    for (size_t k = 0; k < m; ++k)
        if (!in_seed[k]) order.push_back(k);

    size_t words = (m + 63) / 64;
    struct Ray {
        Vec v;
        std::vector<std::uint64_t> inc;
    };
    auto set_bit = [&](std::vector<std::uint64_t>& bits, size_t i) { bits[i >> 6] |= std::uint64_t(1) << (i & 63); };

    std::vector<Ray> rays;
    for (int k = 0; k < n; ++k) {
        Mat rows;
        for (int l = 0; l < n; ++l)
            if (l != k) rows.push_back(Vec(a[seed[static_cast<size_t>(l)]].begin(), a[seed[static_cast<size_t>(l)]].end()));
        auto z = kernel_vector_primitive(rows, n);
        if (!z) throw std::logic_error("cone_facets_bruteforce: degenerate seed");
        if (dot(*z, a[seed[static_cast<size_t>(k)]]) < 0)
            for (BigInt& c : *z) c = -c;
        Ray r;
        r.v = std::move(*z);
        r.inc.assign(words, 0);
        for (int l = 0; l < n; ++l)
            if (l != k) set_bit(r.inc, static_cast<size_t>(l));
        rays.push_back(std::move(r));
    }

    for (size_t step = static_cast<size_t>(n); step < m; ++step) {
        const ExponentVector& alpha = a[order[step]];
        std::vector<BigInt> val(rays.size());
        bool any_minus = false;
        for (size_t r = 0; r < rays.size(); ++r) {
            val[r] = dot(rays[r].v, alpha);
            if (val[r] < 0) any_minus = true;
        }
        if (!any_minus) {
            for (size_t r = 0; r < rays.size(); ++r)
                if (val[r] == 0) set_bit(rays[r].inc, step);
            continue;
        }
        std::vector<Ray> next;
        for (size_t r = 0; r < rays.size(); ++r)
            if (val[r] >= 0) {
                Ray keep = rays[r];
                if (val[r] == 0) set_bit(keep.inc, step);
                next.push_back(std::move(keep));
            }
        for (size_t p = 0; p < rays.size(); ++p) {
            if (val[p] <= 0) continue;
            for (size_t q = 0; q < rays.size(); ++q) {
                if (val[q] >= 0) continue;
                // adjacency: no third ray's incidence set contains the pair's
                std::vector<std::uint64_t> common(words);
                for (size_t w = 0; w < words; ++w) common[w] = rays[p].inc[w] & rays[q].inc[w];
                bool adjacent = true;
                for (size_t r = 0; r < rays.size() && adjacent; ++r) {
                    if (r == p || r == q) continue;
                    bool covers = true;
                    for (size_t w = 0; w < words && covers; ++w)
                        if (common[w] & ~rays[r].inc[w]) covers = false;
                    if (covers) adjacent = false;
                }
                if (!adjacent) continue;
                Ray nr;
                nr.v.resize(static_cast<size_t>(n));
                for (size_t k = 0; k < static_cast<size_t>(n); ++k)
                    nr.v[k] = val[p] * rays[q].v[k] - val[q] * rays[p].v[k];
                make_primitive(nr.v);
                nr.inc = common;
                set_bit(nr.inc, step);
                next.push_back(std::move(nr));
            }
        }
        rays = std::move(next);
    }

    // validation: each recovered normal supports A with incidence rank n-1
    ConeRep rep;
    rep.n = n;
    std::vector<Vec> normals;
    for (const Ray& r : rays) normals.push_back(r.v);
    std::sort(normals.begin(), normals.end());
    normals.erase(std::unique(normals.begin(), normals.end()), normals.end());
    for (const Vec& v : normals) {
        Mat incident;
        for (const auto& alpha : a) {
            BigInt d = dot(v, alpha);
            if (d < 0) throw std::logic_error("cone_facets_bruteforce: normal fails to support A");
            if (d == 0) incident.push_back(Vec(alpha.begin(), alpha.end()));
        }
        if (rank_of(incident) != n - 1)
            throw std::logic_error("cone_facets_bruteforce: non-facet normal survived");
        rep.normals.push_back(Hyperplane{v});
    }
    return rep;
}

/// |det| of the row matrix {J_1..J_i, J_{i+2}..J_n, J} with
/// J_k = (n-j)e_k + j e_{i+1} (k <= i), J_k = (n-j)e_1 + j e_k (k >= i+2)
/// and J = n e_n. Equals n (n-j)^i j^{n-i-1}.
inline BigInt det_check(const FamilyParams& p) {
    p.validate();
    if (p.t != 0) throw std::invalid_argument("det_check: defined for t = 0");
    int n = p.n, i = p.i, j = p.j;
    Mat rows;
    for (int k = 1; k <= i; ++k) {
        Vec r(static_cast<size_t>(n), 0);
        r[static_cast<size_t>(k - 1)] = n - j;
        r[static_cast<size_t>(i)] += j;
        rows.push_back(std::move(r));
    }
    for (int k = i + 2; k <= n; ++k) {
        Vec r(static_cast<size_t>(n), 0);
        r[0] += n - j;
        r[static_cast<size_t>(k - 1)] += j;
        rows.push_back(std::move(r));
    }
    Vec last(static_cast<size_t>(n), 0);
    last[static_cast<size_t>(n - 1)] = n;
    rows.push_back(std::move(last));
    return boost::multiprecision::abs(det_bareiss(std::move(rows)));
}

/// Hermite-form basis of the integer span Z·A.
inline Lattice lattice_of(const ExponentSet& a) {
    if (a.empty()) throw std::invalid_argument("lattice_of: empty set");
    int n = static_cast<int>(a.front().size());
    Mat rows;
    rows.reserve(a.size());
    for (const auto& u : a) rows.push_back(Vec(u.begin(), u.end()));
    return lattice_from_rows(std::move(rows), n);
}

/// Membership in the normal semigroup N·A = Z·A ∩ R_+A: lattice membership
/// plus every halfspace of the representation.
inline bool semigroup_membership_normal(const Lattice& lat, const ConeRep& rep, const ExponentVector& z) {
    return lat.contains(z) && cone_membership(rep, z, false);
}

inline bool semigroup_membership_normal(const ExponentSet& a, const ConeRep& rep, const ExponentVector& z) {
    return semigroup_membership_normal(lattice_of(a), rep, z);
}

} // namespace polybase
