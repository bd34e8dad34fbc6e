#pragma once

#include "cone.hpp"

#include <algorithm>

// Canonical modules of the family base rings: the closed type count, the
// explicit generator sets, and a degree-by-degree brute-force oracle that
// reads the Danilov-Stanley description N·A ∩ ri(R_+A) directly off the
// lattice and the cone.

namespace polybase {

/// r = ceil((i+1)/(n-j)); the Hilbert-series numerator has degree n-r and
/// the a-invariant is -r.
inline int family_r(const FamilyParams& p) {
    p.validate();
    return (p.i + 1 + (p.n - p.j) - 1) / (p.n - p.j);
}

inline bool gorenstein_family(const FamilyParams& p) {
    p.validate();
    return p.i + p.j == p.n - 1;
}

inline int a_invariant(const FamilyParams& p) {
    p.validate();
    return p.i + p.j <= p.n - 1 ? -1 : -family_r(p);
}

/// Closed form for the type: the two binomial sums, split on i+j <= n-1
/// versus i+j >= n.
inline BigInt type_formula(const FamilyParams& p) {
    p.validate();
    int n = p.n, i = p.i, j = p.j;
    if (i + j <= n - 1) {
        BigInt type = 1;
        for (int t = 1; t <= n - i - j - 1; ++t)
            type += binomial(n + i - j + t - 1, i - 1) * binomial(n - i + j - t - 1, n - i - 1);
        return type;
    }
    int r = family_r(p);
    BigInt type = 0;
    for (int t = 1; t <= r * (n - j) - i; ++t)
        type += binomial(r * (n - j) - t - 1, i - 1) * binomial(r * j + t - 1, n - i - 1);
    return type;
}

struct CanonicalGenerators {
    ExponentSet generators;   // lexicographically sorted
    std::vector<int> degrees; // per generator, |alpha| / (common degree)
    bool inconclusive = false;
};

namespace detail {

/// alpha >= 1 componentwise with window sum u and off-window sum v.
inline void emit_window_split(int n, Subset window, long long u, long long v, ExponentSet& out) {
    std::vector<int> win, off;
    for (int k = 0; k < n; ++k)
        ((window >> k) & 1 ? win : off).push_back(k);
    long long wi = static_cast<long long>(win.size()), of = static_cast<long long>(off.size());
    if (u < wi || v < of) return;
    for_each_composition(static_cast<int>(u - wi), static_cast<int>(wi), [&](const ExponentVector& aw) {
        for_each_composition(static_cast<int>(v - of), static_cast<int>(of), [&](const ExponentVector& ao) {
            ExponentVector alpha(static_cast<size_t>(n), 1);
            for (size_t k = 0; k < win.size(); ++k) alpha[static_cast<size_t>(win[k])] += aw[k];
            for (size_t k = 0; k < off.size(); ++k) alpha[static_cast<size_t>(off[k])] += ao[k];
            out.push_back(std::move(alpha));
        });
    });
}

} // namespace detail

/// The closed-form generator sets: for i+j <= n-1 the vector (1,...,1)
/// together with the degree-2 vectors with window sum n+i-j+t and
/// complement sum n-i+j-t; for i+j >= n the degree-r vectors with window
/// sum r(n-j)-t and complement sum rj+t. Complete only when every t-slice
/// admits off-window coordinates >= 1 (see the canonical tests for the
/// counterexamples beyond that range).
inline CanonicalGenerators canonical_generators_closed(const FamilyParams& p) {
    p.validate();
    int n = p.n, i = p.i, j = p.j;
    Subset w = p.window_mask();
    CanonicalGenerators cg;
    if (i + j <= n - 1) {
        cg.generators.push_back(ExponentVector(static_cast<size_t>(n), 1));
        for (int t = 1; t <= n - i - j - 1; ++t)
            detail::emit_window_split(n, w, n + i - j + t, n - i + j - t, cg.generators);
    } else {
        int r = family_r(p);
        for (int t = 1; t <= r * (n - j) - i; ++t)
            detail::emit_window_split(n, w, static_cast<long long>(r) * (n - j) - t,
                                      static_cast<long long>(r) * j + t, cg.generators);
    }
    normalize_set(cg.generators);
    cg.degrees.reserve(cg.generators.size());
    for (const auto& g : cg.generators)
        cg.degrees.push_back(static_cast<int>(modulus(g) / n));
    return cg;
}

/// Default brute-force degree cutoff for family inputs: all generators sit
/// in degrees <= max(2, r).
inline int default_cutoff_family(const FamilyParams& p) {
    return std::max(family_r(p), 2) + 1;
}

/// Degree-by-degree minimal generators of the canonical module of a normal
/// monomial subring generated in one degree: W_d = interior points of degree
/// d, a point being a minimal generator when no degree-1 semigroup generator
/// can be subtracted without leaving N·A ∩ ri(R_+A). Stops at max_degree and
/// flags the run inconclusive when the last degree still produced
/// generators.
inline CanonicalGenerators canonical_generators_bruteforce(const ExponentSet& a, const ConeRep& rep,
                                                           int max_degree) {
    if (max_degree < 1) throw std::invalid_argument("canonical_generators_bruteforce: max_degree must be >= 1");
    if (a.empty()) throw std::invalid_argument("canonical_generators_bruteforce: empty exponent set");
    int n = static_cast<int>(a.front().size());
    long long deg1 = modulus(a.front());
    for (const auto& u : a)
        if (modulus(u) != deg1)
            throw std::invalid_argument("canonical_generators_bruteforce: generators must share one degree");

    Lattice lat = lattice_of(a);

    // coordinates cut out by coordinate halfspaces must be >= 1 in ri
    std::vector<int> mins(static_cast<size_t>(n), 0);
    for (const auto& h : rep.normals) {
        Vec prim = h.primitive();
        int nz = -1;
        bool coordinate = true;
        for (int k = 0; k < n && coordinate; ++k) {
            if (prim[static_cast<size_t>(k)] == 0) continue;
            if (nz >= 0 || prim[static_cast<size_t>(k)] != 1) coordinate = false;
            else nz = k;
        }
        if (coordinate && nz >= 0) mins[static_cast<size_t>(nz)] = 1;
    }
    int base = 0;
    for (int m : mins) base += m;

    auto interior = [&](const ExponentVector& z) {
        return lat.contains(z) && cone_membership(rep, z, true);
    };

    CanonicalGenerators cg;
    int last_with_generators = 0;
    for (int d = 1; d <= max_degree; ++d) {
        long long target = deg1 * d - base;
        if (target < 0) continue;
        ExponentVector z(static_cast<size_t>(n));
        bool produced = false;
        for_each_composition(static_cast<int>(target), n, [&](const ExponentVector& c) {
            for (int k = 0; k < n; ++k) z[static_cast<size_t>(k)] = c[static_cast<size_t>(k)] + mins[static_cast<size_t>(k)];
            if (!interior(z)) return;
            for (const auto& g : a) {
                ExponentVector w(static_cast<size_t>(n));
                bool nonneg = true;
                for (int k = 0; k < n; ++k) {
                    w[static_cast<size_t>(k)] = z[static_cast<size_t>(k)] - g[static_cast<size_t>(k)];
                    if (w[static_cast<size_t>(k)] < 0) { nonneg = false; break; }
                }
                if (nonneg && interior(w)) return; // reducible
            }
            cg.generators.push_back(z);
            cg.degrees.push_back(d);
            produced = true;
        });
        if (produced) last_with_generators = d;
    }
    cg.inconclusive = (last_with_generators == max_degree);
    // outputs are emitted in lexicographic order already (composition order),
    // degree by degree; re-sort jointly for a canonical global order
    std::vector<size_t> perm(cg.generators.size());
    for (size_t k = 0; k < perm.size(); ++k) perm[k] = k;
    std::sort(perm.begin(), perm.end(), [&](size_t x, size_t y) { return cg.generators[x] < cg.generators[y]; });
    ExponentSet gens(cg.generators.size());
    std::vector<int> degs(cg.degrees.size());
    for (size_t k = 0; k < perm.size(); ++k) {
        gens[k] = cg.generators[perm[k]];
        degs[k] = cg.degrees[perm[k]];
    }
    cg.generators = std::move(gens);
    cg.degrees = std::move(degs);
    return cg;
}

struct RingInvariants {
    BigInt type;
    int a_invariant = 0;
    bool gorenstein = false;
    int r = 0;
};

inline RingInvariants family_invariants(const FamilyParams& p) {
    RingInvariants inv;
    inv.type = type_formula(p);
    inv.a_invariant = a_invariant(p);
    inv.gorenstein = gorenstein_family(p);
    inv.r = family_r(p);
    return inv;
}

} // namespace polybase
