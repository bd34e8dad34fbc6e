#pragma once

#include "canonical.hpp"
#include "polymatroid.hpp"

#include <string>

// Hilbert/Ehrhart side: the closed Hilbert function of the family, lattice
// point counting oracles, h-vectors over (1-t)^d, Hadamard products, the
// Segre chain with its Eulerian numerators, and the experimental checker for
// the type-vs-h-vector identities.

namespace polybase {

/// Rational series numerator(t) / (1-t)^denom_power with exact coefficients.
struct HilbertSeries {
    IntSequence numerator;
    int denom_power = 0;

    int degree() const { return static_cast<int>(numerator.size()) - 1; }
};

inline void trim_trailing_zeros(IntSequence& s) {
    while (s.size() > 1 && s.back() == 0) s.pop_back();
}

/// Closed Hilbert function of the family base ring:
/// h(t) = sum_{k=0}^{(n-j)t} C(k+i-1, k) C(nt-k+n-i-1, nt-k).
inline BigInt ehrhart_formula(const FamilyParams& p, int t) {
    p.validate();
    if (t < 0) throw std::invalid_argument("ehrhart_formula: t must be >= 0");
    BigInt acc = 0;
    long long nt = static_cast<long long>(p.n) * t;
    for (long long k = 0; k <= static_cast<long long>(p.n - p.j) * t; ++k)
        acc += binomial(k + p.i - 1, k) * binomial(nt - k + p.n - p.i - 1, nt - k);
    return acc;
}

/// Enumeration oracle for the family: lattice points with |x| = nt and
/// window sum <= (n-j)t.
inline BigInt ehrhart_bruteforce(const FamilyParams& p, int t) {
    p.validate();
    if (t < 0) throw std::invalid_argument("ehrhart_bruteforce: t must be >= 0");
    Subset w = p.window_mask();
    long long cap = static_cast<long long>(p.n - p.j) * t;
    BigInt count = 0;
    for_each_composition(p.n * t, p.n, [&](const ExponentVector& x) {
        if (sum_on(x, w) <= cap) ++count;
    });
    return count;
}

/// Enumeration oracle for a general rank function: lattice points with
/// |x| = t*rank and x(F) <= t*rho(F) for every F. An optional lattice
/// restricts the count to Z·A (needed when the exponent lattice is a proper
/// sublattice of Z^n on the modulus hyperplane).
inline BigInt ehrhart_bruteforce(const RankFunction& rho, int rank, int t, const Lattice* lattice = nullptr) {
    if (t < 0) throw std::invalid_argument("ehrhart_bruteforce: t must be >= 0");
    int n = rho.n;
    Subset full = (Subset(1) << n) - 1;
    BigInt count = 0;
    for_each_composition(rank * t, n, [&](const ExponentVector& x) {
        for (Subset f = 1; f <= full; ++f)
            if (sum_on(x, f) > static_cast<long long>(t) * rho.value[static_cast<size_t>(f)]) return;
        if (lattice && !lattice->contains(x)) return;
        ++count;
    });
    return count;
}

/// Coefficient of t^k in numerator(t) * sum_m C(d-1+m, m) t^m.
inline BigInt series_coefficient(const HilbertSeries& s, int k) {
    if (k < 0) return 0;
    if (s.denom_power == 0)
        return k < static_cast<int>(s.numerator.size()) ? s.numerator[static_cast<size_t>(k)] : BigInt(0);
    BigInt acc = 0;
    for (int m = 0; m <= k && m < static_cast<int>(s.numerator.size()); ++m)
        acc += s.numerator[static_cast<size_t>(m)] * binomial(s.denom_power - 1 + k - m, k - m);
    return acc;
}

/// First integer from which the Hilbert function agrees with the Hilbert
/// polynomial: ri = deg(numerator) - denom_power + 1.
inline int regularity_index(const HilbertSeries& s) {
    return s.degree() - s.denom_power + 1;
}

/// Hilbert series numerator of the family over (1-t)^n, of degree exactly
/// n - r. Computed from the first n+1 Hilbert values; any nonzero
/// coefficient beyond n-r is an internal inconsistency.
inline HilbertSeries h_vector(const FamilyParams& p) {
    p.validate();
    int n = p.n, r = family_r(p);
    IntSequence values(static_cast<size_t>(n + 1));
    for (int t = 0; t <= n; ++t) values[static_cast<size_t>(t)] = ehrhart_formula(p, t);
    IntSequence num = numerator_from_hilbert(values, n);
    for (int k = n - r + 1; k <= n; ++k)
        if (num[static_cast<size_t>(k)] != 0)
            throw std::runtime_error("h_vector: nonzero coefficient beyond degree n-r");
    if (num[static_cast<size_t>(n - r)] == 0)
        throw std::runtime_error("h_vector: numerator degree fell short of n-r");
    num.resize(static_cast<size_t>(n - r + 1));
    return HilbertSeries{std::move(num), n};
}

/// Hilbert series of the Ehrhart ring of conv(P): coefficient k counts the
/// lattice points of the k-th dilation, cut out by the rank inequalities
/// x(F) <= k rho(F), x >= 0 (no modulus constraint); numerator over
/// (1-t)^{n+1}.
inline HilbertSeries ehrhart_ring_hvector(const ExponentSet& p) {
    if (p.empty()) throw std::invalid_argument("ehrhart_ring_hvector: empty set");
    int n = static_cast<int>(p.front().size());
    RankFunction rho = rank_function_of(p);
    Subset full = (Subset(1) << n) - 1;
    IntSequence values(static_cast<size_t>(n + 2));
    for (int k = 0; k <= n + 1; ++k) {
        // box enumeration bounded by the dilated singleton ranks
        BigInt count = 0;
        ExponentVector x(static_cast<size_t>(n), 0);
        std::function<void(int)> rec = [&](int pos) {
            if (pos == n) {
                for (Subset f = 1; f <= full; ++f)
                    if (sum_on(x, f) > static_cast<long long>(k) * rho.value[static_cast<size_t>(f)]) return;
                ++count;
                return;
            }
            int cap = k * rho.value[size_t(1) << pos];
            for (int v = 0; v <= cap; ++v) {
                x[static_cast<size_t>(pos)] = v;
                rec(pos + 1);
            }
            x[static_cast<size_t>(pos)] = 0;
        };
        rec(0);
        values[static_cast<size_t>(k)] = count;
    }
    IntSequence num = numerator_from_hilbert(values, n + 1);
    if (num.back() != 0)
        throw std::runtime_error("ehrhart_ring_hvector: numerator did not stabilize");
    trim_trailing_zeros(num);
    return HilbertSeries{std::move(num), n + 1};
}

/// Coefficientwise product re-expressed over (1-t)^{a+b-1}. The expansion
/// order must reach max(ri(a), ri(b)) + (a+b-1) - 1 so the numerator is
/// determined.
inline HilbertSeries hadamard(const HilbertSeries& a, const HilbertSeries& b, int order) {
    int d = a.denom_power + b.denom_power - 1;
    if (d < 0) throw std::invalid_argument("hadamard: denominators too small");
    int required = std::max(regularity_index(a), regularity_index(b)) + d - 1;
    if (order < required)
        throw std::invalid_argument("hadamard: order too small to determine the numerator (need >= " +
                                    std::to_string(required) + ")");
    IntSequence values(static_cast<size_t>(order + 1));
    for (int k = 0; k <= order; ++k)
        values[static_cast<size_t>(k)] = series_coefficient(a, k) * series_coefficient(b, k);
    IntSequence num = numerator_from_hilbert(values, d);
    for (int k = std::max(required + 1, 0); k <= order; ++k)
        if (num[static_cast<size_t>(k)] != 0)
            throw std::runtime_error("hadamard: numerator exceeded its degree bound");
    trim_trailing_zeros(num);
    return HilbertSeries{std::move(num), d};
}

/// Numerator of the Segre chain ring B_m on two-letter chains: the Eulerian
/// row [A(m,1), ..., A(m,m)] over (1-t)^{m+1}.
inline IntSequence segre_h_vector(int m) { return eulerian_row(m); }

inline HilbertSeries segre_series(int m) { return HilbertSeries{eulerian_row(m), m + 1}; }

/// Formal check of the derivative recurrence linking the chains with l
/// letters: (1/(l-1)!) d^{l-1}/dt^{l-1} (t^{l-1} H_m) = H_{m+1}, on
/// truncated expansions with coefficients C(i+l-1, i)^m.
inline bool derivative_recurrence_check(int m, int l, int order) {
    if (m < 1 || l < 2) throw std::invalid_argument("derivative_recurrence_check: need m >= 1, l >= 2");
    if (order < m + l) throw std::invalid_argument("derivative_recurrence_check: order too small");
    auto coeff = [&](int i, int power) {
        return boost::multiprecision::pow(binomial(i + l - 1, i), static_cast<unsigned>(power));
    };
    // t^{l-1} H_m, coefficients up to order + l - 1
    IntSequence s(static_cast<size_t>(order + l), 0);
    for (int i = 0; i <= order; ++i) s[static_cast<size_t>(i + l - 1)] = coeff(i, m);
    for (int pass = 0; pass < l - 1; ++pass) {
        IntSequence d(s.size() - 1);
        for (size_t k = 0; k + 1 < s.size(); ++k) d[k] = BigInt(k + 1) * s[k + 1];
        s = std::move(d);
    }
    BigInt fact = factorial(l - 1);
    for (int i = 0; i <= order; ++i) {
        if (s[static_cast<size_t>(i)] % fact != 0) return false;
        if (s[static_cast<size_t>(i)] / fact != coeff(i, m + 1)) return false;
    }
    return true;
}

/// One incomparable pair {a, b} of the product of m two-element chains
/// A_k = {k, k+1}, with its join and meet.
struct HibiRelation {
    ExponentVector a, b, join, meet; // index tuples, length m
};

/// All Hibi relations of the chain product: one per unordered incomparable
/// pair. The count equals 2^{2m-1} + 2^{m-1} - 3^m.
inline std::vector<HibiRelation> hibi_relations(int m) {
    if (m < 1) throw std::invalid_argument("hibi_relations: m must be >= 1");
    std::vector<ExponentVector> tuples;
    ExponentVector cur(static_cast<size_t>(m));
    std::function<void(int)> rec = [&](int k) {
        if (k == m) {
            tuples.push_back(cur);
            return;
        }
        cur[static_cast<size_t>(k)] = k + 1;
        rec(k + 1);
        cur[static_cast<size_t>(k)] = k + 2;
        rec(k + 1);
    };
    rec(0);
    std::sort(tuples.begin(), tuples.end());
    std::vector<HibiRelation> out;
    for (size_t x = 0; x < tuples.size(); ++x)
        for (size_t y = x + 1; y < tuples.size(); ++y) {
            bool le = subvector_leq(tuples[x], tuples[y]);
            bool ge = subvector_leq(tuples[y], tuples[x]);
            if (le || ge) continue;
            out.push_back(HibiRelation{tuples[x], tuples[y], join_vec(tuples[x], tuples[y]),
                                       meet_vec(tuples[x], tuples[y])});
        }
    return out;
}

inline BigInt hibi_count_formula(int m) {
    if (m < 1) throw std::invalid_argument("hibi_count_formula: m must be >= 1");
    BigInt two = 2;
    return boost::multiprecision::pow(two, static_cast<unsigned>(2 * m - 1)) +
           boost::multiprecision::pow(two, static_cast<unsigned>(m - 1)) -
           boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(m));
}

struct ShapeChecks {
    bool symmetric = false;
    bool unimodal = false;
    bool log_concave = false;
};

inline ShapeChecks shape_checks(const IntSequence& v) {
    ShapeChecks s;
    s.symmetric = std::equal(v.begin(), v.end(), v.rbegin());
    size_t k = 0;
    while (k + 1 < v.size() && v[k] <= v[k + 1]) ++k;
    while (k + 1 < v.size() && v[k] >= v[k + 1]) ++k;
    s.unimodal = v.empty() || k == v.size() - 1;
    s.log_concave = true;
    for (size_t i = 1; i + 1 < v.size(); ++i)
        if (v[i] * v[i] < v[i - 1] * v[i + 1]) s.log_concave = false;
    return s;
}

// ---- experimental checker for the type identities ----

enum class OPVerdict { holds, fails, inconclusive, inapplicable };

inline const char* to_string(OPVerdict v) {
    switch (v) {
        case OPVerdict::holds: return "holds";
        case OPVerdict::fails: return "fails";
        case OPVerdict::inconclusive: return "inconclusive";
        case OPVerdict::inapplicable: return "inapplicable";
    }
    return "?";
}

/// Per-instance report: never a truth claim about the general statement.
struct OpenProblemReport {
    int n = 0;
    int dim = 0;       // Krull dimension of the base ring
    int r = 0;         // minimal canonical-generator degree (when conclusive)
    BigInt type;       // number of minimal generators found
    IntSequence h;     // numerator over (1-t)^n
    BigInt lhs, rhs;   // the tested identity, when applicable
    OPVerdict verdict = OPVerdict::inconclusive;
    int cutoff = 0;
    std::string note;
};

namespace detail {

inline void finish_identity(OpenProblemReport& rep) {
    int n = rep.n, r = rep.r;
    rep.lhs = rep.type;
    if (r == 1)
        rep.rhs = 1 + rep.h[static_cast<size_t>(n - 2)] - rep.h[1];
    else
        rep.rhs = rep.h[static_cast<size_t>(n - r)];
    rep.verdict = (rep.lhs == rep.rhs) ? OPVerdict::holds : OPVerdict::fails;
}

} // namespace detail

/// Family instance: type from the brute-force canonical oracle, h-vector
/// from the Ehrhart side.
inline OpenProblemReport open_problem_report(const FamilyParams& p, int cutoff_override = 0) {
    p.validate();
    OpenProblemReport rep;
    rep.n = p.n;
    rep.dim = p.n;
    rep.cutoff = cutoff_override > 0 ? cutoff_override : default_cutoff_family(p);
    ExponentSet a = family_exponents(p);
    CanonicalGenerators cg = canonical_generators_bruteforce(a, family_cone_rep(p), rep.cutoff);
    rep.h = h_vector(p).numerator;
    rep.type = cg.generators.size();
    if (cg.inconclusive) {
        rep.verdict = OPVerdict::inconclusive;
        rep.note = "canonical oracle still producing generators at the cutoff";
        return rep;
    }
    rep.r = *std::min_element(cg.degrees.begin(), cg.degrees.end());
    detail::finish_identity(rep);
    return rep;
}

/// Arbitrary presentation with m = n sets, n >= 4. Instances whose base
/// ring is not n-dimensional are reported inapplicable (the identity reads
/// the numerator over (1-t)^n).
inline OpenProblemReport open_problem_report(const Presentation& pres, int cutoff_override = 0) {
    pres.validate();
    if (pres.n < 4 || static_cast<int>(pres.sets.size()) != pres.n)
        throw std::invalid_argument("open_problem_report: need n >= 4 and exactly n sets");
    OpenProblemReport rep;
    rep.n = pres.n;
    int n = pres.n;
    ExponentSet bases = transversal_bases(pres);
    Lattice lat = lattice_of(bases);
    rep.dim = lat.rank();
    rep.cutoff = cutoff_override > 0 ? cutoff_override : n;
    if (rep.dim < n) {
        rep.verdict = OPVerdict::inapplicable;
        rep.note = "base ring has dimension " + std::to_string(rep.dim) + " < n";
        return rep;
    }
    ConeRep cone = cone_facets_bruteforce(bases);
    CanonicalGenerators cg = canonical_generators_bruteforce(bases, cone, rep.cutoff);
    rep.type = cg.generators.size();
    if (cg.inconclusive || cg.generators.empty()) {
        rep.verdict = OPVerdict::inconclusive;
        rep.note = "canonical oracle inconclusive at cutoff";
        return rep;
    }
    rep.r = *std::min_element(cg.degrees.begin(), cg.degrees.end());
    RankFunction rho = transversal_rank_function(pres);
    IntSequence values(static_cast<size_t>(n + 1));
    for (int t = 0; t <= n; ++t)
        values[static_cast<size_t>(t)] = ehrhart_bruteforce(rho, n, t, &lat);
    IntSequence num = numerator_from_hilbert(values, n);
    for (int k = n - rep.r + 1; k <= n; ++k)
        if (num[static_cast<size_t>(k)] != 0)
            throw std::logic_error("open_problem_report: numerator degree disagrees with the canonical oracle");
    num.resize(static_cast<size_t>(n - rep.r + 1));
    rep.h = std::move(num);
    detail::finish_identity(rep);
    return rep;
}

} // namespace polybase
