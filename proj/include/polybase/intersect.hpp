#pragma once

#include "hilbert.hpp"

#include <optional>
#include <string>
#include <utility>

// Intersections of the Gorenstein family base rings (j = n-1-i at shift t):
// exponent sets, the joint cone representation, the Gorenstein and
// a-invariant facts, and the full classification of when an intersection of
// two of them is again a transversal base ring, with the constructive
// presentations and a small-n exhaustive refutation search.

namespace polybase {

/// r presentations indexed by pairs (i_s, t_s); the first shift is 0.
struct IntersectionSpec {
    int n = 0;
    std::vector<std::pair<int, int>> pairs; // (i_s, t_s)

    void validate() const {
        if (n < 3) throw std::invalid_argument("IntersectionSpec: need n >= 3");
        if (pairs.empty()) throw std::invalid_argument("IntersectionSpec: need at least one pair");
        if (pairs.front().second != 0) throw std::invalid_argument("IntersectionSpec: first shift must be 0");
        for (auto [i, t] : pairs) {
            if (i < 1 || i > n - 2) throw std::invalid_argument("IntersectionSpec: need 1 <= i <= n-2");
            if (t < 0 || t > n - 1) throw std::invalid_argument("IntersectionSpec: need 0 <= t <= n-1");
        }
    }

    FamilyParams family(size_t s) const {
        return FamilyParams{n, pairs[s].first, n - 1 - pairs[s].first, pairs[s].second};
    }
};

/// {alpha : |alpha| = n, cyclic-window(t, i) sum <= i+1}; the Gorenstein
/// family exponent set at shift t (wrapped windows included).
inline ExponentSet window_exponents(int n, int i, int t) {
    return family_exponents(FamilyParams{n, i, n - 1 - i, t});
}

inline ExponentSet intersection_exponents(const IntersectionSpec& spec) {
    spec.validate();
    std::vector<Subset> windows;
    std::vector<int> caps;
    for (size_t s = 0; s < spec.pairs.size(); ++s) {
        windows.push_back(spec.family(s).window_mask());
        caps.push_back(spec.pairs[s].first + 1);
    }
    ExponentSet out;
    for_each_composition(spec.n, spec.n, [&](const ExponentVector& a) {
        for (size_t s = 0; s < windows.size(); ++s)
            if (sum_on(a, windows[s]) > caps[s]) return;
        out.push_back(a);
    });
    return out;
}

struct IntersectionRep {
    ConeRep rep;
    bool had_duplicates = false;
};

/// {nu_{sigma^{t_s}[i_s]}} ∪ {e_1..e_n}, deduplicated; the result is checked
/// irreducible against the intersection exponents.
inline IntersectionRep intersection_cone_rep(const IntersectionSpec& spec) {
    spec.validate();
    IntersectionRep out;
    out.rep.n = spec.n;
    std::vector<Vec> seen;
    for (size_t s = 0; s < spec.pairs.size(); ++s) {
        Hyperplane h = nu_vector(spec.family(s));
        if (std::find(seen.begin(), seen.end(), h.normal) != seen.end()) {
            out.had_duplicates = true;
            continue;
        }
        seen.push_back(h.normal);
        out.rep.normals.push_back(std::move(h));
    }
    for (int k = 0; k < spec.n; ++k) {
        Vec e(static_cast<size_t>(spec.n), 0);
        e[static_cast<size_t>(k)] = 1;
        out.rep.normals.push_back(Hyperplane{std::move(e)});
    }
    if (!irreducible_rep_check(intersection_exponents(spec), out.rep))
        throw std::logic_error("intersection_cone_rep: representation failed the irreducibility check");
    return out;
}

struct IntersectGorenstein {
    bool gorenstein = false;
    bool inconclusive = false;
};

/// The canonical-module oracle on the intersection data must return exactly
/// {(1,...,1)}.
inline IntersectGorenstein intersection_gorenstein_check(const IntersectionSpec& spec) {
    ExponentSet a = intersection_exponents(spec);
    ConeRep rep = intersection_cone_rep(spec).rep;
    CanonicalGenerators cg = canonical_generators_bruteforce(a, rep, 3);
    IntersectGorenstein out;
    out.inconclusive = cg.inconclusive;
    ExponentSet expected{ExponentVector(static_cast<size_t>(spec.n), 1)};
    out.gorenstein = !cg.inconclusive && cg.generators == expected;
    return out;
}

/// Always -1; cross-checked against the minimal generator degree.
inline int intersection_a_invariant(const IntersectionSpec& spec) {
    ExponentSet a = intersection_exponents(spec);
    ConeRep rep = intersection_cone_rep(spec).rep;
    CanonicalGenerators cg = canonical_generators_bruteforce(a, rep, 3);
    if (cg.generators.empty() || *std::min_element(cg.degrees.begin(), cg.degrees.end()) != 1)
        throw std::logic_error("intersection_a_invariant: oracle disagrees with degree 1");
    return -1;
}

/// Exhaustive search over canonical multisets of n nonempty subsets of [n]
/// for a presentation whose base set equals the target. n <= 4 only.
inline std::optional<Presentation> bruteforce_is_base_ring(int n, const ExponentSet& target) {
    if (n > 4) throw std::domain_error("bruteforce_is_base_ring: search space exceeded (n > 4)");
    if (target.empty()) throw std::invalid_argument("bruteforce_is_base_ring: empty target");
    if (static_cast<int>(target.front().size()) != n || modulus(target.front()) != n)
        throw std::invalid_argument("bruteforce_is_base_ring: target must have modulus n in Z^n");
    return find_transversal_presentation(target, n);
}

enum class ClassifyCondition { a, b, c, d, e, none };

inline const char* to_string(ClassifyCondition c) {
    switch (c) {
        case ClassifyCondition::a: return "a";
        case ClassifyCondition::b: return "b";
        case ClassifyCondition::c: return "c";
        case ClassifyCondition::d: return "d";
        case ClassifyCondition::e: return "e";
        case ClassifyCondition::none: return "none";
    }
    return "?";
}

struct ClassificationVerdict {
    bool is_base_ring = false;
    ClassifyCondition condition = ClassifyCondition::none;
    std::string construction_case;               // which constructive case applied
    std::optional<Presentation> presentation;    // verified when present
    std::optional<bool> bruteforce_found;        // refutation search outcome (n <= 4)
};

namespace detail {

inline Subset full_set(int n) { return (Subset(1) << n) - 1; }

inline Subset prefix_set(int n, int k) {
    (void)n;
    return k <= 0 ? Subset(0) : (Subset(1) << k) - 1;
}

inline Subset shifted_window(int n, int i, int t) {
    return FamilyParams{n, i, n - 1 - i, t}.window_mask();
}

} // namespace detail

/// The constructive presentations, case by case. Callers must have a true
/// classification; the sets follow the case analysis verbatim.
inline Presentation construct_presentation(int n, int i1, int t2, int i2, std::string* case_label = nullptr) {
    Presentation c;
    c.n = n;
    c.sets.assign(static_cast<size_t>(n), 0);
    Subset full = detail::full_set(n);
    Subset w2 = detail::shifted_window(n, i2, t2);
    Subset p1 = detail::prefix_set(n, i1);
    auto assign = [&](int lo, int hi, Subset v) { // 1-based inclusive
        for (int k = lo; k <= hi; ++k) c.sets[static_cast<size_t>(k - 1)] = v;
    };
    std::string label;

    if (t2 == 0) {
        // shared-start cases; also covers i1 = 1 with t2 = 0
        if (i2 <= i1) {
            label = "3.a";
            assign(1, i2, full);
            c.sets[static_cast<size_t>(n - 1)] = full;
            assign(i2 + 1, i1, full & ~detail::prefix_set(n, i2));
            assign(i1 + 1, n - 1, full & ~p1);
        } else {
            label = "3.b";
            assign(1, i1, full);
            c.sets[static_cast<size_t>(n - 1)] = full;
            assign(i1 + 1, i2, full & ~p1);
            assign(i2 + 1, n - 1, full & ~detail::prefix_set(n, i2));
        }
    } else if (i1 == 1) {
        if (t2 + i2 <= n) {
            if (i2 == n - 2) {
                label = "1.c";
                c.sets[0] = full & ~w2;
                c.sets[static_cast<size_t>(n - 1)] = full;
                assign(2, n - 1, full & ~Subset(1));
            } else {
                label = (i2 == n - 3) ? "1.d" : "1.b";
                c.sets[0] = full & ~w2;
                c.sets[static_cast<size_t>(n - 1)] = full & ~w2;
                assign(2, i2 + 2, full & ~Subset(1));
                assign(i2 + 3, n - 1, full & ~(Subset(1) | w2));
            }
        } else {
            label = "1.e";
            c.sets[0] = full;
            c.sets[static_cast<size_t>(n - 1)] = full;
            assign(2, n - i2, full & ~w2);
            assign(n - i2 + 1, n - 1, full & ~Subset(1));
        }
    } else if (t2 == i1) {
        if (i2 + t2 < n - 1) {
            label = "2.a";
            assign(1, i1, full & ~w2);
            c.sets[static_cast<size_t>(n - 1)] = full & ~w2;
            assign(i1 + 1, i1 + i2 + 1, full & ~p1);
            assign(i1 + i2 + 2, n - 1, full & ~detail::prefix_set(n, i1 + i2));
        } else if (i2 + t2 == n - 1) {
            label = "2.b";
            assign(1, i1, full & ~w2);
            assign(i1 + 1, n - 1, full & ~p1);
            c.sets[static_cast<size_t>(n - 1)] = full;
        } else {
            label = "2.c";
            assign(1, n - i2 - 1, full & ~w2);
            assign(n - i2, i1, full);
            c.sets[static_cast<size_t>(n - 1)] = full;
            assign(i1 + 1, n - 1, full & ~p1);
        }
    } else if (t2 >= 1 && t2 <= i1 - 1) {
        if (i2 + t2 <= i1) {
            label = "d.1";
            assign(1, i2, full);
            c.sets[static_cast<size_t>(n - 1)] = full;
            assign(i2 + 1, i1, full & ~w2);
            assign(i1 + 1, n - 1, full & ~p1);
        } else {
            label = "d.2";
            assign(1, n - i2 - 1, full & ~w2);
            assign(n - i2, i1, full);
            c.sets[static_cast<size_t>(n - 1)] = full;
            assign(i1 + 1, n - 1, full & ~p1);
        }
    } else { // i1 + 1 <= t2 <= n - 1
        if (i2 + t2 <= n && i1 + 1 + i2 != n) {
            label = "e.1";
            assign(1, i1, full & ~w2);
            c.sets[static_cast<size_t>(n - 1)] = full & ~w2;
            assign(i1 + 1, i1 + i2 + 1, full & ~p1);
            assign(i1 + i2 + 2, n - 1, full & ~(p1 | w2));
        } else if (i2 + t2 <= n) { // i1 + 1 + i2 == n, forces t2 = i1 + 1
            label = "e.2";
            assign(1, i1, full & ~w2);
            assign(i1 + 1, n - 1, full & ~p1);
            c.sets[static_cast<size_t>(n - 1)] = full;
        } else {
            label = "e.3";
            assign(1, i1, full);
            c.sets[static_cast<size_t>(n - 1)] = full;
            assign(i1 + 1, i1 + n - i2 - 1, full & ~w2);
            assign(i1 + n - i2, n - 1, full & ~p1);
        }
    }
    for (Subset s : c.sets)
        if (s == 0) throw std::logic_error("construct_presentation: uncovered slot");
    if (case_label) *case_label = label;
    return c;
}

/// Conditions a-e of the classification; when true the constructive
/// presentation is built and verified against the intersection exponents.
/// With run_bruteforce_refutation (n <= 4), a false verdict is backed by the
/// exhaustive search.
inline ClassificationVerdict classify(int n, int i1, int t2, int i2, bool run_bruteforce_refutation = false) {
    if (n < 3 || i1 < 1 || i1 > n - 2 || i2 < 1 || i2 > n - 2 || t2 < 0 || t2 > n - 1)
        throw std::invalid_argument("classify: parameters out of range");
    ClassificationVerdict v;
    auto in = [](int x, int lo, int hi) { return lo <= x && x <= hi; };
    if (i1 == 1)
        v.condition = ClassifyCondition::a;
    else if (t2 == 0)
        v.condition = ClassifyCondition::b;
    else if (t2 == i1)
        v.condition = ClassifyCondition::c;
    else if (in(t2, 1, i1 - 1))
        v.condition = (in(i2, 1, i1 - t2) || in(i2, n - t2, n - 2)) ? ClassifyCondition::d : ClassifyCondition::none;
    else
        v.condition = (in(i2, 1, n - t2) || in(i2, n - t2 + i1, n - 2)) ? ClassifyCondition::e : ClassifyCondition::none;
    v.is_base_ring = v.condition != ClassifyCondition::none;

    IntersectionSpec spec{n, {{i1, 0}, {i2, t2}}};
    if (v.is_base_ring) {
        std::string label;
        Presentation c = construct_presentation(n, i1, t2, i2, &label);
        v.construction_case = label;
        if (transversal_bases(c) != intersection_exponents(spec))
            throw std::logic_error("classify: constructed presentation does not match the intersection");
        v.presentation = std::move(c);
    } else if (run_bruteforce_refutation && n <= 4) {
        v.bruteforce_found = bruteforce_is_base_ring(n, intersection_exponents(spec)).has_value();
    }
    return v;
}

} // namespace polybase
