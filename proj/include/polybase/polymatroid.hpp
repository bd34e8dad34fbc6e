#pragma once

#include "linalg.hpp"
#include "vectors.hpp"

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

// Discrete polymatroids, matroids, transversal presentations and their rank
// functions. Ground sets are [n] = {1..n} with subsets stored as bitmasks,
// n <= 64; the exhaustive operations document much smaller intended scales.

namespace polybase {

struct Presentation {
    int n = 0;                // ground set [n]
    std::vector<Subset> sets; // ordered, nonempty, duplicates allowed

    void validate() const {
        if (n < 1 || n > 64) throw std::invalid_argument("Presentation: need 1 <= n <= 64");
        if (sets.empty()) throw std::invalid_argument("Presentation: need at least one set");
        Subset full = (n == 64) ? ~Subset(0) : (Subset(1) << n) - 1;
        for (Subset a : sets) {
            if (a == 0) throw std::invalid_argument("Presentation: sets must be nonempty");
            if (a & ~full) throw std::invalid_argument("Presentation: set leaves the ground set");
        }
    }
};

/// Total integer-valued function on all 2^n subsets, indexed by bitmask.
struct RankFunction {
    int n = 0;
    std::vector<int> value; // size 1 << n, value[0] == 0

    int operator()(Subset f) const { return value[static_cast<size_t>(f)]; }
};

struct rank_function_error : std::invalid_argument {
    Subset f1, f2;
    rank_function_error(const std::string& what, Subset a, Subset b)
        : std::invalid_argument(what), f1(a), f2(b) {}
};

/// Matroid axioms on a family of subsets: (M1) downward closure and
/// (M2) augmentation.
inline bool is_matroid(const std::vector<Subset>& family) {
    if (family.empty()) throw std::invalid_argument("is_matroid: empty family");
    std::set<Subset> s(family.begin(), family.end());
    for (Subset f : s)
        for (Subset rest = f; rest;) {
            Subset bit = rest & (~rest + 1);
            rest ^= bit;
            if (!s.count(f ^ bit)) return false;
        }
    for (Subset f1 : s)
        for (Subset f2 : s) {
            if (subset_size(f1) >= subset_size(f2)) continue;
            bool ok = false;
            for (Subset rest = f2 & ~f1; rest && !ok;) {
                Subset bit = rest & (~rest + 1);
                rest ^= bit;
                if (s.count(f1 | bit)) ok = true;
            }
            if (!ok) return false;
        }
    return true;
}

/// Exchange property on a set of equal-modulus vectors: for u, v and i with
/// u_i > v_i there is j with u_j < v_j and u - e_i + e_j in B. The symmetric
/// variant additionally demands v - e_j + e_i in B.
inline bool bases_exchange_check(const ExponentSet& b, bool symmetric) {
    if (b.empty()) return true;
    long long mod = modulus(b.front());
    for (const auto& u : b)
        if (modulus(u) != mod)
            throw std::invalid_argument("bases_exchange_check: unequal moduli");
    std::set<ExponentVector> s(b.begin(), b.end());
    size_t n = b.front().size();
    for (const auto& u : b)
        for (const auto& v : b)
            for (size_t i = 0; i < n; ++i) {
                if (u[i] <= v[i]) continue;
                bool ok = false;
                for (size_t j = 0; j < n && !ok; ++j) {
                    if (u[j] >= v[j]) continue;
                    ExponentVector w = u;
                    --w[i];
                    ++w[j];
                    if (!s.count(w)) continue;
                    if (symmetric) {
                        ExponentVector w2 = v;
                        --w2[j];
                        ++w2[i];
                        if (!s.count(w2)) continue;
                    }
                    ok = true;
                }
                if (!ok) return false;
            }
    return true;
}

/// Discrete polymatroid test: subvector closure plus the exchange property
/// on the maximal elements.
inline bool is_discrete_polymatroid(const ExponentSet& p) {
    if (p.empty()) return false;
    std::set<ExponentVector> s(p.begin(), p.end());
    size_t n = p.front().size();
    for (const auto& u : p)
        for (size_t k = 0; k < n; ++k)
            if (u[k] > 0) {
                ExponentVector v = u;
                --v[k];
                if (!s.count(v)) return false;
            }
    ExponentSet maximal;
    for (const auto& u : p) {
        bool max = true;
        for (size_t k = 0; k < n && max; ++k) {
            ExponentVector v = u;
            ++v[k];
            if (s.count(v)) max = false;
        }
        if (max) maximal.push_back(u);
    }
    long long mod = modulus(maximal.front());
    for (const auto& u : maximal)
        if (modulus(u) != mod) return false;
    return bases_exchange_check(maximal, false);
}

/// Augmentation form of the discrete polymatroid condition, equivalent to
/// the maximal-element test; used as an independent oracle.
inline bool is_discrete_polymatroid_by_augmentation(const ExponentSet& p) {
    if (p.empty()) return false;
    std::set<ExponentVector> s(p.begin(), p.end());
    size_t n = p.front().size();
    for (const auto& u : p)
        for (size_t k = 0; k < n; ++k)
            if (u[k] > 0) {
                ExponentVector v = u;
                --v[k];
                if (!s.count(v)) return false;
            }
    for (const auto& u : p)
        for (const auto& v : p) {
            if (modulus(v) <= modulus(u)) continue;
            bool ok = false;
            for (size_t k = 0; k < n && !ok; ++k) {
                if (u[k] >= v[k]) continue; // need u + e_k <= u v v
                ExponentVector w = u;
                ++w[k];
                if (s.count(w)) ok = true;
            }
            if (!ok) return false;
        }
    return true;
}

/// Base set of the transversal polymatroid: all sums e_{i_1}+...+e_{i_m}
/// with i_k in A_k, deduplicated. Computed by partial-sum propagation.
inline ExponentSet transversal_bases(const Presentation& pres) {
    pres.validate();
    ExponentSet cur{ExponentVector(static_cast<size_t>(pres.n), 0)};
    for (Subset a : pres.sets) {
        std::set<ExponentVector> next;
        std::vector<int> elems = subset_elements(a);
        for (const auto& s : cur)
            for (int e : elems) {
                ExponentVector t = s;
                ++t[static_cast<size_t>(e - 1)];
                next.insert(std::move(t));
            }
        cur.assign(next.begin(), next.end());
    }
    return cur;
}

inline int transversal_rank(const Presentation& pres, Subset x) {
    int c = 0;
    for (Subset a : pres.sets)
        if (a & x) ++c;
    return c;
}

inline RankFunction transversal_rank_function(const Presentation& pres) {
    pres.validate();
    RankFunction rho;
    rho.n = pres.n;
    rho.value.assign(size_t(1) << pres.n, 0);
    for (Subset f = 1; f < (Subset(1) << pres.n); ++f)
        rho.value[static_cast<size_t>(f)] = transversal_rank(pres, f);
    return rho;
}

inline void check_rank_function(const RankFunction& rho) {
    size_t full = size_t(1) << rho.n;
    if (rho.value.size() != full || rho.value[0] != 0)
        throw std::invalid_argument("rank function must be total with rho(empty) = 0");
    for (Subset f = 0; f < full; ++f)
        for (int x = 0; x < rho.n; ++x) {
            if (f & (Subset(1) << x)) continue;
            Subset fx = f | (Subset(1) << x);
            if (rho.value[static_cast<size_t>(fx)] < rho.value[static_cast<size_t>(f)])
                throw rank_function_error("rank function is not nondecreasing", f, fx);
            for (int y = x + 1; y < rho.n; ++y) {
                if (f & (Subset(1) << y)) continue;
                Subset fy = f | (Subset(1) << y);
                Subset fxy = fx | (Subset(1) << y);
                if (rho.value[static_cast<size_t>(fx)] + rho.value[static_cast<size_t>(fy)] <
                    rho.value[static_cast<size_t>(fxy)] + rho.value[static_cast<size_t>(f)])
                    throw rank_function_error("rank function is not submodular", fx, fy);
            }
        }
}

namespace detail {

/// Lattice points u >= 0 with u(F) <= rho(F) for all F; no precondition
/// checks. Coordinates are bounded by the singleton ranks and prefixes are
/// pruned against every constraint supported on the filled coordinates.
inline ExponentSet points_within(const RankFunction& rho) {
    int n = rho.n;
    std::vector<std::vector<Subset>> by_top(static_cast<size_t>(n));
    for (Subset f = 1; f < (Subset(1) << n); ++f) {
        int top = 63 - __builtin_clzll(f);
        by_top[static_cast<size_t>(top)].push_back(f);
    }
    ExponentSet out;
    ExponentVector u(static_cast<size_t>(n), 0);
    std::function<void(int)> rec = [&](int k) {
        if (k == n) {
            out.push_back(u);
            return;
        }
        int cap = rho.value[size_t(1) << k];
        for (int v = 0; v <= cap; ++v) {
            u[static_cast<size_t>(k)] = v;
            bool ok = true;
            for (Subset f : by_top[static_cast<size_t>(k)])
                if (sum_on(u, f) > rho.value[static_cast<size_t>(f)]) {
                    ok = false;
                    break;
                }
            if (ok) rec(k + 1);
        }
        u[static_cast<size_t>(k)] = 0;
    };
    rec(0);
    normalize_set(out);
    return out;
}

} // namespace detail

/// Integer points of the polymatroid of a nondecreasing submodular rank
/// function. Rejects rank functions failing either property with a witness.
inline ExponentSet polymatroid_points(const RankFunction& rho) {
    check_rank_function(rho);
    return detail::points_within(rho);
}

/// Ground-set rank function of a finite point set: rho(F) = max u(F).
inline RankFunction rank_function_of(const ExponentSet& p) {
    if (p.empty()) throw std::invalid_argument("rank_function_of: empty set");
    int n = static_cast<int>(p.front().size());
    RankFunction rho;
    rho.n = n;
    rho.value.assign(size_t(1) << n, 0);
    for (Subset f = 1; f < (Subset(1) << n); ++f) {
        long long best = 0;
        for (const auto& u : p) best = std::max(best, sum_on(u, f));
        rho.value[static_cast<size_t>(f)] = static_cast<int>(best);
    }
    return rho;
}

/// Nonempty F whose every proper superset has strictly larger rank.
inline std::vector<Subset> rho_closed_sets(const RankFunction& rho) {
    std::vector<Subset> out;
    Subset full = (Subset(1) << rho.n) - 1;
    for (Subset f = 1; f <= full; ++f) {
        bool closed = true;
        Subset comp = full & ~f;
        // enumerate all G strictly containing f
        for (Subset add = comp; add && closed; add = (add - 1) & comp)
            if (rho.value[static_cast<size_t>(f | add)] <= rho.value[static_cast<size_t>(f)])
                closed = false;
        if (closed) out.push_back(f);
    }
    return out;
}

/// Nonempty F admitting no partition F = F1 ∪ F2 into disjoint nonempty
/// parts with rho(F) = rho(F1) + rho(F2).
inline std::vector<Subset> rho_inseparable_sets(const RankFunction& rho) {
    std::vector<Subset> out;
    Subset full = (Subset(1) << rho.n) - 1;
    for (Subset f = 1; f <= full; ++f) {
        bool separable = false;
        for (Subset f1 = (f - 1) & f; f1 && !separable; f1 = (f1 - 1) & f) {
            Subset f2 = f & ~f1;
            if (f1 > f2) continue; // each split once
            if (rho.value[static_cast<size_t>(f1)] + rho.value[static_cast<size_t>(f2)] ==
                rho.value[static_cast<size_t>(f)])
                separable = true;
        }
        if (!separable) out.push_back(f);
    }
    return out;
}

struct GorensteinResult {
    bool gorenstein = false;
    int delta = 0; // witness when gorenstein
};

/// Gorenstein criterion for the Ehrhart ring of conv(P): an integer
/// delta >= 1 with rho(F) = (|F|+1)/delta on every rho-closed and
/// rho-inseparable subset. Requires e_1..e_n in P.
inline GorensteinResult ehrhart_gorenstein_check(const ExponentSet& p) {
    if (p.empty()) throw std::invalid_argument("ehrhart_gorenstein_check: empty set");
    int n = static_cast<int>(p.front().size());
    for (int k = 0; k < n; ++k) {
        ExponentVector e(static_cast<size_t>(n), 0);
        e[static_cast<size_t>(k)] = 1;
        if (!set_contains(p, e))
            throw std::invalid_argument("ehrhart_gorenstein_check: some e_i is not in P");
    }
    RankFunction rho = rank_function_of(p);
    std::vector<Subset> closed = rho_closed_sets(rho);
    std::set<Subset> insep_set;
    for (Subset f : rho_inseparable_sets(rho)) insep_set.insert(f);
    long long delta = 0;
    for (Subset f : closed) {
        if (!insep_set.count(f)) continue;
        long long r = rho.value[static_cast<size_t>(f)];
        long long m = subset_size(f) + 1;
        if (r <= 0 || m % r != 0) return {false, 0};
        long long d = m / r;
        if (delta == 0)
            delta = d;
        else if (delta != d)
            return {false, 0};
    }
    if (delta == 0) delta = 1; // vacuous test set
    return {true, static_cast<int>(delta)};
}

/// conv(P) ∩ Z_+^n == P, with hull membership decided through the rank
/// inequalities rather than any geometric hull computation.
inline bool conv_lattice_check(const ExponentSet& p) {
    if (p.empty()) throw std::invalid_argument("conv_lattice_check: empty set");
    ExponentSet sorted = p;
    normalize_set(sorted);
    RankFunction rho = rank_function_of(sorted);
    return detail::points_within(rho) == sorted;
}

/// Cycle detection in the bipartite incidence graph of a presentation
/// (set indices on one side, ground elements on the other).
inline bool has_presentation_cycles(const Presentation& pres) {
    pres.validate();
    int m = static_cast<int>(pres.sets.size());
    std::vector<int> parent(static_cast<size_t>(m + pres.n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    for (int k = 0; k < m; ++k)
        for (int e : subset_elements(pres.sets[static_cast<size_t>(k)])) {
            int a = find(k), b = find(m + e - 1);
            if (a == b) return true;
            parent[static_cast<size_t>(a)] = b;
        }
    return false;
}

/// Exhaustive search for a transversal presentation of a base set B with
/// max_m = modulus sets (the rank of a transversal polymatroid equals the
/// number of sets). Canonical sorted multisets; per-element counters prune:
/// in any presentation of B the number of sets containing k equals the
/// maximum of u_k over B.
inline std::optional<Presentation> find_transversal_presentation(const ExponentSet& b, int max_m) {
    if (b.empty()) throw std::invalid_argument("find_transversal_presentation: empty base set");
    int n = static_cast<int>(b.front().size());
    long long mod = modulus(b.front());
    for (const auto& u : b)
        if (modulus(u) != mod)
            throw std::invalid_argument("find_transversal_presentation: unequal moduli");
    if (mod != max_m || max_m < 1)
        throw std::invalid_argument("find_transversal_presentation: max_m must equal the modulus (>= 1)");
    if (n > 5) throw std::domain_error("find_transversal_presentation: search space exceeded (n > 5)");

    std::vector<int> req(static_cast<size_t>(n), 0);
    for (const auto& u : b)
        for (int k = 0; k < n; ++k) req[static_cast<size_t>(k)] = std::max(req[static_cast<size_t>(k)], u[static_cast<size_t>(k)]);
    Subset support = 0;
    for (int k = 0; k < n; ++k)
        if (req[static_cast<size_t>(k)] > 0) support |= Subset(1) << k;

    std::vector<Subset> universe;
    for (Subset a = 1; a < (Subset(1) << n); ++a)
        if (a && (a & ~support) == 0) universe.push_back(a);

    ExponentSet target = b;
    normalize_set(target);
    int m = max_m;
    std::vector<Subset> chosen(static_cast<size_t>(m));
    std::vector<int> counts(static_cast<size_t>(n), 0);
    std::optional<Presentation> found;

    std::function<bool(int, size_t)> rec = [&](int t, size_t from) -> bool {
        if (t == m) {
            for (int k = 0; k < n; ++k)
                if (counts[static_cast<size_t>(k)] != req[static_cast<size_t>(k)]) return false;
            Presentation cand{n, chosen};
            if (transversal_bases(cand) == target) {
                found = cand;
                return true;
            }
            return false;
        }
        for (size_t idx = from; idx < universe.size(); ++idx) {
            Subset a = universe[idx];
            bool ok = true;
            for (int e : subset_elements(a))
                if (counts[static_cast<size_t>(e - 1)] + 1 > req[static_cast<size_t>(e - 1)]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            for (int k = 0; k < n && ok; ++k) {
                int c = counts[static_cast<size_t>(k)] + ((a >> k) & 1 ? 1 : 0);
                if (c + (m - t - 1) < req[static_cast<size_t>(k)]) ok = false;
            }
            if (!ok) continue;
            chosen[static_cast<size_t>(t)] = a;
            for (int e : subset_elements(a)) ++counts[static_cast<size_t>(e - 1)];
            if (rec(t + 1, idx)) return true;
            for (int e : subset_elements(a)) --counts[static_cast<size_t>(e - 1)];
        }
        return false;
    };
    rec(0, 0);
    return found;
}

} // namespace polybase
