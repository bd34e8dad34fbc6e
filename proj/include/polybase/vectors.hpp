#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

// Exponent vectors and sets. An ExponentSet is kept lexicographically sorted
// and deduplicated; normalize_set restores the invariant after bulk inserts.

namespace polybase {

using ExponentVector = std::vector<int>;
using ExponentSet = std::vector<ExponentVector>;

inline long long modulus(const ExponentVector& u) {
    long long s = 0;
    for (int x : u) s += x;
    return s;
}

inline void normalize_set(ExponentSet& s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
}

inline bool set_contains(const ExponentSet& s, const ExponentVector& u) {
    return std::binary_search(s.begin(), s.end(), u);
}

inline bool subvector_leq(const ExponentVector& u, const ExponentVector& v) {
    for (size_t k = 0; k < u.size(); ++k)
        if (u[k] > v[k]) return false;
    return true;
}

inline ExponentVector join_vec(const ExponentVector& u, const ExponentVector& v) {
    ExponentVector w(u.size());
    for (size_t k = 0; k < u.size(); ++k) w[k] = std::max(u[k], v[k]);
    return w;
}

inline ExponentVector meet_vec(const ExponentVector& u, const ExponentVector& v) {
    ExponentVector w(u.size());
    for (size_t k = 0; k < u.size(); ++k) w[k] = std::min(u[k], v[k]);
    return w;
}

/// All integral subvectors of the given vectors.
inline ExponentSet subvector_closure(const ExponentSet& s) {
    std::set<ExponentVector> seen;
    std::vector<ExponentVector> stack(s.begin(), s.end());
    while (!stack.empty()) {
        ExponentVector u = stack.back();
        stack.pop_back();
        if (!seen.insert(u).second) continue;
        for (size_t k = 0; k < u.size(); ++k)
            if (u[k] > 0) {
                ExponentVector v = u;
                --v[k];
                if (!seen.count(v)) stack.push_back(v);
            }
    }
    return ExponentSet(seen.begin(), seen.end());
}

/// Enumerates weak compositions of `total` into `parts` parts in
/// lexicographic order, invoking fn on each.
template <class F>
inline void for_each_composition(int total, int parts, F&& fn) {
    ExponentVector cur(static_cast<size_t>(parts), 0);
    std::function<void(int, int)> rec = [&](int pos, int remaining) {
        if (pos == parts - 1) {
            cur[static_cast<size_t>(pos)] = remaining;
            fn(static_cast<const ExponentVector&>(cur));
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            cur[static_cast<size_t>(pos)] = v;
            rec(pos + 1, remaining - v);
        }
    };
    if (parts <= 0) return;
    rec(0, total);
}

/// Deterministic 64-bit mixer for seeded sampling; platform-independent.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// ---- subsets of [n] as bitmasks; element k of [n] is bit k-1 ----

using Subset = std::uint64_t;

inline int subset_size(Subset f) { return __builtin_popcountll(f); }

inline std::vector<int> subset_elements(Subset f) {
    std::vector<int> out;
    for (int k = 0; f; ++k, f >>= 1)
        if (f & 1) out.push_back(k + 1);
    return out;
}

inline Subset subset_of(std::initializer_list<int> elems) {
    Subset f = 0;
    for (int e : elems) f |= Subset(1) << (e - 1);
    return f;
}

inline long long sum_on(const ExponentVector& u, Subset f) {
    long long s = 0;
    for (int k = 0; f; ++k, f >>= 1)
        if (f & 1) s += u[static_cast<size_t>(k)];
    return s;
}

} // namespace polybase
