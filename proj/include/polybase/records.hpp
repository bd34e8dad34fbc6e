#pragma once

#include "intersect.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <thread>

// JSON result records for the command-line surface and the verification
// suites. Big integers are serialized as decimal strings, subsets as sorted
// 1-based arrays, presentations as {"n": int, "sets": [[...], ...]}. Records
// are schema-versioned and deterministic; timing fields are excluded from
// any comparison.

namespace polybase {

using json = nlohmann::json;

inline constexpr const char* kRecordSchema = "polybase.record.v1";

inline std::string big_str(const BigInt& x) { return x.str(); }

inline json seq_json(const IntSequence& s) {
    json a = json::array();
    for (const auto& x : s) a.push_back(x.str());
    return a;
}

inline json vec_json(const Vec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

inline json exponent_json(const ExponentVector& u) {
    json a = json::array();
    for (int x : u) a.push_back(x);
    return a;
}

inline json exponent_set_json(const ExponentSet& s) {
    json a = json::array();
    for (const auto& u : s) a.push_back(exponent_json(u));
    return a;
}

inline json subset_json(Subset f) {
    json a = json::array();
    for (int e : subset_elements(f)) a.push_back(e);
    return a;
}

inline json presentation_json(const Presentation& p) {
    json sets = json::array();
    for (Subset s : p.sets) sets.push_back(subset_json(s));
    return json{{"n", p.n}, {"sets", sets}};
}

inline Presentation presentation_from_json(const json& j) {
    Presentation p;
    p.n = j.at("n").get<int>();
    for (const auto& s : j.at("sets")) {
        Subset m = 0;
        for (const auto& e : s) m |= Subset(1) << (e.get<int>() - 1);
        p.sets.push_back(m);
    }
    return p;
}

inline json record_base(const std::string& command) {
    return json{{"schema", kRecordSchema}, {"command", command}};
}

class Stopwatch {
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();

public:
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_)
            .count();
    }
};

// ---- per-command records ----

inline json cmd_invariants(int n, int i, int j) {
    Stopwatch sw;
    FamilyParams p{n, i, j, 0};
    RingInvariants inv = family_invariants(p);
    HilbertSeries hs = h_vector(p);
    json rec = record_base("invariants");
    rec["input"] = {{"n", n}, {"i", i}, {"j", j}};
    rec["type"] = big_str(inv.type);
    rec["gorenstein"] = inv.gorenstein;
    rec["a_invariant"] = inv.a_invariant;
    rec["r"] = inv.r;
    rec["h_vector"] = seq_json(hs.numerator);
    rec["denom_power"] = hs.denom_power;
    BigInt rhs = inv.r == 1 ? 1 + hs.numerator[static_cast<size_t>(n - 2)] - hs.numerator[1]
                            : hs.numerator[static_cast<size_t>(n - inv.r)];
    rec["type_identity"] = {{"form", inv.r == 1 ? "1+h[n-2]-h[1]" : "h[n-r]"},
                            {"lhs", big_str(inv.type)},
                            {"rhs", big_str(rhs)},
                            {"holds", inv.type == rhs}};
    rec["elapsed_ms"] = sw.ms();
    return rec;
}

inline json cmd_hvector(int n, int i, int j) {
    Stopwatch sw;
    FamilyParams p{n, i, j, 0};
    HilbertSeries hs = h_vector(p);
    json rec = record_base("hvector");
    rec["input"] = {{"n", n}, {"i", i}, {"j", j}};
    rec["h_vector"] = seq_json(hs.numerator);
    rec["denom_power"] = hs.denom_power;
    rec["r"] = family_r(p);
    rec["regularity_index"] = regularity_index(hs);
    ShapeChecks sc = shape_checks(hs.numerator);
    rec["symmetric"] = sc.symmetric;
    rec["elapsed_ms"] = sw.ms();
    return rec;
}

inline json cmd_cone(int n, int i, int j, int t) {
    Stopwatch sw;
    FamilyParams p{n, i, j, t};
    ConeRep rep = family_cone_rep(p);
    std::vector<Vec> rays = extremal_rays(rep);
    json rec = record_base("cone");
    rec["input"] = {{"n", n}, {"i", i}, {"j", j}, {"t", t}};
    json normals = json::array();
    for (const auto& h : rep.normals)
        normals.push_back(json{{"raw", vec_json(h.normal)}, {"primitive", vec_json(h.primitive())}});
    rec["normals"] = normals;
    json rj = json::array();
    for (const auto& r : rays) rj.push_back(vec_json(r));
    rec["extremal_rays"] = rj;
    rec["ray_count"] = rays.size();
    rec["ray_count_formula"] = (i + 1) * (n - i);
    if (t == 0) {
        rec["det"] = big_str(det_check(p));
        BigInt expect = BigInt(n) * boost::multiprecision::pow(BigInt(n - j), static_cast<unsigned>(i)) *
                        boost::multiprecision::pow(BigInt(j), static_cast<unsigned>(n - i - 1));
        rec["det_formula"] = big_str(expect);
    }
    rec["elapsed_ms"] = sw.ms();
    return rec;
}

inline json cmd_canonical(int n, int i, int j, int cutoff /* 0: closed form only */) {
    Stopwatch sw;
    FamilyParams p{n, i, j, 0};
    CanonicalGenerators closed = canonical_generators_closed(p);
    json rec = record_base("canonical");
    rec["input"] = {{"n", n}, {"i", i}, {"j", j}};
    rec["type"] = big_str(type_formula(p));
    rec["a_invariant"] = a_invariant(p);
    rec["gorenstein"] = gorenstein_family(p);
    rec["generators"] = exponent_set_json(closed.generators);
    rec["degrees"] = closed.degrees;
    if (cutoff > 0) {
        CanonicalGenerators bf =
            canonical_generators_bruteforce(family_exponents(p), family_cone_rep(p), cutoff);
        rec["oracle"] = {{"cutoff", cutoff},
                         {"count", bf.generators.size()},
                         {"inconclusive", bf.inconclusive},
                         {"matches_closed", bf.generators == closed.generators}};
    }
    rec["elapsed_ms"] = sw.ms();
    return rec;
}

inline json cmd_segre(int m) {
    Stopwatch sw;
    json rec = record_base("segre");
    rec["input"] = {{"m", m}};
    IntSequence row = segre_h_vector(m);
    rec["h_vector"] = seq_json(row);
    rec["denom_power"] = m + 1;
    ShapeChecks sc = shape_checks(row);
    rec["symmetric"] = sc.symmetric;
    rec["unimodal"] = sc.unimodal;
    rec["log_concave"] = sc.log_concave;
    rec["hibi_count"] = hibi_relations(m).size();
    rec["hibi_count_formula"] = big_str(hibi_count_formula(m));
    rec["elapsed_ms"] = sw.ms();
    return rec;
}

inline json cmd_ehrhart_ring(const Presentation& pres) {
    Stopwatch sw;
    ExponentSet points = detail::points_within(transversal_rank_function(pres));
    HilbertSeries hs = ehrhart_ring_hvector(points);
    json rec = record_base("ehrhart-ring");
    rec["input"] = presentation_json(pres);
    rec["h_vector"] = seq_json(hs.numerator);
    rec["denom_power"] = hs.denom_power;
    GorensteinResult g = ehrhart_gorenstein_check(points);
    rec["gorenstein"] = g.gorenstein;
    if (g.gorenstein) rec["delta"] = g.delta;
    rec["elapsed_ms"] = sw.ms();
    return rec;
}

inline json classification_json(const ClassificationVerdict& v) {
    json out;
    out["is_base_ring"] = v.is_base_ring;
    out["condition"] = to_string(v.condition);
    if (!v.construction_case.empty()) out["case"] = v.construction_case;
    if (v.presentation) out["presentation"] = presentation_json(*v.presentation);
    if (v.bruteforce_found) out["bruteforce_found"] = *v.bruteforce_found;
    return out;
}

inline json open_problem_json(const OpenProblemReport& rep) {
    json out;
    out["n"] = rep.n;
    out["dim"] = rep.dim;
    out["verdict"] = to_string(rep.verdict);
    out["cutoff"] = rep.cutoff;
    if (rep.verdict == OPVerdict::holds || rep.verdict == OPVerdict::fails) {
        out["r"] = rep.r;
        out["type"] = big_str(rep.type);
        out["h_vector"] = seq_json(rep.h);
        out["lhs"] = big_str(rep.lhs);
        out["rhs"] = big_str(rep.rhs);
        out["identity"] = rep.r == 1 ? "type = 1 + h[n-2] - h[1]" : "type = h[n-r]";
    }
    if (!rep.note.empty()) out["note"] = rep.note;
    return out;
}

// ---- deterministic seeded sampling ----

/// Uniform nonempty subsets per slot, derived from (seed, index) only, so
/// results are independent of worker count and platform.
inline Presentation sample_presentation(int n, std::uint64_t seed, std::uint64_t index) {
    Presentation p;
    p.n = n;
    Subset full = (Subset(1) << n) - 1;
    std::uint64_t state = splitmix64(seed ^ splitmix64(index * 0x100000001b3ULL + 11));
    for (int k = 0; k < n; ++k) {
        state = splitmix64(state);
        p.sets.push_back(1 + state % full); // 1..full, never empty
    }
    std::sort(p.sets.begin(), p.sets.end()); // canonical multiset form
    return p;
}

/// Runs fn(index) for indices [0, count) on `workers` threads; results land
/// in input order regardless of completion order.
template <class F>
inline std::vector<json> run_indexed(size_t count, int workers, F&& fn) {
    std::vector<json> out(count);
    if (workers <= 1) {
        for (size_t k = 0; k < count; ++k) out[k] = fn(k);
        return out;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&]() {
            while (true) {
                size_t k = next.fetch_add(1);
                if (k >= count) return;
                out[k] = fn(k);
            }
        });
    for (auto& t : pool) t.join();
    return out;
}

struct OpenProblemJob {
    std::vector<int> grid_n;      // family grids: all (i, j) per n
    int samples = 0;              // random presentations at sample_n
    int sample_n = 4;
    std::uint64_t seed = 0;
    int cutoff = 0;               // 0: defaults
    int workers = 1;
};

/// Family cells followed by seeded random presentations; exit code 3 when
/// any instance is inconclusive.
inline std::vector<json> run_openproblem(const OpenProblemJob& job, int* exit_code) {
    std::vector<FamilyParams> cells;
    for (int n : job.grid_n)
        for (int i = 1; i <= n - 2; ++i)
            for (int j = 1; j <= n - 1; ++j) cells.push_back(FamilyParams{n, i, j, 0});
    std::vector<json> records = run_indexed(cells.size(), job.workers, [&](size_t k) {
        Stopwatch sw;
        OpenProblemReport rep = open_problem_report(cells[k], job.cutoff);
        json rec = record_base("openproblem");
        rec["input"] = {{"family", {{"n", cells[k].n}, {"i", cells[k].i}, {"j", cells[k].j}}}};
        rec["report"] = open_problem_json(rep);
        rec["elapsed_ms"] = sw.ms();
        return rec;
    });
    std::vector<json> sampled = run_indexed(static_cast<size_t>(job.samples), job.workers, [&](size_t k) {
        Stopwatch sw;
        Presentation pres = sample_presentation(job.sample_n, job.seed, k);
        OpenProblemReport rep = open_problem_report(pres, job.cutoff);
        json rec = record_base("openproblem");
        rec["input"] = {{"sample_index", k}, {"seed", job.seed}, {"presentation", presentation_json(pres)}};
        rec["report"] = open_problem_json(rep);
        rec["elapsed_ms"] = sw.ms();
        return rec;
    });
    records.insert(records.end(), sampled.begin(), sampled.end());
    bool any_inconclusive = false;
    for (const auto& r : records)
        if (r["report"]["verdict"] == "inconclusive") any_inconclusive = true;
    if (exit_code) *exit_code = any_inconclusive ? 3 : 0;
    return records;
}

} // namespace polybase
