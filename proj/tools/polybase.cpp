// polybase: exact invariants of base rings of transversal polymatroids.
//
// Subcommands: invariants, hvector, cone, canonical, intersect
// {classify|construct|search}, segre, ehrhart-ring, verify, openproblem.
// Output is one JSON object per line; big integers are decimal strings.
// Exit codes: 0 success, 1 verification mismatch, 2 invalid input,
// 3 inconclusive (cutoff reached).

#include <polybase/records.hpp>
#include <polybase/verify.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

using polybase::json;

struct Output {
    std::string path; // empty: stdout
    std::ofstream file;

    std::ostream& stream() {
        if (path.empty()) return std::cout;
        if (!file.is_open()) {
            file.open(path);
            if (!file) throw std::invalid_argument("cannot open output file: " + path);
        }
        return file;
    }

    void emit(const json& rec) { stream() << rec.dump() << "\n"; }
    void emit_all(const std::vector<json>& recs) {
        for (const auto& r : recs) emit(r);
    }
};

int default_workers() {
    if (const char* env = std::getenv("POLYBASE_WORKERS")) {
        int w = std::atoi(env);
        if (w >= 1) return w;
    }
    return 1;
}

// "i,t;i,t;..." -> pairs
std::vector<std::pair<int, int>> parse_pairs(const std::string& s) {
    std::vector<std::pair<int, int>> out;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t end = s.find(';', pos);
        if (end == std::string::npos) end = s.size();
        std::string item = s.substr(pos, end - pos);
        size_t comma = item.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("bad --spec entry: " + item);
        out.push_back({std::stoi(item.substr(0, comma)), std::stoi(item.substr(comma + 1))});
        pos = end + 1;
    }
    if (out.empty()) throw std::invalid_argument("--spec is empty");
    return out;
}

// "1,2;2,3;3,4" -> presentation on [n]
polybase::Presentation parse_presentation(int n, const std::string& s) {
    polybase::Presentation p;
    p.n = n;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t end = s.find(';', pos);
        if (end == std::string::npos) end = s.size();
        std::string item = s.substr(pos, end - pos);
        polybase::Subset mask = 0;
        size_t ip = 0;
        while (ip < item.size()) {
            size_t ie = item.find(',', ip);
            if (ie == std::string::npos) ie = item.size();
            int e = std::stoi(item.substr(ip, ie - ip));
            if (e < 1 || e > n) throw std::invalid_argument("element out of range in --spec");
            mask |= polybase::Subset(1) << (e - 1);
            ip = ie + 1;
        }
        p.sets.push_back(mask);
        pos = end + 1;
    }
    p.validate();
    return p;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t end = s.find(',', pos);
        if (end == std::string::npos) end = s.size();
        out.push_back(std::stoi(s.substr(pos, end - pos)));
        pos = end + 1;
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of base rings of transversal polymatroids"};
    app.require_subcommand(1);

    int n = 0, i = 0, j = 0, t = 0, cutoff = 0, samples = 0;
    int workers = default_workers();
    std::uint64_t seed = 0;
    std::string spec, grid, out_path, format = "json", suite;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "output file (default: stdout)");
        cmd->add_option("--format", format, "output format (json)")->check(CLI::IsMember({"json"}));
        cmd->add_option("--workers", workers, "worker count (default: POLYBASE_WORKERS or 1)");
    };

    CLI::App* invariants = app.add_subcommand("invariants", "type, h-vector, a-invariant of a family cell");
    invariants->add_option("--n", n)->required();
    invariants->add_option("--i", i)->required();
    invariants->add_option("--j", j)->required();
    add_common(invariants);

    CLI::App* hvector = app.add_subcommand("hvector", "Hilbert series numerator of a family cell");
    hvector->add_option("--n", n)->required();
    hvector->add_option("--i", i)->required();
    hvector->add_option("--j", j)->required();
    add_common(hvector);

    CLI::App* cone = app.add_subcommand("cone", "facet normals, extremal rays and the determinant identity");
    cone->add_option("--n", n)->required();
    cone->add_option("--i", i)->required();
    cone->add_option("--j", j)->required();
    cone->add_option("--t", t, "cyclic shift (default 0)");
    add_common(cone);

    CLI::App* canonical = app.add_subcommand("canonical", "canonical-module generators and type");
    canonical->add_option("--n", n)->required();
    canonical->add_option("--i", i)->required();
    canonical->add_option("--j", j)->required();
    canonical->add_option("--cutoff", cutoff, "also run the brute-force oracle to this degree");
    add_common(canonical);

    CLI::App* intersect = app.add_subcommand("intersect", "intersections of Gorenstein family base rings");
    intersect->require_subcommand(1);
    CLI::App* icls = intersect->add_subcommand("classify", "is the intersection a transversal base ring?");
    icls->add_option("--n", n)->required();
    icls->add_option("--spec", spec, "two pairs i,t;i,t (first t must be 0)")->required();
    add_common(icls);
    CLI::App* icon = intersect->add_subcommand("construct", "constructive presentation for a true cell");
    icon->add_option("--n", n)->required();
    icon->add_option("--spec", spec, "two pairs i,t;i,t (first t must be 0)")->required();
    add_common(icon);
    CLI::App* isea = intersect->add_subcommand("search", "exhaustive presentation search for the intersection");
    isea->add_option("--n", n)->required();
    isea->add_option("--spec", spec, "pairs i,t;i,t;... (first t must be 0)")->required();
    add_common(isea);

    CLI::App* segre = app.add_subcommand("segre", "two-letter chain products: Eulerian h-vector, Hibi count");
    segre->add_option("--n", n, "number of chains")->required();
    add_common(segre);

    CLI::App* ehrhart = app.add_subcommand("ehrhart-ring", "Ehrhart ring h-vector and Gorenstein test");
    ehrhart->add_option("--n", n, "ground set size")->required();
    ehrhart->add_option("--spec", spec, "presentation sets, e.g. 1,2;2,3;3,4")->required();
    add_common(ehrhart);

    CLI::App* verify = app.add_subcommand("verify", "formula-vs-oracle suites");
    verify->add_option("--suite", suite, "type|hilbert|facets|intersection|segre|chapter1")->required();
    verify->add_option("--grid", grid, "max n of the grid (suite default otherwise)");
    add_common(verify);

    CLI::App* openproblem = app.add_subcommand("openproblem", "type-vs-h-vector identity experiments");
    openproblem->add_option("--grid", grid, "comma list of family grid sizes, e.g. 4,5,6");
    openproblem->add_option("--n", n, "ground set size for sampled presentations (default 4)");
    openproblem->add_option("--samples", samples, "number of seeded random presentations");
    openproblem->add_option("--seed", seed, "sampling seed");
    openproblem->add_option("--cutoff", cutoff, "canonical oracle degree cutoff override");
    add_common(openproblem);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    Output out;
    out.path = out_path;
    try {
        if (invariants->parsed()) {
            out.emit(polybase::cmd_invariants(n, i, j));
        } else if (hvector->parsed()) {
            out.emit(polybase::cmd_hvector(n, i, j));
        } else if (cone->parsed()) {
            out.emit(polybase::cmd_cone(n, i, j, t));
        } else if (canonical->parsed()) {
            json rec = polybase::cmd_canonical(n, i, j, cutoff);
            out.emit(rec);
            if (cutoff > 0) {
                if (rec["oracle"]["inconclusive"].get<bool>()) return 3;
                if (!rec["oracle"]["matches_closed"].get<bool>()) return 1;
            }
        } else if (icls->parsed() || icon->parsed()) {
            auto pairs = parse_pairs(spec);
            if (pairs.size() != 2 || pairs[0].second != 0)
                throw std::invalid_argument("classify/construct take exactly two pairs, first shift 0");
            polybase::ClassificationVerdict v =
                polybase::classify(n, pairs[0].first, pairs[1].second, pairs[1].first, n <= 4);
            json rec = polybase::record_base(icls->parsed() ? "intersect.classify" : "intersect.construct");
            rec["input"] = {{"n", n}, {"i1", pairs[0].first}, {"t2", pairs[1].second}, {"i2", pairs[1].first}};
            rec["verdict"] = polybase::classification_json(v);
            out.emit(rec);
            if (icon->parsed() && !v.is_base_ring) {
                std::cerr << "construct: cell is classified false\n";
                return 2;
            }
        } else if (isea->parsed()) {
            polybase::IntersectionSpec ispec{n, parse_pairs(spec)};
            polybase::ExponentSet target = polybase::intersection_exponents(ispec);
            auto found = polybase::bruteforce_is_base_ring(n, target);
            json rec = polybase::record_base("intersect.search");
            rec["input"] = {{"n", n}, {"spec", spec}};
            rec["found"] = found.has_value();
            if (found) rec["presentation"] = polybase::presentation_json(*found);
            out.emit(rec);
        } else if (segre->parsed()) {
            out.emit(polybase::cmd_segre(n));
        } else if (ehrhart->parsed()) {
            out.emit(polybase::cmd_ehrhart_ring(parse_presentation(n, spec)));
        } else if (verify->parsed()) {
            int grid_max = grid.empty() ? 6 : std::stoi(grid);
            polybase::VerifyOutcome v = polybase::verify_suite(suite, grid_max);
            out.emit_all(v.records);
            out.emit(v.summary);
            return v.exit_code;
        } else if (openproblem->parsed()) {
            polybase::OpenProblemJob job;
            if (!grid.empty()) job.grid_n = parse_int_list(grid);
            job.samples = samples;
            job.sample_n = n > 0 ? n : 4;
            job.seed = seed;
            job.cutoff = cutoff;
            job.workers = workers;
            int code = 0;
            out.emit_all(polybase::run_openproblem(job, &code));
            return code;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
