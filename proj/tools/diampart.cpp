// Command-line front end: solve, gen, selftest, bench.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "diampart/diampart.hpp"

namespace {

using namespace diampart;
using nlohmann::json;

constexpr int kExitInfeasible = 1;
constexpr int kExitParse = 2;

struct SolveArgs {
    std::string problem = "diameter";
    std::optional<std::size_t> c;
    bool all = false;
    std::string input;
    bool euclidean = false;
    bool count_queries = false;
    std::string out;
    bool witness = false;
};

struct GenArgs {
    std::string kind;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::string bits;
    std::string problem = "diameter";
    std::size_t dim = 2;
    bool duplicates = false;
    std::string out;
};

Problem parse_problem(const std::string& s) { return s == "mdcc" ? Problem::Mdcc : Problem::Diameter; }

/// Writes to `path`, or stdout when empty.
void emit(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write '" + path + "'");
    f << text;
}

json ext_json(ExtReal v) { return v.is_finite() ? json(v.value()) : json(to_string(v)); }

std::string coloring_string(std::span<const std::uint8_t> color) {
    std::string s;
    s.reserve(color.size());
    for (auto b : color) s.push_back(char('0' + b));
    return s;
}

int run_solve(const SolveArgs& a) {
    const Problem problem = parse_problem(a.problem);
    const Instance inst = load_instance(a.input);
    if (a.euclidean && !inst.is_points())
        throw UnsupportedSource("--euclidean needs a points file");
    if (a.euclidean && a.count_queries)
        throw UnsupportedSource("--count-queries applies to the generic pipeline only");
    if (a.c && *a.c > inst.size()) throw ContractViolation("cardinality exceeds n");

    std::optional<std::uint64_t> queries;
    std::ostringstream out;
    if (a.all) {
        std::optional<ProfileSolution> profile;
        if (a.count_queries) {
            CountedRun run = run_with_counting(inst, problem, std::nullopt);
            queries = run.queries;
            profile.emplace(std::move(*run.profile));
        } else if (a.euclidean) {
            profile.emplace(euclidean_fast_path_all(*inst.points(), problem));
        } else {
            profile.emplace(solve_all(inst, problem));
        }
        if (queries) out << "# queries\t" << *queries << '\n';
        for (std::size_t c = 0; c <= inst.size(); ++c) {
            out << c << '\t' << to_string((*profile)[c]);
            if (a.witness) out << '\t' << coloring_string(profile->witness(c).coloring);
            out << '\n';
        }
    } else {
        PartitionResult r;
        if (a.count_queries) {
            CountedRun run = run_with_counting(inst, problem, *a.c);
            queries = run.queries;
            r = std::move(*run.single);
        } else if (a.euclidean) {
            r = euclidean_fast_path(*inst.points(), *a.c, problem);
        } else {
            r = solve(inst, problem, *a.c);
        }
        json j{{"problem", to_string(problem)},
               {"n", inst.size()},
               {"c", r.cardinality},
               {"objective", ext_json(r.objective)},
               {"coloring", r.coloring}};
        if (queries) j["queries"] = *queries;
        out << j.dump() << '\n';
    }
    emit(a.out, out.str());
    return 0;
}

std::vector<bool> parse_bits(const std::string& s) {
    std::vector<bool> bits;
    for (char ch : s) {
        if (ch != '0' && ch != '1') throw ContractViolation("--bits must be a string of 0 and 1");
        bits.push_back(ch == '1');
    }
    return bits;
}

int run_gen(const GenArgs& a) {
    Instance inst;
    std::mt19937_64 rng(a.seed);
    if (a.kind == "adversary") {
        inst = a.bits.empty() ? gen_adversary(a.n, a.seed, parse_problem(a.problem))
                              : make_adversary(a.n, parse_bits(a.bits), parse_problem(a.problem));
    } else if (a.kind == "random") {
        inst = random_matrix_instance(a.n, rng, a.duplicates);
    } else {
        inst = random_points_instance(a.n, a.dim, rng, a.duplicates);
    }
    std::ostringstream out;
    write_instance(out, inst);
    emit(a.out, out.str());
    return 0;
}

/// Cross-checks the solvers against the exhaustive oracles. Returns the
/// number of mismatches.
std::size_t selftest(std::size_t max_n, std::size_t trials, std::ostream& log) {
    std::mt19937_64 rng(20240601);
    std::size_t failures = 0;
    auto check = [&](bool ok, const std::string& what) {
        if (!ok) {
            ++failures;
            log << "mismatch: " << what << '\n';
        }
    };
    for (std::size_t n = 2; n <= max_n; ++n) {
        std::size_t checked = 0;
        for (std::size_t t = 0; t < trials; ++t) {
            const bool dup = t % 10 == 0;
            const Instance inst = random_matrix_instance(n, rng, dup);
            const MatrixOracle o(inst.matrix()->w, n);
            const auto brute_d = reference::brute_diameter_profile(o);
            const auto brute_m = reference::brute_mdcc_profile(o);
            const auto all_d = solve_diameter_all(o);
            const auto all_m = solve_mdcc_all(o);
            const WeightedTree tree = random_tree(n, rng, dup);
            const auto dp = solve_all_cardinalities(tree);
            const auto brute_tree = reference::brute_bottleneck_profile(tree);
            for (std::size_t c = 0; c <= n; ++c) {
                const std::string at = "n=" + std::to_string(n) + " trial=" + std::to_string(t) + " c=" +
                                       std::to_string(c);
                check(all_d[c] == brute_d[c], "diameter " + at);
                check(all_m[c] == brute_m[c], "mdcc " + at);
                check(dp.profile[c] == brute_tree[c], "bottleneck " + at);
                const auto w = all_d.witness(c);
                check(evaluate_partition(o, w.coloring, w.kind) == w.objective, "witness " + at);
                check(solve_single(tree, c) == dp.profile[c], "single " + at);
            }
            ++checked;
        }
        log << "n=" << n << "\t" << checked << " trials\n";
    }
    return failures;
}

std::vector<std::size_t> parse_sizes(const std::string& s) {
    std::vector<std::size_t> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(tok, &pos);
        if (pos != tok.size()) throw ParseError(0, "bad size '" + tok + "'");
        out.push_back(std::size_t(v));
    }
    return out;
}

int run_bench(const std::string& sizes, int repeats) {
    std::cout << "n\tmedian_seconds\tpair_visits\n";
    std::mt19937_64 rng(7);
    for (std::size_t n : parse_sizes(sizes)) {
        const Instance inst = random_matrix_instance(n, rng);
        std::vector<double> secs;
        std::uint64_t visits = 0;
        for (int r = 0; r < repeats; ++r) {
            const auto t0 = std::chrono::steady_clock::now();
            const auto profile = solve_all(inst, Problem::Diameter);
            const auto t1 = std::chrono::steady_clock::now();
            secs.push_back(std::chrono::duration<double>(t1 - t0).count());
            visits = profile.bottleneck().pair_visits;
        }
        std::nth_element(secs.begin(), secs.begin() + secs.size() / 2, secs.end());
        std::cout << n << '\t' << secs[secs.size() / 2] << '\t' << visits << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact cardinality-constrained diameter partitioning and max-min dispersion"};
    app.require_subcommand(1);

    SolveArgs sa;
    auto* solve_cmd = app.add_subcommand("solve", "Solve one cardinality or the whole profile");
    solve_cmd->add_option("--problem", sa.problem)->check(CLI::IsMember({"diameter", "mdcc"}));
    auto* c_opt = solve_cmd->add_option("-c", sa.c, "Size of the zero class");
    auto* all_opt = solve_cmd->add_flag("--all", sa.all, "Every cardinality, as TSV");
    c_opt->excludes(all_opt);
    solve_cmd->add_option("-i,--input", sa.input)->required();
    solve_cmd->add_flag("--euclidean", sa.euclidean, "Planar fast path for points files");
    solve_cmd->add_flag("--count-queries", sa.count_queries);
    solve_cmd->add_option("--out", sa.out);
    solve_cmd->add_flag("--witness", sa.witness, "Add a coloring column to the profile");

    GenArgs ga;
    auto* gen_cmd = app.add_subcommand("gen", "Generate an instance file");
    gen_cmd->add_option("kind", ga.kind)->required()->check(CLI::IsMember({"adversary", "random", "points"}));
    gen_cmd->add_option("--n", ga.n)->required();
    gen_cmd->add_option("--seed", ga.seed);
    gen_cmd->add_option("--bits", ga.bits, "Explicit within-A bits for adversary");
    gen_cmd->add_option("--problem", ga.problem)->check(CLI::IsMember({"diameter", "mdcc"}));
    gen_cmd->add_option("--d", ga.dim)->check(CLI::PositiveNumber);
    gen_cmd->add_flag("--duplicates", ga.duplicates);
    gen_cmd->add_option("--out", ga.out);

    std::size_t max_n = 12, trials = 200;
    auto* self_cmd = app.add_subcommand("selftest", "Cross-check against exhaustive search");
    self_cmd->add_option("--max-n", max_n)->check(CLI::Range(2, 14));
    self_cmd->add_option("--trials", trials);

    std::string sizes = "500,1000,2000";
    int repeats = 5;
    auto* bench_cmd = app.add_subcommand("bench", "Time the all-cardinality solver");
    bench_cmd->add_option("--sizes", sizes);
    bench_cmd->add_option("--repeats", repeats)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (*solve_cmd) {
            if (!sa.c && !sa.all) throw CLI::RequiredError("-c or --all");
            return run_solve(sa);
        }
        if (*gen_cmd) return run_gen(ga);
        if (*self_cmd) {
            const std::size_t bad = selftest(max_n, trials, std::cout);
            std::cout << (bad == 0 ? "selftest passed\n" : "selftest FAILED\n");
            return bad == 0 ? 0 : kExitInfeasible;
        }
        return run_bench(sizes, repeats);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << '\n';
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInfeasible;
    }
}
