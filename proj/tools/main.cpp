// hyperstab: generation, exact solving, compression, link census, and
// claim-level verification for k-partite k-uniform hypergraph matching.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperstab/constructions.hpp"
#include "hyperstab/core.hpp"
#include "hyperstab/errors.hpp"
#include "hyperstab/harness.hpp"
#include "hyperstab/json_io.hpp"
#include "hyperstab/links.hpp"
#include "hyperstab/shifting.hpp"
#include "hyperstab/solvers.hpp"

namespace {

long env_budget() {
    const char* v = std::getenv("HYPERSTAB_BUDGET");
    if (!v || !*v) return 0;
    char* end = nullptr;
    long b = std::strtol(v, &end, 10);
    if (end == v || b < 0) return 0;
    return b;
}

void emit(const nlohmann::ordered_json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump() << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw hyperstab::ParseError("cannot write " + out_path);
        out << j.dump() << "\n";
    }
}

struct VerifyArgs {
    std::string claim;
    int k = 3, n = 0, m = 0, delta = -1;
    int n1 = 5, n2 = 5, n3 = 5;
    long e = -1, trials = -1, budget = -1;
    std::uint64_t seed = 0;
    int jobs = 1;
    bool exhaustive = false, small = false;
    std::string archive_dir;
};

int run_verify(const VerifyArgs& a) {
    using namespace hyperstab;
    std::vector<VerificationReport> reports;
    auto pick = [](long v, long dflt) { return v >= 0 ? v : dflt; };
    if (a.claim == "all") {
        if (!a.small) throw BadParamsError("verify all currently supports --small only");
        reports = verify_all_small(a.seed, a.jobs);
    } else if (a.claim == "thm-1.1") {
        reports.push_back(verify_decomposition(a.k, a.n > 0 ? a.n : 3));
    } else if (a.claim == "thm-1.2") {
        int n = a.n > 0 ? a.n : 3, m = a.m > 0 ? a.m : 2;
        long trials = a.exhaustive ? 0 : pick(a.trials, 400);
        reports.push_back(verify_matching_threshold(n, m, trials, a.seed, a.jobs));
    } else if (a.claim == "thm-1.3") {
        reports.push_back(
            verify_main_stability(a.n > 0 ? a.n : 4, a.m > 0 ? a.m : 2, pick(a.trials, 200), a.seed, a.jobs));
    } else if (a.claim == "conj-1.4") {
        reports.push_back(
            conjecture_search(a.n > 0 ? a.n : 3, a.m > 0 ? a.m : 2, pick(a.budget, 2500), a.seed));
    } else if (a.claim == "lem-2.1") {
        reports.push_back(verify_census());
    } else if (a.claim == "thm-2.2") {
        reports.push_back(verify_rainbow_threshold(a.n > 0 ? a.n : 3, a.m > 0 ? a.m : 2,
                                                   pick(a.trials, 250), a.seed, a.jobs));
    } else if (a.claim == "lem-2.3") {
        reports.push_back(verify_shift_monotone(a.n > 0 ? a.n : 3, pick(a.e, 12),
                                                pick(a.trials, 600), a.seed, a.jobs));
    } else if (a.claim == "lem-2.4") {
        reports.push_back(
            verify_intersecting_stability(a.n1, a.n2, a.n3, pick(a.trials, 700), a.seed, a.jobs));
    } else if (a.claim == "lem-2.5") {
        reports.push_back(verify_two_graph_rainbow(a.n > 0 ? a.n : 3));
    } else if (a.claim == "lem-2.6") {
        reports.push_back(verify_small_matching_stability(a.n > 0 ? a.n : 4, a.m > 0 ? a.m : 2,
                                                          pick(a.trials, 150), a.seed, a.jobs));
    } else if (a.claim == "lem-3.1") {
        reports.push_back(verify_shifted_stability(a.n > 0 ? a.n : 4, a.m > 0 ? a.m : 2,
                                                   pick(a.trials, 600), a.seed, a.jobs));
    } else if (a.claim == "thm-3.2") {
        int n = a.n > 0 ? a.n : 3;
        int delta = a.delta >= 0 ? a.delta : (2 * n * n + 2) / 3;
        reports.push_back(verify_min_degree_pm(n, delta, pick(a.trials, 300), a.seed, a.jobs));
    } else if (a.claim == "lem-3.3") {
        reports.push_back(
            verify_near_perfect_stability(a.n > 0 ? a.n : 4, pick(a.trials, 120), a.seed, a.jobs));
    } else if (a.claim == "solver-xcheck") {
        int n = a.n > 0 ? a.n : 3;
        reports.push_back(solver_cross_check(n, pick(a.e, 12), pick(a.trials, n == 2 ? 0 : 500),
                                             a.seed, a.jobs));
    } else {
        std::cerr << "unknown claim '" << a.claim << "'; known claims:\n";
        for (const auto& c : claim_table()) std::cerr << "  " << c.id << "  " << c.summary << "\n";
        return 2;
    }

    bool any_fail = false;
    for (const auto& rep : reports) {
        std::cout << report_to_json(rep).dump() << "\n";
        std::cerr << rep.claim_id << " " << rep.status << " tested=" << rep.instances_tested
                  << " skipped=" << rep.skipped << " counterexamples=" << rep.counterexamples.size()
                  << "\n";
        if (!a.archive_dir.empty()) write_archive(rep, a.archive_dir);
        if (rep.status == "FAIL") any_fail = true;
    }
    return any_fail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-partite hypergraph matching toolkit"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a hypergraph and write its JSON");
    gen->require_subcommand(1);
    int g_k = 3, g_n = 3, g_m = 2;
    long g_edges = 10;
    std::uint64_t g_seed = 0;
    std::vector<int> g_sizes;
    std::string g_out;
    auto* gen_ex = gen->add_subcommand("extremal", "extremal construction H_k(n,m)");
    gen_ex->add_option("--k", g_k);
    gen_ex->add_option("--n", g_n);
    gen_ex->add_option("--m", g_m);
    gen_ex->add_option("-o,--output", g_out);
    auto* gen_co = gen->add_subcommand("complete", "complete k-partite graph");
    gen_co->add_option("--k", g_k);
    gen_co->add_option("--n", g_n);
    gen_co->add_option("--sizes", g_sizes)->delimiter(',');
    gen_co->add_option("-o,--output", g_out);
    auto* gen_ra = gen->add_subcommand("random", "uniform random edge set");
    gen_ra->add_option("--k", g_k);
    gen_ra->add_option("--sizes", g_sizes)->delimiter(',')->required();
    gen_ra->add_option("--edges", g_edges)->required();
    gen_ra->add_option("--seed", g_seed);
    gen_ra->add_option("-o,--output", g_out);

    // solve
    auto* solve = app.add_subcommand("solve", "exact matching / cover numbers");
    std::string s_in;
    bool s_nu = false, s_tau = false, s_pm = false;
    long s_budget = -1;
    solve->add_option("input", s_in, "hypergraph JSON file")->required();
    solve->add_flag("--nu", s_nu, "maximum matching");
    solve->add_flag("--tau", s_tau, "minimum vertex cover");
    solve->add_flag("--pm", s_pm, "perfect matching query");
    solve->add_option("--budget", s_budget, "node budget (default HYPERSTAB_BUDGET)");

    // shift
    auto* shift_cmd = app.add_subcommand("shift", "compression steps and closure");
    std::string sh_in, sh_out;
    bool sh_closure = false, sh_trace = false;
    std::vector<int> sh_pair;
    shift_cmd->add_option("input", sh_in)->required();
    shift_cmd->add_flag("--closure", sh_closure, "iterate to the partitely shifted fixed point");
    shift_cmd->add_option("--pair", sh_pair, "c,x,y: one S_xy step in class c")->delimiter(',');
    shift_cmd->add_flag("--trace", sh_trace, "with --closure, emit every intermediate graph");
    shift_cmd->add_option("-o,--output", sh_out);

    // links census
    auto* links = app.add_subcommand("links", "link-system machinery");
    links->require_subcommand(1);
    links->add_subcommand("census", "all 64 slot configurations");

    // verify
    auto* verify = app.add_subcommand("verify", "run a claim suite, JSONL on stdout");
    VerifyArgs va;
    verify->add_option("claim", va.claim, "claim id (e.g. thm-1.2) or 'all'")->required();
    verify->add_option("--k", va.k);
    verify->add_option("--n", va.n);
    verify->add_option("--m", va.m);
    verify->add_option("--n1", va.n1);
    verify->add_option("--n2", va.n2);
    verify->add_option("--n3", va.n3);
    verify->add_option("--e", va.e);
    verify->add_option("--delta", va.delta);
    verify->add_option("--trials", va.trials);
    verify->add_option("--budget", va.budget);
    verify->add_option("--seed", va.seed);
    verify->add_option("--jobs", va.jobs);
    verify->add_flag("--exhaustive", va.exhaustive);
    verify->add_flag("--small", va.small, "curated small-parameter sweep (verify all)");
    verify->add_option("--archive-dir", va.archive_dir, "write counterexample files here");

    // search conjecture
    auto* search = app.add_subcommand("search", "counterexample search");
    auto* search_conj = search->add_subcommand("conjecture", "k = 4 stability conjecture");
    int c_n = 3, c_m = 2;
    long c_budget = 10000;
    std::uint64_t c_seed = 0;
    std::string c_dir = "archive";
    search_conj->add_option("--n", c_n);
    search_conj->add_option("--m", c_m);
    search_conj->add_option("--budget", c_budget);
    search_conj->add_option("--seed", c_seed);
    search_conj->add_option("--archive-dir", c_dir);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        using namespace hyperstab;
        if (gen_ex->parsed()) {
            emit(hypergraph_to_json(extremal_construction(g_k, g_n, g_m)), g_out);
        } else if (gen_co->parsed()) {
            std::vector<int> sizes = g_sizes;
            if (sizes.empty()) sizes.assign(static_cast<std::size_t>(g_k), g_n);
            emit(hypergraph_to_json(complete(static_cast<int>(sizes.size()), sizes)), g_out);
        } else if (gen_ra->parsed()) {
            emit(hypergraph_to_json(
                     random_hypergraph(static_cast<int>(g_sizes.size()), g_sizes, g_edges, g_seed)),
                 g_out);
        } else if (solve->parsed()) {
            KPartiteHypergraph h = load_hypergraph(s_in);
            long budget = s_budget >= 0 ? s_budget : env_budget();
            if (!s_nu && !s_tau && !s_pm) s_nu = s_tau = true;
            nlohmann::ordered_json out;
            if (s_nu || s_pm) {
                Matching m = max_matching(h, budget);
                if (s_nu) {
                    out["nu"] = m.size();
                    out["matching"] = matching_to_json(m)["matching"];
                }
                if (s_pm) {
                    bool pm = is_perfect_matching(h, m);
                    out["pm"] = pm;
                    if (pm && !s_nu) out["matching"] = matching_to_json(m)["matching"];
                }
            }
            if (s_tau) {
                VertexCover c = min_vertex_cover(h, budget);
                out["tau"] = c.size();
                out["cover"] = cover_to_json(c)["cover"];
            }
            std::cout << out.dump() << "\n";
        } else if (shift_cmd->parsed()) {
            KPartiteHypergraph h = load_hypergraph(sh_in);
            if (sh_closure == !sh_pair.empty())
                throw BadParamsError("choose exactly one of --closure and --pair");
            if (sh_closure) {
                if (sh_trace) {
                    std::vector<KPartiteHypergraph> steps;
                    KPartiteHypergraph g = shift_closure(h, &steps);
                    nlohmann::ordered_json out;
                    auto arr = nlohmann::ordered_json::array();
                    arr.push_back(hypergraph_to_json(h));
                    for (const auto& s : steps) arr.push_back(hypergraph_to_json(s));
                    out["trace"] = arr;
                    emit(out, sh_out);
                } else {
                    emit(hypergraph_to_json(shift_closure(h)), sh_out);
                }
            } else {
                if (sh_pair.size() != 3) throw BadParamsError("--pair needs c,x,y");
                emit(hypergraph_to_json(
                         shift(h, {sh_pair[0], sh_pair[1]}, {sh_pair[0], sh_pair[2]})),
                     sh_out);
            }
        } else if (links->parsed()) {
            auto rows = extension_lemma_census();
            auto arr = nlohmann::ordered_json::array();
            for (const auto& row : rows) {
                nlohmann::ordered_json j;
                auto slots = nlohmann::ordered_json::array();
                for (const auto& c : row.slot) slots.push_back({c[0] != 0, c[1] != 0});
                j["slots"] = slots;
                j["total"] = row.total;
                j["rainbow"] = row.rainbow;
                j["perfect_matching"] = row.perfect_matching;
                j["pm_not_rainbow"] = row.pm_not_rainbow;
                arr.push_back(std::move(j));
            }
            std::cout << arr.dump() << "\n";
        } else if (verify->parsed()) {
            return run_verify(va);
        } else if (search_conj->parsed()) {
            VerificationReport rep = conjecture_search(c_n, c_m, c_budget, c_seed);
            std::cout << report_to_json(rep).dump() << "\n";
            std::cerr << rep.claim_id << " " << rep.status << " tested=" << rep.instances_tested
                      << " candidates=" << rep.counterexamples.size() << "\n";
            write_archive(rep, c_dir);
        }
        return 0;
    } catch (const hyperstab::BudgetError& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return 3;
    } catch (const hyperstab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
