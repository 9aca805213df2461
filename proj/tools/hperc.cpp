#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hperc/io_util.hpp"

namespace {

using namespace hperc;

// Exit codes: 0 success, 2 usage, 3 input parse, 4 domain, 5 guard refusal.
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitDomain = 4;
constexpr int kExitGuard = 5;

constexpr int kClosureVertexGuard = 5000;

struct GuardRefusal : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph load_graph_file(const std::string& path) { return parse_edge_list(read_file(path)); }

// Template specs: clique<k>, cycle<k>, path<k>, gnp<k>,<alpha>,seed=<s>
// (':' after the generator name also accepted), or an edge-list file path.
TemplateGraph parse_template_spec(const std::string& spec) {
    auto tail = [&](const char* prefix) -> std::string {
        std::string t = spec.substr(std::string(prefix).size());
        if (!t.empty() && t[0] == ':') t = t.substr(1);
        return t;
    };
    auto as_int = [&](const std::string& s) {
        try {
            std::size_t pos = 0;
            int v = std::stoi(s, &pos);
            if (pos != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw ParseError(0, "bad template spec: " + spec);
        }
    };
    if (spec.rfind("clique", 0) == 0) return TemplateGraph::clique(as_int(tail("clique")));
    if (spec.rfind("cycle", 0) == 0) return TemplateGraph::cycle(as_int(tail("cycle")));
    if (spec.rfind("path", 0) == 0) return TemplateGraph::path(as_int(tail("path")));
    if (spec.rfind("gnp", 0) == 0) {
        std::string rest = tail("gnp");
        int k = 0;
        double alpha = 0;
        unsigned long long seed = 0;
        char c1 = 0;
        std::istringstream ss(rest);
        std::string seedpart;
        if (!(ss >> k >> c1 >> alpha) || c1 != ',' || !std::getline(ss, seedpart) ||
            seedpart.rfind(",seed=", 0) != 0)
            throw ParseError(0, "bad gnp template spec, expected gnp<k>,<alpha>,seed=<s>");
        try {
            seed = std::stoull(seedpart.substr(6));
        } catch (const std::exception&) {
            throw ParseError(0, "bad seed in template spec: " + spec);
        }
        Graph g = sample_gnp(k, alpha, Seed{seed, 0});
        return TemplateGraph::from_graph(std::move(g), "gnp" + rest);
    }
    return TemplateGraph::from_graph(load_graph_file(spec), "file:" + spec);
}

// The CLI rejects degenerate templates; lambda is undefined and the dynamics
// trivial for v_H <= 2 or e_H <= 1.
void validate_template(const TemplateGraph& h) {
    if (h.vertex_count() <= 2)
        throw std::domain_error("template must have at least 3 vertices");
    if (h.edge_count() <= 1) throw std::domain_error("template must have at least 2 edges");
}

void guard_analysis_size(int k, bool force) {
    if (k > kAnalyzerGuardVertices && !force)
        throw GuardRefusal("analysis limited to " + std::to_string(kAnalyzerGuardVertices) +
                           " vertices; pass --force to override");
}

void guard_closure_size(int n, bool force) {
    if (n > kClosureVertexGuard && !force)
        throw GuardRefusal("closure limited to " + std::to_string(kClosureVertexGuard) +
                           " vertices; pass --force to override");
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        atomic_write(out_path, text);
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::istringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    if (out.empty()) throw ParseError(0, "empty list: " + csv);
    return out;
}

std::vector<double> parse_double_list(const std::string& csv) {
    std::vector<double> out;
    std::istringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    if (out.empty()) throw ParseError(0, "empty list: " + csv);
    return out;
}

void write_outputs(const std::string& command,
                   const std::map<std::string, std::string>& args, std::uint64_t seed,
                   const std::string& out_dir,
                   const std::map<std::string, std::string>& files,
                   const std::string& started_at) {
    std::filesystem::create_directories(out_dir);
    std::map<std::string, std::string> digests;
    for (const auto& [name, data] : files) {
        atomic_write(std::filesystem::path(out_dir) / name, data);
        digests[name] = fnv1a64_hex(data);
    }
    nlohmann::json manifest =
        make_manifest(command, args, seed, digests, started_at, iso8601_now());
    atomic_write(std::filesystem::path(out_dir) / (command + "_manifest.json"),
                 manifest.dump(2) + "\n");
}

int run(int argc, char** argv) {
    CLI::App app{"H-percolation toolkit: closures, balance analysis, thresholds"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("hperc ") + kToolVersion);

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Balance report for a template graph");
    int an_clique = 0, an_cycle = 0, an_path = 0;
    std::string an_gnp, an_file, an_out;
    bool an_force = false;
    analyze->add_option("--clique", an_clique, "complete graph K_k");
    analyze->add_option("--cycle", an_cycle, "cycle C_k");
    analyze->add_option("--path", an_path, "path P_k");
    analyze->add_option("--gnp", an_gnp, "random template: <k>,<alpha>,seed=<s>");
    analyze->add_option("--file", an_file, "edge-list file");
    analyze->add_option("--out", an_out, "write JSON here instead of stdout");
    analyze->add_flag("--force", an_force, "override the size guard");

    // close
    auto* close = app.add_subcommand("close", "Compute the H-closure of a graph");
    std::string cl_init, cl_template, cl_strategy = "worklist", cl_out, cl_rounds_dir;
    bool cl_force = false;
    close->add_option("--init", cl_init, "initial graph edge-list file")->required();
    close->add_option("--template", cl_template, "template spec or file")->required();
    close->add_option("--strategy", cl_strategy, "baseline|worklist")
        ->check(CLI::IsMember({"baseline", "worklist"}));
    close->add_option("--rounds-dir", cl_rounds_dir, "write per-round edge lists here");
    close->add_option("--out", cl_out, "write JSON here instead of stdout");
    close->add_flag("--force", cl_force, "override the size guard");

    // pc
    auto* pc = app.add_subcommand("pc", "Estimate the critical probability p_c(n,H)");
    int pc_n = 0, pc_trials = 200, pc_levels = 15, pc_threads = 1;
    std::uint64_t pc_seed = 0;
    std::string pc_template, pc_out = ".";
    bool pc_independent = false, pc_force = false;
    pc->add_option("--n", pc_n, "host graph size")->required();
    pc->add_option("--template", pc_template, "template spec or file")->required();
    pc->add_option("--trials", pc_trials, "trials per bisection level");
    pc->add_option("--levels", pc_levels, "bisection levels");
    pc->add_option("--seed", pc_seed, "master seed")->required();
    pc->add_option("--threads", pc_threads, "internal parallelism cap");
    pc->add_option("--out", pc_out, "output directory");
    pc->add_flag("--independent", pc_independent, "fresh samples per level (no coupling)");
    pc->add_flag("--force", pc_force, "override the size guard");

    // ell
    auto* ell = app.add_subcommand("ell", "Estimate the exponent ell via log-log fit");
    std::string ell_template, ell_ns = "64,128,256,512", ell_out = ".";
    int ell_trials = 200, ell_levels = 15, ell_threads = 1;
    std::uint64_t ell_seed = 0;
    bool ell_independent = false, ell_force = false;
    ell->add_option("--template", ell_template, "template spec or file")->required();
    ell->add_option("--n", ell_ns, "comma-separated increasing sizes");
    ell->add_option("--trials", ell_trials, "trials per bisection level");
    ell->add_option("--levels", ell_levels, "bisection levels");
    ell->add_option("--seed", ell_seed, "master seed")->required();
    ell->add_option("--threads", ell_threads, "internal parallelism cap");
    ell->add_option("--out", ell_out, "output directory");
    ell->add_flag("--independent", ell_independent, "fresh samples per level (no coupling)");
    ell->add_flag("--force", ell_force, "override the size guard");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Strictly-balanced fraction over alphas");
    int sw_k = 0, sw_samples = 1000, sw_threads = 1;
    std::string sw_alphas, sw_out = ".";
    std::uint64_t sw_seed = 0;
    bool sw_force = false;
    sweep->add_option("--k", sw_k, "template size")->required();
    sweep->add_option("--alphas", sw_alphas, "comma-separated alphas in (0,1]")->required();
    sweep->add_option("--samples", sw_samples, "samples per alpha");
    sweep->add_option("--seed", sw_seed, "master seed")->required();
    sweep->add_option("--threads", sw_threads, "internal parallelism cap");
    sweep->add_option("--out", sw_out, "output directory");
    sweep->add_flag("--force", sw_force, "override the size guard");

    // stats
    auto* stats = app.add_subcommand("stats", "Balance classification of random templates");
    int st_k = 0, st_samples = 1000, st_threads = 1;
    double st_alpha = 0.5;
    std::string st_out = ".";
    std::uint64_t st_seed = 0;
    bool st_force = false;
    stats->add_option("--k", st_k, "template size")->required();
    stats->add_option("--alpha", st_alpha, "edge probability")->required();
    stats->add_option("--samples", st_samples, "number of samples");
    stats->add_option("--seed", st_seed, "master seed")->required();
    stats->add_option("--threads", st_threads, "internal parallelism cap");
    stats->add_option("--out", st_out, "output directory");
    stats->add_flag("--force", st_force, "override the size guard");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (analyze->parsed()) {
        int picked = (an_clique > 0) + (an_cycle > 0) + (an_path > 0) + !an_gnp.empty() +
                     !an_file.empty();
        if (picked != 1) {
            std::cerr << "analyze: exactly one of --clique/--cycle/--path/--gnp/--file\n";
            return kExitUsage;
        }
        TemplateGraph h;
        if (an_clique > 0)
            h = TemplateGraph::clique(an_clique);
        else if (an_cycle > 0)
            h = TemplateGraph::cycle(an_cycle);
        else if (an_path > 0)
            h = TemplateGraph::path(an_path);
        else if (!an_gnp.empty())
            h = parse_template_spec("gnp" + an_gnp);
        else
            h = TemplateGraph::from_graph(load_graph_file(an_file), "file:" + an_file);
        validate_template(h);
        guard_analysis_size(h.vertex_count(), an_force);
        emit(balance_report_to_json(analyze_balance(h, an_force)).dump(2) + "\n", an_out);
        return 0;
    }

    if (close->parsed()) {
        Graph g = load_graph_file(cl_init);
        TemplateGraph h = parse_template_spec(cl_template);
        validate_template(h);
        guard_closure_size(g.vertex_count(), cl_force);
        if (h.vertex_count() > g.vertex_count())
            throw std::domain_error("template larger than initial graph");
        auto strat = cl_strategy == "baseline" ? ClosureStrategy::baseline
                                               : ClosureStrategy::worklist;
        ClosureResult res = closure(g, h, strat);
        if (!cl_rounds_dir.empty()) {
            std::filesystem::create_directories(cl_rounds_dir);
            for (std::size_t i = 0; i < res.rounds.size(); ++i) {
                Graph round_graph(g.vertex_count());
                for (auto [u, v] : res.rounds[i]) round_graph.add_edge(u, v);
                atomic_write(std::filesystem::path(cl_rounds_dir) /
                                 ("round_" + std::to_string(i + 1) + ".el"),
                             serialize_edge_list(round_graph));
            }
        }
        emit(closure_result_to_json(res).dump(2) + "\n", cl_out);
        return 0;
    }

    if (pc->parsed()) {
        TemplateGraph h = parse_template_spec(pc_template);
        validate_template(h);
        guard_closure_size(pc_n, pc_force);
        const std::string started = iso8601_now();
        PcEstimate est = estimate_pc(pc_n, h, pc_trials, pc_levels, Seed{pc_seed, 0},
                                     pc_threads, !pc_independent);
        write_outputs("pc",
                      {{"n", std::to_string(pc_n)},
                       {"template", pc_template},
                       {"trials", std::to_string(pc_trials)},
                       {"levels", std::to_string(pc_levels)},
                       {"coupled", pc_independent ? "false" : "true"}},
                      pc_seed, pc_out, {{"pc.csv", pc_csv({est})}}, started);
        return 0;
    }

    if (ell->parsed()) {
        TemplateGraph h = parse_template_spec(ell_template);
        validate_template(h);
        auto ns = parse_int_list(ell_ns);
        for (int n : ns) guard_closure_size(n, ell_force);
        const std::string started = iso8601_now();
        EllEstimate est = estimate_ell(h, ns, ell_trials, ell_levels, Seed{ell_seed, 0},
                                       ell_threads, !ell_independent);
        write_outputs("ell",
                      {{"template", ell_template},
                       {"n", ell_ns},
                       {"trials", std::to_string(ell_trials)},
                       {"levels", std::to_string(ell_levels)},
                       {"coupled", ell_independent ? "false" : "true"}},
                      ell_seed, ell_out,
                      {{"ell_points.csv",
                        ell_points_csv(est, Seed{ell_seed, 0}, ell_trials, ell_levels)},
                       {"ell.json", ell_estimate_to_json(est).dump(2) + "\n"}},
                      started);
        return 0;
    }

    if (sweep->parsed()) {
        guard_analysis_size(sw_k, sw_force);
        auto alphas = parse_double_list(sw_alphas);
        const std::string started = iso8601_now();
        auto rows =
            alpha_sweep(sw_k, alphas, sw_samples, Seed{sw_seed, 0}, sw_threads, sw_force);
        write_outputs("sweep",
                      {{"k", std::to_string(sw_k)},
                       {"alphas", sw_alphas},
                       {"samples", std::to_string(sw_samples)}},
                      sw_seed, sw_out, {{"sweep.csv", sweep_csv(rows, Seed{sw_seed, 0})}},
                      started);
        return 0;
    }

    if (stats->parsed()) {
        guard_analysis_size(st_k, st_force);
        const std::string started = iso8601_now();
        BalanceStats bs =
            sample_balance_stats(st_k, st_alpha, st_samples, Seed{st_seed, 0}, st_threads,
                                 st_force);
        write_outputs("stats",
                      {{"k", std::to_string(st_k)},
                       {"alpha", format_double(st_alpha)},
                       {"samples", std::to_string(st_samples)}},
                      st_seed, st_out,
                      {{"stats.csv", stats_csv(bs)},
                       {"witness_hist.csv", witness_histogram_csv(bs)}},
                      started);
        return 0;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const hperc::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const GuardRefusal& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitGuard;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
