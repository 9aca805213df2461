#include "hperc/io_util.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>

namespace hperc {

nlohmann::json fraction_to_json(const Fraction& f) {
    return {{"num", f.num}, {"den", f.den}};
}

nlohmann::json balance_report_to_json(const BalanceReport& rep) {
    nlohmann::json j;
    j["schema_version"] = kSchemaVersion;
    j["lambda"] = fraction_to_json(rep.lambda);
    j["lambda_star"] = fraction_to_json(rep.lambda_star);
    j["balanced"] = rep.balanced;
    j["strictly_balanced"] = rep.strictly_balanced;
    if (rep.violating_witness) {
        j["violating_witness"] = {{"vertices", rep.violating_witness->first},
                                  {"e_F", rep.violating_witness->second}};
    } else {
        j["violating_witness"] = nullptr;
    }
    auto minim = nlohmann::json::array();
    for (auto [v_f, e_f] : rep.lambda_star_minimizers)
        minim.push_back({{"v_F", v_f}, {"e_F", e_f}});
    j["lambda_star_minimizers"] = minim;
    j["ell_lower"] = rep.ell_lower ? fraction_to_json(*rep.ell_lower) : nlohmann::json();
    j["ell_upper"] = rep.ell_upper ? fraction_to_json(*rep.ell_upper) : nlohmann::json();
    j["ell_exact"] = rep.ell_exact ? fraction_to_json(*rep.ell_exact) : nlohmann::json();
    return j;
}

nlohmann::json closure_result_to_json(const ClosureResult& res) {
    nlohmann::json j;
    j["schema_version"] = kSchemaVersion;
    j["n"] = res.final_graph.vertex_count();
    j["final_edge_count"] = res.final_graph.edge_count();
    j["percolated"] = res.percolated;
    j["round_count"] = res.rounds.size();
    auto rounds = nlohmann::json::array();
    for (const auto& round : res.rounds) {
        auto edges = nlohmann::json::array();
        for (auto [u, v] : round) edges.push_back({u, v});
        rounds.push_back(edges);
    }
    j["rounds"] = rounds;
    return j;
}

nlohmann::json ell_estimate_to_json(const EllEstimate& est) {
    nlohmann::json j;
    j["schema_version"] = kSchemaVersion;
    j["slope"] = est.slope;
    j["intercept"] = est.intercept;
    j["ell_hat"] = est.ell_hat;
    j["residual_rms"] = est.residual_rms;
    auto pts = nlohmann::json::array();
    for (auto [n, p] : est.points) pts.push_back({{"n", n}, {"p_hat", p}});
    j["points"] = pts;
    return j;
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string pc_csv(const std::vector<PcEstimate>& rows) {
    std::string out = "n,p_hat,ci_lo,ci_hi,trials,levels,seed,rng_name\n";
    for (const auto& r : rows) {
        out += std::to_string(r.n) + "," + format_double(r.p_hat) + "," +
               format_double(r.ci_lo) + "," + format_double(r.ci_hi) + "," +
               std::to_string(r.trials_per_level) + "," + std::to_string(r.bisection_levels) +
               "," + std::to_string(r.seed.master) + "," + r.rng_name + "\n";
    }
    return out;
}

std::string ell_points_csv(const EllEstimate& est, const Seed& seed, int trials, int levels) {
    std::string out = "n,p_hat,trials,levels,seed,rng_name\n";
    for (auto [n, p] : est.points)
        out += std::to_string(n) + "," + format_double(p) + "," + std::to_string(trials) +
               "," + std::to_string(levels) + "," + std::to_string(seed.master) + "," +
               kRngName + "\n";
    return out;
}

std::string sweep_csv(const std::vector<AlphaSweepRow>& rows, const Seed& seed) {
    std::string out = "k,alpha,a_equivalent,frac_strictly_balanced,ci_lo,ci_hi,samples,seed\n";
    for (const auto& r : rows) {
        out += std::to_string(r.k) + "," + format_double(r.alpha) + "," +
               format_double(r.a_equivalent) + "," + format_double(r.frac_strictly_balanced) +
               "," + format_double(r.ci_lo) + "," + format_double(r.ci_hi) + "," +
               std::to_string(r.samples) + "," + std::to_string(seed.master) + "\n";
    }
    return out;
}

std::string stats_csv(const BalanceStats& s) {
    std::string out =
        "k,alpha,samples,frac_strictly_balanced,frac_balanced_not_strict,frac_unbalanced,"
        "frac_with_low_degree_witness,seed\n";
    out += std::to_string(s.k) + "," + format_double(s.alpha) + "," +
           std::to_string(s.samples) + "," + format_double(s.frac_strictly_balanced) + "," +
           format_double(s.frac_balanced_not_strict) + "," +
           format_double(s.frac_unbalanced) + "," +
           format_double(s.frac_with_low_degree_witness) + "," +
           std::to_string(s.seed.master) + "\n";
    return out;
}

std::string witness_histogram_csv(const BalanceStats& s) {
    std::string out = "v_F,count\n";
    for (auto [v_f, count] : s.witness_size_histogram)
        out += std::to_string(v_f) + "," + std::to_string(count) + "\n";
    return out;
}

std::string fnv1a64_hex(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void atomic_write(const std::filesystem::path& path, const std::string& data) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string());
        out.write(data.data(), static_cast<std::streamsize>(data.size()));
        if (!out) throw std::runtime_error("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

nlohmann::json make_manifest(const std::string& command,
                             const std::map<std::string, std::string>& arguments,
                             std::uint64_t master_seed,
                             const std::map<std::string, std::string>& output_digests,
                             const std::string& started_at, const std::string& finished_at) {
    nlohmann::json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    j["arguments"] = arguments;
    j["master_seed"] = master_seed;
    j["rng_name"] = kRngName;
    j["tool_version"] = kToolVersion;
    j["started_at"] = started_at;
    j["finished_at"] = finished_at;
    j["outputs"] = output_digests;
    return j;
}

std::string iso8601_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace hperc
