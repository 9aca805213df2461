#ifndef HPERC_IO_UTIL_HPP
#define HPERC_IO_UTIL_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

#include <json.hpp>

#include "hperc/balance.hpp"
#include "hperc/experiments.hpp"
#include "hperc/percolation.hpp"
#include "hperc/threshold.hpp"

namespace hperc {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

nlohmann::json fraction_to_json(const Fraction& f);
nlohmann::json balance_report_to_json(const BalanceReport& rep);
nlohmann::json closure_result_to_json(const ClosureResult& res);
nlohmann::json ell_estimate_to_json(const EllEstimate& est);

// Fixed CSV schemas (header row, comma separator, LF endings, '.' decimal).
std::string pc_csv(const std::vector<PcEstimate>& rows);
std::string ell_points_csv(const EllEstimate& est, const Seed& seed, int trials, int levels);
std::string sweep_csv(const std::vector<AlphaSweepRow>& rows, const Seed& seed);
std::string stats_csv(const BalanceStats& stats);
std::string witness_histogram_csv(const BalanceStats& stats);

// %.17g, enough digits to round-trip a double; used by every CSV writer so
// reruns are byte-identical.
std::string format_double(double x);

std::string fnv1a64_hex(const std::string& data);

// Write via temp file + rename in the same directory.
void atomic_write(const std::filesystem::path& path, const std::string& data);

// Run manifest: arguments, seed, rng, version, timestamps, output digests.
// Timestamps live only here, never in data files.
nlohmann::json make_manifest(const std::string& command,
                             const std::map<std::string, std::string>& arguments,
                             std::uint64_t master_seed,
                             const std::map<std::string, std::string>& output_digests,
                             const std::string& started_at, const std::string& finished_at);

std::string iso8601_now();

}  // namespace hperc

#endif
