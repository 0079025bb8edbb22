#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "faccover/certify.hpp"

namespace faccover {

/// Escalation order. A prime's report names the first stage that certified it.
enum class Stage
{
	lemma,            // 25 roots, 3 sqrt(p) steps
	lemma_wide,       // 25 roots, 10 sqrt(p) steps
	lemma_extended,   // 50 roots, 10 sqrt(p) steps
	fallback,
	brute,
	none              // nothing certified the prime
};

inline constexpr Stage escalation_order[] = {Stage::lemma, Stage::lemma_wide, Stage::lemma_extended, Stage::fallback,
                                             Stage::brute};

std::string_view stage_name(Stage s);
std::optional<Stage> parse_stage(std::string_view name);
SearchConfig stage_config(Stage s);

struct RangeOptions
{
	std::vector<Stage> stages{std::begin(escalation_order), std::end(escalation_order)};
	u64 brute_ceiling = default_brute_ceiling;
	int workers = 0;            // 0: OpenMP default
	size_t block_size = 256;

	bool enabled(Stage s) const;
};

/// "lemma,lemma-wide,fallback" style lists; throws std::invalid_argument on unknown names.
std::vector<Stage> parse_stage_list(std::string_view list);

struct VerificationReport
{
	u64 p = 0;
	Stage stage = Stage::none;
	std::optional<CoverCertificate> certificate;
	std::string error;                          // set when the prime's computation threw
	std::chrono::microseconds elapsed{0};

	bool certified() const { return certificate.has_value(); }
};

VerificationReport verify_prime(u64 p, const RangeOptions & opts);

/// Receives each completed block of reports, in prime order.
using ReportSink = std::function<void(std::span<const VerificationReport>)>;

/// Every prime p with lo < p <= hi. Blocks of primes run on OpenMP workers; the sink sees
/// them strictly in order.
void verify_range(u64 lo, u64 hi, const RangeOptions & opts, const ReportSink & sink);

/// Single-threaded reference for verify_range.
void verify_range_serial(u64 lo, u64 hi, const RangeOptions & opts, const ReportSink & sink);

std::vector<VerificationReport> collect_range(u64 lo, u64 hi, const RangeOptions & opts);

/// Upper end of the range the analytic argument leaves to the computer.
inline constexpr u64 verification_limit = 3242000;

/// Bad primes printed after the first run (3 sqrt p, 25 roots), as printed: 71761 and 93481 appear twice.
std::span<const u64> published_first_run_bad();
/// The 25 primes left after widening the search.
std::span<const u64> published_final_bad();

struct ListComparison
{
	std::vector<u64> common, only_ours, only_published;
};

ListComparison compare_lists(std::span<const u64> ours, std::span<const u64> published);

struct BadLists
{
	std::vector<u64> lemma_bad;            // survivors of the 3 sqrt p search
	std::vector<u64> wide_bad;             // ... and of the 10 sqrt p search
	std::vector<u64> extended_bad;         // ... and of the 50-root search
	std::vector<u64> fallback_failures;    // extended survivors fallback_cover could not cover
	ListComparison first_run;              // lemma_bad vs the printed first-run list
	ListComparison final_run;              // extended_bad vs the printed final list
	std::vector<u64> wide_above_7591;      // wide survivors the printed account says should not exist
};

/// Primes p with lo <= p < hi (lo defaults to the 100th prime, 541, where the printed lists start).
BadLists reproduce_bad_lists(u64 lo = 541, u64 hi = verification_limit);

}
