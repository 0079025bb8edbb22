#pragma once

#include <cstdio>
#include <filesystem>
#include <optional>
#include <span>
#include <string>

#include "json.hpp"

#include "faccover/analytic.hpp"
#include "faccover/growth.hpp"
#include "faccover/primes.hpp"
#include "faccover/range.hpp"

namespace faccover {

using ordered_json = nlohmann::ordered_json;

/// {"p", "method", then "a","v","b" | "s_list" | "max_cost"}.
ordered_json certificate_json(u64 p, const CoverCertificate & cert);
std::string_view method_name(const CoverCertificate & cert);

/// Stable record: no timing fields.
ordered_json report_json(const VerificationReport & r);

enum class ReportFormat { jsonl, csv };
std::optional<ReportFormat> parse_format(std::string_view name);

inline constexpr std::string_view csv_header = "p,stage,method,elapsed_ms";
std::string report_line(const VerificationReport & r, ReportFormat format);

struct Checkpoint
{
	u64 last_fully_verified_prime = 0;
	std::string config_hash;
};

std::string config_hash(const RangeOptions & opts, ReportFormat format);

/// Write-temp-then-rename.
void write_checkpoint(const std::filesystem::path & path, const Checkpoint & cp);
std::optional<Checkpoint> read_checkpoint(const std::filesystem::path & path);

/// Appends report blocks to a file, one line per prime. On resume, drops every record above
/// the checkpointed prime so replayed primes are not reported twice.
class ReportWriter
{
public:
	ReportWriter(std::filesystem::path path, ReportFormat format, std::optional<u64> resume_after = std::nullopt);
	~ReportWriter();
	ReportWriter(const ReportWriter &) = delete;
	ReportWriter & operator=(const ReportWriter &) = delete;

	void write(std::span<const VerificationReport> block);
	void flush();

private:
	std::filesystem::path path_;
	ReportFormat format_;
	std::FILE * file_ = nullptr;
};

ordered_json bound_report_json(const BoundReport & r);
ordered_json analytic_point_json(const analytic::DeltaPoint & pt, const analytic::AnalyticParams & params,
                                 u64 threshold_master, u64 threshold_final);
ordered_json growth_step_json(const growth::StepRecord & step);

}
