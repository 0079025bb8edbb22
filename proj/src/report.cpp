#include "faccover/report.hpp"

#include <fstream>
#include <stdexcept>
#include <system_error>
#include <vector>

namespace faccover {

namespace {

template <class... Ts> struct overloaded : Ts... { using Ts::operator()...; };

[[noreturn]] void io_error(const std::filesystem::path & path, const std::string & what)
{
	throw std::system_error(errno, std::generic_category(), what + " '" + path.string() + "'");
}

// First field of a jsonl/csv record.
std::optional<u64> record_prime(const std::string & line, const ReportFormat format)
{
	if (format == ReportFormat::csv)
	{
		if (line.empty() || line.front() < '0' || line.front() > '9') return std::nullopt;
		return std::stoull(line);
	}
	const auto j = nlohmann::json::parse(line, nullptr, false);
	if (j.is_discarded() || !j.contains("p")) return std::nullopt;
	return j["p"].get<u64>();
}

}

std::string_view method_name(const CoverCertificate & cert)
{
	return std::visit(overloaded{[](const LemmaCertificate &) { return std::string_view("lemma"); },
	                             [](const FallbackCertificate &) { return std::string_view("fallback"); },
	                             [](const BruteCertificate &) { return std::string_view("brute"); }},
	                  cert);
}

ordered_json certificate_json(const u64 p, const CoverCertificate & cert)
{
	ordered_json j;
	j["p"] = p;
	j["method"] = method_name(cert);
	std::visit(overloaded{[&](const LemmaCertificate & c) {
		                      j["a"] = c.a;
		                      j["v"] = c.v;
		                      j["b"] = c.b;
	                      },
	                      [&](const FallbackCertificate & c) { j["s_list"] = c.s_list; },
	                      [&](const BruteCertificate & c) { j["max_cost"] = c.max_cost; }},
	           cert);
	return j;
}

ordered_json report_json(const VerificationReport & r)
{
	ordered_json j;
	j["p"] = r.p;
	j["stage"] = stage_name(r.stage);
	if (r.certificate)
	{
		const ordered_json cert = certificate_json(r.p, *r.certificate);
		for (const auto & [key, value] : cert.items())
		{
			if (key != "p") j[key] = value;
		}
	}
	else
	{
		j["method"] = r.error.empty() ? "none" : "error";
		if (!r.error.empty()) j["error"] = r.error;
	}
	return j;
}

std::optional<ReportFormat> parse_format(const std::string_view name)
{
	if (name == "jsonl") return ReportFormat::jsonl;
	if (name == "csv") return ReportFormat::csv;
	return std::nullopt;
}

std::string report_line(const VerificationReport & r, const ReportFormat format)
{
	if (format == ReportFormat::jsonl) return report_json(r).dump();
	const std::string method(r.certificate ? method_name(*r.certificate) : (r.error.empty() ? "none" : "error"));
	char ms[32];
	std::snprintf(ms, sizeof(ms), "%.3f", double(r.elapsed.count()) / 1000.0);
	return std::to_string(r.p) + "," + std::string(stage_name(r.stage)) + "," + method + "," + ms;
}

std::string config_hash(const RangeOptions & opts, const ReportFormat format)
{
	std::string key = format == ReportFormat::csv ? "csv" : "jsonl";
	for (const Stage s : opts.stages) key += "|" + std::string(stage_name(s));
	key += "|" + std::to_string(opts.brute_ceiling);
	// FNV-1a, 64 bit
	u64 h = 0xcbf29ce484222325ULL;
	for (const unsigned char c : key) { h ^= c; h *= 0x100000001b3ULL; }
	char buf[17];
	std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
	return buf;
}

void write_checkpoint(const std::filesystem::path & path, const Checkpoint & cp)
{
	auto tmp = path;
	tmp += ".tmp";
	{
		std::ofstream out(tmp, std::ios::trunc);
		if (!out) io_error(tmp, "cannot write checkpoint");
		ordered_json j;
		j["last_fully_verified_prime"] = cp.last_fully_verified_prime;
		j["config_hash"] = cp.config_hash;
		out << j.dump() << '\n';
		if (!out.flush()) io_error(tmp, "cannot write checkpoint");
	}
	std::error_code ec;
	std::filesystem::rename(tmp, path, ec);
	if (ec) throw std::system_error(ec, "cannot replace checkpoint '" + path.string() + "'");
}

std::optional<Checkpoint> read_checkpoint(const std::filesystem::path & path)
{
	std::ifstream in(path);
	if (!in) return std::nullopt;
	const auto j = nlohmann::json::parse(in, nullptr, false);
	if (j.is_discarded()) throw std::runtime_error("corrupt checkpoint '" + path.string() + "'");
	return Checkpoint{j.at("last_fully_verified_prime").get<u64>(), j.at("config_hash").get<std::string>()};
}

ReportWriter::ReportWriter(std::filesystem::path path, const ReportFormat format, const std::optional<u64> resume_after)
	: path_(std::move(path)), format_(format)
{
	std::vector<std::string> kept;
	if (resume_after)
	{
		std::ifstream in(path_);
		for (std::string line; std::getline(in, line);)
		{
			const auto p = record_prime(line, format_);
			if (p && *p <= *resume_after) kept.push_back(line);
		}
	}
	file_ = std::fopen(path_.c_str(), "w");
	if (file_ == nullptr) io_error(path_, "cannot open report");
	if (format_ == ReportFormat::csv) std::fprintf(file_, "%s\n", std::string(csv_header).c_str());
	for (const auto & line : kept) std::fprintf(file_, "%s\n", line.c_str());
	flush();
}

ReportWriter::~ReportWriter()
{
	if (file_ != nullptr) std::fclose(file_);
}

void ReportWriter::write(const std::span<const VerificationReport> block)
{
	for (const auto & r : block)
	{
		if (std::fprintf(file_, "%s\n", report_line(r, format_).c_str()) < 0) io_error(path_, "cannot write report");
	}
}

void ReportWriter::flush()
{
	if (std::fflush(file_) != 0) io_error(path_, "cannot flush report");
}

ordered_json bound_report_json(const BoundReport & r)
{
	ordered_json j;
	j["name"] = r.name;
	j["range"] = {r.lo, r.hi};
	j["violations"] = ordered_json::array();
	for (const auto & v : r.violations) j["violations"].push_back({{"at", v.at}, {"lhs", v.lhs}, {"rhs", v.rhs}});
	j["near_misses"] = ordered_json::array();
	for (const auto & v : r.near_misses) j["near_misses"].push_back({{"at", v.at}, {"lhs", v.lhs}, {"rhs", v.rhs}});
	return j;
}

ordered_json analytic_point_json(const analytic::DeltaPoint & pt, const analytic::AnalyticParams & params,
                                 const u64 threshold_master, const u64 threshold_final)
{
	ordered_json j;
	j["lambda"] = pt.lambda;
	j["beta"] = params.beta;
	j["gamma"] = params.gamma;
	j["n"] = pt.n;
	j["delta"] = pt.delta;
	j["threshold_master"] = threshold_master;
	j["threshold_final"] = threshold_final;
	return j;
}

ordered_json growth_step_json(const growth::StepRecord & s)
{
	ordered_json j;
	j["m"] = s.m;
	j["b"] = s.b;
	j["branch"] = growth::branch_name(s.branch);
	j["a"] = s.a ? ordered_json(*s.a) : ordered_json(nullptr);
	j["M"] = s.min_count ? ordered_json(*s.min_count) : ordered_json(nullptr);
	j["U"] = s.u;
	j["b_next"] = s.b_next;
	j["U_next"] = s.u_next;
	return j;
}

}
