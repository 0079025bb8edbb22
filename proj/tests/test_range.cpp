#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "doctest.h"

#include "faccover/range.hpp"
#include "faccover/report.hpp"

using namespace faccover;

namespace {

std::vector<u64> read_list(const std::string & name)
{
	std::ifstream in(std::string(FACCOVER_DATA_DIR) + "/" + name);
	std::vector<u64> out;
	for (std::string line; std::getline(in, line);)
	{
		if (!line.empty() && line[0] != '#') out.push_back(std::stoull(line));
	}
	return out;
}

std::string slurp(const std::filesystem::path & path)
{
	std::ifstream in(path);
	std::stringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

std::vector<std::string> stable_lines(const std::vector<VerificationReport> & reports)
{
	std::vector<std::string> out;
	for (const auto & r : reports) out.push_back(report_json(r).dump());
	return out;
}

}

TEST_CASE("data files match the embedded lists")
{
	const auto first = read_list("bad_primes_first_run.txt");
	const auto fin = read_list("bad_primes_final.txt");
	const auto a = published_first_run_bad();
	const auto b = published_final_bad();
	CHECK(first == std::vector<u64>(a.begin(), a.end()));
	CHECK(fin == std::vector<u64>(b.begin(), b.end()));
	CHECK(first.size() == 112);
	CHECK(fin.size() == 25);
}

TEST_CASE("stage names and lists")
{
	for (const Stage s : escalation_order) CHECK(parse_stage(stage_name(s)) == s);
	CHECK(!parse_stage("none").has_value());
	CHECK(parse_stage_list("all").size() == 5);
	CHECK(parse_stage_list("lemma,fallback") == std::vector<Stage>{Stage::lemma, Stage::fallback});
	CHECK_THROWS_AS(parse_stage_list("lemma,,fallback"), std::invalid_argument);
	CHECK_THROWS_AS(parse_stage_list("magic"), std::invalid_argument);
	CHECK_THROWS(stage_config(Stage::brute));
}

TEST_CASE("escalation picks the first certifying stage")
{
	RangeOptions opts;
	CHECK(verify_prime(541, opts).stage == Stage::fallback);     // on the final bad list
	CHECK(verify_prime(5, opts).stage == Stage::none);           // residue 3 is never reached
	CHECK(verify_prime(7, opts).stage == Stage::brute);
	CHECK(verify_prime(1000003, opts).stage == Stage::lemma);

	RangeOptions lemma_only;
	lemma_only.stages = {Stage::lemma};
	const auto r = verify_prime(541, lemma_only);
	CHECK(!r.certified());
	CHECK(r.error.empty());
	CHECK(report_json(r)["method"] == "none");
}

TEST_CASE("parallel and serial range verification agree")
{
	RangeOptions opts;
	opts.block_size = 17;
	opts.workers = 3;
	std::vector<VerificationReport> par, ser;
	verify_range(5, 20000, opts, [&](auto block) { par.insert(par.end(), block.begin(), block.end()); });
	verify_range_serial(5, 20000, opts, [&](auto block) { ser.insert(ser.end(), block.begin(), block.end()); });
	CHECK(stable_lines(par) == stable_lines(ser));
	CHECK(par.size() == 2262 - 3);    // pi(20000) without 2, 3, 5
	for (size_t i = 1; i < par.size(); ++i) CHECK(par[i - 1].p < par[i].p);
	for (const auto & r : par) CHECK(r.certified());
	CHECK_THROWS(collect_range(100, 50, opts));
}

TEST_CASE("list comparison")
{
	const std::vector<u64> ours{1, 2, 3, 5}, theirs{2, 3, 3, 7};
	const auto c = compare_lists(ours, theirs);
	CHECK(c.common == std::vector<u64>{2, 3});
	CHECK(c.only_ours == std::vector<u64>{1, 5});
	CHECK(c.only_published == std::vector<u64>{7});
}

TEST_CASE("report formats")
{
	VerificationReport r;
	r.p = 13;
	r.stage = Stage::fallback;
	r.certificate = FallbackCertificate{{0, 1, 2}};
	CHECK(report_json(r).dump() == R"({"p":13,"stage":"fallback","method":"fallback","s_list":[0,1,2]})");
	r.p = 1000003;
	r.stage = Stage::lemma;
	r.certificate = LemmaCertificate{1000003, 3, 10, 7, 100000};
	CHECK(report_json(r).dump() == R"({"p":1000003,"stage":"lemma","method":"lemma","a":3,"v":10,"b":7})");
	CHECK(report_line(r, ReportFormat::csv).rfind("1000003,lemma,lemma,", 0) == 0);
	CHECK(parse_format("csv") == ReportFormat::csv);
	CHECK(!parse_format("xml").has_value());
}

TEST_CASE("checkpoint resume reproduces an uninterrupted run")
{
	const auto dir = std::filesystem::temp_directory_path() / "faccover_test_resume";
	std::filesystem::remove_all(dir);
	std::filesystem::create_directories(dir);
	RangeOptions opts;
	opts.block_size = 50;
	const std::string hash = config_hash(opts, ReportFormat::jsonl);

	const auto run = [&](const u64 lo, const u64 hi, const std::filesystem::path & out, const std::optional<u64> resume) {
		ReportWriter writer(out, ReportFormat::jsonl, resume);
		verify_range_serial(lo, hi, opts, [&](const std::span<const VerificationReport> block) {
			writer.write(block);
			writer.flush();
			write_checkpoint(dir / "cp.json", {block.back().p, hash});
		});
	};

	run(5, 30000, dir / "full.jsonl", std::nullopt);
	// stop part way, leave a stray partial tail, then resume from the checkpoint
	run(5, 12000, dir / "part.jsonl", std::nullopt);
	{
		std::ofstream tail(dir / "part.jsonl", std::ios::app);
		tail << R"({"p":12007,"stage":"lemma")" << '\n';
		tail << R"({"p":12011,"stage":"lemma","method":"lemma"})" << '\n';
	}
	const auto cp = read_checkpoint(dir / "cp.json");
	REQUIRE(cp.has_value());
	CHECK(cp->config_hash == hash);
	CHECK(cp->last_fully_verified_prime <= 12000);
	run(cp->last_fully_verified_prime, 30000, dir / "part.jsonl", cp->last_fully_verified_prime);
	CHECK(slurp(dir / "part.jsonl") == slurp(dir / "full.jsonl"));

	RangeOptions other = opts;
	other.brute_ceiling = 500;
	CHECK(config_hash(other, ReportFormat::jsonl) != hash);
	CHECK(config_hash(opts, ReportFormat::csv) != hash);
	std::filesystem::remove_all(dir);
}

TEST_CASE("small range: every report agrees with the brute-force oracle")
{
	const auto reports = collect_range(5, 100, RangeOptions{});
	CHECK(reports.size() == 22);
	for (const auto & r : reports)
	{
		INFO("p = " << r.p);
		CHECK(r.certified());
		CHECK(brute_cover(OddPrime(r.p)).covered);
		if (const auto * f = std::get_if<FallbackCertificate>(&*r.certificate)) CHECK(verify_fallback(OddPrime(r.p), *f));
		if (const auto * l = std::get_if<LemmaCertificate>(&*r.certificate)) CHECK(verify_certificate(*l));
	}
}
