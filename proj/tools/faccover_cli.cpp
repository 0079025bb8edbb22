#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "faccover/analytic.hpp"
#include "faccover/certify.hpp"
#include "faccover/growth.hpp"
#include "faccover/primes.hpp"
#include "faccover/range.hpp"
#include "faccover/report.hpp"

using namespace faccover;

namespace {

std::vector<double> parse_grid(const std::string & text)
{
	if (text == "standard") return analytic::standard_lambda_grid();
	std::vector<double> grid;
	std::stringstream ss(text);
	for (std::string item; std::getline(ss, item, ',');) grid.push_back(std::stod(item));
	return grid;
}

std::pair<u64, u64> parse_range(const std::string & text)
{
	const auto colon = text.find(':');
	if (colon == std::string::npos) throw std::invalid_argument("range must be lo:hi");
	return {std::stoull(text.substr(0, colon)), std::stoull(text.substr(colon + 1))};
}

int run_verify(const u64 lo, const u64 hi, const std::string & stages, int workers, const std::string & format_name,
               const std::string & out_path, const std::string & checkpoint_path, const bool resume, const u64 ceiling)
{
	if (const char * env = std::getenv("FACCOVER_WORKERS")) workers = std::atoi(env);
	const auto format = parse_format(format_name);
	if (!format) throw std::invalid_argument("format must be jsonl or csv");

	RangeOptions opts;
	opts.stages = parse_stage_list(stages);
	opts.workers = workers;
	opts.brute_ceiling = ceiling;
	const std::string hash = config_hash(opts, *format);

	if (hi <= lo) throw std::invalid_argument("--to must exceed --from");
	u64 start = lo;
	std::optional<u64> resume_after;
	if (resume)
	{
		if (checkpoint_path.empty() || out_path.empty()) throw std::invalid_argument("--resume needs --checkpoint and --out");
		if (const auto cp = read_checkpoint(checkpoint_path))
		{
			if (cp->config_hash != hash) throw std::runtime_error("checkpoint was written with a different configuration");
			start = std::max(lo, cp->last_fully_verified_prime);
			resume_after = start;
		}
	}

	u64 reported = 0, uncertified = 0;
	std::unique_ptr<ReportWriter> writer;
	if (!out_path.empty()) writer = std::make_unique<ReportWriter>(out_path, *format, resume_after);
	else if (*format == ReportFormat::csv) std::cout << csv_header << '\n';

	const auto sink = [&](const std::span<const VerificationReport> block) {
		for (const auto & r : block)
		{
			++reported;
			if (!r.certified()) ++uncertified;
			if (!writer) std::cout << report_line(r, *format) << '\n';
		}
		if (writer)
		{
			writer->write(block);
			writer->flush();
			if (!checkpoint_path.empty() && !block.empty()) write_checkpoint(checkpoint_path, {block.back().p, hash});
		}
	};
	if (start < hi) verify_range(start, hi, opts, sink);

	std::cerr << "verified " << reported << " primes in (" << start << ", " << hi << "], uncertified: " << uncertified
	          << '\n';
	return uncertified == 0 ? 0 : 1;
}

int run_analytic(const std::string & grid_text, const double s1)
{
	const auto grid = parse_grid(grid_text);
	const auto scan = analytic::delta_scan(grid, s1);
	for (const auto & pt : scan.points)
	{
		const auto params = analytic::derive_params(pt.lambda);
		const auto master = analytic::threshold_master(pt.lambda);
		const auto fin = analytic::threshold_final(pt.delta);
		std::cout << analytic_point_json(pt, params, master.x_star, fin.x_star).dump() << '\n';
	}
	ordered_json best;
	best["best_lambda"] = scan.best.lambda;
	best["delta_min"] = scan.best.delta;
	best["threshold_final"] = analytic::threshold_final(scan.best.delta).x_star;
	std::cerr << best.dump() << '\n';
	return 0;
}

int run_bounds(const std::string & name, const std::string & range_text)
{
	std::vector<Bound> which;
	if (name == "all") which.assign(std::begin(all_bounds), std::end(all_bounds));
	else if (const auto b = parse_bound(name)) which.push_back(*b);
	else throw std::invalid_argument("unknown bound '" + name + "'");

	const auto [lo, hi] = range_text.empty() ? std::pair<u64, u64>{0, 1000000} : parse_range(range_text);
	const PrimeList & list = shared_primes();
	bool ok = true;
	for (const Bound b : which)
	{
		const u64 from = std::max(lo, bound_validity(b));
		const auto report = check_bound(b, from, hi, list);
		ok = ok && report.holds();
		std::cout << bound_report_json(report).dump() << '\n';
	}
	return ok ? 0 : 1;
}

int run_growth(const u64 p, const double lambda, const int k)
{
	const OddPrime q(p);
	growth::GrowthTrace trace;
	if (k > 0)
	{
		const auto init = growth::init_pairs(q);
		trace = growth::run_growth_from(init.set, init.u1, growth::kfold_window(q, k), 1000);
	}
	else
	{
		trace = growth::run_growth(q, lambda);
	}
	for (const auto & step : trace.steps) std::cout << growth_step_json(step).dump() << '\n';
	ordered_json summary;
	summary["p"] = trace.p;
	summary["window"] = trace.window;
	summary["b1"] = trace.b1;
	summary["U1"] = trace.u1;
	summary["steps"] = trace.steps.size();
	summary["U_final"] = trace.u_final;
	summary["within_budget"] = trace.within_budget;
	std::cerr << summary.dump() << '\n';
	return trace.reached_full ? 0 : 1;
}

int run_witness(const u64 p, const u64 target)
{
	const OddPrime q(p);
	std::optional<LemmaCertificate> cert;
	for (const Stage s : {Stage::lemma, Stage::lemma_wide, Stage::lemma_extended})
	{
		if ((cert = find_certificate(q, stage_config(s)))) break;
	}
	if (!cert)
	{
		std::cerr << p << " has no lemma certificate; witnesses need one\n";
		return 1;
	}
	const WitnessBuilder build(*cert);
	const PartitionWitness w = build(target);
	ordered_json j = certificate_json(p, *cert);
	j["target"] = w.target;
	j["parts"] = ordered_json::array();
	for (const auto & [part, count] : w.parts) j["parts"].push_back({part, count});
	j["verified"] = check_witness(w, build.factorials());
	std::cout << j.dump() << '\n';
	return j["verified"].get<bool>() ? 0 : 1;
}

int run_reproduce(const u64 lo, const u64 hi)
{
	const BadLists lists = reproduce_bad_lists(lo, hi);
	const auto cmp = [](const ListComparison & c) {
		ordered_json j;
		j["common"] = c.common;
		j["only_ours"] = c.only_ours;
		j["only_published"] = c.only_published;
		return j;
	};
	ordered_json j;
	j["lemma_bad"] = lists.lemma_bad;
	j["wide_bad"] = lists.wide_bad;
	j["extended_bad"] = lists.extended_bad;
	j["fallback_failures"] = lists.fallback_failures;
	j["first_run_vs_published"] = cmp(lists.first_run);
	j["final_vs_published"] = cmp(lists.final_run);
	j["wide_above_7591"] = lists.wide_above_7591;
	std::cout << j.dump(2) << '\n';
	return lists.fallback_failures.empty() ? 0 : 1;
}

}

int main(int argc, char ** argv)
{
	CLI::App app{"Coverage of Z_p* by products of factorials: certificates, bounds, growth simulation"};
	app.require_subcommand(1);

	auto * verify = app.add_subcommand("verify", "certify every prime in (from, to]");
	u64 v_from = 5, v_to = verification_limit, v_ceiling = default_brute_ceiling;
	std::string v_stages = "all", v_format = "jsonl", v_out, v_checkpoint;
	int v_workers = 0;
	bool v_resume = false;
	verify->add_option("--from", v_from, "exclusive lower end");
	verify->add_option("--to", v_to, "inclusive upper end");
	verify->add_option("--stages", v_stages, "comma list of lemma,lemma-wide,lemma-extended,fallback,brute or 'all'");
	verify->add_option("--workers", v_workers, "worker threads (env FACCOVER_WORKERS overrides)");
	verify->add_option("--format", v_format, "jsonl or csv");
	verify->add_option("--out", v_out, "report file (stdout if omitted)");
	verify->add_option("--checkpoint", v_checkpoint, "checkpoint file, rewritten after every block");
	verify->add_flag("--resume", v_resume, "continue from the checkpoint");
	verify->add_option("--brute-ceiling", v_ceiling, "largest p handed to the brute-force stage");

	auto * analytic_cmd = app.add_subcommand("analytic", "step-count and threshold calculus per lambda");
	std::string a_grid = "standard";
	double a_s1 = 1.0 / 206.0;
	analytic_cmd->add_option("--lambda-grid", a_grid, "comma list of lambda values or 'standard'");
	analytic_cmd->add_option("--s1", a_s1, "initial density");

	auto * bounds = app.add_subcommand("bounds", "check explicit prime-counting inequalities");
	std::string b_name = "all", b_range;
	bounds->add_option("--name", b_name, "bound name or 'all'");
	bounds->add_option("--range", b_range, "lo:hi (default validity:1000000)");

	auto * growth_cmd = app.add_subcommand("growth", "simulate multiplicative set growth");
	u64 g_p = 0;
	double g_lambda = 3.0;
	int g_k = 0;
	growth_cmd->add_option("--p", g_p, "prime modulus")->required();
	growth_cmd->add_option("--lambda", g_lambda, "window parameter");
	growth_cmd->add_option("--k", g_k, "use the p^(1/2+1/k) window instead");

	auto * witness = app.add_subcommand("witness", "factorial partition of p-1 hitting a target residue");
	u64 w_p = 0, w_target = 1;
	witness->add_option("--p", w_p, "prime modulus")->required();
	witness->add_option("--target", w_target, "target residue")->required();

	auto * reproduce = app.add_subcommand("reproduce-bad-lists", "rerun the staged search and diff the printed lists");
	u64 r_from = 541, r_to = verification_limit;
	reproduce->add_option("--from", r_from, "inclusive lower end");
	reproduce->add_option("--to", r_to, "exclusive upper end");

	CLI11_PARSE(app, argc, argv);

	try
	{
		if (*verify) return run_verify(v_from, v_to, v_stages, v_workers, v_format, v_out, v_checkpoint, v_resume, v_ceiling);
		if (*analytic_cmd) return run_analytic(a_grid, a_s1);
		if (*bounds) return run_bounds(b_name, b_range);
		if (*growth_cmd) return run_growth(g_p, g_lambda, g_k);
		if (*witness) return run_witness(w_p, w_target);
		if (*reproduce) return run_reproduce(r_from, r_to);
	}
	catch (const std::exception & e)
	{
		std::cerr << "error: " << e.what() << '\n';
		return 2;
	}
	return 0;
}
