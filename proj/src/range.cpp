#include "faccover/range.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>

#include "faccover/primes.hpp"

namespace faccover {

namespace {

constexpr u64 first_run_bad[] = {
	541, 601, 661, 709, 853, 911, 1009, 1021, 1091, 1117, 1171, 1297, 1303, 1399, 1429, 1453, 1531, 1549, 1621,
	1811, 2029, 2351, 2383, 2441, 3001, 3299, 3319, 3559, 3709, 3877, 4129, 5749, 5881, 7591, 23911, 31771, 46861,
	71761, 71761, 93481, 93481, 103091, 190321, 266701, 267901, 290041, 412387, 448141, 453181, 494101, 509389,
	513991, 609757, 661093, 674701, 690541, 698491, 775861, 776179, 781051, 790861, 975493, 1026061, 1035829,
	1067557, 1152421, 1162951, 1242361, 1308421, 1309699, 1364731, 1418551, 1444873, 1445137, 1506121, 1520851,
	1732669, 1853461, 1863541, 1895011, 1897561, 2057701, 2080597, 2100121, 2149351, 2165671, 2171311, 2175109,
	2183833, 2238661, 2248171, 2270641, 2273431, 2312311, 2319241, 2370889, 2441041, 2447761, 2480479, 2535331,
	2561731, 2656351, 2697301, 2708581, 2728261, 2800141, 2831011, 2857951, 2868139, 3014371, 3026971, 3126061};

constexpr u64 final_bad[] = {541,  601,  661,  709,  853,  911,  1009, 1021, 1091, 1117, 1171, 1297, 1399,
                             1429, 1453, 1531, 1549, 1621, 1811, 2029, 2351, 2441, 3001, 3319, 5749};

std::vector<u32> primes_in(const u64 lo, const u64 hi)
{
	const PrimeList & list = shared_primes();
	if (hi > list.limit) throw std::out_of_range("range beyond the shared sieve (" + std::to_string(list.limit) + ")");
	const auto first = std::upper_bound(list.primes.begin(), list.primes.end(), lo);
	const auto last = std::upper_bound(list.primes.begin(), list.primes.end(), hi);
	return {first, last};
}

void check_range(const u64 lo, const u64 hi)
{
	if (lo < 5 || hi <= lo) throw std::invalid_argument("range must satisfy 5 <= lo < hi");
}

}

std::string_view stage_name(const Stage s)
{
	switch (s)
	{
		case Stage::lemma: return "lemma";
		case Stage::lemma_wide: return "lemma-wide";
		case Stage::lemma_extended: return "lemma-extended";
		case Stage::fallback: return "fallback";
		case Stage::brute: return "brute";
		case Stage::none: return "none";
	}
	return "none";
}

std::optional<Stage> parse_stage(const std::string_view name)
{
	for (const Stage s : escalation_order)
	{
		if (stage_name(s) == name) return s;
	}
	return std::nullopt;
}

SearchConfig stage_config(const Stage s)
{
	switch (s)
	{
		case Stage::lemma: return SearchConfig{25, 3.0, 0};
		case Stage::lemma_wide: return SearchConfig{25, 10.0, 0};
		case Stage::lemma_extended: return SearchConfig{50, 10.0, 0};
		default: throw std::invalid_argument("not a lemma stage");
	}
}

bool RangeOptions::enabled(const Stage s) const { return std::find(stages.begin(), stages.end(), s) != stages.end(); }

std::vector<Stage> parse_stage_list(const std::string_view list)
{
	if (list == "all") return {std::begin(escalation_order), std::end(escalation_order)};
	std::vector<Stage> out;
	size_t pos = 0;
	while (pos <= list.size())
	{
		const size_t comma = std::min(list.find(',', pos), list.size());
		const std::string_view name = list.substr(pos, comma - pos);
		const auto s = parse_stage(name);
		if (!s) throw std::invalid_argument("unknown stage '" + std::string(name) + "'");
		out.push_back(*s);
		pos = comma + 1;
	}
	return out;
}

VerificationReport verify_prime(const u64 p, const RangeOptions & opts)
{
	const auto start = std::chrono::steady_clock::now();
	VerificationReport r;
	r.p = p;
	try
	{
		const OddPrime q(p);
		std::vector<u64> factors;
		for (const Stage s : escalation_order)
		{
			if (!opts.enabled(s)) continue;
			if (s == Stage::lemma || s == Stage::lemma_wide || s == Stage::lemma_extended)
			{
				if (p <= 5) continue;
				if (factors.empty()) factors = distinct_prime_factors(p - 1, shared_primes().primes);
				if (auto cert = find_certificate(q, stage_config(s), factors)) r.certificate = *cert;
			}
			else if (s == Stage::fallback)
			{
				if (auto cert = fallback_cover(q)) r.certificate = std::move(*cert);
			}
			else if (s == Stage::brute && p <= opts.brute_ceiling)
			{
				const BruteCover cover = brute_cover(q, opts.brute_ceiling);
				if (cover.covered) r.certificate = BruteCertificate{cover.max_cost()};
			}
			if (r.certificate) { r.stage = s; break; }
		}
	}
	catch (const std::exception & e)
	{
		r.certificate.reset();
		r.stage = Stage::none;
		r.error = e.what();
	}
	r.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
	return r;
}

void verify_range(const u64 lo, const u64 hi, const RangeOptions & opts, const ReportSink & sink)
{
	check_range(lo, hi);
	const auto ps = primes_in(lo, hi);
	const size_t bs = std::max<size_t>(1, opts.block_size);
	const size_t nblocks = (ps.size() + bs - 1) / bs;
	const int threads = opts.workers > 0 ? opts.workers : omp_get_max_threads();
	// a wave is a few blocks per thread; the sink sees each wave's blocks in order
	const size_t wave = size_t(std::max(1, threads)) * 4;

	std::vector<std::vector<VerificationReport>> blocks(wave);
	for (size_t first = 0; first < nblocks; first += wave)
	{
		const size_t count = std::min(wave, nblocks - first);
		#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
		for (long j = 0; j < long(count); ++j)
		{
			const size_t begin = (first + j) * bs, end = std::min(ps.size(), begin + bs);
			auto & out = blocks[j];
			out.clear();
			for (size_t i = begin; i < end; ++i) out.push_back(verify_prime(ps[i], opts));
		}
		for (size_t j = 0; j < count; ++j) sink(blocks[j]);
	}
}

void verify_range_serial(const u64 lo, const u64 hi, const RangeOptions & opts, const ReportSink & sink)
{
	check_range(lo, hi);
	const auto ps = primes_in(lo, hi);
	const size_t bs = std::max<size_t>(1, opts.block_size);
	std::vector<VerificationReport> block;
	for (size_t begin = 0; begin < ps.size(); begin += bs)
	{
		block.clear();
		for (size_t i = begin; i < std::min(ps.size(), begin + bs); ++i) block.push_back(verify_prime(ps[i], opts));
		sink(block);
	}
}

std::vector<VerificationReport> collect_range(const u64 lo, const u64 hi, const RangeOptions & opts)
{
	std::vector<VerificationReport> all;
	verify_range(lo, hi, opts, [&all](const std::span<const VerificationReport> block) {
		all.insert(all.end(), block.begin(), block.end());
	});
	return all;
}

std::span<const u64> published_first_run_bad() { return first_run_bad; }
std::span<const u64> published_final_bad() { return final_bad; }

ListComparison compare_lists(const std::span<const u64> ours, const std::span<const u64> published)
{
	std::vector<u64> a(ours.begin(), ours.end()), b(published.begin(), published.end());
	for (auto * v : {&a, &b})
	{
		std::sort(v->begin(), v->end());
		v->erase(std::unique(v->begin(), v->end()), v->end());
	}
	ListComparison c;
	std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(c.common));
	std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(c.only_ours));
	std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(c.only_published));
	return c;
}

namespace {

std::vector<u64> lemma_survivors(const std::vector<u64> & candidates, const SearchConfig & cfg)
{
	std::vector<uint8_t> bad(candidates.size(), 0);
	#pragma omp parallel for schedule(dynamic, 256)
	for (long i = 0; i < long(candidates.size()); ++i)
	{
		bad[i] = !find_certificate(OddPrime(candidates[i]), cfg).has_value();
	}
	std::vector<u64> out;
	for (size_t i = 0; i < candidates.size(); ++i)
	{
		if (bad[i]) out.push_back(candidates[i]);
	}
	return out;
}

}

BadLists reproduce_bad_lists(const u64 lo, const u64 hi)
{
	if (lo <= 5 || hi <= lo) throw std::invalid_argument("range must satisfy 5 < lo < hi");
	std::vector<u64> all;
	for (const u32 q : primes_in(lo - 1, hi - 1)) all.push_back(q);

	BadLists out;
	out.lemma_bad = lemma_survivors(all, stage_config(Stage::lemma));
	out.wide_bad = lemma_survivors(out.lemma_bad, stage_config(Stage::lemma_wide));
	out.extended_bad = lemma_survivors(out.wide_bad, stage_config(Stage::lemma_extended));
	for (const u64 p : out.extended_bad)
	{
		if (!fallback_cover(OddPrime(p))) out.fallback_failures.push_back(p);
	}
	for (const u64 p : out.wide_bad)
	{
		if (p > 7591) out.wide_above_7591.push_back(p);
	}
	out.first_run = compare_lists(out.lemma_bad, published_first_run_bad());
	out.final_run = compare_lists(out.extended_bad, published_final_bad());
	return out;
}

}
