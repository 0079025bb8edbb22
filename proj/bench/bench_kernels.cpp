#include <benchmark/benchmark.h>

#include "faccover/certify.hpp"
#include "faccover/range.hpp"

using namespace faccover;

namespace {

void BM_BruteBatchSerial(benchmark::State & state)
{
	for (auto _ : state) benchmark::DoNotOptimize(brute_cover_batch_serial(7, u64(state.range(0))));
}

void BM_BruteBatchParallel(benchmark::State & state)
{
	for (auto _ : state) benchmark::DoNotOptimize(brute_cover_batch(7, u64(state.range(0))));
}

void sink_count(const std::span<const VerificationReport> block, size_t & n) { n += block.size(); }

void BM_VerifyRangeSerial(benchmark::State & state)
{
	const RangeOptions opts;
	for (auto _ : state)
	{
		size_t n = 0;
		verify_range_serial(5, u64(state.range(0)), opts, [&n](auto block) { sink_count(block, n); });
		benchmark::DoNotOptimize(n);
	}
}

void BM_VerifyRangeParallel(benchmark::State & state)
{
	const RangeOptions opts;
	for (auto _ : state)
	{
		size_t n = 0;
		verify_range(5, u64(state.range(0)), opts, [&n](auto block) { sink_count(block, n); });
		benchmark::DoNotOptimize(n);
	}
}

void BM_FindCertificate(benchmark::State & state)
{
	const OddPrime p(u64(state.range(0)));
	const SearchConfig cfg;
	for (auto _ : state) benchmark::DoNotOptimize(find_certificate(p, cfg));
}

}

BENCHMARK(BM_BruteBatchSerial)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteBatchParallel)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyRangeSerial)->Arg(200000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyRangeParallel)->Arg(200000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FindCertificate)->Arg(1000003)->Arg(3241253);

BENCHMARK_MAIN();
