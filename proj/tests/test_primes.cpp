#include <cmath>
#include <stdexcept>

#include "doctest.h"

#include "faccover/modmath.hpp"
#include "faccover/primes.hpp"

using namespace faccover;

TEST_CASE("sieve agrees with trial division")
{
	const PrimeList list = sieve_upto(200000);
	std::vector<u32> oracle;
	for (u64 n = 2; n <= 200000; ++n)
	{
		if (is_prime_trial(n)) oracle.push_back(u32(n));
	}
	CHECK(list.primes == oracle);
	CHECK(list.nth(1) == 2);
	CHECK(list.nth(100) == 541);
}

TEST_CASE("sieve segment edges")
{
	// limits around the segment size and tiny limits
	for (const u64 n : {0ULL, 1ULL, 2ULL, 3ULL, 4ULL, 262143ULL, 262144ULL, 262145ULL, 524289ULL})
	{
		const PrimeList list = sieve_upto(n);
		u64 expect = 0;
		for (u64 k = 2; k <= n; ++k) expect += is_prime_trial(k);
		CHECK(list.primes.size() == expect);
	}
}

TEST_CASE("prime counts")
{
	const PrimeList & list = shared_primes();
	CHECK(prime_count(10, list) == 4);
	CHECK(prime_count(1163, list) == 192);
	CHECK(prime_count(1163.9, list) == 192);
	CHECK(prime_count(1e6, list) == 78498);
	CHECK(prime_count(3.242e6, list) == 233053);
	CHECK(prime_count(1.5, list) == 0);
	CHECK_THROWS_AS(prime_count(1e9, list), std::out_of_range);
	CHECK(prime_sum_upto(10, list) == 17);
	CHECK(prime_sum_upto(100, list) == 1060);
}

TEST_CASE("bound names round-trip")
{
	for (const Bound b : all_bounds)
	{
		REQUIRE(parse_bound(bound_name(b)).has_value());
		CHECK(*parse_bound(bound_name(b)) == b);
	}
	CHECK(!parse_bound("nonsense").has_value());
}

TEST_CASE("bounds hold on a short range above their validity")
{
	const PrimeList & list = shared_primes();
	for (const Bound b : all_bounds)
	{
		if (b == Bound::prime_sum_bound) continue;
		const u64 lo = bound_validity(b);
		const auto r = check_bound(b, lo, lo + 20000, list);
		INFO(r.name);
		CHECK(r.holds());
	}
	CHECK_THROWS_AS(check_bound(Bound::dusart_two_sided, 598, 1000, list), std::invalid_argument);
	CHECK_THROWS_AS(check_bound(Bound::dusart_two_sided, 600, 100000000, list), std::invalid_argument);
}

TEST_CASE("prime sum bound against direct summation")
{
	const PrimeList & list = shared_primes();
	const auto r = check_bound(Bound::prime_sum_bound, 970, 1200, list);
	for (const auto & v : r.violations)
	{
		CHECK(v.lhs == doctest::Approx(double(prime_sum_upto(double(v.at), list))));
		CHECK(v.rhs == doctest::Approx(double(v.at) * double(v.at) / 21.4));
	}
	// at y = 970 the sum of primes is 71208, well above 970^2/21.4
	CHECK(prime_sum_upto(970, list) == 71208);
	CHECK(!r.holds());
	CHECK(prime_sum_bound_rhs_from_x(2.0 * 970 * 970) == doctest::Approx(prime_sum_bound_rhs(970)));
}
