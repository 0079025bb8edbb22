#include <random>
#include <stdexcept>

#include "doctest.h"

#include "faccover/modmath.hpp"

using namespace faccover;

namespace {

// brute-force order of a modulo p
u64 order_of(u64 a, u64 p)
{
	u64 x = a % p, k = 1;
	while (x != 1) { x = x * a % p; ++k; }
	return k;
}

}

TEST_CASE("OddPrime rejects composites, 2 and 1")
{
	CHECK_THROWS_AS(OddPrime(1), std::invalid_argument);
	CHECK_THROWS_AS(OddPrime(2), std::invalid_argument);
	CHECK_THROWS_AS(OddPrime(9), std::invalid_argument);
	CHECK_THROWS_AS(OddPrime(3241), std::invalid_argument);    // 7 * 463
	CHECK(OddPrime(3).value() == 3);
	CHECK(u64(OddPrime(3241253)) == 3241253);
}

TEST_CASE("pow_mod small values and Fermat")
{
	const OddPrime p(1000003);
	CHECK(pow_mod(2, 10, p) == 1024);
	CHECK(pow_mod(0, 0, p) == 1);
	CHECK(pow_mod(5, 0, p) == 1);
	std::mt19937_64 rng(7);
	for (int i = 0; i < 200; ++i)
	{
		const u64 a = 1 + rng() % (p - 1);
		CHECK(pow_mod(a, p - 1, p) == 1);
	}
	// large prime above 2^32 exercises the 128-bit product
	const OddPrime big(1000000000039ULL);
	CHECK(pow_mod(3, big - 1, big) == 1);
}

TEST_CASE("inverse_mod")
{
	const OddPrime p(7919);
	for (u64 x = 1; x < p; ++x) CHECK(mul_mod(x, inverse_mod(x, p), p) == 1);
	CHECK_THROWS_AS(inverse_mod(0, p), std::domain_error);
	CHECK_THROWS_AS(inverse_mod(7919 * 3, p), std::domain_error);
}

TEST_CASE("factorial table and Wilson")
{
	const OddPrime p(13);
	const FactorialTable t(p);
	CHECK(t[0] == 1);
	CHECK(t[1] == 1);
	CHECK(t[5] == 120 % 13);
	CHECK(t[12] == 12);
	CHECK(t.values().size() == 13);
	for (const u64 q : {3ULL, 5ULL, 101ULL, 3241253ULL})
	{
		const auto tab = build_factorial_table(OddPrime(q));
		CHECK(tab[q - 1] == q - 1);
		// (p-2)! = 1
		CHECK(tab[q - 2] == 1);
	}
}

TEST_CASE("distinct prime factors")
{
	CHECK(distinct_prime_factors(1) == std::vector<u64>{});
	CHECK(distinct_prime_factors(12) == std::vector<u64>{2, 3});
	CHECK(distinct_prime_factors(1000002) == std::vector<u64>{2, 3, 166667});
	CHECK(distinct_prime_factors(2 * 2 * 7 * 7 * 7) == std::vector<u64>{2, 7});
	// list shorter than sqrt(n): trial division continues past it
	const std::vector<u32> tiny{2, 3, 5};
	CHECK(distinct_prime_factors(2 * 3 * 101 * 103, tiny) == std::vector<u64>{2, 3, 101, 103});
	CHECK(distinct_prime_factors(999983, tiny) == std::vector<u64>{999983});
}

TEST_CASE("primitive roots against brute-force order")
{
	for (const u64 q : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 101ULL, 541ULL, 1009ULL})
	{
		const OddPrime p(q);
		const auto f = distinct_prime_factors(q - 1);
		for (u64 a = 1; a < q; ++a) CHECK(is_primitive_root(a, p, f) == (order_of(a, q) == q - 1));
		CHECK_THROWS(is_primitive_root(q, p, f));
	}
	CHECK(is_primitive_root(2, OddPrime(13), distinct_prime_factors(12)));
	CHECK(!is_primitive_root(3, OddPrime(13), distinct_prime_factors(12)));
}

TEST_CASE("discrete log round trip")
{
	const OddPrime p(1000003);
	const auto f = distinct_prime_factors(p - 1);
	u64 g = 2;
	while (!is_primitive_root(g, p, f)) ++g;
	const DiscreteLog log(g, p);
	CHECK(log.base() == g);
	CHECK(log(1) == 0);
	CHECK(log(g) == 1);
	std::mt19937_64 rng(11);
	for (int i = 0; i < 500; ++i)
	{
		const u64 t = rng() % (p - 1);
		CHECK(log(pow_mod(g, t, p)) == t);
		const u64 m = 1 + rng() % (p - 1);
		CHECK(pow_mod(g, log(m), p) == m);
	}
	CHECK_THROWS_AS(DiscreteLog(1, p), std::domain_error);

	// exhaustive on a small prime
	const OddPrime s(101);
	for (u64 m = 1; m < 101; ++m) CHECK(pow_mod(2, discrete_log(2, m, s), s) == m);
}
