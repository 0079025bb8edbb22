#include <cmath>
#include <stdexcept>

#include "doctest.h"

#include "faccover/analytic.hpp"
#include "faccover/primes.hpp"

using namespace faccover;
using namespace faccover::analytic;

TEST_CASE("derived parameters")
{
	CHECK_THROWS_AS(derive_params(2.0), std::domain_error);
	CHECK_THROWS_AS(derive_params(1.5), std::domain_error);
	const auto a = derive_params(3.0);
	CHECK(a.beta == doctest::Approx(5.0 / 3.0));
	CHECK(a.rho == doctest::Approx(1.0 / 6.0));
	for (const double lambda : standard_lambda_grid())
	{
		const auto q = derive_params(lambda);
		const double edge = 1.0 / (2.0 * q.beta);
		// 1 - x > exp(-mu x) inside the interval, equality at its right end
		for (int i = 1; i < 100; ++i)
		{
			const double x = edge * i / 100.0;
			CHECK(1.0 - x > std::exp(-q.mu * x));
		}
		CHECK(1.0 - edge == doctest::Approx(std::exp(-q.mu * edge)));
		// any smaller mu fails near the end
		const double x = edge * 0.999;
		CHECK(1.0 - x < std::exp(-(q.mu * 0.99) * x));
		CHECK(q.gamma == doctest::Approx(q.mu * (3 * lambda - 2) * lambda / (2 * (2 * lambda - 1) * (lambda - 2))));
	}
}

TEST_CASE("recurrence against a direct loop")
{
	for (const double lambda : standard_lambda_grid())
	{
		const double beta = 2.0 - 1.0 / lambda;
		int n = 0;
		for (double s = 1.0 / 206.0; s < 0.5; s = (beta - s) * s) ++n;
		const auto t = run_recurrence(1.0 / 206.0, lambda);
		CHECK(t.n == n);
		CHECK(t.s.size() == size_t(n) + 1);
		CHECK(t.s.back() >= 0.5);
		for (int i = 0; i < n; ++i) CHECK(t.s[i] < 0.5);
		CHECK(t.n <= n0_bound(1.0 / 206.0, lambda));
	}
	CHECK(run_recurrence(1.0 / 206.0, 3.0).n == 11);
	CHECK(run_recurrence(1.0 / 206.0, 2.2).n == 15);
	CHECK_THROWS_AS(run_recurrence(0.6, 3.0), std::domain_error);
}

TEST_CASE("delta scan")
{
	const auto grid = standard_lambda_grid();
	REQUIRE(grid.size() == 30);
	CHECK(grid.front() == doctest::Approx(2.1));
	CHECK(grid.back() == doctest::Approx(5.0));
	const auto scan = delta_scan(grid, 1.0 / 206.0);
	CHECK(scan.points.size() == 30);
	for (const auto & pt : scan.points) CHECK(scan.best.delta <= pt.delta);
	CHECK(scan.best.lambda == doctest::Approx(2.6));
	CHECK(scan.best.n == 12);
	CHECK(scan.best.delta == doctest::Approx(31.212));
	const double none[] = {0};
	CHECK_THROWS(delta_scan(std::span<const double>(none, 0), 0.01));
}

TEST_CASE("window width")
{
	const double x = 1000003;
	CHECK(window_width(1000003, 3.0) == 2 * u64(std::floor(3.0 * std::sqrt(x) * std::log(x))) + 1);
	CHECK(window_width(1000003, 3.0) % 2 == 1);
}

TEST_CASE("thresholds")
{
	const auto m = threshold_master(3.0);
	CHECK(m.verified);
	CHECK(m.x_star == 9099307);
	CHECK(m.last_failure == m.x_star - 1);
	CHECK(master_inequality_holds(double(m.x_star), 3.0));
	CHECK(!master_inequality_holds(double(m.x_star - 1), 3.0));

	const auto f = threshold_final(28.62);
	CHECK(f.verified);
	CHECK(f.x_star == 3241271);
	CHECK(final_inequality_holds(double(f.x_star), 28.62));
	CHECK(!final_inequality_holds(double(f.x_star - 1), 28.62));
	// monotone escape: a larger delta needs a larger threshold
	CHECK(threshold_final(31.212).x_star > f.x_star);
	CHECK_THROWS_AS(threshold_final(0.0), std::domain_error);
}

TEST_CASE("s1 lower bound against the prime-pair count")
{
	// b_1 = C(pi(y), 2) with y = sqrt(x/2) should dominate x / (log(x/2e))^2 for x >= 9.1e6
	const PrimeList & list = shared_primes();
	for (const double x : {9.1e6, 2e7, 1e8, 1e9})
	{
		const double n = double(prime_count(std::sqrt(x / 2.0), list));
		CHECK(n * (n - 1) / 2.0 / x >= s1_lower_bound(x));
	}
	CHECK(s1_lower_bound(9.1e6) > 1.0 / 206.0);
}
