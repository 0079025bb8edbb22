#include "faccover/analytic.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace faccover::analytic {

AnalyticParams derive_params(const double lambda)
{
	if (!(lambda > 2.0)) throw std::domain_error("lambda must exceed 2, got " + std::to_string(lambda));
	AnalyticParams a;
	a.lambda = lambda;
	a.beta = 2.0 - 1.0 / lambda;
	const double ratio = std::log((4.0 * lambda - 2.0) / (3.0 * lambda - 2.0));
	a.mu = 2.0 * (2.0 * lambda - 1.0) / lambda * ratio;
	a.rho = (lambda - 2.0) / (2.0 * lambda);
	a.gamma = (3.0 * lambda - 2.0) / (lambda - 2.0) * ratio;
	return a;
}

RecurrenceTrace run_recurrence(const double s1, const double lambda)
{
	if (!(s1 > 0.0 && s1 < 0.5)) throw std::domain_error("s1 must lie in (0, 1/2)");
	const double beta = derive_params(lambda).beta;
	RecurrenceTrace trace;
	double s = s1;
	while (s < 0.5)
	{
		trace.s.push_back(s);
		s = (beta - s) * s;
	}
	trace.n = int(trace.s.size());
	trace.s.push_back(s);
	return trace;
}

long n0_bound(const double s1, const double lambda)
{
	const AnalyticParams a = derive_params(lambda);
	return 1 + long(std::floor((-std::log(2.0 * s1) + a.gamma) / std::log(a.beta)));
}

u64 window_width(const u64 p, const double lambda)
{
	const double x = double(p);
	return 2 * u64(std::floor(lambda * std::sqrt(x) * std::log(x))) + 1;
}

double s1_lower_bound(const double x)
{
	const double l = std::log(x / c1);
	return 1.0 / (l * l);
}

bool master_inequality_holds(const double x, const double lambda)
{
	const AnalyticParams a = derive_params(lambda);
	const double steps = 1.0 + (-std::log(2.0) + 2.0 * std::log(std::log(x / c1)) + a.gamma) / std::log(a.beta);
	const double lhs = steps * (2.0 * lambda * std::sqrt(x) * std::log(x) + 1.0);
	return lhs < 10.2 * x / 21.4;
}

bool final_inequality_holds(const double x, const double delta)
{
	const double t = 42.8 / 10.2 * delta * std::log(x);
	return t * t < x;
}

namespace {

constexpr double search_ceiling = 1e12;

// Scan integer points on a ratio-1.001 grid for the last failure, then bisect up to the next
// holding grid point.
Threshold search_threshold(const std::function<bool(double)> & holds, const u64 x_lo)
{
	u64 last_fail = 0, next_hold = 0;
	bool any_fail = false;
	double xg = double(x_lo);
	u64 prev = 0;
	for (;;)
	{
		const u64 x = std::max(prev + 1, u64(std::llround(xg)));
		if (double(x) > search_ceiling) break;
		if (!holds(double(x))) { any_fail = true; last_fail = x; next_hold = 0; }
		else if (any_fail && next_hold == 0) next_hold = x;
		prev = x;
		xg *= 1.001;
	}
	if (any_fail && next_hold == 0) throw std::runtime_error("no threshold below 1e12");

	Threshold t{x_lo, 0, true};
	if (any_fail)
	{
		u64 lo = last_fail, hi = next_hold;
		while (hi - lo > 1)
		{
			const u64 mid = lo + (hi - lo) / 2;
			if (holds(double(mid))) hi = mid; else lo = mid;
		}
		t.x_star = hi;
		t.last_failure = lo;
	}
	const double xs = double(t.x_star);
	for (const double k : {1.0, 2.0, 10.0, 100.0, 1000.0}) t.verified = t.verified && holds(k * xs);
	if (t.last_failure != 0) t.verified = t.verified && !holds(double(t.last_failure));
	return t;
}

}

Threshold threshold_master(const double lambda)
{
	derive_params(lambda);
	return search_threshold([lambda](const double x) { return master_inequality_holds(x, lambda); }, 6);
}

Threshold threshold_final(const double delta)
{
	if (!(delta > 0.0)) throw std::domain_error("delta must be positive");
	return search_threshold([delta](const double x) { return final_inequality_holds(x, delta); }, 2);
}

DeltaScan delta_scan(const std::span<const double> grid, const double s1)
{
	if (grid.empty()) throw std::invalid_argument("empty lambda grid");
	DeltaScan scan;
	for (const double lambda : grid)
	{
		const int n = run_recurrence(s1, lambda).n;
		const DeltaPoint pt{lambda, n, n * (lambda + 0.001)};
		scan.points.push_back(pt);
		if (scan.points.size() == 1 || pt.delta < scan.best.delta) scan.best = pt;
	}
	return scan;
}

std::vector<double> standard_lambda_grid()
{
	std::vector<double> grid;
	for (int i = 1; i <= 30; ++i) grid.push_back(2.0 + i / 10.0);
	return grid;
}

}
