#pragma once

#include <span>
#include <vector>

#include "faccover/modmath.hpp"

// All logarithms in this module are natural logarithms.
namespace faccover::analytic {

inline constexpr double c1 = 2.0 * 2.71828182845904523536;    // 2e

struct AnalyticParams
{
	double lambda;
	double beta;     // 2 - 1/lambda
	double mu;       // best constant with 1 - x > exp(-mu x) on (0, 1/(2 beta))
	double rho;      // (lambda - 2)/(2 lambda)
	double gamma;    // mu (3 lambda - 2) lambda / (2 (2 lambda - 1)(lambda - 2))
};

/// Throws std::domain_error unless lambda > 2.
AnalyticParams derive_params(double lambda);

struct RecurrenceTrace
{
	std::vector<double> s;     // s_1, s_2, ..., first value >= 1/2 included last
	int n = 0;                 // largest 1-based index with s_n < 1/2
};

/// Iterates s_{m+1} = (beta - s_m) s_m from s_1 until a term reaches 1/2.
RecurrenceTrace run_recurrence(double s1, double lambda);

/// 1 + floor((gamma - log(2 s1)) / log beta); an upper bound on run_recurrence(s1, lambda).n.
long n0_bound(double s1, double lambda);

/// Odd window width 2 floor(lambda sqrt(p) log p) + 1.
u64 window_width(u64 p, double lambda);

/// 1 / (log(x / 2e))^2, the lower bound on b_1/x for the prime-pair initial set.
double s1_lower_bound(double x);

bool master_inequality_holds(double x, double lambda);
bool final_inequality_holds(double x, double delta);

struct Threshold
{
	u64 x_star;              // least integer from which the inequality holds on the searched range
	u64 last_failure;        // x_star - 1 when a failure exists below x_star, else 0
	bool verified;           // holds at x*, 2x*, 10x*, 100x*, 1000x* and fails at last_failure
};

/// Throws std::runtime_error if the inequality still fails near 1e12.
Threshold threshold_master(double lambda);
Threshold threshold_final(double delta);

struct DeltaPoint
{
	double lambda;
	int n;
	double delta;            // n (lambda + 0.001)
};

struct DeltaScan
{
	std::vector<DeltaPoint> points;
	DeltaPoint best;
};

DeltaScan delta_scan(std::span<const double> grid, double s1);

/// 2 + i/10 for i = 1..30.
std::vector<double> standard_lambda_grid();

}
