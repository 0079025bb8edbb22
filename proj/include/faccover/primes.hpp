#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "faccover/modmath.hpp"

namespace faccover {

/// All primes <= limit, ascending.
struct PrimeList
{
	u64 limit = 0;
	std::vector<u32> primes;

	size_t size() const { return primes.size(); }
	u32 nth(size_t m) const;        // 1-based: nth(1) == 2
};

/// Segmented sieve of Eratosthenes over odd integers. n < 2 gives an empty list.
PrimeList sieve_upto(u64 n);

/// Shared list up to 3.3e6, built on first use.
const PrimeList & shared_primes();

u64 prime_count(double x, const PrimeList & list);
u64 prime_sum_upto(double y, const PrimeList & list);

enum class Bound
{
	rosser_schoenfeld_lower,   // pi(x) > x/(log x - 0.5),                          x >= 67
	rosser_schoenfeld_upper,   // pi(x) < x/(log x - 1.5),                          x > e^1.5
	panaitopol_lower,          // pi(x) > x/(log x - 1 + (log x)^-0.5),             x >= 59
	panaitopol_upper,          // pi(x) < x/(log x - 1 - (log x)^-0.5),             x >= 6
	massias_robin_pm,          // p_m < m(log m + log log m - 1 + 1.8 log log m/log m), m >= 13
	dusart_two_sided,          // x/log x (1 + 0.992/log x) <= pi(x) <= x/log x (1 + 1.2762/log x), x >= 599
	prime_sum_bound            // sum_{q <= y} q < y^2/21.4,                        y >= 970
};

inline constexpr Bound all_bounds[] = {
	Bound::rosser_schoenfeld_lower, Bound::rosser_schoenfeld_upper, Bound::panaitopol_lower,
	Bound::panaitopol_upper, Bound::massias_robin_pm, Bound::dusart_two_sided, Bound::prime_sum_bound};

std::string_view bound_name(Bound b);
std::optional<Bound> parse_bound(std::string_view name);
/// Smallest grid point at which the inequality is claimed.
u64 bound_validity(Bound b);

struct BoundPoint
{
	u64 at;          // x, y, or prime index m
	double lhs;
	double rhs;
};

struct BoundReport
{
	std::string name;
	u64 lo = 0, hi = 0;
	std::vector<BoundPoint> violations;
	std::vector<BoundPoint> near_misses;    // |lhs - rhs| within the relative margin

	bool holds() const { return violations.empty(); }
};

inline constexpr double bound_margin = 1e-9;

/// Checks the inequality on every integer (or prime index) in [lo, hi].
/// Throws std::invalid_argument when lo is below the bound's validity or hi exceeds the sieve.
BoundReport check_bound(Bound b, u64 lo, u64 hi, const PrimeList & list);

/// Sum of primes <= sqrt(x/2) is below x/42.8 exactly when sum_{q <= y} q < y^2/21.4 at y = sqrt(x/2).
double prime_sum_bound_rhs(double y);
double prime_sum_bound_rhs_from_x(double x);

}
