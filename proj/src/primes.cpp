#include "faccover/primes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace faccover {

u32 PrimeList::nth(const size_t m) const
{
	if (m == 0 || m > primes.size()) throw std::out_of_range("prime index " + std::to_string(m) + " beyond sieve");
	return primes[m - 1];
}

PrimeList sieve_upto(const u64 n)
{
	PrimeList list;
	list.limit = n;
	if (n < 2) return list;
	list.primes.push_back(2);
	if (n < 3) return list;

	// base primes up to sqrt(n), odd only
	const u64 root = u64(std::sqrt(double(n))) + 1;
	std::vector<bool> small(root + 1, true);
	std::vector<u64> base;
	for (u64 i = 3; i <= root; i += 2)
	{
		if (!small[i]) continue;
		base.push_back(i);
		for (u64 j = i * i; j <= root; j += 2 * i) small[j] = false;
	}

	// segment i covers odd numbers 2k+1 for k in [k0, k0 + segment)
	constexpr u64 segment = u64(1) << 18;
	const u64 kmax = (n - 1) / 2;        // largest k with 2k+1 <= n
	std::vector<uint8_t> composite(segment);
	for (u64 k0 = 1; k0 <= kmax; k0 += segment)
	{
		const u64 k1 = std::min(kmax + 1, k0 + segment);
		std::fill(composite.begin(), composite.end(), 0);
		const u64 lo = 2 * k0 + 1, hi = 2 * (k1 - 1) + 1;
		for (const u64 q : base)
		{
			if (q * q > hi) break;
			u64 start = std::max(q * q, (lo + q - 1) / q * q);
			if (start % 2 == 0) start += q;
			for (u64 m = start; m <= hi; m += 2 * q) composite[(m - 1) / 2 - k0] = 1;
		}
		for (u64 k = k0; k < k1; ++k)
		{
			if (!composite[k - k0]) list.primes.push_back(u32(2 * k + 1));
		}
	}
	return list;
}

const PrimeList & shared_primes()
{
	static const PrimeList list = sieve_upto(3300000);
	return list;
}

namespace {

u64 checked_floor(const double x, const PrimeList & list)
{
	if (!(x <= double(list.limit))) throw std::out_of_range("argument beyond sieve limit " + std::to_string(list.limit));
	return (x < 0) ? 0 : u64(std::floor(x));
}

}

u64 prime_count(const double x, const PrimeList & list)
{
	const u64 n = checked_floor(x, list);
	return u64(std::upper_bound(list.primes.begin(), list.primes.end(), n) - list.primes.begin());
}

u64 prime_sum_upto(const double y, const PrimeList & list)
{
	const u64 n = checked_floor(y, list);
	u64 sum = 0;
	for (const u32 q : list.primes)
	{
		if (q > n) break;
		sum += q;
	}
	return sum;
}

double prime_sum_bound_rhs(const double y) { return y * y / 21.4; }
double prime_sum_bound_rhs_from_x(const double x) { return x / 42.8; }

std::string_view bound_name(const Bound b)
{
	switch (b)
	{
		case Bound::rosser_schoenfeld_lower: return "rosser_schoenfeld_lower";
		case Bound::rosser_schoenfeld_upper: return "rosser_schoenfeld_upper";
		case Bound::panaitopol_lower: return "panaitopol_lower";
		case Bound::panaitopol_upper: return "panaitopol_upper";
		case Bound::massias_robin_pm: return "massias_robin_pm";
		case Bound::dusart_two_sided: return "dusart_two_sided";
		case Bound::prime_sum_bound: return "prime_sum_bound";
	}
	return "unknown";
}

std::optional<Bound> parse_bound(const std::string_view name)
{
	for (const Bound b : all_bounds)
	{
		if (bound_name(b) == name) return b;
	}
	return std::nullopt;
}

u64 bound_validity(const Bound b)
{
	switch (b)
	{
		case Bound::rosser_schoenfeld_lower: return 67;
		case Bound::rosser_schoenfeld_upper: return 5;      // first integer above e^1.5
		case Bound::panaitopol_lower: return 59;
		case Bound::panaitopol_upper: return 6;
		case Bound::massias_robin_pm: return 13;
		case Bound::dusart_two_sided: return 599;
		case Bound::prime_sum_bound: return 970;
	}
	return 0;
}

BoundReport check_bound(const Bound b, const u64 lo, const u64 hi, const PrimeList & list)
{
	const u64 validity = bound_validity(b);
	if (lo < validity)
	{
		throw std::invalid_argument(std::string(bound_name(b)) + " is only claimed from " + std::to_string(validity));
	}
	if (hi < lo) throw std::invalid_argument("empty range");
	if (b == Bound::massias_robin_pm ? hi > list.size() : hi > list.limit)
	{
		throw std::invalid_argument("range exceeds sieve limit");
	}

	BoundReport report{std::string(bound_name(b)), lo, hi, {}, {}};

	// lhs < rhs is required; anything failing by more than the relative margin is a violation
	const auto less = [&](const u64 at, const double lhs, const double rhs) {
		const double slack = bound_margin * std::abs(rhs);
		if (lhs - rhs > slack) report.violations.push_back({at, lhs, rhs});
		else if (std::abs(lhs - rhs) <= slack) report.near_misses.push_back({at, lhs, rhs});
	};

	if (b == Bound::massias_robin_pm)
	{
		for (u64 m = lo; m <= hi; ++m)
		{
			const double lm = std::log(double(m)), llm = std::log(lm);
			less(m, double(list.nth(m)), double(m) * (lm + llm - 1.0 + 1.8 * llm / lm));
		}
		return report;
	}

	auto it = list.primes.begin();
	u64 pi = 0, sum = 0;
	for (u64 x = lo; x <= hi; ++x)
	{
		while (it != list.primes.end() && *it <= x) { ++pi; sum += *it; ++it; }
		const double xd = double(x), lx = std::log(xd);
		switch (b)
		{
			case Bound::rosser_schoenfeld_lower: less(x, xd / (lx - 0.5), double(pi)); break;
			case Bound::rosser_schoenfeld_upper: less(x, double(pi), xd / (lx - 1.5)); break;
			case Bound::panaitopol_lower: less(x, xd / (lx - 1.0 + 1.0 / std::sqrt(lx)), double(pi)); break;
			case Bound::panaitopol_upper: less(x, double(pi), xd / (lx - 1.0 - 1.0 / std::sqrt(lx))); break;
			case Bound::dusart_two_sided:
			{
				// non-strict on both sides; equality is fine so only the strict excess counts
				const double lower = xd / lx * (1.0 + 0.992 / lx), upper = xd / lx * (1.0 + 1.2762 / lx);
				if (lower - double(pi) > bound_margin * lower) report.violations.push_back({x, lower, double(pi)});
				if (double(pi) - upper > bound_margin * upper) report.violations.push_back({x, double(pi), upper});
				break;
			}
			case Bound::prime_sum_bound: less(x, double(sum), prime_sum_bound_rhs(xd)); break;
			case Bound::massias_robin_pm: break;
		}
	}
	return report;
}

}
