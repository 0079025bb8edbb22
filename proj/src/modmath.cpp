#include "faccover/modmath.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace faccover {

bool is_prime_trial(const u64 n)
{
	if (n < 2) return false;
	if (n % 2 == 0) return n == 2;
	for (u64 d = 3; d <= n / d; d += 2)
	{
		if (n % d == 0) return false;
	}
	return true;
}

OddPrime::OddPrime(const u64 p) : p_(p)
{
	if (p < 3 || !is_prime_trial(p)) throw std::invalid_argument("not an odd prime: " + std::to_string(p));
}

u64 pow_mod(const u64 base, u64 exp, const OddPrime & p)
{
	u64 r = 1, x = base % p;
	while (exp != 0)
	{
		if (exp & 1) r = mul_mod(r, x, p);
		x = mul_mod(x, x, p);
		exp >>= 1;
	}
	return r;
}

u64 inverse_mod(const u64 x, const OddPrime & p)
{
	if (x % p == 0) throw std::domain_error("zero has no inverse");
	// extended Euclid on (x, p), tracking the coefficient of x
	__int128 r0 = p.value(), r1 = x % p, t0 = 0, t1 = 1;
	while (r1 != 0)
	{
		const __int128 q = r0 / r1;
		__int128 tmp = r0 - q * r1; r0 = r1; r1 = tmp;
		tmp = t0 - q * t1; t0 = t1; t1 = tmp;
	}
	if (t0 < 0) t0 += p.value();
	return u64(t0);
}

FactorialTable::FactorialTable(const OddPrime & p) : p_(p), table_(p.value())
{
	table_[0] = 1;
	for (u64 m = 1; m < p; ++m) table_[m] = mul_mod(m, table_[m - 1], p);
	// Wilson: (p-1)! = -1
	if (table_[p - 1] != p - 1) throw std::logic_error("factorial table failed Wilson check");
}

FactorialTable build_factorial_table(const OddPrime & p) { return FactorialTable(p); }

std::vector<u64> distinct_prime_factors(u64 n, const std::span<const u32> small_primes)
{
	std::vector<u64> factors;
	const auto take = [&](const u64 q) {
		if (n % q != 0) return;
		factors.push_back(q);
		do { n /= q; } while (n % q == 0);
	};

	u64 next = 3;
	if (small_primes.empty() || small_primes.front() != 2) take(2);
	for (const u32 q : small_primes)
	{
		if (u64(q) * q > n) { next = 0; break; }
		take(q);
		next = q + 2;
	}
	// list exhausted before sqrt(n): plain odd trial division
	if (next != 0)
	{
		for (u64 d = next | 1; d <= n / d; d += 2) take(d);
	}
	if (n > 1) factors.push_back(n);
	return factors;
}

bool is_primitive_root(const u64 a, const OddPrime & p, const std::span<const u64> factors_of_p_minus_1)
{
	if (a % p == 0) throw std::domain_error("zero is not in Z_p*");
	for (const u64 q : factors_of_p_minus_1)
	{
		if (pow_mod(a, (p - 1) / q, p) == 1) return false;
	}
	return true;
}

DiscreteLog::DiscreteLog(const u64 a, const OddPrime & p) : p_(p), a_(a % p)
{
	const auto factors = distinct_prime_factors(p - 1);
	if (a_ == 0 || !is_primitive_root(a_, p, factors))
	{
		throw std::domain_error(std::to_string(a) + " is not a primitive root mod " + std::to_string(p.value()));
	}
	step_ = u64(std::ceil(std::sqrt(double(p - 1))));
	while (step_ * step_ < p - 1) ++step_;
	baby_.reserve(step_);
	u64 x = 1;
	for (u64 j = 0; j < step_; ++j)
	{
		baby_.emplace(x, j);        // keeps the smallest j on collision
		x = mul_mod(x, a_, p);
	}
	giant_ = inverse_mod(pow_mod(a_, step_, p), p);
}

u64 DiscreteLog::operator()(const u64 m) const
{
	u64 y = m % p_;
	if (y == 0) throw std::domain_error("discrete log of zero");
	for (u64 i = 0; i < step_; ++i)
	{
		if (const auto it = baby_.find(y); it != baby_.end())
		{
			const u64 t = i * step_ + it->second;
			if (t < p_ - 1) return t;
		}
		y = mul_mod(y, giant_, p_);
	}
	throw std::logic_error("discrete log not found");
}

u64 discrete_log(const u64 a, const u64 m, const OddPrime & p) { return DiscreteLog(a, p)(m); }

}
