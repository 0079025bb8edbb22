#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

namespace faccover {

using u64 = std::uint64_t;
using u32 = std::uint32_t;

/// A prime modulus p >= 3. Construction checks primality by trial division.
class OddPrime
{
public:
	explicit OddPrime(u64 p);

	u64 value() const { return p_; }
	operator u64() const { return p_; }

private:
	u64 p_;
};

bool is_prime_trial(u64 n);

// (a * b) mod p with a 128-bit intermediate.
inline u64 mul_mod(const u64 a, const u64 b, const u64 p)
{
	return u64((unsigned __int128)(a) * b % p);
}

u64 pow_mod(u64 base, u64 exp, const OddPrime & p);
u64 inverse_mod(u64 x, const OddPrime & p);

/// m! mod p for m = 0 .. p-1.
class FactorialTable
{
public:
	explicit FactorialTable(const OddPrime & p);

	u64 operator[](const size_t m) const { return table_[m]; }
	std::span<const u64> values() const { return table_; }
	const OddPrime & modulus() const { return p_; }

private:
	OddPrime p_;
	std::vector<u64> table_;
};

FactorialTable build_factorial_table(const OddPrime & p);

// Distinct prime divisors of n, ascending. `small_primes` must be ascending; trial division
// continues past its end when the list does not reach sqrt(n).
std::vector<u64> distinct_prime_factors(u64 n, std::span<const u32> small_primes = {});

bool is_primitive_root(u64 a, const OddPrime & p, std::span<const u64> factors_of_p_minus_1);

/// Baby-step giant-step table for one primitive root; O(sqrt p) memory, reusable across targets.
class DiscreteLog
{
public:
	/// Throws std::domain_error if `a` is not a primitive root mod p.
	DiscreteLog(u64 a, const OddPrime & p);

	/// Smallest t in [0, p-2] with a^t = m (mod p).
	u64 operator()(u64 m) const;

	u64 base() const { return a_; }

private:
	OddPrime p_;
	u64 a_;
	u64 step_;        // giant step size, ceil(sqrt(p-1))
	u64 giant_;       // a^(-step_)
	std::unordered_map<u64, u64> baby_;
};

u64 discrete_log(u64 a, u64 m, const OddPrime & p);

}
