#include "faccover/certify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "faccover/primes.hpp"

namespace faccover {

std::vector<u64> odd_prime_candidates(const int n)
{
	std::vector<u64> out;
	for (const u32 q : shared_primes().primes)
	{
		if (int(out.size()) >= n) break;
		if (q != 2) out.push_back(q);
	}
	return out;
}

namespace {

bool lemma_inequality(const u64 p, const u64 a, const u64 v, const u64 b)
{
	if (v <= b) return false;
	using u128 = unsigned __int128;
	return u128(v) * v * a < u128(p) * (v - b);
}

}

std::optional<LemmaCertificate> find_certificate(const OddPrime & p, const SearchConfig & cfg,
                                                 std::span<const u64> factors)
{
	if (p <= 5) throw std::invalid_argument("certificate search needs p > 5");
	if (cfg.root_candidates < 1 || !(cfg.budget_multiplier > 0)) throw std::invalid_argument("bad search config");

	std::vector<u64> own;
	if (factors.empty())
	{
		own = distinct_prime_factors(p - 1, shared_primes().primes);
		factors = own;
	}

	const double logp = std::log(double(p));
	const u64 budget = u64(std::floor(cfg.budget_multiplier * std::sqrt(double(p))));

	for (const u64 a : odd_prime_candidates(cfg.root_candidates))
	{
		if (a >= p || !is_primitive_root(a, p, factors)) continue;
		const double loga = std::log(double(a));
		const long v0 = long(std::floor(logp / loga)) + cfg.v0_shift;
		u64 v = u64(std::max(2L, v0));
		for (u64 iter = 0; iter < budget && v < p - 1; ++iter)
		{
			const u64 b = pow_mod(a, v, p);
			if (b > 1 && b < p - 1 && lemma_inequality(p, a, v, b))
			{
				return LemmaCertificate{p, a, v, b, (p - 1) / v};
			}
			// smallest later exponent at which a^v can wrap below p again
			v += 1 + u64(std::floor(std::log(double(p) / double(b)) / loga));
		}
	}
	return std::nullopt;
}

bool verify_certificate(const LemmaCertificate & c)
{
	if (c.p < 3 || !is_prime_trial(c.p)) return false;
	const OddPrime p(c.p);
	if (c.a <= 1 || c.a >= c.p) return false;
	if (c.v <= 1 || c.v >= c.p - 1 || c.b <= 1 || c.b >= c.p - 1) return false;
	if (c.w != (c.p - 1) / c.v) return false;
	if (pow_mod(c.a, c.v, p) != c.b) return false;
	if (!lemma_inequality(c.p, c.a, c.v, c.b)) return false;
	if (!is_primitive_root(c.a, p, distinct_prime_factors(c.p - 1))) return false;
	// parts of the base product fit in p - 1
	using u128 = unsigned __int128;
	return u128(c.v - 1) * c.a + u128(c.w) * c.b < c.p;
}

u64 PartitionWitness::part_sum() const
{
	u64 sum = 0;
	for (const auto & [part, count] : parts) sum += part * count;
	return sum;
}

namespace {

const LemmaCertificate & checked(const LemmaCertificate & cert)
{
	if (!verify_certificate(cert)) throw std::invalid_argument("certificate does not verify");
	return cert;
}

}

WitnessBuilder::WitnessBuilder(const LemmaCertificate & cert)
	: cert_(checked(cert)), p_(cert.p), fact_(p_), log_(cert.a, p_)
{
	base_ = mul_mod(pow_mod(fact_[cert_.a], cert_.v - 1, p_), pow_mod(fact_[cert_.b], cert_.w, p_), p_);
}

PartitionWitness WitnessBuilder::operator()(const u64 target) const
{
	if (target % p_ == 0) throw std::domain_error("target must be a unit");
	const auto & [p, a, v, b, w] = cert_;

	// Replacing one a by a-1 divides the product by a (likewise for b), so we need
	// a^lam b^mu = base / target, i.e. lam + mu v = log_a(base / target).
	const u64 t = log_(mul_mod(base_, inverse_mod(target, p_), p_));
	const u64 lam = t % v, mu = t / v;

	std::map<u64, u64> parts;
	const auto add = [&parts](const u64 part, const u64 count) {
		if (count != 0) parts[part] += count;
	};
	add(a - 1, lam);
	add(b - 1, mu);
	add(a, v - 1 - lam);
	add(b, w - mu);
	u64 used = 0;
	for (const auto & [part, count] : parts) used += part * count;
	if (used > p - 1) throw std::logic_error("witness exceeds p - 1");
	add(1, p - 1 - used);

	return PartitionWitness{target % p, {parts.begin(), parts.end()}};
}

PartitionWitness witness_partition(const LemmaCertificate & cert, const u64 target)
{
	return WitnessBuilder(cert)(target);
}

bool check_witness(const PartitionWitness & wit, const FactorialTable & fact)
{
	const OddPrime & p = fact.modulus();
	u64 product = 1, sum = 0;
	for (const auto & [part, count] : wit.parts)
	{
		if (part == 0 || part >= p) return false;
		sum += part * count;
		product = mul_mod(product, pow_mod(fact[part], count, p), p);
	}
	return sum == p - 1 && product == wit.target;
}

std::optional<FallbackCertificate> fallback_cover(const OddPrime & p, const FallbackMode mode)
{
	const FactorialTable fact(p);
	std::vector<uint8_t> seen(p, 0);
	u64 covered = 0;
	FallbackCertificate cert;
	const u64 budget = (mode == FallbackMode::strict) ? p - 1 : p.value();

	for (u64 s = 0; 2 * s + 3 <= p; ++s)
	{
		const u64 k = (p - 2 * s - 1) / 2;
		u64 umax = (p + 2 * s + 1) / 4;
		if (mode == FallbackMode::strict) umax = std::min(umax, (p - 1 - k) / 2);
		if (2 * umax + k > budget) throw std::logic_error("fallback element is not a legal partition");
		cert.s_list.push_back(s);
		u64 x = fact[k];
		for (u64 u = 0; u <= umax; ++u)
		{
			if (!seen[x]) { seen[x] = 1; ++covered; }
			x = mul_mod(x, 2, p);
		}
		if (covered == p - 1) return cert;
	}
	return std::nullopt;
}

bool verify_fallback(const OddPrime & p, const FallbackCertificate & cert, const FallbackMode mode)
{
	const FactorialTable fact(p);
	std::vector<uint8_t> seen(p, 0);
	u64 covered = 0;
	for (const u64 s : cert.s_list)
	{
		if (2 * s + 3 > p) return false;
		const u64 k = (p - 2 * s - 1) / 2;
		u64 umax = (p + 2 * s + 1) / 4;
		if (mode == FallbackMode::strict) umax = std::min(umax, (p - 1 - k) / 2);
		u64 x = fact[k];
		for (u64 u = 0; u <= umax; ++u)
		{
			if (!seen[x]) { seen[x] = 1; ++covered; }
			x = mul_mod(x, 2, p);
		}
	}
	return covered == p - 1;
}

u64 BruteCover::max_cost() const
{
	u64 m = 0;
	for (size_t r = 1; r < min_cost.size(); ++r)
	{
		if (min_cost[r] != unreachable_cost) m = std::max(m, min_cost[r]);
	}
	return m;
}

BruteCover brute_cover(const OddPrime & p, const u64 ceiling)
{
	if (p > ceiling) throw std::invalid_argument("p = " + std::to_string(p.value()) + " exceeds brute-force ceiling");
	const FactorialTable fact(p);
	const u32 n = u32(p.value());
	constexpr u32 inf = ~u32(0);

	// Dial's algorithm: costs are integers in [0, p-1], so one bucket per cost.
	std::vector<u32> dist(n, inf), count(n, 0);
	std::vector<std::vector<u32>> bucket(n);
	u32 unreached = n - 2, highest = 0;    // residue 1 starts at cost 0
	dist[1] = 0;
	count[0] = 1;
	bucket[0].push_back(1);

	for (u32 c = 0; c < n; ++c)
	{
		if (unreached == 0)
		{
			while (count[highest] == 0) --highest;
			if (c >= highest) break;
		}
		for (size_t i = 0; i < bucket[c].size(); ++i)
		{
			const u32 r = bucket[c][i];
			if (dist[r] != c) continue;
			// a relaxation only helps if it beats the largest tentative cost
			u32 mmax = n - 1 - c;
			if (unreached == 0)
			{
				while (count[highest] == 0) --highest;
				mmax = std::min(mmax, highest > c ? highest - 1 - c : 0);
			}
			for (u32 m = 2; m <= mmax; ++m)
			{
				const u32 t = u32(u64(r) * fact[m] % n), nc = c + m;
				if (nc >= dist[t]) continue;
				if (dist[t] == inf) --unreached; else --count[dist[t]];
				dist[t] = nc;
				++count[nc];
				highest = std::max(highest, nc);
				bucket[nc].push_back(t);
			}
		}
		std::vector<u32>().swap(bucket[c]);
	}

	BruteCover out;
	out.min_cost.assign(n, unreachable_cost);
	out.covered = true;
	for (u32 r = 1; r < n; ++r)
	{
		if (dist[r] != inf) out.min_cost[r] = dist[r];
		else out.covered = false;
	}
	return out;
}

namespace {

std::vector<u32> primes_between(const u64 lo, const u64 hi)
{
	const auto & all = shared_primes().primes;
	if (hi > shared_primes().limit) throw std::out_of_range("range beyond shared sieve");
	std::vector<u32> out;
	for (const u32 q : all)
	{
		if (q > hi) break;
		if (q >= lo && q >= 3) out.push_back(q);
	}
	return out;
}

}

std::vector<bool> brute_cover_batch(const u64 lo, const u64 hi, const u64 ceiling)
{
	const auto ps = primes_between(lo, hi);
	std::vector<uint8_t> covered(ps.size(), 0);
	#pragma omp parallel for schedule(dynamic, 1)
	for (long i = long(ps.size()) - 1; i >= 0; --i)
	{
		covered[i] = brute_cover(OddPrime(ps[i]), ceiling).covered;
	}
	return {covered.begin(), covered.end()};
}

std::vector<bool> brute_cover_batch_serial(const u64 lo, const u64 hi, const u64 ceiling)
{
	std::vector<bool> covered;
	for (const u32 q : primes_between(lo, hi)) covered.push_back(brute_cover(OddPrime(q), ceiling).covered);
	return covered;
}

bool multinomial_identity_check(const OddPrime & p)
{
	if (p < 5) throw std::invalid_argument("identity check needs p >= 5");
	const FactorialTable fact(p);
	for (u64 k = 1; 2 * k <= p - 1; ++k)
	{
		const u64 denom = mul_mod(fact[2 * k - 1], fact[p - 2 * k - 1], p);    // 0! = 1 at the top end
		// (1/p) p!/prod m_i! = (p-1)!/prod m_i!
		const u64 with_two = mul_mod(fact[p - 1], inverse_mod(mul_mod(2, denom, p), p), p);
		const u64 with_ones = mul_mod(fact[p - 1], inverse_mod(denom, p), p);
		if (with_two != k % p || with_ones != (2 * k) % p) return false;
	}
	return true;
}

bool two_power_cover_check(const OddPrime & p)
{
	if (!is_primitive_root(2, p, distinct_prime_factors(p - 1))) throw std::invalid_argument("2 is not a primitive root");
	const FactorialTable fact(p);
	std::vector<uint8_t> in_a(p, 0), in_b(p, 0);
	const u64 half = (p - 1) / 2;
	u64 size_a = 0, size_b = 0;

	u64 x = fact[half];
	for (u64 u = 1; u <= half; ++u)
	{
		x = mul_mod(x, 2, p);
		if (!in_a[x]) { in_a[x] = 1; ++size_a; }
	}
	x = fact[(p - 3) / 2];
	for (u64 v = 0; v <= (p - 3) / 2; ++v)
	{
		if (!in_b[x]) { in_b[x] = 1; ++size_b; }
		x = mul_mod(x, 2, p);
	}
	if (size_a != half || size_b != half) return false;
	for (u64 r = 1; r < p; ++r)
	{
		if (in_a[r] == in_b[r]) return false;    // missing from both, or in both
	}
	return true;
}

}
