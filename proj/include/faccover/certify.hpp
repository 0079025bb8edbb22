#pragma once

#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "faccover/modmath.hpp"

namespace faccover {

struct SearchConfig
{
	int root_candidates = 25;          // the first N odd primes are tried as primitive roots
	double budget_multiplier = 3.0;    // at most floor(budget_multiplier * sqrt(p)) v-steps per root
	long v0_shift = 0;                 // added to floor(log p / log a); 0 reproduces the reference search
};

/// b = a^v (mod p) with v^2 a < p (v - b): factorial products summing to p - 1 then reach all of Z_p*.
struct LemmaCertificate
{
	u64 p = 0, a = 0, v = 0, b = 0, w = 0;    // w = floor((p-1)/v)

	bool operator==(const LemmaCertificate &) const = default;
};

struct FallbackCertificate
{
	std::vector<u64> s_list;

	bool operator==(const FallbackCertificate &) const = default;
};

struct BruteCertificate
{
	u64 max_cost = 0;      // largest minimal part-sum over all residues

	bool operator==(const BruteCertificate &) const = default;
};

using CoverCertificate = std::variant<LemmaCertificate, FallbackCertificate, BruteCertificate>;

/// The first n odd primes (3, 5, 7, ...).
std::vector<u64> odd_prime_candidates(int n);

/// v-jump search over primitive roots among the candidates. nullopt means a "bad" prime.
/// `factors` are the distinct prime factors of p-1; computed when empty. Throws for p <= 5.
std::optional<LemmaCertificate> find_certificate(const OddPrime & p, const SearchConfig & cfg,
                                                 std::span<const u64> factors = {});

/// Rechecks every certificate condition in exact arithmetic.
bool verify_certificate(const LemmaCertificate & cert);

/// Multiset of parts, as (part, multiplicity) with ascending part.
struct PartitionWitness
{
	u64 target = 0;
	std::vector<std::pair<u64, u64>> parts;

	u64 part_sum() const;
};

/// Builds witnesses for many targets of one certificate; caches the factorial table and
/// discrete-log table.
class WitnessBuilder
{
public:
	/// Throws std::invalid_argument if the certificate does not verify.
	explicit WitnessBuilder(const LemmaCertificate & cert);

	PartitionWitness operator()(u64 target) const;
	const FactorialTable & factorials() const { return fact_; }

	/// (a!)^(v-1) (b!)^w mod p: the product with no replaced parts.
	u64 base_product() const { return base_; }

private:
	LemmaCertificate cert_;
	OddPrime p_;
	FactorialTable fact_;
	DiscreteLog log_;
	u64 base_;
};

PartitionWitness witness_partition(const LemmaCertificate & cert, u64 target);

/// Sum of parts is p - 1 and the product of factorials is the target.
bool check_witness(const PartitionWitness & w, const FactorialTable & fact);

enum class FallbackMode
{
	strict,    // u capped so 2u + (p-2s-1)/2 <= p-1 (every element is a partition of p-1)
	literal    // u <= floor((p+2s+1)/4) as printed (parts may sum to p)
};

/// Union of {2^u ((p-2s-1)/2)!} over s = 0 .. (p-3)/2, stopping once Z_p* is covered.
std::optional<FallbackCertificate> fallback_cover(const OddPrime & p, FallbackMode mode = FallbackMode::strict);

/// Recomputes the union over the listed s values.
bool verify_fallback(const OddPrime & p, const FallbackCertificate & cert, FallbackMode mode = FallbackMode::strict);

inline constexpr u64 default_brute_ceiling = 10000;
inline constexpr u64 unreachable_cost = ~u64(0);

struct BruteCover
{
	std::vector<u64> min_cost;     // indexed by residue; [0] unused; unreachable_cost if above p-1
	bool covered = false;

	bool representable(const u64 r) const { return min_cost[r] != unreachable_cost; }
	u64 max_cost() const;
};

/// Minimal part sum of a factorial product reaching each residue (parts >= 2; the rest is
/// padded with ones). Throws std::invalid_argument above the ceiling.
BruteCover brute_cover(const OddPrime & p, u64 ceiling = default_brute_ceiling);

/// brute_cover for every prime in [lo, hi]; the OpenMP version and the serial reference
/// return identical vectors.
std::vector<bool> brute_cover_batch(u64 lo, u64 hi, u64 ceiling = default_brute_ceiling);
std::vector<bool> brute_cover_batch_serial(u64 lo, u64 hi, u64 ceiling = default_brute_ceiling);

/// (1/p) multinomial(p; 2, 2k-1, p-2k-1) = k and (1/p) multinomial(p; 1, 1, 2k-1, p-2k-1) = 2k
/// for 1 <= k <= (p-1)/2. Requires p >= 5.
bool multinomial_identity_check(const OddPrime & p);

/// With 2 a primitive root: {2^u ((p-1)/2)!, 1 <= u <= (p-1)/2} and
/// {2^v ((p-3)/2)!, 0 <= v <= (p-3)/2} partition Z_p*. Throws if 2 is not a primitive root.
bool two_power_cover_check(const OddPrime & p);

}
