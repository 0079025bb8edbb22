#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "faccover/residue_set.hpp"

namespace faccover::growth {

struct InitialSet
{
	ResidueSet set;
	u64 u1 = 0;                   // sum of the primes used
	std::vector<u64> primes;      // primes <= sqrt(p/2)
	bool degenerate = false;      // fewer than two such primes; set is empty
};

/// Products q1 q2 (q1 < q2) of primes up to sqrt(p/2). Each product is below p, so b_1 = C(pi(y), 2).
InitialSet init_pairs(const OddPrime & p);

struct KFoldInit
{
	ResidueSet set;               // products of k distinct primes q < p^(1/k), times 2^-k
	u64 dyadic_tuples = 0;        // tuples with the i-th prime in (p^(1/k)/2^i, p^(1/k)/2^(i-1))
	u64 dyadic_residues = 0;      // distinct residues among those tuples
};

/// Throws std::invalid_argument when k < 2 or p^(1/k) < 3.
KFoldInit init_kfold(const OddPrime & p, int k);

/// f(c) = #{(x, y) in B x B : x = c y}, by one dilation and an intersection popcount.
u64 rep_count(const ResidueSet & b, u64 c);

/// f(c) for every c in [0, p-1] at once (cyclic autocorrelation in discrete-log coordinates).
std::vector<u64> rep_counts(const ResidueSet & b);

/// n -> #{(x, y) in U x V : x y = n}, for n in [0, p-1].
std::vector<u64> product_counts(const ResidueSet & u, const ResidueSet & v);

enum class Branch { square, doubling, minimal };    // trichotomy cases i, ii, iii
std::string_view branch_name(Branch b);

struct Step
{
	ResidueSet set;
	Branch branch;
	std::optional<u64> a;         // even number whose half dilates the set
	std::optional<u64> m;         // f(a/2); 0 on the doubling branch
};

/// One growth step with even candidates a in [2, window]. Throws for window < 2.
Step grow_step(const ResidueSet & b, u64 window);

struct StepRecord
{
	int m;
	u64 b;
	Branch branch;
	std::optional<u64> a;
	std::optional<u64> min_count;
	u64 u;                        // U_m
	u64 b_next;
	u64 u_next;
};

struct GrowthTrace
{
	u64 p = 0;
	u64 window = 0;
	u64 b1 = 0;
	u64 u1 = 0;
	std::vector<StepRecord> steps;
	u64 u_final = 0;
	bool reached_full = false;
	bool within_budget = false;   // u_final <= p - 1
};

/// Runs from init_pairs with window 2 floor(lambda sqrt p log p) + 1.
GrowthTrace run_growth(const OddPrime & p, double lambda);

/// Runs from an arbitrary start; throws std::runtime_error after max_steps.
GrowthTrace run_growth_from(const ResidueSet & start, u64 u1, u64 window, long max_steps);

/// floor(p^(1/2 + 1/k)), the even-number bound of the k-fold construction.
u64 kfold_window(const OddPrime & p, int k);

struct SarkozyResult
{
	u64 sum = 0;                  // sum of f(n) for n in [S+1, S+T]
	double deviation = 0;         // |sum - u v T / p|
	double bound = 0;             // 2 sqrt(p u v) log p
	bool holds = false;
};

SarkozyResult sarkozy_check(const ResidueSet & u, const ResidueSet & v, u64 s, u64 t);

}
