#include "faccover/growth.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <mutex>
#include <stdexcept>
#include <string>

#include "faccover/analytic.hpp"
#include "faccover/primes.hpp"

namespace faccover::growth {

namespace {

// exp_[k] = g^k and log_[g^k] = k for a fixed primitive root g.
struct LogTable
{
	std::vector<u32> exp_, log_;

	explicit LogTable(const OddPrime & p) : exp_(p - 1), log_(p, 0)
	{
		const auto factors = distinct_prime_factors(p - 1, shared_primes().primes);
		u64 g = 2;
		while (!is_primitive_root(g, p, factors)) ++g;
		u64 x = 1;
		for (u64 k = 0; k + 1 < p; ++k)
		{
			exp_[k] = u32(x);
			log_[x] = u32(k);
			x = mul_mod(x, g, p);
		}
	}

	std::vector<double> indicator(const ResidueSet & s) const
	{
		std::vector<double> e(exp_.size(), 0.0);
		for (const u64 r : s.members()) e[log_[r]] = 1.0;
		return e;
	}
};

std::mutex plan_mutex;    // FFTW planning is not thread-safe

struct Spectrum
{
	std::vector<std::complex<double>> bins;
};

Spectrum forward(std::vector<double> x)
{
	const int n = int(x.size());
	Spectrum s{std::vector<std::complex<double>>(n / 2 + 1)};
	fftw_plan plan;
	{
		std::lock_guard lock(plan_mutex);
		plan = fftw_plan_dft_r2c_1d(n, x.data(), reinterpret_cast<fftw_complex *>(s.bins.data()), FFTW_ESTIMATE);
	}
	fftw_execute(plan);
	std::lock_guard lock(plan_mutex);
	fftw_destroy_plan(plan);
	return s;
}

std::vector<u64> backward(Spectrum s, const int n)
{
	std::vector<double> x(n);
	fftw_plan plan;
	{
		std::lock_guard lock(plan_mutex);
		plan = fftw_plan_dft_c2r_1d(n, reinterpret_cast<fftw_complex *>(s.bins.data()), x.data(), FFTW_ESTIMATE);
	}
	fftw_execute(plan);
	{
		std::lock_guard lock(plan_mutex);
		fftw_destroy_plan(plan);
	}
	std::vector<u64> out(n);
	for (int k = 0; k < n; ++k)
	{
		const double v = x[k] / n;
		const double r = std::round(v);
		if (std::abs(v - r) > 0.25 || r < 0) throw std::logic_error("FFT count lost precision");
		out[k] = u64(r);
	}
	return out;
}

// Counts indexed by exponent -> counts indexed by residue.
std::vector<u64> to_residues(const LogTable & lt, const std::vector<u64> & by_exp)
{
	std::vector<u64> out(lt.log_.size(), 0);
	for (size_t k = 0; k < by_exp.size(); ++k) out[lt.exp_[k]] = by_exp[k];
	return out;
}

bool pow_below(const u64 q, const int k, const u64 p)
{
	unsigned __int128 x = 1;
	for (int i = 0; i < k; ++i)
	{
		x *= q;
		if (x >= p) return false;
	}
	return true;
}

bool pow_above(const u64 q, const int k, const u64 p)
{
	unsigned __int128 x = 1;
	for (int i = 0; i < k; ++i)
	{
		x *= q;
		if (x > p) return true;
	}
	return false;
}

}

InitialSet init_pairs(const OddPrime & p)
{
	InitialSet init{ResidueSet(p), 0, {}, false};
	for (const u32 q : shared_primes().primes)
	{
		// q <= sqrt(p/2)  <=>  2 q^2 <= p
		if (2 * u64(q) * q > p) break;
		init.primes.push_back(q);
		init.u1 += q;
	}
	for (size_t i = 0; i < init.primes.size(); ++i)
	{
		for (size_t j = i + 1; j < init.primes.size(); ++j) init.set.insert(init.primes[i] * init.primes[j]);
	}
	init.degenerate = init.primes.size() < 2;
	return init;
}

KFoldInit init_kfold(const OddPrime & p, const int k)
{
	if (k < 2) throw std::invalid_argument("k must be at least 2");
	if (!pow_below(3, k, p)) throw std::invalid_argument("p^(1/k) below 3");

	std::vector<u64> small;
	for (const u32 q : shared_primes().primes)
	{
		if (!pow_below(q, k, p)) break;
		small.push_back(q);
	}

	KFoldInit out{ResidueSet(p), 0, 0};
	const u64 scale = pow_mod(inverse_mod(2, p), u64(k), p);

	// k-subsets of the small primes
	const auto rec = [&](auto && self, const int depth, const size_t from, const u64 prod) -> void {
		if (depth == k) { out.set.insert(mul_mod(prod, scale, p)); return; }
		for (size_t i = from; i + (k - depth) <= small.size(); ++i) self(self, depth + 1, i + 1, mul_mod(prod, small[i], p));
	};
	rec(rec, 0, 0, 1);

	// dyadic tuples: the i-th prime q_i satisfies q_i 2^i > p^(1/k) > q_i 2^(i-1)
	std::vector<std::vector<u64>> bands(k);
	for (int i = 1; i <= k; ++i)
	{
		for (const u64 q : small)
		{
			if (pow_above(q << i, k, p) && pow_below(q << (i - 1), k, p)) bands[i - 1].push_back(q);
		}
	}
	ResidueSet dyadic(p);
	const auto tuples = [&](auto && self, const int depth, const u64 prod) -> void {
		if (depth == k)
		{
			++out.dyadic_tuples;
			dyadic.insert(mul_mod(prod, scale, p));
			return;
		}
		for (const u64 q : bands[depth]) self(self, depth + 1, mul_mod(prod, q, p));
	};
	tuples(tuples, 0, 1);
	out.dyadic_residues = dyadic.size();
	return out;
}

u64 rep_count(const ResidueSet & b, const u64 c)
{
	// x = c y  <=>  x in B and x in c B
	return b.intersection_size(b.dilate(c));
}

std::vector<u64> rep_counts(const ResidueSet & b)
{
	const OddPrime & p = b.modulus();
	const LogTable lt(p);
	Spectrum s = forward(lt.indicator(b));
	for (auto & z : s.bins) z = std::norm(z);
	// R[k] = sum_j e[j] e[j + k]: the exponent shift k is log c
	return to_residues(lt, backward(std::move(s), int(p - 1)));
}

std::vector<u64> product_counts(const ResidueSet & u, const ResidueSet & v)
{
	const OddPrime & p = u.modulus();
	if (!(p == v.modulus())) throw std::invalid_argument("moduli differ");
	const LogTable lt(p);
	Spectrum su = forward(lt.indicator(u));
	const Spectrum sv = forward(lt.indicator(v));
	for (size_t i = 0; i < su.bins.size(); ++i) su.bins[i] *= sv.bins[i];
	return to_residues(lt, backward(std::move(su), int(p - 1)));
}

std::string_view branch_name(const Branch b)
{
	switch (b)
	{
		case Branch::square: return "i";
		case Branch::doubling: return "ii";
		case Branch::minimal: return "iii";
	}
	return "?";
}

Step grow_step(const ResidueSet & b, const u64 window)
{
	if (window < 2) throw std::invalid_argument("window must be at least 2");
	const OddPrime & p = b.modulus();
	if (2 * b.size() >= p) return Step{b.product(b), Branch::square, std::nullopt, std::nullopt};

	const auto f = rep_counts(b);
	// halves beyond p - 1 only repeat residues already seen with a smaller a
	const u64 a_max = std::min(window, 2 * (p - 1));
	u64 best_a = 0, best_f = ~u64(0);
	for (u64 a = 2; a <= a_max; a += 2)
	{
		const u64 c = (a / 2) % p;
		if (c == 0) continue;
		if (f[c] < best_f) { best_f = f[c]; best_a = a; }
		if (best_f == 0) break;
	}
	ResidueSet next = b;
	next.unite(b.dilate(best_a / 2));
	return Step{std::move(next), best_f == 0 ? Branch::doubling : Branch::minimal, best_a, best_f};
}

u64 kfold_window(const OddPrime & p, const int k)
{
	if (k < 2) throw std::invalid_argument("k must be at least 2");
	return u64(std::floor(std::pow(double(p), 0.5 + 1.0 / k)));
}

GrowthTrace run_growth_from(const ResidueSet & start, const u64 u1, const u64 window, const long max_steps)
{
	if (start.empty()) throw std::invalid_argument("growth needs a nonempty initial set");
	GrowthTrace trace;
	trace.p = start.modulus();
	trace.window = window;
	trace.b1 = start.size();
	trace.u1 = u1;

	ResidueSet b = start;
	u64 u = u1;
	for (int m = 1; !b.is_full(); ++m)
	{
		if (m > max_steps)
		{
			throw std::runtime_error("growth did not saturate within " + std::to_string(max_steps) + " steps (p = " +
			                         std::to_string(trace.p) + ", b = " + std::to_string(b.size()) + ")");
		}
		Step step = grow_step(b, window);
		// squaring repeats every part; adjoining a adds it once
		const u64 u_next = (step.branch == Branch::square) ? 2 * u : u + *step.a;
		trace.steps.push_back({m, b.size(), step.branch, step.a, step.m, u, step.set.size(), u_next});
		b = std::move(step.set);
		u = u_next;
	}
	trace.u_final = u;
	trace.reached_full = true;
	trace.within_budget = u <= trace.p - 1;
	return trace;
}

GrowthTrace run_growth(const OddPrime & p, const double lambda)
{
	if (p < 11) throw std::invalid_argument("growth needs p >= 11");
	const InitialSet init = init_pairs(p);
	if (init.degenerate) throw std::invalid_argument("fewer than two primes below sqrt(p/2)");
	const double s1 = double(init.set.size()) / double(p);
	const long limit = std::max(10L, 10 * analytic::n0_bound(s1, lambda));
	return run_growth_from(init.set, init.u1, analytic::window_width(p, lambda), limit);
}

SarkozyResult sarkozy_check(const ResidueSet & u, const ResidueSet & v, const u64 s, const u64 t)
{
	const OddPrime & p = u.modulus();
	if (u.empty() || v.empty()) throw std::invalid_argument("sets must be nonempty");
	if (t < 1 || t > p) throw std::invalid_argument("T must lie in [1, p]");
	const auto f = product_counts(u, v);
	SarkozyResult r;
	for (u64 n = s + 1; n <= s + t; ++n) r.sum += f[n % p];
	const double uu = double(u.size()), vv = double(v.size()), pp = double(p);
	r.deviation = std::abs(double(r.sum) - uu * vv * double(t) / pp);
	r.bound = 2.0 * std::sqrt(pp * uu * vv) * std::log(pp);
	r.holds = r.deviation < r.bound;
	return r;
}

}
