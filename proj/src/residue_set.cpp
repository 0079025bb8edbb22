#include "faccover/residue_set.hpp"

#include <stdexcept>

namespace faccover {

ResidueSet::ResidueSet(const OddPrime & p) : p_(p), words_((p.value() + 63) / 64, 0) {}

ResidueSet ResidueSet::full(const OddPrime & p)
{
	ResidueSet s(p);
	for (u64 r = 1; r < p; ++r) s.insert(r);
	return s;
}

ResidueSet ResidueSet::from(const OddPrime & p, const std::vector<u64> & members)
{
	ResidueSet s(p);
	for (const u64 r : members) s.insert(r);
	return s;
}

bool ResidueSet::insert(u64 r)
{
	r %= p_;
	if (r == 0 || contains(r)) return false;
	words_[r >> 6] |= u64(1) << (r & 63);
	++count_;
	return true;
}

std::vector<u64> ResidueSet::members() const
{
	std::vector<u64> out;
	out.reserve(count_);
	for (size_t i = 0; i < words_.size(); ++i)
	{
		for (u64 w = words_[i]; w != 0; w &= w - 1) out.push_back(64 * i + std::countr_zero(w));
	}
	return out;
}

ResidueSet ResidueSet::dilate(const u64 c) const
{
	if (c % p_ == 0) throw std::domain_error("dilation by zero");
	ResidueSet out(p_);
	for (size_t i = 0; i < words_.size(); ++i)
	{
		for (u64 w = words_[i]; w != 0; w &= w - 1) out.insert(mul_mod(c, 64 * i + std::countr_zero(w), p_));
	}
	return out;
}

ResidueSet ResidueSet::inverse() const
{
	ResidueSet out(p_);
	for (const u64 r : members()) out.insert(inverse_mod(r, p_));
	return out;
}

ResidueSet & ResidueSet::unite(const ResidueSet & other)
{
	if (!(p_ == other.p_)) throw std::invalid_argument("moduli differ");
	count_ = 0;
	for (size_t i = 0; i < words_.size(); ++i)
	{
		words_[i] |= other.words_[i];
		count_ += std::popcount(words_[i]);
	}
	return *this;
}

u64 ResidueSet::intersection_size(const ResidueSet & other) const
{
	if (!(p_ == other.p_)) throw std::invalid_argument("moduli differ");
	u64 n = 0;
	for (size_t i = 0; i < words_.size(); ++i) n += std::popcount(words_[i] & other.words_[i]);
	return n;
}

ResidueSet ResidueSet::product(const ResidueSet & other) const
{
	ResidueSet out(p_);
	for (const u64 x : members())
	{
		out.unite(other.dilate(x));
		if (out.is_full()) break;
	}
	return out;
}

}
