#pragma once

#include <bit>
#include <vector>

#include "faccover/modmath.hpp"

namespace faccover {

/// Dense subset of Z_p*, one bit per residue. Bit 0 is never set.
class ResidueSet
{
public:
	explicit ResidueSet(const OddPrime & p);

	static ResidueSet full(const OddPrime & p);
	static ResidueSet from(const OddPrime & p, const std::vector<u64> & members);

	const OddPrime & modulus() const { return p_; }
	u64 size() const { return count_; }
	bool empty() const { return count_ == 0; }
	bool is_full() const { return count_ == p_ - 1; }

	bool contains(u64 r) const { return (words_[r >> 6] >> (r & 63)) & 1; }
	bool insert(u64 r);     // r reduced mod p; returns false if already present (or r = 0)

	std::vector<u64> members() const;

	/// c * B
	ResidueSet dilate(u64 c) const;
	/// B^-1
	ResidueSet inverse() const;
	/// B union other
	ResidueSet & unite(const ResidueSet & other);
	u64 intersection_size(const ResidueSet & other) const;
	/// {x y : x in B, y in other}; stops as soon as every residue is present.
	ResidueSet product(const ResidueSet & other) const;

	bool operator==(const ResidueSet & other) const { return p_ == other.p_ && words_ == other.words_; }

private:
	OddPrime p_;
	std::vector<u64> words_;
	u64 count_ = 0;
};

}
