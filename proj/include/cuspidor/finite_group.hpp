#pragma once
// Finite groups by multiplication table. Element 0 is always the identity.

#include "cuspidor/exact.hpp"

#include <cstdint>
#include <vector>

namespace cuspidor {

class FiniteGroup {
  public:
	FiniteGroup() = default;
	// Validates closure, identity at 0, inverses and (for n ≤ max_assoc)
	// associativity. Throws DomainError("InvalidGroup").
	static FiniteGroup from_table(std::size_t n, std::vector<std::uint32_t> table, std::size_t max_assoc = 512);
	// ⊕ Z/d_i, elements in mixed radix (first factor fastest).
	static FiniteGroup abelian(const std::vector<long>& factors);
	static FiniteGroup cyclic(long n) { return abelian({n}); }
	// Closure of permutations of {0..m-1}.
	static FiniteGroup from_permutations(const std::vector<std::vector<std::size_t>>& gens);
	static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b); // (x, y) ↦ x + |A|·y

	std::size_t order() const { return n_; }
	std::uint32_t mul(std::size_t a, std::size_t b) const { return table_[a * n_ + b]; }
	std::uint32_t inv(std::size_t a) const { return inv_[a]; }
	std::uint32_t conj(std::size_t g, std::size_t x) const { return mul(mul(g, x), inv(g)); }
	std::uint32_t pow(std::size_t a, long e) const;
	std::size_t element_order(std::size_t a) const;
	std::size_t exponent() const;
	bool is_abelian() const;
	const std::vector<std::uint32_t>& table() const { return table_; }

	std::vector<std::vector<std::size_t>> conjugacy_classes() const;
	std::vector<std::size_t> subgroup_generated(const std::vector<std::size_t>& gens) const;
	bool is_subgroup(const std::vector<std::size_t>& s) const;
	bool is_normal(const std::vector<std::size_t>& s) const;

  private:
	std::size_t n_ = 0;
	std::vector<std::uint32_t> table_;
	std::vector<std::uint32_t> inv_;
};

} // namespace cuspidor
