#pragma once
// Character tables of finite groups by the class-algebra eigenvector method,
// carried out modulo a prime p ≡ 1 (mod exp G) and lifted exactly: each
// character value is stored as the multiset of eigenvalue exponents of the
// representing matrix, which is recovered without rounding.

#include "cuspidor/cyclotomic.hpp"
#include "cuspidor/finite_group.hpp"

#include <cstdint>

namespace cuspidor {

struct CharacterTable {
	std::vector<std::vector<std::size_t>> classes;
	std::vector<std::size_t> class_of;     // per element
	std::vector<std::size_t> class_order;  // element order of each class
	std::vector<std::size_t> inverse_class;
	std::size_t group_order = 0;
	unsigned long exponent = 1;
	std::uint64_t prime = 0;
	std::uint64_t root = 0; // primitive exponent-th root of unity mod prime, ↦ e^{2πi/exponent}

	std::vector<long> degrees;
	std::vector<std::vector<std::uint64_t>> mod_p;          // [chi][class]
	std::vector<std::vector<std::size_t>> power_class; // [class][t]: class of g^t, t < order

	std::size_t size() const { return degrees.size(); }
	// Multiplicity of ζ_o^s as an eigenvalue of ρ_chi(g), o = class order.
	std::vector<long> eigen_multiplicities(std::size_t chi, std::size_t cls) const;
	Cyclotomic value(std::size_t chi, std::size_t cls) const;
	// Image of exp(2πi r) under ζ_exponent ↦ root; r must lie in (1/exponent)Z.
	std::uint64_t root_power(const Rat& r) const;
	std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) const { return a * b % prime; }
	std::uint64_t inverse(std::uint64_t a) const;
	// Multiplicity of an integer-valued class function combination, lifted
	// from its residue; throws if the residue is not in [0, bound].
	long lift_count(std::uint64_t residue, long bound) const;
};

// Throws DomainError("TooLarge") when |G| > max_order.
CharacterTable character_table(const FiniteGroup& g, std::uint64_t seed = 1, std::size_t max_order = 512);

// Row and column orthogonality in exact cyclotomic arithmetic.
bool verify_orthogonality(const CharacterTable& t);

} // namespace cuspidor
