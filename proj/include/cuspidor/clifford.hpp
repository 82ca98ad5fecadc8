#pragma once
// Extensions 1 → A → B → C → 1 of finite abelian groups, given by a C-action
// on A and a normalized 2-cocycle. Elements of B are pairs (a, c) with
// (a₁,c₁)(a₂,c₂) = (a₁ + c₁·a₂ + z(c₁,c₂), c₁c₂), indexed a + |A|·c.
//
// A and C are ⊕ Z/d_i with elements in mixed radix (first factor fastest),
// as in FiniteGroup::abelian. Characters of A are indexed the same way:
// ρ_k(a) = Σ k_i a_i / d_i mod 1.

#include "cuspidor/dixon.hpp"
#include "cuspidor/finite_group.hpp"

#include <map>
#include <optional>
#include <random>

namespace cuspidor {

class ExtensionDescriptor {
  public:
	ExtensionDescriptor() = default;
	// action[i] acts on A-coordinates (a ↦ M a) for the i-th generator of C.
	// cocycle[c1 * |C| + c2] holds A-coordinates. A non-normalized cocycle is
	// shifted by a coboundary. Throws DomainError("InvalidExtension").
	ExtensionDescriptor(std::vector<long> a_factors, std::vector<long> c_factors, std::vector<IntMatrix> action,
	                    const std::vector<std::vector<long>>& cocycle);
	static ExtensionDescriptor direct_product(std::vector<long> a_factors, std::vector<long> c_factors);

	const std::vector<long>& a_factors() const { return af_; }
	const std::vector<long>& c_factors() const { return cf_; }
	const std::vector<IntMatrix>& action() const { return action_; }
	const FiniteGroup& a_group() const { return A_; }
	const FiniteGroup& c_group() const { return C_; }
	std::size_t a_order() const { return A_.order(); }
	std::size_t c_order() const { return C_.order(); }
	std::size_t order() const { return A_.order() * C_.order(); }

	std::size_t act(std::size_t c, std::size_t a) const { return act_[c * A_.order() + a]; }
	std::size_t z(std::size_t c1, std::size_t c2) const { return z_[c1 * C_.order() + c2]; }
	IntMatrix action_matrix(std::size_t c) const;

	std::size_t mul(std::size_t x, std::size_t y) const;
	std::size_t inv(std::size_t x) const;
	std::size_t element(std::size_t a, std::size_t c) const { return a + A_.order() * c; }

	std::vector<long> a_coords(std::size_t a) const { return digits(af_, a); }
	std::size_t a_index(const std::vector<long>& v) const { return index(af_, v); }
	std::vector<long> c_coords(std::size_t c) const { return digits(cf_, c); }
	std::size_t c_index(const std::vector<long>& v) const { return index(cf_, v); }
	std::vector<std::vector<long>> cocycle_table() const;

	// Characters of A
	Rat character_value(std::size_t rho, std::size_t a) const;
	std::size_t act_character(std::size_t c, std::size_t rho) const; // (c·ρ)(a) = ρ(c⁻¹·a)

	static std::vector<long> digits(const std::vector<long>& f, std::size_t x);
	static std::size_t index(const std::vector<long>& f, const std::vector<long>& v);

  private:
	std::vector<long> af_, cf_;
	std::vector<IntMatrix> action_;
	FiniteGroup A_, C_;
	std::vector<std::uint32_t> act_;
	std::vector<std::uint32_t> z_;
};

struct ConcreteGroup {
	ExtensionDescriptor ext;
	FiniteGroup group; // associativity asserted for |B| ≤ 512
	std::vector<std::vector<std::size_t>> classes;
};
ConcreteGroup concrete_group(const ExtensionDescriptor& e);

// Image of s(c1)s(c2)s(c1)⁻¹s(c2)⁻¹ in the coinvariants A_{⟨c1,c2⟩}.
struct CommutatorValue {
	std::size_t raw = 0;           // element of A for the chosen section
	std::size_t canonical = 0;     // least element of raw + I, I = Σ (c−1)A
	bool trivial = true;
	std::vector<Int> coinvariant_factors;
	std::vector<std::size_t> augmentation; // the subgroup I, sorted
};
// section[c] is the A-part of s(c); the canonical section is s(c) = (0, c).
CommutatorValue commutator_function(const ExtensionDescriptor& e, std::size_t c1, std::size_t c2,
                                    const std::vector<std::size_t>* section = nullptr);

struct MultOneWitness {
	std::size_t c1 = 0, c2 = 0;
	std::size_t rho = 0;       // character of A fixed by c1, c2, nontrivial on the commutator
	std::size_t multiplicity = 0;
	std::size_t dimension = 0; // of an irreducible of B over ρ
};
struct MultOneResult {
	bool mult_one = true;
	std::optional<MultOneWitness> witness;
};
MultOneResult has_multiplicity_one(const ExtensionDescriptor& e);

// Maps are matrices whose columns are images of the source generators.
// Pullback along i: C' → C. Throws DomainError("InvalidMap").
ExtensionDescriptor pullback(const ExtensionDescriptor& e, const std::vector<long>& c_prime, const IntMatrix& i);
// Pushout along p: A → A' where C acts on A' by action_prime. Throws
// DomainError("NotEquivariant") or DomainError("InvalidMap").
ExtensionDescriptor pushout(const ExtensionDescriptor& e, const std::vector<long>& a_prime, const IntMatrix& p,
                            const std::vector<IntMatrix>& action_prime);
ExtensionDescriptor product(const ExtensionDescriptor& e1, const ExtensionDescriptor& e2);

struct CensusEntry {
	std::size_t orbit_rep = 0;   // character of A
	std::size_t orbit_size = 0;
	std::size_t stabilizer_order = 0;
	std::size_t radical_order = 0;  // of the commutator pairing on the stabilizer
	bool cocycle_trivial = true;    // the pushed-out extension of the stabilizer splits
	std::size_t projective_dim = 1; // m
	std::size_t dimension = 1;      // orbit_size · m
	std::size_t multiplicity = 1;   // of each ρ in the orbit inside π|_A
	std::size_t count = 1;          // irreducibles of B over this orbit
};
struct Census {
	std::vector<CensusEntry> entries;
	std::map<std::size_t, std::size_t> dimensions; // dim → count
	std::size_t irreducibles = 0;
};
// Throws DomainError("TooLarge") above max_order.
Census irrep_census(const ExtensionDescriptor& e, std::size_t max_order = 4096);

struct BruteForceCensus {
	CharacterTable table;
	std::vector<std::vector<long>> restriction; // [chi][rho], ρ a character of A
	std::map<std::size_t, std::size_t> dimensions;
	long max_multiplicity = 0;
};
// Throws DomainError("TooLarge") above 512.
BruteForceCensus brute_force_census(const ConcreteGroup& g);

// Elements of the stabilizer C_ρ pairing trivially with all of C_ρ under
// (c, c') ↦ ρ(commutator).
std::vector<std::size_t> commutator_radical(const ExtensionDescriptor& e, std::size_t rho);

// Characters λ of C with λ·χ = χ, for each irreducible χ of B (indices of C*).
std::vector<std::vector<std::size_t>> twist_stabilizers(const ExtensionDescriptor& e, const BruteForceCensus& b);

// Random descriptor with |B| ≤ max_order: the action is by powers of one
// automorphism of A, the cocycle is a sum of carry, bilinear and coboundary
// parts with values fixed by C.
ExtensionDescriptor random_extension(std::mt19937_64& rng, std::size_t max_order);

// Named descriptors.
ExtensionDescriptor quaternion_extension(); // A = Z/2, C = (Z/2)²
ExtensionDescriptor dihedral_extension();   // A = Z/2 central, C = (Z/2)²
ExtensionDescriptor dihedral_by_inversion(); // A = Z/4, C = Z/2 inverting

} // namespace cuspidor
