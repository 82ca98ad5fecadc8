#pragma once
// Tori over finite fields as cocharacter lattices with Frobenius F = q·w.
// Rational points over k_d are the F^d-fixed points of X^∨ ⊗ Q/Z.

#include "cuspidor/cyclotomic.hpp"
#include "cuspidor/finite_field.hpp"
#include "cuspidor/root_datum.hpp"

#include <memory>
#include <mutex>

namespace cuspidor {

// e^{2πi r} as an exact cyclotomic number (minimal conductor).
Cyclotomic root_of_unity(const Rat& r);

class FrobeniusTorus {
  public:
	// Throws DomainError("NotInWeylGroup") or ("InvalidField") for q not an
	// odd prime power (q = 1 is accepted as a formal value by callers that
	// only need lattice data, see allow_formal_q).
	FrobeniusTorus(RootDatum rd, IntMatrix w, long q, bool allow_formal_q = false);

	const RootDatum& datum() const { return *rd_; }
	const IntMatrix& weyl() const { return w_; }
	long q() const { return q_; }
	long splitting_degree() const { return order_; }
	bool is_elliptic() const;
	IntMatrix frobenius(unsigned d = 1) const; // F^d

	// S(k): computed once.
	const QZKernel& points() const { return sk_; }
	QZKernel rational_points(unsigned d) const;
	// Σ_{i<d} F^i applied to a point of S(k_d).
	QVec norm(const QVec& point, unsigned d) const;
	// The same map on normal-form coordinates S(k_d) → S(k).
	IntMatrix norm_matrix(unsigned d) const;

	// Elements of W commuting with w (W(k)); enumerated on first use.
	const std::vector<IntMatrix>& weyl_centralizer() const;

  private:
	std::shared_ptr<const RootDatum> rd_;
	IntMatrix w_;
	long q_;
	long order_;
	QZKernel sk_;
	mutable std::once_flag cent_once_;
	mutable std::vector<IntMatrix> cent_;
};

// Homomorphism S(k) → Q/Z given by its values on the generators of
// points().group().
struct TorusCharacter {
	QVec values;
	bool operator==(const TorusCharacter& o) const;
};

TorusCharacter make_character(const FrobeniusTorus& t, QVec values); // validates orders
Rat evaluate(const FrobeniusTorus& t, const TorusCharacter& theta, const QVec& point);
std::vector<TorusCharacter> all_characters(const FrobeniusTorus& t);
TorusCharacter twist(const FrobeniusTorus& t, const TorusCharacter& theta, const IntMatrix& omega); // θ∘ω
bool is_trivial(const TorusCharacter& theta);
Int character_order(const TorusCharacter& theta);

struct NonsingularReport {
	bool nonsingular = true;
	std::vector<std::size_t> singular_roots; // roots with θ∘N∘α^∨ trivial
};
// Empty subsystem means all roots.
NonsingularReport nonsingularity(const FrobeniusTorus& t, const TorusCharacter& theta,
                                 const std::vector<std::size_t>& subsystem = {});
bool is_nonsingular(const FrobeniusTorus& t, const TorusCharacter& theta,
                    const std::vector<std::size_t>& subsystem = {});

// Shape of a finite group of matrices.
struct GroupShape {
	std::size_t order = 0;
	bool abelian = true;
	bool cyclic = true;
	std::vector<Int> invariants; // abelian case only
	std::string str() const;
};
GroupShape classify_group(const std::vector<IntMatrix>& elements);

struct StabilizerReport {
	std::vector<IntMatrix> elements;
	GroupShape shape;
	bool nonsingular = false;
	bool regular = false; // nonsingular with trivial stabilizer
};
StabilizerReport weyl_stabilizer(const FrobeniusTorus& t, const TorusCharacter& theta);

// S_ad(k) on the coweight lattice and the cokernel of S(k) → S_ad(k).
// Coordinates are with respect to the fundamental coweights.
struct AdjointPoints {
	IntMatrix frob;                 // F on coweight coordinates
	IntMatrix to_adjoint;           // X^∨ coords → coweight coords
	std::vector<QVec> coweights;    // fundamental coweights in X^∨ ⊗ Q
	QZKernel points;                // S_ad(k)
	AbelianGroup cokernel;          // ambient = normal-form coords of points
	std::vector<QVec> cokernel_reps;
};
AdjointPoints adjoint_points(const FrobeniusTorus& t);

// θ(ω s_sc ω^{-1} s_sc^{-1}) as an element of Q/Z. s_ad is a point of
// S_ad(k) in coweight coordinates. Throws DomainError("NotStabilizing").
Rat bicharacter_value(const FrobeniusTorus& t, const TorusCharacter& theta, const IntMatrix& omega,
                      const QVec& s_ad);
Cyclotomic bicharacter(const FrobeniusTorus& t, const TorusCharacter& theta, const IntMatrix& omega,
                       const QVec& s_ad);
// Every nontrivial stabilizer element pairs nontrivially with some s_ad.
bool bicharacter_left_kernel_trivial(const FrobeniusTorus& t, const TorusCharacter& theta,
                                     const StabilizerReport& stab, const AdjointPoints& ad);

// Subtorus S⁰ ⊆ S given by a saturated F-stable sublattice of X^∨.
struct DisconnectedPairing {
	std::vector<IntMatrix> stab0;        // Ω_{θ⁰}
	std::vector<IntMatrix> stab;         // Ω_θ
	std::vector<IntMatrix> coset_reps;   // Ω_{θ⁰}/Ω_θ
	AbelianGroup component_group;        // S(k)/S⁰(k)
	std::vector<QVec> component_reps;    // points of S(k)
	std::vector<std::vector<Rat>> table; // [coset][component]
	bool left_kernel_trivial = false;
	bool well_defined = false;
};
// sub_basis: columns span X^∨_0 in X^∨ coordinates. theta0 is given on the
// generators of the F-fixed points of X^∨_0 ⊗ Q/Z in sub_basis coordinates.
// Throws DomainError("IncompatibleCharacters").
DisconnectedPairing disconnected_bicharacter(const FrobeniusTorus& t, const IntMatrix& sub_basis,
                                             const TorusCharacter& theta_full, const QVec& theta0_values);
// F-fixed points of X^∨_0 ⊗ Q/Z in sub_basis coordinates.
QZKernel subtorus_points(const FrobeniusTorus& t, const IntMatrix& sub_basis);

struct PacketCounts {
	std::size_t packet_size = 0;
	std::size_t extension_count = 0;
};
// Throws DomainError("SingularCharacter").
PacketCounts packet_counts(const FrobeniusTorus& t, const TorusCharacter& theta);

// q = p^a; the field over which S splits, GF(q^{splitting degree}) by default.
FieldPtr splitting_field(const FrobeniusTorus& t, unsigned degree = 0);
// Coordinatewise exponential map; throws DomainError("NotRealizable").
std::vector<FiniteField::Elem> realize_in_field(const FrobeniusTorus& t, const QVec& point, unsigned degree = 0);

// q as p^a; throws DomainError("InvalidField") otherwise.
std::pair<unsigned long, unsigned> prime_power(long q);

} // namespace cuspidor
