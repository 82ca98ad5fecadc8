#pragma once
// Depth-zero pieces of the toral character formula: root orbits and their
// χ-data, mod-a data up to square class, the Δ_II product and the
// Weyl-summed Θ. Only maximally unramified data are in scope.

#include "cuspidor/torus.hpp"

#include <string>

namespace cuspidor {

enum class OrbitType { Asymmetric, SymmetricUnramified, SymmetricRamified };
enum class ChiKind { Trivial, Quadratic, External };
std::string to_string(OrbitType t);
std::string to_string(ChiKind c);

// One ⟨w, −1⟩-class of roots: the w-orbit of rep, plus the w-orbit of −rep
// when that is a different orbit.
struct RootOrbit {
	std::size_t rep = 0;
	std::vector<std::size_t> roots;     // w-orbit of rep, roots[j] = w^j rep
	std::vector<std::size_t> opposite;  // w-orbit of −rep if asymmetric
	unsigned degree = 1;                // k_α = GF(q^degree)
	OrbitType type = OrbitType::Asymmetric;
	ChiKind chi = ChiKind::Trivial;
	std::string tag;                    // normalization tag, ramified only
};

struct ChiData {
	std::vector<RootOrbit> orbits;
};

// declared_ramified: roots the caller declares ramified (the unramified
// torus model never produces them). A symmetric declared root throws
// DomainError("OutOfScope") in strict mode and is tagged otherwise.
ChiData classify_chi_data(const FrobeniusTorus& t, const std::vector<std::size_t>& declared_ramified = {},
                          bool strict = true);

// Use roots[j] (or opposite[j - roots.size()]) as the representative.
ChiData with_representative(const ChiData& chi, std::size_t orbit, std::size_t j);

struct ModAEntry {
	std::size_t rep = 0;
	FieldPtr field;                   // k_α
	FiniteField::Elem abar = 1;       // representative of the square class
	bool square = true;
	bool determined = true;           // false when both classes fit equally
	Rat psi_value;                    // θ∘N∘α^∨ on the generator of k_α^×
	int twist_sign = 0;               // sign of Re G(ψ̄)·conj G(ψ̄·sgn); picks the class
};

struct ModAData {
	FiniteField::Elem lambda_c = 1;   // Λ⁰(x) = ζ_p^{Tr(c x)} on k
	std::vector<ModAEntry> entries;   // parallel to ChiData::orbits
};

// Square class of ā_α per orbit: the class whose class-averaged correlation
// Σ_{a}Σ_X ψ_α(1+X)·conj Λ(tr(aX)) is largest. Throws
// DomainError("SingularRoot") when θ∘N∘α^∨ is trivial.
ModAData mod_a_data(const FrobeniusTorus& t, const TorusCharacter& theta, const ChiData& chi,
                    FiniteField::Elem lambda_c = 1);

// Brute-force correlation for one class (small fields only), for testing.
Cyclotomic mod_a_correlation(const FrobeniusTorus& t, const TorusCharacter& theta, const RootOrbit& orbit,
                             bool square_class, FiniteField::Elem lambda_c = 1);

struct DeltaFactor {
	std::size_t rep = 0;
	OrbitType type = OrbitType::Asymmetric;
	FiniteField::Elem alpha_gamma = 1; // α(γ) in k_α
	bool degenerate = false;           // α(γ) = 1, skipped
	int sign = 1;
};

struct DeltaReport {
	Cyclotomic value{Rat(1)};
	std::vector<DeltaFactor> factors;
	std::size_t degenerate_orbits = 0;
};

// Throws DomainError("NotRealizable") unless gamma is a point of S(k), and
// DomainError("OutOfScope") for orbits with an external character.
DeltaReport delta_II(const FrobeniusTorus& t, const QVec& gamma, const ChiData& chi, const ModAData& a);

// Caller-supplied constants; all default to 1.
struct FormulaConstants {
	Cyclotomic kottwitz_sign{Rat(1)};
	Cyclotomic epsilon{Rat(1)};
	Cyclotomic discriminant{Rat(1)}; // |D_G(γ)|^{-1/2}
};

struct ThetaTerm {
	IntMatrix weyl;
	QVec point;          // w·γ
	Cyclotomic delta;
	Cyclotomic theta;
	Cyclotomic term;
	bool degenerate = false;
};

struct ThetaSumReport {
	std::vector<ThetaTerm> terms;
	Cyclotomic sum;
	Cyclotomic constant;
	Cyclotomic total;    // constant · sum
};

// Σ_{w} Δ_II(wγ)·θ(wγ). Throws DomainError("InvalidWeylSet") if some w is
// not in W or does not commute with the twist.
ThetaSumReport theta_sum(const FrobeniusTorus& t, const TorusCharacter& theta, const QVec& gamma, const ChiData& chi,
                         const ModAData& a, const std::vector<IntMatrix>& weyl_set, const FormulaConstants& c = {});

// Δ_II(γ)·θ(γ), the single term of the conjugation formula.
Cyclotomic conjugation_term(const FrobeniusTorus& t, const TorusCharacter& theta, const QVec& gamma,
                            const ChiData& chi, const ModAData& a);

// Full property sweep: every classical datum of rank ≤ 2, every w, every
// non-singular θ and every point γ of S(k), for each q given.
struct CharacterSweep {
	std::size_t tori = 0, characters = 0, points = 0;
	std::size_t square_class_failures = 0;
	std::size_t reindex_failures = 0;
	std::size_t representative_failures = 0;
	std::size_t galois_failures = 0;
	std::size_t undetermined_classes = 0;
	bool ok() const {
		return square_class_failures + reindex_failures + representative_failures + galois_failures == 0;
	}
};
CharacterSweep character_property_sweep(const std::vector<long>& qs);

// Why the full character identities are replaced by property checks.
const char* character_identity_note();

} // namespace cuspidor
