#pragma once
// Centralizers of finite-image parameters inside normalizers of a maximal
// torus of a complex dual group, and the D_2n commutator verification.
//
// An element of N(T)⋊Out is a triple (t, w, o) standing for exp(t)·ṅ_w·o,
// with t ∈ X^∨⊗Q/Z, ṅ_w the Tits lift of w and o a pinned automorphism.

#include "cuspidor/clifford.hpp"
#include "cuspidor/root_datum.hpp"

#include <optional>
#include <string>

namespace cuspidor {

struct NormalizerElement {
	QVec torus;
	IntMatrix weyl;
	IntMatrix outer;
	bool operator==(const NormalizerElement& o) const = default;
};

// Group law on triples; outer parts must be pinned automorphisms of rd.
class NormalizerModel {
  public:
	explicit NormalizerModel(const RootDatum& rd) : rd_(&rd) {}
	NormalizerElement identity() const;
	NormalizerElement mul(const NormalizerElement& a, const NormalizerElement& b) const;
	NormalizerElement inv(const NormalizerElement& a) const;
	NormalizerElement pow(const NormalizerElement& a, long k) const;
	NormalizerElement normalize(NormalizerElement a) const; // torus part mod 1
	// Action of the element on the torus: w·o.
	IntMatrix torus_action(const NormalizerElement& a) const { return a.weyl * a.outer; }

  private:
	const RootDatum* rd_;
};

struct ParameterRelation {
	// word = list of (generator, exponent); lhs == rhs must hold
	std::vector<std::pair<std::size_t, long>> lhs, rhs;
	std::string text;
};

enum class Hypothesis { None, SimplyConnected, Unramified };

struct ParameterDatum {
	std::string name;
	RootDatum rd;
	std::vector<NormalizerElement> generators;
	std::vector<ParameterRelation> relations;
	Hypothesis hypothesis = Hypothesis::None;
};

// Throws DomainError("InvalidDatum") when an outer part is not pinned, a
// torus part has infinite order or a Weyl part lies outside W, and
// DomainError("RelationFails") when a declared relation does not hold.
void validate_datum(const ParameterDatum& d);

// Conjugate every generator by x.
ParameterDatum conjugate_datum(const ParameterDatum& d, const NormalizerElement& x);

struct OmegaElement {
	IntMatrix weyl;
	QVec correction;           // t with (t, ω) in the centralizer
	std::size_t c_index = 0;   // position in the extension quotient
};

struct CommutatorReport {
	std::size_t c1 = 0, c2 = 0;
	QVec value;                // in X^∨⊗Q/Z for the chosen lifts
	QVec adjoint;              // simple-root values of value
	bool trivial_in_coinvariants = true;
	bool adjoint_trivial_in_coinvariants = true;
};

struct CentralizerReport {
	// fixed torus
	Int fixed_order = 0;              // 0 when infinite
	std::size_t fixed_free_rank = 0;
	std::vector<Int> fixed_factors;
	std::vector<QVec> fixed_generators;
	// Weyl part
	std::vector<OmegaElement> omega;  // identity first
	bool omega_abelian = true;
	std::vector<long> omega_factors;
	std::vector<std::size_t> omega_generators; // indices into omega
	// extension
	std::optional<ExtensionDescriptor> extension;
	std::optional<ExtensionDescriptor> adjoint_extension; // pushed out to the adjoint image
	std::vector<QVec> adjoint_generators;                 // simple-root values of its A generators
	std::vector<CommutatorReport> commutators;            // over pairs of omega generators
	bool mult_one = true;
	bool adjoint_mult_one = true;
	Int order = 0;                    // |S_φ| when finite
	std::vector<std::string> notes;
};

// Throws DomainError("TooLarge") when |W| exceeds max_weyl.
CentralizerReport centralizer(const ParameterDatum& d, std::size_t max_weyl = 10000000);

struct MultOneVerdict {
	bool mult_one = true;
	Hypothesis hypothesis = Hypothesis::None;
	bool consistent = true; // false only when a hypothesis demands mult_one and it fails
	CentralizerReport report;
};
MultOneVerdict mult_one_check_suite(const ParameterDatum& d);

// Fixtures. Spin9: dual PSp8 with the twisted-Coxeter Frobenius; regular:
// PGL2 with a Coxeter torus point of order q+1; d4: adjoint D4 point with
// Weyl stabilizer (Z/2)^2; biquadratic: the rank-9 quotient of
// SL4×T2×SL4×T1 built by biquadratic_datum_derivation().
ParameterDatum spin9_datum(long q = 11);
ParameterDatum regular_pgl2_datum(long q = 11);
ParameterDatum d4_datum(); // q = 11
ParameterDatum biquadratic_datum_derivation();

// D_2n verification

struct D2nReport {
	long n = 0, q = 0;
	std::vector<long> cycle_lengths;
	std::vector<long> boundaries;      // i_1 < ... < i_{k+1}, 1-based
	std::vector<long> b_set;           // B, 1-based
	IntMatrix w0, w1, w2;              // on Z^{2n}
	std::vector<std::string> lambda_w1_w0;
	std::vector<std::string> lambda_w2_w0;
	bool lambda_w2_w0_matches_union = false;
	IntVec lambda_w2_w0_sum;
	QVec mu;
	std::vector<Int> mu_denominators;
	bool denominators_ok = false;      // each divides q^ℓ+1 for its cycle length ℓ
	bool prime_to_p = false;
	bool w1_lift_fixed = false;
	bool w2_lift_fixed = false;
	long b = 0;
	bool b_even = false;
	QVec correction;                   // (w1 − 1)μ
	bool correction_closed_form = false; // = b/(q+1)(e_1 + e_2n)
	std::vector<std::string> lambda_w1_w2;
	IntVec lambda_w1_w2_sum;
	bool lambda_w1_w2_closed_form = false; // = (2n−2)(e_1 + e_2n)
	bool half_lambda_w1_w2_in_root_lattice = false;
	bool tits_agrees = false;          // λ(−1) against Tits-group products
	QVec commutator;
	bool commutator_fixed = false;
	bool commutator_trivial = false;
	std::vector<Int> coinvariant_factors;
	bool ok() const;
};

// Throws DomainError("InvalidCycleType") for a malformed partition and
// DomainError("InvalidModulus") unless q = 1 or q is an odd prime power.
D2nReport d2n_verify(long n, long q, const std::vector<long>& cycle_lengths, bool tits_check = true);

// Compositions of n starting with 1.
std::vector<std::vector<long>> d2n_cycle_types(long n);

} // namespace cuspidor
