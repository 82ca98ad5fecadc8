#pragma once
// Root data with explicit lattices, Weyl groups acting on cocharacters,
// Tits-lift arithmetic and the table of bad primes.

#include "cuspidor/exact.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace cuspidor {

enum class LatticeKind { SimplyConnected, Adjoint, Custom };

// Roots live in X (character coordinates), coroots in X^∨ (the dual basis),
// so the pairing is the plain dot product. Weyl elements are matrices on X^∨.
class RootDatum {
  public:
	RootDatum() = default;
	// Validates the axioms and derives positivity from the simple system.
	RootDatum(std::string label, std::size_t rank, std::vector<IntVec> roots,
	          std::vector<IntVec> coroots, std::vector<std::size_t> simple);

	const std::string& label() const { return label_; }
	std::size_t rank() const { return rank_; }
	std::size_t semisimple_rank() const { return simple_.size(); }
	std::size_t num_roots() const { return roots_.size(); }
	std::size_t num_positive() const { return roots_.size() / 2; }
	const std::vector<IntVec>& roots() const { return roots_; }
	const std::vector<IntVec>& coroots() const { return coroots_; }
	const IntVec& root(std::size_t i) const { return roots_[i]; }
	const IntVec& coroot(std::size_t i) const { return coroots_[i]; }
	const std::vector<std::size_t>& simple() const { return simple_; }
	bool is_positive(std::size_t i) const { return positive_[i]; }
	std::size_t negative_of(std::size_t i) const { return neg_[i]; }
	const IntVec& simple_coefficients(std::size_t i) const { return coeffs_[i]; }
	long height(std::size_t i) const;
	std::size_t root_index(const IntVec& x) const;     // throws if absent
	std::size_t coroot_index(const IntVec& y) const;   // throws if absent
	Int pair(const IntVec& x, const IntVec& y) const;   // <x, y>

	// Cartan entries <α_i, α_j^∨> over the simple system.
	IntMatrix cartan() const;

	IntMatrix reflection(std::size_t root_idx) const; // on X^∨
	IntMatrix simple_reflection(std::size_t k) const { return reflection(simple_[k]); }

	// Permutation of root indices induced by a matrix on X^∨; throws
	// DomainError("NotRootAutomorphism") if it does not permute the coroots.
	std::vector<std::size_t> root_permutation(const IntMatrix& w) const;
	bool permutes_roots(const IntMatrix& w) const;
	// Reduced word in simple-reflection positions (indices into simple());
	// throws DomainError("NotInWeylGroup").
	std::vector<std::size_t> reduced_word(const IntMatrix& w) const;
	bool in_weyl_group(const IntMatrix& w) const;
	std::size_t length(const IntMatrix& w) const { return reduced_word(w).size(); }

	// Optional ambient model: columns give the X^∨ basis in ambient
	// coordinates (e.g. the e_i of classical types).
	bool has_ambient() const { return !ambient_.empty(); }
	std::size_t ambient_dim() const { return ambient_.size() ? ambient_[0].size() : 0; }
	void set_ambient(std::vector<QVec> basis_columns) { ambient_ = std::move(basis_columns); }
	QVec to_ambient(const QVec& coords) const;
	QVec from_ambient(const QVec& amb) const;
	// Conjugate an ambient matrix into X^∨ coordinates (square ambient only).
	IntMatrix matrix_from_ambient(const IntMatrix& amb) const;
	IntMatrix matrix_to_ambient(const IntMatrix& w) const;

	// Character lattice basis in fundamental-weight coordinates when built
	// from a Cartan matrix; empty for explicit data.
	const IntMatrix& lattice_basis() const { return lattice_basis_; }
	void set_lattice_basis(IntMatrix b) { lattice_basis_ = std::move(b); }
	LatticeKind lattice_kind() const { return kind_; }
	void set_lattice_kind(LatticeKind k) { kind_ = k; }
	const std::string& family() const { return family_; }
	void set_family(std::string f) { family_ = std::move(f); }

	bool is_irreducible() const;
	std::size_t highest_root() const; // requires irreducible

  private:
	std::string label_;
	std::string family_;
	std::size_t rank_ = 0;
	std::vector<IntVec> roots_, coroots_;
	std::vector<std::size_t> simple_;
	std::vector<bool> positive_;
	std::vector<std::size_t> neg_;
	std::vector<IntVec> coeffs_;
	std::map<IntVec, std::size_t> root_idx_, coroot_idx_;
	std::vector<QVec> ambient_;
	IntMatrix lattice_basis_;
	LatticeKind kind_ = LatticeKind::Custom;
};

// Classical datum of type A/B/C/D. For Custom, `basis` rows give a basis of
// X in fundamental-weight coordinates and must span a lattice between Q and P.
RootDatum build_classical(char type, std::size_t n, LatticeKind lattice,
                          const IntMatrix& basis = IntMatrix());

// Datum from a Cartan matrix (entries <α_i, α_j^∨>), roots generated by
// reflection closure. Used for the exceptional table columns.
RootDatum build_from_cartan(const std::string& label, const IntMatrix& cartan,
                            LatticeKind lattice, const IntMatrix& basis = IntMatrix());
IntMatrix exceptional_cartan(const std::string& type); // E6 E7 E8 F4 G2

struct WeylGroup {
	std::vector<IntMatrix> elements; // identity first
	std::map<IntMatrix, std::size_t> index;
	std::size_t size() const { return elements.size(); }
	std::size_t find(const IntMatrix& w) const; // throws if absent
};
WeylGroup enumerate_weyl(const RootDatum& rd, std::size_t limit = 2000000);

// |W| by the orbit-stabilizer chain through parabolic subgroups.
Int weyl_order(const IntMatrix& cartan);
struct WeylOrderReport {
	Int order;
	std::vector<Int> primes;
};
WeylOrderReport weyl_order_primes(const RootDatum& rd);

struct BadPrimeReport {
	std::vector<Int> bad_primes;
	Int connection_index;
};
BadPrimeReport bad_prime_data(const RootDatum& rd);

struct TableColumn {
	std::string type;       // "A_n", "B_n", ..., "G_2"
	std::string row1_text;  // as printed in the table
	std::string row2_text;
	bool match = false;
	std::vector<std::string> details;
};
std::vector<TableColumn> table_check();

bool is_elliptic(const IntMatrix& w);
long matrix_order(const IntMatrix& w, long bound = 100000);

struct LambdaPair {
	std::vector<std::size_t> roots; // indices of Λ_{u,v}, sorted
	IntVec lambda;                  // sum of the coroots
	QVec half_class;                // ½λ mod X^∨
	bool trivial = false;
};
// Throws DomainError("NotCommuting") or ("NotInWeylGroup").
LambdaPair lambda_pair(const RootDatum& rd, const IntMatrix& u, const IntMatrix& v);

// ṅ_u ṅ_v = c · ṅ_{uv} for Tits lifts; returns c in X^∨ ⊗ Q/Z.
QVec tits_product_correction(const RootDatum& rd, const IntMatrix& u, const IntMatrix& v);
// [ṅ_u, ṅ_v] computed in the Tits group, for commuting u, v.
QVec tits_commutator(const RootDatum& rd, const IntMatrix& u, const IntMatrix& v);

// Signed permutation of {1..N} as a matrix on Z^N: images[i] = ±(j+1)
// means e_{i+1} -> ±e_{j+1}.
IntMatrix signed_permutation(const std::vector<int>& images);
// Cycle decomposition of a signed permutation matrix: each cycle as
// (length, number of sign changes). Throws if not a signed permutation.
std::vector<std::pair<int, int>> signed_cycle_type(const IntMatrix& amb);

} // namespace cuspidor
