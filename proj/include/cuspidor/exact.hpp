#pragma once
// Exact lattice arithmetic: integer matrices, Smith form, finite abelian
// groups given by presentations, and linear systems over Q/Z.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cuspidor {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using QVec = std::vector<Rat>;

// Raised for any input that is well-formed but mathematically inadmissible.
// code() is a short machine tag such as "InvalidAction".
class DomainError : public std::runtime_error {
  public:
	DomainError(std::string code, const std::string& what)
		: std::runtime_error(what), code_(std::move(code)) {}
	const std::string& code() const { return code_; }

  private:
	std::string code_;
};

// Canonical a/b (mpq_class's two-argument constructor does not reduce).
Rat ratio(const Int& a, const Int& b);

// x mod 1 in [0,1)
Rat frac(const Rat& x);
QVec reduce_mod1(QVec v);
bool is_integral(const Rat& x);
bool is_integral(const QVec& v);
bool is_zero_mod1(const QVec& v);
Int mod_floor(const Int& a, const Int& m);
Int lcm_denominators(const QVec& v);

QVec to_qvec(const IntVec& v);
IntVec to_intvec(const std::vector<long>& v);

struct IntMatrix {
	std::size_t rows = 0;
	std::size_t cols = 0;
	std::vector<Int> data;

	IntMatrix() = default;
	IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

	static IntMatrix identity(std::size_t n);
	static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);
	static IntMatrix from_rows(const std::vector<IntVec>& rows);
	static IntMatrix from_columns(const std::vector<IntVec>& cols, std::size_t nrows);
	static IntMatrix diagonal(const std::vector<Int>& d);

	Int& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
	const Int& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

	IntMatrix operator*(const IntMatrix& o) const;
	IntMatrix operator+(const IntMatrix& o) const;
	IntMatrix operator-(const IntMatrix& o) const;
	IntMatrix scaled(const Int& k) const;
	bool operator==(const IntMatrix& o) const;
	bool operator!=(const IntMatrix& o) const { return !(*this == o); }
	bool operator<(const IntMatrix& o) const;

	IntVec apply(const IntVec& v) const;
	QVec apply(const QVec& v) const;
	IntVec row(std::size_t i) const;
	IntVec column(std::size_t j) const;
	IntMatrix transpose() const;
	bool is_square() const { return rows == cols; }
	bool is_identity() const;
	bool is_zero() const;
	Int det() const;
	IntMatrix pow(long e) const; // e >= 0
	// Integer inverse; throws DomainError("NotUnimodular") if det != ±1.
	IntMatrix inverse_unimodular() const;
	std::vector<std::vector<long>> to_long() const;
	std::string str() const;
};

IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b);
IntMatrix vconcat(const IntMatrix& a, const IntMatrix& b);

// Solve A x = b over Q for square invertible A; nullopt if singular.
std::optional<QVec> solve_rational(const IntMatrix& a, const QVec& b);
// Solve A x = b over Q for A with independent columns; nullopt if b is not
// in the column span.
std::optional<QVec> solve_rational_columns(const IntMatrix& a, const QVec& b);

struct SmithForm {
	IntMatrix U, D, V;       // U * m * V == D
	IntMatrix Uinv, Vinv;
	std::vector<Int> diag;   // length min(rows, cols), nonnegative
	std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& m);

// Z^k modulo the column span of a relation matrix, in invariant-factor form.
// Elements are addressed by normal-form coordinates: the torsion
// coordinates (reduced mod d_i) come first, then free coordinates.
class AbelianGroup {
  public:
	AbelianGroup() = default;
	static AbelianGroup from_relations(const IntMatrix& relations);
	// ⊕ Z/d_i with the identity presentation; entries equal to 1 are dropped,
	// entries equal to 0 become free factors.
	static AbelianGroup from_factors(const std::vector<Int>& factors);

	const std::vector<Int>& invariant_factors() const { return factors_; }
	std::size_t free_rank() const { return free_; }
	std::size_t ngens() const { return factors_.size() + free_; }
	std::size_t ambient_dim() const { return ambient_; }
	bool is_finite() const { return free_ == 0; }
	bool is_trivial() const { return factors_.empty() && free_ == 0; }
	Int order() const;    // requires finite
	Int exponent() const; // requires finite

	IntVec reduce(const IntVec& ambient) const;
	IntVec normalize(IntVec coords) const;
	IntVec lift(const IntVec& coords) const;
	IntVec generator(std::size_t i) const; // ambient vector of the i-th generator
	IntVec zero() const { return IntVec(ngens(), 0); }
	bool is_zero(const IntVec& coords) const;
	IntVec add(const IntVec& a, const IntVec& b) const;
	IntVec neg(const IntVec& a) const;
	IntVec scale(const Int& k, const IntVec& a) const;
	Int element_order(const IntVec& coords) const;

	// Mixed-radix indexing of a finite group; small groups only.
	std::size_t index_of(const IntVec& coords) const;
	IntVec element_at(std::size_t idx) const;
	std::vector<IntVec> elements() const;

	// Matrix on normal-form coordinates induced by an ambient endomorphism
	// that preserves the relation lattice.
	IntMatrix induced(const IntMatrix& ambient_map) const;

	// Projection matrix from ambient coordinates (rows = generators).
	const IntMatrix& projection() const { return proj_; }

  private:
	std::vector<Int> factors_;
	std::size_t free_ = 0;
	std::size_t ambient_ = 0;
	IntMatrix proj_;
	std::vector<IntVec> gens_;
};

// Quotient of a finite group by the subgroup generated by elements given in
// normal-form coordinates. The result's ambient space is A's coordinates.
AbelianGroup quotient(const AbelianGroup& a, const std::vector<IntVec>& elements);

// True if the matrix (on normal-form coordinates) defines an automorphism.
bool is_automorphism(const AbelianGroup& a, const IntMatrix& action);

// A_Σ = A / <(σ-1)a>. Actions act on normal-form coordinates of A.
// Throws DomainError("InvalidAction") for a non-automorphism.
AbelianGroup coinvariants(const AbelianGroup& a, const std::vector<IntMatrix>& actions);

// Solutions of N v ≡ 0 (mod Z^m) with v in (Q/Z)^n.
class QZKernel {
  public:
	QZKernel() = default;
	explicit QZKernel(const IntMatrix& n);

	const AbelianGroup& group() const { return group_; } // torsion part
	std::size_t free_rank() const { return free_; }
	bool is_finite() const { return free_ == 0; }
	std::size_t dim() const { return dim_; }

	bool contains(const QVec& v) const;
	// Coordinates of a torsion point; throws if v is not in the kernel or
	// has a nonzero free component.
	IntVec coords(const QVec& v) const;
	QVec point(const IntVec& coords) const;
	QVec generator(std::size_t i) const;
	std::vector<QVec> points() const;
	// Free directions as rational vectors spanning the divisible part.
	std::vector<QVec> free_directions() const;

  private:
	IntMatrix n_;
	SmithForm snf_;
	std::vector<std::size_t> torsion_idx_;
	std::vector<std::size_t> free_idx_;
	std::size_t free_ = 0;
	std::size_t dim_ = 0;
	AbelianGroup group_;
};

QZKernel twisted_fixed_points(const IntMatrix& f);

struct QZSolution {
	bool solvable = false;
	QVec particular;
	QZKernel kernel;
	// On failure: an integer row vector u with u N = 0 and u c not integral.
	IntVec certificate;
	std::vector<QVec> all() const; // particular + kernel (finite kernel only)
};

// N x ≡ c (mod Z^m) for rectangular N.
QZSolution solve_qz(const IntMatrix& n, const QVec& c);
// (M - 1) x ≡ c.
QZSolution solve_affine(const IntMatrix& m, const QVec& c);

std::vector<Int> prime_factors(Int n);

} // namespace cuspidor
