#pragma once
// GF(p^m) with a deterministic tower-compatible modulus. Elements are
// encoded as integers in [0, q) whose base-p digits are the coefficients of
// the polynomial representative (digit i = coefficient of x^i).

#include "cuspidor/cyclotomic.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace cuspidor {

class FiniteField {
  public:
	using Elem = std::uint32_t;

	// Shared, immutable field context. Throws DomainError("InvalidField").
	static std::shared_ptr<const FiniteField> get(unsigned long p, unsigned m);

	unsigned long p() const { return p_; }
	unsigned m() const { return m_; }
	unsigned long q() const { return q_; }
	// Monic modulus, low degree first (length m+1).
	const std::vector<unsigned long>& modulus() const { return modulus_; }
	Elem generator() const { return exp_[1 % (q_ - 1)]; }

	Elem zero() const { return 0; }
	Elem one() const { return 1; }
	Elem from_int(long a) const; // image of Z → F_p ⊂ GF(q)
	Elem add(Elem a, Elem b) const;
	Elem sub(Elem a, Elem b) const;
	Elem neg(Elem a) const;
	Elem mul(Elem a, Elem b) const;
	Elem inv(Elem a) const;
	Elem pow(Elem a, long e) const;
	Elem gen_pow(long e) const; // generator^e
	long dlog(Elem a) const;    // a ≠ 0, result in [0, q-1)
	Elem frobenius(Elem a, unsigned k = 1) const;
	unsigned long trace_to_prime(Elem a) const; // Tr_{GF(q)/F_p}, in [0, p)

	// Norm to the subfield of degree d (d | m); the result is in this field.
	Elem norm_to(Elem a, unsigned d) const;
	// Image of an element of the degree-d subfield under the compatible embedding.
	Elem embed_from(const FiniteField& sub, Elem a) const;
	// Inverse of embed_from; throws if a is not in the subfield.
	Elem restrict_to(const FiniteField& sub, Elem a) const;

	std::vector<long> digits(Elem a) const;

  private:
	FiniteField(unsigned long p, unsigned m);
	unsigned long p_;
	unsigned m_;
	unsigned long q_;
	std::vector<unsigned long> modulus_;
	std::vector<Elem> exp_; // exp_[i] = g^i for i in [0, q-1)
	std::vector<std::int64_t> log_;
	std::vector<unsigned long> trace_basis_; // Tr(x^j), j < m
};

using FieldPtr = std::shared_ptr<const FiniteField>;

// x ↦ ζ_n^{e·dlog x}
class MultCharacter {
  public:
	MultCharacter(FieldPtr f, unsigned long order, long exponent = 1);
	unsigned long order() const { return n_; }
	long exponent() const { return e_; }
	// Exponent of ζ_n in χ(x); x ≠ 0.
	long value_exponent(FiniteField::Elem x) const;
	Cyclotomic operator()(FiniteField::Elem x) const;

  private:
	FieldPtr f_;
	unsigned long n_;
	long e_;
};

// Λ(x) = ζ_p^{Tr(c x)}
struct AdditiveCharacter {
	FiniteField::Elem c = 1;
};

struct GaussSum {
	Cyclotomic g;               // Σ_{x≠0} sgn(x) Λ(x)
	Cyclotomic alternate;       // Σ_x Λ(x²)
	Cyclotomic norm;            // g·conj(g)
	long normalized_square = 0; // g²/q = sgn(-1)
	Cyclotomic normalized;      // g/√q, one of ±1, ±i
	bool norm_ok = false;
	bool forms_agree = false;
};

GaussSum gauss_sum(const FieldPtr& f, AdditiveCharacter lambda = {});

} // namespace cuspidor
