#pragma once
// Exact elements of Q(ζ_N) in the power basis 1, ζ, …, ζ^{φ(N)-1}.

#include "cuspidor/exact.hpp"

#include <complex>
#include <string>
#include <vector>

namespace cuspidor {

const std::vector<Int>& cyclotomic_polynomial(unsigned long n); // Φ_n, low degree first
unsigned long euler_phi(unsigned long n);

class Cyclotomic {
  public:
	Cyclotomic() : n_(1), c_{Rat(0)} {}
	explicit Cyclotomic(const Rat& r) : n_(1), c_{r} {}
	static Cyclotomic zeta(unsigned long n, long k = 1);
	// Σ_j counts[j] ζ_n^j for j in [0, n)
	static Cyclotomic from_exponents(unsigned long n, const std::vector<Rat>& counts);
	static Cyclotomic from_exponents(unsigned long n, const std::vector<long>& counts);
	// Coefficients given directly in the power basis (length φ(n)).
	static Cyclotomic from_coeffs(unsigned long n, std::vector<Rat> coeffs);

	unsigned long conductor() const { return n_; }
	const std::vector<Rat>& coeffs() const { return c_; }

	Cyclotomic lifted(unsigned long m) const; // n must divide m
	// Same number written over the smallest possible conductor.
	Cyclotomic reduced() const;

	Cyclotomic operator+(const Cyclotomic& o) const;
	Cyclotomic operator-(const Cyclotomic& o) const;
	Cyclotomic operator-() const;
	Cyclotomic operator*(const Cyclotomic& o) const;
	Cyclotomic operator*(const Rat& r) const;
	Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
	Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
	bool operator==(const Cyclotomic& o) const;
	bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

	Cyclotomic galois(long a) const; // ζ ↦ ζ^a, gcd(a, n) = 1
	Cyclotomic conj() const { return galois(-1); }
	bool is_zero() const;
	bool is_rational() const;
	Rat rational_value() const; // throws unless rational
	std::complex<double> numeric() const;
	std::string str() const;

  private:
	Cyclotomic(unsigned long n, std::vector<Rat> c) : n_(n), c_(std::move(c)) {}
	unsigned long n_;
	std::vector<Rat> c_;
};

} // namespace cuspidor
