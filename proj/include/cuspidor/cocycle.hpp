#pragma once
// Cochains of a finite group with values in Q/Z (trivial action), families
// of composition defects η on a finite Γ-set, their β corrections and
// coherent splittings.
//
// Inhomogeneous cochains: e[g], z[g*n + h]. Homogeneous 2-cochains are
// recovered as η(a,b,c) = z(a^{-1}b, b^{-1}c). Coboundaries use
// (∂e)(g,h) = e(g) + e(h) - e(gh) and on homogeneous 1-cochains
// (∂ε)(a,b,c) = ε(b,c) - ε(a,c) + ε(a,b).

#include "cuspidor/finite_group.hpp"

#include <optional>
#include <random>

namespace cuspidor {

using Cochain1 = std::vector<Rat>;
using Cochain2 = std::vector<Rat>;

Cochain2 coboundary(const FiniteGroup& g, const Cochain1& e);
bool is_cocycle(const FiniteGroup& g, const Cochain2& z);
bool is_normalized(const FiniteGroup& g, const Cochain2& z);
bool is_homomorphism(const FiniteGroup& g, const Cochain1& e);
bool cochains_equal(const std::vector<Rat>& a, const std::vector<Rat>& b); // mod 1

struct CoboundarySolution {
	bool solvable = false;
	Cochain1 e;                  // ∂e = z
	std::vector<Cochain1> homs;  // generators of Hom(Γ, Q/Z)
	std::vector<Int> hom_orders;
	IntVec certificate;          // coefficients u over pairs with u·∂ = 0
	Rat certificate_value;       // u·z, nonzero mod 1
};
CoboundarySolution solve_coboundary(const FiniteGroup& g, const Cochain2& z);
// Exhaustive search over cochains with values in (1/den)Z/Z.
std::optional<Cochain1> brute_force_coboundary(const FiniteGroup& g, const Cochain2& z, unsigned long den);

class EtaFamily {
  public:
	EtaFamily() = default;
	// action[g * npoints + x] = g·x; eta[(x*N + y)*N + z]. Validates the
	// action, Γ-invariance, η(U,U,V) = η(U,V,V) = 0 and ∂η = 0 on X.
	// Throws DomainError("InvalidFamily").
	EtaFamily(FiniteGroup g, std::size_t npoints, std::vector<std::uint32_t> action, std::vector<Rat> eta);

	const FiniteGroup& group() const { return g_; }
	std::size_t npoints() const { return np_; }
	std::size_t act(std::size_t g, std::size_t x) const { return action_[g * np_ + x]; }
	const Rat& eta(std::size_t x, std::size_t y, std::size_t z) const { return eta_[(x * np_ + y) * np_ + z]; }
	const std::vector<Rat>& eta_table() const { return eta_; }
	const std::vector<std::uint32_t>& action_table() const { return action_; }

	std::vector<std::size_t> stabilizer(std::size_t x) const;
	std::vector<std::size_t> orbit(std::size_t x) const;
	std::vector<std::size_t> orbit_ids() const; // orbit index per point
	std::optional<std::size_t> transporter(std::size_t u, std::size_t v) const; // x with x·u = v

  private:
	FiniteGroup g_;
	std::size_t np_ = 0;
	std::vector<std::uint32_t> action_;
	std::vector<Rat> eta_;
};

// z(g,h) = η(U, gU, ghU). Throws DomainError("NotNormal").
Cochain2 eta_cocycle(const EtaFamily& f, std::size_t u);

// Homogeneous β_{V,U}(a,b) = η_U(ax,a,b) − η_U(ax,bx,b) for V = xU, stored
// as a table [a*n + b]. Throws DomainError("DifferentOrbits").
std::vector<Rat> beta_correction(const EtaFamily& f, std::size_t v, std::size_t u);
// ∂β = η_U − η_V, checked on all triples.
bool beta_identity_holds(const EtaFamily& f, std::size_t v, std::size_t u);

struct Splitting {
	std::vector<Cochain1> eps;             // per point, inhomogeneous ε_x(1, g)
	std::vector<std::size_t> orbit_id;     // per point
	std::vector<std::size_t> basepoints;   // per orbit
};

struct SplittingResult {
	bool exists = false;
	Splitting splitting;
	std::size_t failing_orbit = 0;
	IntVec certificate;
	Rat certificate_value;
	std::vector<std::vector<Cochain1>> homs; // Hom(Γ,Q/Z) generators per orbit
};
// Throws DomainError("UnequalStabilizers").
SplittingResult coherent_splitting(const EtaFamily& f);
bool verify_splitting(const EtaFamily& f, const Splitting& s);
// ε_x + δ for every x in the given orbit.
Splitting twist_splitting(const EtaFamily& f, const Splitting& s, std::size_t orbit, const Cochain1& hom);

// Synthetic families. X = Γ/N × {0..copies-1}; η = z(inflated) + ∂φ for a
// random Γ-invariant φ with φ(x,x) = 0 and values in (1/den)Z/Z.
EtaFamily synthetic_family(const FiniteGroup& g, const Cochain2& z, std::size_t copies,
                           const std::vector<std::size_t>& normal_subgroup, std::mt19937_64& rng,
                           unsigned long den = 4);
// Componentwise product on Γ₁×Γ₂ acting on X₁×X₂ with η = Inf η₁ + Inf η₂.
EtaFamily product_family(const EtaFamily& a, const EtaFamily& b);
// Inflation along the projection Γ₁×Γ₂ → Γ_i (i = 0, 1).
Cochain2 inflate_from_factor(const FiniteGroup& prod, std::size_t order_a, const Cochain2& z, int which);

// ½ g₁h₂ on (Z/2)², the generator of H²((Z/2)², Q/Z).
Cochain2 klein_cocycle();

// Bilinear cocycle Σ c_ij g_i h_j / gcd(d_i, d_j) on ⊕ Z/d_i (element
// indices as in FiniteGroup::abelian). Its class vanishes iff it is symmetric.
Cochain2 bilinear_cocycle(const std::vector<long>& factors, const std::vector<std::vector<long>>& c);

struct CorpusCase {
	std::string name;
	EtaFamily family;
	bool expect_trivial = false; // decided without linear algebra
};
// Trivial classes, coboundary-built classes, bilinear classes (trivial iff
// symmetric), the (Z/2)² class, inflations and products.
std::vector<CorpusCase> cocycle_corpus(std::uint64_t seed);

} // namespace cuspidor
