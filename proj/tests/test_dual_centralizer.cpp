#include "cuspidor/dual_centralizer.hpp"

#include <gtest/gtest.h>

#include <chrono>
#include <random>

using namespace cuspidor;

namespace {

QVec qv(std::initializer_list<long> num, long den) {
	QVec v;
	for (long x : num)
		v.push_back(ratio(x, den));
	return v;
}

IntMatrix perm_matrix(const std::vector<int>& images) { return signed_permutation(images); }

NormalizerElement weyl_element(const RootDatum& rd, const IntMatrix& w, QVec t = {}) {
	if (t.empty())
		t.assign(rd.rank(), 0);
	return {t, w, IntMatrix::identity(rd.rank())};
}

std::size_t brute_max_multiplicity(const ExtensionDescriptor& e) {
	return static_cast<std::size_t>(brute_force_census(concrete_group(e)).max_multiplicity);
}

} // namespace

TEST(NormalizerModel, GroupLaw) {
	RootDatum rd = build_classical('C', 3, LatticeKind::Adjoint);
	WeylGroup W = enumerate_weyl(rd);
	NormalizerModel m(rd);
	std::mt19937_64 rng(5);
	auto random_elt = [&] {
		QVec t;
		for (std::size_t i = 0; i < rd.rank(); ++i)
			t.push_back(ratio(static_cast<long>(rng() % 12), 12));
		return weyl_element(rd, W.elements[rng() % W.size()], t);
	};
	for (int it = 0; it < 40; ++it) {
		auto a = random_elt(), b = random_elt(), c = random_elt();
		EXPECT_EQ(m.mul(m.mul(a, b), c), m.mul(a, m.mul(b, c)));
		EXPECT_EQ(m.mul(a, m.inv(a)), m.identity());
		EXPECT_EQ(m.mul(m.inv(a), a), m.identity());
	}
	// commutators of commuting Tits lifts agree with the Tits-group routine
	for (const auto& u : W.elements)
		for (const auto& v : {W.elements[3], W.elements[17]}) {
			if (u * v != v * u)
				continue;
			auto x = weyl_element(rd, u), y = weyl_element(rd, v);
			auto c = m.mul(m.mul(x, y), m.inv(m.mul(y, x)));
			ASSERT_TRUE(c.weyl.is_identity());
			EXPECT_EQ(c.torus, tits_commutator(rd, u, v));
		}
}

TEST(NormalizerModel, PinnedOuterAutomorphism) {
	// diagram flip of A3 in simple-coroot coordinates
	RootDatum rd = build_classical('A', 3, LatticeKind::SimplyConnected);
	IntMatrix flip = IntMatrix::from_rows(std::vector<std::vector<long>>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
	NormalizerModel m(rd);
	WeylGroup W = enumerate_weyl(rd);
	NormalizerElement o{QVec(3, 0), IntMatrix::identity(3), flip};
	for (const auto& w : W.elements) {
		auto x = weyl_element(rd, w);
		auto conj = m.mul(m.mul(o, x), m.inv(o));
		EXPECT_EQ(conj.weyl, flip * w * flip);
		EXPECT_TRUE(is_zero_mod1(conj.torus)); // o ṅ_w o⁻¹ = ṅ_{o(w)}
	}
}

TEST(Centralizer, Spin9) {
	auto t0 = std::chrono::steady_clock::now();
	ParameterDatum d = spin9_datum();
	CentralizerReport r = centralizer(d);
	EXPECT_EQ(r.fixed_order, 16);
	EXPECT_EQ(r.fixed_free_rank, 0u);
	ASSERT_EQ(r.omega.size(), 2u);
	EXPECT_EQ(r.omega_factors, std::vector<long>{2});
	EXPECT_EQ(r.order, 32);
	EXPECT_TRUE(r.mult_one);

	// (μ4)^4 with all squares equal, modulo the diagonal μ2
	std::size_t tuples = 0;
	for (int a = 0; a < 4; ++a)
		for (int b = 0; b < 4; ++b)
			for (int c = 0; c < 4; ++c)
				for (int e = 0; e < 4; ++e)
					if ((2 * a) % 4 == (2 * b) % 4 && (2 * b) % 4 == (2 * c) % 4 && (2 * c) % 4 == (2 * e) % 4)
						++tuples;
	EXPECT_EQ(Int(static_cast<unsigned long>(tuples / 2)), r.fixed_order);

	// fixed torus is the 2-torsion
	for (const auto& g : r.fixed_generators)
		EXPECT_TRUE(is_integral(QVec{2 * g[0], 2 * g[1], 2 * g[2], 2 * g[3]}));

	// the nontrivial Weyl element reverses the four ambient coordinates
	IntMatrix rev = perm_matrix({4, 3, 2, 1});
	EXPECT_EQ(d.rd.matrix_to_ambient(r.omega[1].weyl), rev);

	ASSERT_TRUE(r.extension.has_value());
	EXPECT_EQ(r.extension->order(), 32u);
	EXPECT_EQ(brute_max_multiplicity(*r.extension), 1u);
	double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
	EXPECT_LT(dt, 5.0);
}

TEST(Centralizer, RegularDatumHasTrivialWeylPart) {
	for (long q : {5L, 7L, 11L, 13L}) {
		CentralizerReport r = centralizer(regular_pgl2_datum(q));
		EXPECT_EQ(r.omega.size(), 1u);
		EXPECT_EQ(r.order, r.fixed_order);
		EXPECT_EQ(r.fixed_order, 2);
		EXPECT_TRUE(r.mult_one);
	}
}

TEST(Centralizer, D4KleinStabilizer) {
	ParameterDatum d = d4_datum();
	CentralizerReport r = centralizer(d);
	ASSERT_EQ(r.omega.size(), 4u);
	EXPECT_EQ(r.omega_factors, (std::vector<long>{2, 2}));
	std::set<IntMatrix> got;
	for (const auto& o : r.omega)
		got.insert(d.rd.matrix_to_ambient(o.weyl));
	IntMatrix w1 = perm_matrix({-1, 2, 3, -4}), w2 = perm_matrix({-4, -3, -2, -1});
	EXPECT_EQ(got, (std::set<IntMatrix>{IntMatrix::identity(4), w1, w2, w1 * w2}));
	EXPECT_TRUE(r.mult_one);
	ASSERT_EQ(r.commutators.size(), 1u);
	EXPECT_TRUE(r.commutators[0].trivial_in_coinvariants);
	EXPECT_EQ(brute_max_multiplicity(*r.extension), 1u);

	auto v = mult_one_check_suite(d);
	EXPECT_TRUE(v.mult_one);
	EXPECT_TRUE(v.consistent);
}

TEST(Centralizer, Biquadratic) {
	auto t0 = std::chrono::steady_clock::now();
	ParameterDatum d = biquadratic_datum_derivation();
	EXPECT_EQ(d.rd.rank(), 9u);
	EXPECT_EQ(d.rd.num_roots(), 24u);
	CentralizerReport r = centralizer(d);
	EXPECT_EQ(r.omega.size(), 4u);
	EXPECT_EQ(r.omega_factors, (std::vector<long>{2, 2}));
	EXPECT_FALSE(r.mult_one);
	EXPECT_FALSE(r.adjoint_mult_one);
	ASSERT_TRUE(r.adjoint_extension.has_value());
	EXPECT_EQ(r.adjoint_extension->a_order(), 8u); // (ε, η, δ)

	ASSERT_EQ(r.commutators.size(), 1u);
	const auto& c = r.commutators[0];
	EXPECT_FALSE(c.trivial_in_coinvariants);
	EXPECT_FALSE(c.adjoint_trivial_in_coinvariants);
	// simple-root values of diag(1, ε, η, εη) × diag(1, δ, δ, 1)
	ASSERT_EQ(c.adjoint.size(), 6u);
	Rat eps = c.adjoint[0], eta = frac(c.adjoint[1] - c.adjoint[0]), delta = c.adjoint[3];
	EXPECT_EQ(c.adjoint[2], eps);
	EXPECT_EQ(c.adjoint[4], 0);
	EXPECT_EQ(c.adjoint[5], delta);
	EXPECT_EQ(eps, 0);           // ε = 1
	EXPECT_EQ(eta, 0);           // η = 1
	EXPECT_EQ(delta, ratio(1, 2)); // δ = −1

	EXPECT_GT(brute_max_multiplicity(*r.extension), 1u);

	auto v = mult_one_check_suite(d);
	EXPECT_FALSE(v.mult_one);
	EXPECT_TRUE(v.consistent); // no hypothesis demands multiplicity one
	double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
	EXPECT_LT(dt, 30.0);
}

TEST(Centralizer, ConjugationInvariance) {
	for (ParameterDatum d : {spin9_datum(), d4_datum(), biquadratic_datum_derivation()}) {
		CentralizerReport base = centralizer(d);
		WeylGroup W = enumerate_weyl(d.rd);
		std::mt19937_64 rng(11);
		for (int it = 0; it < 3; ++it) {
			QVec t;
			for (std::size_t i = 0; i < d.rd.rank(); ++i)
				t.push_back(ratio(static_cast<long>(rng() % 8), 8));
			auto x = weyl_element(d.rd, W.elements[rng() % W.size()], t);
			CentralizerReport r = centralizer(conjugate_datum(d, x));
			EXPECT_EQ(r.fixed_order, base.fixed_order) << d.name;
			EXPECT_EQ(r.omega.size(), base.omega.size()) << d.name;
			EXPECT_EQ(r.order, base.order) << d.name;
			EXPECT_EQ(r.mult_one, base.mult_one) << d.name;
			EXPECT_EQ(r.omega_factors, base.omega_factors) << d.name;
		}
	}
}

TEST(Centralizer, Errors) {
	ParameterDatum d = spin9_datum();
	d.relations[0].rhs = {{0, 9}}; // ζ has order 12, not 10
	try {
		centralizer(d);
		FAIL();
	} catch (const DomainError& e) {
		EXPECT_EQ(e.code(), "RelationFails");
	}
	ParameterDatum bad = spin9_datum();
	bad.generators[0].outer = bad.rd.simple_reflection(0); // not pinned
	try {
		validate_datum(bad);
		FAIL();
	} catch (const DomainError& e) {
		EXPECT_EQ(e.code(), "InvalidDatum");
	}
	ParameterDatum small = spin9_datum();
	try {
		centralizer(small, 100);
		FAIL();
	} catch (const DomainError& e) {
		EXPECT_EQ(e.code(), "TooLarge");
	}
}

TEST(Centralizer, SplitTorusHasPositiveRank) {
	// trivial Frobenius on PGL2: the fixed torus is all of T
	ParameterDatum d;
	d.name = "split";
	d.rd = build_classical('A', 1, LatticeKind::Adjoint);
	IntMatrix I = IntMatrix::identity(1);
	d.generators.push_back({QVec{ratio(1, 2)}, I, I});
	CentralizerReport r = centralizer(d);
	EXPECT_EQ(r.fixed_free_rank, 1u);
	EXPECT_FALSE(r.extension.has_value());
	EXPECT_FALSE(r.notes.empty());
}

// ---- D_2n ----

TEST(D2n, FullSweep) {
	auto t0 = std::chrono::steady_clock::now();
	std::size_t runs = 0;
	for (long n = 2; n <= 4; ++n)
		for (long q : {1L, 3L, 5L, 7L, 9L, 11L})
			for (const auto& c : d2n_cycle_types(n)) {
				D2nReport r = d2n_verify(n, q, c);
				EXPECT_TRUE(r.ok()) << n << " " << q;
				EXPECT_TRUE(r.lambda_w1_w0.empty());
				EXPECT_TRUE(r.b_even);
				EXPECT_EQ(r.b, 2 * n - static_cast<long>(r.b_set.size()));
				EXPECT_TRUE(r.w1_lift_fixed && r.w2_lift_fixed);
				EXPECT_TRUE(r.commutator_trivial);
				++runs;
			}
	EXPECT_EQ(runs, 6u * (1 + 2 + 4));
	double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
	EXPECT_LT(dt, 10.0);
}

TEST(D2n, ClosedFormsForNEqualsTwo) {
	for (long q : {1L, 3L, 5L, 7L, 9L, 11L, 13L, 25L, 27L}) {
		D2nReport r = d2n_verify(2, q, {1, 1});
		EXPECT_EQ(r.lambda_w1_w2,
		          (std::vector<std::string>{"e1-e2", "e1-e3", "e2+e4", "e3+e4"}));
		EXPECT_EQ(r.lambda_w1_w2_sum, (IntVec{2, 0, 0, 2}));
		EXPECT_EQ(r.b, 0);
		EXPECT_EQ(r.b_set, (std::vector<long>{1, 2, 3, 4}));
		EXPECT_EQ(r.correction, QVec(4, 0));
		EXPECT_TRUE(r.commutator_trivial);
	}
}

TEST(D2n, Examples) {
	D2nReport r = d2n_verify(3, 5, {1, 2});
	EXPECT_TRUE(r.commutator_trivial);
	EXPECT_EQ(r.lambda_w1_w2_sum, (IntVec{4, 0, 0, 0, 0, 4}));
	EXPECT_TRUE(r.half_lambda_w1_w2_in_root_lattice);
	EXPECT_EQ(r.b, 2);
	EXPECT_EQ(r.correction, (QVec{ratio(1, 3), 0, 0, 0, 0, ratio(1, 3)}));
	// μ has denominators dividing q^ℓ + 1: 6 on the fixed pair, 26 on the 2-cycles
	for (std::size_t i : {0u, 5u})
		EXPECT_EQ(Int(6) % r.mu_denominators[i], 0);
	for (std::size_t i : {1u, 2u, 3u, 4u})
		EXPECT_EQ(Int(26) % r.mu_denominators[i], 0);

	// w0 = w0'·m w0' m⁻¹ with w0' = (−1)(negative 2-cycle)
	EXPECT_EQ(r.w0, perm_matrix({-1, 3, -2, -5, 4, -6}));
	EXPECT_EQ(r.w1, perm_matrix({-1, 2, 3, 4, 5, -6}));
	EXPECT_EQ(r.w2, perm_matrix({-6, -5, -4, -3, -2, -1}));

	D2nReport r2 = d2n_verify(2, 1, {1, 1});
	EXPECT_TRUE(r2.commutator_trivial);
	EXPECT_TRUE(r2.ok());
}

TEST(D2n, CorrectionIsACoboundary) {
	// x = b/(q+1) e_1 is f-fixed and (1 − w2)x is the correction term
	for (long n = 2; n <= 4; ++n)
		for (long q : {3L, 5L, 7L})
			for (const auto& c : d2n_cycle_types(n)) {
				D2nReport r = d2n_verify(n, q, c, false);
				std::size_t N = static_cast<std::size_t>(2 * n);
				QVec x(N, 0);
				x[0] = ratio(r.b, q + 1);
				IntMatrix F = r.w0.scaled(q) - IntMatrix::identity(N);
				QVec fx = F.apply(x);
				EXPECT_TRUE(is_integral(fx));
				QVec y = (IntMatrix::identity(N) - r.w2).apply(x);
				EXPECT_EQ(y, r.correction);
			}
}

TEST(D2n, Errors) {
	auto code = [](auto f) {
		try {
			f();
		} catch (const DomainError& e) {
			return e.code();
		}
		return std::string("none");
	};
	EXPECT_EQ(code([] { d2n_verify(2, 3, {2}); }), "InvalidCycleType");
	EXPECT_EQ(code([] { d2n_verify(3, 3, {1, 1}); }), "InvalidCycleType");
	EXPECT_EQ(code([] { d2n_verify(3, 3, {1, 0, 2}); }), "InvalidCycleType");
	EXPECT_EQ(code([] { d2n_verify(1, 3, {1}); }), "InvalidCycleType");
	EXPECT_EQ(code([] { d2n_verify(2, 2, {1, 1}); }), "InvalidModulus");
	EXPECT_EQ(code([] { d2n_verify(2, 15, {1, 1}); }), "InvalidModulus");
	EXPECT_EQ(code([] { d2n_verify(2, 9, {1, 1}); }), "none");
	EXPECT_EQ(d2n_cycle_types(4).size(), 4u);
	EXPECT_EQ(d2n_cycle_types(5).size(), 8u);
}
