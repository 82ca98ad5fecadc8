#include "cuspidor/exact.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace cuspidor;

namespace {

IntMatrix M(std::vector<std::vector<long>> r) { return IntMatrix::from_rows(r); }

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
	std::uniform_int_distribution<int> d(lo, hi);
	IntMatrix m(r, c);
	for (auto& x : m.data)
		x = d(rng);
	return m;
}

} // namespace

TEST(SmithForm, CoprimeDiagonal) {
	auto s = smith_normal_form(M({{2, 0}, {0, 3}}));
	EXPECT_EQ(s.D, M({{1, 0}, {0, 6}}));
	EXPECT_EQ(s.U * M({{2, 0}, {0, 3}}) * s.V, s.D);
}

TEST(SmithForm, IdentityAndZero) {
	auto s = smith_normal_form(IntMatrix::identity(3));
	EXPECT_EQ(s.D, IntMatrix::identity(3));
	EXPECT_EQ(s.U, IntMatrix::identity(3));
	EXPECT_EQ(s.V, IntMatrix::identity(3));
	auto z = smith_normal_form(M({{0}}));
	EXPECT_EQ(z.D, M({{0}}));
	EXPECT_EQ(z.rank, 0u);
}

TEST(SmithForm, RandomMatricesReconstruct) {
	std::mt19937 rng(20240611);
	for (int trial = 0; trial < 300; ++trial) {
		std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
		IntMatrix m = random_matrix(rng, r, c, -9, 9);
		auto s = smith_normal_form(m);
		ASSERT_EQ(s.U * m * s.V, s.D) << m.str();
		ASSERT_EQ(abs(s.U.det()), 1);
		ASSERT_EQ(abs(s.V.det()), 1);
		ASSERT_TRUE((s.U * s.Uinv).is_identity());
		ASSERT_TRUE((s.V * s.Vinv).is_identity());
		for (std::size_t i = 0; i < s.D.rows; ++i)
			for (std::size_t j = 0; j < s.D.cols; ++j)
				if (i != j)
					ASSERT_EQ(s.D(i, j), 0);
		for (std::size_t i = 0; i + 1 < s.diag.size(); ++i) {
			ASSERT_GE(s.diag[i], 0);
			if (s.diag[i] == 0)
				ASSERT_EQ(s.diag[i + 1], 0);
			else
				ASSERT_TRUE(mpz_divisible_p(s.diag[i + 1].get_mpz_t(), s.diag[i].get_mpz_t()));
		}
		// same input, same output
		auto s2 = smith_normal_form(m);
		ASSERT_EQ(s2.U, s.U);
		ASSERT_EQ(s2.V, s.V);
	}
}

TEST(SmithForm, DeterminantMatchesDiagonalProduct) {
	std::mt19937 rng(7);
	for (int trial = 0; trial < 100; ++trial) {
		std::size_t n = 1 + rng() % 4;
		IntMatrix m = random_matrix(rng, n, n, -6, 6);
		auto s = smith_normal_form(m);
		Int p = 1;
		for (const auto& d : s.diag)
			p *= d;
		ASSERT_EQ(p, abs(m.det()));
	}
}

TEST(AbelianGroup, PresentationNormalForm) {
	// Z^2 / <(2,0),(0,3)> = Z/6
	auto g = AbelianGroup::from_relations(M({{2, 0}, {0, 3}}));
	ASSERT_EQ(g.invariant_factors().size(), 1u);
	EXPECT_EQ(g.invariant_factors()[0], 6);
	EXPECT_EQ(g.order(), 6);
	// every ambient vector reduces consistently with the relations
	for (long a = -4; a <= 4; ++a)
		for (long b = -4; b <= 4; ++b) {
			IntVec x{a, b}, y{a + 2, b - 3};
			EXPECT_EQ(g.reduce(x), g.reduce(y));
			EXPECT_EQ(g.reduce(g.lift(g.reduce(x))), g.reduce(x));
		}
	auto free = AbelianGroup::from_relations(IntMatrix(2, 0));
	EXPECT_EQ(free.free_rank(), 2u);
	EXPECT_FALSE(free.is_finite());
}

TEST(FixedPoints, Examples) {
	auto k = twisted_fixed_points(M({{-3}}));
	ASSERT_TRUE(k.is_finite());
	EXPECT_EQ(k.group().order(), 4);
	auto id = twisted_fixed_points(IntMatrix::identity(2));
	EXPECT_EQ(id.free_rank(), 2u);
	EXPECT_TRUE(id.group().is_trivial());
	auto sw = twisted_fixed_points(M({{0, -3}, {-3, 0}}));
	EXPECT_EQ(sw.group().order(), 8);
}

// Count fixed points on the grid (1/N)Z^r / Z^r by brute force.
TEST(FixedPoints, ExhaustiveEnumerationOracle) {
	std::mt19937 rng(99);
	int tested = 0;
	while (tested < 60) {
		std::size_t r = 1 + rng() % 3;
		IntMatrix f = random_matrix(rng, r, r, -3, 3);
		Int det = (f - IntMatrix::identity(r)).det();
		if (det == 0 || abs(det) > 60)
			continue;
		++tested;
		long N = Int(abs(det)).get_si();
		long total = 1;
		for (std::size_t i = 0; i < r; ++i)
			total *= N;
		long count = 0;
		for (long idx = 0; idx < total; ++idx) {
			QVec v(r);
			long t = idx;
			for (std::size_t i = 0; i < r; ++i) {
				v[i] = ratio(t % N, N);
				t /= N;
			}
			QVec fv = f.apply(v);
			bool fixed = true;
			for (std::size_t i = 0; i < r; ++i)
				fixed = fixed && is_integral(fv[i] - v[i]);
			count += fixed;
		}
		auto k = twisted_fixed_points(f);
		ASSERT_EQ(k.group().order(), count) << f.str();
		ASSERT_EQ(count, N);
		// section and coordinates are inverse
		for (const auto& c : k.group().elements()) {
			QVec p = k.point(c);
			ASSERT_TRUE(k.contains(p));
			ASSERT_EQ(k.coords(p), c);
		}
	}
}

TEST(Coinvariants, Examples) {
	auto z2 = AbelianGroup::from_factors({2});
	EXPECT_EQ(coinvariants(z2, {IntMatrix::identity(1)}).order(), 2);
	auto z4 = AbelianGroup::from_factors({4});
	EXPECT_EQ(coinvariants(z4, {M({{-1}})}).order(), 2);
	auto e3 = AbelianGroup::from_factors({2, 2, 2});
	auto swap = M({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
	auto co = coinvariants(e3, {swap});
	EXPECT_EQ(co.order(), 4);
	EXPECT_FALSE(co.is_zero(co.reduce(IntVec{0, 0, 1})));
	EXPECT_TRUE(co.is_zero(co.reduce(IntVec{1, 1, 0})));
}

TEST(Coinvariants, RejectsNonAutomorphisms) {
	auto z4 = AbelianGroup::from_factors({4});
	EXPECT_THROW(coinvariants(z4, {M({{2}})}), DomainError);
	auto g = AbelianGroup::from_factors({2, 4});
	// sends the order-2 generator to an element of order 4
	EXPECT_THROW(coinvariants(g, {M({{1, 0}, {1, 1}})}), DomainError);
}

// Projection is a homomorphism and kills (σ-1)a, by enumeration.
TEST(Coinvariants, HomomorphismByEnumeration) {
	std::vector<std::vector<Int>> groups = {{4}, {2, 2}, {2, 4}, {3, 3}, {2, 2, 2}, {4, 4}, {2, 2, 4}, {8, 8}};
	std::mt19937 rng(5);
	for (const auto& fs : groups) {
		auto a = AbelianGroup::from_factors(fs);
		std::size_t k = a.ngens();
		int found = 0;
		for (int tries = 0; tries < 400 && found < 3; ++tries) {
			IntMatrix s = random_matrix(rng, k, k, -3, 3);
			if (!is_automorphism(a, s))
				continue;
			++found;
			auto co = coinvariants(a, {s});
			auto elems = a.elements();
			for (const auto& x : elems) {
				IntVec sx = a.normalize(s.apply(x));
				IntVec d = a.add(sx, a.neg(x));
				ASSERT_TRUE(co.is_zero(co.reduce(d)));
				for (const auto& y : elems)
					ASSERT_EQ(co.reduce(a.add(x, y)), co.normalize(co.add(co.reduce(x), co.reduce(y))));
			}
		}
		EXPECT_GT(found, 0);
	}
}

TEST(SolveAffine, Examples) {
	auto h = solve_affine(M({{-3}}), QVec{0});
	ASSERT_TRUE(h.solvable);
	EXPECT_EQ(h.all().size(), 4u);
	auto s = solve_affine(M({{-3}}), QVec{ratio(1, 2)});
	ASSERT_TRUE(s.solvable);
	bool has_three_eighths = false;
	for (const auto& x : s.all()) {
		EXPECT_TRUE(is_integral(Rat(-4) * x[0] - ratio(1, 2)));
		has_three_eighths = has_three_eighths || x[0] == ratio(3, 8);
	}
	EXPECT_TRUE(has_three_eighths);
	auto none = solve_affine(IntMatrix::identity(2), QVec{ratio(1, 3), 0});
	EXPECT_FALSE(none.solvable);
	ASSERT_FALSE(none.certificate.empty());
}

TEST(SolveQZ, RectangularSystemsAgreeWithBruteForce) {
	std::mt19937 rng(11);
	for (int trial = 0; trial < 40; ++trial) {
		std::size_t m = 1 + rng() % 3, n = 1 + rng() % 2;
		IntMatrix a = random_matrix(rng, m, n, -4, 4);
		QVec c(m);
		for (auto& x : c)
			x = ratio(static_cast<long>(rng() % 6), 6);
		auto sol = solve_qz(a, c);
		// brute force over (1/N)Z/Z with N a multiple of every relevant denominator
		long N = 6 * 24;
		bool any = false;
		std::vector<long> idx(n, 0);
		long total = 1;
		for (std::size_t i = 0; i < n; ++i)
			total *= N;
		for (long t = 0; t < total && !any; ++t) {
			QVec x(n);
			long u = t;
			for (std::size_t i = 0; i < n; ++i) {
				x[i] = ratio(u % N, N);
				u /= N;
			}
			QVec ax = a.apply(x);
			bool ok = true;
			for (std::size_t i = 0; i < m; ++i)
				ok = ok && is_integral(ax[i] - c[i]);
			any = ok;
		}
		if (sol.solvable) {
			QVec ax = a.apply(sol.particular);
			for (std::size_t i = 0; i < m; ++i)
				ASSERT_TRUE(is_integral(ax[i] - c[i]));
		} else {
			// certificate: u A = 0 and u c not integral
			IntVec ua(n, 0);
			Rat uc = 0;
			for (std::size_t i = 0; i < m; ++i) {
				for (std::size_t j = 0; j < n; ++j)
					ua[j] += sol.certificate[i] * a(i, j);
				uc += Rat(sol.certificate[i]) * c[i];
			}
			for (const auto& v : ua)
				ASSERT_EQ(v, 0);
			ASSERT_FALSE(is_integral(uc));
			// full-rank systems are decided exactly by the grid search
			if (sol.kernel.is_finite())
				ASSERT_FALSE(any);
		}
	}
}
