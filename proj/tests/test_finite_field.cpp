#include "cuspidor/finite_field.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace cuspidor;

namespace {

std::vector<std::pair<unsigned long, unsigned>> odd_prime_powers(unsigned long bound) {
	std::vector<std::pair<unsigned long, unsigned>> out;
	for (unsigned long p = 3; p <= bound; p += 2) {
		bool prime = true;
		for (unsigned long d = 3; d * d <= p; d += 2)
			if (p % d == 0) prime = false;
		if (!prime) continue;
		unsigned long q = p;
		for (unsigned m = 1; q <= bound; ++m, q *= p) out.push_back({p, m});
	}
	return out;
}

} // namespace

TEST(Cyclotomic, Basics) {
	auto i = Cyclotomic::zeta(4);
	EXPECT_EQ(i * i, Cyclotomic(Rat(-1)));
	EXPECT_EQ(i.conj(), -i);
	auto w = Cyclotomic::zeta(3);
	EXPECT_TRUE((Cyclotomic(Rat(1)) + w + w * w).is_zero());
	auto z6 = Cyclotomic::zeta(6).reduced();
	EXPECT_EQ(z6.conductor(), 3u);
	EXPECT_EQ(z6, -(w * w));
	EXPECT_EQ(Cyclotomic::zeta(12, 3), i);
	EXPECT_EQ(Cyclotomic::zeta(12, 3).reduced().conductor(), 4u);
	EXPECT_EQ((i * Cyclotomic::zeta(8)).reduced(), Cyclotomic::zeta(8, 3));
	// √2 = ζ8 + ζ8^7 lives in Q(ζ8) and no smaller field
	auto r2 = Cyclotomic::zeta(8) + Cyclotomic::zeta(8, 7);
	EXPECT_EQ(r2 * r2, Cyclotomic(Rat(2)));
	EXPECT_EQ(r2.reduced().conductor(), 8u);
}

TEST(Cyclotomic, Polynomials) {
	EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<Int>{1, 0, -1, 0, 1}));
	EXPECT_EQ(cyclotomic_polynomial(9), (std::vector<Int>{1, 0, 0, 1, 0, 0, 1}));
	// Φ_105 is the first with a coefficient -2
	const auto& p105 = cyclotomic_polynomial(105);
	EXPECT_EQ(p105.size(), 49u);
	EXPECT_EQ(p105[7], Int(-2));
	EXPECT_EQ(euler_phi(105), 48u);
}

TEST(Cyclotomic, SumOfPrimitiveRootsIsMobius) {
	auto mobius = [](unsigned long n) {
		int s = 1;
		for (unsigned long p = 2; p * p <= n; ++p)
			if (n % p == 0) {
				n /= p;
				if (n % p == 0) return 0;
				s = -s;
			}
		if (n > 1) s = -s;
		return s;
	};
	for (unsigned long n = 1; n <= 40; ++n) {
		Cyclotomic s;
		for (unsigned long k = 0; k < n; ++k)
			if (std::gcd(k, n) == 1) s += Cyclotomic::zeta(n, (long)k);
		EXPECT_EQ(s, Cyclotomic(Rat(mobius(n)))) << n;
	}
}

TEST(FiniteField, ConwayModuli) {
	using V = std::vector<unsigned long>;
	EXPECT_EQ(FiniteField::get(3, 1)->modulus(), (V{1, 1}));
	EXPECT_EQ(FiniteField::get(7, 1)->modulus(), (V{4, 1}));
	EXPECT_EQ(FiniteField::get(3, 2)->modulus(), (V{2, 2, 1}));
	EXPECT_EQ(FiniteField::get(5, 2)->modulus(), (V{2, 4, 1}));
	EXPECT_EQ(FiniteField::get(3, 3)->modulus(), (V{1, 2, 0, 1}));
	EXPECT_EQ(FiniteField::get(7, 2)->modulus(), (V{3, 6, 1}));
	EXPECT_EQ(FiniteField::get(3, 4)->modulus(), (V{2, 0, 0, 2, 1}));
	EXPECT_EQ(FiniteField::get(5, 3)->modulus(), (V{3, 3, 0, 1}));
	EXPECT_EQ(FiniteField::get(3, 6)->modulus(), (V{2, 2, 1, 0, 2, 0, 1}));
}

TEST(FiniteField, Rejects) {
	EXPECT_THROW(FiniteField::get(2, 3), DomainError);
	EXPECT_THROW(FiniteField::get(9, 1), DomainError);
}

TEST(FiniteField, FieldAxiomsSampled) {
	std::mt19937 rng(7);
	for (auto [p, m] : odd_prime_powers(125)) {
		auto f = FiniteField::get(p, m);
		std::uniform_int_distribution<unsigned long> d(0, f->q() - 1);
		for (int t = 0; t < 200; ++t) {
			FiniteField::Elem a = d(rng), b = d(rng), c = d(rng);
			EXPECT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
			EXPECT_EQ(f->add(a, f->neg(a)), 0u);
			if (a) EXPECT_EQ(f->mul(a, f->inv(a)), 1u);
			EXPECT_EQ(f->frobenius(f->add(a, b)), f->add(f->frobenius(a), f->frobenius(b)));
		}
	}
}

TEST(FiniteField, QuadraticCharacterOfSeven) {
	auto f = FiniteField::get(7, 1);
	MultCharacter sgn(f, 2);
	EXPECT_EQ(sgn(3), Cyclotomic(Rat(-1)));
	for (FiniteField::Elem x : {1u, 2u, 4u}) EXPECT_EQ(sgn(x), Cyclotomic(Rat(1)));
	for (FiniteField::Elem x : {3u, 5u, 6u}) EXPECT_EQ(sgn(x), Cyclotomic(Rat(-1)));
	MultCharacter triv(f, 1);
	for (FiniteField::Elem x = 1; x < 7; ++x) EXPECT_EQ(triv(x), Cyclotomic(Rat(1)));
	EXPECT_THROW(MultCharacter(f, 4), DomainError);
}

TEST(FiniteField, OrderEightOnGF9) {
	auto f = FiniteField::get(3, 2);
	MultCharacter chi(f, 8);
	EXPECT_EQ(chi(f->generator()), Cyclotomic::zeta(8));
	EXPECT_EQ(f->generator(), 3u); // the class of x
}

TEST(FiniteField, MultiplicativityExhaustive) {
	for (auto [p, m] : odd_prime_powers(49)) {
		auto f = FiniteField::get(p, m);
		unsigned long q = f->q();
		for (unsigned long n = 1; n <= q - 1; ++n) {
			if ((q - 1) % n) continue;
			MultCharacter chi(f, n, 1);
			for (FiniteField::Elem x = 1; x < q; ++x)
				for (FiniteField::Elem y = 1; y < q; ++y)
					ASSERT_EQ(chi.value_exponent(f->mul(x, y)),
							  (chi.value_exponent(x) + chi.value_exponent(y)) % (long)n);
		}
		// one exact cyclotomic pass
		MultCharacter top(f, q - 1);
		for (FiniteField::Elem x = 1; x < q; x += 3)
			for (FiniteField::Elem y = 1; y < q; y += 5) EXPECT_EQ(top(f->mul(x, y)), top(x) * top(y));
	}
}

TEST(FiniteField, TowerCompatibility) {
	std::mt19937 rng(11);
	for (auto [p, a] : odd_prime_powers(25)) {
		auto small = FiniteField::get(p, a);
		for (unsigned d = 1; d <= 4; ++d) {
			auto big = FiniteField::get(p, a * d);
			EXPECT_EQ(big->norm_to(big->generator(), a), big->embed_from(*small, small->generator()))
				<< p << "^" << a << " d=" << d;
			std::uniform_int_distribution<unsigned long> u(0, small->q() - 1);
			for (int t = 0; t < 50; ++t) {
				FiniteField::Elem x = u(rng), y = u(rng);
				EXPECT_EQ(big->embed_from(*small, small->add(x, y)),
						  big->add(big->embed_from(*small, x), big->embed_from(*small, y)));
				EXPECT_EQ(big->embed_from(*small, small->mul(x, y)),
						  big->mul(big->embed_from(*small, x), big->embed_from(*small, y)));
				EXPECT_EQ(big->restrict_to(*small, big->embed_from(*small, x)), x);
			}
		}
	}
}

TEST(GaussSum, SmallExamples) {
	auto g3 = gauss_sum(FiniteField::get(3, 1));
	EXPECT_EQ(g3.g, Cyclotomic::zeta(3) - Cyclotomic::zeta(3, 2));
	EXPECT_EQ(g3.normalized, Cyclotomic::zeta(4));
	EXPECT_EQ(g3.normalized_square, -1);
	auto g5 = gauss_sum(FiniteField::get(5, 1));
	EXPECT_EQ(g5.normalized, Cyclotomic(Rat(1)));
	EXPECT_EQ(g5.normalized_square, 1);
	EXPECT_THROW(gauss_sum(FiniteField::get(5, 1), {0}), DomainError);
}

TEST(GaussSum, NormAndAlternateFormUpTo121) {
	for (auto [p, m] : odd_prime_powers(121)) {
		auto f = FiniteField::get(p, m);
		for (FiniteField::Elem c : {1u, (unsigned)f->generator()}) {
			auto r = gauss_sum(f, {c});
			EXPECT_TRUE(r.norm_ok) << p << "^" << m;
			EXPECT_TRUE(r.forms_agree) << p << "^" << m;
			// g² = sgn(-1) q
			long expect = ((f->q() - 1) / 2) % 2 == 0 ? 1 : -1;
			EXPECT_EQ(r.normalized_square, expect);
		}
	}
}
