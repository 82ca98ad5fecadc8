#include "cuspidor/clifford.hpp"

#include <gtest/gtest.h>

#include <chrono>
#include <set>

using namespace cuspidor;

namespace {

std::map<std::size_t, std::size_t> dims(std::initializer_list<std::pair<const std::size_t, std::size_t>> l) { return l; }

IntMatrix M(const std::vector<std::vector<long>>& r) { return IntMatrix::from_rows(r); }

ExtensionDescriptor s3_shaped() {
	return ExtensionDescriptor({3}, {2}, {M({{-1}})}, std::vector<std::vector<long>>(4, std::vector<long>{0}));
}

bool oracle_mult_one(const ExtensionDescriptor& e) { return brute_force_census(concrete_group(e)).max_multiplicity <= 1; }

} // namespace

TEST(CharacterTable, SmallGroups) {
	auto z4 = FiniteGroup::cyclic(4);
	auto t = character_table(z4);
	EXPECT_EQ(t.size(), 4u);
	for (long d : t.degrees) EXPECT_EQ(d, 1);
	EXPECT_TRUE(verify_orthogonality(t));

	auto s4 = FiniteGroup::from_permutations({{1, 0, 2, 3}, {1, 2, 3, 0}});
	auto t4 = character_table(s4);
	EXPECT_EQ(t4.degrees, (std::vector<long>{1, 1, 2, 3, 3}));
	EXPECT_TRUE(verify_orthogonality(t4));

	// A5: two degree-3 characters take (1 ± √5)/2 on 5-cycles
	auto a5 = FiniteGroup::from_permutations({{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}});
	ASSERT_EQ(a5.order(), 60u);
	auto t5 = character_table(a5);
	EXPECT_EQ(t5.degrees, (std::vector<long>{1, 3, 3, 4, 5}));
	EXPECT_TRUE(verify_orthogonality(t5));
	Cyclotomic golden = (Cyclotomic(Rat(1)) + Cyclotomic::zeta(5, 1) + Cyclotomic::zeta(5, 4)) * Rat(-1);
	// 1 + ζ + ζ⁴ = (1+√5)/2; its conjugate is (1-√5)/2
	Cyclotomic phi = Cyclotomic(Rat(1)) + Cyclotomic::zeta(5, 1) + Cyclotomic::zeta(5, 4);
	Cyclotomic phibar = Cyclotomic(Rat(1)) + Cyclotomic::zeta(5, 2) + Cyclotomic::zeta(5, 3);
	std::set<std::string> seen;
	for (std::size_t c = 1; c <= 2; ++c)
		for (std::size_t j = 0; j < t5.classes.size(); ++j)
			if (t5.class_order[j] == 5) {
				auto v = t5.value(c, j);
				EXPECT_TRUE(v == phi || v == phibar) << v.str();
				seen.insert(v.str());
			}
	EXPECT_EQ(seen.size(), 2u);
	(void)golden;
	EXPECT_THROW(character_table(FiniteGroup::cyclic(600)), DomainError);
}

TEST(CharacterTable, QuaternionByHand) {
	auto q8 = concrete_group(quaternion_extension());
	auto b = brute_force_census(q8);
	const auto& t = b.table;
	ASSERT_EQ(t.size(), 5u);
	EXPECT_EQ(t.degrees, (std::vector<long>{1, 1, 1, 1, 2}));
	EXPECT_TRUE(verify_orthogonality(t));
	// 2-dim character: 2 at 1, -2 at the central involution, 0 elsewhere
	for (std::size_t j = 0; j < 5; ++j) {
		auto v = t.value(4, j).reduced();
		std::size_t rep = t.classes[j][0];
		if (rep == 0) EXPECT_EQ(v, Cyclotomic(Rat(2)));
		else if (rep == 1) EXPECT_EQ(v, Cyclotomic(Rat(-2)));
		else EXPECT_TRUE(v.is_zero());
	}
	EXPECT_EQ(b.restriction[4][1], 2);
	EXPECT_EQ(b.restriction[4][0], 0);
	EXPECT_EQ(b.max_multiplicity, 2);
}

TEST(Clifford, Commutator) {
	auto q = quaternion_extension();
	auto v = commutator_function(q, 1, 2);
	EXPECT_FALSE(v.trivial);
	EXPECT_EQ(v.canonical, 1u);
	EXPECT_EQ(v.coinvariant_factors, (std::vector<Int>{2}));
	for (std::size_t c = 0; c < 4; ++c) EXPECT_TRUE(commutator_function(q, c, c).trivial);
	auto d = ExtensionDescriptor::direct_product({3}, {2, 2});
	for (std::size_t a = 0; a < 4; ++a)
		for (std::size_t b = 0; b < 4; ++b) EXPECT_TRUE(commutator_function(d, a, b).trivial);
}

TEST(Clifford, SectionIndependence) {
	std::mt19937_64 rng(11);
	for (int it = 0; it < 40; ++it) {
		auto e = random_extension(rng, 128);
		std::vector<std::size_t> sec(e.c_order());
		for (auto& s : sec) s = rng() % e.a_order();
		for (std::size_t c1 = 0; c1 < e.c_order(); ++c1)
			for (std::size_t c2 = 0; c2 < e.c_order(); ++c2) {
				auto a = commutator_function(e, c1, c2), b = commutator_function(e, c1, c2, &sec);
				EXPECT_EQ(a.canonical, b.canonical);
				EXPECT_EQ(a.trivial, b.trivial);
			}
	}
}

TEST(Clifford, MultiplicityOne) {
	auto q = has_multiplicity_one(quaternion_extension());
	EXPECT_FALSE(q.mult_one);
	ASSERT_TRUE(q.witness);
	EXPECT_EQ(q.witness->dimension, 2u);
	EXPECT_EQ(q.witness->multiplicity, 2u);
	EXPECT_EQ(q.witness->rho, 1u);
	EXPECT_TRUE(has_multiplicity_one(ExtensionDescriptor::direct_product({2}, {2, 2})).mult_one);
	auto d8 = dihedral_extension();
	EXPECT_FALSE(has_multiplicity_one(d8).mult_one);
	// the oracle sees a 2-dimensional irreducible with central multiplicity 2
	auto b = brute_force_census(concrete_group(d8));
	EXPECT_EQ(b.dimensions, dims({{1, 4}, {2, 1}}));
	EXPECT_EQ(b.max_multiplicity, 2);
	EXPECT_TRUE(has_multiplicity_one(dihedral_by_inversion()).mult_one);
	EXPECT_TRUE(has_multiplicity_one(s3_shaped()).mult_one);
}

TEST(Clifford, Transforms) {
	auto q = quaternion_extension();
	auto killed = pushout(q, {}, IntMatrix(0, 1), {IntMatrix(0, 0), IntMatrix(0, 0)});
	EXPECT_TRUE(has_multiplicity_one(killed).mult_one);
	EXPECT_EQ(killed.order(), 4u);
	auto cyc = pullback(q, {2}, M({{1}, {0}}));
	EXPECT_TRUE(has_multiplicity_one(cyc).mult_one);
	auto prod = product(q, ExtensionDescriptor::direct_product({3}, {2}));
	EXPECT_FALSE(has_multiplicity_one(prod).mult_one);
	EXPECT_EQ(prod.order(), 48u);
	// inversion on Z/4 does not commute with the trivial action
	auto di = dihedral_by_inversion();
	try {
		pushout(di, {4}, M({{1}}), {IntMatrix::identity(1)});
		FAIL();
	} catch (const DomainError& e) {
		EXPECT_EQ(e.code(), "NotEquivariant");
	}
	// Z/4 → Z/2 is equivariant for the trivial action on Z/2
	auto red = pushout(di, {2}, M({{1}}), {IntMatrix::identity(1)});
	EXPECT_TRUE(has_multiplicity_one(red).mult_one);
	EXPECT_THROW(pullback(q, {3}, M({{1}, {0}})), DomainError);
}

TEST(Clifford, Census) {
	auto q = irrep_census(quaternion_extension());
	EXPECT_EQ(q.dimensions, dims({{1, 4}, {2, 1}}));
	EXPECT_EQ(q.irreducibles, 5u);
	auto ab = irrep_census(ExtensionDescriptor::direct_product({3}, {2}));
	EXPECT_EQ(ab.dimensions, dims({{1, 6}}));
	EXPECT_EQ(irrep_census(dihedral_by_inversion()).dimensions, dims({{1, 4}, {2, 1}}));
	EXPECT_EQ(irrep_census(s3_shaped()).dimensions, dims({{1, 2}, {2, 1}}));
	auto bs3 = brute_force_census(concrete_group(s3_shaped()));
	EXPECT_EQ(bs3.table.degrees, (std::vector<long>{1, 1, 2}));
	EXPECT_TRUE(verify_orthogonality(bs3.table));
	EXPECT_EQ(brute_force_census(concrete_group(dihedral_by_inversion())).dimensions, dims({{1, 4}, {2, 1}}));
	// the Clifford path handles groups beyond the oracle's range
	auto big = product(quaternion_extension(), ExtensionDescriptor::direct_product({8}, {4, 4}));
	EXPECT_EQ(big.order(), 1024u);
	auto c = irrep_census(big);
	EXPECT_EQ(c.dimensions, dims({{1, 512}, {2, 128}}));
	EXPECT_THROW(brute_force_census(concrete_group(big)), DomainError);
	EXPECT_THROW(irrep_census(big, 512), DomainError);
}

TEST(Clifford, InvalidDescriptors) {
	// action of the wrong order, non-invertible action, broken cocycle
	EXPECT_THROW(ExtensionDescriptor({4}, {3}, {M({{-1}})}, std::vector<std::vector<long>>(9, {0})), DomainError);
	EXPECT_THROW(ExtensionDescriptor({4}, {2}, {M({{2}})}, std::vector<std::vector<long>>(4, {0})), DomainError);
	EXPECT_THROW(ExtensionDescriptor({3}, {3}, {M({{1}})}, {{0}, {0}, {0}, {0}, {1}, {0}, {0}, {0}, {0}}), DomainError);
	// non-normalized input is shifted, not rejected
	ExtensionDescriptor shifted({3}, {2}, {M({{1}})}, std::vector<std::vector<long>>(4, {1}));
	EXPECT_EQ(shifted.z(0, 0), 0u);
	EXPECT_EQ(shifted.z(1, 1), 0u);
}

TEST(Clifford, RandomCorpusAgreesWithOracle) {
	std::mt19937_64 rng(20240607);
	auto start = std::chrono::steady_clock::now();
	std::size_t disagreements = 0, nonmult = 0;
	for (int it = 0; it < 200; ++it) {
		auto e = random_extension(rng, 256);
		auto g = concrete_group(e);
		auto b = brute_force_census(g);
		auto census = irrep_census(e);
		bool m1 = has_multiplicity_one(e).mult_one;
		if (m1 != (b.max_multiplicity <= 1)) ++disagreements;
		if (!m1) ++nonmult;
		EXPECT_EQ(census.dimensions, b.dimensions);
		EXPECT_EQ(census.irreducibles, g.classes.size());
		EXPECT_EQ(b.table.size(), g.classes.size());
		// multiplicities of the census equal the oracle's restriction counts
		for (const auto& en : census.entries)
			for (std::size_t chi = 0; chi < b.table.size(); ++chi) {
				long m = b.restriction[chi][en.orbit_rep];
				if (m) EXPECT_EQ((std::size_t)m, en.multiplicity);
			}
		// λ ∈ C* fixes χ iff λ kills the commutator radical of χ's stabilizer
		auto stabs = twist_stabilizers(e, b);
		for (std::size_t chi = 0; chi < b.table.size(); ++chi) {
			std::size_t rho = 0;
			while (b.restriction[chi][rho] == 0) ++rho;
			auto rad = commutator_radical(e, rho);
			std::vector<std::size_t> predicted;
			for (std::size_t lam = 0; lam < e.c_order(); ++lam) {
				bool kills = true;
				for (auto r : rad) {
					// λ(r) via the pairing on C's own coordinates
					auto lk = e.c_coords(lam), rc = e.c_coords(r);
					Rat s = 0;
					for (std::size_t i = 0; i < lk.size(); ++i) s += ratio(Int(lk[i] * rc[i]), Int(e.c_factors()[i]));
					if (!is_integral(s)) kills = false;
				}
				if (kills) predicted.push_back(lam);
			}
			EXPECT_EQ(stabs[chi], predicted);
		}
	}
	double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
	EXPECT_EQ(disagreements, 0u);
	EXPECT_GT(nonmult, 10u);
	EXPECT_LT(secs, 60.0);
}

TEST(Clifford, TransformCoherence) {
	std::mt19937_64 rng(77);
	for (int it = 0; it < 60; ++it) {
		auto e = random_extension(rng, 128);
		bool m1 = has_multiplicity_one(e).mult_one;
		// pullback along a random map from a cyclic group: always multiplicity one
		std::size_t target = rng() % e.c_order();
		auto tc = e.c_coords(target);
		long ord = (long)e.c_group().element_order(target);
		IntMatrix i(e.c_factors().size(), 1);
		for (std::size_t r = 0; r < tc.size(); ++r) i(r, 0) = tc[r];
		auto pb = pullback(e, {ord}, i);
		EXPECT_TRUE(has_multiplicity_one(pb).mult_one);
		EXPECT_EQ(has_multiplicity_one(pb).mult_one, oracle_mult_one(pb));
		// identity pullback and pushout change nothing
		std::size_t rc = e.c_factors().size(), ra = e.a_factors().size();
		EXPECT_EQ(has_multiplicity_one(pullback(e, e.c_factors(), IntMatrix::identity(rc))).mult_one, m1);
		EXPECT_EQ(has_multiplicity_one(pushout(e, e.a_factors(), IntMatrix::identity(ra), e.action())).mult_one, m1);
		// products: multiplicity one iff both factors have it
		auto f = random_extension(rng, 16);
		bool m2 = has_multiplicity_one(f).mult_one;
		auto p = product(e, f);
		EXPECT_EQ(has_multiplicity_one(p).mult_one, m1 && m2);
		if (p.order() <= 256) EXPECT_EQ(oracle_mult_one(p), m1 && m2);
	}
}
