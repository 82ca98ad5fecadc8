#include "cuspidor/json_io.hpp"

#include <gtest/gtest.h>

using namespace cuspidor;

namespace {

std::string code(const std::function<void()>& f) {
	try {
		f();
	} catch (const DomainError& e) {
		return e.code();
	}
	return "";
}

// text → value → text is the identity
void expect_stable(const json& j) {
	std::string s = j.dump();
	EXPECT_EQ(json::parse(s), j);
	EXPECT_EQ(json::parse(s).dump(), s);
}

} // namespace

TEST(JsonIo, Scalars) {
	EXPECT_EQ(to_json(Int(-7)), json(-7));
	Int big("123456789012345678901234567890");
	EXPECT_EQ(to_json(big), json("123456789012345678901234567890"));
	EXPECT_EQ(int_from_json(to_json(big)), big);
	EXPECT_EQ(to_json(ratio(-3, 6)), json("-1/2"));
	EXPECT_EQ(rat_from_json(json("-1/2")), ratio(-1, 2));
	EXPECT_EQ(rat_from_json(json("4/8")), ratio(1, 2));
	EXPECT_EQ(rat_from_json(json(3)), Rat(3));
	EXPECT_EQ(code([] { rat_from_json(json("1/0")); }), "InvalidJson");
	EXPECT_EQ(code([] { rat_from_json(json("x")); }), "InvalidJson");
	EXPECT_EQ(code([] { rat_from_json(json(0.5)); }), "InvalidJson");
	EXPECT_EQ(code([] { int_from_json(json("1.5")); }), "InvalidJson");
}

TEST(JsonIo, CyclotomicUsesMinimalConductor) {
	Cyclotomic i = Cyclotomic::zeta(4);
	json j = to_json(i);
	EXPECT_EQ(j["conductor"], 4);
	EXPECT_EQ(j["coeffs"], json({"0", "1"}));
	EXPECT_EQ(cyclotomic_from_json(j), i);
	// ζ_12^3 = i comes back at conductor 4
	EXPECT_EQ(to_json(Cyclotomic::zeta(12, 3)), j);
	for (unsigned long n : {1ul, 3ul, 5ul, 8ul, 15ul})
		for (long k = 0; k < 4; ++k) {
			Cyclotomic z = Cyclotomic::zeta(n, k) + Cyclotomic(ratio(k, 3));
			EXPECT_EQ(cyclotomic_from_json(to_json(z)), z);
			expect_stable(to_json(z));
		}
	EXPECT_EQ(code([] { cyclotomic_from_json({{"conductor", 5}, {"coeffs", {"1"}}}); }), "InvalidJson");
}

TEST(JsonIo, RootDatumRoundTrip) {
	for (char type : {'A', 'B', 'C', 'D'})
		for (LatticeKind k : {LatticeKind::SimplyConnected, LatticeKind::Adjoint}) {
			RootDatum rd = build_classical(type, type == 'D' ? 4 : 3, k);
			json j = root_datum_to_json(rd);
			RootDatum back = root_datum_from_json(j);
			EXPECT_EQ(back.roots(), rd.roots());
			EXPECT_EQ(back.coroots(), rd.coroots());
			EXPECT_EQ(back.simple(), rd.simple());
			EXPECT_EQ(root_datum_to_json(back), j);
			expect_stable(j);
		}
	RootDatum ref = root_datum_from_json({{"type", "B"}, {"n", 2}, {"lattice", "adjoint"}});
	EXPECT_EQ(ref.roots(), build_classical('B', 2, LatticeKind::Adjoint).roots());
	EXPECT_EQ(code([] { root_datum_from_json({{"type", "E"}, {"n", 6}}); }), "InvalidJson");
	EXPECT_EQ(code([] { root_datum_from_json({{"rank", 1}}); }), "InvalidJson");
}

TEST(JsonIo, ExtensionRoundTrip) {
	std::mt19937_64 rng(7);
	for (int i = 0; i < 40; ++i) {
		ExtensionDescriptor e = random_extension(rng, 128);
		json j = extension_to_json(e);
		ExtensionDescriptor back = extension_from_json(j);
		EXPECT_EQ(back.cocycle_table(), e.cocycle_table());
		EXPECT_EQ(extension_to_json(back), j);
		expect_stable(j);
	}
}

TEST(JsonIo, ParameterDatumRoundTrip) {
	for (const ParameterDatum& d : {spin9_datum(), regular_pgl2_datum(), d4_datum()}) {
		json j = parameter_datum_to_json(d);
		ParameterDatum back = parameter_datum_from_json(j);
		EXPECT_TRUE(same_datum(back, d)) << d.name;
		EXPECT_EQ(parameter_datum_to_json(back), j);
		expect_stable(j);
	}
}

TEST(JsonIo, FamilyRoundTrip) {
	auto corpus = cocycle_corpus(5);
	for (std::size_t i = 0; i < corpus.size(); i += 3) {
		const EtaFamily& f = corpus[i].family;
		json j = family_to_json(f);
		EtaFamily back = family_from_json(j);
		EXPECT_TRUE(cochains_equal(back.eta_table(), f.eta_table())) << corpus[i].name;
		EXPECT_EQ(back.action_table(), f.action_table());
		EXPECT_EQ(coherent_splitting(back).exists, coherent_splitting(f).exists);
		expect_stable(j);
	}
}

TEST(Fixtures, MatchTheConstructions) {
	EXPECT_TRUE(same_datum(parameter_datum_from_json(load_fixture("spin9").at("datum")), spin9_datum()));
	EXPECT_TRUE(
	    same_datum(parameter_datum_from_json(load_fixture("biquadratic").at("datum")), biquadratic_datum_derivation()));
	ExtensionDescriptor q8 = extension_from_json(load_fixture("q8").at("extension"));
	EXPECT_EQ(q8.cocycle_table(), quaternion_extension().cocycle_table());
	json d2n = load_fixture("d2n.json");
	EXPECT_EQ(d2n.at("cases").size(), 42u);
}

TEST(Fixtures, ExpectedValuesHold) {
	json fx = load_fixture("spin9");
	CentralizerReport r = centralizer(parameter_datum_from_json(fx.at("datum")));
	EXPECT_EQ(to_json(r.fixed_order), fx["expected"]["fixed_order"]);
	EXPECT_EQ(r.omega.size(), fx["expected"]["omega_order"].get<std::size_t>());
	EXPECT_EQ(to_json(r.order), fx["expected"]["order"]);
	EXPECT_EQ(r.mult_one, fx["expected"]["mult_one"].get<bool>());

	json q8 = load_fixture("q8");
	Census c = irrep_census(extension_from_json(q8.at("extension")));
	EXPECT_EQ(census_to_json(c)["dimensions"], q8["expected"]["dimensions"]);
}

TEST(Fixtures, Errors) {
	EXPECT_EQ(code([] { load_fixture("no-such-fixture"); }), "MissingFile");
	EXPECT_EQ(code([] { extension_from_json({{"A", {2}}}); }), "InvalidJson");
	EXPECT_EQ(code([] { parameter_datum_from_json({{"root_datum", {{"type", "A"}, {"n", 1}}}, {"generators", 3}}); }),
	          "InvalidJson");
}
