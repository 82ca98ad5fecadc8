// Runs the cuspidor binary and inspects its JSON.

#include <nlohmann/json.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

using json = nlohmann::ordered_json;

namespace {

struct Result {
	int exit = -1;
	std::string out;
	json doc;
};

Result run(const std::string& args, const std::string& env = "") {
	std::string cmd = env + " " CUSPIDOR_CLI_PATH " " + args + " 2>/dev/null";
	Result r;
	FILE* p = popen(cmd.c_str(), "r");
	if (!p)
		return r;
	std::array<char, 4096> buf;
	std::size_t n;
	while ((n = fread(buf.data(), 1, buf.size(), p)) > 0)
		r.out.append(buf.data(), n);
	int status = pclose(p);
	r.exit = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
	r.doc = json::parse(r.out, nullptr, false);
	return r;
}

bool has_float(const json& j) {
	if (j.is_number_float())
		return true;
	if (j.is_structured())
		for (const auto& x : j)
			if (has_float(x))
				return true;
	return false;
}

void expect_wellformed(const Result& r) {
	ASSERT_FALSE(r.doc.is_discarded()) << r.out;
	EXPECT_EQ(r.doc["schema"], 1);
	EXPECT_FALSE(has_float(r.doc)) << r.out;
	// one line, re-parses to the same value and prints identically
	std::string line = r.out.substr(0, r.out.find('\n'));
	EXPECT_EQ(json::parse(line), r.doc);
	EXPECT_EQ(r.doc.dump(), line);
}

Result ok(const std::string& args, const std::string& env = "") {
	Result r = run(args, env);
	EXPECT_EQ(r.exit, 0) << args << "\n" << r.out;
	expect_wellformed(r);
	EXPECT_EQ(r.doc["status"], "ok") << args;
	return r;
}

} // namespace

TEST(Cli, TableCheck) {
	Result r = ok("table-check");
	EXPECT_EQ(r.doc["payload"]["columns"].size(), 9u);
	EXPECT_TRUE(r.doc["payload"]["all_match"].get<bool>());
}

TEST(Cli, D2nExample) {
	Result r = ok("d2n --n 2 --q 3 --cycles 1,1");
	EXPECT_TRUE(r.doc["payload"]["commutator_trivial"].get<bool>());
	EXPECT_TRUE(r.doc["payload"]["ok"].get<bool>());
	Result f = ok("d2n --fixture d2n --no-tits");
	EXPECT_EQ(f.doc["payload"]["cases"].size(), 42u);
	EXPECT_TRUE(f.doc["payload"]["all_match"].get<bool>());
}

TEST(Cli, QuaternionExample) {
	Result r = ok("cliff --fixture q8");
	EXPECT_FALSE(r.doc["payload"]["mult_one"].get<bool>());
	EXPECT_EQ(r.doc["payload"]["census"]["dimensions"], json({{"1", 4}, {"2", 1}}));
	EXPECT_TRUE(r.doc["payload"].contains("witness"));
	Result o = ok("cliff-oracle --fixture q8");
	EXPECT_EQ(o.doc["payload"]["max_multiplicity"], 2);
	EXPECT_TRUE(o.doc["payload"]["criterion_agrees"].get<bool>());
	// same extension through stdin
	Result s = ok("cliff --input - < " CUSPIDOR_FIXTURE_DIR "/q8.json");
	EXPECT_EQ(s.doc["payload"], r.doc["payload"]);
}

TEST(Cli, TorusCommands) {
	Result t = ok("torus --type A --n 1 --w -1 --q 3");
	EXPECT_EQ(t.doc["payload"]["points"]["order"], 4);
	Result s = ok("stabilizer --type A --n 1 --w -1 --q 3 --theta 1/2");
	EXPECT_EQ(s.doc["payload"]["shape"]["order"], 2);
	Result b = ok("bicharacter --type A --n 1 --w -1 --q 3 --theta 1/2");
	EXPECT_TRUE(b.doc["payload"]["left_kernel_trivial"].get<bool>());
	// −1 pairs to ζ_2 with the nontrivial adjoint class
	EXPECT_EQ(b.doc["payload"]["table"][1]["values"][1], json({{"conductor", 1}, {"coeffs", {"-1"}}}));
	Result p = ok("packet-count --type A --n 1 --w -1 --q 3 --theta 1/2");
	EXPECT_EQ(p.doc["payload"]["packet_size"], 2);
	EXPECT_TRUE(p.doc["payload"]["consistent"].get<bool>());
	Result d = ok("delta --type B --n 2 --w coxeter --q 3 --theta-index 1 --gamma 0,0");
	EXPECT_TRUE(d.doc["payload"]["delta"].contains("value"));
	Result th = ok("theta-sum --type A --n 1 --w -1 --q 3 --theta 1/4 --gamma 1/4");
	// i + (−i)
	EXPECT_EQ(th.doc["payload"]["sum"], json({{"conductor", 1}, {"coeffs", {"0"}}}));
	Result w = ok("torus --type A --n 2 --w s:1,2 --q 5");
	EXPECT_TRUE(w.doc["payload"]["elliptic"].get<bool>());
}

TEST(Cli, GaussAndCentralizer) {
	Result g = ok("gauss --q 3");
	EXPECT_EQ(g.doc["payload"]["normalized"], json({{"conductor", 4}, {"coeffs", {"0", "1"}}}));
	Result c = ok("centralizer --fixture spin9");
	EXPECT_EQ(c.doc["payload"]["order"], 32);
	EXPECT_TRUE(c.doc["payload"]["mult_one"].get<bool>());
	Result bq = ok("centralizer --fixture biquadratic");
	EXPECT_FALSE(bq.doc["payload"]["mult_one"].get<bool>());
	Result cs = ok("cocycle-split --corpus 2024 --case Z2xZ2/klein/1");
	EXPECT_FALSE(cs.doc["payload"]["families"][0]["exists"].get<bool>());
}

TEST(Cli, SweepHonorsThreads) {
	Result r = ok("sweep --criteria 4,7", "CUSPIDOR_THREADS=1");
	EXPECT_EQ(r.doc["audit"]["threads"], 1);
	EXPECT_TRUE(r.doc["payload"]["all_pass"].get<bool>());
	Result r3 = ok("sweep --criteria 4", "CUSPIDOR_THREADS=3");
	EXPECT_EQ(r3.doc["audit"]["threads"], 3);
}

TEST(Cli, ExitCodes) {
	for (const char* args : {"", "bogus", "gauss", "gauss --q x", "d2n --n 2 --q 3", "torus --q 3 --w q",
	                         "stabilizer --q 3", "cliff"}) {
		Result r = run(args);
		EXPECT_EQ(r.exit, 2) << args;
		expect_wellformed(r);
		EXPECT_EQ(r.doc["error"]["code"], "Usage") << args;
	}
	struct Case {
		const char* args;
		const char* code;
	};
	for (auto [args, code] : {Case{"gauss --q 9 --c 0", "InvalidCharacter"}, Case{"gauss --q 15", "InvalidField"},
	                          Case{"d2n --n 3 --q 3 --cycles 1,1", "InvalidCycleType"},
	                          Case{"d2n --n 2 --q 6 --cycles 1,1", "InvalidModulus"},
	                          Case{"packet-count --type A --n 1 --q 3 --theta 0", "SingularCharacter"},
	                          Case{"cliff --fixture nothing", "MissingFile"},
	                          Case{"cocycle-split --corpus 1 --case nothing", "UnknownCase"}}) {
		Result r = run(args);
		EXPECT_EQ(r.exit, 1) << args;
		expect_wellformed(r);
		EXPECT_EQ(r.doc["status"], "error");
		EXPECT_EQ(r.doc["error"]["code"], code) << args << "\n" << r.out;
	}
}

TEST(Cli, Deterministic) {
	Result a = ok("sweep --criteria 3", "CUSPIDOR_THREADS=2");
	Result b = ok("sweep --criteria 3", "CUSPIDOR_THREADS=1");
	EXPECT_EQ(a.doc["payload"]["criteria"][0]["detail"], b.doc["payload"]["criteria"][0]["detail"]);
}
