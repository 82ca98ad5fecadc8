// cuspidor: JSON front end over the library. Every command prints one JSON
// document {schema, command, status, payload, audit} on stdout.
// Exit codes: 0 ok, 1 domain error, 2 usage error.

#include "cuspidor/parallel.hpp"
#include "cuspidor/suite.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace cuspidor;

namespace {

constexpr int kSchema = 1;

struct UsageError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep = ',') {
	std::vector<std::string> out;
	std::stringstream ss(s);
	std::string item;
	while (std::getline(ss, item, sep))
		if (!item.empty())
			out.push_back(item);
	return out;
}

QVec parse_rationals(const std::string& s) {
	QVec v;
	for (const auto& x : split(s))
		v.push_back(rat_from_json(json(x)));
	return v;
}

json read_input(const std::string& path) {
	if (path == "-") {
		try {
			return json::parse(std::cin);
		} catch (const json::exception& e) {
			throw DomainError("InvalidJson", std::string("stdin: ") + e.what());
		}
	}
	return load_json_file(path);
}

// Options shared by the torus-based commands.
struct TorusArgs {
	std::string type = "A";
	std::size_t n = 1;
	std::string lattice = "sc";
	std::string datum_file;
	std::string w = "1";
	long q = 3;
	std::string theta;
	long theta_index = -1;
	std::string gamma;

	void add(CLI::App* c, bool with_theta, bool with_gamma) {
		c->add_option("--type", type, "A, B, C or D")->check(CLI::IsMember({"A", "B", "C", "D"}));
		c->add_option("--n", n, "rank")->check(CLI::Range(1, 8));
		c->add_option("--lattice", lattice, "sc or adjoint")->check(CLI::IsMember({"sc", "adjoint"}));
		c->add_option("--datum", datum_file, "root datum JSON file (overrides --type/--n)");
		c->add_option("--w", w, "1 | -1 | coxeter | s:i,j,... (simple reflections, 1-based)");
		c->add_option("--q", q, "odd prime power")->required();
		if (with_theta) {
			c->add_option("--theta", theta, "character values on the point generators, e.g. 1/4,0");
			c->add_option("--theta-index", theta_index, "index into the enumeration of characters");
		}
		if (with_gamma)
			c->add_option("--gamma", gamma, "point of S(k) in cocharacter coordinates mod 1")->required();
	}

	RootDatum datum() const {
		if (!datum_file.empty())
			return root_datum_from_json(load_json_file(datum_file));
		return root_datum_from_json({{"type", type}, {"n", n}, {"lattice", lattice}});
	}

	IntMatrix weyl(const RootDatum& rd) const {
		std::size_t r = rd.rank();
		if (w == "1" || w == "id")
			return IntMatrix::identity(r);
		if (w == "-1")
			return IntMatrix::identity(r).scaled(-1);
		IntMatrix m = IntMatrix::identity(r);
		if (w == "coxeter") {
			for (std::size_t k = 0; k < rd.simple().size(); ++k)
				m = m * rd.simple_reflection(k);
			return m;
		}
		if (w.rfind("s:", 0) == 0) {
			for (const auto& tok : split(w.substr(2))) {
				long k = std::stol(tok);
				if (k < 1 || static_cast<std::size_t>(k) > rd.simple().size())
					throw UsageError("simple reflection index out of range: " + tok);
				m = m * rd.simple_reflection(static_cast<std::size_t>(k - 1));
			}
			return m;
		}
		throw UsageError("unrecognized --w: " + w);
	}

	FrobeniusTorus torus() const {
		RootDatum rd = datum();
		IntMatrix m = weyl(rd);
		return FrobeniusTorus(rd, m, q);
	}

	TorusCharacter character(const FrobeniusTorus& t) const {
		if (!theta.empty())
			return make_character(t, parse_rationals(theta));
		if (theta_index >= 0) {
			auto all = all_characters(t);
			if (static_cast<std::size_t>(theta_index) >= all.size())
				throw DomainError("InvalidCharacter", "character index out of range, |S(k)^| = " +
				                                          std::to_string(all.size()));
			return all[static_cast<std::size_t>(theta_index)];
		}
		throw UsageError("--theta or --theta-index is required");
	}

	json audit(const FrobeniusTorus& t) const {
		return {{"datum", t.datum().label()}, {"rank", t.datum().rank()}, {"w", to_json(t.weyl())}, {"q", t.q()}};
	}
};

json points_json(const QZKernel& k) {
	json gens = json::array();
	for (std::size_t i = 0; i < k.group().invariant_factors().size(); ++i)
		gens.push_back(to_json(k.generator(i)));
	json j{{"invariant_factors", to_json(k.group().invariant_factors(), true)},
	       {"free_rank", k.free_rank()},
	       {"generators", gens}};
	j["order"] = k.is_finite() ? to_json(k.group().order()) : json(nullptr);
	return j;
}

json shape_json(const GroupShape& s) {
	return {{"order", s.order}, {"abelian", s.abelian}, {"cyclic", s.cyclic}, {"invariants", to_json(s.invariants, true)}};
}

json extension_input(const std::string& fixture, const std::string& input) {
	json j;
	if (!fixture.empty())
		j = load_fixture(fixture);
	else if (!input.empty())
		j = read_input(input);
	else
		throw UsageError("--fixture or --input is required");
	return j.contains("extension") ? j.at("extension") : j;
}

struct Outcome {
	json payload;
	json audit = json::object();
	int exit = 0;
};

} // namespace

int main(int argc, char** argv) {
	CLI::App app{"Exact computations for depth-zero supercuspidal packets", "cuspidor"};
	app.require_subcommand(1);
	bool pretty = false;
	app.add_flag("--pretty", pretty, "indent the JSON output");

	std::string command;
	auto sub = [&](const char* name, const char* help) {
		CLI::App* c = app.add_subcommand(name, help);
		c->callback([&command, name] { command = name; });
		return c;
	};

	// table-check
	sub("table-check", "bad primes and Weyl group orders for every Dynkin type");

	// torus / stabilizer / bicharacter / packet-count / delta / theta-sum
	TorusArgs ta;
	CLI::App* c_torus = sub("torus", "rational points of the torus with Frobenius q·w");
	ta.add(c_torus, false, false);
	TorusArgs sa;
	CLI::App* c_stab = sub("stabilizer", "Weyl stabilizer of a character");
	sa.add(c_stab, true, false);
	TorusArgs ba;
	CLI::App* c_bich = sub("bicharacter", "pairing of the stabilizer with S_ad(k)/S(k)");
	ba.add(c_bich, true, false);
	TorusArgs pa;
	CLI::App* c_pack = sub("packet-count", "packet size and extension count of a non-singular character");
	pa.add(c_pack, true, false);
	TorusArgs da;
	long lambda_c = 1;
	CLI::App* c_delta = sub("delta", "root-orbit data, square classes and the Δ_II sign at a point");
	da.add(c_delta, true, true);
	c_delta->add_option("--lambda", lambda_c, "additive character Λ(x) = ζ_p^{Tr(c x)}, c as a field element");
	TorusArgs tha;
	std::string weyl_set = "centralizer";
	long lambda_t = 1;
	CLI::App* c_theta = sub("theta-sum", "Weyl-summed Δ_II·θ at a point");
	tha.add(c_theta, true, true);
	c_theta->add_option("--weyl-set", weyl_set, "centralizer or identity")
	    ->check(CLI::IsMember({"centralizer", "identity"}));
	c_theta->add_option("--lambda", lambda_t, "additive character parameter");

	// gauss
	long gq = 3, gc = 1;
	CLI::App* c_gauss = sub("gauss", "quadratic Gauss sum over GF(q)");
	c_gauss->add_option("--q", gq, "odd prime power")->required();
	c_gauss->add_option("--c", gc, "additive character parameter (field element index)");

	// cliff / cliff-oracle
	std::string cf_fixture, cf_input;
	CLI::App* c_cliff = sub("cliff", "Clifford census and the multiplicity-one criterion");
	c_cliff->add_option("--fixture", cf_fixture, "fixture name, e.g. q8");
	c_cliff->add_option("--input", cf_input, "extension JSON file, - for stdin");
	std::string co_fixture, co_input;
	long co_seed = -1;
	std::size_t co_max = 256;
	CLI::App* c_oracle = sub("cliff-oracle", "brute-force character table census of the extension");
	c_oracle->add_option("--fixture", co_fixture, "fixture name");
	c_oracle->add_option("--input", co_input, "extension JSON file, - for stdin");
	c_oracle->add_option("--random", co_seed, "seed for a random extension instead");
	c_oracle->add_option("--max-order", co_max, "bound on |B| for --random")->check(CLI::Range(2, 512));

	// cocycle-split
	std::string cs_input, cs_case;
	long cs_corpus = -1;
	CLI::App* c_coc = sub("cocycle-split", "coherent splitting of a composition-defect family");
	c_coc->add_option("--input", cs_input, "family JSON file, - for stdin");
	c_coc->add_option("--corpus", cs_corpus, "corpus seed");
	c_coc->add_option("--case", cs_case, "corpus case name (all cases when omitted)");

	// d2n
	long dn = 2, dq = 3;
	std::string dcycles, dfixture;
	bool no_tits = false;
	CLI::App* c_d2n = sub("d2n", "Tits-lift commutator for split D_2n");
	c_d2n->add_option("--n", dn, "n");
	c_d2n->add_option("--q", dq, "q (1 or an odd prime power)");
	c_d2n->add_option("--cycles", dcycles, "cycle lengths, comma separated, first entry 1");
	c_d2n->add_option("--fixture", dfixture, "replay every case of a d2n fixture");
	c_d2n->add_flag("--no-tits", no_tits, "skip the Tits-group cross-check");

	// centralizer
	std::string ce_fixture, ce_input, ce_builtin;
	CLI::App* c_cent = sub("centralizer", "centralizer of a parameter in the normalizer of the dual torus");
	c_cent->add_option("--fixture", ce_fixture, "spin9 or biquadratic");
	c_cent->add_option("--input", ce_input, "parameter datum JSON file, - for stdin");
	c_cent->add_option("--builtin", ce_builtin, "d4 or regular-pgl2")->check(CLI::IsMember({"d4", "regular-pgl2"}));

	// sweep
	std::string criteria;
	CLI::App* c_sweep = sub("sweep", "run the acceptance criteria");
	c_sweep->add_option("--criteria", criteria, "comma-separated subset, default all");

	auto emit = [&](const json& doc) { std::cout << (pretty ? doc.dump(2) : doc.dump()) << '\n'; };

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp& e) {
		return app.exit(e);
	} catch (const CLI::CallForAllHelp& e) {
		return app.exit(e);
	} catch (const CLI::ParseError& e) {
		if (command.empty() && argc > 1 && argv[1][0] != '-')
			command = argv[1];
		emit({{"schema", kSchema},
		      {"command", command},
		      {"status", "error"},
		      {"error", {{"code", "Usage"}, {"message", e.what()}}}});
		return 2;
	}

	try {
		Outcome out;
		if (command == "table-check") {
			auto cols = table_check();
			json cs = json::array();
			bool all = true;
			for (const auto& c : cols) {
				all = all && c.match;
				cs.push_back({{"type", c.type},
				              {"row1", c.row1_text},
				              {"row2", c.row2_text},
				              {"match", c.match},
				              {"details", c.details}});
			}
			out.payload = {{"columns", cs}, {"all_match", all}};
		} else if (command == "torus") {
			FrobeniusTorus t = ta.torus();
			out.payload = {{"points", points_json(t.points())},
			               {"splitting_degree", t.splitting_degree()},
			               {"elliptic", t.is_elliptic()},
			               {"weyl_centralizer_order", t.weyl_centralizer().size()}};
			out.audit = ta.audit(t);
		} else if (command == "stabilizer") {
			FrobeniusTorus t = sa.torus();
			TorusCharacter th = sa.character(t);
			StabilizerReport st = weyl_stabilizer(t, th);
			NonsingularReport ns = nonsingularity(t, th);
			json els = json::array();
			for (const auto& e : st.elements)
				els.push_back(to_json(e));
			out.payload = {{"theta", to_json(th.values)},
			               {"nonsingular", st.nonsingular},
			               {"singular_roots", ns.singular_roots},
			               {"regular", st.regular},
			               {"shape", shape_json(st.shape)},
			               {"elements", els}};
			out.audit = sa.audit(t);
		} else if (command == "bicharacter") {
			FrobeniusTorus t = ba.torus();
			TorusCharacter th = ba.character(t);
			StabilizerReport st = weyl_stabilizer(t, th);
			AdjointPoints ad = adjoint_points(t);
			json table = json::array();
			for (const auto& w : st.elements) {
				json row = json::array();
				for (const auto& s : ad.cokernel_reps)
					row.push_back(to_json(bicharacter(t, th, w, s)));
				table.push_back({{"omega", to_json(w)}, {"values", row}});
			}
			json reps = json::array();
			for (const auto& s : ad.cokernel_reps)
				reps.push_back(to_json(s));
			out.payload = {{"theta", to_json(th.values)},
			               {"stabilizer", shape_json(st.shape)},
			               {"adjoint_cokernel", to_json(ad.cokernel.invariant_factors(), true)},
			               {"adjoint_representatives", reps},
			               {"table", table},
			               {"left_kernel_trivial", bicharacter_left_kernel_trivial(t, th, st, ad)}};
			out.audit = ba.audit(t);
		} else if (command == "packet-count") {
			FrobeniusTorus t = pa.torus();
			TorusCharacter th = pa.character(t);
			PacketCounts pc = packet_counts(t, th);
			std::size_t omega = weyl_stabilizer(t, th).elements.size();
			out.payload = {{"theta", to_json(th.values)},
			               {"packet_size", pc.packet_size},
			               {"extension_count", pc.extension_count},
			               {"stabilizer_order", omega},
			               {"consistent", pc.packet_size == pc.extension_count && pc.packet_size == omega}};
			out.audit = pa.audit(t);
		} else if (command == "delta") {
			FrobeniusTorus t = da.torus();
			TorusCharacter th = da.character(t);
			QVec gamma = parse_rationals(da.gamma);
			ChiData chi = classify_chi_data(t);
			ModAData a = mod_a_data(t, th, chi, static_cast<FiniteField::Elem>(lambda_c));
			DeltaReport d = delta_II(t, gamma, chi, a);
			out.payload = {{"orbits", chi_data_to_json(chi)}, {"mod_a", mod_a_to_json(a)}, {"delta", delta_to_json(d)}};
			out.audit = da.audit(t);
			out.audit["gamma"] = to_json(gamma);
			out.audit["theta"] = to_json(th.values);
		} else if (command == "theta-sum") {
			FrobeniusTorus t = tha.torus();
			TorusCharacter th = tha.character(t);
			QVec gamma = parse_rationals(tha.gamma);
			ChiData chi = classify_chi_data(t);
			ModAData a = mod_a_data(t, th, chi, static_cast<FiniteField::Elem>(lambda_t));
			std::vector<IntMatrix> ws = weyl_set == "identity" ? std::vector<IntMatrix>{IntMatrix::identity(t.datum().rank())}
			                                                   : t.weyl_centralizer();
			ThetaSumReport r = theta_sum(t, th, gamma, chi, a, ws);
			out.payload = theta_sum_to_json(r);
			out.audit = tha.audit(t);
			out.audit["gamma"] = to_json(gamma);
			out.audit["theta"] = to_json(th.values);
			out.audit["weyl_set"] = weyl_set;
		} else if (command == "gauss") {
			auto [p, m] = prime_power(gq);
			if (p == 2)
				throw DomainError("InvalidField", "q must be odd");
			FieldPtr f = FiniteField::get(p, m);
			if (gc <= 0 || gc >= gq)
				throw DomainError("InvalidCharacter", "--c must be a nonzero field element");
			GaussSum g = gauss_sum(f, {static_cast<FiniteField::Elem>(gc)});
			out.payload = {{"q", gq},
			               {"g", to_json(g.g)},
			               {"alternate", to_json(g.alternate)},
			               {"norm", to_json(g.norm)},
			               {"normalized", to_json(g.normalized)},
			               {"normalized_square", g.normalized_square},
			               {"norm_ok", g.norm_ok},
			               {"forms_agree", g.forms_agree}};
			out.audit = {{"p", p}, {"degree", m}, {"c", gc}};
		} else if (command == "cliff") {
			ExtensionDescriptor e = extension_from_json(extension_input(cf_fixture, cf_input));
			MultOneResult m = has_multiplicity_one(e);
			Census c = irrep_census(e);
			out.payload = {{"order", e.order()}, {"mult_one", m.mult_one}, {"census", census_to_json(c)}};
			if (m.witness)
				out.payload["witness"] = {{"c1", m.witness->c1},
				                          {"c2", m.witness->c2},
				                          {"rho", m.witness->rho},
				                          {"multiplicity", m.witness->multiplicity},
				                          {"dimension", m.witness->dimension}};
			out.audit = {{"extension", extension_to_json(e)}};
		} else if (command == "cliff-oracle") {
			ExtensionDescriptor e;
			if (co_seed >= 0) {
				std::mt19937_64 rng(static_cast<std::uint64_t>(co_seed));
				e = random_extension(rng, co_max);
			} else {
				e = extension_from_json(extension_input(co_fixture, co_input));
			}
			BruteForceCensus b = brute_force_census(concrete_group(e));
			bool fast = has_multiplicity_one(e).mult_one;
			json dims = json::object();
			for (auto [d, n] : b.dimensions)
				dims[std::to_string(d)] = n;
			out.payload = {{"order", e.order()},
			               {"dimensions", dims},
			               {"irreducibles", b.restriction.size()},
			               {"max_multiplicity", b.max_multiplicity},
			               {"mult_one", b.max_multiplicity <= 1},
			               {"criterion_agrees", fast == (b.max_multiplicity <= 1)}};
			out.audit = {{"extension", extension_to_json(e)}};
		} else if (command == "cocycle-split") {
			std::vector<std::pair<std::string, EtaFamily>> fams;
			if (!cs_input.empty()) {
				fams.emplace_back("input", family_from_json(read_input(cs_input)));
			} else if (cs_corpus >= 0) {
				for (auto& c : cocycle_corpus(static_cast<std::uint64_t>(cs_corpus)))
					if (cs_case.empty() || c.name == cs_case)
						fams.emplace_back(c.name, std::move(c.family));
				if (fams.empty())
					throw DomainError("UnknownCase", "no corpus case named " + cs_case);
			} else {
				throw UsageError("--input or --corpus is required");
			}
			json results = json::array();
			for (const auto& [name, f] : fams) {
				SplittingResult r = coherent_splitting(f);
				json res{{"name", name}, {"exists", r.exists}};
				if (r.exists) {
					json eps = json::array();
					for (const auto& e : r.splitting.eps)
						eps.push_back(to_json(e));
					res["splitting"] = {{"eps", eps},
					                    {"orbit_id", r.splitting.orbit_id},
					                    {"basepoints", r.splitting.basepoints}};
					res["verified"] = verify_splitting(f, r.splitting);
					json homs = json::array();
					for (const auto& per : r.homs) {
						json hs = json::array();
						for (const auto& h : per)
							hs.push_back(to_json(h));
						homs.push_back(hs);
					}
					res["homomorphisms"] = homs;
				} else {
					res["failing_orbit"] = r.failing_orbit;
					res["certificate"] = to_json(r.certificate);
					res["certificate_value"] = to_json(r.certificate_value);
				}
				results.push_back(res);
			}
			out.payload = {{"families", results}};
			if (cs_corpus >= 0)
				out.audit = {{"corpus_seed", cs_corpus}};
		} else if (command == "d2n") {
			if (!dfixture.empty()) {
				json fx = load_fixture(dfixture);
				json rows = json::array();
				bool all = true;
				for (const auto& c : fx.at("cases")) {
					D2nReport r = d2n_verify(c.at("n").get<long>(), c.at("q").get<long>(),
					                         c.at("cycles").get<std::vector<long>>(), !no_tits);
					bool match = r.ok() && r.commutator_trivial == c.value("commutator_trivial", true);
					all = all && match;
					rows.push_back({{"n", r.n}, {"q", r.q}, {"cycles", r.cycle_lengths},
					                {"commutator_trivial", r.commutator_trivial}, {"matches_fixture", match}});
				}
				out.payload = {{"cases", rows}, {"all_match", all}};
				out.audit = {{"fixture", dfixture}};
			} else {
				if (dcycles.empty())
					throw UsageError("--cycles is required");
				std::vector<long> cyc;
				for (const auto& s : split(dcycles))
					cyc.push_back(std::stol(s));
				out.payload = d2n_to_json(d2n_verify(dn, dq, cyc, !no_tits));
			}
		} else if (command == "centralizer") {
			ParameterDatum d;
			if (!ce_fixture.empty()) {
				json fx = load_fixture(ce_fixture);
				d = parameter_datum_from_json(fx.contains("datum") ? fx.at("datum") : fx);
			} else if (!ce_input.empty()) {
				json in = read_input(ce_input);
				d = parameter_datum_from_json(in.contains("datum") ? in.at("datum") : in);
			} else if (ce_builtin == "d4") {
				d = d4_datum();
			} else if (ce_builtin == "regular-pgl2") {
				d = regular_pgl2_datum();
			} else {
				throw UsageError("--fixture, --input or --builtin is required");
			}
			MultOneVerdict v = mult_one_check_suite(d);
			out.payload = centralizer_to_json(v.report);
			out.payload["hypothesis_consistent"] = v.consistent;
			out.audit = {{"datum", d.name}, {"rank", d.rd.rank()}, {"generators", d.generators.size()}};
		} else if (command == "sweep") {
			std::vector<int> ids;
			for (const auto& s : split(criteria))
				ids.push_back(std::stoi(s));
			if (ids.empty())
				for (int i = 1; i <= criterion_count(); ++i)
					ids.push_back(i);
			json rs = json::array();
			bool all = true;
			for (int id : ids) {
				CriterionResult r = run_criterion(id);
				all = all && r.pass;
				rs.push_back({{"id", r.id},
				              {"title", r.title},
				              {"pass", r.pass},
				              {"milliseconds", static_cast<long>(r.seconds * 1000)},
				              {"limit_milliseconds", static_cast<long>(r.limit * 1000)},
				              {"detail", r.detail}});
			}
			out.payload = {{"criteria", rs}, {"all_pass", all}};
			out.audit = {{"threads", thread_count()}};
			out.exit = all ? 0 : 1;
		}
		emit({{"schema", kSchema},
		      {"command", command},
		      {"status", out.exit == 0 ? "ok" : "error"},
		      {"payload", out.payload},
		      {"audit", out.audit}});
		return out.exit;
	} catch (const UsageError& e) {
		emit({{"schema", kSchema},
		      {"command", command},
		      {"status", "error"},
		      {"error", {{"code", "Usage"}, {"message", e.what()}}}});
		return 2;
	} catch (const DomainError& e) {
		emit({{"schema", kSchema},
		      {"command", command},
		      {"status", "error"},
		      {"error", {{"code", e.code()}, {"message", e.what()}}}});
		return 1;
	} catch (const std::invalid_argument& e) {
		emit({{"schema", kSchema},
		      {"command", command},
		      {"status", "error"},
		      {"error", {{"code", "Usage"}, {"message", e.what()}}}});
		return 2;
	} catch (const std::exception& e) {
		emit({{"schema", kSchema},
		      {"command", command},
		      {"status", "error"},
		      {"error", {{"code", "Internal"}, {"message", e.what()}}}});
		return 1;
	}
}
