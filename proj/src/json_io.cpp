#include "cuspidor/json_io.hpp"

#include <fstream>
#include <sstream>

namespace cuspidor {

namespace {

[[noreturn]] void bad(const std::string& what) { throw DomainError("InvalidJson", what); }

const json& field(const json& j, const char* key) {
	if (!j.is_object() || !j.contains(key))
		bad(std::string("missing field '") + key + "'");
	return j.at(key);
}

std::vector<long> longs(const json& j) {
	if (!j.is_array())
		bad("expected an array of integers");
	std::vector<long> out;
	for (const auto& x : j)
		out.push_back(int_from_json(x).get_si());
	return out;
}

json hypothesis_name(Hypothesis h) {
	switch (h) {
	case Hypothesis::None: return "none";
	case Hypothesis::SimplyConnected: return "simply-connected";
	case Hypothesis::Unramified: return "unramified";
	}
	return "none";
}

Hypothesis hypothesis_from(const std::string& s) {
	if (s == "none") return Hypothesis::None;
	if (s == "simply-connected") return Hypothesis::SimplyConnected;
	if (s == "unramified") return Hypothesis::Unramified;
	bad("unknown hypothesis '" + s + "'");
}

json word_to_json(const std::vector<std::pair<std::size_t, long>>& w) {
	json a = json::array();
	for (auto [g, e] : w)
		a.push_back(json::array({g, e}));
	return a;
}

std::vector<std::pair<std::size_t, long>> word_from_json(const json& j) {
	if (!j.is_array())
		bad("relation word must be an array");
	std::vector<std::pair<std::size_t, long>> out;
	for (const auto& x : j) {
		if (!x.is_array() || x.size() != 2)
			bad("relation letter must be [generator, exponent]");
		out.emplace_back(x[0].get<std::size_t>(), x[1].get<long>());
	}
	return out;
}

json normalizer_to_json(const NormalizerElement& e) {
	return {{"torus", to_json(e.torus)}, {"weyl", to_json(e.weyl)}, {"outer", to_json(e.outer)}};
}

} // namespace

json to_json(const Int& x) {
	if (x.fits_slong_p())
		return x.get_si();
	return x.get_str();
}

json to_json(const Rat& x) { return Rat(x).get_str(); }

json to_json(const IntVec& v) {
	json a = json::array();
	for (const auto& x : v)
		a.push_back(to_json(x));
	return a;
}

json to_json(const std::vector<Int>& v, bool) { return to_json(static_cast<const IntVec&>(v)); }

json to_json(const QVec& v) {
	json a = json::array();
	for (const auto& x : v)
		a.push_back(to_json(x));
	return a;
}

json to_json(const IntMatrix& m) {
	json a = json::array();
	for (std::size_t i = 0; i < m.rows; ++i)
		a.push_back(to_json(m.row(i)));
	return a;
}

json to_json(const Cyclotomic& c) {
	Cyclotomic r = c.reduced();
	return {{"conductor", r.conductor()}, {"coeffs", to_json(r.coeffs())}};
}

Int int_from_json(const json& j) {
	if (j.is_number_integer())
		return Int(j.get<long>());
	if (j.is_string()) {
		Int x;
		if (x.set_str(j.get<std::string>(), 10) != 0)
			bad("not an integer: " + j.get<std::string>());
		return x;
	}
	bad("expected an integer");
}

Rat rat_from_json(const json& j) {
	if (j.is_number_integer())
		return Rat(Int(j.get<long>()));
	if (!j.is_string())
		bad("expected a rational string 'a/b'");
	std::string s = j.get<std::string>();
	auto slash = s.find('/');
	Int num, den = 1;
	if (num.set_str(s.substr(0, slash), 10) != 0)
		bad("not a rational: " + s);
	if (slash != std::string::npos && den.set_str(s.substr(slash + 1), 10) != 0)
		bad("not a rational: " + s);
	if (den == 0)
		bad("zero denominator: " + s);
	return ratio(num, den);
}

IntVec intvec_from_json(const json& j) {
	if (!j.is_array())
		bad("expected an integer array");
	IntVec v;
	for (const auto& x : j)
		v.push_back(int_from_json(x));
	return v;
}

QVec qvec_from_json(const json& j) {
	if (!j.is_array())
		bad("expected a rational array");
	QVec v;
	for (const auto& x : j)
		v.push_back(rat_from_json(x));
	return v;
}

IntMatrix matrix_from_json(const json& j) {
	if (!j.is_array())
		bad("expected a matrix (array of rows)");
	std::vector<IntVec> rows;
	for (const auto& r : j)
		rows.push_back(intvec_from_json(r));
	for (const auto& r : rows)
		if (r.size() != rows[0].size())
			bad("ragged matrix");
	if (rows.empty())
		return IntMatrix();
	return IntMatrix::from_rows(rows);
}

Cyclotomic cyclotomic_from_json(const json& j) {
	unsigned long n = field(j, "conductor").get<unsigned long>();
	QVec c = qvec_from_json(field(j, "coeffs"));
	if (n == 0 || c.size() != euler_phi(n))
		bad("coefficient count must equal phi(conductor)");
	return Cyclotomic::from_coeffs(n, c);
}

json root_datum_to_json(const RootDatum& rd) {
	json j;
	j["label"] = rd.label();
	j["rank"] = rd.rank();
	json roots = json::array(), coroots = json::array();
	for (std::size_t i = 0; i < rd.num_roots(); ++i) {
		roots.push_back(to_json(rd.root(i)));
		coroots.push_back(to_json(rd.coroot(i)));
	}
	j["roots"] = roots;
	j["coroots"] = coroots;
	j["simple"] = rd.simple();
	if (rd.has_ambient()) {
		json amb = json::array();
		for (std::size_t c = 0; c < rd.rank(); ++c) {
			QVec e(rd.rank(), 0);
			e[c] = 1;
			amb.push_back(to_json(rd.to_ambient(e)));
		}
		j["ambient"] = amb;
	}
	return j;
}

RootDatum root_datum_from_json(const json& j) {
	if (j.is_object() && j.contains("type") && !j.contains("roots")) {
		std::string type = field(j, "type").get<std::string>();
		std::size_t n = field(j, "n").get<std::size_t>();
		std::string lat = j.value("lattice", std::string("sc"));
		if (type.size() != 1 || std::string("ABCD").find(type[0]) == std::string::npos)
			bad("root datum type must be one of A, B, C, D");
		LatticeKind kind;
		if (lat == "sc")
			kind = LatticeKind::SimplyConnected;
		else if (lat == "adjoint")
			kind = LatticeKind::Adjoint;
		else
			bad("lattice must be 'sc' or 'adjoint'");
		return build_classical(type[0], n, kind);
	}
	std::vector<IntVec> roots, coroots;
	for (const auto& r : field(j, "roots"))
		roots.push_back(intvec_from_json(r));
	for (const auto& r : field(j, "coroots"))
		coroots.push_back(intvec_from_json(r));
	RootDatum rd(j.value("label", std::string("custom")), field(j, "rank").get<std::size_t>(), roots, coroots,
	             field(j, "simple").get<std::vector<std::size_t>>());
	if (j.contains("ambient")) {
		std::vector<QVec> cols;
		for (const auto& c : j.at("ambient"))
			cols.push_back(qvec_from_json(c));
		rd.set_ambient(cols);
	}
	return rd;
}

json extension_to_json(const ExtensionDescriptor& e) {
	json j;
	j["A"] = e.a_factors();
	j["C"] = e.c_factors();
	json act = json::array();
	for (const auto& m : e.action())
		act.push_back(to_json(m));
	j["action"] = act;
	j["cocycle"] = e.cocycle_table();
	return j;
}

ExtensionDescriptor extension_from_json(const json& j) {
	std::vector<long> af = longs(field(j, "A")), cf = longs(field(j, "C"));
	std::vector<IntMatrix> action;
	for (const auto& m : field(j, "action"))
		action.push_back(matrix_from_json(m));
	std::vector<std::vector<long>> cocycle;
	for (const auto& row : field(j, "cocycle"))
		cocycle.push_back(longs(row));
	return ExtensionDescriptor(af, cf, action, cocycle);
}

json parameter_datum_to_json(const ParameterDatum& d) {
	json j;
	j["name"] = d.name;
	j["root_datum"] = root_datum_to_json(d.rd);
	json gens = json::array();
	for (const auto& g : d.generators)
		gens.push_back(normalizer_to_json(g));
	j["generators"] = gens;
	json rels = json::array();
	for (const auto& r : d.relations)
		rels.push_back({{"lhs", word_to_json(r.lhs)}, {"rhs", word_to_json(r.rhs)}, {"text", r.text}});
	j["relations"] = rels;
	j["hypothesis"] = hypothesis_name(d.hypothesis);
	return j;
}

ParameterDatum parameter_datum_from_json(const json& j) {
	ParameterDatum d;
	d.name = j.value("name", std::string("custom"));
	d.rd = root_datum_from_json(field(j, "root_datum"));
	for (const auto& g : field(j, "generators")) {
		NormalizerElement e;
		e.torus = qvec_from_json(field(g, "torus"));
		e.weyl = matrix_from_json(field(g, "weyl"));
		e.outer = matrix_from_json(field(g, "outer"));
		d.generators.push_back(std::move(e));
	}
	if (j.contains("relations"))
		for (const auto& r : j.at("relations"))
			d.relations.push_back({word_from_json(field(r, "lhs")), word_from_json(field(r, "rhs")),
			                       r.value("text", std::string())});
	d.hypothesis = hypothesis_from(j.value("hypothesis", std::string("none")));
	return d;
}

bool same_datum(const ParameterDatum& a, const ParameterDatum& b) {
	if (a.rd.rank() != b.rd.rank() || a.rd.roots() != b.rd.roots() || a.rd.coroots() != b.rd.coroots() ||
	    a.rd.simple() != b.rd.simple() || a.hypothesis != b.hypothesis)
		return false;
	if (a.generators.size() != b.generators.size() || a.relations.size() != b.relations.size())
		return false;
	for (std::size_t i = 0; i < a.generators.size(); ++i)
		if (!(a.generators[i] == b.generators[i]))
			return false;
	for (std::size_t i = 0; i < a.relations.size(); ++i)
		if (a.relations[i].lhs != b.relations[i].lhs || a.relations[i].rhs != b.relations[i].rhs)
			return false;
	return true;
}

json family_to_json(const EtaFamily& f) {
	json j;
	const FiniteGroup& g = f.group();
	j["group"] = {{"order", g.order()}, {"table", g.table()}};
	j["npoints"] = f.npoints();
	j["action"] = f.action_table();
	json eta = json::array();
	std::size_t n = f.npoints();
	for (std::size_t x = 0; x < n; ++x)
		for (std::size_t y = 0; y < n; ++y)
			for (std::size_t z = 0; z < n; ++z)
				if (frac(f.eta(x, y, z)) != 0)
					eta.push_back(json::array({x, y, z, to_json(frac(f.eta(x, y, z)))}));
	j["eta"] = eta;
	return j;
}

EtaFamily family_from_json(const json& j) {
	const json& gj = field(j, "group");
	FiniteGroup g;
	if (gj.contains("abelian"))
		g = FiniteGroup::abelian(longs(gj.at("abelian")));
	else
		g = FiniteGroup::from_table(field(gj, "order").get<std::size_t>(),
		                            field(gj, "table").get<std::vector<std::uint32_t>>());
	std::size_t n = field(j, "npoints").get<std::size_t>();
	auto action = field(j, "action").get<std::vector<std::uint32_t>>();
	std::vector<Rat> eta(n * n * n, 0);
	for (const auto& e : field(j, "eta")) {
		if (!e.is_array() || e.size() != 4)
			bad("eta entries are [x, y, z, value]");
		std::size_t x = e[0].get<std::size_t>(), y = e[1].get<std::size_t>(), z = e[2].get<std::size_t>();
		if (x >= n || y >= n || z >= n)
			bad("eta index out of range");
		eta[(x * n + y) * n + z] = rat_from_json(e[3]);
	}
	return EtaFamily(g, n, action, eta);
}

json centralizer_to_json(const CentralizerReport& r) {
	json j;
	j["fixed_torus"] = {{"order", r.fixed_order == 0 ? json(nullptr) : to_json(r.fixed_order)},
	                    {"free_rank", r.fixed_free_rank},
	                    {"invariant_factors", to_json(r.fixed_factors, true)},
	                    {"generators", json::array()}};
	for (const auto& g : r.fixed_generators)
		j["fixed_torus"]["generators"].push_back(to_json(g));
	json om = json::array();
	for (const auto& o : r.omega)
		om.push_back({{"weyl", to_json(o.weyl)}, {"correction", to_json(o.correction)}});
	j["omega"] = {{"order", r.omega.size()},
	              {"abelian", r.omega_abelian},
	              {"invariant_factors", r.omega_factors},
	              {"elements", om}};
	if (r.extension)
		j["extension"] = extension_to_json(*r.extension);
	if (r.adjoint_extension) {
		j["adjoint_extension"] = extension_to_json(*r.adjoint_extension);
		json ag = json::array();
		for (const auto& g : r.adjoint_generators)
			ag.push_back(to_json(g));
		j["adjoint_generators"] = ag;
	}
	json cm = json::array();
	for (const auto& c : r.commutators)
		cm.push_back({{"pair", json::array({c.c1, c.c2})},
		              {"value", to_json(c.value)},
		              {"simple_root_values", to_json(c.adjoint)},
		              {"trivial_in_coinvariants", c.trivial_in_coinvariants},
		              {"adjoint_trivial_in_coinvariants", c.adjoint_trivial_in_coinvariants}});
	j["commutators"] = cm;
	j["order"] = r.order == 0 ? json(nullptr) : to_json(r.order);
	j["mult_one"] = r.mult_one;
	j["adjoint_mult_one"] = r.adjoint_mult_one;
	j["notes"] = r.notes;
	return j;
}

json d2n_to_json(const D2nReport& r) {
	json j;
	j["n"] = r.n;
	j["q"] = r.q;
	j["cycle_lengths"] = r.cycle_lengths;
	j["boundaries"] = r.boundaries;
	j["B"] = r.b_set;
	j["w0"] = to_json(r.w0);
	j["w1"] = to_json(r.w1);
	j["w2"] = to_json(r.w2);
	j["Lambda_w1_w0"] = r.lambda_w1_w0;
	j["Lambda_w2_w0"] = r.lambda_w2_w0;
	j["Lambda_w2_w0_matches_union"] = r.lambda_w2_w0_matches_union;
	j["lambda_w2_w0"] = to_json(r.lambda_w2_w0_sum);
	j["mu"] = to_json(r.mu);
	j["mu_denominators"] = to_json(r.mu_denominators, true);
	j["denominators_divide_q_power_plus_one"] = r.denominators_ok;
	j["prime_to_p"] = r.prime_to_p;
	j["w1_lift_fixed"] = r.w1_lift_fixed;
	j["w2_lift_fixed"] = r.w2_lift_fixed;
	j["b"] = r.b;
	j["b_even"] = r.b_even;
	j["correction"] = to_json(r.correction);
	j["correction_closed_form"] = r.correction_closed_form;
	j["Lambda_w1_w2"] = r.lambda_w1_w2;
	j["lambda_w1_w2"] = to_json(r.lambda_w1_w2_sum);
	j["lambda_w1_w2_closed_form"] = r.lambda_w1_w2_closed_form;
	j["half_lambda_in_root_lattice"] = r.half_lambda_w1_w2_in_root_lattice;
	j["tits_agrees"] = r.tits_agrees;
	j["commutator"] = to_json(r.commutator);
	j["commutator_fixed"] = r.commutator_fixed;
	j["coinvariant_factors"] = to_json(r.coinvariant_factors, true);
	j["commutator_trivial"] = r.commutator_trivial;
	j["ok"] = r.ok();
	return j;
}

json census_to_json(const Census& c) {
	json j;
	json dims = json::object();
	for (auto [d, n] : c.dimensions)
		dims[std::to_string(d)] = n;
	j["dimensions"] = dims;
	j["irreducibles"] = c.irreducibles;
	json es = json::array();
	for (const auto& e : c.entries)
		es.push_back({{"orbit_rep", e.orbit_rep},
		              {"orbit_size", e.orbit_size},
		              {"stabilizer_order", e.stabilizer_order},
		              {"radical_order", e.radical_order},
		              {"projective_dim", e.projective_dim},
		              {"dimension", e.dimension},
		              {"multiplicity", e.multiplicity},
		              {"count", e.count}});
	j["orbits"] = es;
	return j;
}

json chi_data_to_json(const ChiData& chi) {
	json a = json::array();
	for (const auto& o : chi.orbits) {
		json e{{"rep", o.rep},
		       {"roots", o.roots},
		       {"opposite", o.opposite},
		       {"degree", o.degree},
		       {"type", to_string(o.type)},
		       {"chi", to_string(o.chi)}};
		if (!o.tag.empty())
			e["tag"] = o.tag;
		a.push_back(e);
	}
	return a;
}

json mod_a_to_json(const ModAData& a) {
	json arr = json::array();
	for (const auto& e : a.entries)
		arr.push_back({{"rep", e.rep},
		               {"field", {{"p", e.field->p()}, {"degree", e.field->m()}}},
		               {"abar", e.abar},
		               {"square_class", e.square ? "square" : "nonsquare"},
		               {"determined", e.determined},
		               {"psi_value", to_json(e.psi_value)},
		               {"twist_sign", e.twist_sign}});
	return {{"lambda_c", a.lambda_c}, {"orbits", arr}};
}

json delta_to_json(const DeltaReport& d) {
	json fs = json::array();
	for (const auto& f : d.factors)
		fs.push_back({{"rep", f.rep},
		              {"type", to_string(f.type)},
		              {"alpha_gamma", f.alpha_gamma},
		              {"degenerate", f.degenerate},
		              {"sign", f.sign}});
	return {{"value", to_json(d.value)}, {"factors", fs}, {"degenerate_orbits", d.degenerate_orbits}};
}

json theta_sum_to_json(const ThetaSumReport& r) {
	json ts = json::array();
	for (const auto& t : r.terms)
		ts.push_back({{"weyl", to_json(t.weyl)},
		              {"point", to_json(t.point)},
		              {"delta", to_json(t.delta)},
		              {"theta", to_json(t.theta)},
		              {"term", to_json(t.term)},
		              {"degenerate", t.degenerate}});
	return {{"terms", ts}, {"sum", to_json(r.sum)}, {"constant", to_json(r.constant)}, {"total", to_json(r.total)}};
}

std::string fixture_path(const std::string& name) {
	std::string dir = CUSPIDOR_FIXTURE_DIR;
	if (const char* env = std::getenv("CUSPIDOR_FIXTURES"))
		dir = env;
	return dir + "/" + name;
}

json load_json_file(const std::string& path) {
	std::ifstream in(path);
	if (!in)
		throw DomainError("MissingFile", "cannot open " + path);
	try {
		return json::parse(in);
	} catch (const json::exception& e) {
		bad(path + ": " + e.what());
	}
}

json load_fixture(const std::string& name) {
	std::string n = name;
	if (n.find(".json") == std::string::npos)
		n += ".json";
	return load_json_file(fixture_path(n));
}

} // namespace cuspidor
