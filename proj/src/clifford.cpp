#include "cuspidor/clifford.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace cuspidor {

namespace {

long lmod(long a, long m) { return ((a % m) + m) % m; }

long exponent_of(const std::vector<long>& f) {
	long e = 1;
	for (long d : f) e = std::lcm(e, d);
	return e;
}

// ρ_k(a) scaled by the exponent E of the group: Σ k_i a_i (E/d_i) mod E.
long char_num(const std::vector<long>& f, long e, std::size_t k, std::size_t a) {
	long s = 0;
	for (long d : f) {
		s += (long)(k % d) * (long)(a % d) % d * (e / d);
		k /= d;
		a /= d;
	}
	return lmod(s, e);
}

std::vector<long> reduce_vec(const std::vector<long>& f, std::vector<long> v) {
	for (std::size_t i = 0; i < f.size(); ++i) v[i] = lmod(v[i], f[i]);
	return v;
}

std::vector<long> apply_long(const IntMatrix& m, const std::vector<long>& v) {
	std::vector<long> r(m.rows, 0);
	for (std::size_t i = 0; i < m.rows; ++i)
		for (std::size_t j = 0; j < m.cols; ++j) r[i] += m(i, j).get_si() * v[j];
	return r;
}

void check_map(const IntMatrix& m, const std::vector<long>& src, const std::vector<long>& dst, const char* what) {
	if (m.rows != dst.size() || m.cols != src.size()) throw DomainError("InvalidMap", std::string(what) + ": wrong shape");
	for (std::size_t j = 0; j < src.size(); ++j)
		for (std::size_t i = 0; i < dst.size(); ++i)
			if (lmod(m(i, j).get_si() * src[j], dst[i]) != 0)
				throw DomainError("InvalidMap", std::string(what) + ": not well defined on the source relations");
}

std::vector<std::size_t> unit_indices(const std::vector<long>& f) {
	std::vector<std::size_t> u;
	std::size_t place = 1;
	for (long d : f) {
		u.push_back(d == 1 ? 0 : place);
		place *= (std::size_t)d;
	}
	return u;
}

} // namespace

std::vector<long> ExtensionDescriptor::digits(const std::vector<long>& f, std::size_t x) {
	std::vector<long> v;
	for (long d : f) {
		v.push_back((long)(x % d));
		x /= d;
	}
	return v;
}

std::size_t ExtensionDescriptor::index(const std::vector<long>& f, const std::vector<long>& v) {
	std::size_t r = 0, place = 1;
	for (std::size_t i = 0; i < f.size(); ++i) {
		r += (std::size_t)lmod(v[i], f[i]) * place;
		place *= (std::size_t)f[i];
	}
	return r;
}

ExtensionDescriptor::ExtensionDescriptor(std::vector<long> a_factors, std::vector<long> c_factors,
                                         std::vector<IntMatrix> action, const std::vector<std::vector<long>>& cocycle)
	: af_(std::move(a_factors)), cf_(std::move(c_factors)), action_(std::move(action)) {
	for (long d : af_)
		if (d < 1) throw DomainError("InvalidExtension", "A factors must be positive");
	for (long d : cf_)
		if (d < 1) throw DomainError("InvalidExtension", "C factors must be positive");
	A_ = FiniteGroup::abelian(af_);
	C_ = FiniteGroup::abelian(cf_);
	std::size_t na = A_.order(), nc = C_.order();
	if (action_.size() != cf_.size()) throw DomainError("InvalidExtension", "one action matrix per generator of C");
	std::vector<std::vector<std::uint32_t>> gen(cf_.size(), std::vector<std::uint32_t>(na));
	for (std::size_t i = 0; i < cf_.size(); ++i) {
		try {
			check_map(action_[i], af_, af_, "action");
		} catch (const DomainError& e) {
			throw DomainError("InvalidExtension", e.what());
		}
		std::vector<int> hit(na, 0);
		for (std::size_t a = 0; a < na; ++a) {
			auto img = a_index(apply_long(action_[i], a_coords(a)));
			if (hit[img]++) throw DomainError("InvalidExtension", "action matrix is not invertible on A");
			gen[i][a] = (std::uint32_t)img;
		}
	}
	act_.assign(nc * na, 0);
	for (std::size_t a = 0; a < na; ++a) act_[a] = (std::uint32_t)a;
	auto units = unit_indices(cf_);
	for (std::size_t c = 1; c < nc; ++c) {
		auto k = c_coords(c);
		std::size_t i = 0;
		while (k[i] == 0) ++i;
		std::size_t prev = c - units[i];
		for (std::size_t a = 0; a < na; ++a) act_[c * na + a] = gen[i][act_[prev * na + a]];
	}
	for (std::size_t c1 = 0; c1 < nc; ++c1)
		for (std::size_t c2 = 0; c2 < nc; ++c2) {
			std::size_t c = C_.mul(c1, c2);
			for (std::size_t a = 0; a < na; ++a)
				if (act(c, a) != act(c1, act(c2, a)))
					throw DomainError("InvalidExtension", "generator matrices do not define a C-action");
		}

	if (cocycle.size() != nc * nc) throw DomainError("InvalidExtension", "cocycle table must be |C| x |C|");
	z_.assign(nc * nc, 0);
	for (std::size_t i = 0; i < nc * nc; ++i) {
		if (cocycle[i].size() != af_.size()) throw DomainError("InvalidExtension", "cocycle value has wrong length");
		z_[i] = (std::uint32_t)a_index(cocycle[i]);
	}
	// shift by ∂f with f ≡ -z(1,1): z'(c1,c2) = z(c1,c2) - c1·z(1,1)
	std::size_t z11 = z_[0];
	if (z11 != 0)
		for (std::size_t c1 = 0; c1 < nc; ++c1)
			for (std::size_t c2 = 0; c2 < nc; ++c2)
				z_[c1 * nc + c2] = A_.mul(z_[c1 * nc + c2], A_.inv(act(c1, z11)));
	auto check = [&](std::size_t c1, std::size_t c2, std::size_t c3) {
		std::size_t lhs = A_.mul(z(c1, c2), z(C_.mul(c1, c2), c3));
		std::size_t rhs = A_.mul(act(c1, z(c2, c3)), z(c1, C_.mul(c2, c3)));
		if (lhs != rhs) throw DomainError("InvalidExtension", "cocycle identity fails");
	};
	if (nc <= 256) {
		for (std::size_t c1 = 0; c1 < nc; ++c1)
			for (std::size_t c2 = 0; c2 < nc; ++c2)
				for (std::size_t c3 = 0; c3 < nc; ++c3) check(c1, c2, c3);
	} else {
		std::mt19937_64 rng(nc);
		for (int t = 0; t < 1000000; ++t) check(rng() % nc, rng() % nc, rng() % nc);
	}
}

ExtensionDescriptor ExtensionDescriptor::direct_product(std::vector<long> a_factors, std::vector<long> c_factors) {
	std::size_t nc = 1;
	for (long d : c_factors) nc *= (std::size_t)d;
	std::vector<IntMatrix> act(c_factors.size(), IntMatrix::identity(a_factors.size()));
	std::vector<std::vector<long>> z(nc * nc, std::vector<long>(a_factors.size(), 0));
	return ExtensionDescriptor(std::move(a_factors), std::move(c_factors), std::move(act), z);
}

IntMatrix ExtensionDescriptor::action_matrix(std::size_t c) const {
	std::size_t r = af_.size();
	IntMatrix m(r, r);
	auto units = unit_indices(af_);
	for (std::size_t j = 0; j < r; ++j) {
		auto col = a_coords(act(c, units[j]));
		for (std::size_t i = 0; i < r; ++i) m(i, j) = col[i];
	}
	return m;
}

std::size_t ExtensionDescriptor::mul(std::size_t x, std::size_t y) const {
	std::size_t na = A_.order();
	std::size_t a1 = x % na, c1 = x / na, a2 = y % na, c2 = y / na;
	std::size_t a = A_.mul(A_.mul(a1, act(c1, a2)), z(c1, c2));
	return a + na * C_.mul(c1, c2);
}

std::size_t ExtensionDescriptor::inv(std::size_t x) const {
	std::size_t na = A_.order();
	std::size_t a = x % na, c = x / na, ci = C_.inv(c);
	// a + c·a' + z(c, c⁻¹) = 0
	std::size_t rhs = A_.inv(A_.mul(a, z(c, ci)));
	return act(ci, rhs) + na * ci;
}

std::vector<std::vector<long>> ExtensionDescriptor::cocycle_table() const {
	std::vector<std::vector<long>> t;
	for (auto v : z_) t.push_back(a_coords(v));
	return t;
}

Rat ExtensionDescriptor::character_value(std::size_t rho, std::size_t a) const {
	long e = exponent_of(af_);
	return ratio(Int(char_num(af_, e, rho, a)), Int(e));
}

std::size_t ExtensionDescriptor::act_character(std::size_t c, std::size_t rho) const {
	std::size_t ci = C_.inv(c);
	auto units = unit_indices(af_);
	long e = exponent_of(af_);
	std::vector<long> k(af_.size());
	for (std::size_t i = 0; i < af_.size(); ++i) k[i] = char_num(af_, e, rho, act(ci, units[i])) / (e / af_[i]);
	return a_index(k);
}

ConcreteGroup concrete_group(const ExtensionDescriptor& e) {
	std::size_t n = e.order();
	std::vector<std::uint32_t> t(n * n);
	for (std::size_t x = 0; x < n; ++x)
		for (std::size_t y = 0; y < n; ++y) t[x * n + y] = (std::uint32_t)e.mul(x, y);
	ConcreteGroup g;
	g.ext = e;
	g.group = FiniteGroup::from_table(n, std::move(t), 512);
	g.classes = g.group.conjugacy_classes();
	return g;
}

namespace {

std::size_t raw_commutator(const ExtensionDescriptor& e, std::size_t c1, std::size_t c2,
                           const std::vector<std::size_t>* section) {
	std::size_t s1 = e.element(section ? (*section)[c1] : 0, c1);
	std::size_t s2 = e.element(section ? (*section)[c2] : 0, c2);
	std::size_t x = e.mul(e.mul(s1, s2), e.mul(e.inv(s1), e.inv(s2)));
	if (x >= e.a_order()) throw DomainError("InternalError", "commutator does not lie in A");
	return x;
}

std::vector<std::size_t> augmentation(const ExtensionDescriptor& e, const std::vector<std::size_t>& cs) {
	const auto& A = e.a_group();
	std::vector<std::size_t> gens;
	for (auto c : cs)
		for (auto u : unit_indices(e.a_factors())) gens.push_back(A.mul(e.act(c, u), A.inv(u)));
	return A.subgroup_generated(gens);
}

} // namespace

CommutatorValue commutator_function(const ExtensionDescriptor& e, std::size_t c1, std::size_t c2,
                                    const std::vector<std::size_t>* section) {
	if (c1 >= e.c_order() || c2 >= e.c_order()) throw DomainError("InvalidElement", "element of C out of range");
	CommutatorValue v;
	v.raw = raw_commutator(e, c1, c2, section);
	v.augmentation = augmentation(e, {c1, c2});
	const auto& A = e.a_group();
	v.canonical = v.raw;
	for (auto i : v.augmentation) v.canonical = std::min<std::size_t>(v.canonical, A.mul(v.raw, i));
	v.trivial = std::binary_search(v.augmentation.begin(), v.augmentation.end(), v.raw);
	const auto& af = e.a_factors();
	IntMatrix rel(af.size(), af.size() + v.augmentation.size());
	for (std::size_t i = 0; i < af.size(); ++i) rel(i, i) = af[i];
	for (std::size_t j = 0; j < v.augmentation.size(); ++j) {
		auto co = e.a_coords(v.augmentation[j]);
		for (std::size_t i = 0; i < af.size(); ++i) rel(i, af.size() + j) = co[i];
	}
	if (!af.empty()) v.coinvariant_factors = AbelianGroup::from_relations(rel).invariant_factors();
	return v;
}

namespace {

struct OrbitData {
	std::vector<std::size_t> orbit, stabilizer, radical;
	std::size_t m = 1;
};

OrbitData orbit_data(const ExtensionDescriptor& e, std::size_t rho) {
	OrbitData d;
	std::set<std::size_t> orb;
	for (std::size_t c = 0; c < e.c_order(); ++c) {
		std::size_t r = e.act_character(c, rho);
		orb.insert(r);
		if (r == rho) d.stabilizer.push_back(c);
	}
	d.orbit.assign(orb.begin(), orb.end());
	long ea = exponent_of(e.a_factors());
	for (auto c : d.stabilizer) {
		bool rad = true;
		for (auto c2 : d.stabilizer)
			if (char_num(e.a_factors(), ea, rho, raw_commutator(e, c, c2, nullptr)) != 0) {
				rad = false;
				break;
			}
		if (rad) d.radical.push_back(c);
	}
	std::size_t q = d.stabilizer.size() / d.radical.size();
	std::size_t m = 1;
	while (m * m < q) ++m;
	if (m * m != q || d.stabilizer.size() % d.radical.size()) throw DomainError("InternalError", "radical index is not a square");
	d.m = m;
	return d;
}

} // namespace

std::vector<std::size_t> commutator_radical(const ExtensionDescriptor& e, std::size_t rho) {
	return orbit_data(e, rho).radical;
}

MultOneResult has_multiplicity_one(const ExtensionDescriptor& e) {
	MultOneResult r;
	std::size_t nc = e.c_order();
	long ea = exponent_of(e.a_factors());
	for (std::size_t c1 = 0; c1 < nc; ++c1)
		for (std::size_t c2 = c1 + 1; c2 < nc; ++c2) {
			std::size_t raw = raw_commutator(e, c1, c2, nullptr);
			if (raw == 0) continue;
			auto v = commutator_function(e, c1, c2);
			if (v.trivial) continue;
			r.mult_one = false;
			MultOneWitness w;
			w.c1 = c1;
			w.c2 = c2;
			for (std::size_t rho = 0; rho < e.a_order(); ++rho)
				if (e.act_character(c1, rho) == rho && e.act_character(c2, rho) == rho &&
				    char_num(e.a_factors(), ea, rho, v.raw) != 0) {
					w.rho = rho;
					break;
				}
			auto d = orbit_data(e, w.rho);
			w.multiplicity = d.m;
			w.dimension = d.m * d.orbit.size();
			r.witness = w;
			return r;
		}
	return r;
}

ExtensionDescriptor pullback(const ExtensionDescriptor& e, const std::vector<long>& c_prime, const IntMatrix& i) {
	check_map(i, c_prime, e.c_factors(), "pullback");
	auto cp = FiniteGroup::abelian(c_prime);
	std::size_t n = cp.order();
	std::vector<std::size_t> img(n);
	for (std::size_t c = 0; c < n; ++c)
		img[c] = ExtensionDescriptor::index(e.c_factors(), apply_long(i, ExtensionDescriptor::digits(c_prime, c)));
	std::vector<IntMatrix> act;
	for (auto u : unit_indices(c_prime)) act.push_back(e.action_matrix(img[u]));
	std::vector<std::vector<long>> z(n * n);
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t b = 0; b < n; ++b) z[a * n + b] = e.a_coords(e.z(img[a], img[b]));
	return ExtensionDescriptor(e.a_factors(), c_prime, act, z);
}

ExtensionDescriptor pushout(const ExtensionDescriptor& e, const std::vector<long>& a_prime, const IntMatrix& p,
                            const std::vector<IntMatrix>& action_prime) {
	check_map(p, e.a_factors(), a_prime, "pushout");
	if (action_prime.size() != e.c_factors().size()) throw DomainError("InvalidMap", "one action matrix per generator of C");
	auto units = unit_indices(e.a_factors());
	auto cunits = unit_indices(e.c_factors());
	for (std::size_t g = 0; g < cunits.size(); ++g)
		for (std::size_t r = 0; r < units.size(); ++r) {
			auto lhs = reduce_vec(a_prime, apply_long(p, e.a_coords(e.act(cunits[g], units[r]))));
			auto rhs = reduce_vec(a_prime, apply_long(action_prime[g], apply_long(p, e.a_coords(units[r]))));
			if (lhs != rhs) throw DomainError("NotEquivariant", "the map does not commute with the C-actions");
		}
	std::size_t nc = e.c_order();
	std::vector<std::vector<long>> z(nc * nc);
	for (std::size_t a = 0; a < nc; ++a)
		for (std::size_t b = 0; b < nc; ++b) z[a * nc + b] = reduce_vec(a_prime, apply_long(p, e.a_coords(e.z(a, b))));
	return ExtensionDescriptor(a_prime, e.c_factors(), action_prime, z);
}

ExtensionDescriptor product(const ExtensionDescriptor& e1, const ExtensionDescriptor& e2) {
	auto af = e1.a_factors(), cf = e1.c_factors();
	af.insert(af.end(), e2.a_factors().begin(), e2.a_factors().end());
	cf.insert(cf.end(), e2.c_factors().begin(), e2.c_factors().end());
	std::size_t r1 = e1.a_factors().size(), r = af.size();
	std::vector<IntMatrix> act;
	for (const auto& m : e1.action()) {
		IntMatrix b = IntMatrix::identity(r);
		for (std::size_t i = 0; i < r1; ++i)
			for (std::size_t j = 0; j < r1; ++j) b(i, j) = m(i, j);
		act.push_back(b);
	}
	for (const auto& m : e2.action()) {
		IntMatrix b = IntMatrix::identity(r);
		for (std::size_t i = 0; i < r - r1; ++i)
			for (std::size_t j = 0; j < r - r1; ++j) b(r1 + i, r1 + j) = m(i, j);
		act.push_back(b);
	}
	std::size_t n1 = e1.c_order(), n2 = e2.c_order(), n = n1 * n2;
	std::vector<std::vector<long>> z(n * n);
	for (std::size_t x = 0; x < n; ++x)
		for (std::size_t y = 0; y < n; ++y) {
			auto v = e1.a_coords(e1.z(x % n1, y % n1));
			auto w = e2.a_coords(e2.z(x / n1, y / n1));
			v.insert(v.end(), w.begin(), w.end());
			z[x * n + y] = v;
		}
	return ExtensionDescriptor(af, cf, act, z);
}

Census irrep_census(const ExtensionDescriptor& e, std::size_t max_order) {
	if (e.order() > max_order) throw DomainError("TooLarge", "extension too large for the census");
	Census out;
	std::vector<int> seen(e.a_order(), 0);
	std::size_t total = 0;
	for (std::size_t rho = 0; rho < e.a_order(); ++rho) {
		if (seen[rho]) continue;
		auto d = orbit_data(e, rho);
		for (auto r : d.orbit) seen[r] = 1;
		CensusEntry c;
		c.orbit_rep = rho;
		c.orbit_size = d.orbit.size();
		c.stabilizer_order = d.stabilizer.size();
		c.radical_order = d.radical.size();
		c.cocycle_trivial = d.m == 1;
		c.projective_dim = d.m;
		c.dimension = d.m * d.orbit.size();
		c.multiplicity = d.m;
		c.count = d.radical.size();
		out.entries.push_back(c);
		out.dimensions[c.dimension] += c.count;
		out.irreducibles += c.count;
		total += c.dimension * c.dimension * c.count;
	}
	if (total != e.order()) throw DomainError("InternalError", "census does not account for |B|");
	return out;
}

BruteForceCensus brute_force_census(const ConcreteGroup& g) {
	if (g.group.order() > 512) throw DomainError("TooLarge", "brute-force census needs |B| <= 512");
	BruteForceCensus b;
	b.table = character_table(g.group);
	const auto& e = g.ext;
	const auto& t = b.table;
	std::size_t na = e.a_order();
	long ea = exponent_of(e.a_factors());
	std::uint64_t ainv = t.inverse(na % t.prime);
	b.restriction.assign(t.size(), std::vector<long>(na, 0));
	std::vector<std::uint64_t> conj_root(ea);
	for (long k = 0; k < ea; ++k) conj_root[k] = t.root_power(ratio(Int(-k), Int(ea)));
	for (std::size_t chi = 0; chi < t.size(); ++chi) {
		b.dimensions[(std::size_t)t.degrees[chi]]++;
		for (std::size_t rho = 0; rho < na; ++rho) {
			std::uint64_t s = 0;
			for (std::size_t a = 0; a < na; ++a)
				s = (s + t.mod_p[chi][t.class_of[a]] * conj_root[char_num(e.a_factors(), ea, rho, a)]) % t.prime;
			long m = t.lift_count(s * ainv % t.prime, t.degrees[chi]);
			b.restriction[chi][rho] = m;
			b.max_multiplicity = std::max(b.max_multiplicity, m);
		}
	}
	return b;
}

std::vector<std::vector<std::size_t>> twist_stabilizers(const ExtensionDescriptor& e, const BruteForceCensus& b) {
	const auto& t = b.table;
	std::size_t na = e.a_order(), nc = e.c_order();
	long ec = exponent_of(e.c_factors());
	std::vector<std::vector<std::size_t>> out(t.size());
	for (std::size_t chi = 0; chi < t.size(); ++chi)
		for (std::size_t lam = 0; lam < nc; ++lam) {
			bool fixed = true;
			for (std::size_t j = 0; j < t.classes.size() && fixed; ++j) {
				std::size_t c = t.classes[j][0] / na;
				std::uint64_t l = t.root_power(ratio(Int(char_num(e.c_factors(), ec, lam, c)), Int(ec)));
				if (t.mod_p[chi][j] * l % t.prime != t.mod_p[chi][j]) fixed = false;
			}
			if (fixed) out[chi].push_back(lam);
		}
	return out;
}

ExtensionDescriptor random_extension(std::mt19937_64& rng, std::size_t max_order) {
	static const long a_choices[] = {1, 2, 3, 4, 5, 6, 8};
	static const long c_choices[] = {2, 3, 4};
	for (;;) {
		std::vector<long> af, cf;
		std::size_t ra = 1 + rng() % 2, rc = 1 + rng() % 2;
		for (std::size_t i = 0; i < ra; ++i) af.push_back(a_choices[rng() % 7]);
		if (ra == 2 && rng() % 3 == 0) af[1] = af[0];
		for (std::size_t i = 0; i < rc; ++i) cf.push_back(c_choices[rng() % 3]);
		std::size_t na = 1, nc = 1;
		for (long d : af) na *= (std::size_t)d;
		for (long d : cf) nc *= (std::size_t)d;
		if (na * nc > max_order) continue;

		// one automorphism σ of A
		long ea = exponent_of(af);
		IntMatrix sigma = IntMatrix::identity(af.size());
		switch (rng() % 4) {
		case 0: break;
		case 1: sigma = sigma.scaled(-1); break;
		case 2: {
			std::vector<long> units{1};
			for (long u = 2; u < ea; ++u)
				if (std::gcd(u, ea) == 1) units.push_back(u);
			sigma = sigma.scaled(units[rng() % units.size()]);
			break;
		}
		default:
			if (af.size() == 2 && af[0] == af[1]) {
				sigma = IntMatrix::from_rows(std::vector<std::vector<long>>{{0, 1}, {1, 0}});
				if (rng() % 2) sigma = sigma.scaled(-1);
			}
		}
		auto FA = FiniteGroup::abelian(af);
		std::vector<std::size_t> sig(na);
		for (std::size_t a = 0; a < na; ++a)
			sig[a] = ExtensionDescriptor::index(af, apply_long(sigma, ExtensionDescriptor::digits(af, a)));
		long ord = 1;
		for (std::vector<std::size_t> cur = sig;; ++ord) {
			bool id = true;
			for (std::size_t a = 0; a < na && id; ++a) id = cur[a] == a;
			if (id) break;
			for (auto& x : cur) x = sig[x];
		}
		std::vector<IntMatrix> act;
		std::vector<std::vector<std::size_t>> acts;
		for (long d : cf) {
			long step = ord / std::gcd(ord, d);
			long k = step * (long)(rng() % (std::size_t)(ord / step)) % ord;
			act.push_back(sigma.pow(k));
			std::vector<std::size_t> m(na);
			for (std::size_t a = 0; a < na; ++a)
				m[a] = ExtensionDescriptor::index(af, apply_long(act.back(), ExtensionDescriptor::digits(af, a)));
			acts.push_back(m);
		}
		std::vector<std::size_t> fixed;
		for (std::size_t a = 0; a < na; ++a) {
			bool f = true;
			for (const auto& m : acts) f = f && m[a] == a;
			if (f) fixed.push_back(a);
		}
		auto pick_fixed = [&](long killer) {
			std::vector<std::size_t> ok;
			for (auto a : fixed)
				if (FA.pow(a, killer) == 0) ok.push_back(a);
			return ok[rng() % ok.size()];
		};
		// carry and bilinear parts with C-fixed values
		std::vector<std::size_t> zt(nc * nc, 0);
		for (std::size_t i = 0; i < cf.size(); ++i) {
			if (rng() % 2) continue;
			std::size_t a = pick_fixed(ea);
			for (std::size_t x = 0; x < nc; ++x)
				for (std::size_t y = 0; y < nc; ++y) {
					long xi = ExtensionDescriptor::digits(cf, x)[i], yi = ExtensionDescriptor::digits(cf, y)[i];
					if (xi + yi >= cf[i]) zt[x * nc + y] = FA.mul(zt[x * nc + y], a);
				}
		}
		for (std::size_t i = 0; i < cf.size(); ++i)
			for (std::size_t j = 0; j < cf.size(); ++j) {
				if (rng() % 2) continue;
				std::size_t b = pick_fixed(std::gcd(cf[i], cf[j]));
				for (std::size_t x = 0; x < nc; ++x)
					for (std::size_t y = 0; y < nc; ++y) {
						long xi = ExtensionDescriptor::digits(cf, x)[i], yj = ExtensionDescriptor::digits(cf, y)[j];
						zt[x * nc + y] = FA.mul(zt[x * nc + y], FA.pow(b, xi * yj));
					}
			}
		// coboundary of a random f with f(0) = 0: c1·f(c2) - f(c1c2) + f(c1)
		if (rng() % 2) {
			auto FC = FiniteGroup::abelian(cf);
			std::vector<std::size_t> f(nc, 0);
			for (std::size_t c = 1; c < nc; ++c) f[c] = rng() % na;
			auto act_c = [&](std::size_t c, std::size_t a) {
				auto k = ExtensionDescriptor::digits(cf, c);
				for (std::size_t i = 0; i < k.size(); ++i)
					for (long t = 0; t < k[i]; ++t) a = acts[i][a];
				return a;
			};
			for (std::size_t x = 0; x < nc; ++x)
				for (std::size_t y = 0; y < nc; ++y) {
					std::size_t d = FA.mul(FA.mul(act_c(x, f[y]), FA.inv(f[FC.mul(x, y)])), f[x]);
					zt[x * nc + y] = FA.mul(zt[x * nc + y], d);
				}
		}
		std::vector<std::vector<long>> z(nc * nc);
		for (std::size_t i = 0; i < nc * nc; ++i) z[i] = ExtensionDescriptor::digits(af, zt[i]);
		return ExtensionDescriptor(af, cf, act, z);
	}
}

namespace {

ExtensionDescriptor central_v4(long (*form)(long, long, long, long)) {
	std::vector<std::vector<long>> z(16);
	for (std::size_t x = 0; x < 4; ++x)
		for (std::size_t y = 0; y < 4; ++y) z[x * 4 + y] = {form(x % 2, x / 2, y % 2, y / 2) % 2};
	return ExtensionDescriptor({2}, {2, 2}, {IntMatrix::identity(1), IntMatrix::identity(1)}, z);
}

} // namespace

ExtensionDescriptor quaternion_extension() {
	return central_v4([](long x1, long x2, long y1, long y2) { return x1 * y1 + x2 * y2 + x1 * y2; });
}

ExtensionDescriptor dihedral_extension() {
	return central_v4([](long x1, long, long, long y2) { return x1 * y2; });
}

ExtensionDescriptor dihedral_by_inversion() {
	return ExtensionDescriptor({4}, {2}, {IntMatrix::from_rows(std::vector<std::vector<long>>{{-1}})},
	                           std::vector<std::vector<long>>(4, std::vector<long>{0}));
}

} // namespace cuspidor
