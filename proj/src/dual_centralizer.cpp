#include "cuspidor/dual_centralizer.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace cuspidor {

namespace {

QVec add(QVec a, const QVec& b) {
	for (std::size_t i = 0; i < a.size(); ++i)
		a[i] += b[i];
	return a;
}

QVec neg(QVec a) {
	for (auto& x : a)
		x = -x;
	return a;
}

QVec scale(QVec a, const Rat& k) {
	for (auto& x : a)
		x *= k;
	return a;
}

bool equal_mod1(const QVec& a, const QVec& b) {
	return is_zero_mod1(add(a, neg(b)));
}

} // namespace

// ---- normalizer model ----

NormalizerElement NormalizerModel::identity() const {
	std::size_t r = rd_->rank();
	return {QVec(r, 0), IntMatrix::identity(r), IntMatrix::identity(r)};
}

NormalizerElement NormalizerModel::normalize(NormalizerElement a) const {
	a.torus = reduce_mod1(a.torus);
	return a;
}

NormalizerElement NormalizerModel::mul(const NormalizerElement& a, const NormalizerElement& b) const {
	// o ṅ_w o⁻¹ = ṅ_{o w o⁻¹} for pinned o
	IntMatrix oinv = a.outer.inverse_unimodular();
	IntMatrix wb = a.outer * b.weyl * oinv;
	QVec t = add(a.torus, torus_action(a).apply(b.torus));
	t = add(t, tits_product_correction(*rd_, a.weyl, wb));
	return {reduce_mod1(t), a.weyl * wb, a.outer * b.outer};
}

NormalizerElement NormalizerModel::inv(const NormalizerElement& a) const {
	IntMatrix oinv = a.outer.inverse_unimodular();
	IntMatrix winv = a.weyl.inverse_unimodular();
	IntMatrix w2 = oinv * winv * a.outer;
	// t + (wo)t' + c(w, w⁻¹) = 0
	QVec c = tits_product_correction(*rd_, a.weyl, winv);
	IntMatrix act_inv = torus_action(a).inverse_unimodular();
	QVec t = neg(act_inv.apply(add(a.torus, c)));
	return {reduce_mod1(t), w2, oinv};
}

NormalizerElement NormalizerModel::pow(const NormalizerElement& a, long k) const {
	NormalizerElement base = k < 0 ? inv(a) : a;
	NormalizerElement out = identity();
	for (long i = 0; i < std::labs(k); ++i)
		out = mul(out, base);
	return out;
}

// ---- datum validation ----

namespace {

NormalizerElement eval_word(const NormalizerModel& m, const ParameterDatum& d,
                            const std::vector<std::pair<std::size_t, long>>& w) {
	NormalizerElement x = m.identity();
	for (auto [g, e] : w) {
		if (g >= d.generators.size())
			throw DomainError("InvalidDatum", "relation names an unknown generator");
		x = m.mul(x, m.pow(d.generators[g], e));
	}
	return x;
}

bool same(const NormalizerElement& a, const NormalizerElement& b) {
	return a.weyl == b.weyl && a.outer == b.outer && equal_mod1(a.torus, b.torus);
}

bool is_pinned(const RootDatum& rd, const IntMatrix& o) {
	if (o.rows != rd.rank() || o.cols != rd.rank())
		return false;
	Int det = o.det();
	if (det != 1 && det != -1)
		return false;
	if (!rd.permutes_roots(o))
		return false;
	std::set<std::size_t> simple(rd.simple().begin(), rd.simple().end());
	for (std::size_t s : rd.simple()) {
		std::size_t img;
		try {
			img = rd.coroot_index(o.apply(rd.coroot(s)));
		} catch (const DomainError&) {
			return false;
		}
		if (!simple.count(img))
			return false;
	}
	return true;
}

} // namespace

void validate_datum(const ParameterDatum& d) {
	std::size_t r = d.rd.rank();
	if (d.generators.empty())
		throw DomainError("InvalidDatum", "datum has no generators");
	for (const auto& g : d.generators) {
		if (g.torus.size() != r || g.weyl.rows != r || g.weyl.cols != r)
			throw DomainError("InvalidDatum", "generator has the wrong dimension");
		if (!d.rd.in_weyl_group(g.weyl))
			throw DomainError("InvalidDatum", "Weyl part is not in the Weyl group");
		if (!is_pinned(d.rd, g.outer))
			throw DomainError("InvalidDatum", "outer part is not a pinned automorphism");
	}
	NormalizerModel m(d.rd);
	for (const auto& rel : d.relations)
		if (!same(eval_word(m, d, rel.lhs), eval_word(m, d, rel.rhs)))
			throw DomainError("RelationFails", "relation does not hold: " + rel.text);
}

ParameterDatum conjugate_datum(const ParameterDatum& d, const NormalizerElement& x) {
	NormalizerModel m(d.rd);
	ParameterDatum out = d;
	NormalizerElement xi = m.inv(x);
	for (auto& g : out.generators)
		g = m.mul(m.mul(x, g), xi);
	return out;
}

// ---- centralizer ----

namespace {

// Basis of a finite abelian group given by its multiplication table, as
// generators g_i of orders d_i with ⊕ Z/d_i ≅ G. Backtracking; small groups.
struct AbelianBasis {
	std::vector<std::size_t> gens;
	std::vector<long> orders;
};

AbelianBasis abelian_basis(const std::vector<std::vector<std::size_t>>& table) {
	std::size_t n = table.size();
	std::vector<long> order(n, 1);
	for (std::size_t g = 0; g < n; ++g) {
		std::size_t x = g;
		while (x != 0) {
			x = table[x][g];
			++order[g];
		}
	}
	std::vector<std::size_t> cand(n);
	for (std::size_t i = 0; i < n; ++i)
		cand[i] = i;
	std::stable_sort(cand.begin(), cand.end(), [&](auto a, auto b) { return order[a] > order[b]; });

	AbelianBasis best;
	std::function<bool(std::vector<bool>&, std::size_t)> go = [&](std::vector<bool>& in, std::size_t size) {
		if (size == n)
			return true;
		for (std::size_t g : cand) {
			if (g == 0 || in[g] || order[g] < 2)
				continue;
			// ⟨g⟩ ∩ H must be trivial
			bool ok = true;
			std::size_t x = g;
			for (long k = 1; k < order[g]; ++k, x = table[x][g])
				if (in[x]) {
					ok = false;
					break;
				}
			if (!ok)
				continue;
			std::vector<bool> next(n, false);
			std::vector<std::size_t> members;
			for (std::size_t h = 0; h < n; ++h)
				if (in[h])
					members.push_back(h);
			std::size_t p = 0;
			for (long k = 0; k < order[g]; ++k) {
				for (std::size_t h : members)
					next[table[h][p]] = true;
				p = table[p][g];
			}
			best.gens.push_back(g);
			best.orders.push_back(order[g]);
			if (go(next, size * static_cast<std::size_t>(order[g])))
				return true;
			best.gens.pop_back();
			best.orders.pop_back();
		}
		return false;
	};
	std::vector<bool> start(n, false);
	start[0] = true;
	if (!go(start, 1))
		throw std::logic_error("abelian_basis: no decomposition found");
	return best;
}

QVec simple_root_values(const RootDatum& rd, const QVec& y) {
	QVec out;
	for (std::size_t s : rd.simple()) {
		Rat v = 0;
		for (std::size_t i = 0; i < rd.rank(); ++i)
			v += Rat(rd.root(s)[i]) * y[i];
		out.push_back(frac(v));
	}
	return out;
}

std::vector<long> to_longs(const std::vector<Int>& v) {
	std::vector<long> out;
	for (const auto& x : v)
		out.push_back(x.get_si());
	return out;
}

} // namespace

CentralizerReport centralizer(const ParameterDatum& d, std::size_t max_weyl) {
	validate_datum(d);
	const RootDatum& rd = d.rd;
	std::size_t r = rd.rank(), m = d.generators.size();
	NormalizerModel model(rd);
	CentralizerReport rep;

	std::vector<IntMatrix> sigma;
	IntMatrix stacked(r * m, r);
	for (std::size_t i = 0; i < m; ++i) {
		sigma.push_back(model.torus_action(d.generators[i]));
		for (std::size_t a = 0; a < r; ++a)
			for (std::size_t b = 0; b < r; ++b)
				stacked(i * r + a, b) = sigma[i](a, b) - (a == b ? 1 : 0);
	}
	QZKernel fixed(stacked);
	rep.fixed_free_rank = fixed.free_rank();
	rep.fixed_factors = fixed.group().invariant_factors();
	if (fixed.is_finite()) {
		rep.fixed_order = fixed.group().order();
		for (std::size_t i = 0; i < rep.fixed_factors.size(); ++i)
			rep.fixed_generators.push_back(fixed.generator(i));
	}

	WeylGroup W = enumerate_weyl(rd, max_weyl);
	std::vector<NormalizerElement> ginv;
	for (const auto& g : d.generators)
		ginv.push_back(model.inv(g));
	for (const auto& w : W.elements) {
		bool commutes = true;
		for (const auto& s : sigma)
			if (w * s != s * w) {
				commutes = false;
				break;
			}
		if (!commutes)
			continue;
		NormalizerElement x{QVec(r, 0), w, IntMatrix::identity(r)};
		NormalizerElement xinv = model.inv(x);
		QVec c(r * m, 0);
		for (std::size_t i = 0; i < m; ++i) {
			NormalizerElement y = model.mul(model.mul(model.mul(d.generators[i], x), ginv[i]), xinv);
			if (!y.weyl.is_identity() || !y.outer.is_identity())
				throw std::logic_error("centralizer: commutator left the torus");
			for (std::size_t a = 0; a < r; ++a)
				c[i * r + a] = -y.torus[a];
		}
		QZSolution sol = solve_qz(stacked, c);
		if (sol.solvable)
			rep.omega.push_back({w, reduce_mod1(sol.particular), 0});
	}
	std::size_t nom = rep.omega.size();
	if (nom == 0 || !rep.omega[0].weyl.is_identity())
		throw std::logic_error("centralizer: identity missing from the Weyl part");

	for (std::size_t i = 0; i < nom && rep.omega_abelian; ++i)
		for (std::size_t j = i + 1; j < nom; ++j)
			if (rep.omega[i].weyl * rep.omega[j].weyl != rep.omega[j].weyl * rep.omega[i].weyl) {
				rep.omega_abelian = false;
				break;
			}
	if (!rep.omega_abelian) {
		rep.notes.push_back("Weyl part is nonabelian; extension omitted");
		if (fixed.is_finite())
			rep.order = rep.fixed_order * Int(static_cast<unsigned long>(nom));
		return rep;
	}
	if (!fixed.is_finite()) {
		rep.notes.push_back("fixed torus has positive rank; extension omitted");
		return rep;
	}
	rep.order = rep.fixed_order * Int(static_cast<unsigned long>(nom));

	std::map<IntMatrix, std::size_t> where;
	for (std::size_t i = 0; i < nom; ++i)
		where[rep.omega[i].weyl] = i;
	std::vector<std::vector<std::size_t>> table(nom, std::vector<std::size_t>(nom));
	for (std::size_t i = 0; i < nom; ++i)
		for (std::size_t j = 0; j < nom; ++j)
			table[i][j] = where.at(rep.omega[i].weyl * rep.omega[j].weyl);
	AbelianBasis basis = nom > 1 ? abelian_basis(table) : AbelianBasis{};
	rep.omega_generators = basis.gens;
	rep.omega_factors = basis.orders;

	// section s(c) = Π L_k^{c_k}
	std::vector<NormalizerElement> lifts;
	for (std::size_t g : basis.gens)
		lifts.push_back({rep.omega[g].correction, rep.omega[g].weyl, IntMatrix::identity(r)});
	std::size_t nc = nom;
	std::vector<NormalizerElement> section(nc);
	for (std::size_t c = 0; c < nc; ++c) {
		auto dig = ExtensionDescriptor::digits(basis.orders, c);
		NormalizerElement x = model.identity();
		for (std::size_t k = 0; k < lifts.size(); ++k)
			x = model.mul(x, model.pow(lifts[k], dig[k]));
		section[c] = x;
		rep.omega[where.at(x.weyl)].c_index = c;
		for (std::size_t i = 0; i < m; ++i) {
			NormalizerElement y = model.mul(model.mul(d.generators[i], x), ginv[i]);
			if (!same(y, x))
				throw std::logic_error("centralizer: lift does not centralize the parameter");
		}
	}

	const AbelianGroup& A = fixed.group();
	std::vector<long> af = to_longs(A.invariant_factors());
	auto a_coords = [&](const QVec& t) {
		IntVec c = fixed.coords(t);
		std::vector<long> out;
		for (std::size_t i = 0; i < c.size(); ++i)
			out.push_back(mod_floor(c[i], A.invariant_factors()[i]).get_si());
		return out;
	};
	std::vector<IntMatrix> action;
	for (std::size_t k = 0; k < lifts.size(); ++k) {
		IntMatrix M(af.size(), af.size());
		for (std::size_t j = 0; j < af.size(); ++j) {
			auto col = a_coords(lifts[k].weyl.apply(fixed.generator(j)));
			for (std::size_t i = 0; i < af.size(); ++i)
				M(i, j) = col[i];
		}
		action.push_back(M);
	}
	auto c_mul = [&](std::size_t c1, std::size_t c2) {
		auto x = ExtensionDescriptor::digits(basis.orders, c1);
		auto y = ExtensionDescriptor::digits(basis.orders, c2);
		for (std::size_t k = 0; k < x.size(); ++k)
			x[k] = (x[k] + y[k]) % basis.orders[k];
		return ExtensionDescriptor::index(basis.orders, x);
	};
	std::vector<NormalizerElement> section_inv;
	for (const auto& s : section)
		section_inv.push_back(model.inv(s));
	std::vector<std::vector<long>> cocycle(nc * nc);
	for (std::size_t c1 = 0; c1 < nc; ++c1)
		for (std::size_t c2 = 0; c2 < nc; ++c2) {
			NormalizerElement z = model.mul(model.mul(section[c1], section[c2]), section_inv[c_mul(c1, c2)]);
			if (!z.weyl.is_identity() || !z.outer.is_identity())
				throw std::logic_error("centralizer: section product left the torus");
			cocycle[c1 * nc + c2] = a_coords(z.torus);
		}
	ExtensionDescriptor ext(af, basis.orders, action, cocycle);
	rep.mult_one = has_multiplicity_one(ext).mult_one;

	// adjoint image: kill the centre
	std::vector<IntVec> central;
	if (A.order() > 1 << 20)
		throw DomainError("TooLarge", "fixed torus too large for the adjoint image");
	for (const auto& a : A.elements())
		if (is_zero_mod1(simple_root_values(rd, fixed.point(a))))
			central.push_back(a);
	AbelianGroup Aad = quotient(A, central);
	std::vector<long> adf = to_longs(Aad.invariant_factors());
	IntMatrix p(adf.size(), af.size());
	for (std::size_t j = 0; j < af.size(); ++j) {
		IntVec e(af.size(), 0);
		e[j] = 1;
		IntVec img = Aad.reduce(e);
		for (std::size_t i = 0; i < adf.size(); ++i)
			p(i, j) = img[i];
	}
	std::vector<IntMatrix> act_ad;
	for (const auto& M : action)
		act_ad.push_back(Aad.induced(M));
	ExtensionDescriptor ad = pushout(ext, adf, p, act_ad);
	rep.adjoint_mult_one = has_multiplicity_one(ad).mult_one;
	for (std::size_t i = 0; i < adf.size(); ++i)
		rep.adjoint_generators.push_back(simple_root_values(rd, fixed.point(Aad.generator(i))));

	for (std::size_t k = 0; k < lifts.size(); ++k)
		for (std::size_t l = k + 1; l < lifts.size(); ++l) {
			std::vector<long> ek(lifts.size(), 0), el(lifts.size(), 0);
			ek[k] = 1;
			el[l] = 1;
			std::size_t c1 = ExtensionDescriptor::index(basis.orders, ek);
			std::size_t c2 = ExtensionDescriptor::index(basis.orders, el);
			CommutatorReport cr;
			cr.c1 = c1;
			cr.c2 = c2;
			CommutatorValue v = commutator_function(ext, c1, c2);
			auto digs = ext.a_coords(v.raw);
			IntVec cv(digs.size());
			for (std::size_t i = 0; i < digs.size(); ++i)
				cv[i] = digs[i];
			cr.value = fixed.point(cv);
			cr.adjoint = simple_root_values(rd, cr.value);
			cr.trivial_in_coinvariants = v.trivial;
			cr.adjoint_trivial_in_coinvariants = commutator_function(ad, c1, c2).trivial;
			rep.commutators.push_back(cr);
		}
	rep.extension = std::move(ext);
	rep.adjoint_extension = std::move(ad);
	return rep;
}

MultOneVerdict mult_one_check_suite(const ParameterDatum& d) {
	MultOneVerdict v;
	v.report = centralizer(d);
	v.hypothesis = d.hypothesis;
	v.mult_one = v.report.mult_one;
	v.consistent = d.hypothesis == Hypothesis::None || v.mult_one;
	return v;
}

// ---- fixtures ----

namespace {

ParameterRelation frobenius_relation(long q) {
	// f s f⁻¹ = s^q with s = generator 0, f = generator 1
	return {{{1, 1}, {0, 1}, {1, -1}}, {{0, q}}, "f s f^-1 = s^" + std::to_string(q)};
}

} // namespace

ParameterDatum spin9_datum(long q) {
	ParameterDatum d;
	d.name = "spin9";
	d.rd = build_classical('C', 4, LatticeKind::Adjoint);
	d.hypothesis = Hypothesis::Unramified;
	std::size_t r = d.rd.rank();
	// diag(ζ, ζ², −ζ², −ζ) with ζ of order q+1
	Rat z = ratio(1, q + 1);
	QVec amb{z, 2 * z, ratio(1, 2) + 2 * z, ratio(1, 2) + z};
	for (auto& x : amb)
		x.canonicalize();
	QVec s = reduce_mod1(d.rd.from_ambient(amb));
	IntMatrix I = IntMatrix::identity(r);
	d.generators.push_back({s, I, I});
	d.generators.push_back({QVec(r, 0), I.scaled(-1), I}); // Tits lift of w0 = −1
	d.relations.push_back(frobenius_relation(q));
	return d;
}

ParameterDatum regular_pgl2_datum(long q) {
	ParameterDatum d;
	d.name = "regular-pgl2";
	d.rd = build_classical('A', 1, LatticeKind::Adjoint);
	d.hypothesis = Hypothesis::SimplyConnected;
	IntMatrix I = IntMatrix::identity(1);
	d.generators.push_back({QVec{ratio(1, q + 1)}, I, I});
	d.generators.push_back({QVec{Rat(0)}, I.scaled(-1), I});
	d.relations.push_back(frobenius_relation(q));
	return d;
}

ParameterDatum d4_datum() {
	ParameterDatum d;
	d.name = "d4";
	d.rd = build_classical('D', 4, LatticeKind::Adjoint);
	d.hypothesis = Hypothesis::SimplyConnected;
	std::size_t r = d.rd.rank();
	QVec amb{Rat(0), ratio(1, 12), ratio(5, 12), ratio(1, 2)};
	IntMatrix I = IntMatrix::identity(r);
	d.generators.push_back({reduce_mod1(d.rd.from_ambient(amb)), I, I});
	d.generators.push_back({QVec(r, 0), I.scaled(-1), I});
	d.relations.push_back(frobenius_relation(11));
	return d;
}

ParameterDatum biquadratic_datum_derivation() {
	// Start from Y0 = Y(SL4) ⊕ Z² ⊕ Y(SL4) ⊕ Z in simple-coroot coordinates
	// (a1 a2 a3 | u1 u2 | b1 b2 b3 | u3) and adjoin the kernel of
	// SL4×Z1×SL4×Z2 → G, generated by the three order-4 points below.
	const std::size_t R = 9;
	auto q4 = [](long k) { return ratio(k, 4); };
	std::vector<QVec> kernel = {
	    {q4(1), q4(2), q4(3), 0, q4(-1), 0, 0, 0, 0},  // μ4 in SL4 × Z1
	    {0, 0, 0, 0, 0, q4(1), q4(2), q4(3), q4(-1)},  // μ4 in SL4 × Z2
	    {0, 0, 0, 0, q4(1), 0, 0, 0, q4(2)},           // z ↦ ((1,z), z²)
	};
	IntMatrix gen(R, R + kernel.size());
	for (std::size_t i = 0; i < R; ++i)
		gen(i, i) = 4;
	for (std::size_t j = 0; j < kernel.size(); ++j)
		for (std::size_t i = 0; i < R; ++i)
			gen(i, R + j) = Rat(kernel[j][i] * 4).get_num();
	SmithForm snf = smith_normal_form(gen);
	// columns of Uinv·D span the same lattice; B = that basis / 4
	std::vector<std::vector<Rat>> B(R, std::vector<Rat>(R));
	for (std::size_t j = 0; j < R; ++j)
		for (std::size_t i = 0; i < R; ++i)
			B[i][j] = ratio(snf.Uinv(i, j) * snf.diag[j], 4);
	// B⁻¹ via solve_rational on the integer matrix 4B
	IntMatrix B4(R, R);
	for (std::size_t i = 0; i < R; ++i)
		for (std::size_t j = 0; j < R; ++j)
			B4(i, j) = Rat(B[i][j] * 4).get_num();
	auto to_lattice = [&](const QVec& y0) {
		QVec v = *solve_rational(B4, y0);
		return scale(v, Rat(4));
	};
	auto from_lattice_row = [&](const QVec& row) { // functional on Y0 ↦ on Y
		QVec out(R, 0);
		for (std::size_t j = 0; j < R; ++j)
			for (std::size_t i = 0; i < R; ++i)
				out[j] += row[i] * B[i][j];
		return out;
	};
	auto integral = [](const QVec& v) {
		IntVec out;
		for (const auto& x : v) {
			if (x.get_den() != 1)
				throw std::logic_error("biquadratic derivation: non-integral vector");
			out.push_back(x.get_num());
		}
		return out;
	};
	// x-coordinates of an SL4 torus point in terms of (a1,a2,a3)
	const long xrow[4][3] = {{1, 0, 0}, {-1, 1, 0}, {0, -1, 1}, {0, 0, -1}};
	std::vector<IntVec> roots, coroots;
	std::vector<std::size_t> simple;
	for (std::size_t off : {std::size_t(0), std::size_t(5)}) {
		for (int i = 0; i < 4; ++i)
			for (int j = 0; j < 4; ++j) {
				if (i == j)
					continue;
				QVec fun(R, 0), co(R, 0);
				for (int k = 0; k < 3; ++k)
					fun[off + k] = xrow[i][k] - xrow[j][k];
				for (int k = std::min(i, j); k < std::max(i, j); ++k)
					co[off + k] = i < j ? 1 : -1;
				if (j == i + 1)
					simple.push_back(roots.size());
				roots.push_back(integral(from_lattice_row(fun)));
				coroots.push_back(integral(to_lattice(co)));
			}
	}
	ParameterDatum d;
	d.name = "biquadratic";
	d.hypothesis = Hypothesis::None;
	d.rd = RootDatum("biquadratic", R, roots, coroots, simple);

	auto conj = [&](const std::vector<std::vector<long>>& m0) {
		// matrix on Y0 ↦ matrix on Y
		IntMatrix out(R, R);
		for (std::size_t j = 0; j < R; ++j) {
			QVec col(R, 0);
			for (std::size_t i = 0; i < R; ++i)
				for (std::size_t k = 0; k < R; ++k)
					col[i] += Rat(m0[i][k]) * B[k][j];
			IntVec c = integral(to_lattice(col));
			for (std::size_t i = 0; i < R; ++i)
				out(i, j) = c[i];
		}
		return out;
	};
	auto zero9 = [] { return std::vector<std::vector<long>>(9, std::vector<long>(9, 0)); };
	auto flip = [](std::vector<std::vector<long>>& m, std::size_t off, long sign) {
		for (int k = 0; k < 3; ++k)
			m[off + k][off + 2 - k] = sign;
	};
	// (1,0): pinned flip on both SL4, inversion on Z1 and Z2
	auto o10 = zero9();
	flip(o10, 0, 1);
	flip(o10, 5, 1);
	o10[3][3] = o10[4][4] = o10[8][8] = -1;
	// (0,1): pinned flip on the first SL4, (u1,u2) ↦ (u1 + 4u2, −u2)
	auto o01 = zero9();
	flip(o01, 0, 1);
	for (int k = 0; k < 3; ++k)
		o01[5 + k][5 + k] = 1;
	o01[3][3] = 1;
	o01[3][4] = 4;
	o01[4][4] = -1;
	o01[8][8] = 1;
	// longest element of both SL4 factors
	auto w0 = zero9();
	flip(w0, 0, -1);
	flip(w0, 5, -1);
	w0[3][3] = w0[4][4] = w0[8][8] = 1;

	// diag(ζ4, ζ6, ζ6⁻¹, ζ4⁻¹) has a = (1/4, 5/12, 1/4)
	QVec tdiag{q4(1), ratio(5, 12), q4(1)};
	QVec ts(R, 0), tf(R, 0);
	for (int k = 0; k < 3; ++k) {
		ts[k] = ts[5 + k] = tdiag[k];
		tf[k] = tdiag[k];
	}
	IntMatrix I = IntMatrix::identity(R);
	d.generators.push_back({reduce_mod1(to_lattice(ts)), I, conj(o10)});
	d.generators.push_back({reduce_mod1(to_lattice(tf)), conj(w0), conj(o01)});
	d.relations.push_back(frobenius_relation(11));
	return d;
}

// ---- D_2n ----

namespace {

struct SignedPerm {
	std::vector<int> img; // e_{i+1} ↦ sign·e_{|img|}, 1-based signed
	IntMatrix matrix() const { return signed_permutation(img); }
};

bool positive(const IntVec& v) {
	for (const auto& x : v)
		if (x != 0)
			return x > 0;
	return false;
}

struct PosRoot {
	std::size_t i, j; // 0-based, i < j
	int sign;         // e_i + sign·e_j
	IntVec vec(std::size_t N) const {
		IntVec v(N, 0);
		v[i] = 1;
		v[j] = sign;
		return v;
	}
	std::string label() const {
		return "e" + std::to_string(i + 1) + (sign > 0 ? "+" : "-") + "e" + std::to_string(j + 1);
	}
	bool operator<(const PosRoot& o) const {
		return std::tie(i, j, sign) < std::tie(o.i, o.j, o.sign);
	}
	bool operator==(const PosRoot& o) const = default;
};

std::vector<PosRoot> positive_roots(std::size_t N) {
	std::vector<PosRoot> out;
	for (std::size_t i = 0; i < N; ++i)
		for (std::size_t j = i + 1; j < N; ++j) {
			out.push_back({i, j, -1});
			out.push_back({i, j, 1});
		}
	return out;
}

// {α>0, (uv)⁻¹α>0} ∩ ({u⁻¹α<0, v⁻¹α>0} ∪ {u⁻¹α>0, v⁻¹α<0})
std::vector<PosRoot> lambda_set(const IntMatrix& u, const IntMatrix& v) {
	std::size_t N = u.rows;
	IntMatrix ui = u.transpose(), vi = v.transpose(), uvi = (u * v).transpose();
	std::vector<PosRoot> out;
	for (const auto& a : positive_roots(N)) {
		IntVec x = a.vec(N);
		if (!positive(uvi.apply(x)))
			continue;
		if (positive(ui.apply(x)) != positive(vi.apply(x)))
			out.push_back(a);
	}
	return out;
}

IntVec root_sum(const std::vector<PosRoot>& s, std::size_t N) {
	IntVec out(N, 0);
	for (const auto& a : s) {
		out[a.i] += 1;
		out[a.j] += a.sign;
	}
	return out;
}

std::vector<std::string> labels(const std::vector<PosRoot>& s) {
	std::vector<std::string> out;
	for (const auto& a : s)
		out.push_back(a.label());
	return out;
}

// lattice of vectors with even coordinate sum
bool in_root_lattice(const QVec& v) {
	if (!is_integral(v))
		return false;
	Int s = 0;
	for (const auto& x : v)
		s += x.get_num();
	return mod_floor(s, 2) == 0;
}

// simple roots of D_N as a basis of the even lattice
IntMatrix even_basis(std::size_t N) {
	IntMatrix b(N, N);
	for (std::size_t k = 0; k + 1 < N; ++k) {
		b(k, k) = 1;
		b(k + 1, k) = -1;
	}
	b(N - 2, N - 1) = 1;
	b(N - 1, N - 1) = 1;
	return b;
}

} // namespace

std::vector<std::vector<long>> d2n_cycle_types(long n) {
	std::vector<std::vector<long>> out;
	std::vector<long> cur{1};
	std::function<void(long)> go = [&](long rest) {
		if (rest == 0) {
			out.push_back(cur);
			return;
		}
		for (long l = 1; l <= rest; ++l) {
			cur.push_back(l);
			go(rest - l);
			cur.pop_back();
		}
	};
	if (n >= 1)
		go(n - 1);
	return out;
}

bool D2nReport::ok() const {
	return lambda_w1_w0.empty() && lambda_w2_w0_matches_union && denominators_ok && prime_to_p && w1_lift_fixed &&
	       w2_lift_fixed && b_even && correction_closed_form && lambda_w1_w2_closed_form &&
	       half_lambda_w1_w2_in_root_lattice && tits_agrees && commutator_fixed && commutator_trivial;
}

D2nReport d2n_verify(long n, long q, const std::vector<long>& lengths, bool tits_check) {
	if (n < 2)
		throw DomainError("InvalidCycleType", "n must be at least 2");
	if (lengths.empty() || lengths[0] != 1)
		throw DomainError("InvalidCycleType", "cycle lengths must start with 1");
	long total = 0;
	for (long l : lengths) {
		if (l < 1)
			throw DomainError("InvalidCycleType", "cycle lengths must be positive");
		total += l;
	}
	if (total != n)
		throw DomainError("InvalidCycleType", "cycle lengths must sum to n");
	if (q < 1 || (q > 1 && (q % 2 == 0 || prime_factors(Int(q)).size() != 1)))
		throw DomainError("InvalidModulus", "q must be 1 or an odd prime power");

	D2nReport rep;
	rep.n = n;
	rep.q = q;
	rep.cycle_lengths = lengths;
	const std::size_t N = 2 * static_cast<std::size_t>(n);
	auto mirror = [&](long i) { return static_cast<long>(N) + 1 - i; }; // 1-based

	// boundaries i_1 = 1 < i_2 = 2 < ... < i_{k+1} = n+1
	rep.boundaries.push_back(1);
	for (long l : lengths)
		rep.boundaries.push_back(rep.boundaries.back() + l);
	std::size_t k = lengths.size();
	std::set<long> Bset;
	for (std::size_t a = 0; a < k; ++a) {
		Bset.insert(rep.boundaries[a]);
		Bset.insert(mirror(rep.boundaries[a]));
	}
	rep.b_set.assign(Bset.begin(), Bset.end());

	// w0' on the first half, mirrored to the second
	std::vector<int> half(static_cast<std::size_t>(n));
	for (std::size_t a = 0; a < k; ++a) {
		long lo = rep.boundaries[a], hi = rep.boundaries[a + 1];
		for (long j = lo; j < hi - 1; ++j)
			half[j - 1] = static_cast<int>(j + 1);
		half[hi - 2] = -static_cast<int>(lo);
	}
	SignedPerm w0, w1, w2;
	w0.img.assign(N, 0);
	w1.img.assign(N, 0);
	w2.img.assign(N, 0);
	for (long j = 1; j <= n; ++j) {
		int t = half[j - 1];
		w0.img[j - 1] = t;
		int s = t > 0 ? 1 : -1;
		w0.img[mirror(j) - 1] = s * static_cast<int>(mirror(std::abs(t)));
	}
	for (std::size_t i = 0; i < N; ++i) {
		w1.img[i] = static_cast<int>(i + 1);
		w2.img[i] = -static_cast<int>(N - i);
	}
	w1.img[0] = -1;
	w1.img[N - 1] = -static_cast<int>(N);
	rep.w0 = w0.matrix();
	rep.w1 = w1.matrix();
	rep.w2 = w2.matrix();
	if (rep.w0 * rep.w1 != rep.w1 * rep.w0 || rep.w0 * rep.w2 != rep.w2 * rep.w0 || !is_elliptic(rep.w0))
		throw std::logic_error("d2n: w0 construction failed");

	auto L10 = lambda_set(rep.w1, rep.w0);
	auto L20 = lambda_set(rep.w2, rep.w0);
	auto L12 = lambda_set(rep.w1, rep.w2);
	rep.lambda_w1_w0 = labels(L10);
	rep.lambda_w2_w0 = labels(L20);
	rep.lambda_w1_w2 = labels(L12);

	// five-line union, 1-based indices
	std::set<PosRoot> uni;
	auto put = [&](long i, long j, int sign) {
		if (i < j)
			uni.insert({static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1), sign});
	};
	for (std::size_t a = 0; a < k; ++a) {
		long ia = rep.boundaries[a], inext = rep.boundaries[a + 1];
		long ipa = mirror(ia), ipnext = mirror(inext);
		for (long j = 1; j <= static_cast<long>(N); ++j) {
			if (j < inext) {
				put(ia, j, 1);
				put(ia, j, -1);
			}
			if (j >= inext && !Bset.count(j))
				put(ia, j, -1);
			if (!Bset.count(j))
				put(ipa, j, -1);
		}
		for (long i = 1; i <= static_cast<long>(N); ++i) {
			if (!Bset.count(i))
				put(i, ia, 1);
			if (i <= ipnext && !Bset.count(i))
				put(i, ipa, 1);
		}
	}
	rep.lambda_w2_w0_matches_union = std::set<PosRoot>(L20.begin(), L20.end()) == uni;

	IntVec lam20 = root_sum(L20, N), lam12 = root_sum(L12, N);
	rep.lambda_w2_w0_sum = lam20;
	rep.lambda_w1_w2_sum = lam12;

	IntMatrix F = rep.w0.scaled(q) - IntMatrix::identity(N);
	QVec half_lam20 = scale(to_qvec(lam20), ratio(1, 2));
	rep.mu = *solve_rational(F, half_lam20);

	// cycle length of each coordinate
	std::vector<long> cyc(N, 0);
	for (std::size_t a = 0; a < k; ++a)
		for (long j = rep.boundaries[a]; j < rep.boundaries[a + 1]; ++j) {
			cyc[j - 1] = lengths[a];
			cyc[mirror(j) - 1] = lengths[a];
		}
	rep.denominators_ok = true;
	rep.prime_to_p = true;
	Int p = q > 1 ? prime_factors(Int(q))[0] : Int(1);
	for (std::size_t i = 0; i < N; ++i) {
		Int den = rep.mu[i].get_den();
		rep.mu_denominators.push_back(den);
		Int qpow;
		mpz_pow_ui(qpow.get_mpz_t(), Int(q).get_mpz_t(), static_cast<unsigned long>(cyc[i]));
		if ((qpow + 1) % den != 0)
			rep.denominators_ok = false;
		if (p > 1 && den % p == 0)
			rep.prime_to_p = false;
	}

	// f-fixed lifts: solve (F − 1)t ≡ ½λ in Q-coordinates of the even lattice
	IntMatrix Eb = even_basis(N);
	auto to_basis = [&](const QVec& v) { return *solve_rational(Eb, v); };
	IntMatrix Einv_F_E(N, N);
	for (std::size_t j = 0; j < N; ++j) {
		QVec col = to_basis(to_qvec(rep.w0.scaled(q).apply(Eb.column(j))));
		for (std::size_t i = 0; i < N; ++i)
			Einv_F_E(i, j) = col[i].get_num();
	}
	QZSolution s1 = solve_affine(Einv_F_E, to_basis(scale(to_qvec(root_sum(L10, N)), ratio(1, 2))));
	QZSolution s2 = solve_affine(Einv_F_E, to_basis(half_lam20));
	rep.w1_lift_fixed = L10.empty() && s1.solvable;
	QVec resid = add(F.apply(rep.mu), neg(half_lam20));
	rep.w2_lift_fixed = s2.solvable && in_root_lattice(resid);

	long bsize = static_cast<long>(Bset.size());
	rep.b = static_cast<long>(N) - bsize;
	rep.b_even = rep.b % 2 == 0;

	IntMatrix W1m = rep.w1 - IntMatrix::identity(N);
	rep.correction = W1m.apply(rep.mu);
	QVec closed(N, 0);
	closed[0] = closed[N - 1] = ratio(rep.b, q + 1);
	rep.correction_closed_form = rep.correction == closed && lam20[0] == rep.b && lam20[N - 1] == rep.b;

	IntVec expect12(N, 0);
	expect12[0] = expect12[N - 1] = static_cast<long>(N) - 2;
	// {e_1 − e_j | 1<j<2n} ∪ {e_i + e_2n | 1<i<2n}
	std::set<PosRoot> expect_set;
	for (std::size_t j = 1; j + 1 < N; ++j) {
		expect_set.insert({0, j, -1});
		expect_set.insert({j, N - 1, 1});
	}
	rep.lambda_w1_w2_closed_form =
	    lam12 == expect12 && std::set<PosRoot>(L12.begin(), L12.end()) == expect_set;
	QVec half12 = scale(to_qvec(lam12), ratio(1, 2));
	rep.half_lambda_w1_w2_in_root_lattice = in_root_lattice(half12);

	rep.commutator = add(rep.correction, half12);
	QVec cb = to_basis(rep.commutator);
	rep.commutator_fixed = in_root_lattice(F.apply(rep.commutator));

	// coinvariants of ⟨w1, w2⟩ on the f-fixed points of Q^{2n}/Q
	QZKernel fixed(Einv_F_E - IntMatrix::identity(N));
	const AbelianGroup& A = fixed.group();
	std::vector<IntMatrix> acts;
	for (const IntMatrix* w : {&rep.w1, &rep.w2}) {
		IntMatrix M(A.ngens(), A.ngens());
		for (std::size_t j = 0; j < A.ngens(); ++j) {
			QVec img = to_basis(w->apply(Eb.apply(fixed.generator(j))));
			IntVec c = fixed.coords(reduce_mod1(img));
			for (std::size_t i = 0; i < A.ngens(); ++i)
				M(i, j) = c[i];
		}
		acts.push_back(M);
	}
	AbelianGroup co = coinvariants(A, acts);
	rep.coinvariant_factors = co.invariant_factors();
	rep.commutator_trivial = rep.commutator_fixed && co.is_zero(co.reduce(fixed.coords(reduce_mod1(cb))));

	if (tits_check) {
		RootDatum rd = build_classical('D', N, LatticeKind::SimplyConnected);
		auto agrees = [&](const IntMatrix& u, const IntMatrix& v, const std::vector<PosRoot>& L) {
			QVec t = tits_commutator(rd, rd.matrix_from_ambient(u), rd.matrix_from_ambient(v));
			QVec h = rd.from_ambient(scale(to_qvec(root_sum(L, N)), ratio(1, 2)));
			return equal_mod1(t, h);
		};
		rep.tits_agrees = agrees(rep.w1, rep.w0, L10) && agrees(rep.w2, rep.w0, L20) && agrees(rep.w1, rep.w2, L12);
	} else {
		rep.tits_agrees = true;
	}
	return rep;
}

} // namespace cuspidor
