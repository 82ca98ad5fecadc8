#include "cuspidor/character_formula.hpp"

#include "cuspidor/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <complex>
#include <numeric>

namespace cuspidor {

std::string to_string(OrbitType t) {
	switch (t) {
	case OrbitType::Asymmetric: return "asymmetric";
	case OrbitType::SymmetricUnramified: return "symmetric-unramified";
	case OrbitType::SymmetricRamified: return "symmetric-ramified";
	}
	return "?";
}

std::string to_string(ChiKind c) {
	switch (c) {
	case ChiKind::Trivial: return "trivial";
	case ChiKind::Quadratic: return "quadratic";
	case ChiKind::External: return "external";
	}
	return "?";
}

namespace {

std::vector<std::size_t> orbit_of(const std::vector<std::size_t>& perm, std::size_t i) {
	std::vector<std::size_t> out;
	std::size_t j = i;
	do {
		out.push_back(j);
		j = perm[j];
	} while (j != i);
	return out;
}

Rat pair(const IntVec& x, const QVec& v) {
	Rat s = 0;
	for (std::size_t i = 0; i < x.size(); ++i)
		s += x[i] * v[i];
	return s;
}

Int ipow(long q, unsigned d) {
	Int r = 1;
	for (unsigned i = 0; i < d; ++i)
		r *= q;
	return r;
}

// Σ_{x≠0} ζ_n^{e·dlog x} ζ_p^{Tr(c x)}, conductor n·p
Cyclotomic twisted_gauss(const FiniteField& f, unsigned long n, long e, FiniteField::Elem c) {
	unsigned long p = f.p(), N = n * p;
	std::vector<long> counts(N, 0);
	long en = ((e % static_cast<long>(n)) + static_cast<long>(n)) % static_cast<long>(n);
	for (FiniteField::Elem x = 1; x < f.q(); ++x) {
		unsigned long k = static_cast<unsigned long>((en * (f.dlog(x) % static_cast<long>(n))) % static_cast<long>(n));
		unsigned long tr = f.trace_to_prime(f.mul(c, x));
		counts[(k * p + tr * n) % N] += 1;
	}
	return Cyclotomic::from_exponents(N, counts);
}

std::complex<double> twisted_gauss_numeric(const FiniteField& f, unsigned long n, long e, FiniteField::Elem c) {
	const double tau = 6.283185307179586476925286766559;
	long nn = static_cast<long>(n);
	long en = ((e % nn) + nn) % nn;
	std::complex<double> s = 0;
	for (FiniteField::Elem x = 1; x < f.q(); ++x) {
		long k = (en * (f.dlog(x) % nn)) % nn;
		double ang = tau * (static_cast<double>(k) / static_cast<double>(n) +
		                    static_cast<double>(f.trace_to_prime(f.mul(c, x))) / static_cast<double>(f.p()));
		s += std::polar(1.0, ang);
	}
	return s;
}

struct PsiData {
	FieldPtr field;
	Rat value;
};

PsiData composite_character(const FrobeniusTorus& t, const TorusCharacter& theta, std::size_t root, unsigned d) {
	auto [p, a] = prime_power(t.q());
	PsiData out;
	out.field = FiniteField::get(p, a * d);
	Int den = ipow(t.q(), d) - 1;
	const auto& cr = t.datum().coroot(root);
	QVec pt(cr.size());
	for (std::size_t j = 0; j < cr.size(); ++j)
		pt[j] = ratio(cr[j], den);
	out.value = evaluate(t, theta, t.norm(pt, d));
	return out;
}

FiniteField::Elem check_lambda(const FrobeniusTorus& t, FiniteField::Elem c) {
	if (c == 0 || static_cast<long>(c) >= t.q())
		throw DomainError("TrivialCharacter", "additive character parameter must be a nonzero element of k");
	return c;
}

} // namespace

ChiData classify_chi_data(const FrobeniusTorus& t, const std::vector<std::size_t>& declared_ramified, bool strict) {
	const auto& rd = t.datum();
	auto perm = rd.root_permutation(t.weyl());
	std::vector<bool> seen(rd.num_roots(), false);
	ChiData out;
	for (std::size_t i = 0; i < rd.num_roots(); ++i) {
		if (seen[i] || !rd.is_positive(i))
			continue;
		RootOrbit o;
		o.rep = i;
		o.roots = orbit_of(perm, i);
		o.degree = static_cast<unsigned>(o.roots.size());
		IntVec neg = rd.root(i);
		for (auto& x : neg)
			x = -x;
		std::size_t ni = rd.root_index(neg);
		bool symmetric = std::find(o.roots.begin(), o.roots.end(), ni) != o.roots.end();
		if (!symmetric)
			o.opposite = orbit_of(perm, ni);
		for (auto r : o.roots)
			seen[r] = true;
		for (auto r : o.opposite)
			seen[r] = true;
		if (symmetric) {
			bool ramified = std::any_of(o.roots.begin(), o.roots.end(), [&](std::size_t r) {
				return std::find(declared_ramified.begin(), declared_ramified.end(), r) != declared_ramified.end();
			});
			if (ramified) {
				if (strict)
					throw DomainError("OutOfScope", "ramified symmetric root orbit through root " + std::to_string(i));
				o.type = OrbitType::SymmetricRamified;
				o.chi = ChiKind::External;
				o.tag = "(-1)^(f+1) G_k(Lambda0), f=" + std::to_string(o.degree / 2);
			} else {
				o.type = OrbitType::SymmetricUnramified;
				o.chi = ChiKind::Quadratic;
			}
		}
		out.orbits.push_back(std::move(o));
	}
	return out;
}

ChiData with_representative(const ChiData& chi, std::size_t orbit, std::size_t j) {
	ChiData out = chi;
	RootOrbit& o = out.orbits.at(orbit);
	if (j >= o.roots.size()) {
		if (o.opposite.empty() || j >= o.roots.size() + o.opposite.size())
			throw DomainError("InvalidInput", "representative index out of range");
		std::swap(o.roots, o.opposite);
		j -= o.opposite.size();
	}
	std::rotate(o.roots.begin(), o.roots.begin() + static_cast<long>(j), o.roots.end());
	if (!o.opposite.empty()) {
		// keep opposite[k] = −roots[k]
		std::rotate(o.opposite.begin(), o.opposite.begin() + static_cast<long>(j), o.opposite.end());
	}
	o.rep = o.roots[0];
	return out;
}

ModAData mod_a_data(const FrobeniusTorus& t, const TorusCharacter& theta, const ChiData& chi,
                    FiniteField::Elem lambda_c) {
	check_lambda(t, lambda_c);
	auto [p, a] = prime_power(t.q());
	auto k = FiniteField::get(p, a);
	ModAData out;
	out.lambda_c = lambda_c;
	for (const auto& o : chi.orbits) {
		PsiData psi = composite_character(t, theta, o.rep, o.degree);
		if (psi.value == 0)
			throw DomainError("SingularRoot", "theta is trivial on the norm image of coroot " + std::to_string(o.rep));
		const FiniteField& f = *psi.field;
		FiniteField::Elem c = f.embed_from(*k, lambda_c);
		unsigned long n = psi.value.get_den().get_ui();
		long e = psi.value.get_num().get_si();
		unsigned long n2 = std::lcm(n, 2UL);
		long eb = -e * static_cast<long>(n2 / n) + static_cast<long>(n2 / 2);
		ModAEntry entry;
		entry.rep = o.rep;
		entry.field = psi.field;
		entry.psi_value = psi.value;
		// the float only decides a sign well away from zero; near zero go exact
		double re = std::real(twisted_gauss_numeric(f, n, -e, c) * std::conj(twisted_gauss_numeric(f, n2, eb, c)));
		if (std::abs(re) > 1e-6) {
			entry.twist_sign = re > 0 ? 1 : -1;
		} else {
			Cyclotomic z = twisted_gauss(f, n, -e, c) * twisted_gauss(f, n2, eb, c).conj();
			Cyclotomic r2 = z + z.conj();
			entry.twist_sign = r2.is_zero() ? 0 : (r2.numeric().real() > 0 ? 1 : -1);
		}
		entry.determined = entry.twist_sign != 0;
		entry.square = entry.twist_sign >= 0;
		entry.abar = entry.square ? f.one() : f.generator();
		out.entries.push_back(std::move(entry));
	}
	return out;
}

Cyclotomic mod_a_correlation(const FrobeniusTorus& t, const TorusCharacter& theta, const RootOrbit& orbit,
                             bool square_class, FiniteField::Elem lambda_c) {
	check_lambda(t, lambda_c);
	auto [p, a] = prime_power(t.q());
	auto k = FiniteField::get(p, a);
	PsiData psi = composite_character(t, theta, orbit.rep, orbit.degree);
	const FiniteField& f = *psi.field;
	if (f.q() > 5000)
		throw DomainError("TooLarge", "brute-force correlation limited to fields of size <= 5000");
	FiniteField::Elem c = f.embed_from(*k, lambda_c);
	long n = psi.value.get_den().get_si(), e = psi.value.get_num().get_si();
	unsigned long N = static_cast<unsigned long>(n) * p;
	std::vector<long> counts(N, 0);
	for (FiniteField::Elem av = 1; av < f.q(); ++av) {
		if ((f.dlog(av) % 2 == 0) != square_class)
			continue;
		for (FiniteField::Elem X = 0; X < f.q(); ++X) {
			FiniteField::Elem y = f.add(f.one(), X);
			if (y == 0)
				continue;
			long kexp = ((e * (f.dlog(y) % n)) % n + n) % n;
			unsigned long tr = f.trace_to_prime(f.mul(c, f.mul(av, X)));
			unsigned long neg_tr = (p - tr) % p;
			counts[(static_cast<unsigned long>(kexp) * p + neg_tr * static_cast<unsigned long>(n)) % N] += 1;
		}
	}
	return Cyclotomic::from_exponents(N, counts);
}

namespace {

// Δ_II without validating gamma
DeltaReport delta_unchecked(const FrobeniusTorus& t, const QVec& gamma, const ChiData& chi, const ModAData& a) {
	const auto& rd = t.datum();
	if (a.entries.size() != chi.orbits.size())
		throw DomainError("InvalidInput", "mod-a data do not match the chi-data");
	DeltaReport r;
	int total = 1;
	for (std::size_t i = 0; i < chi.orbits.size(); ++i) {
		const RootOrbit& o = chi.orbits[i];
		const ModAEntry& e = a.entries[i];
		if (e.rep != o.rep)
			throw DomainError("InvalidInput", "mod-a data were computed for another representative");
		const FiniteField& f = *e.field;
		DeltaFactor fac;
		fac.rep = o.rep;
		fac.type = o.type;
		Rat v = frac(pair(rd.root(o.rep), gamma));
		Int q1 = Int(f.q() - 1);
		if (q1 % v.get_den() != 0)
			throw DomainError("NotRealizable", "root value does not lie in k_alpha");
		Int ex = v.get_num() * (q1 / v.get_den());
		fac.alpha_gamma = f.gen_pow(ex.get_si());
		if (fac.alpha_gamma == f.one()) {
			fac.degenerate = true;
			++r.degenerate_orbits;
		} else if (o.chi == ChiKind::External) {
			throw DomainError("OutOfScope", "orbit with external chi-data cannot be evaluated");
		} else if (o.chi == ChiKind::Quadratic) {
			FiniteField::Elem x = f.mul(f.sub(fac.alpha_gamma, f.one()), f.inv(e.abar));
			fac.sign = f.dlog(x) % 2 == 0 ? 1 : -1;
		}
		total *= fac.sign;
		r.factors.push_back(fac);
	}
	r.value = Cyclotomic(Rat(total));
	return r;
}

void check_point(const FrobeniusTorus& t, const QVec& gamma) {
	if (gamma.size() != t.datum().rank() || !t.points().contains(gamma))
		throw DomainError("NotRealizable", "gamma is not a rational point of the torus");
	realize_in_field(t, gamma);
}

Cyclotomic zeta_of(const Rat& r) {
	Rat x = frac(r);
	return Cyclotomic::zeta(x.get_den().get_ui(), x.get_num().get_si());
}

} // namespace

DeltaReport delta_II(const FrobeniusTorus& t, const QVec& gamma, const ChiData& chi, const ModAData& a) {
	check_point(t, gamma);
	return delta_unchecked(t, gamma, chi, a);
}

ThetaSumReport theta_sum(const FrobeniusTorus& t, const TorusCharacter& theta, const QVec& gamma, const ChiData& chi,
                         const ModAData& a, const std::vector<IntMatrix>& weyl_set, const FormulaConstants& c) {
	const auto& rd = t.datum();
	const IntMatrix& tw = t.weyl();
	for (const auto& w : weyl_set)
		if (!w.is_square() || w.rows != rd.rank() || !rd.in_weyl_group(w) || w * tw != tw * w)
			throw DomainError("InvalidWeylSet", "Weyl set element does not commute with the twist");
	check_point(t, gamma);
	ThetaSumReport r;
	// every term is a root of unity; sum them as exponents
	std::vector<Rat> exps;
	for (const auto& w : weyl_set) {
		ThetaTerm term;
		term.weyl = w;
		term.point = reduce_mod1(w.apply(gamma));
		DeltaReport d = delta_unchecked(t, term.point, chi, a);
		bool neg = d.value != Cyclotomic(Rat(1));
		term.delta = d.value;
		term.degenerate = d.degenerate_orbits > 0;
		Rat v = evaluate(t, theta, term.point);
		term.theta = zeta_of(v);
		Rat tv = frac(v + (neg ? ratio(1, 2) : Rat(0)));
		term.term = zeta_of(tv);
		exps.push_back(tv);
		r.terms.push_back(std::move(term));
	}
	Int L = 1;
	for (const auto& e : exps)
		L = lcm(L, Int(e.get_den()));
	std::vector<long> counts(L.get_ui(), 0);
	for (const auto& e : exps)
		counts[Int(e * L).get_ui()] += 1;
	r.sum = Cyclotomic::from_exponents(L.get_ui(), counts).reduced();
	r.constant = (c.kottwitz_sign * c.epsilon * c.discriminant).reduced();
	r.total = (r.constant * r.sum).reduced();
	return r;
}

Cyclotomic conjugation_term(const FrobeniusTorus& t, const TorusCharacter& theta, const QVec& gamma,
                            const ChiData& chi, const ModAData& a) {
	return (delta_II(t, gamma, chi, a).value * root_of_unity(evaluate(t, theta, gamma))).reduced();
}

CharacterSweep character_property_sweep(const std::vector<long>& qs) {
	struct Case {
		RootDatum rd;
		IntMatrix w;
		long q;
	};
	std::vector<Case> cases;
	for (auto [type, n] : std::vector<std::pair<char, std::size_t>>{{'A', 1}, {'A', 2}, {'B', 2}, {'C', 2}})
		for (auto kind : {LatticeKind::SimplyConnected, LatticeKind::Adjoint}) {
			RootDatum rd = build_classical(type, n, kind);
			WeylGroup W = enumerate_weyl(rd);
			for (long q : qs)
				for (const auto& w : W.elements)
					cases.push_back({rd, w, q});
		}

	std::atomic<std::size_t> tori{0}, chars{0}, points{0}, sq_fail{0}, re_fail{0}, rep_fail{0}, gal_fail{0}, undet{0};
	parallel_for(cases.size(), [&](std::size_t ci) {
		const Case& cs = cases[ci];
		FrobeniusTorus t(cs.rd, cs.w, cs.q);
		++tori;
		ChiData chi = classify_chi_data(t);
		const auto& wk = t.weyl_centralizer();
		auto pts = t.points().points();
		for (const auto& theta : all_characters(t)) {
			if (!is_nonsingular(t, theta))
				continue;
			++chars;
			ModAData a = mod_a_data(t, theta, chi);
			for (const auto& e : a.entries)
				if (!e.determined)
					++undet;

			// alternative representatives, one per orbit and position
			std::vector<std::pair<ChiData, ModAData>> alts;
			for (std::size_t oi = 0; oi < chi.orbits.size(); ++oi) {
				std::size_t span = chi.orbits[oi].roots.size() + chi.orbits[oi].opposite.size();
				for (std::size_t j = 1; j < span; ++j) {
					ChiData c2 = with_representative(chi, oi, j);
					alts.emplace_back(c2, mod_a_data(t, theta, c2));
				}
			}

			for (const auto& g : pts) {
				++points;
				DeltaReport d = delta_II(t, g, chi, a);
				if (d.value.galois(cs.q) != d.value)
					++gal_fail;
				for (const auto& [c2, a2] : alts)
					if (delta_II(t, g, c2, a2).value != d.value)
						++rep_fail;
				// every representative of each square class
				for (std::size_t oi = 0; oi < chi.orbits.size(); ++oi) {
					if (chi.orbits[oi].chi != ChiKind::Quadratic)
						continue;
					const FiniteField& f = *a.entries[oi].field;
					unsigned long half = (f.q() - 1) / 2;
					unsigned long stride = std::max(1UL, half / 16);
					for (unsigned long s = 0; s < half; s += stride) {
						ModAData a2 = a;
						a2.entries[oi].abar = f.mul(a.entries[oi].abar, f.gen_pow(static_cast<long>(2 * s)));
						if (delta_II(t, g, chi, a2).value != d.value)
							++sq_fail;
					}
				}
				Cyclotomic base = theta_sum(t, theta, g, chi, a, wk).sum;
				for (const auto& w : wk)
					if (theta_sum(t, theta, reduce_mod1(w.apply(g)), chi, a, wk).sum != base)
						++re_fail;
			}
		}
	});
	CharacterSweep s;
	s.tori = tori;
	s.characters = chars;
	s.points = points;
	s.square_class_failures = sq_fail;
	s.reindex_failures = re_fail;
	s.representative_failures = rep_fail;
	s.galois_failures = gal_fail;
	s.undetermined_classes = undet;
	return s;
}

const char* character_identity_note() {
	return "The full supercuspidal character identities (the formula for the character in terms of the "
	       "given data versus the desired form with Δ_II^abs and ε_L) are not reproducible at desk scale: "
	       "they require p-adic harmonic analysis (orbital integrals, Harish-Chandra's local character "
	       "expansion). They are replaced by exact finite checks: Δ_II is independent of the square-class "
	       "representative of ā and of the orbit representative, and the Weyl-summed Θ is invariant under "
	       "reindexing by the Weyl set.";
}

} // namespace cuspidor
