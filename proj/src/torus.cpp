#include "cuspidor/torus.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cuspidor {

Cyclotomic root_of_unity(const Rat& r) {
	Rat f = frac(r);
	unsigned long n = f.get_den().get_ui();
	if (n == 1) return Cyclotomic(Rat(1));
	return Cyclotomic::zeta(n, f.get_num().get_si()).reduced();
}

std::pair<unsigned long, unsigned> prime_power(long q) {
	if (q < 3 || q % 2 == 0) throw DomainError("InvalidField", "q must be an odd prime power");
	long p = 3;
	while (q % p) p += 2;
	long t = q;
	unsigned a = 0;
	while (t % p == 0) {
		t /= p;
		++a;
	}
	if (t != 1) throw DomainError("InvalidField", "q must be an odd prime power");
	return {(unsigned long)p, a};
}

namespace {

QVec mod1(QVec v) { return reduce_mod1(std::move(v)); }

QVec sub(const QVec& a, const QVec& b) {
	QVec r(a.size());
	for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
	return r;
}

} // namespace

FrobeniusTorus::FrobeniusTorus(RootDatum rd, IntMatrix w, long q, bool allow_formal_q)
	: rd_(std::make_shared<const RootDatum>(std::move(rd))), w_(std::move(w)), q_(q) {
	if (!(allow_formal_q && q == 1)) prime_power(q);
	if (!w_.is_square() || w_.rows != rd_->rank()) throw DomainError("InvalidWeylElement", "Weyl matrix has wrong size");
	if (!rd_->in_weyl_group(w_)) throw DomainError("NotInWeylGroup", "matrix is not in the Weyl group");
	order_ = matrix_order(w_);
	sk_ = QZKernel(frobenius(1) - IntMatrix::identity(w_.rows));
}

bool FrobeniusTorus::is_elliptic() const { return cuspidor::is_elliptic(w_); }

IntMatrix FrobeniusTorus::frobenius(unsigned d) const { return w_.scaled(Int(q_)).pow(d); }

QZKernel FrobeniusTorus::rational_points(unsigned d) const {
	if (d == 0) throw DomainError("InvalidDegree", "degree must be positive");
	if (d == 1) return sk_;
	return QZKernel(frobenius(d) - IntMatrix::identity(w_.rows));
}

QVec FrobeniusTorus::norm(const QVec& point, unsigned d) const {
	IntMatrix f = frobenius(1);
	QVec acc(point.size(), Rat(0)), cur = point;
	for (unsigned i = 0; i < d; ++i) {
		for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += cur[j];
		cur = mod1(f.apply(cur));
	}
	return mod1(acc);
}

IntMatrix FrobeniusTorus::norm_matrix(unsigned d) const {
	QZKernel big = rational_points(d);
	const auto& g = big.group();
	IntMatrix m(sk_.group().ngens(), g.ngens());
	for (std::size_t j = 0; j < g.ngens(); ++j) {
		IntVec c = sk_.coords(norm(big.generator(j), d));
		for (std::size_t i = 0; i < c.size(); ++i) m(i, j) = c[i];
	}
	return m;
}

const std::vector<IntMatrix>& FrobeniusTorus::weyl_centralizer() const {
	std::call_once(cent_once_, [this] {
		auto wg = enumerate_weyl(*rd_);
		for (const auto& x : wg.elements)
			if (x * w_ == w_ * x) cent_.push_back(x);
	});
	return cent_;
}

bool TorusCharacter::operator==(const TorusCharacter& o) const {
	if (values.size() != o.values.size()) return false;
	for (std::size_t i = 0; i < values.size(); ++i)
		if (frac(values[i]) != frac(o.values[i])) return false;
	return true;
}

TorusCharacter make_character(const FrobeniusTorus& t, QVec values) {
	const auto& g = t.points().group();
	if (!t.points().is_finite()) throw DomainError("InfiniteTorus", "S(k) is infinite");
	if (values.size() != g.ngens())
		throw DomainError("InvalidCharacter", "expected " + std::to_string(g.ngens()) + " generator values");
	for (std::size_t i = 0; i < values.size(); ++i)
		if (!is_integral(values[i] * Rat(g.invariant_factors()[i])))
			throw DomainError("InvalidCharacter", "value order does not divide generator order");
	return TorusCharacter{mod1(std::move(values))};
}

Rat evaluate(const FrobeniusTorus& t, const TorusCharacter& theta, const QVec& point) {
	IntVec c = t.points().coords(point);
	Rat s = 0;
	for (std::size_t i = 0; i < c.size(); ++i) s += Rat(c[i]) * theta.values[i];
	return frac(s);
}

std::vector<TorusCharacter> all_characters(const FrobeniusTorus& t) {
	const auto& g = t.points().group();
	std::vector<TorusCharacter> out;
	for (const auto& e : g.elements()) {
		QVec v(e.size());
		for (std::size_t i = 0; i < e.size(); ++i) v[i] = ratio(e[i], g.invariant_factors()[i]);
		out.push_back(TorusCharacter{v});
	}
	return out;
}

TorusCharacter twist(const FrobeniusTorus& t, const TorusCharacter& theta, const IntMatrix& omega) {
	const auto& g = t.points().group();
	QVec v(g.ngens());
	for (std::size_t i = 0; i < g.ngens(); ++i)
		v[i] = evaluate(t, theta, mod1(omega.apply(t.points().generator(i))));
	return TorusCharacter{v};
}

bool is_trivial(const TorusCharacter& theta) {
	for (const auto& v : theta.values)
		if (frac(v) != 0) return false;
	return true;
}

Int character_order(const TorusCharacter& theta) { return lcm_denominators(mod1(theta.values)); }

NonsingularReport nonsingularity(const FrobeniusTorus& t, const TorusCharacter& theta,
                                 const std::vector<std::size_t>& subsystem) {
	const auto& rd = t.datum();
	std::vector<std::size_t> roots = subsystem;
	if (roots.empty())
		for (std::size_t i = 0; i < rd.num_roots(); ++i)
			if (rd.is_positive(i)) roots.push_back(i);
	unsigned m = (unsigned)t.splitting_degree();
	Int qm = 1;
	for (unsigned i = 0; i < m; ++i) qm *= t.q();
	Int den = qm - 1;
	NonsingularReport r;
	for (auto a : roots) {
		if (a >= rd.num_roots()) throw DomainError("InvalidRoot", "root index out of range");
		QVec pt(rd.rank());
		for (std::size_t j = 0; j < pt.size(); ++j) pt[j] = ratio(rd.coroot(a)[j], den);
		QVec n = t.norm(pt, m);
		if (evaluate(t, theta, n) == 0) {
			r.nonsingular = false;
			r.singular_roots.push_back(a);
		}
	}
	return r;
}

bool is_nonsingular(const FrobeniusTorus& t, const TorusCharacter& theta, const std::vector<std::size_t>& subsystem) {
	return nonsingularity(t, theta, subsystem).nonsingular;
}

std::string GroupShape::str() const {
	if (!abelian) return "nonabelian of order " + std::to_string(order);
	if (invariants.empty()) return "1";
	std::string s;
	for (std::size_t i = 0; i < invariants.size(); ++i) {
		if (i) s += " x ";
		s += "Z/" + invariants[i].get_str();
	}
	return s;
}

GroupShape classify_group(const std::vector<IntMatrix>& elements) {
	GroupShape s;
	s.order = elements.size();
	std::vector<long> orders;
	for (const auto& g : elements) orders.push_back(matrix_order(g));
	for (std::size_t i = 0; i < elements.size() && s.abelian; ++i)
		for (std::size_t j = i + 1; j < elements.size(); ++j)
			if (elements[i] * elements[j] != elements[j] * elements[i]) {
				s.abelian = false;
				break;
			}
	s.cyclic = s.abelian && std::find(orders.begin(), orders.end(), (long)s.order) != orders.end();
	if (!s.abelian) return s;
	// p-parts from counts of elements killed by p^j
	std::map<Int, std::vector<Int>> parts; // prime -> exponents, descending
	for (const auto& p : prime_factors(Int((unsigned long)s.order))) {
		std::vector<long> c; // c[j-1] = #{i : e_i >= j}
		long prev = 0;
		Int pj = p;
		for (;;) {
			std::size_t cnt = 0;
			for (long o : orders)
				if (pj % o == 0) ++cnt;
			long sj = 0;
			for (std::size_t t = cnt; t > 1; t /= p.get_ui()) ++sj;
			if (sj == prev) break;
			c.push_back(sj - prev);
			prev = sj;
			pj *= p;
		}
		// e_i = #{j : c_j >= i}
		std::vector<Int> pw;
		for (long i = 1; !c.empty() && i <= c[0]; ++i) {
			Int v = 1;
			for (long cj : c)
				if (cj >= i) v *= p;
			pw.push_back(v);
		}
		parts[p] = pw;
	}
	std::size_t k = 0;
	for (const auto& [p, pw] : parts) k = std::max(k, pw.size());
	std::vector<Int> inv(k, 1);
	for (const auto& [p, pw] : parts)
		for (std::size_t i = 0; i < pw.size(); ++i) inv[i] *= pw[i];
	std::reverse(inv.begin(), inv.end());
	s.invariants = inv;
	return s;
}

StabilizerReport weyl_stabilizer(const FrobeniusTorus& t, const TorusCharacter& theta) {
	StabilizerReport r;
	for (const auto& x : t.weyl_centralizer())
		if (twist(t, theta, x) == theta) r.elements.push_back(x);
	r.shape = classify_group(r.elements);
	r.nonsingular = is_nonsingular(t, theta);
	r.regular = r.nonsingular && r.elements.size() == 1;
	return r;
}

AdjointPoints adjoint_points(const FrobeniusTorus& t) {
	const auto& rd = t.datum();
	std::size_t r = rd.semisimple_rank(), n = rd.rank();
	AdjointPoints a;
	IntMatrix c = rd.cartan();
	a.to_adjoint = IntMatrix(r, n);
	for (std::size_t i = 0; i < r; ++i)
		for (std::size_t j = 0; j < n; ++j) a.to_adjoint(i, j) = rd.root(rd.simple()[i])[j];
	for (std::size_t i = 0; i < r; ++i) {
		QVec e(r, Rat(0));
		e[i] = 1;
		auto coeff = solve_rational(c, e);
		if (!coeff) throw DomainError("InvalidLattice", "singular Cartan matrix");
		QVec v(n, Rat(0));
		for (std::size_t k = 0; k < r; ++k)
			for (std::size_t j = 0; j < n; ++j) v[j] += (*coeff)[k] * Rat(rd.coroot(rd.simple()[k])[j]);
		a.coweights.push_back(v);
	}
	IntMatrix f = t.frobenius(1);
	a.frob = IntMatrix(r, r);
	for (std::size_t j = 0; j < r; ++j) {
		QVec img = f.apply(a.coweights[j]);
		QVec ad = a.to_adjoint.apply(img);
		for (std::size_t i = 0; i < r; ++i) {
			if (!is_integral(ad[i])) throw DomainError("InternalError", "Frobenius does not preserve coweights");
			a.frob(i, j) = ad[i].get_num();
		}
	}
	a.points = QZKernel(a.frob - IntMatrix::identity(r));
	std::vector<IntVec> images;
	const auto& sk = t.points();
	for (std::size_t i = 0; i < sk.group().ngens(); ++i)
		images.push_back(a.points.coords(mod1(a.to_adjoint.apply(sk.generator(i)))));
	a.cokernel = quotient(a.points.group(), images);
	for (const auto& e : a.cokernel.elements()) a.cokernel_reps.push_back(a.points.point(a.cokernel.lift(e)));
	return a;
}

namespace {

void require_stabilizing(const FrobeniusTorus& t, const TorusCharacter& theta, const IntMatrix& omega) {
	if (omega * t.weyl() != t.weyl() * omega || !t.datum().in_weyl_group(omega) ||
	    !(twist(t, theta, omega) == theta))
		throw DomainError("NotStabilizing", "Weyl element does not stabilize the character");
}

Rat bichar_raw(const FrobeniusTorus& t, const TorusCharacter& theta, const IntMatrix& omega,
               const std::vector<QVec>& coweights, const QVec& s_ad) {
	std::size_t n = t.datum().rank();
	QVec y(n, Rat(0));
	for (std::size_t i = 0; i < s_ad.size(); ++i)
		for (std::size_t j = 0; j < n; ++j) y[j] += s_ad[i] * coweights[i][j];
	QVec z = mod1(sub(omega.apply(y), y));
	if (!t.points().contains(z)) throw DomainError("InternalError", "commutator not rational");
	return evaluate(t, theta, z);
}

} // namespace

Rat bicharacter_value(const FrobeniusTorus& t, const TorusCharacter& theta, const IntMatrix& omega, const QVec& s_ad) {
	require_stabilizing(t, theta, omega);
	AdjointPoints ad = adjoint_points(t);
	if (s_ad.size() != ad.coweights.size() || !ad.points.contains(s_ad))
		throw DomainError("InvalidPoint", "s_ad is not a rational point of the adjoint torus");
	return bichar_raw(t, theta, omega, ad.coweights, s_ad);
}

Cyclotomic bicharacter(const FrobeniusTorus& t, const TorusCharacter& theta, const IntMatrix& omega, const QVec& s_ad) {
	return root_of_unity(bicharacter_value(t, theta, omega, s_ad));
}

bool bicharacter_left_kernel_trivial(const FrobeniusTorus& t, const TorusCharacter& theta,
                                     const StabilizerReport& stab, const AdjointPoints& ad) {
	for (const auto& x : stab.elements) {
		if (x.is_identity()) continue;
		bool seen = false;
		for (const auto& s : ad.cokernel_reps)
			if (bichar_raw(t, theta, x, ad.coweights, s) != 0) {
				seen = true;
				break;
			}
		if (!seen) return false;
	}
	return true;
}

namespace {

// Matrix of F restricted to the span of sub_basis, in sub_basis coordinates.
IntMatrix restrict_to_sublattice(const IntMatrix& f, const IntMatrix& e) {
	IntMatrix m(e.cols, e.cols);
	for (std::size_t j = 0; j < e.cols; ++j) {
		auto col = solve_rational_columns(e, to_qvec(f.apply(e.column(j))));
		if (!col || !is_integral(*col)) throw DomainError("InvalidSubtorus", "sublattice is not stable");
		for (std::size_t i = 0; i < e.cols; ++i) m(i, j) = (*col)[i].get_num();
	}
	return m;
}

void require_saturated(const IntMatrix& e) {
	auto s = smith_normal_form(e);
	if (s.rank != e.cols) throw DomainError("InvalidSubtorus", "sublattice basis is dependent");
	for (std::size_t i = 0; i < s.rank; ++i)
		if (s.diag[i] != 1) throw DomainError("InvalidSubtorus", "sublattice is not saturated");
}

} // namespace

QZKernel subtorus_points(const FrobeniusTorus& t, const IntMatrix& sub_basis) {
	require_saturated(sub_basis);
	IntMatrix m = restrict_to_sublattice(t.frobenius(1), sub_basis);
	return QZKernel(m - IntMatrix::identity(m.rows));
}

DisconnectedPairing disconnected_bicharacter(const FrobeniusTorus& t, const IntMatrix& e,
                                             const TorusCharacter& theta, const QVec& theta0_values) {
	if (e.rows != t.datum().rank()) throw DomainError("InvalidSubtorus", "sublattice basis has wrong size");
	QZKernel s0 = subtorus_points(t, e);
	const auto& g0 = s0.group();
	if (theta0_values.size() != g0.ngens()) throw DomainError("IncompatibleCharacters", "wrong number of values");
	auto theta0 = [&](const IntVec& c) {
		Rat s = 0;
		for (std::size_t i = 0; i < c.size(); ++i) s += Rat(c[i]) * theta0_values[i];
		return frac(s);
	};
	auto embed = [&](const QVec& c) { return mod1(e.apply(c)); };
	// S(k) point → S⁰(k) coordinates, if it lies there
	auto to_sub = [&](const QVec& z) -> std::optional<IntVec> {
		auto sol = solve_qz(e, z);
		if (!sol.solvable) return std::nullopt;
		QVec c = mod1(sol.particular);
		if (!s0.contains(c)) return std::nullopt;
		return s0.coords(c);
	};
	for (std::size_t i = 0; i < g0.ngens(); ++i) {
		if (!is_integral(theta0_values[i] * Rat(g0.invariant_factors()[i])))
			throw DomainError("IncompatibleCharacters", "θ⁰ value has the wrong order");
		if (evaluate(t, theta, embed(s0.generator(i))) != frac(theta0_values[i]))
			throw DomainError("IncompatibleCharacters", "θ does not restrict to θ⁰");
	}

	DisconnectedPairing r;
	for (const auto& x : t.weyl_centralizer()) {
		IntMatrix mx;
		try {
			mx = restrict_to_sublattice(x, e);
		} catch (const DomainError&) {
			continue;
		}
		bool fixes0 = true;
		for (std::size_t i = 0; i < g0.ngens() && fixes0; ++i) {
			QVec c = mod1(mx.apply(s0.generator(i)));
			if (theta0(s0.coords(c)) != frac(theta0_values[i])) fixes0 = false;
		}
		if (!fixes0) continue;
		r.stab0.push_back(x);
		if (twist(t, theta, x) == theta) r.stab.push_back(x);
	}
	// cosets ωΩ_θ
	std::vector<bool> used(r.stab0.size(), false);
	std::vector<std::size_t> coset_of(r.stab0.size());
	for (std::size_t i = 0; i < r.stab0.size(); ++i) {
		if (used[i]) continue;
		std::size_t c = r.coset_reps.size();
		r.coset_reps.push_back(r.stab0[i]);
		for (const auto& h : r.stab) {
			IntMatrix y = r.stab0[i] * h;
			for (std::size_t j = 0; j < r.stab0.size(); ++j)
				if (r.stab0[j] == y) {
					used[j] = true;
					coset_of[j] = c;
				}
		}
	}
	const auto& sk = t.points();
	std::vector<IntVec> images;
	for (std::size_t i = 0; i < g0.ngens(); ++i) images.push_back(sk.coords(embed(s0.generator(i))));
	r.component_group = quotient(sk.group(), images);
	for (const auto& c : r.component_group.elements()) r.component_reps.push_back(sk.point(r.component_group.lift(c)));

	auto pairing = [&](const IntMatrix& x, const QVec& s) -> Rat {
		auto c = to_sub(mod1(sub(x.apply(s), s)));
		if (!c) throw DomainError("InvalidSubtorus", "commutator does not lie in the subtorus");
		return theta0(*c);
	};
	for (const auto& x : r.coset_reps) {
		std::vector<Rat> row;
		for (const auto& s : r.component_reps) row.push_back(pairing(x, s));
		r.table.push_back(row);
	}
	r.left_kernel_trivial = true;
	for (std::size_t i = 1; i < r.table.size(); ++i)
		if (std::all_of(r.table[i].begin(), r.table[i].end(), [](const Rat& v) { return v == 0; }))
			r.left_kernel_trivial = false;
	r.well_defined = true;
	if (sk.group().order() <= 4096) {
		for (std::size_t i = 0; i < r.stab0.size(); ++i)
			for (const auto& e2 : sk.group().elements()) {
				QVec s = sk.point(e2);
				std::size_t cls = r.component_group.index_of(r.component_group.reduce(e2));
				if (pairing(r.stab0[i], s) != r.table[coset_of[i]][cls]) r.well_defined = false;
			}
	}
	return r;
}

PacketCounts packet_counts(const FrobeniusTorus& t, const TorusCharacter& theta) {
	if (!is_nonsingular(t, theta)) throw DomainError("SingularCharacter", "character is singular");
	auto st = weyl_stabilizer(t, theta);
	return PacketCounts{st.elements.size(), st.elements.size()};
}

FieldPtr splitting_field(const FrobeniusTorus& t, unsigned degree) {
	auto [p, a] = prime_power(t.q());
	unsigned d = degree ? degree : (unsigned)t.splitting_degree();
	return FiniteField::get(p, a * d);
}

std::vector<FiniteField::Elem> realize_in_field(const FrobeniusTorus& t, const QVec& point, unsigned degree) {
	auto f = splitting_field(t, degree);
	unsigned long n = f->q() - 1;
	std::vector<FiniteField::Elem> out;
	for (const auto& c : point) {
		Rat x = frac(c);
		Int den = x.get_den();
		if (Int(n) % den != 0) throw DomainError("NotRealizable", "denominator does not divide q^m - 1");
		Int e = x.get_num() * (Int(n) / den);
		out.push_back(f->gen_pow(e.get_si()));
	}
	return out;
}

} // namespace cuspidor
