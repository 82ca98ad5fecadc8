#include "cuspidor/cocycle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace cuspidor {

Cochain2 coboundary(const FiniteGroup& g, const Cochain1& e) {
	std::size_t n = g.order();
	Cochain2 z(n * n);
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t b = 0; b < n; ++b) z[a * n + b] = frac(e[a] + e[b] - e[g.mul(a, b)]);
	return z;
}

bool is_cocycle(const FiniteGroup& g, const Cochain2& z) {
	std::size_t n = g.order();
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t b = 0; b < n; ++b)
			for (std::size_t c = 0; c < n; ++c) {
				Rat d = z[b * n + c] - z[g.mul(a, b) * n + c] + z[a * n + g.mul(b, c)] - z[a * n + b];
				if (!is_integral(d)) return false;
			}
	return true;
}

bool is_normalized(const FiniteGroup& g, const Cochain2& z) {
	std::size_t n = g.order();
	for (std::size_t a = 0; a < n; ++a)
		if (!is_integral(z[a]) || !is_integral(z[a * n])) return false;
	return true;
}

bool is_homomorphism(const FiniteGroup& g, const Cochain1& e) {
	for (std::size_t a = 0; a < g.order(); ++a)
		for (std::size_t b = 0; b < g.order(); ++b)
			if (!is_integral(e[a] + e[b] - e[g.mul(a, b)])) return false;
	return true;
}

bool cochains_equal(const std::vector<Rat>& a, const std::vector<Rat>& b) {
	if (a.size() != b.size()) return false;
	for (std::size_t i = 0; i < a.size(); ++i)
		if (!is_integral(a[i] - b[i])) return false;
	return true;
}

CoboundarySolution solve_coboundary(const FiniteGroup& g, const Cochain2& z) {
	std::size_t n = g.order();
	IntMatrix m(n * n, n);
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t b = 0; b < n; ++b) {
			std::size_t r = a * n + b;
			m(r, a) += 1;
			m(r, b) += 1;
			m(r, g.mul(a, b)) -= 1;
		}
	auto sol = solve_qz(m, z);
	CoboundarySolution out;
	out.solvable = sol.solvable;
	const auto& kg = sol.kernel.group();
	for (std::size_t i = 0; i < kg.ngens(); ++i) {
		out.homs.push_back(sol.kernel.generator(i));
		out.hom_orders.push_back(kg.invariant_factors()[i]);
	}
	if (sol.solvable) {
		out.e = reduce_mod1(sol.particular);
	} else {
		out.certificate = sol.certificate;
		Rat v = 0;
		for (std::size_t i = 0; i < z.size(); ++i) v += Rat(sol.certificate[i]) * z[i];
		out.certificate_value = frac(v);
	}
	return out;
}

std::optional<Cochain1> brute_force_coboundary(const FiniteGroup& g, const Cochain2& z, unsigned long den) {
	std::size_t n = g.order();
	double total = 1;
	for (std::size_t i = 0; i < n; ++i) total *= double(den);
	if (total > 2e7) throw DomainError("TooLarge", "exhaustive cochain search too large");
	std::vector<unsigned long> digit(n, 0);
	Cochain1 e(n, Rat(0));
	for (;;) {
		bool ok = true;
		for (std::size_t a = 0; a < n && ok; ++a)
			for (std::size_t b = 0; b < n && ok; ++b)
				if (!is_integral(e[a] + e[b] - e[g.mul(a, b)] - z[a * n + b])) ok = false;
		if (ok) return e;
		std::size_t i = 0;
		while (i < n && ++digit[i] == den) {
			digit[i] = 0;
			e[i] = 0;
			++i;
		}
		if (i == n) return std::nullopt;
		e[i] = ratio(Int(digit[i]), Int(den));
	}
}

EtaFamily::EtaFamily(FiniteGroup g, std::size_t npoints, std::vector<std::uint32_t> action, std::vector<Rat> eta_values)
	: g_(std::move(g)), np_(npoints), action_(std::move(action)), eta_(std::move(eta_values)) {
	std::size_t n = g_.order(), N = np_;
	if (action_.size() != n * N || eta_.size() != N * N * N) throw DomainError("InvalidFamily", "table sizes do not match");
	for (auto& v : eta_) v = frac(v);
	for (std::size_t x = 0; x < N; ++x)
		if (act(0, x) != x) throw DomainError("InvalidFamily", "identity does not act trivially");
	for (std::size_t a = 0; a < n; ++a) {
		std::vector<int> hit(N, 0);
		for (std::size_t x = 0; x < N; ++x) {
			if (act(a, x) >= N || hit[act(a, x)]++) throw DomainError("InvalidFamily", "action is not a permutation");
			for (std::size_t b = 0; b < n; ++b)
				if (act(g_.mul(a, b), x) != act(a, act(b, x))) throw DomainError("InvalidFamily", "not a group action");
		}
	}
	for (std::size_t x = 0; x < N; ++x)
		for (std::size_t y = 0; y < N; ++y) {
			if (eta(x, x, y) != 0 || eta(x, y, y) != 0)
				throw DomainError("InvalidFamily", "η(U,U,V) and η(U,V,V) must vanish");
			for (std::size_t z = 0; z < N; ++z)
				for (std::size_t a = 1; a < n; ++a)
					if (eta(act(a, x), act(a, y), act(a, z)) != eta(x, y, z))
						throw DomainError("InvalidFamily", "η is not Γ-invariant");
		}
	if (N <= 64)
		for (std::size_t x1 = 0; x1 < N; ++x1)
			for (std::size_t x2 = 0; x2 < N; ++x2)
				for (std::size_t x3 = 0; x3 < N; ++x3)
					for (std::size_t x4 = 0; x4 < N; ++x4) {
						Rat d = eta(x2, x3, x4) - eta(x1, x3, x4) + eta(x1, x2, x4) - eta(x1, x2, x3);
						if (!is_integral(d)) throw DomainError("InvalidFamily", "η is not a cocycle on X");
					}
}

std::vector<std::size_t> EtaFamily::stabilizer(std::size_t x) const {
	std::vector<std::size_t> s;
	for (std::size_t a = 0; a < g_.order(); ++a)
		if (act(a, x) == x) s.push_back(a);
	return s;
}

std::vector<std::size_t> EtaFamily::orbit(std::size_t x) const {
	std::vector<std::size_t> o;
	for (std::size_t a = 0; a < g_.order(); ++a) o.push_back(act(a, x));
	std::sort(o.begin(), o.end());
	o.erase(std::unique(o.begin(), o.end()), o.end());
	return o;
}

std::vector<std::size_t> EtaFamily::orbit_ids() const {
	std::vector<std::size_t> id(np_, np_);
	std::size_t next = 0;
	for (std::size_t x = 0; x < np_; ++x) {
		if (id[x] != np_) continue;
		for (auto y : orbit(x)) id[y] = next;
		++next;
	}
	return id;
}

std::optional<std::size_t> EtaFamily::transporter(std::size_t u, std::size_t v) const {
	for (std::size_t a = 0; a < g_.order(); ++a)
		if (act(a, u) == v) return a;
	return std::nullopt;
}

Cochain2 eta_cocycle(const EtaFamily& f, std::size_t u) {
	const auto& g = f.group();
	if (u >= f.npoints()) throw DomainError("InvalidPoint", "basepoint out of range");
	if (!g.is_normal(f.stabilizer(u))) throw DomainError("NotNormal", "stabilizer of the basepoint is not normal");
	std::size_t n = g.order();
	Cochain2 z(n * n);
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t b = 0; b < n; ++b) z[a * n + b] = f.eta(u, f.act(a, u), f.act(g.mul(a, b), u));
	if (!is_cocycle(g, z)) throw DomainError("InternalError", "η_U is not a cocycle");
	return z;
}

std::vector<Rat> beta_correction(const EtaFamily& f, std::size_t v, std::size_t u) {
	auto x = f.transporter(u, v);
	if (!x) throw DomainError("DifferentOrbits", "points lie in different orbits");
	const auto& g = f.group();
	std::size_t n = g.order();
	std::vector<Rat> beta(n * n);
	auto eu = [&](std::size_t a, std::size_t b, std::size_t c) { return f.eta(f.act(a, u), f.act(b, u), f.act(c, u)); };
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t b = 0; b < n; ++b) {
			std::size_t ax = g.mul(a, *x), bx = g.mul(b, *x);
			beta[a * n + b] = frac(eu(ax, a, b) - eu(ax, bx, b));
		}
	return beta;
}

bool beta_identity_holds(const EtaFamily& f, std::size_t v, std::size_t u) {
	auto beta = beta_correction(f, v, u);
	const auto& g = f.group();
	std::size_t n = g.order();
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t b = 0; b < n; ++b)
			for (std::size_t c = 0; c < n; ++c) {
				Rat d = beta[b * n + c] - beta[a * n + c] + beta[a * n + b];
				Rat ue = f.eta(f.act(a, u), f.act(b, u), f.act(c, u));
				Rat ve = f.eta(f.act(a, v), f.act(b, v), f.act(c, v));
				if (!is_integral(d - (ue - ve))) return false;
			}
	return true;
}

SplittingResult coherent_splitting(const EtaFamily& f) {
	const auto& g = f.group();
	std::size_t n = g.order(), N = f.npoints();
	auto s0 = f.stabilizer(0);
	for (std::size_t x = 1; x < N; ++x)
		if (f.stabilizer(x) != s0) throw DomainError("UnequalStabilizers", "stabilizers differ between points");
	SplittingResult r;
	r.splitting.orbit_id = f.orbit_ids();
	r.splitting.eps.assign(N, Cochain1());
	std::size_t norbits = N ? *std::max_element(r.splitting.orbit_id.begin(), r.splitting.orbit_id.end()) + 1 : 0;
	r.splitting.basepoints.assign(norbits, N);
	for (std::size_t x = 0; x < N; ++x)
		if (r.splitting.basepoints[r.splitting.orbit_id[x]] == N) r.splitting.basepoints[r.splitting.orbit_id[x]] = x;
	r.homs.resize(norbits);
	for (std::size_t o = 0; o < norbits; ++o) {
		std::size_t u = r.splitting.basepoints[o];
		Cochain2 z = eta_cocycle(f, u);
		for (auto& v : z) v = frac(-v);
		auto sol = solve_coboundary(g, z);
		r.homs[o] = sol.homs;
		if (!sol.solvable) {
			r.exists = false;
			r.failing_orbit = o;
			r.certificate = sol.certificate;
			r.certificate_value = sol.certificate_value;
			return r;
		}
		for (std::size_t v = 0; v < N; ++v) {
			if (r.splitting.orbit_id[v] != o) continue;
			auto beta = beta_correction(f, v, u);
			Cochain1 e(n);
			for (std::size_t a = 0; a < n; ++a) e[a] = frac(beta[a] + sol.e[a]);
			r.splitting.eps[v] = e;
		}
	}
	r.exists = true;
	return r;
}

bool verify_splitting(const EtaFamily& f, const Splitting& s) {
	const auto& g = f.group();
	std::size_t n = g.order(), N = f.npoints();
	for (std::size_t x = 0; x < N; ++x) {
		Cochain2 z = eta_cocycle(f, x);
		Cochain2 d = coboundary(g, s.eps[x]);
		for (std::size_t i = 0; i < n * n; ++i)
			if (!is_integral(d[i] + z[i])) return false;
	}
	for (std::size_t u = 0; u < N; ++u)
		for (std::size_t v = 0; v < N; ++v) {
			if (s.orbit_id[u] != s.orbit_id[v]) continue;
			auto beta = beta_correction(f, v, u);
			for (std::size_t a = 0; a < n; ++a)
				if (!is_integral(s.eps[v][a] - beta[a] - s.eps[u][a])) return false;
		}
	return true;
}

Splitting twist_splitting(const EtaFamily& f, const Splitting& s, std::size_t orbit, const Cochain1& hom) {
	if (!is_homomorphism(f.group(), hom)) throw DomainError("NotHomomorphism", "twist must be a homomorphism");
	Splitting t = s;
	for (std::size_t x = 0; x < f.npoints(); ++x)
		if (t.orbit_id[x] == orbit)
			for (std::size_t a = 0; a < hom.size(); ++a) t.eps[x][a] = frac(t.eps[x][a] + hom[a]);
	return t;
}

EtaFamily synthetic_family(const FiniteGroup& g, const Cochain2& z, std::size_t copies,
                           const std::vector<std::size_t>& normal_subgroup, std::mt19937_64& rng, unsigned long den) {
	std::size_t n = g.order();
	std::vector<std::size_t> nsub = normal_subgroup.empty() ? std::vector<std::size_t>{0} : normal_subgroup;
	if (!g.is_normal(nsub)) throw DomainError("NotNormal", "subgroup is not normal");
	// cosets gN
	std::vector<std::size_t> coset(n, n), reps;
	for (std::size_t a = 0; a < n; ++a) {
		if (coset[a] != n) continue;
		for (auto h : nsub) coset[g.mul(a, h)] = reps.size();
		reps.push_back(a);
	}
	std::size_t k = reps.size(), N = k * copies;
	std::vector<std::uint32_t> action(n * N);
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t x = 0; x < N; ++x)
			action[a * N + x] = (std::uint32_t)(coset[g.mul(a, reps[x % k])] + k * (x / k));
	// Γ-invariant φ on X×X
	std::vector<Rat> phi(N * N, Rat(0));
	std::vector<int> done(N * N, 0);
	std::uniform_int_distribution<unsigned long> pick(0, den - 1);
	for (std::size_t x = 0; x < N; ++x)
		for (std::size_t y = 0; y < N; ++y) {
			if (done[x * N + y]) continue;
			Rat v = (x == y) ? Rat(0) : ratio(Int(pick(rng)), Int(den));
			for (std::size_t a = 0; a < n; ++a) {
				std::size_t gx = action[a * N + x], gy = action[a * N + y];
				done[gx * N + gy] = 1;
				phi[gx * N + gy] = v;
			}
		}
	std::vector<Rat> eta(N * N * N);
	for (std::size_t x = 0; x < N; ++x)
		for (std::size_t y = 0; y < N; ++y)
			for (std::size_t w = 0; w < N; ++w) {
				std::size_t a = reps[x % k], b = reps[y % k], c = reps[w % k];
				Rat h = z[g.mul(g.inv(a), b) * n + g.mul(g.inv(b), c)];
				eta[(x * N + y) * N + w] = frac(h + phi[y * N + w] - phi[x * N + w] + phi[x * N + y]);
			}
	return EtaFamily(g, N, std::move(action), std::move(eta));
}

EtaFamily product_family(const EtaFamily& a, const EtaFamily& b) {
	FiniteGroup g = FiniteGroup::direct_product(a.group(), b.group());
	std::size_t na = a.group().order(), Na = a.npoints(), Nb = b.npoints(), N = Na * Nb;
	std::vector<std::uint32_t> action(g.order() * N);
	for (std::size_t e = 0; e < g.order(); ++e)
		for (std::size_t x = 0; x < N; ++x)
			action[e * N + x] = (std::uint32_t)(a.act(e % na, x % Na) + Na * b.act(e / na, x / Na));
	std::vector<Rat> eta(N * N * N);
	for (std::size_t x = 0; x < N; ++x)
		for (std::size_t y = 0; y < N; ++y)
			for (std::size_t w = 0; w < N; ++w)
				eta[(x * N + y) * N + w] = a.eta(x % Na, y % Na, w % Na) + b.eta(x / Na, y / Na, w / Na);
	return EtaFamily(g, N, std::move(action), std::move(eta));
}

Cochain2 inflate_from_factor(const FiniteGroup& prod, std::size_t order_a, const Cochain2& z, int which) {
	std::size_t n = prod.order();
	std::size_t m = which == 0 ? order_a : n / order_a;
	auto proj = [&](std::size_t e) { return which == 0 ? e % order_a : e / order_a; };
	Cochain2 out(n * n);
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t b = 0; b < n; ++b) out[a * n + b] = z[proj(a) * m + proj(b)];
	return out;
}

Cochain2 klein_cocycle() {
	Cochain2 z(16, Rat(0));
	for (std::size_t a = 0; a < 4; ++a)
		for (std::size_t b = 0; b < 4; ++b) z[a * 4 + b] = ratio(Int((a % 2) * (b / 2)), 2);
	return z;
}

Cochain2 bilinear_cocycle(const std::vector<long>& factors, const std::vector<std::vector<long>>& c) {
	FiniteGroup g = FiniteGroup::abelian(factors);
	std::size_t n = g.order(), k = factors.size();
	auto digits = [&](std::size_t x) {
		std::vector<long> v;
		for (long d : factors) {
			v.push_back((long)(x % d));
			x /= d;
		}
		return v;
	};
	Cochain2 z(n * n);
	for (std::size_t a = 0; a < n; ++a) {
		auto da = digits(a);
		for (std::size_t b = 0; b < n; ++b) {
			auto db = digits(b);
			Rat s = 0;
			for (std::size_t i = 0; i < k; ++i)
				for (std::size_t j = 0; j < k; ++j)
					s += ratio(Int(c[i][j] * da[i] * db[j]), Int(std::gcd(factors[i], factors[j])));
			z[a * n + b] = frac(s);
		}
	}
	return z;
}

namespace {

bool symmetric(std::size_t n, const Cochain2& z) {
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t b = 0; b < n; ++b)
			if (!is_integral(z[a * n + b] - z[b * n + a])) return false;
	return true;
}

std::string factors_name(const std::vector<long>& f) {
	std::string s;
	for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "x" : "") + std::string("Z") + std::to_string(f[i]);
	return s;
}

Cochain2 random_coboundary(const FiniteGroup& g, std::mt19937_64& rng, unsigned long den) {
	std::uniform_int_distribution<unsigned long> pick(0, den - 1);
	Cochain1 e(g.order(), Rat(0));
	for (std::size_t a = 1; a < g.order(); ++a) e[a] = ratio(Int(pick(rng)), Int(den));
	return coboundary(g, e);
}

} // namespace

std::vector<CorpusCase> cocycle_corpus(std::uint64_t seed) {
	std::mt19937_64 rng(seed);
	std::vector<CorpusCase> out;
	const std::vector<std::vector<long>> abelian = {{2}, {3}, {4}, {2, 2}, {6}, {2, 4}, {2, 2, 2}, {3, 3}};
	for (const auto& fac : abelian) {
		FiniteGroup g = FiniteGroup::abelian(fac);
		std::size_t n = g.order();
		std::string nm = factors_name(fac);
		for (std::size_t copies : {1, 2})
			out.push_back({nm + "/zero/" + std::to_string(copies), synthetic_family(g, Cochain2(n * n, Rat(0)), copies, {}, rng), true});
		for (int t = 0; t < 2; ++t)
			out.push_back({nm + "/coboundary/" + std::to_string(t),
			               synthetic_family(g, random_coboundary(g, rng, 2 * g.exponent()), 1 + t, {}, rng), true});
		std::uniform_int_distribution<long> coef(0, 3);
		for (int t = 0; t < 3; ++t) {
			std::vector<std::vector<long>> c(fac.size(), std::vector<long>(fac.size()));
			for (auto& row : c)
				for (auto& v : row) v = coef(rng);
			Cochain2 z = bilinear_cocycle(fac, c);
			Cochain2 zz = coboundary(g, Cochain1(n, Rat(0)));
			Cochain2 shift = random_coboundary(g, rng, 2 * g.exponent());
			for (std::size_t i = 0; i < z.size(); ++i) zz[i] = frac(z[i] + shift[i]);
			out.push_back({nm + "/bilinear/" + std::to_string(t), synthetic_family(g, zz, 1, {}, rng), symmetric(n, z)});
		}
	}
	FiniteGroup v4 = FiniteGroup::abelian({2, 2});
	for (std::size_t copies : {1, 2, 3})
		out.push_back({"Z2xZ2/klein/" + std::to_string(copies), synthetic_family(v4, klein_cocycle(), copies, {}, rng), false});
	// nonabelian groups with trivial classes
	FiniteGroup s3 = FiniteGroup::from_permutations({{1, 0, 2}, {1, 2, 0}});
	FiniteGroup d4 = FiniteGroup::from_permutations({{1, 2, 3, 0}, {3, 2, 1, 0}});
	for (const auto* g : {&s3, &d4})
		for (int t = 0; t < 2; ++t)
			out.push_back({std::string(g == &s3 ? "S3" : "D8") + "/coboundary/" + std::to_string(t),
			               synthetic_family(*g, random_coboundary(*g, rng, 2 * g->exponent()), 1 + t, {}, rng), true});
	// nontrivial stabilizers: (Z/2)^3 acting through the first two factors
	FiniteGroup v8 = FiniteGroup::abelian({2, 2, 2});
	std::vector<std::size_t> third = {0, 4};
	Cochain2 infl(64), zero8(64, Rat(0));
	for (std::size_t a = 0; a < 8; ++a)
		for (std::size_t b = 0; b < 8; ++b) infl[a * 8 + b] = klein_cocycle()[(a % 4) * 4 + b % 4];
	out.push_back({"Z2^3/klein-inflated/stab", synthetic_family(v8, infl, 2, third, rng), false});
	out.push_back({"Z2^3/zero/stab", synthetic_family(v8, zero8, 2, third, rng), true});
	// products: the class is the sum of inflated classes
	auto k1 = synthetic_family(v4, klein_cocycle(), 1, {}, rng);
	auto z2 = synthetic_family(FiniteGroup::cyclic(2), Cochain2(4, Rat(0)), 2, {}, rng);
	auto c3 = synthetic_family(FiniteGroup::cyclic(3), random_coboundary(FiniteGroup::cyclic(3), rng, 6), 1, {}, rng);
	out.push_back({"product/klein*zero", product_family(k1, z2), false});
	out.push_back({"product/zero*coboundary", product_family(z2, c3), true});
	out.push_back({"product/klein*klein", product_family(k1, synthetic_family(v4, klein_cocycle(), 1, {}, rng)), false});
	return out;
}

} // namespace cuspidor
