#include "cuspidor/dixon.hpp"

#include <algorithm>
#include <random>

namespace cuspidor {

namespace {

using u64 = std::uint64_t;
using Poly = std::vector<u64>; // low degree first, trimmed

u64 powmod(u64 a, u64 e, u64 p) {
	u64 r = 1;
	a %= p;
	while (e) {
		if (e & 1) r = r * a % p;
		a = a * a % p;
		e >>= 1;
	}
	return r;
}

bool is_prime(u64 n) {
	if (n < 2) return false;
	for (u64 d = 2; d * d <= n; ++d)
		if (n % d == 0) return false;
	return true;
}

void trim(Poly& a) {
	while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& f, u64 p) {
	trim(a);
	u64 lead_inv = powmod(f.back(), p - 2, p);
	std::size_t df = f.size() - 1;
	while (a.size() > df) {
		u64 c = a.back() * lead_inv % p;
		std::size_t shift = a.size() - 1 - df;
		for (std::size_t i = 0; i <= df; ++i) a[shift + i] = (a[shift + i] + p - c * f[i] % p) % p;
		trim(a);
	}
	return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, u64 p) {
	if (a.empty() || b.empty()) return {};
	Poly r(a.size() + b.size() - 1, 0);
	for (std::size_t i = 0; i < a.size(); ++i) {
		if (!a[i]) continue;
		for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
	}
	return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, u64 e, const Poly& f, u64 p) {
	Poly r{1};
	base = poly_mod(base, f, p);
	while (e) {
		if (e & 1) r = poly_mulmod(r, base, f, p);
		base = poly_mulmod(base, base, f, p);
		e >>= 1;
	}
	return r;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
	trim(a);
	trim(b);
	while (!b.empty()) {
		a = poly_mod(a, b, p);
		std::swap(a, b);
	}
	if (!a.empty()) {
		u64 inv = powmod(a.back(), p - 2, p);
		for (auto& c : a) c = c * inv % p;
	}
	return a;
}

Poly poly_div(Poly a, const Poly& f, u64 p) { // exact division
	trim(a);
	std::size_t df = f.size() - 1;
	if (a.size() <= df) return {};
	Poly q(a.size() - df, 0);
	u64 lead_inv = powmod(f.back(), p - 2, p);
	while (a.size() > df) {
		u64 c = a.back() * lead_inv % p;
		std::size_t shift = a.size() - 1 - df;
		q[shift] = c;
		for (std::size_t i = 0; i <= df; ++i) a[shift + i] = (a[shift + i] + p - c * f[i] % p) % p;
		a.pop_back();
		trim(a);
	}
	return q;
}

// f monic, squarefree and split over F_p.
void split_roots(const Poly& f, u64 p, std::mt19937_64& rng, std::vector<u64>& out) {
	std::size_t d = f.size() - 1;
	if (d == 0) return;
	if (d == 1) {
		out.push_back((p - f[0]) % p);
		return;
	}
	for (;;) {
		u64 a = rng() % p;
		Poly h = poly_powmod({a, 1}, (p - 1) / 2, f, p);
		if (h.empty()) h = {p - 1};
		else h[0] = (h[0] + p - 1) % p;
		Poly g = poly_gcd(f, h, p);
		if (g.size() > 1 && g.size() < f.size()) {
			split_roots(g, p, rng, out);
			split_roots(poly_div(f, g, p), p, rng, out);
			return;
		}
	}
}

// Inverse of a k×k matrix mod p (row-major); false if singular.
bool invert(std::vector<u64> m, std::size_t k, u64 p, std::vector<u64>& inv) {
	inv.assign(k * k, 0);
	for (std::size_t i = 0; i < k; ++i) inv[i * k + i] = 1;
	for (std::size_t col = 0; col < k; ++col) {
		std::size_t piv = col;
		while (piv < k && m[piv * k + col] == 0) ++piv;
		if (piv == k) return false;
		if (piv != col)
			for (std::size_t j = 0; j < k; ++j) {
				std::swap(m[piv * k + j], m[col * k + j]);
				std::swap(inv[piv * k + j], inv[col * k + j]);
			}
		u64 s = powmod(m[col * k + col], p - 2, p);
		for (std::size_t j = 0; j < k; ++j) {
			m[col * k + j] = m[col * k + j] * s % p;
			inv[col * k + j] = inv[col * k + j] * s % p;
		}
		for (std::size_t r = 0; r < k; ++r) {
			if (r == col) continue;
			u64 c = m[r * k + col];
			if (!c) continue;
			c = p - c;
			for (std::size_t j = col; j < k; ++j) m[r * k + j] = (m[r * k + j] + c * m[col * k + j]) % p;
			for (std::size_t j = 0; j < k; ++j) inv[r * k + j] = (inv[r * k + j] + c * inv[col * k + j]) % p;
		}
	}
	return true;
}

} // namespace

std::uint64_t CharacterTable::inverse(std::uint64_t a) const { return powmod(a, prime - 2, prime); }

std::uint64_t CharacterTable::root_power(const Rat& r) const {
	Rat s = frac(r) * Rat((unsigned long)exponent);
	if (!is_integral(s)) throw DomainError("InvalidValue", "root of unity outside the table's conductor");
	return powmod(root, s.get_num().get_ui(), prime);
}

long CharacterTable::lift_count(std::uint64_t residue, long bound) const {
	if (residue > (u64)bound) throw DomainError("InternalError", "residue does not lift to a bounded count");
	return (long)residue;
}

// (1/o) Σ_t χ(g^t) ζ_o^{-st} is an integer in [0, χ(1)], so its residue lifts.
std::vector<long> CharacterTable::eigen_multiplicities(std::size_t chi, std::size_t cls) const {
	const auto& pw = power_class[cls];
	std::size_t o = pw.size();
	u64 p = prime, zinv = powmod(powmod(root, exponent / o, p), p - 2, p), oinv = powmod(o, p - 2, p);
	std::vector<long> m(o);
	long total = 0;
	for (std::size_t s = 0; s < o; ++s) {
		u64 step = powmod(zinv, s, p), z = 1, acc = 0;
		for (std::size_t t = 0; t < o; ++t) {
			acc = (acc + mod_p[chi][pw[t]] * z) % p;
			z = z * step % p;
		}
		m[s] = lift_count(acc * oinv % p, degrees[chi]);
		total += m[s];
	}
	if (total != degrees[chi]) throw DomainError("InternalError", "eigenvalue multiplicities inconsistent");
	return m;
}

Cyclotomic CharacterTable::value(std::size_t chi, std::size_t cls) const {
	auto m = eigen_multiplicities(chi, cls);
	return Cyclotomic::from_exponents((unsigned long)m.size(), m);
}

CharacterTable character_table(const FiniteGroup& g, std::uint64_t seed, std::size_t max_order) {
	std::size_t n = g.order();
	if (n > max_order) throw DomainError("TooLarge", "group too large for the character table oracle");
	CharacterTable t;
	t.group_order = n;
	t.classes = g.conjugacy_classes();
	std::size_t k = t.classes.size();
	t.class_of.assign(n, 0);
	for (std::size_t j = 0; j < k; ++j)
		for (auto x : t.classes[j]) t.class_of[x] = j;
	t.exponent = g.exponent();
	for (std::size_t j = 0; j < k; ++j) {
		t.class_order.push_back(g.element_order(t.classes[j][0]));
		t.inverse_class.push_back(t.class_of[g.inv(t.classes[j][0])]);
	}

	// p ≡ 1 mod exp, large enough that a random class-sum combination has
	// distinct eigenvalues with high probability
	u64 p = ((u64)1 << 22) / t.exponent * t.exponent + 1;
	while (!is_prime(p)) p += t.exponent;
	t.prime = p;
	u64 gen = 2;
	for (;; ++gen) {
		u64 m = p - 1;
		bool ok = true;
		for (u64 q = 2; q * q <= m && ok; ++q)
			if (m % q == 0) {
				if (powmod(gen, (p - 1) / q, p) == 1) ok = false;
				while (m % q == 0) m /= q;
			}
		if (ok && m > 1 && powmod(gen, (p - 1) / m, p) == 1) ok = false;
		if (ok) break;
	}
	t.root = powmod(gen, (p - 1) / t.exponent, p);

	std::mt19937_64 rng(seed);
	std::vector<u64> omega_rows;
	for (int attempt = 0;; ++attempt) {
		if (attempt > 20) throw DomainError("InternalError", "eigenvalue separation failed");
		std::vector<u64> r(k);
		for (auto& x : r) x = rng() % p;
		// M[i][l] = Σ_j r_j c_{j i l}, c_{jil} = #{x ∈ C_j : x^{-1} g_l ∈ C_i}
		std::vector<u64> mt(k * k, 0); // transpose: mt[l*k + i]
		for (std::size_t l = 0; l < k; ++l) {
			std::size_t gl = t.classes[l][0];
			for (std::size_t x = 0; x < n; ++x) {
				std::size_t i = t.class_of[g.mul(g.inv(x), gl)];
				u64& e = mt[l * k + i];
				e = (e + r[t.class_of[x]]) % p;
			}
		}
		// Krylov basis of Mᵀ: columns u, Mᵀu, …
		std::vector<u64> kr(k * k), u(k);
		for (auto& x : u) x = rng() % p;
		std::vector<u64> cur = u;
		for (std::size_t c = 0; c <= k; ++c) {
			if (c == k) break;
			for (std::size_t i = 0; i < k; ++i) kr[i * k + c] = cur[i];
			std::vector<u64> nxt(k, 0);
			for (std::size_t i = 0; i < k; ++i) {
				// (Mᵀ cur)_i = Σ_l M[l][i] cur_l = Σ_l mt[i*k + l] cur_l
				u64 s = 0; // p < 2^23, so k ≤ 512 products fit without reduction
				for (std::size_t l = 0; l < k; ++l) s += mt[i * k + l] * cur[l];
				nxt[i] = s % p;
			}
			cur = std::move(nxt);
		}
		std::vector<u64> kinv;
		if (!invert(kr, k, p, kinv)) continue;
		// (Mᵀ)^k u = Σ a_i (Mᵀ)^i u
		std::vector<u64> a(k, 0);
		for (std::size_t i = 0; i < k; ++i) {
			u64 s = 0;
			for (std::size_t j = 0; j < k; ++j) s = (s + kinv[i * k + j] * cur[j]) % p;
			a[i] = s;
		}
		Poly f(k + 1);
		for (std::size_t i = 0; i < k; ++i) f[i] = (p - a[i]) % p;
		f[k] = 1;
		// all roots distinct and in F_p iff f | x^p - x
		Poly xp = poly_powmod({0, 1}, p, f, p);
		Poly x1{0, 1};
		if (k == 1) x1 = poly_mod(x1, f, p);
		trim(xp);
		if (xp != x1) continue;
		std::vector<u64> roots;
		split_roots(f, p, rng, roots);
		if (roots.size() != k) continue;
		// eigenvector of M for λ: v = K^{-T} (1, λ, …, λ^{k-1})
		omega_rows.assign(k * k, 0);
		bool ok = true;
		for (std::size_t c = 0; c < k && ok; ++c) {
			std::vector<u64> y(k);
			y[0] = 1;
			for (std::size_t i = 1; i < k; ++i) y[i] = y[i - 1] * roots[c] % p;
			std::vector<u64> v(k, 0);
			for (std::size_t i = 0; i < k; ++i) {
				u64 s = 0;
				for (std::size_t j = 0; j < k; ++j) s += kinv[j * k + i] * y[j];
				v[i] = s % p;
			}
			std::size_t id = t.class_of[0];
			if (v[id] == 0) {
				ok = false;
				break;
			}
			u64 s = powmod(v[id], p - 2, p);
			for (std::size_t i = 0; i < k; ++i) omega_rows[c * k + i] = v[i] * s % p;
		}
		if (ok) break;
	}

	// degrees from Σ_j ω_j ω_{j*} / h_j = |G| / χ(1)²
	t.degrees.resize(k);
	t.mod_p.assign(k, std::vector<u64>(k));
	for (std::size_t c = 0; c < k; ++c) {
		const u64* w = &omega_rows[c * k];
		u64 s = 0;
		for (std::size_t j = 0; j < k; ++j)
			s = (s + w[j] * w[t.inverse_class[j]] % p * powmod(t.classes[j].size(), p - 2, p)) % p;
		u64 d2 = n % p * powmod(s, p - 2, p) % p;
		long d = 0;
		for (long cand = 1; (std::size_t)(cand * cand) <= n; ++cand)
			if ((u64)(cand * cand) == d2) d = cand;
		if (d == 0) throw DomainError("InternalError", "character degree not recovered");
		t.degrees[c] = d;
		for (std::size_t j = 0; j < k; ++j)
			t.mod_p[c][j] = w[j] * (u64)d % p * powmod(t.classes[j].size(), p - 2, p) % p;
	}
	// sort by degree, trivial character first
	std::vector<std::size_t> perm(k);
	for (std::size_t i = 0; i < k; ++i) perm[i] = i;
	auto is_trivial = [&](std::size_t c) {
		for (auto v : t.mod_p[c])
			if (v != 1) return false;
		return true;
	};
	std::stable_sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) {
		if (t.degrees[x] != t.degrees[y]) return t.degrees[x] < t.degrees[y];
		return is_trivial(x) && !is_trivial(y);
	});
	{
		auto deg = t.degrees;
		auto mp = t.mod_p;
		for (std::size_t i = 0; i < k; ++i) {
			t.degrees[i] = deg[perm[i]];
			t.mod_p[i] = mp[perm[i]];
		}
	}

	t.power_class.resize(k);
	for (std::size_t j = 0; j < k; ++j) {
		std::size_t x = 0;
		for (std::size_t s = 0; s < t.class_order[j]; ++s) {
			t.power_class[j].push_back(t.class_of[x]);
			x = g.mul(x, t.classes[j][0]);
		}
	}
	long sum = 0;
	for (long d : t.degrees) sum += d * d;
	if ((std::size_t)sum != n) throw DomainError("InternalError", "degrees do not sum to |G|");
	return t;
}

bool verify_orthogonality(const CharacterTable& t) {
	std::size_t k = t.size();
	std::vector<std::vector<Cyclotomic>> v(k, std::vector<Cyclotomic>(k));
	for (std::size_t c = 0; c < k; ++c)
		for (std::size_t j = 0; j < k; ++j) v[c][j] = t.value(c, j).lifted(t.exponent);
	for (std::size_t a = 0; a < k; ++a)
		for (std::size_t b = a; b < k; ++b) {
			Cyclotomic s;
			for (std::size_t j = 0; j < k; ++j) s += v[a][j] * v[b][j].conj() * Rat((unsigned long)t.classes[j].size());
			if (s != Cyclotomic(Rat(a == b ? (long)t.group_order : 0))) return false;
		}
	for (std::size_t i = 0; i < k; ++i)
		for (std::size_t j = i; j < k; ++j) {
			Cyclotomic s;
			for (std::size_t c = 0; c < k; ++c) s += v[c][i] * v[c][j].conj();
			Rat expect = i == j ? ratio(Int((unsigned long)t.group_order), Int((unsigned long)t.classes[i].size())) : Rat(0);
			if (s != Cyclotomic(expect)) return false;
		}
	return true;
}

} // namespace cuspidor
