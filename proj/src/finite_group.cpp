#include "cuspidor/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace cuspidor {

FiniteGroup FiniteGroup::from_table(std::size_t n, std::vector<std::uint32_t> table, std::size_t max_assoc) {
	if (n == 0 || table.size() != n * n) throw DomainError("InvalidGroup", "table must be n x n");
	for (auto v : table)
		if (v >= n) throw DomainError("InvalidGroup", "table entry out of range");
	FiniteGroup g;
	g.n_ = n;
	g.table_ = std::move(table);
	for (std::size_t a = 0; a < n; ++a)
		if (g.mul(0, a) != a || g.mul(a, 0) != a) throw DomainError("InvalidGroup", "element 0 is not the identity");
	g.inv_.assign(n, 0);
	for (std::size_t a = 0; a < n; ++a) {
		std::size_t found = n;
		for (std::size_t b = 0; b < n; ++b)
			if (g.mul(a, b) == 0) {
				found = b;
				break;
			}
		if (found == n || g.mul(found, a) != 0) throw DomainError("InvalidGroup", "missing inverse");
		g.inv_[a] = (std::uint32_t)found;
	}
	if (n <= max_assoc)
		for (std::size_t a = 0; a < n; ++a)
			for (std::size_t b = 0; b < n; ++b) {
				std::uint32_t ab = g.mul(a, b);
				for (std::size_t c = 0; c < n; ++c)
					if (g.mul(ab, c) != g.mul(a, g.mul(b, c))) throw DomainError("InvalidGroup", "not associative");
			}
	return g;
}

FiniteGroup FiniteGroup::abelian(const std::vector<long>& factors) {
	std::size_t n = 1;
	for (long d : factors) {
		if (d <= 0) throw DomainError("InvalidGroup", "factor must be positive");
		n *= (std::size_t)d;
	}
	auto digits = [&](std::size_t x) {
		std::vector<long> v;
		for (long d : factors) {
			v.push_back((long)(x % d));
			x /= d;
		}
		return v;
	};
	std::vector<std::uint32_t> t(n * n);
	for (std::size_t a = 0; a < n; ++a) {
		auto da = digits(a);
		for (std::size_t b = 0; b < n; ++b) {
			auto db = digits(b);
			std::size_t r = 0, place = 1;
			for (std::size_t i = 0; i < factors.size(); ++i) {
				r += (std::size_t)((da[i] + db[i]) % factors[i]) * place;
				place *= factors[i];
			}
			t[a * n + b] = (std::uint32_t)r;
		}
	}
	return from_table(n, std::move(t), 0);
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<std::size_t>>& gens) {
	if (gens.empty()) return abelian({});
	std::size_t m = gens[0].size();
	using Perm = std::vector<std::size_t>;
	Perm id(m);
	std::iota(id.begin(), id.end(), 0);
	std::map<Perm, std::size_t> index{{id, 0}};
	std::vector<Perm> elems{id};
	auto compose = [&](const Perm& a, const Perm& b) { // a∘b
		Perm r(m);
		for (std::size_t i = 0; i < m; ++i) r[i] = a[b[i]];
		return r;
	};
	for (std::size_t k = 0; k < elems.size(); ++k)
		for (const auto& g : gens) {
			if (g.size() != m) throw DomainError("InvalidGroup", "permutations of different degrees");
			Perm p = compose(g, elems[k]);
			if (!index.count(p)) {
				index[p] = elems.size();
				elems.push_back(p);
			}
		}
	std::size_t n = elems.size();
	std::vector<std::uint32_t> t(n * n);
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t b = 0; b < n; ++b) t[a * n + b] = (std::uint32_t)index.at(compose(elems[a], elems[b]));
	return from_table(n, std::move(t), 0);
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
	std::size_t na = a.order(), nb = b.order(), n = na * nb;
	std::vector<std::uint32_t> t(n * n);
	for (std::size_t x = 0; x < n; ++x)
		for (std::size_t y = 0; y < n; ++y)
			t[x * n + y] = (std::uint32_t)(a.mul(x % na, y % na) + na * b.mul(x / na, y / na));
	return from_table(n, std::move(t), 0);
}

std::uint32_t FiniteGroup::pow(std::size_t a, long e) const {
	if (e < 0) {
		a = inv(a);
		e = -e;
	}
	std::uint32_t r = 0;
	for (long i = 0; i < e; ++i) r = mul(r, a);
	return r;
}

std::size_t FiniteGroup::element_order(std::size_t a) const {
	std::size_t k = 1;
	std::uint32_t x = (std::uint32_t)a;
	while (x != 0) {
		x = mul(x, a);
		++k;
	}
	return k;
}

std::size_t FiniteGroup::exponent() const {
	std::size_t e = 1;
	for (std::size_t a = 0; a < n_; ++a) e = std::lcm(e, element_order(a));
	return e;
}

bool FiniteGroup::is_abelian() const {
	for (std::size_t a = 0; a < n_; ++a)
		for (std::size_t b = a + 1; b < n_; ++b)
			if (mul(a, b) != mul(b, a)) return false;
	return true;
}

std::vector<std::vector<std::size_t>> FiniteGroup::conjugacy_classes() const {
	std::vector<int> seen(n_, 0);
	std::vector<std::vector<std::size_t>> out;
	for (std::size_t x = 0; x < n_; ++x) {
		if (seen[x]) continue;
		std::vector<std::size_t> cls;
		for (std::size_t g = 0; g < n_; ++g) {
			std::size_t y = conj(g, x);
			if (!seen[y]) {
				seen[y] = 1;
				cls.push_back(y);
			}
		}
		std::sort(cls.begin(), cls.end());
		out.push_back(cls);
	}
	return out;
}

std::vector<std::size_t> FiniteGroup::subgroup_generated(const std::vector<std::size_t>& gens) const {
	std::vector<int> in(n_, 0);
	std::vector<std::size_t> s{0};
	in[0] = 1;
	for (std::size_t k = 0; k < s.size(); ++k)
		for (auto g : gens) {
			std::size_t y = mul(s[k], g);
			if (!in[y]) {
				in[y] = 1;
				s.push_back(y);
			}
		}
	std::sort(s.begin(), s.end());
	return s;
}

bool FiniteGroup::is_subgroup(const std::vector<std::size_t>& s) const {
	std::vector<int> in(n_, 0);
	for (auto x : s) {
		if (x >= n_) return false;
		in[x] = 1;
	}
	if (!in[0]) return false;
	for (auto a : s)
		for (auto b : s)
			if (!in[mul(a, inv(b))]) return false;
	return true;
}

bool FiniteGroup::is_normal(const std::vector<std::size_t>& s) const {
	if (!is_subgroup(s)) return false;
	std::vector<int> in(n_, 0);
	for (auto x : s) in[x] = 1;
	for (std::size_t g = 0; g < n_; ++g)
		for (auto x : s)
			if (!in[conj(g, x)]) return false;
	return true;
}

} // namespace cuspidor
