#include "cuspidor/finite_field.hpp"

#include <map>
#include <mutex>

namespace cuspidor {

namespace {

using Poly = std::vector<unsigned long>; // low degree first, coefficients mod p

bool is_prime_ul(unsigned long n) {
	if (n < 2) return false;
	for (unsigned long d = 2; d * d <= n; ++d)
		if (n % d == 0) return false;
	return true;
}

std::vector<unsigned long> prime_divisors(unsigned long n) {
	std::vector<unsigned long> out;
	for (unsigned long d = 2; d * d <= n; ++d) {
		if (n % d) continue;
		out.push_back(d);
		while (n % d == 0) n /= d;
	}
	if (n > 1) out.push_back(n);
	return out;
}

// Arithmetic in F_p[x]/(f), f monic of degree m.
struct QuotientRing {
	unsigned long p;
	Poly f;
	std::size_t m;

	Poly mul(const Poly& a, const Poly& b) const {
		Poly r(2 * m - 1, 0);
		for (std::size_t i = 0; i < m; ++i) {
			if (!a[i]) continue;
			for (std::size_t j = 0; j < m; ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
		}
		for (std::size_t k = r.size(); k-- > m;) {
			unsigned long c = r[k];
			if (!c) continue;
			for (std::size_t j = 0; j < m; ++j) r[k - m + j] = (r[k - m + j] + (p - c) * f[j]) % p;
			r[k] = 0;
		}
		r.resize(m);
		return r;
	}
	Poly pow(Poly a, unsigned long e) const {
		Poly r(m, 0);
		r[0] = 1;
		while (e) {
			if (e & 1) r = mul(r, a);
			a = mul(a, a);
			e >>= 1;
		}
		return r;
	}
	Poly x() const {
		Poly r(m, 0);
		if (m == 1)
			r[0] = (p - f[0]) % p;
		else
			r[1] = 1;
		return r;
	}
	bool is_one(const Poly& a) const {
		if (a[0] != 1) return false;
		for (std::size_t i = 1; i < m; ++i)
			if (a[i]) return false;
		return true;
	}
	bool is_zero(const Poly& a) const {
		for (auto c : a)
			if (c) return false;
		return true;
	}
};

unsigned long ipow(unsigned long b, unsigned e) {
	unsigned long r = 1;
	while (e--) r *= b;
	return r;
}

std::mutex field_mutex;
std::map<std::pair<unsigned long, unsigned>, FieldPtr> field_cache;

} // namespace

FieldPtr FiniteField::get(unsigned long p, unsigned m) {
	auto key = std::make_pair(p, m);
	{
		std::lock_guard<std::mutex> lk(field_mutex);
		auto it = field_cache.find(key);
		if (it != field_cache.end()) return it->second;
	}
	FieldPtr f(new FiniteField(p, m));
	std::lock_guard<std::mutex> lk(field_mutex);
	return field_cache.emplace(key, f).first->second;
}

FiniteField::FiniteField(unsigned long p, unsigned m) : p_(p), m_(m) {
	if (!is_prime_ul(p) || p == 2) throw DomainError("InvalidField", "characteristic must be an odd prime");
	if (m == 0) throw DomainError("InvalidField", "degree must be positive");
	q_ = 1;
	for (unsigned i = 0; i < m; ++i) {
		q_ *= p;
		if (q_ > (1ul << 24)) throw DomainError("InvalidField", "field too large for table arithmetic");
	}
	std::vector<FieldPtr> subs;
	for (unsigned d = 1; d < m; ++d)
		if (m % d == 0) subs.push_back(get(p, d));
	auto qm1_primes = prime_divisors(q_ - 1);

	// Conway order: x^m - c_{m-1}x^{m-1} + c_{m-2}x^{m-2} - ..., least (c_{m-1},...,c_0)
	unsigned long total = q_;
	bool found = false;
	for (unsigned long k = 0; k < total && !found; ++k) {
		std::vector<unsigned long> c(m);
		unsigned long t = k;
		for (unsigned i = 0; i < m; ++i) { // c[0] is the least significant
			c[i] = t % p;
			t /= p;
		}
		Poly f(m + 1, 0);
		f[m] = 1;
		for (unsigned i = 0; i < m; ++i) f[i] = ((m - i) % 2) ? (p - c[i]) % p : c[i];
		if (f[0] == 0) continue;
		QuotientRing R{p, f, m};
		Poly x = R.x();
		if (!R.is_one(R.pow(x, q_ - 1))) continue;
		bool prim = true;
		for (auto r : qm1_primes)
			if (R.is_one(R.pow(x, (q_ - 1) / r))) {
				prim = false;
				break;
			}
		if (!prim) continue;
		bool compatible = true;
		for (const auto& sub : subs) {
			Poly y = R.pow(x, (q_ - 1) / (sub->q() - 1));
			const auto& g = sub->modulus();
			Poly acc(m, 0);
			for (std::size_t i = g.size(); i-- > 0;) {
				acc = R.mul(acc, y);
				acc[0] = (acc[0] + g[i]) % p;
			}
			if (!R.is_zero(acc)) {
				compatible = false;
				break;
			}
		}
		if (!compatible) continue;
		modulus_ = f;
		found = true;
	}
	if (!found) throw DomainError("InvalidField", "no compatible modulus found");

	// exp/log tables by repeated multiplication by the root
	exp_.assign(q_ - 1, 0);
	log_.assign(q_, -1);
	std::vector<unsigned long> cur(m, 0);
	cur[0] = 1;
	for (unsigned long i = 0; i + 1 < q_; ++i) {
		Elem e = 0;
		for (unsigned j = m; j-- > 0;) e = Elem(e * p + cur[j]);
		exp_[i] = e;
		log_[e] = (std::int64_t)i;
		// cur *= x
		if (m == 1) {
			cur[0] = cur[0] * ((p - modulus_[0]) % p) % p;
		} else {
			unsigned long top = cur[m - 1];
			for (unsigned j = m - 1; j > 0; --j) cur[j] = cur[j - 1];
			cur[0] = 0;
			for (unsigned j = 0; j < m; ++j) cur[j] = (cur[j] + (p - top) * modulus_[j]) % p;
		}
	}
	trace_basis_.resize(m);
	for (unsigned j = 0; j < m; ++j) {
		Elem xj = 1;
		for (unsigned i = 0; i < j; ++i) xj = Elem(xj * p); // digit j set
		Elem s = 0;
		for (unsigned i = 0; i < m; ++i) s = add(s, frobenius(xj, i));
		if (s >= p) throw DomainError("InvalidField", "trace left the prime field");
		trace_basis_[j] = s;
	}
}

FiniteField::Elem FiniteField::from_int(long a) const {
	long r = a % (long)p_;
	if (r < 0) r += (long)p_;
	return Elem(r);
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
	if (m_ == 1) return Elem((a + b) % p_);
	Elem r = 0, place = 1;
	for (unsigned i = 0; i < m_; ++i) {
		unsigned long d = (a % p_ + b % p_) % p_;
		r += Elem(d * place);
		a /= Elem(p_);
		b /= Elem(p_);
		place *= Elem(p_);
	}
	return r;
}

FiniteField::Elem FiniteField::neg(Elem a) const {
	Elem r = 0, place = 1;
	for (unsigned i = 0; i < m_; ++i) {
		unsigned long d = (p_ - a % p_) % p_;
		r += Elem(d * place);
		a /= Elem(p_);
		place *= Elem(p_);
	}
	return r;
}

FiniteField::Elem FiniteField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const {
	if (a == 0 || b == 0) return 0;
	return exp_[(unsigned long)(log_[a] + log_[b]) % (q_ - 1)];
}

FiniteField::Elem FiniteField::inv(Elem a) const {
	if (a == 0) throw DomainError("DivisionByZero", "zero has no inverse");
	return exp_[(q_ - 1 - (unsigned long)log_[a]) % (q_ - 1)];
}

FiniteField::Elem FiniteField::gen_pow(long e) const {
	long n = (long)(q_ - 1);
	long r = e % n;
	if (r < 0) r += n;
	return exp_[r];
}

FiniteField::Elem FiniteField::pow(Elem a, long e) const {
	if (a == 0) {
		if (e == 0) return 1;
		if (e < 0) throw DomainError("DivisionByZero", "negative power of zero");
		return 0;
	}
	Int t = Int(log_[a]) * e;
	return gen_pow(mod_floor(t, Int((unsigned long)(q_ - 1))).get_si());
}

long FiniteField::dlog(Elem a) const {
	if (a == 0 || a >= q_) throw DomainError("DivisionByZero", "discrete log of zero");
	return (long)log_[a];
}

FiniteField::Elem FiniteField::frobenius(Elem a, unsigned k) const {
	if (a == 0) return 0;
	Int e = Int((unsigned long)log_[a]);
	for (unsigned i = 0; i < k; ++i) e *= Int(p_);
	return gen_pow(mod_floor(e, Int((unsigned long)(q_ - 1))).get_si());
}

unsigned long FiniteField::trace_to_prime(Elem a) const {
	unsigned long s = 0;
	for (unsigned j = 0; j < m_; ++j) {
		s = (s + (a % p_) * trace_basis_[j]) % p_;
		a /= Elem(p_);
	}
	return s;
}

FiniteField::Elem FiniteField::norm_to(Elem a, unsigned d) const {
	if (d == 0 || m_ % d) throw DomainError("InvalidField", "not a subfield degree");
	if (a == 0) return 0;
	unsigned long h = (q_ - 1) / (ipow(p_, d) - 1);
	return gen_pow((long)(((unsigned long)log_[a] * h) % (q_ - 1)));
}

FiniteField::Elem FiniteField::embed_from(const FiniteField& sub, Elem a) const {
	if (sub.p_ != p_ || m_ % sub.m_) throw DomainError("InvalidField", "not a subfield");
	if (a == 0) return 0;
	unsigned long h = (q_ - 1) / (sub.q_ - 1);
	return gen_pow((long)((unsigned long)sub.dlog(a) * h));
}

FiniteField::Elem FiniteField::restrict_to(const FiniteField& sub, Elem a) const {
	if (sub.p_ != p_ || m_ % sub.m_) throw DomainError("InvalidField", "not a subfield");
	if (a == 0) return 0;
	unsigned long h = (q_ - 1) / (sub.q_ - 1);
	unsigned long l = (unsigned long)log_[a];
	if (l % h) throw DomainError("NotInSubfield", "element not in subfield");
	return sub.gen_pow((long)(l / h));
}

std::vector<long> FiniteField::digits(Elem a) const {
	std::vector<long> d(m_);
	for (unsigned i = 0; i < m_; ++i) {
		d[i] = long(a % p_);
		a /= Elem(p_);
	}
	return d;
}

MultCharacter::MultCharacter(FieldPtr f, unsigned long order, long exponent)
	: f_(std::move(f)), n_(order), e_(exponent) {
	if (order == 0 || (f_->q() - 1) % order)
		throw DomainError("InvalidOrder", "character order must divide q-1");
}

long MultCharacter::value_exponent(FiniteField::Elem x) const {
	Int t = Int(f_->dlog(x)) * e_;
	return mod_floor(t, Int(n_)).get_si();
}

Cyclotomic MultCharacter::operator()(FiniteField::Elem x) const {
	return Cyclotomic::zeta(n_, value_exponent(x)).reduced();
}

GaussSum gauss_sum(const FieldPtr& f, AdditiveCharacter lambda) {
	if (lambda.c == 0 || lambda.c >= f->q())
		throw DomainError("TrivialCharacter", "additive character must be nontrivial");
	unsigned long p = f->p(), q = f->q();
	std::vector<long> g_counts(p, 0), alt_counts(p, 0);
	for (FiniteField::Elem x = 0; x < q; ++x) {
		unsigned long t = f->trace_to_prime(f->mul(lambda.c, x));
		if (x != 0) g_counts[t] += (f->dlog(x) % 2 == 0) ? 1 : -1;
		unsigned long t2 = f->trace_to_prime(f->mul(lambda.c, f->mul(x, x)));
		alt_counts[t2] += 1;
	}
	GaussSum r;
	r.g = Cyclotomic::from_exponents(p, g_counts);
	r.alternate = Cyclotomic::from_exponents(p, alt_counts);
	r.forms_agree = r.g == r.alternate;
	r.norm = r.g * r.g.conj();
	r.norm_ok = r.norm == Cyclotomic(Rat(Int(q)));
	Cyclotomic sq = r.g * r.g;
	if (!sq.is_rational()) throw DomainError("InternalError", "Gauss sum square not rational");
	Rat s = sq.rational_value() / Rat(Int(q));
	r.normalized_square = s.get_num().get_si();
	auto z = r.g.numeric();
	if (r.normalized_square == 1)
		r.normalized = Cyclotomic(Rat(z.real() > 0 ? 1 : -1));
	else
		r.normalized = Cyclotomic::zeta(4, z.imag() > 0 ? 1 : 3);
	return r;
}

} // namespace cuspidor
