#include "cuspidor/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace cuspidor {

namespace {

std::mutex phi_mutex;
std::map<unsigned long, std::vector<Int>> phi_cache;

std::vector<Int> compute_phi(unsigned long n) {
	// x^n - 1 divided by Φ_d for all proper divisors d
	std::vector<Int> num(n + 1, 0);
	num[0] = -1;
	num[n] = 1;
	for (unsigned long d = 1; d < n; ++d) {
		if (n % d) continue;
		const auto& den = cyclotomic_polynomial(d);
		std::size_t dd = den.size() - 1;
		std::size_t deg = num.size() - 1;
		std::vector<Int> quo(deg - dd + 1, 0);
		for (std::size_t k = deg + 1; k-- > dd;) {
			Int c = num[k];
			quo[k - dd] = c;
			if (c == 0) continue;
			for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
		}
		num = quo;
	}
	return num;
}

long pos_mod(long a, long n) {
	long r = a % n;
	return r < 0 ? r + n : r;
}

// Reduce Σ a_j x^j (any length) into the power basis of Q(ζ_n).
std::vector<Rat> reduce_poly(unsigned long n, std::vector<Rat> a) {
	if (a.size() > n) {
		for (std::size_t j = n; j < a.size(); ++j) a[j % n] += a[j];
		a.resize(n);
	}
	const auto& phi = cyclotomic_polynomial(n);
	std::size_t d = phi.size() - 1;
	for (std::size_t k = a.size(); k-- > d;) {
		if (a[k] == 0) continue;
		Rat c = a[k];
		for (std::size_t j = 0; j <= d; ++j)
			if (phi[j] != 0) a[k - d + j] -= c * phi[j];
	}
	a.resize(d, Rat(0));
	return a;
}

std::vector<unsigned long> divisors(unsigned long n) {
	std::vector<unsigned long> out;
	for (unsigned long d = 1; d <= n; ++d)
		if (n % d == 0) out.push_back(d);
	return out;
}

} // namespace

const std::vector<Int>& cyclotomic_polynomial(unsigned long n) {
	if (n == 0) throw DomainError("InvalidConductor", "conductor must be positive");
	{
		std::lock_guard<std::mutex> lk(phi_mutex);
		auto it = phi_cache.find(n);
		if (it != phi_cache.end()) return it->second;
	}
	std::vector<Int> p;
	if (n == 1)
		p = {Int(-1), Int(1)};
	else
		p = compute_phi(n);
	std::lock_guard<std::mutex> lk(phi_mutex);
	return phi_cache.emplace(n, std::move(p)).first->second; // map nodes are stable
}

unsigned long euler_phi(unsigned long n) {
	unsigned long r = n, m = n;
	for (unsigned long p = 2; p * p <= m; ++p) {
		if (m % p) continue;
		while (m % p == 0) m /= p;
		r -= r / p;
	}
	if (m > 1) r -= r / m;
	return r;
}

Cyclotomic Cyclotomic::zeta(unsigned long n, long k) {
	std::vector<Rat> a(n, Rat(0));
	a[pos_mod(k, (long)n)] = 1;
	return Cyclotomic(n, reduce_poly(n, std::move(a)));
}

Cyclotomic Cyclotomic::from_exponents(unsigned long n, const std::vector<Rat>& counts) {
	std::vector<Rat> a(n, Rat(0));
	for (std::size_t j = 0; j < counts.size(); ++j) a[j % n] += counts[j];
	return Cyclotomic(n, reduce_poly(n, std::move(a)));
}

Cyclotomic Cyclotomic::from_exponents(unsigned long n, const std::vector<long>& counts) {
	std::vector<Rat> a(n, Rat(0));
	for (std::size_t j = 0; j < counts.size(); ++j) a[j % n] += counts[j];
	return Cyclotomic(n, reduce_poly(n, std::move(a)));
}

Cyclotomic Cyclotomic::from_coeffs(unsigned long n, std::vector<Rat> coeffs) {
	if (coeffs.size() > euler_phi(n)) return Cyclotomic(n, reduce_poly(n, std::move(coeffs)));
	coeffs.resize(euler_phi(n), Rat(0));
	return Cyclotomic(n, std::move(coeffs));
}

Cyclotomic Cyclotomic::lifted(unsigned long m) const {
	if (m % n_) throw DomainError("InvalidConductor", "conductor does not divide target");
	if (m == n_) return *this;
	unsigned long s = m / n_;
	std::vector<Rat> a(m, Rat(0));
	for (std::size_t j = 0; j < c_.size(); ++j) a[(j * s) % m] += c_[j];
	return Cyclotomic(m, reduce_poly(m, std::move(a)));
}

Cyclotomic Cyclotomic::reduced() const {
	if (is_rational()) return Cyclotomic(rational_value());
	for (unsigned long d : divisors(n_)) {
		if (d == n_) break;
		if (d % 4 == 2) continue; // Q(ζ_d) = Q(ζ_{d/2})
		// fixed by σ_a for all units a ≡ 1 mod d
		bool fixed = true;
		for (unsigned long a = 1 + d; a < n_ && fixed; a += d)
			if (std::gcd(a, n_) == 1 && galois((long)a) != *this) fixed = false;
		if (!fixed) continue;
		// solve in the image of the power basis of Q(ζ_d)
		unsigned long pd = euler_phi(d);
		IntMatrix m(c_.size(), pd);
		for (unsigned long j = 0; j < pd; ++j) {
			auto z = zeta(d, (long)j).lifted(n_);
			for (std::size_t i = 0; i < c_.size(); ++i) m(i, j) = z.c_[i].get_num();
		}
		auto sol = solve_rational_columns(m, c_);
		if (sol) return Cyclotomic(d, *sol);
	}
	return *this;
}

static unsigned long lcm_ul(unsigned long a, unsigned long b) { return a / std::gcd(a, b) * b; }

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
	unsigned long m = lcm_ul(n_, o.n_);
	Cyclotomic a = lifted(m), b = o.lifted(m);
	for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
	return a;
}

Cyclotomic Cyclotomic::operator-() const {
	Cyclotomic a = *this;
	for (auto& x : a.c_) x = -x;
	return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
	unsigned long m = lcm_ul(n_, o.n_);
	Cyclotomic a = lifted(m), b = o.lifted(m);
	if (a.c_.size() == 1) return b * a.c_[0];
	if (b.c_.size() == 1) return a * b.c_[0];
	std::vector<Rat> prod(a.c_.size() + b.c_.size() - 1, Rat(0));
	for (std::size_t i = 0; i < a.c_.size(); ++i) {
		if (a.c_[i] == 0) continue;
		for (std::size_t j = 0; j < b.c_.size(); ++j)
			if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
	}
	return Cyclotomic(m, reduce_poly(m, std::move(prod)));
}

Cyclotomic Cyclotomic::operator*(const Rat& r) const {
	Cyclotomic a = *this;
	for (auto& x : a.c_) x *= r;
	return a;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
	if (n_ == o.n_) return c_ == o.c_;
	unsigned long m = lcm_ul(n_, o.n_);
	return lifted(m).c_ == o.lifted(m).c_;
}

Cyclotomic Cyclotomic::galois(long a) const {
	if (std::gcd(pos_mod(a, (long)n_), (long)n_) != 1 && n_ > 1)
		throw DomainError("InvalidAutomorphism", "exponent not prime to conductor");
	std::vector<Rat> v(n_, Rat(0));
	for (std::size_t j = 0; j < c_.size(); ++j) v[pos_mod((long)j * a, (long)n_)] += c_[j];
	return Cyclotomic(n_, reduce_poly(n_, std::move(v)));
}

bool Cyclotomic::is_zero() const {
	for (const auto& x : c_)
		if (x != 0) return false;
	return true;
}

bool Cyclotomic::is_rational() const {
	for (std::size_t i = 1; i < c_.size(); ++i)
		if (c_[i] != 0) return false;
	return true;
}

Rat Cyclotomic::rational_value() const {
	if (!is_rational()) throw DomainError("NotRational", "cyclotomic number is not rational");
	return c_[0];
}

std::complex<double> Cyclotomic::numeric() const {
	std::complex<double> s = 0;
	for (std::size_t j = 0; j < c_.size(); ++j) {
		double t = 2.0 * M_PI * double(j) / double(n_);
		s += c_[j].get_d() * std::complex<double>(std::cos(t), std::sin(t));
	}
	return s;
}

std::string Cyclotomic::str() const {
	std::ostringstream os;
	bool first = true;
	for (std::size_t j = 0; j < c_.size(); ++j) {
		if (c_[j] == 0) continue;
		if (!first) os << " + ";
		first = false;
		os << c_[j].get_str();
		if (j) os << "*z" << n_ << "^" << j;
	}
	if (first) os << "0";
	return os.str();
}

} // namespace cuspidor
