#include "cuspidor/exact.hpp"

#include <algorithm>
#include <sstream>

namespace cuspidor {

Rat ratio(const Int& a, const Int& b) {
	Rat r(a, b);
	r.canonicalize();
	return r;
}

Rat frac(const Rat& x) {
	Int fl;
	mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
	Rat r = x - Rat(fl);
	r.canonicalize();
	return r;
}

QVec reduce_mod1(QVec v) {
	for (auto& x : v)
		x = frac(x);
	return v;
}

bool is_integral(const Rat& x) { return x.get_den() == 1; }

bool is_integral(const QVec& v) {
	return std::all_of(v.begin(), v.end(), [](const Rat& x) { return is_integral(x); });
}

bool is_zero_mod1(const QVec& v) { return is_integral(v); }

Int mod_floor(const Int& a, const Int& m) {
	Int r;
	mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
	return r;
}

Int lcm_denominators(const QVec& v) {
	Int l = 1;
	for (const auto& x : v)
		mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
	return l;
}

QVec to_qvec(const IntVec& v) {
	QVec r;
	r.reserve(v.size());
	for (const auto& x : v)
		r.emplace_back(x);
	return r;
}

IntVec to_intvec(const std::vector<long>& v) {
	IntVec r;
	r.reserve(v.size());
	for (long x : v)
		r.emplace_back(x);
	return r;
}

// ---- IntMatrix ----

IntMatrix IntMatrix::identity(std::size_t n) {
	IntMatrix m(n, n);
	for (std::size_t i = 0; i < n; ++i)
		m(i, i) = 1;
	return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rs) {
	std::size_t c = rs.empty() ? 0 : rs[0].size();
	IntMatrix m(rs.size(), c);
	for (std::size_t i = 0; i < rs.size(); ++i) {
		if (rs[i].size() != c)
			throw DomainError("InvalidMatrix", "ragged matrix rows");
		for (std::size_t j = 0; j < c; ++j)
			m(i, j) = rs[i][j];
	}
	return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rs) {
	std::size_t c = rs.empty() ? 0 : rs[0].size();
	IntMatrix m(rs.size(), c);
	for (std::size_t i = 0; i < rs.size(); ++i) {
		if (rs[i].size() != c)
			throw DomainError("InvalidMatrix", "ragged matrix rows");
		for (std::size_t j = 0; j < c; ++j)
			m(i, j) = rs[i][j];
	}
	return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVec>& cs, std::size_t nrows) {
	IntMatrix m(nrows, cs.size());
	for (std::size_t j = 0; j < cs.size(); ++j) {
		if (cs[j].size() != nrows)
			throw DomainError("InvalidMatrix", "column length mismatch");
		for (std::size_t i = 0; i < nrows; ++i)
			m(i, j) = cs[j][i];
	}
	return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Int>& d) {
	IntMatrix m(d.size(), d.size());
	for (std::size_t i = 0; i < d.size(); ++i)
		m(i, i) = d[i];
	return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
	if (cols != o.rows)
		throw std::invalid_argument("matrix product shape mismatch");
	IntMatrix r(rows, o.cols);
	for (std::size_t i = 0; i < rows; ++i)
		for (std::size_t k = 0; k < cols; ++k) {
			const Int& a = (*this)(i, k);
			if (a == 0)
				continue;
			for (std::size_t j = 0; j < o.cols; ++j)
				r(i, j) += a * o(k, j);
		}
	return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
	if (rows != o.rows || cols != o.cols)
		throw std::invalid_argument("matrix sum shape mismatch");
	IntMatrix r = *this;
	for (std::size_t i = 0; i < data.size(); ++i)
		r.data[i] += o.data[i];
	return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
	if (rows != o.rows || cols != o.cols)
		throw std::invalid_argument("matrix difference shape mismatch");
	IntMatrix r = *this;
	for (std::size_t i = 0; i < data.size(); ++i)
		r.data[i] -= o.data[i];
	return r;
}

IntMatrix IntMatrix::scaled(const Int& k) const {
	IntMatrix r = *this;
	for (auto& x : r.data)
		x *= k;
	return r;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
	return rows == o.rows && cols == o.cols && data == o.data;
}

bool IntMatrix::operator<(const IntMatrix& o) const {
	if (rows != o.rows)
		return rows < o.rows;
	if (cols != o.cols)
		return cols < o.cols;
	return data < o.data;
}

IntVec IntMatrix::apply(const IntVec& v) const {
	if (v.size() != cols)
		throw std::invalid_argument("matrix-vector shape mismatch");
	IntVec r(rows, 0);
	for (std::size_t i = 0; i < rows; ++i)
		for (std::size_t j = 0; j < cols; ++j)
			r[i] += (*this)(i, j) * v[j];
	return r;
}

QVec IntMatrix::apply(const QVec& v) const {
	if (v.size() != cols)
		throw std::invalid_argument("matrix-vector shape mismatch");
	QVec r(rows, 0);
	for (std::size_t i = 0; i < rows; ++i)
		for (std::size_t j = 0; j < cols; ++j)
			if ((*this)(i, j) != 0)
				r[i] += Rat((*this)(i, j)) * v[j];
	return r;
}

IntVec IntMatrix::row(std::size_t i) const {
	return IntVec(data.begin() + static_cast<long>(i * cols),
	              data.begin() + static_cast<long>((i + 1) * cols));
}

IntVec IntMatrix::column(std::size_t j) const {
	IntVec c(rows);
	for (std::size_t i = 0; i < rows; ++i)
		c[i] = (*this)(i, j);
	return c;
}

IntMatrix IntMatrix::transpose() const {
	IntMatrix t(cols, rows);
	for (std::size_t i = 0; i < rows; ++i)
		for (std::size_t j = 0; j < cols; ++j)
			t(j, i) = (*this)(i, j);
	return t;
}

bool IntMatrix::is_identity() const { return is_square() && *this == identity(rows); }

bool IntMatrix::is_zero() const {
	return std::all_of(data.begin(), data.end(), [](const Int& x) { return x == 0; });
}

// Bareiss fraction-free elimination.
Int IntMatrix::det() const {
	if (!is_square())
		throw std::invalid_argument("det of non-square matrix");
	std::size_t n = rows;
	if (n == 0)
		return 1;
	IntMatrix a = *this;
	Int prev = 1;
	int sign = 1;
	for (std::size_t k = 0; k + 1 < n; ++k) {
		if (a(k, k) == 0) {
			std::size_t p = k + 1;
			while (p < n && a(p, k) == 0)
				++p;
			if (p == n)
				return 0;
			for (std::size_t j = 0; j < n; ++j)
				std::swap(a(k, j), a(p, j));
			sign = -sign;
		}
		for (std::size_t i = k + 1; i < n; ++i)
			for (std::size_t j = k + 1; j < n; ++j) {
				Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
				mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
				a(i, j) = t;
			}
		prev = a(k, k);
	}
	return sign * a(n - 1, n - 1);
}

IntMatrix IntMatrix::pow(long e) const {
	IntMatrix r = identity(rows), b = *this;
	while (e > 0) {
		if (e & 1)
			r = r * b;
		b = b * b;
		e >>= 1;
	}
	return r;
}

IntMatrix IntMatrix::inverse_unimodular() const {
	SmithForm s = smith_normal_form(*this);
	if (!is_square() || s.rank != rows)
		throw DomainError("NotUnimodular", "matrix is not invertible over Z");
	for (const auto& d : s.diag)
		if (d != 1)
			throw DomainError("NotUnimodular", "matrix is not invertible over Z");
	// U m V = I  =>  m^{-1} = V U
	return s.V * s.U;
}

std::vector<std::vector<long>> IntMatrix::to_long() const {
	std::vector<std::vector<long>> r(rows, std::vector<long>(cols));
	for (std::size_t i = 0; i < rows; ++i)
		for (std::size_t j = 0; j < cols; ++j) {
			if (!(*this)(i, j).fits_slong_p())
				throw DomainError("Overflow", "matrix entry does not fit a machine integer");
			r[i][j] = (*this)(i, j).get_si();
		}
	return r;
}

std::string IntMatrix::str() const {
	std::ostringstream os;
	os << "[";
	for (std::size_t i = 0; i < rows; ++i) {
		os << (i ? ",[" : "[");
		for (std::size_t j = 0; j < cols; ++j)
			os << (j ? "," : "") << (*this)(i, j);
		os << "]";
	}
	os << "]";
	return os.str();
}

IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b) {
	if (a.rows != b.rows)
		throw std::invalid_argument("hconcat row mismatch");
	IntMatrix r(a.rows, a.cols + b.cols);
	for (std::size_t i = 0; i < a.rows; ++i) {
		for (std::size_t j = 0; j < a.cols; ++j)
			r(i, j) = a(i, j);
		for (std::size_t j = 0; j < b.cols; ++j)
			r(i, a.cols + j) = b(i, j);
	}
	return r;
}

IntMatrix vconcat(const IntMatrix& a, const IntMatrix& b) {
	if (a.cols != b.cols)
		throw std::invalid_argument("vconcat column mismatch");
	IntMatrix r(a.rows + b.rows, a.cols);
	for (std::size_t i = 0; i < a.rows; ++i)
		for (std::size_t j = 0; j < a.cols; ++j)
			r(i, j) = a(i, j);
	for (std::size_t i = 0; i < b.rows; ++i)
		for (std::size_t j = 0; j < a.cols; ++j)
			r(a.rows + i, j) = b(i, j);
	return r;
}

namespace {

// Row-reduce [A | b] over Q. Returns the reduced augmented matrix and pivot columns.
void rref(std::vector<std::vector<Rat>>& m, std::size_t ncols, std::vector<std::size_t>& pivots) {
	std::size_t r = 0;
	for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
		std::size_t p = r;
		while (p < m.size() && m[p][c] == 0)
			++p;
		if (p == m.size())
			continue;
		std::swap(m[p], m[r]);
		Rat inv = 1 / m[r][c];
		for (auto& x : m[r])
			x *= inv;
		for (std::size_t i = 0; i < m.size(); ++i) {
			if (i == r || m[i][c] == 0)
				continue;
			Rat f = m[i][c];
			for (std::size_t j = 0; j < m[i].size(); ++j)
				m[i][j] -= f * m[r][j];
		}
		pivots.push_back(c);
		++r;
	}
}

} // namespace

std::optional<QVec> solve_rational(const IntMatrix& a, const QVec& b) {
	if (!a.is_square())
		throw std::invalid_argument("solve_rational needs a square matrix");
	auto x = solve_rational_columns(a, b);
	return x;
}

std::optional<QVec> solve_rational_columns(const IntMatrix& a, const QVec& b) {
	std::vector<std::vector<Rat>> m(a.rows, std::vector<Rat>(a.cols + 1));
	for (std::size_t i = 0; i < a.rows; ++i) {
		for (std::size_t j = 0; j < a.cols; ++j)
			m[i][j] = a(i, j);
		m[i][a.cols] = b[i];
	}
	std::vector<std::size_t> piv;
	rref(m, a.cols, piv);
	if (piv.size() != a.cols)
		return std::nullopt;
	for (std::size_t i = piv.size(); i < m.size(); ++i)
		if (m[i][a.cols] != 0)
			return std::nullopt;
	QVec x(a.cols);
	for (std::size_t k = 0; k < piv.size(); ++k)
		x[piv[k]] = m[k][a.cols];
	return x;
}

// ---- Smith normal form ----

namespace {

struct SnfState {
	IntMatrix A, U, Uinv, V, Vinv;

	void swap_rows(std::size_t i, std::size_t j) {
		if (i == j)
			return;
		for (std::size_t c = 0; c < A.cols; ++c)
			std::swap(A(i, c), A(j, c));
		for (std::size_t c = 0; c < U.cols; ++c)
			std::swap(U(i, c), U(j, c));
		for (std::size_t r = 0; r < Uinv.rows; ++r)
			std::swap(Uinv(r, i), Uinv(r, j));
	}
	// row_i += k * row_j
	void add_row(std::size_t i, std::size_t j, const Int& k) {
		for (std::size_t c = 0; c < A.cols; ++c)
			A(i, c) += k * A(j, c);
		for (std::size_t c = 0; c < U.cols; ++c)
			U(i, c) += k * U(j, c);
		for (std::size_t r = 0; r < Uinv.rows; ++r)
			Uinv(r, j) -= k * Uinv(r, i);
	}
	void neg_row(std::size_t i) {
		for (std::size_t c = 0; c < A.cols; ++c)
			A(i, c) = -A(i, c);
		for (std::size_t c = 0; c < U.cols; ++c)
			U(i, c) = -U(i, c);
		for (std::size_t r = 0; r < Uinv.rows; ++r)
			Uinv(r, i) = -Uinv(r, i);
	}
	void swap_cols(std::size_t i, std::size_t j) {
		if (i == j)
			return;
		for (std::size_t r = 0; r < A.rows; ++r)
			std::swap(A(r, i), A(r, j));
		for (std::size_t r = 0; r < V.rows; ++r)
			std::swap(V(r, i), V(r, j));
		for (std::size_t c = 0; c < Vinv.cols; ++c)
			std::swap(Vinv(i, c), Vinv(j, c));
	}
	// col_i += k * col_j
	void add_col(std::size_t i, std::size_t j, const Int& k) {
		for (std::size_t r = 0; r < A.rows; ++r)
			A(r, i) += k * A(r, j);
		for (std::size_t r = 0; r < V.rows; ++r)
			V(r, i) += k * V(r, j);
		for (std::size_t c = 0; c < Vinv.cols; ++c)
			Vinv(j, c) -= k * Vinv(i, c);
	}
};

} // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
	SnfState s{m, IntMatrix::identity(m.rows), IntMatrix::identity(m.rows),
	           IntMatrix::identity(m.cols), IntMatrix::identity(m.cols)};
	const std::size_t n = std::min(m.rows, m.cols);
	IntMatrix& A = s.A;
	std::size_t t = 0;
	for (; t < n; ++t) {
		// minimal |entry| in the trailing block, first in row-major order
		bool found = false;
		std::size_t pi = 0, pj = 0;
		Int best;
		for (std::size_t i = t; i < m.rows; ++i)
			for (std::size_t j = t; j < m.cols; ++j) {
				if (A(i, j) == 0)
					continue;
				Int a = abs(A(i, j));
				if (!found || a < best) {
					found = true;
					best = a;
					pi = i;
					pj = j;
				}
			}
		if (!found)
			break;
		s.swap_rows(t, pi);
		s.swap_cols(t, pj);
		for (;;) {
			bool clean = true;
			for (std::size_t i = t + 1; i < m.rows; ++i) {
				if (A(i, t) == 0)
					continue;
				Int q;
				mpz_fdiv_q(q.get_mpz_t(), A(i, t).get_mpz_t(), A(t, t).get_mpz_t());
				s.add_row(i, t, -q);
				if (A(i, t) != 0)
					clean = false;
			}
			for (std::size_t j = t + 1; j < m.cols; ++j) {
				if (A(t, j) == 0)
					continue;
				Int q;
				mpz_fdiv_q(q.get_mpz_t(), A(t, j).get_mpz_t(), A(t, t).get_mpz_t());
				s.add_col(j, t, -q);
				if (A(t, j) != 0)
					clean = false;
			}
			if (!clean) {
				// move the smallest leftover in row/column t onto the diagonal
				std::size_t bi = t, bj = t;
				Int b = abs(A(t, t));
				for (std::size_t i = t + 1; i < m.rows; ++i)
					if (A(i, t) != 0 && abs(A(i, t)) < b) {
						b = abs(A(i, t));
						bi = i;
						bj = t;
					}
				for (std::size_t j = t + 1; j < m.cols; ++j)
					if (A(t, j) != 0 && abs(A(t, j)) < b) {
						b = abs(A(t, j));
						bi = t;
						bj = j;
					}
				s.swap_rows(t, bi);
				s.swap_cols(t, bj);
				continue;
			}
			// enforce divisibility of the trailing block by the pivot
			bool fixed = false;
			for (std::size_t i = t + 1; i < m.rows && !fixed; ++i)
				for (std::size_t j = t + 1; j < m.cols; ++j)
					if (!mpz_divisible_p(A(i, j).get_mpz_t(), A(t, t).get_mpz_t())) {
						s.add_row(t, i, 1);
						fixed = true;
						break;
					}
			if (!fixed)
				break;
		}
		if (A(t, t) < 0)
			s.neg_row(t);
	}
	SmithForm out;
	out.rank = t;
	out.diag.resize(n);
	for (std::size_t i = 0; i < n; ++i)
		out.diag[i] = A(i, i);
	out.U = std::move(s.U);
	out.Uinv = std::move(s.Uinv);
	out.V = std::move(s.V);
	out.Vinv = std::move(s.Vinv);
	out.D = std::move(s.A);
	return out;
}

// ---- AbelianGroup ----

AbelianGroup AbelianGroup::from_relations(const IntMatrix& rel) {
	AbelianGroup g;
	g.ambient_ = rel.rows;
	SmithForm s = smith_normal_form(rel);
	std::vector<std::size_t> tors, fr;
	for (std::size_t i = 0; i < rel.rows; ++i) {
		Int d = i < s.diag.size() ? s.diag[i] : Int(0);
		if (d == 1)
			continue;
		if (d == 0)
			fr.push_back(i);
		else
			tors.push_back(i);
	}
	std::vector<std::size_t> keep = tors;
	keep.insert(keep.end(), fr.begin(), fr.end());
	g.free_ = fr.size();
	for (auto i : tors)
		g.factors_.push_back(s.diag[i]);
	g.proj_ = IntMatrix(keep.size(), rel.rows);
	for (std::size_t k = 0; k < keep.size(); ++k) {
		for (std::size_t j = 0; j < rel.rows; ++j)
			g.proj_(k, j) = s.U(keep[k], j);
		g.gens_.push_back(s.Uinv.column(keep[k]));
	}
	return g;
}

AbelianGroup AbelianGroup::from_factors(const std::vector<Int>& factors) {
	return from_relations(IntMatrix::diagonal(factors));
}

Int AbelianGroup::order() const {
	if (!is_finite())
		throw DomainError("Infinite", "group has a free part");
	Int o = 1;
	for (const auto& d : factors_)
		o *= d;
	return o;
}

Int AbelianGroup::exponent() const {
	if (!is_finite())
		throw DomainError("Infinite", "group has a free part");
	return factors_.empty() ? Int(1) : factors_.back();
}

IntVec AbelianGroup::normalize(IntVec c) const {
	for (std::size_t i = 0; i < factors_.size(); ++i)
		c[i] = mod_floor(c[i], factors_[i]);
	return c;
}

IntVec AbelianGroup::reduce(const IntVec& x) const {
	if (x.size() != ambient_)
		throw std::invalid_argument("ambient dimension mismatch");
	return normalize(proj_.apply(x));
}

IntVec AbelianGroup::lift(const IntVec& c) const {
	IntVec x(ambient_, 0);
	for (std::size_t k = 0; k < gens_.size(); ++k)
		if (c[k] != 0)
			for (std::size_t j = 0; j < ambient_; ++j)
				x[j] += c[k] * gens_[k][j];
	return x;
}

IntVec AbelianGroup::generator(std::size_t i) const { return gens_.at(i); }

bool AbelianGroup::is_zero(const IntVec& c) const {
	return std::all_of(c.begin(), c.end(), [](const Int& x) { return x == 0; });
}

IntVec AbelianGroup::add(const IntVec& a, const IntVec& b) const {
	IntVec r(a.size());
	for (std::size_t i = 0; i < a.size(); ++i)
		r[i] = a[i] + b[i];
	return normalize(std::move(r));
}

IntVec AbelianGroup::neg(const IntVec& a) const {
	IntVec r(a.size());
	for (std::size_t i = 0; i < a.size(); ++i)
		r[i] = -a[i];
	return normalize(std::move(r));
}

IntVec AbelianGroup::scale(const Int& k, const IntVec& a) const {
	IntVec r(a.size());
	for (std::size_t i = 0; i < a.size(); ++i)
		r[i] = k * a[i];
	return normalize(std::move(r));
}

Int AbelianGroup::element_order(const IntVec& c) const {
	if (!is_finite())
		throw DomainError("Infinite", "group has a free part");
	Int o = 1;
	for (std::size_t i = 0; i < factors_.size(); ++i) {
		Int g;
		mpz_gcd(g.get_mpz_t(), c[i].get_mpz_t(), factors_[i].get_mpz_t());
		Int oi = factors_[i] / g;
		mpz_lcm(o.get_mpz_t(), o.get_mpz_t(), oi.get_mpz_t());
	}
	return o;
}

std::size_t AbelianGroup::index_of(const IntVec& c) const {
	std::size_t idx = 0;
	for (std::size_t i = 0; i < factors_.size(); ++i)
		idx = idx * factors_[i].get_ui() + mod_floor(c[i], factors_[i]).get_ui();
	return idx;
}

IntVec AbelianGroup::element_at(std::size_t idx) const {
	IntVec c(factors_.size());
	for (std::size_t i = factors_.size(); i-- > 0;) {
		unsigned long d = factors_[i].get_ui();
		c[i] = static_cast<unsigned long>(idx % d);
		idx /= d;
	}
	return c;
}

std::vector<IntVec> AbelianGroup::elements() const {
	Int o = order();
	if (o > 10000000)
		throw DomainError("TooLarge", "group too large to enumerate");
	std::vector<IntVec> out;
	std::size_t n = o.get_ui();
	out.reserve(n);
	for (std::size_t i = 0; i < n; ++i)
		out.push_back(element_at(i));
	return out;
}

IntMatrix AbelianGroup::induced(const IntMatrix& f) const {
	IntMatrix r(ngens(), ngens());
	for (std::size_t j = 0; j < ngens(); ++j) {
		IntVec img = reduce(f.apply(gens_[j]));
		for (std::size_t i = 0; i < ngens(); ++i)
			r(i, j) = img[i];
	}
	return r;
}

AbelianGroup quotient(const AbelianGroup& a, const std::vector<IntVec>& elems) {
	std::size_t k = a.ngens();
	IntMatrix rel(k, k + elems.size());
	for (std::size_t i = 0; i < a.invariant_factors().size(); ++i)
		rel(i, i) = a.invariant_factors()[i];
	for (std::size_t j = 0; j < elems.size(); ++j)
		for (std::size_t i = 0; i < k; ++i)
			rel(i, k + j) = elems[j][i];
	return AbelianGroup::from_relations(rel);
}

bool is_automorphism(const AbelianGroup& a, const IntMatrix& s) {
	if (!a.is_finite())
		throw DomainError("Infinite", "automorphism check needs a finite group");
	std::size_t k = a.ngens();
	if (s.rows != k || s.cols != k)
		return false;
	std::vector<IntVec> cols;
	for (std::size_t j = 0; j < k; ++j) {
		IntVec c = s.column(j);
		if (!a.is_zero(a.scale(a.invariant_factors()[j], c)))
			return false;
		cols.push_back(a.normalize(c));
	}
	return quotient(a, cols).is_trivial();
}

AbelianGroup coinvariants(const AbelianGroup& a, const std::vector<IntMatrix>& actions) {
	std::vector<IntVec> rel;
	for (const auto& s : actions) {
		if (!is_automorphism(a, s))
			throw DomainError("InvalidAction", "action is not an automorphism of the group");
		for (std::size_t j = 0; j < a.ngens(); ++j) {
			IntVec c = s.column(j);
			c[j] -= 1;
			rel.push_back(a.normalize(c));
		}
	}
	return quotient(a, rel);
}

// ---- Q/Z kernels and solving ----

QZKernel::QZKernel(const IntMatrix& n) : n_(n), snf_(smith_normal_form(n)), dim_(n.cols) {
	std::vector<Int> facs;
	for (std::size_t j = 0; j < n.cols; ++j) {
		Int d = j < snf_.rank ? snf_.diag[j] : Int(0);
		if (d == 0)
			free_idx_.push_back(j);
		else if (d != 1) {
			torsion_idx_.push_back(j);
			facs.push_back(d);
		}
	}
	free_ = free_idx_.size();
	group_ = AbelianGroup::from_factors(facs);
}

bool QZKernel::contains(const QVec& v) const { return is_integral(n_.apply(v)); }

IntVec QZKernel::coords(const QVec& v) const {
	if (!contains(v))
		throw DomainError("NotFixed", "vector is not in the kernel");
	QVec y = snf_.Vinv.apply(v);
	for (auto j : free_idx_)
		if (!is_integral(y[j]))
			throw DomainError("NotFixed", "vector has a divisible component");
	IntVec c(torsion_idx_.size());
	for (std::size_t k = 0; k < torsion_idx_.size(); ++k) {
		std::size_t j = torsion_idx_[k];
		Rat t = frac(y[j]) * Rat(snf_.diag[j]);
		c[k] = t.get_num();
	}
	return c;
}

QVec QZKernel::point(const IntVec& c) const {
	QVec y(dim_, 0);
	for (std::size_t k = 0; k < torsion_idx_.size(); ++k) {
		std::size_t j = torsion_idx_[k];
		y[j] = frac(Rat(c[k]) / Rat(snf_.diag[j]));
	}
	return reduce_mod1(snf_.V.apply(y));
}

QVec QZKernel::generator(std::size_t i) const {
	IntVec c(torsion_idx_.size(), 0);
	c.at(i) = 1;
	return point(c);
}

std::vector<QVec> QZKernel::points() const {
	std::vector<QVec> out;
	for (const auto& c : group_.elements())
		out.push_back(point(c));
	return out;
}

std::vector<QVec> QZKernel::free_directions() const {
	std::vector<QVec> out;
	for (auto j : free_idx_)
		out.push_back(to_qvec(snf_.V.column(j)));
	return out;
}

QZKernel twisted_fixed_points(const IntMatrix& f) {
	if (!f.is_square())
		throw std::invalid_argument("twisted_fixed_points needs a square matrix");
	return QZKernel(f - IntMatrix::identity(f.rows));
}

std::vector<QVec> QZSolution::all() const {
	std::vector<QVec> out;
	if (!solvable)
		return out;
	if (!kernel.is_finite())
		throw DomainError("Infinite", "solution set has a divisible part");
	for (const auto& k : kernel.points()) {
		QVec x = particular;
		for (std::size_t i = 0; i < x.size(); ++i)
			x[i] += k[i];
		out.push_back(reduce_mod1(std::move(x)));
	}
	return out;
}

QZSolution solve_qz(const IntMatrix& n, const QVec& c) {
	if (c.size() != n.rows)
		throw std::invalid_argument("right-hand side length mismatch");
	QZSolution sol;
	sol.kernel = QZKernel(n);
	SmithForm s = smith_normal_form(n);
	QVec uc = s.U.apply(c);
	for (std::size_t i = s.rank; i < n.rows; ++i)
		if (!is_integral(uc[i])) {
			sol.solvable = false;
			sol.certificate = s.U.row(i);
			return sol;
		}
	QVec y(n.cols, 0);
	for (std::size_t i = 0; i < s.rank; ++i)
		y[i] = uc[i] / Rat(s.diag[i]);
	sol.solvable = true;
	sol.particular = reduce_mod1(s.V.apply(y));
	return sol;
}

QZSolution solve_affine(const IntMatrix& m, const QVec& c) {
	if (!m.is_square() || c.size() != m.rows)
		throw std::invalid_argument("solve_affine shape mismatch");
	return solve_qz(m - IntMatrix::identity(m.rows), c);
}

std::vector<Int> prime_factors(Int n) {
	std::vector<Int> ps;
	n = abs(n);
	for (Int p = 2; p * p <= n; ++p) {
		if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
			ps.push_back(p);
			while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()))
				n /= p;
		}
	}
	if (n > 1)
		ps.push_back(n);
	return ps;
}

} // namespace cuspidor
