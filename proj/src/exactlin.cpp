#include <leibniz/exactlin.hpp>
#include <leibniz/error.hpp>

#include <algorithm>
#include <numeric>
#include <string>

namespace leibniz {

namespace {

void require(bool condition, ErrorKind kind, const char* message) {
    if (!condition) throw Error(kind, message);
}

}  // namespace

// ---------------------------------------------------------------------------
// Rational helpers

Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto bad = [&] { return Error(ErrorKind::Schema, "malformed rational: \"" + s + "\""); };
    if (s.empty()) throw bad();

    const auto slash = s.find('/');
    auto valid_integer = [](const std::string& part, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && i < part.size() && (part[i] == '-' || part[i] == '+')) ++i;
        if (i == part.size()) return false;
        return std::all_of(part.begin() + static_cast<std::ptrdiff_t>(i), part.end(),
                           [](char ch) { return ch >= '0' && ch <= '9'; });
    };

    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_integer(num, true) || !valid_integer(den, false)) throw bad();
    if (num[0] == '+') num.erase(0, 1);

    mpz_class n(num, 10);
    mpz_class d(den, 10);
    if (d == 0) throw Error(ErrorKind::Schema, "zero denominator in rational: \"" + s + "\"");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) {
    return value.get_str(10);
}

Vector zero_vector(std::size_t n) {
    return Vector(n, Rational(0));
}

Vector unit_vector(std::size_t n, std::size_t index) {
    Vector v = zero_vector(n);
    v.at(index) = 1;
    return v;
}

bool is_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Vector operator+(const Vector& a, const Vector& b) {
    require(a.size() == b.size(), ErrorKind::DimensionMismatch, "vector length mismatch");
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Vector operator-(const Vector& a, const Vector& b) {
    require(a.size() == b.size(), ErrorKind::DimensionMismatch, "vector length mismatch");
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Vector operator*(const Rational& s, const Vector& v) {
    Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
    return out;
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Vector Matrix::row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::col(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

void Matrix::set_row(std::size_t r, const Vector& v) {
    require(v.size() == cols_, ErrorKind::DimensionMismatch, "row length mismatch");
    std::copy(v.begin(), v.end(), data_.begin() + static_cast<std::ptrdiff_t>(r * cols_));
}

void Matrix::set_col(std::size_t c, const Vector& v) {
    require(v.size() == rows_, ErrorKind::DimensionMismatch, "column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const {
    return leibniz::is_zero(data_);
}

Rational Matrix::trace() const {
    require(is_square(), ErrorKind::DimensionMismatch, "trace of non-square matrix");
    Rational t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

Vector Matrix::flatten() const {
    return data_;
}

Matrix Matrix::unflatten(const Vector& v, std::size_t rows, std::size_t cols) {
    require(v.size() == rows * cols, ErrorKind::DimensionMismatch, "flattened length mismatch");
    Matrix m(rows, cols);
    m.data_ = v;
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, ErrorKind::DimensionMismatch, "matrix shape mismatch");
    Matrix out(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, ErrorKind::DimensionMismatch, "matrix shape mismatch");
    Matrix out(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
    return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
    require(cols_ == o.rows_, ErrorKind::DimensionMismatch, "matrix product shape mismatch");
    Matrix out(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(r, k);
            if (sgn(a) == 0) continue;
            for (std::size_t c = 0; c < o.cols_; ++c) out(r, c) += a * o(k, c);
        }
    return out;
}

Vector Matrix::operator*(const Vector& v) const {
    require(cols_ == v.size(), ErrorKind::DimensionMismatch, "matrix-vector shape mismatch");
    Vector out = zero_vector(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            const Rational& a = (*this)(r, c);
            if (sgn(a) != 0) out[r] += a * v[c];
        }
    return out;
}

Matrix operator*(const Rational& s, const Matrix& m) {
    Matrix out(m);
    for (auto& x : out.data_) x *= s;
    return out;
}

// ---------------------------------------------------------------------------
// Row reduction

RrefResult rref(const Matrix& m) {
    RrefResult res{m, 0, {}};
    Matrix& a = res.reduced;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();

    std::size_t lead_row = 0;
    for (std::size_t c = 0; c < cols && lead_row < rows; ++c) {
        std::size_t pivot = lead_row;
        while (pivot < rows && sgn(a(pivot, c)) == 0) ++pivot;
        if (pivot == rows) continue;

        if (pivot != lead_row)
            for (std::size_t k = 0; k < cols; ++k) std::swap(a(pivot, k), a(lead_row, k));

        const Rational inv = 1 / a(lead_row, c);
        for (std::size_t k = c; k < cols; ++k) a(lead_row, k) *= inv;

        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead_row || sgn(a(r, c)) == 0) continue;
            const Rational factor = a(r, c);
            for (std::size_t k = c; k < cols; ++k)
                if (sgn(a(lead_row, k)) != 0) a(r, k) -= factor * a(lead_row, k);
        }
        res.pivots.push_back(c);
        ++lead_row;
    }
    res.rank = lead_row;
    return res;
}

Subspace nullspace(const Matrix& m) {
    const auto r = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : r.pivots) is_pivot[p] = true;

    std::vector<Vector> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vector v = zero_vector(n);
        v[f] = 1;
        for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced(i, f);
        basis.push_back(std::move(v));
    }
    return Subspace::span(n, basis);
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
    require(a.rows() == b.size(), ErrorKind::DimensionMismatch, "solve: right-hand side length mismatch");
    const std::size_t n = a.cols();
    Matrix aug(a.rows(), n + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
        aug(r, n) = b[r];
    }
    const auto red = rref(aug);
    if (!red.pivots.empty() && red.pivots.back() == n) return std::nullopt;

    Vector x = zero_vector(n);
    for (std::size_t i = 0; i < red.rank; ++i) x[red.pivots[i]] = red.reduced(i, n);
    return x;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors) {
    for (const auto& v : vectors)
        require(v.size() == ambient, ErrorKind::DimensionMismatch, "span: vector length mismatch");
    return from_matrix_rows(Matrix::from_rows(vectors, ambient));
}

Subspace Subspace::from_matrix_rows(const Matrix& rows) {
    const auto r = rref(rows);
    Subspace s(rows.cols());
    s.basis_ = Matrix(r.rank, rows.cols());
    for (std::size_t i = 0; i < r.rank; ++i) s.basis_.set_row(i, r.reduced.row(i));
    s.pivots_ = r.pivots;
    return s;
}

Subspace Subspace::full(std::size_t ambient) {
    Subspace s(ambient);
    s.basis_ = Matrix::identity(ambient);
    s.pivots_.resize(ambient);
    std::iota(s.pivots_.begin(), s.pivots_.end(), std::size_t{0});
    return s;
}

Subspace Subspace::coordinate(std::size_t ambient, const std::vector<std::size_t>& indices) {
    std::vector<Vector> vs;
    for (auto i : indices) {
        require(i < ambient, ErrorKind::InvalidArgument, "coordinate index out of range");
        vs.push_back(unit_vector(ambient, i));
    }
    return span(ambient, vs);
}

std::vector<Vector> Subspace::vectors() const {
    std::vector<Vector> out;
    out.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
    return out;
}

Vector Subspace::reduce(const Vector& x) const {
    require(x.size() == ambient_, ErrorKind::DimensionMismatch, "subspace: vector length mismatch");
    Vector v = x;
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        const Rational factor = v[pivots_[i]];
        if (sgn(factor) == 0) continue;
        for (std::size_t c = 0; c < ambient_; ++c)
            if (sgn(basis_(i, c)) != 0) v[c] -= factor * basis_(i, c);
    }
    return v;
}

bool Subspace::contains(const Vector& x) const {
    return leibniz::is_zero(reduce(x));
}

bool Subspace::contains(const Subspace& other) const {
    require(other.ambient_ == ambient_, ErrorKind::DimensionMismatch, "subspace ambient mismatch");
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

std::optional<Vector> Subspace::coordinates(const Vector& x) const {
    if (!contains(x)) return std::nullopt;
    // In RREF the coordinate along row i is the entry at its pivot column.
    Vector c(pivots_.size());
    for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = x[pivots_[i]];
    return c;
}

Subspace sum(const Subspace& u, const Subspace& v) {
    require(u.ambient_dim() == v.ambient_dim(), ErrorKind::DimensionMismatch, "subspace ambient mismatch");
    auto vs = u.vectors();
    for (auto& x : v.vectors()) vs.push_back(std::move(x));
    return Subspace::span(u.ambient_dim(), vs);
}

Subspace annihilator(const Subspace& u) {
    return nullspace(u.basis());
}

Subspace intersect(const Subspace& u, const Subspace& v) {
    require(u.ambient_dim() == v.ambient_dim(), ErrorKind::DimensionMismatch, "subspace ambient mismatch");
    return annihilator(sum(annihilator(u), annihilator(v)));
}

bool contains(const Subspace& u, const Vector& x) {
    return u.contains(x);
}

bool equal(const Subspace& u, const Subspace& v) {
    require(u.ambient_dim() == v.ambient_dim(), ErrorKind::DimensionMismatch, "subspace ambient mismatch");
    return u == v;
}

// ---------------------------------------------------------------------------
// Eigenvalues

Polynomial characteristic_polynomial(const Matrix& m) {
    require(m.is_square(), ErrorKind::DimensionMismatch, "characteristic polynomial of non-square matrix");
    const std::size_t n = m.rows();

    // p_{r+1}(x) = (x - a) p_r(x) - sum_i x^i sum_{j>i} c_j * (R A^{j-1-i} C),
    // where A is the leading r x r block, R/C its bordering row/column and
    // a the new diagonal entry. Only ring operations are used.
    Polynomial p{Rational(1)};
    for (std::size_t r = 0; r < n; ++r) {
        const Rational& a = m(r, r);

        std::vector<Rational> s(r);  // s[k] = R * A^k * C
        Vector w(r);
        for (std::size_t i = 0; i < r; ++i) w[i] = m(i, r);
        for (std::size_t k = 0; k < r; ++k) {
            Rational acc = 0;
            for (std::size_t i = 0; i < r; ++i) acc += m(r, i) * w[i];
            s[k] = acc;
            Vector next(r, Rational(0));
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) next[i] += m(i, j) * w[j];
            w = std::move(next);
        }

        Polynomial q(r + 2, Rational(0));
        for (std::size_t j = 0; j <= r; ++j) {
            q[j + 1] += p[j];
            q[j] -= a * p[j];
        }
        for (std::size_t i = 0; i < r; ++i) {
            Rational acc = 0;
            for (std::size_t j = i + 1; j <= r; ++j) acc += p[j] * s[j - 1 - i];
            q[i] -= acc;
        }
        p = std::move(q);
    }
    return p;
}

namespace {

Rational evaluate(const Polynomial& p, const Rational& x) {
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// Synthetic division by (x - root); the remainder is assumed zero.
Polynomial deflate(const Polynomial& p, const Rational& root) {
    const std::size_t deg = p.size() - 1;
    Polynomial q(deg, Rational(0));
    Rational carry = 0;
    for (std::size_t i = deg; i-- > 0;) {
        carry = p[i + 1] + carry * root;
        q[i] = carry;
    }
    return q;
}

std::vector<mpz_class> positive_divisors(mpz_class n) {
    n = abs(n);
    std::vector<std::pair<mpz_class, unsigned>> factors;
    for (mpz_class d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        factors.emplace_back(d, e);
    }
    if (n > 1) factors.emplace_back(n, 1);

    std::vector<mpz_class> divs{1};
    for (const auto& [prime, exp] : factors) {
        const std::size_t count = divs.size();
        mpz_class power = 1;
        for (unsigned e = 1; e <= exp; ++e) {
            power *= prime;
            for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * power);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

Polynomial trim(Polynomial p) {
    while (p.size() > 1 && sgn(p.back()) == 0) p.pop_back();
    return p;
}

}  // namespace

std::vector<Rational> rational_roots(const Polynomial& input) {
    Polynomial p = trim(input);
    std::vector<Rational> roots;
    if (p.size() <= 1) return roots;

    if (sgn(p[0]) == 0) {
        roots.emplace_back(0);
        while (p.size() > 1 && sgn(p[0]) == 0) p.erase(p.begin());
    }

    // Scale to integer coefficients.
    mpz_class lcm = 1;
    for (const auto& c : p) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    for (auto& c : p) c *= lcm;

    while (p.size() > 1) {
        const mpz_class lead = p.back().get_num();
        const mpz_class tail = p.front().get_num();
        const auto num_divs = positive_divisors(tail);
        const auto den_divs = positive_divisors(lead);

        std::optional<Rational> found;
        for (const auto& q : den_divs) {
            for (const auto& n : num_divs) {
                for (int sign : {1, -1}) {
                    Rational candidate(sign * n, q);
                    candidate.canonicalize();
                    if (sgn(evaluate(p, candidate)) == 0) {
                        found = candidate;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) break;
        roots.push_back(*found);
        // Remove every copy of the root so repeated roots are listed once.
        while (p.size() > 1 && sgn(evaluate(p, *found)) == 0) p = deflate(p, *found);
        if (p.size() > 1) {
            mpz_class den = 1;
            for (const auto& c : p) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
            for (auto& c : p) c *= den;
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

EigenResult rational_eigen(const Matrix& m) {
    require(m.is_square(), ErrorKind::DimensionMismatch, "eigen-decomposition of non-square matrix");
    const std::size_t n = m.rows();
    EigenResult out;
    std::size_t total = 0;
    for (const auto& lambda : rational_roots(characteristic_polynomial(m))) {
        auto space = nullspace(m - lambda * Matrix::identity(n));
        total += space.dim();
        out.pairs.push_back({lambda, std::move(space)});
    }
    out.incomplete = total < n;
    return out;
}

// ---------------------------------------------------------------------------
// SparseEliminator

bool SparseEliminator::add_row(SparseRow row) {
    for (auto it = row.begin(); it != row.end();) {
        if (sgn(it->second) == 0) {
            it = row.erase(it);
            continue;
        }
        require(it->first < unknowns_, ErrorKind::DimensionMismatch, "sparse row column out of range");
        ++it;
    }

    // Pivot rows only carry entries at columns >= their pivot, so a single
    // ascending sweep eliminates every pivot column present in the row.
    for (auto it = row.begin(); it != row.end();) {
        auto pivot = pivot_rows_.find(it->first);
        if (pivot == pivot_rows_.end()) {
            ++it;
            continue;
        }
        const Rational factor = it->second;
        const std::size_t col = it->first;
        for (const auto& [c, value] : pivot->second) {
            auto& target = row[c];
            target -= factor * value;
        }
        // Drop cancelled entries at or beyond the pivot column.
        for (auto jt = row.find(col); jt != row.end();) {
            if (sgn(jt->second) == 0)
                jt = row.erase(jt);
            else
                ++jt;
        }
        it = row.upper_bound(col);
    }
    if (row.empty()) return false;

    const std::size_t lead = row.begin()->first;
    const Rational inv = 1 / row.begin()->second;
    for (auto& entry : row) entry.second *= inv;
    pivot_rows_.emplace(lead, std::move(row));
    return true;
}

Subspace SparseEliminator::nullspace() const {
    // Back-substitute into reduced form, highest pivot first.
    std::map<std::size_t, SparseRow> reduced;
    for (auto it = pivot_rows_.rbegin(); it != pivot_rows_.rend(); ++it) {
        SparseRow row = it->second;
        std::vector<std::size_t> hits;
        for (const auto& [c, value] : row)
            if (c != it->first && reduced.count(c)) hits.push_back(c);
        for (auto c : hits) {
            const Rational factor = row[c];
            for (const auto& [k, value] : reduced.at(c)) row[k] -= factor * value;
        }
        for (auto jt = row.begin(); jt != row.end();) {
            if (sgn(jt->second) == 0)
                jt = row.erase(jt);
            else
                ++jt;
        }
        reduced.emplace(it->first, std::move(row));
    }

    std::vector<Vector> basis;
    for (std::size_t f = 0; f < unknowns_; ++f) {
        if (reduced.count(f)) continue;
        Vector v = zero_vector(unknowns_);
        v[f] = 1;
        for (const auto& [p, row] : reduced) {
            auto hit = row.find(f);
            if (hit != row.end()) v[p] = -hit->second;
        }
        basis.push_back(std::move(v));
    }
    return Subspace::span(unknowns_, basis);
}

}  // namespace leibniz
