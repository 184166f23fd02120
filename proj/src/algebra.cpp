#include <leibniz/algebra.hpp>
#include <leibniz/error.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace leibniz {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::DimensionMismatch: return "dimension-mismatch";
        case ErrorKind::InvalidArgument: return "invalid-argument";
        case ErrorKind::Schema: return "schema";
        case ErrorKind::Structural: return "structural";
        case ErrorKind::InvalidLevi: return "invalid-levi";
        case ErrorKind::NotAnIdeal: return "not-an-ideal";
        case ErrorKind::NonLie: return "non-lie";
        case ErrorKind::RadicalNonzero: return "radical-nonzero";
        case ErrorKind::NonZeroMinusOne: return "nonzero-minus-one";
        case ErrorKind::NoInnerMatch: return "no-inner-match";
        case ErrorKind::NotInvariant: return "not-invariant";
        case ErrorKind::NotDirectSum: return "not-direct-sum";
        case ErrorKind::Verification: return "verification";
        case ErrorKind::MissingLevi: return "missing-levi";
        case ErrorKind::Io: return "io";
    }
    return "unknown";
}

const char* to_string(Certainty c) noexcept {
    switch (c) {
        case Certainty::Yes: return "yes";
        case Certainty::No: return "no";
        case Certainty::Unknown: return "unknown";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------
// Algebra

Algebra::Algebra(std::string name, std::vector<std::string> basis, const std::vector<ProductEntry>& products)
    : name_(std::move(name)), basis_(std::move(basis)), table_(basis_.size() * basis_.size()) {
    const std::size_t n = basis_.size();
    for (const auto& entry : products) {
        if (entry.left >= n || entry.right >= n)
            throw Error(ErrorKind::InvalidArgument, "product index out of range");
        std::map<std::size_t, Rational> merged;
        for (const auto& t : table_[entry.left * n + entry.right]) merged[t.k] += t.c;
        for (const auto& t : entry.result) {
            if (t.k >= n) throw Error(ErrorKind::InvalidArgument, "product result index out of range");
            merged[t.k] += t.c;
        }
        std::vector<Term> terms;
        for (const auto& [k, c] : merged)
            if (sgn(c) != 0) terms.push_back({k, c});
        table_[entry.left * n + entry.right] = std::move(terms);
    }
}

const std::vector<Term>& Algebra::structure(std::size_t i, std::size_t j) const {
    if (i >= dim() || j >= dim()) throw Error(ErrorKind::InvalidArgument, "basis index out of range");
    return table_[i * dim() + j];
}

std::vector<ProductEntry> Algebra::products() const {
    std::vector<ProductEntry> out;
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j)
            if (!table_[i * dim() + j].empty()) out.push_back({i, j, table_[i * dim() + j]});
    return out;
}

Vector Algebra::basis_product(std::size_t i, std::size_t j) const {
    Vector v = zero_vector(dim());
    for (const auto& t : structure(i, j)) v[t.k] = t.c;
    return v;
}

Vector Algebra::product(const Vector& x, const Vector& y) const {
    if (x.size() != dim() || y.size() != dim())
        throw Error(ErrorKind::DimensionMismatch, "product: vector length differs from algebra dimension");
    Vector out = zero_vector(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < dim(); ++j) {
            if (sgn(y[j]) == 0) continue;
            const Rational s = x[i] * y[j];
            for (const auto& t : table_[i * dim() + j]) out[t.k] += s * t.c;
        }
    }
    return out;
}

Algebra Algebra::renamed(std::string name) const {
    Algebra copy = *this;
    copy.name_ = std::move(name);
    return copy;
}

Algebra abelian_algebra(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("a_" + std::to_string(i));
    return Algebra("abelian_" + std::to_string(n), std::move(names), {});
}

// ---------------------------------------------------------------------------
// Identities

std::vector<LeibnizViolation> leibniz_check(const Algebra& alg) {
    const std::size_t n = alg.dim();
    std::vector<LeibnizViolation> out;
    for (std::size_t i = 0; i < n; ++i) {
        const Vector bi = unit_vector(n, i);
        for (std::size_t j = 0; j < n; ++j) {
            const Vector bj = unit_vector(n, j);
            const Vector ij = alg.basis_product(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                const Vector bk = unit_vector(n, k);
                Vector defect = alg.product(bi, alg.basis_product(j, k)) - alg.product(ij, bk) +
                                alg.product(alg.basis_product(i, k), bj);
                if (!is_zero(defect)) out.push_back({i, j, k, std::move(defect)});
            }
        }
    }
    return out;
}

void require_leibniz(const Algebra& alg) {
    const auto violations = leibniz_check(alg);
    if (violations.empty()) return;
    const auto& v = violations.front();
    std::ostringstream msg;
    msg << "Leibniz identity fails on (" << alg.basis_names()[v.i] << ", " << alg.basis_names()[v.j] << ", "
        << alg.basis_names()[v.k] << ")";
    if (violations.size() > 1) msg << " and " << violations.size() - 1 << " other triple(s)";
    throw Error(ErrorKind::Structural, msg.str());
}

bool is_lie(const Algebra& alg) {
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t j = i; j < alg.dim(); ++j)
            if (!is_zero(alg.basis_product(i, j) + alg.basis_product(j, i))) return false;
    return true;
}

LinearMap right_mult(const Algebra& alg, const Vector& z) {
    const std::size_t n = alg.dim();
    if (z.size() != n) throw Error(ErrorKind::DimensionMismatch, "right_mult: vector length mismatch");
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) m.set_col(j, alg.product(unit_vector(n, j), z));
    return m;
}

LinearMap left_mult(const Algebra& alg, const Vector& z) {
    const std::size_t n = alg.dim();
    if (z.size() != n) throw Error(ErrorKind::DimensionMismatch, "left_mult: vector length mismatch");
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) m.set_col(j, alg.product(z, unit_vector(n, j)));
    return m;
}

// ---------------------------------------------------------------------------
// Subspaces of L

Subspace product_space(const Algebra& alg, const Subspace& u, const Subspace& v) {
    std::vector<Vector> out;
    for (const auto& x : u.vectors())
        for (const auto& y : v.vectors()) {
            auto p = alg.product(x, y);
            if (!is_zero(p)) out.push_back(std::move(p));
        }
    return Subspace::span(alg.dim(), out);
}

bool is_subalgebra(const Algebra& alg, const Subspace& s) {
    return s.contains(product_space(alg, s, s));
}

bool is_ideal(const Algebra& alg, const Subspace& s) {
    const auto whole = Subspace::full(alg.dim());
    return s.contains(product_space(alg, s, whole)) && s.contains(product_space(alg, whole, s));
}

Subspace squares_ideal(const Algebra& alg) {
    const std::size_t n = alg.dim();
    std::vector<Vector> squares;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            auto s = alg.basis_product(i, j) + alg.basis_product(j, i);
            if (!is_zero(s)) squares.push_back(std::move(s));
        }
    auto ideal = Subspace::span(n, squares);
    if (!is_ideal(alg, ideal))
        throw Error(ErrorKind::Structural, "span of squares is not a two-sided ideal");
    if (!product_space(alg, Subspace::full(n), ideal).is_zero())
        throw Error(ErrorKind::Structural, "[L, I] != 0 for the span of squares");
    return ideal;
}

Subspace ideal_closure(const Algebra& alg, const Subspace& s) {
    const std::size_t n = alg.dim();
    Subspace current = s;
    for (;;) {
        std::vector<Vector> gens = current.vectors();
        for (const auto& v : current.vectors())
            for (std::size_t i = 0; i < n; ++i) {
                const auto b = unit_vector(n, i);
                gens.push_back(alg.product(v, b));
                gens.push_back(alg.product(b, v));
            }
        auto next = Subspace::span(n, gens);
        if (next.dim() == current.dim()) return next;
        current = std::move(next);
    }
}

std::vector<Subspace> derived_series(const Algebra& alg, const std::optional<Subspace>& s) {
    std::vector<Subspace> series{s ? *s : Subspace::full(alg.dim())};
    for (;;) {
        auto next = product_space(alg, series.back(), series.back());
        if (next == series.back()) break;
        series.push_back(std::move(next));
    }
    return series;
}

bool is_solvable(const Algebra& alg, const std::optional<Subspace>& s) {
    return derived_series(alg, s).back().is_zero();
}

Quotient quotient_algebra(const Algebra& alg, const Subspace& ideal) {
    const std::size_t n = alg.dim();
    if (ideal.ambient_dim() != n) throw Error(ErrorKind::DimensionMismatch, "quotient: ambient mismatch");
    if (!is_ideal(alg, ideal)) throw Error(ErrorKind::NotAnIdeal, "quotient: subspace is not a two-sided ideal");

    std::vector<bool> pivot(n, false);
    for (auto p : ideal.pivots()) pivot[p] = true;
    Quotient q;
    for (std::size_t i = 0; i < n; ++i)
        if (!pivot[i]) q.complement.push_back(i);

    const std::size_t m = q.complement.size();
    auto image = [&](const Vector& v) {
        const auto r = ideal.reduce(v);
        Vector out(m);
        for (std::size_t a = 0; a < m; ++a) out[a] = r[q.complement[a]];
        return out;
    };

    q.projection = Matrix(m, n);
    for (std::size_t j = 0; j < n; ++j) q.projection.set_col(j, image(unit_vector(n, j)));

    std::vector<std::string> names;
    for (auto c : q.complement) names.push_back(alg.basis_names()[c]);
    std::vector<ProductEntry> entries;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            const auto v = image(alg.basis_product(q.complement[a], q.complement[b]));
            ProductEntry e{a, b, {}};
            for (std::size_t k = 0; k < m; ++k)
                if (sgn(v[k]) != 0) e.result.push_back({k, v[k]});
            if (!e.result.empty()) entries.push_back(std::move(e));
        }
    q.algebra = Algebra(alg.name() + "/I", std::move(names), entries);
    return q;
}

// ---------------------------------------------------------------------------
// Radical

BilinearForm killing_form(const Algebra& lie) {
    if (!is_lie(lie)) throw Error(ErrorKind::NonLie, "Killing form requires a Lie algebra");
    const std::size_t n = lie.dim();
    std::vector<Matrix> r;
    for (std::size_t i = 0; i < n; ++i) r.push_back(right_mult(lie, unit_vector(n, i)));
    Matrix gram(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            gram(i, j) = (r[i] * r[j]).trace();
            gram(j, i) = gram(i, j);
        }
    return {gram};
}

Subspace lie_radical(const Algebra& lie) {
    const auto form = killing_form(lie);
    const auto whole = Subspace::full(lie.dim());
    const auto derived = product_space(lie, whole, whole);
    return nullspace(derived.basis() * form.gram);
}

Subspace solvable_radical(const Algebra& alg) {
    require_leibniz(alg);
    const auto ideal = squares_ideal(alg);
    const auto q = quotient_algebra(alg, ideal);
    const auto rad = lie_radical(q.algebra);

    std::vector<Vector> gens = ideal.vectors();
    for (const auto& v : rad.vectors()) {
        Vector lift = zero_vector(alg.dim());
        for (std::size_t a = 0; a < v.size(); ++a) lift[q.complement[a]] = v[a];
        gens.push_back(std::move(lift));
    }
    auto radical = Subspace::span(alg.dim(), gens);
    if (!is_ideal(alg, radical) || !is_solvable(alg, radical))
        throw Error(ErrorKind::Verification, "computed radical is not a solvable ideal");
    return radical;
}

bool is_semisimple(const Algebra& alg) {
    return solvable_radical(alg) == squares_ideal(alg);
}

// ---------------------------------------------------------------------------
// Centroid and simple summands

std::vector<LinearMap> centroid(const Algebra& alg) {
    const std::size_t n = alg.dim();
    SparseEliminator system(n * n);
    auto unknown = [n](std::size_t r, std::size_t c) { return r * n + c; };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                // c([b_i,b_j])_k - [c(b_i), b_j]_k and c([b_i,b_j])_k - [b_i, c(b_j)]_k
                SparseEliminator::SparseRow left, right;
                for (const auto& t : alg.structure(i, j)) {
                    left[unknown(k, t.k)] += t.c;
                    right[unknown(k, t.k)] += t.c;
                }
                for (std::size_t r = 0; r < n; ++r) {
                    for (const auto& t : alg.structure(r, j))
                        if (t.k == k) left[unknown(r, i)] -= t.c;
                    for (const auto& t : alg.structure(i, r))
                        if (t.k == k) right[unknown(r, j)] -= t.c;
                }
                system.add_row(std::move(left));
                system.add_row(std::move(right));
            }

    std::vector<LinearMap> out;
    for (const auto& v : system.nullspace().vectors()) out.push_back(Matrix::unflatten(v, n, n));
    return out;
}

SummandResult simple_summands(const Algebra& lie) {
    const std::size_t n = lie.dim();
    if (!lie_radical(lie).is_zero()) throw Error(ErrorKind::RadicalNonzero, "simple_summands: radical is nonzero");
    SummandResult out;
    if (n == 0) return out;

    const auto cent = centroid(lie);
    if (cent.size() <= 1) {
        out.summands.push_back(Subspace::full(n));
        return out;
    }

    // Deterministic sweep over c = sum_j t^j C_j.
    for (long t = 2; t < static_cast<long>(cent.size()) + 12; ++t) {
        Matrix c(n, n);
        Rational weight = 1;
        for (const auto& basis_map : cent) {
            c = c + weight * basis_map;
            weight *= t;
        }
        const auto eig = rational_eigen(c);
        if (eig.incomplete || eig.pairs.size() != cent.size()) continue;
        std::vector<Subspace> parts;
        bool all_ideals = true;
        for (const auto& pair : eig.pairs) {
            if (!is_ideal(lie, pair.space)) {
                all_ideals = false;
                break;
            }
            parts.push_back(pair.space);
        }
        if (!all_ideals) continue;
        std::sort(parts.begin(), parts.end(),
                  [](const Subspace& a, const Subspace& b) { return a.pivots().front() < b.pivots().front(); });
        out.summands = std::move(parts);
        return out;
    }
    out.determined = false;
    out.summands.push_back(Subspace::full(n));
    return out;
}

// ---------------------------------------------------------------------------
// Direct sums

DirectSum direct_sum(const Algebra& a, const Algebra& b, const std::optional<LeviDatum>& levi_a,
                     const std::optional<LeviDatum>& levi_b) {
    const std::size_t na = a.dim();
    std::vector<std::string> names;
    for (const auto& s : a.basis_names()) names.push_back(s + ".1");
    for (const auto& s : b.basis_names()) names.push_back(s + ".2");

    std::vector<ProductEntry> entries = a.products();
    for (auto e : b.products()) {
        e.left += na;
        e.right += na;
        for (auto& t : e.result) t.k += na;
        entries.push_back(std::move(e));
    }

    DirectSum out{Algebra(a.name() + "+" + b.name(), std::move(names), entries), std::nullopt};
    if (levi_a && levi_b) {
        LeviDatum levi = *levi_a;
        for (auto g : levi_b->g_indices) levi.g_indices.push_back(g + na);
        for (auto i : levi_b->i_indices) levi.i_indices.push_back(i + na);
        for (auto t : levi_b->sl2_triples) levi.sl2_triples.push_back({t[0] + na, t[1] + na, t[2] + na});
        out.levi = std::move(levi);
    }
    return out;
}

}  // namespace leibniz
