#include <leibniz/derivations.hpp>
#include <leibniz/error.hpp>

#include <algorithm>

namespace leibniz {

const char* to_string(DeltaClass c) noexcept {
    switch (c) {
        case DeltaClass::Zero: return "zero";
        case DeltaClass::EqualsI: return "equals-I";
        case DeltaClass::Other: return "other";
    }
    return "other";
}

namespace {

struct Coefficient {
    std::size_t index;
    Rational c;
};

// by_right[j * n + k]: (l, c) with c = coordinate k of [b_l, b_j].
// by_left[i * n + k]:  (l, c) with c = coordinate k of [b_i, b_l].
struct CoefficientIndex {
    std::vector<std::vector<Coefficient>> by_right;
    std::vector<std::vector<Coefficient>> by_left;

    explicit CoefficientIndex(const Algebra& alg) {
        const std::size_t n = alg.dim();
        by_right.resize(n * n);
        by_left.resize(n * n);
        for (std::size_t l = 0; l < n; ++l)
            for (std::size_t j = 0; j < n; ++j)
                for (const auto& t : alg.structure(l, j)) {
                    by_right[j * n + t.k].push_back({l, t.c});
                    by_left[l * n + t.k].push_back({j, t.c});
                }
    }
};

}  // namespace

DerivationBasis derivation_algebra(const Algebra& alg) {
    require_leibniz(alg);
    const std::size_t n = alg.dim();
    const CoefficientIndex index(alg);
    SparseEliminator system(n * n);
    auto unknown = [n](std::size_t r, std::size_t c) { return r * n + c; };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                SparseEliminator::SparseRow row;
                for (const auto& t : alg.structure(i, j)) row[unknown(k, t.k)] += t.c;
                for (const auto& [l, c] : index.by_right[j * n + k]) row[unknown(l, i)] -= c;
                for (const auto& [l, c] : index.by_left[i * n + k]) row[unknown(l, j)] -= c;
                system.add_row(std::move(row));
            }

    DerivationBasis out;
    out.dim = n;
    out.span = system.nullspace();
    for (const auto& v : out.span.vectors()) out.maps.push_back(Matrix::unflatten(v, n, n));
    return out;
}

Subspace inner_derivations(const Algebra& alg) {
    const std::size_t n = alg.dim();
    std::vector<Vector> maps;
    for (std::size_t i = 0; i < n; ++i) maps.push_back(right_mult(alg, unit_vector(n, i)).flatten());
    return Subspace::span(n * n, maps);
}

std::vector<PairDefect> derivation_defects(const Algebra& alg, const LinearMap& d) {
    const std::size_t n = alg.dim();
    if (d.rows() != n || d.cols() != n) throw Error(ErrorKind::DimensionMismatch, "derivation map has wrong shape");
    std::vector<PairDefect> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto defect = d * alg.basis_product(i, j) - alg.product(d.col(i), unit_vector(n, j)) -
                          alg.product(unit_vector(n, i), d.col(j));
            if (!is_zero(defect)) out.push_back({i, j, std::move(defect)});
        }
    return out;
}

bool is_derivation(const Algebra& alg, const LinearMap& d) {
    return derivation_defects(alg, d).empty();
}

GradedParts graded_components(const LinearMap& d, const LeviDatum& levi) {
    const std::size_t n = d.rows();
    std::vector<bool> in_g(n, false);
    for (auto g : levi.g_indices) in_g.at(g) = true;

    GradedParts parts{Matrix(n, n), Matrix(n, n), Matrix(n, n)};
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            if (sgn(d(r, c)) == 0) continue;
            if (in_g[r] == in_g[c])
                parts.d0(r, c) = d(r, c);
            else if (in_g[c])
                parts.d1(r, c) = d(r, c);
            else
                parts.dminus1(r, c) = d(r, c);
        }
    return parts;
}

DerivationDecomposition decompose(const Algebra& alg, const LeviDatum& levi, const LinearMap& d) {
    validate_levi(alg, levi);
    if (!is_derivation(alg, d)) throw Error(ErrorKind::InvalidArgument, "decompose: map is not a derivation");
    return decompose_unchecked(alg, levi, d);
}

DerivationDecomposition decompose_unchecked(const Algebra& alg, const LeviDatum& levi, const LinearMap& d) {
    const std::size_t n = alg.dim();
    const auto& g = levi.g_indices;
    const auto& ideal = levi.i_indices;
    const auto parts = graded_components(d, levi);
    if (!parts.dminus1.is_zero())
        throw Error(ErrorKind::NonZeroMinusOne, "derivation maps I into G (nonzero d_-1 block)");

    // R_a restricted G -> G equals the G -> G block of d: for every column
    // j in G and row r in G, sum_g a_g c_{j g}^r = d(r, j).
    Matrix system(g.size() * g.size(), g.size());
    Vector rhs(g.size() * g.size());
    for (std::size_t cj = 0; cj < g.size(); ++cj)
        for (std::size_t rr = 0; rr < g.size(); ++rr) {
            const std::size_t eq = cj * g.size() + rr;
            rhs[eq] = d(g[rr], g[cj]);
            for (std::size_t ag = 0; ag < g.size(); ++ag)
                for (const auto& t : alg.structure(g[cj], g[ag]))
                    if (t.k == g[rr]) system(eq, ag) += t.c;
        }
    const auto coeffs = solve(system, rhs);
    if (!coeffs) throw Error(ErrorKind::NoInnerMatch, "no a in G reproduces d on G; G is not semisimple or the datum is invalid");

    DerivationDecomposition out;
    out.original = d;
    out.a = zero_vector(n);
    for (std::size_t ag = 0; ag < g.size(); ++ag) out.a[g[ag]] = (*coeffs)[ag];

    const Matrix inner = right_mult(alg, out.a);
    const Matrix rest = parts.d0 - inner;
    out.alpha = Matrix(n, n);
    for (auto c : ideal)
        for (auto r : ideal) out.alpha(r, c) = rest(r, c);
    out.delta = parts.d1;

    if (inner + out.alpha + out.delta != d)
        throw Error(ErrorKind::Verification, "decomposition does not reconstruct the derivation");
    return out;
}

std::vector<PairDefect> verify_alpha_module_map(const Algebra& alg, const LeviDatum& levi, const LinearMap& alpha) {
    const std::size_t n = alg.dim();
    for (auto g : levi.g_indices)
        if (!is_zero(alpha.col(g))) throw Error(ErrorKind::InvalidArgument, "alpha does not vanish on G");
    for (auto g : levi.g_indices)
        for (auto c : levi.i_indices)
            if (sgn(alpha(g, c)) != 0) throw Error(ErrorKind::InvalidArgument, "alpha does not map I into I");

    std::vector<PairDefect> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto defect = alpha * alg.basis_product(i, j) - alg.product(alpha.col(i), unit_vector(n, j));
            if (!is_zero(defect)) out.push_back({i, j, std::move(defect)});
        }
    return out;
}

std::optional<Rational> scalar_on_component(const LinearMap& alpha, const Subspace& component) {
    if (component.is_zero()) return Rational(0);
    const auto vs = component.vectors();
    // Canonical basis rows carry 1 at their pivot.
    const Rational lambda = (alpha * vs.front())[component.pivots().front()];
    for (const auto& v : vs)
        if (alpha * v != lambda * v) return std::nullopt;
    return lambda;
}

AlphaBlockReport alpha_analysis(const Algebra& alg, const LeviDatum& levi, const LinearMap& alpha,
                                const std::vector<Subspace>& components) {
    const std::size_t n = alg.dim();
    const auto ideal = Subspace::coordinate(n, levi.i_indices);

    std::vector<Vector> all;
    std::vector<std::size_t> offsets{0};
    Subspace total(n);
    for (const auto& c : components) {
        if (c.ambient_dim() != n) throw Error(ErrorKind::DimensionMismatch, "component ambient mismatch");
        for (auto& v : c.vectors()) all.push_back(std::move(v));
        offsets.push_back(all.size());
        total = sum(total, c);
    }
    if (total != ideal || all.size() != ideal.dim())
        throw Error(ErrorKind::NotDirectSum, "components are not a direct-sum decomposition of I");

    const Matrix basis_cols = Matrix::from_rows(all, n).transpose();
    const std::size_t s = components.size();
    AlphaBlockReport report;
    report.blocks.assign(s, std::vector<Matrix>(s));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) report.blocks[i][j] = Matrix(offsets[j + 1] - offsets[j], offsets[i + 1] - offsets[i]);

    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t col = offsets[i]; col < offsets[i + 1]; ++col) {
            const auto image = alpha * all[col];
            const auto coords = solve(basis_cols, image);
            if (!coords) throw Error(ErrorKind::InvalidArgument, "alpha does not map I into I");
            for (std::size_t j = 0; j < s; ++j)
                for (std::size_t row = offsets[j]; row < offsets[j + 1]; ++row)
                    report.blocks[i][j](row - offsets[j], col - offsets[i]) = (*coords)[row];
        }

    for (std::size_t i = 0; i < s; ++i) {
        const Matrix& diag = report.blocks[i][i];
        const Rational lambda = diag.rows() ? diag(0, 0) : Rational(0);
        report.scalars.push_back(diag == lambda * Matrix::identity(diag.rows()) ? std::optional<Rational>(lambda)
                                                                               : std::nullopt);
        for (std::size_t j = 0; j < s; ++j)
            if (i != j && !report.blocks[i][j].is_zero()) report.off_diagonal_zero = false;
    }
    return report;
}

DeltaReport delta_analysis(const Algebra& alg, const LeviDatum& levi, const LinearMap& delta) {
    const std::size_t n = alg.dim();
    for (auto c : levi.i_indices)
        if (!is_zero(delta.col(c))) throw Error(ErrorKind::InvalidArgument, "delta does not vanish on I");

    DeltaReport report;
    std::vector<Vector> images;
    for (auto g : levi.g_indices) images.push_back(delta.col(g));
    report.span = Subspace::span(n, images);

    for (auto i : levi.g_indices)
        for (auto j : levi.g_indices) {
            auto defect = delta * alg.basis_product(i, j) - alg.product(delta.col(i), unit_vector(n, j));
            if (!is_zero(defect)) report.module_defects.push_back({i, j, std::move(defect)});
        }

    const auto ideal = Subspace::coordinate(n, levi.i_indices);
    if (report.span.is_zero())
        report.classification = DeltaClass::Zero;
    else if (report.span == ideal)
        report.classification = DeltaClass::EqualsI;
    else
        report.classification = DeltaClass::Other;
    return report;
}

OuterReport outer_report(const Algebra& alg) {
    return outer_report(alg, derivation_algebra(alg));
}

OuterReport outer_report(const Algebra& alg, const DerivationBasis& der) {
    const auto inner = inner_derivations(alg);
    if (!der.span.contains(inner))
        throw Error(ErrorKind::Verification, "inner derivations are not contained in Der(L)");
    return {der.span.dim(), inner.dim(), der.span.dim() - inner.dim()};
}

}  // namespace leibniz
