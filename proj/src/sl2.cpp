#include <leibniz/sl2.hpp>
#include <leibniz/error.hpp>

#include <algorithm>

namespace leibniz {

Sl2Triple Sl2Triple::from_indices(std::size_t dim, const std::array<std::size_t, 3>& efh) {
    return {unit_vector(dim, efh[0]), unit_vector(dim, efh[1]), unit_vector(dim, efh[2])};
}

std::vector<std::string> check_sl2_triple(const Algebra& alg, const Sl2Triple& t) {
    std::vector<std::string> failures;
    auto expect = [&](const Vector& got, const Vector& want, const char* relation) {
        if (got != want) failures.emplace_back(relation);
    };
    expect(alg.product(t.e, t.h), Rational(2) * t.e, "[e,h] = 2e");
    expect(alg.product(t.h, t.e), Rational(-2) * t.e, "[h,e] = -2e");
    expect(alg.product(t.e, t.f), t.h, "[e,f] = h");
    expect(alg.product(t.f, t.e), Rational(-1) * t.h, "[f,e] = -h");
    expect(alg.product(t.h, t.f), Rational(2) * t.f, "[h,f] = 2f");
    expect(alg.product(t.f, t.h), Rational(-2) * t.f, "[f,h] = -2f");
    return failures;
}

std::vector<std::string> check_sl2_triple(const Algebra& alg, const LeviDatum& levi, const Sl2Triple& t) {
    auto failures = check_sl2_triple(alg, t);
    const auto g = Subspace::coordinate(alg.dim(), levi.g_indices);
    for (const auto* v : {&t.e, &t.f, &t.h})
        if (!g.contains(*v)) {
            failures.emplace_back("triple element not supported on G");
            break;
        }
    return failures;
}

Matrix restricted_right_action(const Algebra& alg, const Subspace& module, const Vector& g) {
    const auto basis = module.vectors();
    Matrix m(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        auto coords = module.coordinates(alg.product(basis[i], g));
        if (!coords) throw Error(ErrorKind::NotInvariant, "subspace is not invariant under the right action");
        m.set_col(i, *coords);
    }
    return m;
}

namespace {

// Lifts module coordinates back to the ambient space.
Vector lift(const Subspace& module, const Vector& coords) {
    Vector v = zero_vector(module.ambient_dim());
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (sgn(coords[i]) == 0) continue;
        v = v + coords[i] * module.basis().row(i);
    }
    return v;
}

}  // namespace

WeightDecomposition weight_decomposition(const Algebra& alg, const Subspace& module, const Sl2Triple& t) {
    WeightDecomposition out;
    if (module.is_zero()) return out;
    const auto eig = rational_eigen(restricted_right_action(alg, module, t.h));
    out.incomplete = eig.incomplete;
    for (const auto& pair : eig.pairs) {
        std::vector<Vector> vs;
        for (const auto& c : pair.space.vectors()) vs.push_back(lift(module, c));
        out.spaces.push_back({pair.value, Subspace::span(module.ambient_dim(), vs)});
    }
    return out;
}

std::vector<HighestWeightVector> highest_weight_vectors(const Algebra& alg, const Subspace& module,
                                                        const Sl2Triple& t) {
    std::vector<HighestWeightVector> out;
    const auto weights = weight_decomposition(alg, module, t);
    if (weights.incomplete) throw Error(ErrorKind::Verification, "weight decomposition is incomplete over Q");

    const Matrix raise = right_mult(alg, t.e);
    for (auto it = weights.spaces.rbegin(); it != weights.spaces.rend(); ++it) {
        const Matrix basis_cols = it->space.basis().transpose();
        const auto kernel = nullspace(raise * basis_cols);
        std::vector<Vector> vs;
        for (const auto& c : kernel.vectors()) vs.push_back(basis_cols * c);
        for (auto& v : Subspace::span(module.ambient_dim(), vs).vectors()) out.push_back({it->weight, std::move(v)});
    }
    return out;
}

ModuleDecomposition irreducible_decomposition_sl2(const Algebra& alg, const Subspace& module, const Sl2Triple& t) {
    ModuleDecomposition out;
    for (const auto& hw : highest_weight_vectors(alg, module, t)) {
        if (hw.weight.get_den() != 1 || sgn(hw.weight) < 0)
            throw Error(ErrorKind::Verification, "highest weight is not a non-negative integer");
        const long weight = hw.weight.get_num().get_si();

        std::vector<Vector> chain{hw.vector};
        for (std::size_t step = 0; step < module.dim(); ++step) {
            auto next = alg.product(chain.back(), t.f);
            if (is_zero(next)) break;
            chain.push_back(std::move(next));
        }
        auto space = Subspace::span(module.ambient_dim(), chain);
        if (space.dim() != static_cast<std::size_t>(weight) + 1)
            throw Error(ErrorKind::Verification, "spun component dimension differs from highest weight + 1");
        out.components.push_back({weight, std::move(space)});
    }

    std::sort(out.components.begin(), out.components.end(), [](const ModuleComponent& a, const ModuleComponent& b) {
        if (a.highest_weight != b.highest_weight) return a.highest_weight > b.highest_weight;
        return a.space.pivots().front() < b.space.pivots().front();
    });

    Subspace total(module.ambient_dim());
    std::size_t dims = 0;
    for (const auto& c : out.components) {
        total = sum(total, c.space);
        dims += c.space.dim();
    }
    if (total != module || dims != module.dim())
        throw Error(ErrorKind::Verification, "irreducible components do not exhaust the module as a direct sum");
    return out;
}

ConditionsReport verify_conditions_abc(const Algebra& alg, const LeviDatum& levi) {
    if (levi.sl2_triples.size() < 2)
        throw Error(ErrorKind::InvalidLevi, "conditions (a)-(c) need two declared sl2 triples");
    const std::size_t n = alg.dim();
    ConditionsReport report;

    const auto t1 = Sl2Triple::from_indices(n, levi.sl2_triples[0]);
    const auto t2 = Sl2Triple::from_indices(n, levi.sl2_triples[1]);
    const auto ideal = squares_ideal(alg);

    // (a)
    {
        bool ok = check_sl2_triple(alg, levi, t1).empty() && check_sl2_triple(alg, levi, t2).empty();
        if (!ok) report.notes.emplace_back("(a) a declared triple fails the sl2 relations");
        const auto q = quotient_algebra(alg, ideal);
        if (q.algebra.dim() != 6) {
            ok = false;
            report.notes.emplace_back("(a) L/I has dimension " + std::to_string(q.algebra.dim()) + ", expected 6");
        }
        const auto g = Subspace::coordinate(n, levi.g_indices);
        const auto spanned = Subspace::span(n, {t1.e, t1.f, t1.h, t2.e, t2.f, t2.h});
        if (spanned.dim() != 6 || spanned != g) {
            ok = false;
            report.notes.emplace_back("(a) the two triples do not span G");
        }
        for (const auto* x : {&t1.e, &t1.f, &t1.h})
            for (const auto* y : {&t2.e, &t2.f, &t2.h})
                if (!is_zero(alg.product(*x, *y)) || !is_zero(alg.product(*y, *x))) ok = false;
        if (ok && !lie_radical(q.algebra).is_zero()) ok = false;
        report.a = ok;
    }

    // (b)
    try {
        const auto dec = irreducible_decomposition_sl2(alg, ideal, t1);
        report.b = dec.components.size() == 2 &&
                   dec.components[0].space.dim() == dec.components[1].space.dim();
        if (!report.b)
            report.notes.emplace_back("(b) first copy gives " + std::to_string(dec.components.size()) +
                                      " irreducible component(s) of unequal or wrong count");
    } catch (const Error& e) {
        report.notes.emplace_back(std::string("(b) ") + e.what());
    }

    // (c)
    try {
        const auto dec = irreducible_decomposition_sl2(alg, ideal, t2);
        const bool all_two = std::all_of(dec.components.begin(), dec.components.end(),
                                         [](const ModuleComponent& c) { return c.space.dim() == 2; });
        report.c = !dec.components.empty() && all_two && dec.components.size() * 2 == ideal.dim();
        if (!report.c) report.notes.emplace_back("(c) second copy does not split I into two-dimensional irreducibles");
    } catch (const Error& e) {
        report.notes.emplace_back(std::string("(c) ") + e.what());
    }
    return report;
}

}  // namespace leibniz
