#include <leibniz/catalog.hpp>
#include <leibniz/error.hpp>

#include <numeric>

namespace leibniz::catalog {

namespace {

class TableBuilder {
public:
    void set(std::size_t left, std::size_t right, std::size_t k, long c) {
        if (c == 0) return;
        entries_.push_back({left, right, {{k, Rational(c)}}});
    }

    std::vector<ProductEntry> take() { return std::move(entries_); }

private:
    std::vector<ProductEntry> entries_;
};

void add_sl2_relations(TableBuilder& t, std::size_t e, std::size_t f, std::size_t h) {
    t.set(e, h, e, 2);
    t.set(h, e, e, -2);
    t.set(e, f, h, 1);
    t.set(f, e, h, -1);
    t.set(h, f, f, 2);
    t.set(f, h, f, -2);
}

// Irreducible (m+1)-dimensional right module on x_0..x_m starting at `base`.
void add_irreducible_module(TableBuilder& t, long m, std::size_t base, std::size_t e, std::size_t f, std::size_t h) {
    for (long k = 0; k <= m; ++k) {
        const auto xk = base + static_cast<std::size_t>(k);
        t.set(xk, h, xk, m - 2 * k);
        if (k < m) t.set(xk, f, xk + 1, 1);
        if (k >= 1) t.set(xk, e, xk - 1, -k * (m + 1 - k));
    }
}

std::vector<std::size_t> iota(std::size_t from, std::size_t count) {
    std::vector<std::size_t> v(count);
    std::iota(v.begin(), v.end(), from);
    return v;
}

}  // namespace

Entry sl2() {
    TableBuilder t;
    add_sl2_relations(t, 0, 1, 2);
    LeviDatum levi{{0, 1, 2}, {}, {{0, 1, 2}}};
    return {Algebra("sl2", {"e", "f", "h"}, t.take()), levi, true};
}

Entry simple_sl2_leibniz(long m, bool force) {
    if (m < 1 || (m < 2 && !force))
        throw Error(ErrorKind::InvalidArgument, "simple_sl2_leibniz requires m >= 2 (m = 1 only with force)");
    std::vector<std::string> names{"e", "f", "h"};
    for (long k = 0; k <= m; ++k) names.push_back("x_" + std::to_string(k));

    TableBuilder t;
    add_sl2_relations(t, 0, 1, 2);
    add_irreducible_module(t, m, 3, 0, 1, 2);

    const auto n = static_cast<std::size_t>(m) + 4;
    LeviDatum levi{{0, 1, 2}, iota(3, n - 3), {{0, 1, 2}}};
    return {Algebra("simple_sl2_leibniz_m" + std::to_string(m), std::move(names), t.take()), levi, m >= 2};
}

Entry semisimple_pair(long m) {
    if (m < 1) throw Error(ErrorKind::InvalidArgument, "semisimple_pair requires m >= 1");
    const auto width = static_cast<std::size_t>(m) + 1;
    const std::size_t first = 6;
    const std::size_t second = 6 + width;

    std::vector<std::string> names{"e1", "f1", "h1", "e2", "f2", "h2"};
    for (int copy = 1; copy <= 2; ++copy)
        for (long k = 0; k <= m; ++k) names.push_back("x_" + std::to_string(k) + "^" + std::to_string(copy));

    TableBuilder t;
    add_sl2_relations(t, 0, 1, 2);
    add_sl2_relations(t, 3, 4, 5);
    add_irreducible_module(t, m, first, 0, 1, 2);
    add_irreducible_module(t, m, second, 0, 1, 2);
    for (std::size_t j = 0; j < width; ++j) {
        const auto x1 = first + j;
        const auto x2 = second + j;
        t.set(x1, 3, x2, 1);   // [x_j^1, e2] = x_j^2
        t.set(x2, 5, x2, 1);   // [x_j^2, h2] = x_j^2
        t.set(x1, 5, x1, -1);  // [x_j^1, h2] = -x_j^1
        t.set(x2, 4, x1, -1);  // [x_j^2, f2] = -x_j^1
    }

    LeviDatum levi{iota(0, 6), iota(6, 2 * width), {{0, 1, 2}, {3, 4, 5}}};
    return {Algebra("semisimple_pair_m" + std::to_string(m), std::move(names), t.take()), levi, true};
}

Entry two_dim_solvable() {
    TableBuilder t;
    t.set(0, 0, 1, 1);
    return {Algebra("two_dim_solvable", {"a", "b"}, t.take()), std::nullopt, true};
}

Entry build(const Spec& spec, bool force) {
    switch (spec.family) {
        case Family::Sl2: return sl2();
        case Family::SimpleSl2Leibniz: return simple_sl2_leibniz(spec.m, force);
        case Family::SemisimplePair: return semisimple_pair(spec.m);
        case Family::TwoDimSolvable: return two_dim_solvable();
        case Family::DirectSum: return direct_sum_sample(spec.parts);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown catalog family");
}

Entry direct_sum_sample(const std::vector<Spec>& specs) {
    if (specs.empty()) throw Error(ErrorKind::InvalidArgument, "direct sum needs at least one operand");
    Entry acc = build(specs.front());
    for (std::size_t i = 1; i < specs.size(); ++i) {
        const Entry next = build(specs[i]);
        auto sum = direct_sum(acc.algebra, next.algebra, acc.levi, next.levi);
        acc = {std::move(sum.algebra), std::move(sum.levi), acc.certified && next.certified};
    }
    return acc;
}

std::optional<Family> family_from_string(const std::string& key) {
    if (key == "sl2") return Family::Sl2;
    if (key == "simple") return Family::SimpleSl2Leibniz;
    if (key == "pair") return Family::SemisimplePair;
    if (key == "solvable2") return Family::TwoDimSolvable;
    if (key == "sum") return Family::DirectSum;
    return std::nullopt;
}

}  // namespace leibniz::catalog
