#include <leibniz/algebra.hpp>
#include <leibniz/error.hpp>
#include <leibniz/sl2.hpp>

#include <algorithm>
#include <set>

namespace leibniz {

void validate_levi(const Algebra& alg, const LeviDatum& levi) {
    const std::size_t n = alg.dim();
    auto fail = [](const std::string& msg) { throw Error(ErrorKind::InvalidLevi, msg); };

    std::set<std::size_t> seen;
    for (const auto* part : {&levi.g_indices, &levi.i_indices})
        for (auto idx : *part) {
            if (idx >= n) fail("levi index " + std::to_string(idx) + " out of range");
            if (!seen.insert(idx).second) fail("levi index " + std::to_string(idx) + " listed twice");
        }
    if (seen.size() != n) fail("levi g and i indices do not cover the basis");

    const auto g = Subspace::coordinate(n, levi.g_indices);
    if (!is_subalgebra(alg, g)) fail("span of levi g indices is not closed under the product");
    if (Subspace::coordinate(n, levi.i_indices) != squares_ideal(alg))
        fail("span of levi i indices differs from the ideal of squares");

    for (const auto& t : levi.sl2_triples) {
        for (auto idx : t)
            if (idx >= n) fail("sl2 triple index out of range");
        const auto failures = check_sl2_triple(alg, levi, Sl2Triple::from_indices(n, t));
        if (!failures.empty()) fail("sl2 triple (" + alg.basis_names()[t[0]] + ", " + alg.basis_names()[t[1]] + ", " +
                                    alg.basis_names()[t[2]] + ") fails: " + failures.front());
    }
}

namespace {

Subspace preimage(const Algebra& alg, const Quotient& q, const Subspace& ideal, const Subspace& in_quotient) {
    std::vector<Vector> gens = ideal.vectors();
    for (const auto& v : in_quotient.vectors()) {
        Vector lift = zero_vector(alg.dim());
        for (std::size_t a = 0; a < v.size(); ++a) lift[q.complement[a]] = v[a];
        gens.push_back(std::move(lift));
    }
    return Subspace::span(alg.dim(), gens);
}

bool is_witness(const Algebra& alg, const Subspace& candidate, const Subspace& ideal) {
    return !candidate.is_zero() && !candidate.is_full() && candidate != ideal && is_ideal(alg, candidate);
}

}  // namespace

SimplicityCertificate is_simple_certified(const Algebra& alg, const LeviDatum& levi) {
    validate_levi(alg, levi);
    const std::size_t n = alg.dim();
    const auto ideal = squares_ideal(alg);
    const auto whole = Subspace::full(n);
    const auto q = quotient_algebra(alg, ideal);

    SimplicityCertificate cert;
    auto no = [&](std::string reason, std::optional<Subspace> witness) {
        cert.verdict = Certainty::No;
        cert.reason = std::move(reason);
        cert.witness = std::move(witness);
        return cert;
    };

    const auto rad = lie_radical(q.algebra);
    if (q.algebra.dim() == 0 || !rad.is_zero()) {
        std::vector<Subspace> candidates{preimage(alg, q, ideal, rad), product_space(alg, whole, whole)};
        for (std::size_t i = 0; i < n; ++i) candidates.push_back(ideal_closure(alg, Subspace::span(n, {unit_vector(n, i)})));
        for (const auto& c : candidates)
            if (is_witness(alg, c, ideal)) return no("L/I is not a semisimple Lie algebra", c);
        return no("L/I is not a semisimple Lie algebra", std::nullopt);
    }

    const auto summands = simple_summands(q.algebra);
    if (!summands.determined) {
        cert.verdict = Certainty::Unknown;
        cert.reason = "could not split L/I into simple ideals";
        return cert;
    }
    if (summands.summands.size() > 1)
        return no("L/I has " + std::to_string(summands.summands.size()) + " simple summands",
                  preimage(alg, q, ideal, summands.summands.front()));

    if (ideal.is_zero()) {
        cert.verdict = Certainty::Yes;
        cert.reason = "simple Lie algebra (I = 0)";
        return cert;
    }

    const auto g = Subspace::coordinate(n, levi.g_indices);
    const auto triple = std::find_if(levi.sl2_triples.begin(), levi.sl2_triples.end(), [&](const auto& t) {
        return Subspace::span(n, {unit_vector(n, t[0]), unit_vector(n, t[1]), unit_vector(n, t[2])}) == g;
    });
    if (triple == levi.sl2_triples.end()) {
        cert.verdict = Certainty::Unknown;
        cert.reason = "irreducibility of I is only decided for G of type sl2";
        return cert;
    }

    const auto dec = irreducible_decomposition_sl2(alg, ideal, Sl2Triple::from_indices(n, *triple));
    if (dec.components.size() > 1) {
        const auto& part = dec.components.front().space;
        return no("I is a sum of " + std::to_string(dec.components.size()) + " irreducible G-modules",
                  is_witness(alg, part, ideal) ? std::optional<Subspace>(part) : std::nullopt);
    }
    if (product_space(alg, whole, whole) == ideal) return no("[L, L] = I", std::nullopt);

    cert.verdict = Certainty::Yes;
    cert.reason = "L/I simple, I irreducible over G, [L, L] != I";
    return cert;
}

}  // namespace leibniz
