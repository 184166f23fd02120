#include <leibniz/derivations.hpp>
#include <leibniz/error.hpp>
#include <leibniz/report.hpp>

#include <random>

namespace leibniz {

namespace {

Json algebra_summary(const Algebra& alg) {
    return {{"name", alg.name()}, {"dim", alg.dim()}, {"basis", alg.basis_names()}};
}

Json header(const char* command, const Algebra& alg) {
    Json j;
    j["command"] = command;
    j["algebra"] = algebra_summary(alg);
    j["ok"] = false;
    return j;
}

Json names_of(const Algebra& alg, std::initializer_list<std::size_t> idx) {
    Json out = Json::array();
    for (auto i : idx) out.push_back(alg.basis_names().at(i));
    return out;
}

Json defects_json(const Algebra& alg, const std::vector<PairDefect>& defects) {
    Json out = Json::array();
    for (const auto& d : defects)
        out.push_back({{"pair", names_of(alg, {d.i, d.j})}, {"defect", to_json(d.defect)}});
    return out;
}

const LeviDatum& require_levi(const AlgebraDocument& doc, const char* what) {
    if (!doc.levi) throw Error(ErrorKind::MissingLevi, std::string(what) + " requires a \"levi\" block in the algebra file");
    return *doc.levi;
}

// Components used for alpha block reports: irreducible pieces of I under the
// first declared triple, or I itself when that is unavailable.
std::vector<Subspace> alpha_components(const Algebra& alg, const LeviDatum& levi, const Subspace& ideal) {
    if (ideal.is_zero()) return {};
    if (!levi.sl2_triples.empty()) {
        try {
            const auto dec = irreducible_decomposition_sl2(alg, ideal, Sl2Triple::from_indices(alg.dim(), levi.sl2_triples.front()));
            std::vector<Subspace> parts;
            for (const auto& c : dec.components) parts.push_back(c.space);
            return parts;
        } catch (const Error&) {
        }
    }
    return {ideal};
}

Json completeness_probe(const Algebra& alg, const DerivationBasis& der, std::uint64_t seed, std::size_t trials) {
    const std::size_t n = alg.dim();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> entry(-2, 2);
    std::bernoulli_distribution sparse(0.3);

    std::size_t agree = 0, derivations = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        Matrix d(n, n);
        if (t % 2 == 0) {
            for (const auto& m : der.maps) d = d + Rational(coeff(rng)) * m;
        } else {
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    if (sparse(rng)) d(r, c) = entry(rng);
        }
        const bool by_identity = is_derivation(alg, d);
        const bool by_span = der.span.contains(d.flatten());
        if (by_identity) ++derivations;
        if (by_identity == by_span) ++agree;
    }
    return {{"seed", seed}, {"trials", trials}, {"agreements", agree}, {"derivations_sampled", derivations},
            {"pass", agree == trials}};
}

}  // namespace

Json check_report(const AlgebraDocument& doc) {
    const auto& alg = doc.algebra;
    Json j = header("check", alg);

    const auto violations = leibniz_check(alg);
    Json listed = Json::array();
    for (const auto& v : violations)
        listed.push_back({{"triple", names_of(alg, {v.i, v.j, v.k})},
                          {"indices", {v.i, v.j, v.k}},
                          {"defect", to_json(v.defect)}});
    j["leibniz"] = {{"pass", violations.empty()}, {"violations", listed}};

    bool squares_ok = false;
    Json squares = {{"pass", false}};
    if (violations.empty()) {
        try {
            const auto ideal = squares_ideal(alg);
            squares = {{"pass", true}, {"dim", ideal.dim()}, {"basis", to_json(ideal)}};
            squares_ok = true;
        } catch (const Error& e) {
            squares = {{"pass", false}, {"error", e.what()}};
        }
    } else {
        squares["error"] = "skipped: Leibniz identity fails";
    }
    j["squares_ideal"] = squares;

    bool levi_ok = true;
    Json levi = {{"present", doc.levi.has_value()}};
    if (doc.levi) {
        if (!squares_ok) {
            levi_ok = false;
            levi["pass"] = false;
            levi["error"] = "skipped: earlier check failed";
        } else {
            try {
                validate_levi(alg, *doc.levi);
                levi["pass"] = true;
            } catch (const Error& e) {
                levi_ok = false;
                levi["pass"] = false;
                levi["error"] = e.what();
            }
        }
    }
    j["levi"] = levi;
    j["ok"] = violations.empty() && squares_ok && levi_ok;
    return j;
}

Json derive_report(const AlgebraDocument& doc, const DeriveOptions& options) {
    const auto& alg = doc.algebra;
    if (options.decompose) require_levi(doc, "--decompose");
    Json j = header("derive", alg);

    const auto der = derivation_algebra(alg);
    const auto dims = outer_report(alg, der);
    j["dims"] = {{"der", dims.der}, {"inner", dims.inner}, {"outer", dims.outer}};
    Json basis = Json::array();
    for (const auto& m : der.maps) basis.push_back(to_json(m));
    j["basis"] = basis;
    bool ok = true;

    if (options.decompose) {
        const auto& levi = *doc.levi;
        validate_levi(alg, levi);
        const auto ideal = Subspace::coordinate(alg.dim(), levi.i_indices);
        const auto components = alpha_components(alg, levi, ideal);

        Json comps = Json::array();
        for (const auto& c : components) comps.push_back(to_json(c));
        j["components"] = comps;

        Json entries = Json::array();
        std::vector<Vector> delta_images;
        for (std::size_t idx = 0; idx < der.maps.size(); ++idx) {
            const auto dec = decompose_unchecked(alg, levi, der.maps[idx]);
            const auto alpha_defects = verify_alpha_module_map(alg, levi, dec.alpha);
            const auto blocks = alpha_analysis(alg, levi, dec.alpha, components);
            const auto delta = delta_analysis(alg, levi, dec.delta);

            Json scalars = Json::array();
            for (const auto& s : blocks.scalars) scalars.push_back(s ? to_json(*s) : Json(nullptr));
            Json block_json = Json::array();
            for (const auto& row : blocks.blocks) {
                Json r = Json::array();
                for (const auto& b : row) r.push_back(to_json(b));
                block_json.push_back(r);
            }
            Json images = Json::array();
            for (auto g : levi.g_indices) {
                auto v = dec.delta.col(g);
                if (!is_zero(v)) images.push_back({{"of", alg.basis_names()[g]}, {"value", to_json(v)}});
                delta_images.push_back(std::move(v));
            }

            ok = ok && alpha_defects.empty() && delta.module_ok();
            entries.push_back({
                {"index", idx},
                {"a", to_json(dec.a)},
                {"alpha",
                 {{"module_map", alpha_defects.empty()},
                  {"defects", defects_json(alg, alpha_defects)},
                  {"scalars", scalars},
                  {"off_diagonal_zero", blocks.off_diagonal_zero},
                  {"blocks", block_json}}},
                {"delta",
                 {{"span_dim", delta.span.dim()},
                  {"classification", to_string(delta.classification)},
                  {"module_check", delta.module_ok()},
                  {"images", images}}},
            });
        }
        j["decomposition"] = entries;
        const auto all_deltas = Subspace::span(alg.dim(), delta_images);
        j["delta_summary"] = {{"span_dim", all_deltas.dim()}, {"all_zero", all_deltas.is_zero()}};
    }

    if (options.seed) {
        j["probe"] = completeness_probe(alg, der, *options.seed, options.probe_trials);
        ok = ok && j["probe"]["pass"].get<bool>();
    }
    j["ok"] = ok;
    return j;
}

Json radical_report(const AlgebraDocument& doc) {
    const auto& alg = doc.algebra;
    require_leibniz(alg);
    Json j = header("radical", alg);

    const auto ideal = squares_ideal(alg);
    j["squares_ideal"] = {{"dim", ideal.dim()}, {"basis", to_json(ideal)}};

    Json series = Json::array();
    for (const auto& s : derived_series(alg)) series.push_back(s.dim());
    j["derived_series_dims"] = series;
    j["is_solvable"] = is_solvable(alg);

    const auto radical = solvable_radical(alg);
    j["radical"] = {{"dim", radical.dim()}, {"basis", to_json(radical)}};
    const bool semisimple = radical == ideal;
    j["is_semisimple"] = semisimple;

    const auto q = quotient_algebra(alg, ideal);
    Json quotient = {{"dim", q.algebra.dim()}, {"is_lie", is_lie(q.algebra)}};
    if (semisimple) {
        const auto summands = simple_summands(q.algebra);
        Json dims = Json::array();
        for (const auto& s : summands.summands) dims.push_back(s.dim());
        quotient["simple_summand_dims"] = dims;
        quotient["summands_determined"] = summands.determined;
    }
    j["quotient"] = quotient;

    if (doc.levi) {
        const auto cert = is_simple_certified(alg, *doc.levi);
        Json s = {{"verdict", to_string(cert.verdict)}, {"reason", cert.reason}};
        if (cert.witness) s["witness"] = to_json(*cert.witness);
        j["simple"] = s;
    }
    j["ok"] = true;
    return j;
}

Json modules_report(const AlgebraDocument& doc) {
    const auto& alg = doc.algebra;
    const auto& levi = require_levi(doc, "modules");
    require_leibniz(alg);
    Json j = header("modules", alg);
    const auto ideal = squares_ideal(alg);
    bool ok = true;

    Json triples = Json::array();
    for (const auto& idx : levi.sl2_triples) {
        const auto t = Sl2Triple::from_indices(alg.dim(), idx);
        const auto failures = check_sl2_triple(alg, levi, t);
        Json entry = {{"triple", names_of(alg, {idx[0], idx[1], idx[2]})}, {"relations_hold", failures.empty()}};
        if (!failures.empty()) {
            entry["failures"] = failures;
            ok = false;
            triples.push_back(entry);
            continue;
        }

        const auto weights = weight_decomposition(alg, ideal, t);
        Json wj = Json::array();
        for (const auto& w : weights.spaces) wj.push_back({{"weight", to_json(w.weight)}, {"dim", w.space.dim()}});
        entry["weights"] = wj;
        entry["incomplete"] = weights.incomplete;
        try {
            Json hw = Json::array();
            for (const auto& v : highest_weight_vectors(alg, ideal, t))
                hw.push_back({{"weight", to_json(v.weight)}, {"vector", to_json(v.vector)}});
            entry["highest_weight_vectors"] = hw;
            entry["decomposition"] = to_json(irreducible_decomposition_sl2(alg, ideal, t));
        } catch (const Error& e) {
            entry["error"] = e.what();
            ok = false;
        }
        triples.push_back(entry);
    }
    j["triples"] = triples;

    if (levi.sl2_triples.size() >= 2) {
        const auto abc = verify_conditions_abc(alg, levi);
        j["conditions"] = {{"a", abc.a}, {"b", abc.b}, {"c", abc.c}, {"notes", abc.notes}};
    }
    j["ok"] = ok;
    return j;
}

}  // namespace leibniz
