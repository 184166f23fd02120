#pragma once

#include <leibniz/algebra.hpp>
#include <leibniz/sl2.hpp>

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace leibniz {

using Json = nlohmann::ordered_json;

/// An algebra file: the table plus its optional Levi block.
struct AlgebraDocument {
    Algebra algebra;
    std::optional<LeviDatum> levi;
};

/// Parses the algebra schema
///   { "name", "dim", "basis", "products": [{"left","right","result":[{"k","c"}]}],
///     "levi"?: {"g","i","sl2_triples"} }
/// Throws Error(Schema) on malformed JSON or schema violations.
AlgebraDocument parse_algebra_json(std::string_view text);
AlgebraDocument load_algebra_file(const std::string& path);

/// Canonical emission: products sorted by (left, right), terms by k, two-space
/// indentation, trailing newline.
std::string emit_algebra_json(const Algebra& alg, const std::optional<LeviDatum>& levi);

Json to_json(const Rational& r);
Json to_json(const Vector& v);
/// Row-major array of rows.
Json to_json(const Matrix& m);
/// List of canonical basis rows.
Json to_json(const Subspace& s);
/// [{"highest_weight": w, "basis": [[...]]}]
Json to_json(const ModuleDecomposition& d);

}  // namespace leibniz
