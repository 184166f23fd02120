#pragma once

#include <leibniz/serialize.hpp>

#include <cstdint>
#include <optional>

namespace leibniz {

// Report builders behind the CLI subcommands. Every report carries
// "command", "algebra" ({name, dim, basis}) and a boolean "ok"; all
// rationals are "p/q" strings. docs/report-schema.md lists the fields.

/// Leibniz identity, ideal-of-squares assertions and Levi validation.
/// Never throws for mathematical failures; they land in the report.
Json check_report(const AlgebraDocument& doc);

struct DeriveOptions {
    bool decompose = false;
    /// When set, runs a randomized completeness probe with this seed.
    std::optional<std::uint64_t> seed;
    std::size_t probe_trials = 24;
};

/// Der/Inner/Outer dimensions and the derivation basis; with decompose, the
/// (a, alpha, delta) triple of every basis derivation. Throws
/// Error(MissingLevi) when decompose is requested without a Levi block.
Json derive_report(const AlgebraDocument& doc, const DeriveOptions& options);

/// Ideal of squares, derived series, solvable radical, semisimplicity,
/// simple summands of L/I and (with a Levi block) the simplicity certificate.
Json radical_report(const AlgebraDocument& doc);

/// Weight spaces, highest-weight vectors and irreducible decompositions of I
/// for every declared sl2 triple, plus conditions (a)-(c) when two triples
/// are declared. Throws Error(MissingLevi) without a Levi block.
Json modules_report(const AlgebraDocument& doc);

}  // namespace leibniz
