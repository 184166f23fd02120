#pragma once

#include <leibniz/algebra.hpp>

#include <optional>
#include <vector>

namespace leibniz {

/// Basis of Der(L). Maps are dim x dim matrices acting on column
/// coordinates; span holds their row-major flattenings in canonical form and
/// maps[i] is the unflattened i-th canonical basis row.
struct DerivationBasis {
    std::size_t dim = 0;
    std::vector<LinearMap> maps;
    Subspace span;
};

/// Solves d([b_i,b_j]) = [d(b_i),b_j] + [b_i,d(b_j)] for the n^2 entries of d.
/// Equations are assembled i-major, then j, then coordinate k.
DerivationBasis derivation_algebra(const Algebra& alg);

/// Span of the flattened right multiplications R_{b_i}.
Subspace inner_derivations(const Algebra& alg);

struct PairDefect {
    std::size_t i = 0, j = 0;
    Vector defect;
};

/// Basis pairs on which d([x,y]) - [d(x),y] - [x,d(y)] is nonzero.
std::vector<PairDefect> derivation_defects(const Algebra& alg, const LinearMap& d);
bool is_derivation(const Algebra& alg, const LinearMap& d);

/// Block split relative to G + I. d0 keeps the G->G and I->I blocks, d1 the
/// G->I block, dminus1 the I->G block.
struct GradedParts {
    LinearMap d0, d1, dminus1;
};

GradedParts graded_components(const LinearMap& d, const LeviDatum& levi);

/// d = R_a + alpha + delta with a supported on G, alpha zero on G and
/// preserving I, delta zero on I and mapping G into I.
struct DerivationDecomposition {
    Vector a;
    LinearMap alpha;
    LinearMap delta;
    LinearMap original;
};

/// Throws Error(NonZeroMinusOne) when d maps I into G and Error(NoInnerMatch)
/// when no a in G reproduces d on G.
DerivationDecomposition decompose(const Algebra& alg, const LeviDatum& levi, const LinearMap& d);

/// Same as decompose() without re-validating the datum or d; for callers
/// that decompose many derivations of one validated algebra.
DerivationDecomposition decompose_unchecked(const Algebra& alg, const LeviDatum& levi, const LinearMap& d);

/// Pairs (x, y) of basis vectors where alpha([x,y]) != [alpha(x), y].
std::vector<PairDefect> verify_alpha_module_map(const Algebra& alg, const LeviDatum& levi, const LinearMap& alpha);

/// lambda when alpha restricted to the component is lambda * id.
std::optional<Rational> scalar_on_component(const LinearMap& alpha, const Subspace& component);

struct AlphaBlockReport {
    /// blocks[i][j]: alpha restricted to component i, projected onto
    /// component j, as a dim_j x dim_i matrix in the canonical bases.
    std::vector<std::vector<Matrix>> blocks;
    /// Diagonal scalars; nullopt marks a non-scalar diagonal block.
    std::vector<std::optional<Rational>> scalars;
    bool off_diagonal_zero = true;
};

/// Throws Error(NotDirectSum) unless the components form a direct sum equal
/// to the ideal of squares.
AlphaBlockReport alpha_analysis(const Algebra& alg, const LeviDatum& levi, const LinearMap& alpha,
                                const std::vector<Subspace>& components);

enum class DeltaClass { Zero, EqualsI, Other };

const char* to_string(DeltaClass c) noexcept;

struct DeltaReport {
    Subspace span;  // span{delta(g) : g in G}
    std::vector<PairDefect> module_defects;
    DeltaClass classification = DeltaClass::Zero;

    bool module_ok() const noexcept { return module_defects.empty(); }
};

/// Checks sum_k c_ij^k delta(b_k) = [delta(b_i), b_j] over G basis pairs and
/// classifies the span of delta(G) against {0} and I.
DeltaReport delta_analysis(const Algebra& alg, const LeviDatum& levi, const LinearMap& delta);

struct OuterReport {
    std::size_t der = 0;
    std::size_t inner = 0;
    std::size_t outer = 0;
};

OuterReport outer_report(const Algebra& alg);
OuterReport outer_report(const Algebra& alg, const DerivationBasis& der);

}  // namespace leibniz
