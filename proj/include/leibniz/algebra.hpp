#pragma once

#include <leibniz/exactlin.hpp>

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace leibniz {

/// One term c * b_k of a basis product.
struct Term {
    std::size_t k = 0;
    Rational c;

    friend bool operator==(const Term&, const Term&) = default;
};

/// A table entry [b_left, b_right] = sum of terms.
struct ProductEntry {
    std::size_t left = 0;
    std::size_t right = 0;
    std::vector<Term> result;

    friend bool operator==(const ProductEntry&, const ProductEntry&) = default;
};

/// Finite-dimensional algebra given by structure constants
/// [b_i, b_j] = sum_k c_ij^k b_k. Products absent from the table are zero.
///
/// Construction normalizes the table (terms sorted by k, duplicate k merged,
/// zero coefficients dropped) and rejects out-of-range indices. It does not
/// require the Leibniz identity; analyses that need it call
/// require_leibniz().
class Algebra {
public:
    Algebra() = default;
    Algebra(std::string name, std::vector<std::string> basis, const std::vector<ProductEntry>& products);

    const std::string& name() const noexcept { return name_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    const std::vector<std::string>& basis_names() const noexcept { return basis_; }

    /// Terms of [b_i, b_j]; empty for a zero product.
    const std::vector<Term>& structure(std::size_t i, std::size_t j) const;
    /// Nonzero entries in (left, right) order.
    std::vector<ProductEntry> products() const;

    Vector basis_product(std::size_t i, std::size_t j) const;
    Vector product(const Vector& x, const Vector& y) const;

    Algebra renamed(std::string name) const;

private:
    std::string name_;
    std::vector<std::string> basis_;
    std::vector<std::vector<Term>> table_;  // index i * dim + j
};

/// Declared split L = G + I of the basis into a Levi part and the ideal of
/// squares. Triples are (e, f, h) basis indices inside G.
struct LeviDatum {
    std::vector<std::size_t> g_indices;
    std::vector<std::size_t> i_indices;
    std::vector<std::array<std::size_t, 3>> sl2_triples;

    friend bool operator==(const LeviDatum&, const LeviDatum&) = default;
};

struct BilinearForm {
    Matrix gram;
};

struct LeibnizViolation {
    std::size_t i, j, k;
    Vector defect;
};

/// [b_i,[b_j,b_k]] - [[b_i,b_j],b_k] + [[b_i,b_k],b_j] over all basis triples.
std::vector<LeibnizViolation> leibniz_check(const Algebra& alg);
/// Throws Error(Structural) listing the first violation.
void require_leibniz(const Algebra& alg);

bool is_lie(const Algebra& alg);

/// Matrix of x -> [x, z]; column j holds [b_j, z].
LinearMap right_mult(const Algebra& alg, const Vector& z);
/// Matrix of x -> [z, x].
LinearMap left_mult(const Algebra& alg, const Vector& z);

/// Span of [b_i,b_j] + [b_j,b_i]. Verifies that the span is a two-sided ideal
/// and that [L, I] = 0, throwing Error(Structural) otherwise.
Subspace squares_ideal(const Algebra& alg);

/// Product space [U, V] = span{[u, v]}.
Subspace product_space(const Algebra& alg, const Subspace& u, const Subspace& v);
bool is_subalgebra(const Algebra& alg, const Subspace& s);
bool is_ideal(const Algebra& alg, const Subspace& s);

/// Smallest two-sided ideal containing s.
Subspace ideal_closure(const Algebra& alg, const Subspace& s);

/// s, [s,s], [[s,s],[s,s]], ... up to and including the first repeated
/// member. Starts from the whole algebra when s is absent.
std::vector<Subspace> derived_series(const Algebra& alg, const std::optional<Subspace>& s = std::nullopt);
bool is_solvable(const Algebra& alg, const std::optional<Subspace>& s = std::nullopt);

struct Quotient {
    Algebra algebra;
    /// Original basis indices whose images form the quotient basis.
    std::vector<std::size_t> complement;
    /// dim(quotient) x dim(alg) matrix of the natural epimorphism.
    Matrix projection;
};

Quotient quotient_algebra(const Algebra& alg, const Subspace& ideal);

/// K(x, y) = trace(R_x R_y). Requires a Lie algebra.
BilinearForm killing_form(const Algebra& lie);

/// Solvable radical of a Lie algebra: the Killing-orthogonal of [L, L].
Subspace lie_radical(const Algebra& lie);

/// Preimage in L of the radical of L / I. The result is checked to be a
/// solvable ideal containing I.
Subspace solvable_radical(const Algebra& alg);
bool is_semisimple(const Algebra& alg);

/// Basis of {c : c([x,y]) = [c(x),y] = [x,c(y)]}.
std::vector<LinearMap> centroid(const Algebra& alg);

struct SummandResult {
    std::vector<Subspace> summands;
    /// False when no centroid element in the candidate sweep split the
    /// algebra completely.
    bool determined = true;
};

/// Simple ideals of a semisimple Lie algebra, ordered by first pivot.
SummandResult simple_summands(const Algebra& lie);

/// Checks the partition, closure of G, I = squares ideal and the declared
/// triples. Throws Error(InvalidLevi) describing the first failure.
void validate_levi(const Algebra& alg, const LeviDatum& levi);

enum class Certainty { Yes, No, Unknown };

const char* to_string(Certainty c) noexcept;

struct SimplicityCertificate {
    Certainty verdict = Certainty::Unknown;
    /// Proper ideal different from 0 and I, present on a "no" found by
    /// construction.
    std::optional<Subspace> witness;
    std::string reason;
};

SimplicityCertificate is_simple_certified(const Algebra& alg, const LeviDatum& levi);

struct DirectSum {
    Algebra algebra;
    std::optional<LeviDatum> levi;
};

/// Block-diagonal sum; basis names get ".1" / ".2" suffixes. A combined
/// datum is produced when both inputs carry one.
DirectSum direct_sum(const Algebra& a, const Algebra& b,
                     const std::optional<LeviDatum>& levi_a = std::nullopt,
                     const std::optional<LeviDatum>& levi_b = std::nullopt);

/// n-dimensional algebra with all products zero.
Algebra abelian_algebra(std::size_t n);

}  // namespace leibniz
