#pragma once

#include <leibniz/algebra.hpp>

#include <string>
#include <vector>

namespace leibniz {

// Right-module convention throughout: x . g = [x, g].

struct Sl2Triple {
    Vector e, f, h;

    static Sl2Triple from_indices(std::size_t dim, const std::array<std::size_t, 3>& efh);
};

/// Verifies [e,h]=2e, [h,e]=-2e, [e,f]=h, [f,e]=-h, [h,f]=2f, [f,h]=-2f.
/// Returns one message per failed relation.
std::vector<std::string> check_sl2_triple(const Algebra& alg, const Sl2Triple& t);
/// As above, additionally requiring e, f, h to be supported on G.
std::vector<std::string> check_sl2_triple(const Algebra& alg, const LeviDatum& levi, const Sl2Triple& t);

/// Matrix of x -> [x, g] restricted to an invariant subspace, in the
/// coordinates of its canonical basis. Throws Error(NotInvariant).
Matrix restricted_right_action(const Algebra& alg, const Subspace& module, const Vector& g);

struct WeightSpace {
    Rational weight;
    Subspace space;
};

struct WeightDecomposition {
    std::vector<WeightSpace> spaces;  // weights ascending
    bool incomplete = false;
};

WeightDecomposition weight_decomposition(const Algebra& alg, const Subspace& module, const Sl2Triple& t);

struct HighestWeightVector {
    Rational weight;
    Vector vector;
};

/// Basis of ker(. e) inside every weight space, highest weight first.
std::vector<HighestWeightVector> highest_weight_vectors(const Algebra& alg, const Subspace& module,
                                                        const Sl2Triple& t);

struct ModuleComponent {
    long highest_weight = 0;
    Subspace space;
};

struct ModuleDecomposition {
    std::vector<ModuleComponent> components;
};

/// Spins every highest-weight vector under the right f-action. Components are
/// ordered by descending highest weight, then ascending pivot. Throws
/// Error(Verification) when the spun components do not form a direct sum
/// equal to the module.
ModuleDecomposition irreducible_decomposition_sl2(const Algebra& alg, const Subspace& module, const Sl2Triple& t);

struct ConditionsReport {
    bool a = false;
    bool b = false;
    bool c = false;
    std::vector<std::string> notes;

    bool all() const noexcept { return a && b && c; }
};

/// Checks the three structural conditions characterizing the
/// sl2 + sl2 family: (a) L/I is two commuting copies of sl2, (b) I splits into
/// two irreducible modules of equal dimension under the first copy, (c) I
/// splits into dim(I)/2 two-dimensional irreducibles under the second copy.
/// Requires at least two declared triples (Error(InvalidLevi) otherwise).
ConditionsReport verify_conditions_abc(const Algebra& alg, const LeviDatum& levi);

}  // namespace leibniz
