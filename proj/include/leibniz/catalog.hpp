#pragma once

#include <leibniz/algebra.hpp>

#include <optional>
#include <string>
#include <vector>

namespace leibniz::catalog {

enum class Family { Sl2, SimpleSl2Leibniz, SemisimplePair, TwoDimSolvable, DirectSum };

struct Spec {
    Family family = Family::Sl2;
    long m = 0;
    /// Operands of a DirectSum spec.
    std::vector<Spec> parts;
};

struct Entry {
    Algebra algebra;
    std::optional<LeviDatum> levi;
    /// False for parameter values outside the documented range that were
    /// produced on request.
    bool certified = true;
};

/// sl2 with basis (e, f, h): [e,h]=2e, [e,f]=h, [h,f]=2f and their negatives.
Entry sl2();

/// (m+4)-dimensional simple algebra with basis (e, f, h, x_0..x_m) where
/// I = span{x_k} is the irreducible (m+1)-dimensional right sl2-module:
///   [x_k,e] = -k(m+1-k) x_{k-1},  [x_k,f] = x_{k+1},  [x_k,h] = (m-2k) x_k.
/// Requires m >= 2; force = true admits m = 1 with certified = false.
Entry simple_sl2_leibniz(long m, bool force = false);

/// 2(m+4)-dimensional algebra over sl2 + sl2 with basis
/// (e1,f1,h1,e2,f2,h2, x_0^1..x_m^1, x_0^2..x_m^2). Both copies of x carry the
/// (m+1)-dimensional module of the first sl2; the second sl2 mixes copies:
///   [x_j^1,e2] = [x_j^2,h2] = x_j^2,  [x_j^1,h2] = [x_j^2,f2] = -x_j^1.
/// Requires m >= 1.
Entry semisimple_pair(long m);

/// Basis (a, b) with the single product [a,a] = b. No Levi datum.
Entry two_dim_solvable();

/// Left fold of algebra-core direct_sum over the listed entries.
Entry direct_sum_sample(const std::vector<Spec>& specs);

Entry build(const Spec& spec, bool force = false);

/// Family keys used on the command line: sl2, simple, pair, solvable2.
std::optional<Family> family_from_string(const std::string& key);

}  // namespace leibniz::catalog
