#pragma once

// Independent reference computations for tests. None of these call into the
// derivation solver or the sparse eliminator; they rebuild quantities from
// raw structure constants.

#include <leibniz/algebra.hpp>

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

namespace oracle {

using leibniz::Algebra;
using leibniz::Matrix;
using leibniz::Rational;
using leibniz::Vector;

inline std::uint64_t seed_from_env(std::uint64_t fallback = 20240607) {
    if (const char* s = std::getenv("LEIBNIZ_SEED")) return std::strtoull(s, nullptr, 10);
    return fallback;
}

/// Coordinate k of [b_i, b_j], read from the table.
inline Rational c(const Algebra& alg, std::size_t i, std::size_t j, std::size_t k) {
    for (const auto& t : alg.structure(i, j))
        if (t.k == k) return t.c;
    return 0;
}

/// Dense derivation constraint matrix: row (i, j, k), column r * n + s for
/// the entry d(r, s).
inline std::vector<Vector> derivation_rows(const Algebra& alg) {
    const std::size_t n = alg.dim();
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vector row(n * n, Rational(0));
                for (std::size_t l = 0; l < n; ++l) {
                    row[k * n + l] += c(alg, i, j, l);
                    row[l * n + i] -= c(alg, l, j, k);
                    row[l * n + j] -= c(alg, i, l, k);
                }
                rows.push_back(std::move(row));
            }
    return rows;
}

/// Rank of an integer-scaled matrix modulo a 61-bit prime. Equals the
/// rational rank unless the prime divides a maximal minor.
inline std::size_t rank_mod_p(const std::vector<Vector>& rows, std::size_t cols,
                              std::uint64_t p = 2305843009213693951ULL) {
    using u128 = unsigned __int128;
    auto reduce = [p](const mpz_class& z) {
        mpz_class r = z % mpz_class(std::to_string(p));
        if (r < 0) r += mpz_class(std::to_string(p));
        return static_cast<std::uint64_t>(std::stoull(r.get_str()));
    };
    auto mul = [p](std::uint64_t a, std::uint64_t b) { return static_cast<std::uint64_t>((u128)a * b % p); };
    auto power = [&](std::uint64_t b, std::uint64_t e) {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    };

    std::vector<std::vector<std::uint64_t>> m;
    for (const auto& row : rows) {
        mpz_class lcm = 1;
        for (const auto& x : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
        std::vector<std::uint64_t> r(cols);
        bool nonzero = false;
        for (std::size_t c = 0; c < cols; ++c) {
            mpz_class v = row[c].get_num() * (lcm / row[c].get_den());
            r[c] = reduce(v);
            nonzero = nonzero || r[c] != 0;
        }
        if (nonzero) m.push_back(std::move(r));
    }

    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        const auto inv = power(m[rank][col], p - 2);
        for (auto& x : m[rank]) x = mul(x, inv);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][col] == 0) continue;
            const auto f = m[r][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] = (m[r][c] + p - mul(f, m[rank][c])) % p;
        }
        ++rank;
    }
    return rank;
}

/// dim Der(L) as n^2 minus the rank of the constraint system mod p.
inline std::size_t derivation_dim_mod_p(const Algebra& alg) {
    const std::size_t n = alg.dim();
    return n * n - rank_mod_p(derivation_rows(alg), n * n);
}

/// trace(R_x R_y) for basis vectors straight from the constants:
/// sum_i sum_k c_{i y}^k c_{k x}^i.
inline Rational killing_entry(const Algebra& alg, std::size_t x, std::size_t y) {
    Rational t = 0;
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t k = 0; k < alg.dim(); ++k) t += c(alg, i, y, k) * c(alg, k, x, i);
    return t;
}

/// Brute-force derivation check on basis pairs, written without Matrix
/// helpers.
inline bool derivation_identity_holds(const Algebra& alg, const Matrix& d) {
    const std::size_t n = alg.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Rational lhs = 0, rhs = 0;
                for (std::size_t l = 0; l < n; ++l) lhs += d(k, l) * c(alg, i, j, l);
                for (std::size_t r = 0; r < n; ++r) rhs += d(r, i) * c(alg, r, j, k) + d(r, j) * c(alg, i, r, k);
                if (lhs != rhs) return false;
            }
    return true;
}

/// The map that is zero on the listed basis indices except `images`, where
/// column g holds images[g].
inline Matrix map_from_columns(std::size_t n, const std::vector<std::pair<std::size_t, Vector>>& columns) {
    Matrix m(n, n);
    for (const auto& [col, v] : columns) m.set_col(col, v);
    return m;
}

/// p/q in lowest terms.
inline Rational frac(long p, long q) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

inline Vector basis_vec(std::size_t n, std::size_t i, Rational s = 1) {
    Vector v(n, Rational(0));
    v[i] = s;
    return v;
}

}  // namespace oracle
