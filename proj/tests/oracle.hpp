#pragma once

// Test-only oracles, deliberately independent of the library's linear
// algebra: fraction-free rational rank (Bareiss), a second Smith normal
// form built on explicit Bezout row/column operations, a homology
// recomputation on top of both, and a list-based contraction.

#include <algorithm>
#include <numeric>
#include <vector>

#include "mtf/chain_complex.hpp"
#include "mtf/exterior.hpp"
#include "mtf/smith.hpp"

namespace oracle {

using mtf::BigInt;
using mtf::Matrix;

// Bareiss fraction-free Gaussian elimination on the transpose (so pivot
// scan order differs from the library's), returning the rank and the
// final pivot, which is |det| of a maximal nonsingular submatrix.
inline std::pair<std::size_t, BigInt> bareiss_transposed(const Matrix& input) {
    const std::size_t in_rows = input.size();
    const std::size_t in_cols = in_rows ? input[0].size() : 0;
    Matrix a(in_cols, std::vector<BigInt>(in_rows));
    for (std::size_t i = 0; i < in_rows; ++i)
        for (std::size_t j = 0; j < in_cols; ++j) a[j][i] = input[i][j];

    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    BigInt prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[rank], a[piv]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return {rank, rank ? abs(prev) : BigInt(0)};
}

// Exact rank over Q.
inline std::size_t rational_rank(const Matrix& a) { return bareiss_transposed(a).first; }

// Second SNF implementation, coded independently of the library's.
// Same two-stage strategy (rank + maximal minor first, then elimination
// modulo the minor -- plain integer elimination has exponential entry
// blowup on dense inputs), but with its own fraction-free stage on the
// transpose, first-nonzero pivoting instead of smallest, column-before-
// row clearing, and balanced residues in (-M/2, M/2]. Ground-truth
// independence additionally comes from known_smith_matrix below.
inline std::vector<BigInt> smith_alt(Matrix a) {
    auto [rank, modulus] = bareiss_transposed(a);
    if (rank == 0) return {};
    const std::size_t rows = a.size();
    const std::size_t cols = a[0].size();
    std::vector<BigInt> divisors;
    if (modulus != 1) {
        auto balance = [&](BigInt& v) {
            v %= modulus;
            if (2 * v > modulus) v -= modulus;
            if (2 * v <= -modulus) v += modulus;
        };
        for (auto& row : a)
            for (auto& v : row) balance(v);

        std::size_t t = 0;
        while (t < rows && t < cols) {
            std::size_t pr = rows, pc = cols;
            for (std::size_t i = t; i < rows && pr == rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0) { pr = i; pc = j; break; }
            if (pr == rows) break;
            std::swap(a[t], a[pr]);
            if (pc != t)
                for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pc]);

            bool dirty = true;
            while (dirty) {
                dirty = false;
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (a[t][j] == 0) continue;
                    BigInt q = a[t][j] / a[t][t];
                    for (std::size_t i = t; i < rows; ++i) {
                        a[i][j] -= q * a[i][t];
                        balance(a[i][j]);
                    }
                    if (a[t][j] != 0) {
                        for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][j]);
                        dirty = true;
                    }
                }
                for (std::size_t i = t + 1; i < rows; ++i) {
                    if (a[i][t] == 0) continue;
                    BigInt q = a[i][t] / a[t][t];
                    for (std::size_t j = t; j < cols; ++j) {
                        a[i][j] -= q * a[t][j];
                        balance(a[i][j]);
                    }
                    if (a[i][t] != 0) {
                        std::swap(a[t], a[i]);
                        dirty = true;
                    }
                }
            }
            divisors.push_back(gcd(abs(a[t][t]), modulus));
            ++t;
        }
    }
    // Mod M the elimination can report more pivots than the integer
    // rank (Z/M has zero divisors), so build the chain over every
    // diagonal slot before truncating to the rank.
    while (divisors.size() < std::min(rows, cols)) divisors.push_back(modulus);

    for (std::size_t i = 0; i < divisors.size(); ++i)
        for (std::size_t j = i + 1; j < divisors.size(); ++j) {
            BigInt g = gcd(divisors[i], divisors[j]);
            divisors[j] = divisors[i] / g * divisors[j];
            divisors[i] = g;
        }
    divisors.resize(rank);
    return divisors;
}

// Matrix with a prescribed Smith form: diag entries scrambled by bounded
// random unimodular row/column operations. Ground truth for both SNF
// implementations.
template <class Rng>
Matrix known_smith_matrix(const std::vector<BigInt>& chain, std::size_t rows, std::size_t cols,
                          Rng& rng, int ops = 40) {
    Matrix m(rows, std::vector<BigInt>(cols, 0));
    for (std::size_t t = 0; t < chain.size(); ++t) m[t][t] = chain[t];
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::uniform_int_distribution<std::size_t> ri(0, rows - 1), ci(0, cols - 1);
    for (int t = 0; t < ops; ++t) {
        std::size_t i = ri(rng), j = ri(rng);
        int cr = coeff(rng);
        if (i != j)
            for (std::size_t c = 0; c < cols; ++c) m[i][c] += cr * m[j][c];
        std::size_t p = ci(rng), q = ci(rng);
        int cc = coeff(rng);
        if (p != q)
            for (std::size_t r = 0; r < rows; ++r) m[r][p] += cc * m[r][q];
    }
    return m;
}

// Homology recomputed from the oracles only: ranks from Bareiss, torsion
// from smith_alt.
inline mtf::GradedGroup homology_oracle(const mtf::ChainComplex& c) {
    std::map<int, std::vector<int>> by_degree;
    for (std::size_t i = 0; i < c.generators.size(); ++i)
        by_degree[c.generators[i].degree].push_back(static_cast<int>(i));

    mtf::GradedGroup h;
    for (const auto& [n, gens] : by_degree) {
        static const std::vector<int> none;
        auto below = by_degree.find(n - 1);
        auto above = by_degree.find(n + 1);
        const auto& dst = below == by_degree.end() ? none : below->second;
        const auto& src = above == by_degree.end() ? none : above->second;

        std::size_t rank_down = rational_rank(mtf::detail::degree_block(c, gens, dst));
        auto snf_in = smith_alt(mtf::detail::degree_block(c, src, gens));

        h.add_rank(n, static_cast<long long>(gens.size()) -
                          static_cast<long long>(rank_down) -
                          static_cast<long long>(snf_in.size()));
        for (const auto& d : snf_in)
            if (d > 1) h.add_torsion(n, d.convert_to<long long>());
    }
    return h;
}

// Contraction recomputed on index lists instead of bitmask tricks.
inline mtf::AlgebraElement contract_list(const std::vector<long long>& zeta,
                                         const mtf::AlgebraElement& a) {
    mtf::AlgebraElement out(a.genus);
    for (const auto& [m, c] : a.terms) {
        std::vector<int> idx;
        for (int i = 0; i < 2 * a.genus; ++i)
            if (m & (mtf::Mask{1} << i)) idx.push_back(i);
        for (std::size_t t = 0; t < idx.size(); ++t) {
            if (zeta[idx[t]] == 0) continue;
            mtf::Mask rest = 0;
            for (std::size_t s = 0; s < idx.size(); ++s)
                if (s != t) rest |= mtf::Mask{1} << idx[s];
            long long sign = (t % 2 == 0) ? 1 : -1;
            out.add_term(rest, c * zeta[idx[t]] * sign);
        }
    }
    return out;
}

}  // namespace oracle
