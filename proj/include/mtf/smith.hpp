#pragma once

// Smith normal form over the integers. Arithmetic is arbitrary precision
// (boost cpp_int); silent overflow would corrupt torsion detection.
//
// Naive integer elimination suffers exponential intermediate entry
// growth on dense inputs (megabit entries on random 30x30 matrices), so
// the computation runs in two exact stages:
//   1. fraction-free (Bareiss) elimination: the rank r, and the last
//      pivot, which is a nonzero r x r minor M of the input;
//   2. every elementary divisor divides M, so the divisors are recovered
//      by elimination over Z/M with all entries kept in [0, M).
// Stage 2 picks the smallest nonzero representative as pivot and clears
// with Euclidean remainder swaps; a final pairwise gcd/lcm pass puts the
// diagonal into the divisibility chain d1 | d2 | ...

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mtf {

using BigInt = boost::multiprecision::cpp_int;
using Matrix = std::vector<std::vector<BigInt>>;

namespace detail {

struct RankMinor {
    std::size_t rank = 0;
    BigInt minor = 0;  // |det| of the pivoted r x r submatrix; 0 iff rank 0
};

// Bareiss fraction-free elimination. Intermediate entries are exact
// minors of the input, so their size is Hadamard-bounded.
inline RankMinor bareiss_rank_minor(Matrix a) {
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

}  // namespace detail

// Diagonal of the Smith normal form, positive entries ordered by
// divisibility (d1 | d2 | ...). The length equals the rank.
inline std::vector<BigInt> smith_normal_form(Matrix a) {
    const auto [r, modulus] = detail::bareiss_rank_minor(a);
    if (r == 0) return {};
    if (modulus == 1) return std::vector<BigInt>(r, 1);

    const std::size_t rows = a.size();
    const std::size_t cols = a[0].size();
    auto reduce = [&](BigInt& v) {
        v %= modulus;
        if (v < 0) v += modulus;
    };
    for (auto& row : a)
        for (auto& v : row) reduce(v);

    // elimination over Z/M; entries never exceed M
    std::vector<BigInt> divisors;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        std::size_t pr = t, pc = t;
        BigInt best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (a[i][j] == 0) continue;
                if (best == 0 || a[i][j] < best) {
                    best = a[i][j];
                    pr = i;
                    pc = j;
                }
            }
        if (best == 0) break;
        std::swap(a[t], a[pr]);
        if (pc != t)
            for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pc]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                BigInt q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j) {
                    a[i][j] -= q * a[t][j];
                    reduce(a[i][j]);
                }
                if (a[i][t] != 0) {
                    // remainder is a smaller representative; promote it
                    std::swap(a[t], a[i]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                BigInt q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i) {
                    a[i][j] -= q * a[i][t];
                    reduce(a[i][j]);
                }
                if (a[t][j] != 0) {
                    for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][j]);
                    clean = false;
                }
            }
        }
        divisors.push_back(gcd(a[t][t], modulus));
        ++t;
    }

    // Slots the elimination left at zero are Z/M factors. Mod M the
    // elimination may also split such a factor into coprime pieces
    // (Z/M has zero divisors), so the canonical chain must be formed
    // over all min(rows, cols) slots and only then cut at the rank:
    // the unique divisibility chain is d_1 | ... | d_r | M | ... | M.
    while (divisors.size() < std::min(rows, cols)) divisors.push_back(modulus);

    // enforce the divisibility chain: diag(a,b) ~ diag(gcd(a,b), lcm(a,b))
    for (std::size_t i = 0; i < divisors.size(); ++i)
        for (std::size_t j = i + 1; j < divisors.size(); ++j) {
            BigInt g = gcd(divisors[i], divisors[j]);
            divisors[j] = divisors[i] / g * divisors[j];
            divisors[i] = g;
        }
    divisors.resize(r);
    return divisors;
}

inline std::size_t matrix_rank(const Matrix& a) {
    return detail::bareiss_rank_minor(a).rank;
}

}  // namespace mtf
