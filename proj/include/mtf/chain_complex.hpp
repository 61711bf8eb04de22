#pragma once

// Finitely generated Z-graded chain complexes with a degree -1 integer
// boundary, and exact homology via Smith normal form.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mtf/graded_group.hpp"
#include "mtf/smith.hpp"

namespace mtf {

struct Generator {
    std::string name;
    int degree = 0;
    int filtration = 0;
    int u_exp = 0;
};

struct ChainComplex {
    std::vector<Generator> generators;
    // boundary[col] = signed targets of d(generators[col])
    std::map<int, std::vector<std::pair<int, long long>>> boundary;

    void add_entry(int source, int target, long long coeff) {
        if (coeff != 0) boundary[source].emplace_back(target, coeff);
    }
};

struct DifferentialCheck {
    bool ok = true;
    std::string message;
    int source = -1;  // first offending generator pair on failure
    int target = -1;
};

// Verifies degree -1 homogeneity entrywise and d(d(x)) = 0 for every
// generator x. Failures are values, not exceptions.
inline DifferentialCheck check_differential(const ChainComplex& c) {
    for (const auto& [col, entries] : c.boundary)
        for (const auto& [row, coeff] : entries) {
            (void)coeff;
            if (c.generators[row].degree != c.generators[col].degree - 1)
                return {false,
                        "boundary entry " + c.generators[col].name + " -> " +
                            c.generators[row].name + " is not of degree -1",
                        col, row};
        }
    for (const auto& [col, entries] : c.boundary) {
        std::map<int, BigInt> dd;
        for (const auto& [mid, c1] : entries) {
            auto it = c.boundary.find(mid);
            if (it == c.boundary.end()) continue;
            for (const auto& [row, c2] : it->second) dd[row] += BigInt(c1) * c2;
        }
        for (const auto& [row, v] : dd)
            if (v != 0)
                return {false,
                        "d^2(" + c.generators[col].name + ") has nonzero component " +
                            c.generators[row].name,
                        col, row};
    }
    return {};
}

namespace detail {

// Dense matrix of the boundary component from degree n to degree n-1.
inline Matrix degree_block(const ChainComplex& c, const std::vector<int>& src,
                           const std::vector<int>& dst) {
    std::map<int, std::size_t> row_of;
    for (std::size_t i = 0; i < dst.size(); ++i) row_of[dst[i]] = i;
    Matrix m(dst.size(), std::vector<BigInt>(src.size(), 0));
    for (std::size_t j = 0; j < src.size(); ++j) {
        auto it = c.boundary.find(src[j]);
        if (it == c.boundary.end()) continue;
        for (const auto& [row, coeff] : it->second) m[row_of.at(row)][j] += coeff;
    }
    return m;
}

}  // namespace detail

// H_n = ker d_n / im d_{n+1}, exactly over Z. Free rank comes from
// rank-nullity, torsion from the SNF diagonal of d_{n+1}.
inline GradedGroup homology(const ChainComplex& c) {
    auto check = check_differential(c);
    if (!check.ok)
        throw std::invalid_argument("homology: " + check.message);

    std::map<int, std::vector<int>> by_degree;
    for (std::size_t i = 0; i < c.generators.size(); ++i)
        by_degree[c.generators[i].degree].push_back(static_cast<int>(i));

    GradedGroup h;
    for (const auto& [n, gens] : by_degree) {
        static const std::vector<int> none;
        auto below = by_degree.find(n - 1);
        auto above = by_degree.find(n + 1);
        const auto& dst = below == by_degree.end() ? none : below->second;
        const auto& src = above == by_degree.end() ? none : above->second;

        std::size_t rank_down = matrix_rank(detail::degree_block(c, gens, dst));
        auto snf_in = smith_normal_form(detail::degree_block(c, src, gens));

        long long free_rank = static_cast<long long>(gens.size()) -
                              static_cast<long long>(rank_down) -
                              static_cast<long long>(snf_in.size());
        h.add_rank(n, free_rank);
        for (const auto& d : snf_in)
            if (d > 1) h.add_torsion(n, d.convert_to<long long>());
    }
    return h;
}

}  // namespace mtf
