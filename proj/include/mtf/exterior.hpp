#pragma once

// Exact exterior algebra Lambda* H^1(Sigma_g) over the integers.
//
// Monomials are bitmasks over the 2g basis generators e1..e2g, stored with
// strictly ascending indices; all signs derive from that ordering. The
// splitting Sigma_g = Sigma_1 # Sigma_{g-1} designates e1 = c, e2 = c* as
// the basis of H^1 of the split-off torus.

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace mtf {

using Mask = std::uint32_t;

struct SurfaceBasis {
    int genus;

    explicit SurfaceBasis(int g) : genus(g) {
        if (g < 1)
            throw std::invalid_argument("SurfaceBasis: genus must be >= 1");
        if (2 * g > 30)
            throw std::invalid_argument("SurfaceBasis: genus too large for mask representation");
    }

    int dim() const { return 2 * genus; }
    Mask full_mask() const { return (Mask{1} << dim()) - 1; }
};

inline int mono_degree(Mask m) { return std::popcount(m); }

// Sign (-1)^inversions of concatenating the ascending index sequences of two
// disjoint masks a, b (a first).
inline int merge_sign(Mask a, Mask b) {
    int inv = 0;
    while (b) {
        Mask low = b & (~b + 1);
        inv += std::popcount(a & ~(low - 1) & ~low);
        b &= b - 1;
    }
    return (inv & 1) ? -1 : 1;
}

// Monomial text form: "e1^e2^e4"; the empty product renders as "1".
inline std::string mono_name(Mask m) {
    if (m == 0) return "1";
    std::string s;
    for (int i = 0; m; ++i, m >>= 1) {
        if (m & 1) {
            if (!s.empty()) s += '^';
            s += 'e';
            s += std::to_string(i + 1);
        }
    }
    return s;
}

// Plus monomials contain e1, e2 both or neither; minus monomials exactly one.
inline bool is_plus(Mask m) {
    bool has_c = (m & 1) != 0;
    bool has_cstar = (m & 2) != 0;
    return has_c == has_cstar;
}

struct AlgebraElement {
    int genus = 1;
    std::map<Mask, long long> terms;  // no zero coefficients stored

    AlgebraElement() = default;
    explicit AlgebraElement(int g) : genus(g) {}

    static AlgebraElement monomial(int g, Mask m, long long coeff = 1) {
        AlgebraElement e(g);
        if (coeff != 0) e.terms[m] = coeff;
        return e;
    }

    void add_term(Mask m, long long coeff) {
        if (coeff == 0) return;
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms[m] = coeff;
        } else {
            it->second += coeff;
            if (it->second == 0) terms.erase(it);
        }
    }

    bool is_zero() const { return terms.empty(); }

    bool operator==(const AlgebraElement& o) const {
        return genus == o.genus && terms == o.terms;
    }
};

inline AlgebraElement wedge(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.genus != b.genus)
        throw std::invalid_argument("wedge: mismatched surface bases");
    AlgebraElement out(a.genus);
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) {
            if (ma & mb) continue;  // repeated generator
            out.add_term(ma | mb, ca * cb * merge_sign(ma, mb));
        }
    return out;
}

// Interior product with a dual-pairing vector zeta (one integer pairing per
// basis generator), extended as a degree -1 antiderivation: contracting the
// t-th slot of a monomial carries sign (-1)^(t-1).
inline AlgebraElement contract(const std::vector<long long>& zeta, const AlgebraElement& a) {
    if (static_cast<int>(zeta.size()) != 2 * a.genus)
        throw std::invalid_argument("contract: pairing vector has wrong length");
    AlgebraElement out(a.genus);
    for (const auto& [m, c] : a.terms) {
        int slot = 0;
        for (Mask rest = m; rest; ++slot) {
            Mask low = rest & (~rest + 1);
            int idx = std::countr_zero(low);
            if (zeta[idx] != 0) {
                long long sign = (slot & 1) ? -1 : 1;
                out.add_term(m & ~low, c * zeta[idx] * sign);
            }
            rest &= rest - 1;
        }
    }
    return out;
}

// The class gamma dual to c: pairs 1 with e1 and 0 with everything else.
inline std::vector<long long> gamma_pairing(int genus) {
    std::vector<long long> z(2 * genus, 0);
    z[0] = 1;
    return z;
}

// Poincare dual of the class with pairing vector zeta, using the symplectic
// pairs (e_{2t-1}, e_{2t}). For gamma this gives PD(gamma) = c* = e2, which
// is forced by iota_gamma c = 1, PD(gamma) ^ c = c* ^ c, PD(gamma) ^ c* = 0.
inline AlgebraElement poincare_dual(int genus, const std::vector<long long>& zeta) {
    if (static_cast<int>(zeta.size()) != 2 * genus)
        throw std::invalid_argument("poincare_dual: pairing vector has wrong length");
    AlgebraElement out(genus);
    for (int t = 0; t < genus; ++t) {
        out.add_term(Mask{1} << (2 * t + 1), zeta[2 * t]);
        out.add_term(Mask{1} << (2 * t), -zeta[2 * t + 1]);
    }
    return out;
}

}  // namespace mtf
