#pragma once

// E^1 complexes for mapping-torus families: X(g,d) with the twist
// differentials D_gamma^{+/-}, and the profile-built complexes for
// multiple nonseparating twists, transverse-pair twists, and separating
// twists. All complexes are U-truncated to the region f >= |k|+1,
// 0 <= j <= f-|k|-1 of the (filtration, U-exponent) array.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "mtf/chain_complex.hpp"
#include "mtf/exterior.hpp"

namespace mtf {

enum class Family { identity, nonsep, pair, sep };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::identity: return "identity";
        case Family::nonsep: return "nonsep";
        case Family::pair: return "pair";
        case Family::sep: return "sep";
    }
    return "?";
}

struct FamilySpec {
    Family family = Family::identity;
    int g = 2;
    int k = 1;
    int n = 0;  // twist exponent about gamma resp. sigma
    int m = 0;  // pair family: twist exponent about delta's partner
    int i = 0;  // nonsep torsion index, in [0, |n|)
    int a = 0;  // pair torsion indices, in [0, |m|) x [0, |n|)
    int b = 0;

    void validate() const {
        if (g < 2) throw std::invalid_argument("FamilySpec: g must be >= 2");
        switch (family) {
            case Family::identity:
                break;
            case Family::nonsep:
                if (n == 0) throw std::invalid_argument("FamilySpec: nonsep needs n != 0");
                if (i < 0 || i >= std::abs(n))
                    throw std::invalid_argument("FamilySpec: index i out of range [0, |n|)");
                break;
            case Family::pair:
                if (m == 0 || n == 0)
                    throw std::invalid_argument("FamilySpec: pair needs m, n != 0");
                if (a < 0 || a >= std::abs(m))
                    throw std::invalid_argument("FamilySpec: index a out of range [0, |m|)");
                if (b < 0 || b >= std::abs(n))
                    throw std::invalid_argument("FamilySpec: index b out of range [0, |n|)");
                break;
            case Family::sep:
                if (n != 1 && n != -1)
                    throw std::invalid_argument("FamilySpec: sep needs n in {+1, -1}");
                break;
        }
    }

    // d = g - 1 - |k|, the truncation depth; negative means the zero group.
    int depth() const { return g - 1 - std::abs(k); }

    std::string id() const {
        std::string s = family_name(family) + ":g" + std::to_string(g);
        if (family == Family::pair) s += ":m" + std::to_string(m);
        if (family != Family::identity) s += ":n" + std::to_string(n);
        if (family == Family::nonsep) s += ":i" + std::to_string(i);
        if (family == Family::pair)
            s += ":a" + std::to_string(a) + ":b" + std::to_string(b);
        s += ":k" + std::to_string(k);
        return s;
    }

    auto sort_key() const { return std::tuple(family, g, m, n, i, a, b, k); }
    bool operator==(const FamilySpec& o) const { return sort_key() == o.sort_key(); }
    bool operator<(const FamilySpec& o) const { return sort_key() < o.sort_key(); }
};

inline int sign_of(int v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// epsilon(n): 0 for a right-handed twist, -1 for a left-handed one.
inline int epsilon(int n) { return n > 0 ? 0 : -1; }

// ---------------------------------------------------------------------------
// Knot-Floer profile data

struct FactorGen {
    std::string name;
    int filtration = 0;
    int delta = 0;  // degree contribution
};

struct D1Target {
    std::string target;
    int coeff = 1;
    bool raise_u = false;
};

// Factor generators tensored with the ambient Lambda* H^1(Sigma_{g-1});
// every ambient monomial w contributes deg(w) - (g-1) to both filtration
// and degree.
struct ProfileBlock {
    std::vector<FactorGen> factors;
    std::map<std::string, std::vector<D1Target>> d1;
};

struct HFKProfile {
    // Lambda* H^1(Sigma_g) part, built as (X(g,d), D_gamma^{sign});
    // twist_sign 0 means zero differential (identity monodromy).
    bool full_lambda = false;
    int twist_sign = 0;
    std::optional<ProfileBlock> block;
};

inline HFKProfile family_profile(const FamilySpec& spec) {
    spec.validate();
    HFKProfile p;
    switch (spec.family) {
        case Family::identity:
            p.full_lambda = true;
            p.twist_sign = 0;
            break;
        case Family::nonsep:
            if (spec.i == 0) {
                p.full_lambda = true;
                p.twist_sign = sign_of(spec.n);
            } else {
                // H^*(S^1) in filtration 0, zero d1
                p.block = ProfileBlock{{{"s0", 0, 0}, {"s1", 0, 1}}, {}};
            }
            break;
        case Family::pair:
            if (spec.a != 0 || spec.b != 0) {
                p.block = ProfileBlock{{{"1", 0, 0}}, {}};
            } else if (spec.m > 0 && spec.n > 0) {
                p.block = ProfileBlock{
                    {{"e", -1, -1}, {"c", 0, 0}, {"S", 1, 1}},
                    {{"c", {{"e", 1, false}, {"S", 1, true}}}}};
            } else if (spec.m < 0 && spec.n < 0) {
                p.block = ProfileBlock{
                    {{"e", -1, -1}, {"c", 0, 0}, {"S", 1, 1}},
                    {{"e", {{"c", 1, true}}}, {"S", {{"c", 1, false}}}}};
            } else {  // mixed signs: the genus-3/2 profile
                p.block = ProfileBlock{
                    {{"e", -1, -1}, {"c1", 0, 0}, {"c2", 0, 0}, {"c3", 0, 0}, {"S", 1, 1}},
                    {{"e", {{"c1", 1, true}}},
                     {"c2", {{"e", 1, false}, {"S", -1, true}}},
                     {"c3", {{"e", 1, false}, {"S", -1, true}}},
                     {"S", {{"c1", 1, false}}}}};
            }
            break;
        case Family::sep:
            p.full_lambda = true;
            p.twist_sign = sign_of(spec.n);
            // extra H^*(S^1) summand, never interacting with the twist part;
            // its degree alignment tracks the handedness of the twist
            p.block = ProfileBlock{
                {{"s0", 0, epsilon(spec.n)}, {"s1", 0, epsilon(spec.n) + 1}}, {}};
            break;
    }
    return p;
}

// ---------------------------------------------------------------------------
// E^1 complexes

struct E1Generator {
    std::string factor;  // empty for the Lambda* H^1(Sigma_g) part
    Mask ambient = 0;
    int u_exp = 0;
};

struct E1Complex {
    int genus = 1;
    int d = -1;            // X-array depth for the full-lambda part
    bool from_build_x = false;
    ChainComplex cc;
    std::vector<E1Generator> prov;  // parallel to cc.generators
    std::map<std::tuple<std::string, Mask, int>, int> index;

    int add_generator(const std::string& factor, Mask ambient, int u_exp, int degree,
                      int filtration) {
        std::string name =
            (factor.empty() ? "" : factor + "*") + mono_name(ambient) + "*U" + std::to_string(u_exp);
        int idx = static_cast<int>(cc.generators.size());
        cc.generators.push_back({name, degree, filtration, u_exp});
        prov.push_back({factor, ambient, u_exp});
        index[{factor, ambient, u_exp}] = idx;
        return idx;
    }

    std::optional<int> find(const std::string& factor, Mask ambient, int u_exp) const {
        auto it = index.find({factor, ambient, u_exp});
        if (it == index.end()) return std::nullopt;
        return it->second;
    }
};

// X(g,d): generators w (x) U^j with w in Lambda^{2g-i} H^1(Sigma_g),
// 0 <= i <= d, 0 <= j <= d-i; degree deg(w) - g - 2j. Zero differential.
inline E1Complex build_x(int g, int d) {
    if (g < 1) throw std::invalid_argument("build_x: g must be >= 1");
    E1Complex c;
    c.genus = g;
    c.d = d;
    c.from_build_x = true;
    if (d < 0) return c;  // X(g,d) = 0 for d < 0
    SurfaceBasis basis(g);
    for (int i = 0; i <= d; ++i) {
        int deg = 2 * g - i;
        if (deg < 0) continue;
        for (Mask w = 0; w <= basis.full_mask(); ++w) {
            if (mono_degree(w) != deg) continue;
            for (int j = 0; j <= d - i; ++j)
                c.add_generator("", w, j, deg - g - 2 * j, deg - g);
        }
    }
    return c;
}

enum class DGammaVariant { full, plus, minus, h1_class };

// The differential D_zeta(w (x) U^j) = iota_zeta(w) (x) U^j
//                                    + PD(zeta) ^ w (x) U^{j+1},
// with components outside the X(g,d) array truncated to zero. Variants
// plus/minus kill the differential on X_+/X_- per the torus splitting;
// these are tied to zeta = gamma.
inline E1Complex d_gamma(const E1Complex& x, DGammaVariant variant,
                         const std::vector<long long>& zeta_in = {}) {
    if (!x.from_build_x) throw std::invalid_argument("d_gamma: complex was not built by build_x");
    const int g = x.genus;
    std::vector<long long> zeta = zeta_in.empty() ? gamma_pairing(g) : zeta_in;
    if ((variant == DGammaVariant::plus || variant == DGammaVariant::minus) &&
        zeta != gamma_pairing(g))
        throw std::invalid_argument("d_gamma: the +/- splitting is tied to the class gamma");

    AlgebraElement pd = poincare_dual(g, zeta);
    E1Complex out = x;
    out.cc.boundary.clear();
    for (std::size_t s = 0; s < x.prov.size(); ++s) {
        Mask w = x.prov[s].ambient;
        int j = x.prov[s].u_exp;
        if (variant == DGammaVariant::plus && is_plus(w)) continue;
        if (variant == DGammaVariant::minus && !is_plus(w)) continue;

        std::map<std::pair<Mask, int>, long long> image;
        for (const auto& [tm, tc] : contract(zeta, AlgebraElement::monomial(g, w)).terms)
            image[{tm, j}] += tc;
        for (const auto& [tm, tc] : wedge(pd, AlgebraElement::monomial(g, w)).terms)
            image[{tm, j + 1}] += tc;
        for (const auto& [key, coeff] : image) {
            if (auto t = out.find("", key.first, key.second))
                out.cc.add_entry(static_cast<int>(s), *t, coeff);
        }
    }
    return out;
}

// Instantiates the full E^1 complex of a family spec: profile generators
// tensored over all ambient monomials, restricted to filtration >= |k|+1
// with U-towers of height f - |k|, differential from the d1 rule.
inline E1Complex build_e1(const FamilySpec& spec) {
    spec.validate();
    if (spec.k == 0)
        throw std::domain_error("build_e1: torsion spin^c structures (k = 0) are unsupported");
    const int g = spec.g;
    const int kk = std::abs(spec.k);

    E1Complex c;
    c.genus = g;
    if (kk > g - 1) return c;  // adjunction: zero group
    const int d = g - 1 - kk;

    HFKProfile profile = family_profile(spec);

    if (profile.full_lambda) {
        E1Complex x = build_x(g, d);
        if (profile.twist_sign != 0)
            x = d_gamma(x, profile.twist_sign > 0 ? DGammaVariant::plus : DGammaVariant::minus);
        c = x;
    }

    if (profile.block) {
        // ambient monomials live on e3..e_{2g}, the Sigma_{g-1} generators
        SurfaceBasis basis(g);
        Mask ambient_full = basis.full_mask() & ~Mask{3};
        const auto& block = *profile.block;
        for (const auto& f : block.factors) {
            for (Mask w = 0; w <= ambient_full; ++w) {
                if (w & 3) continue;
                int fw = mono_degree(w) - (g - 1);
                int filt = f.filtration + fw;
                if (filt < kk + 1) continue;
                for (int j = 0; j <= filt - kk - 1; ++j)
                    c.add_generator(f.name, w, j, f.delta + fw - 2 * j, filt);
            }
        }
        for (const auto& f : block.factors) {
            auto rule = block.d1.find(f.name);
            if (rule == block.d1.end()) continue;
            for (Mask w = 0; w <= ambient_full; ++w) {
                if (w & 3) continue;
                int fw = mono_degree(w) - (g - 1);
                int filt = f.filtration + fw;
                if (filt < kk + 1) continue;
                for (int j = 0; j <= filt - kk - 1; ++j) {
                    int src = *c.find(f.name, w, j);
                    for (const auto& t : rule->second) {
                        int tj = j + (t.raise_u ? 1 : 0);
                        if (auto tgt = c.find(t.target, w, tj))
                            c.cc.add_entry(src, *tgt, t.coeff);
                    }
                }
            }
        }
    }
    c.d = d;
    c.from_build_x = profile.full_lambda && !profile.block;
    return c;
}

// Sparse endomorphism matrix of the U-action x (x) U^j -> x (x) U^{j+1},
// out-of-range images truncated to zero. Degree -2, commutes with the
// differential. Triples are (target, source, coeff).
inline std::vector<std::tuple<int, int, long long>> u_action(const E1Complex& c) {
    std::vector<std::tuple<int, int, long long>> out;
    for (std::size_t s = 0; s < c.prov.size(); ++s) {
        const auto& p = c.prov[s];
        if (auto t = c.find(p.factor, p.ambient, p.u_exp + 1))
            out.emplace_back(*t, static_cast<int>(s), 1);
    }
    return out;
}

}  // namespace mtf
