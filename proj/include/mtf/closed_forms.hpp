#pragma once

// Closed-form answers: predicted homology groups per family, X(g,d) rank
// formulas, Seiberg-Witten Euler values, lens-space gradings, the module
// condition, and the fiber-genus criterion.

#include <cstdlib>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "mtf/families.hpp"
#include "mtf/graded_group.hpp"

namespace mtf {

inline long long binom(int n, int r) {
    if (r < 0 || r > n || n < 0) return 0;
    BigInt v = 1;
    for (int t = 1; t <= r; ++t) v = v * (n - r + t) / t;
    return v.convert_to<long long>();
}

// Ranks of X(g,d) = H_*(Sym^d(Sigma_g)): rank binom(2g, 2g-i) in degree
// (2g-i) - g - 2j over 0 <= i <= d, 0 <= j <= d-i. Zero group for d < 0.
inline GradedGroup ranks_x(int g, int d) {
    GradedGroup out;
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d - i; ++j)
            out.add_rank(g - i - 2 * j, binom(2 * g, i));
    return out;
}

inline GradedGroup h_circle() {
    GradedGroup h;
    h.add_rank(0, 1);
    h.add_rank(1, 1);
    return h;
}

inline GradedGroup h_two_circles() {
    GradedGroup h;
    h.add_rank(0, 2);
    h.add_rank(1, 2);
    return h;
}

// Lambda^r H^1(Sigma_{g-1}) concentrated in degree q.
inline GradedGroup lambda_term(int g, int r, int q) {
    GradedGroup out;
    out.add_rank(q, binom(2 * g - 2, r));
    return out;
}

struct Prediction {
    FamilySpec spec;
    GradedGroup group;
    bool special = false;  // distinguished spin^c structure (i=0 / a=b=0 / sep)
};

inline Prediction predict(const FamilySpec& spec) {
    spec.validate();
    if (spec.k == 0)
        throw std::domain_error("predict: torsion spin^c structures (k = 0) are unsupported");
    const int g = spec.g;
    Prediction p;
    p.spec = spec;
    switch (spec.family) {
        case Family::identity: p.special = true; break;
        case Family::nonsep: p.special = spec.i == 0; break;
        case Family::pair: p.special = spec.a == 0 && spec.b == 0; break;
        case Family::sep: p.special = true; break;
    }
    if (std::abs(spec.k) > g - 1) return p;  // adjunction: zero group
    const int d = spec.depth();

    GradedGroup core = ranks_x(g - 1, d - 1);
    switch (spec.family) {
        case Family::identity:
            p.group = ranks_x(g, d);
            break;
        case Family::nonsep:
            if (spec.i == 0)
                p.group = direct_sum(shift(tensor(core, h_circle()), epsilon(spec.n)),
                                     lambda_term(g, 2 * g - 2 - d, g - d));
            else
                p.group = tensor(core, h_circle());
            break;
        case Family::pair:
            if (spec.a == 0 && spec.b == 0) {
                int s = (spec.m > 0 && spec.n > 0) ? 0 : (spec.m * spec.n < 0 ? -1 : -2);
                p.group = direct_sum(shift(core, s), lambda_term(g, 2 * g - 2 - d, g - 1 - d));
            } else {
                p.group = core;
            }
            break;
        case Family::sep:
            p.group = direct_sum(shift(tensor(core, h_two_circles()), epsilon(spec.n)),
                                 lambda_term(g, 2 * g - 2 - d, g - d));
            break;
    }
    return p;
}

// |chi| expected for the identity and nonsep i=0 families.
inline long long sw_euler(int g, int k) {
    if (k == 0) throw std::domain_error("sw_euler: k = 0 is unsupported");
    if (std::abs(k) > g - 1)
        throw std::invalid_argument("sw_euler: need 0 < |k| <= g-1");
    return binom(2 * g - 2, g - 1 - std::abs(k));
}

// Absolute grading of the generator of HF-hat of the lens space L(m,1) in
// its a-th spin^c structure: (2a-m)^2/(4m) - 1/4, exactly.
inline boost::rational<long long> lens_grading(long long m, long long a) {
    if (m == 0) throw std::invalid_argument("lens_grading: m must be nonzero");
    long long t = 2 * a - m;
    return boost::rational<long long>(t * t, 4 * m) - boost::rational<long long>(1, 4);
}

// Module-structure criterion (M + g_s - 2) - 2|k| < m + |k| evaluated from
// the profile's degree-minus-filtration extremes. Reduces to g < 3|k|+2
// for all families except the separating twist, where it is g < 3|k|+1.
inline bool module_condition(const FamilySpec& spec) {
    spec.validate();
    HFKProfile profile = family_profile(spec);
    int big_m = 0, small_m = 0, top_filtration = 0;
    bool seeded = false;
    if (profile.full_lambda) {
        // delta == filtration throughout Lambda* H^1(Sigma_g)
        big_m = small_m = 0;
        top_filtration = spec.g;
        seeded = true;
    }
    if (profile.block) {
        for (const auto& f : profile.block->factors) {
            int disc = f.delta - f.filtration;
            int top = f.filtration + (spec.g - 1);
            if (!seeded) {
                big_m = small_m = disc;
                top_filtration = top;
                seeded = true;
            } else {
                big_m = std::max(big_m, disc);
                small_m = std::min(small_m, disc);
                top_filtration = std::max(top_filtration, top);
            }
        }
    }
    int kk = std::abs(spec.k);
    return (big_m + top_filtration - 2) - 2 * kk < small_m + kk;
}

// Fiber genus criterion: h is realizable iff h = g + n(g-1) for some n >= 0.
inline bool fiber_genus_allowed(int g, int h) {
    if (g < 2) throw std::invalid_argument("fiber_genus_allowed: g must be >= 2");
    if (h <= 1) throw std::domain_error("fiber_genus_allowed: torus bundles are unsupported");
    return h >= g && (h - g) % (g - 1) == 0;
}

}  // namespace mtf
