#pragma once

// Finitely supported graded abelian groups: free rank plus torsion
// coefficients per integer degree. The empty group is the zero group;
// degrees with (0, empty) are never stored.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace mtf {

struct GradedGroup {
    std::map<int, long long> ranks;
    std::map<int, std::vector<long long>> torsion;  // sorted coefficients > 1

    void add_rank(int degree, long long r) {
        if (r < 0) throw std::invalid_argument("GradedGroup: negative rank");
        if (r == 0) return;
        ranks[degree] += r;
    }

    void add_torsion(int degree, long long coeff) {
        if (coeff <= 1) throw std::invalid_argument("GradedGroup: torsion coefficient must be > 1");
        auto& v = torsion[degree];
        v.insert(std::upper_bound(v.begin(), v.end(), coeff), coeff);
    }

    bool is_zero() const { return ranks.empty() && torsion.empty(); }
    bool torsion_free() const { return torsion.empty(); }

    long long total_rank() const {
        long long t = 0;
        for (const auto& [d, r] : ranks) t += r;
        return t;
    }

    std::optional<int> min_degree() const {
        std::optional<int> m;
        if (!ranks.empty()) m = ranks.begin()->first;
        if (!torsion.empty() && (!m || torsion.begin()->first < *m)) m = torsion.begin()->first;
        return m;
    }

    bool operator==(const GradedGroup& o) const {
        return ranks == o.ranks && torsion == o.torsion;
    }
};

inline GradedGroup shift(const GradedGroup& g, int n) {
    GradedGroup out;
    for (const auto& [d, r] : g.ranks) out.ranks[d + n] = r;
    for (const auto& [d, t] : g.torsion) out.torsion[d + n] = t;
    return out;
}

inline GradedGroup direct_sum(const GradedGroup& a, const GradedGroup& b) {
    GradedGroup out = a;
    for (const auto& [d, r] : b.ranks) out.add_rank(d, r);
    for (const auto& [d, t] : b.torsion)
        for (long long c : t) out.add_torsion(d, c);
    return out;
}

// Tensor product of torsion-free groups; rank_n = sum_{p+q=n} rank_p rank_q.
inline GradedGroup tensor(const GradedGroup& a, const GradedGroup& b) {
    if (!a.torsion_free() || !b.torsion_free())
        throw std::invalid_argument("tensor: torsion operands unsupported");
    GradedGroup out;
    for (const auto& [p, rp] : a.ranks)
        for (const auto& [q, rq] : b.ranks) out.add_rank(p + q, rp * rq);
    return out;
}

inline long long euler_characteristic(const GradedGroup& g) {
    long long chi = 0;
    for (const auto& [d, r] : g.ranks) chi += (d % 2 == 0) ? r : -r;
    return chi;
}

enum class IsoMode { absolute, relative };

// Absolute: equality at every degree. Relative: equality after shifting the
// first group by a single integer; the witness shift is returned on success.
inline std::optional<int> graded_iso(const GradedGroup& a, const GradedGroup& b, IsoMode mode) {
    if (mode == IsoMode::absolute) {
        if (a == b) return 0;
        return std::nullopt;
    }
    if (a.is_zero() && b.is_zero()) return 0;
    if (a.is_zero() != b.is_zero()) return std::nullopt;
    int s = *b.min_degree() - *a.min_degree();
    if (shift(a, s) == b) return s;
    return std::nullopt;
}

// JSON form: {"ranks": {"<degree>": rank, ...}, "torsion": {"<degree>": [...]}}
inline nlohmann::ordered_json to_json(const GradedGroup& g) {
    nlohmann::ordered_json ranks = nlohmann::ordered_json::object();
    for (const auto& [d, r] : g.ranks) ranks[std::to_string(d)] = r;
    nlohmann::ordered_json torsion = nlohmann::ordered_json::object();
    for (const auto& [d, t] : g.torsion) torsion[std::to_string(d)] = t;
    return nlohmann::ordered_json{{"ranks", ranks}, {"torsion", torsion}};
}

inline GradedGroup graded_group_from_json(const nlohmann::json& j) {
    GradedGroup g;
    for (const auto& [k, v] : j.at("ranks").items()) g.add_rank(std::stoi(k), v.get<long long>());
    for (const auto& [k, v] : j.at("torsion").items())
        for (const auto& c : v) g.add_torsion(std::stoi(k), c.get<long long>());
    return g;
}

// CSV rows "degree,rank" in ascending degree, for golden files.
inline std::string to_csv(const GradedGroup& g) {
    std::string s = "degree,rank\n";
    for (const auto& [d, r] : g.ranks)
        s += std::to_string(d) + "," + std::to_string(r) + "\n";
    return s;
}

}  // namespace mtf
