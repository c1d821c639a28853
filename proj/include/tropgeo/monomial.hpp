#pragma once

#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "tropgeo/rational.hpp"

namespace tropgeo {

// Exponent vector of a Laurent monomial x^u; negative entries allowed.
using Monomial = std::vector<long long>;

// Canonical term order: total degree first, then lexicographic. Fixes a
// deterministic iteration order for every downstream report.
struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        long long da = std::accumulate(a.begin(), a.end(), 0LL);
        long long db = std::accumulate(b.begin(), b.end(), 0LL);
        if (da != db) return da < db;
        return a < b;
    }
};

inline Monomial mono_add(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Rat mono_dot(const Monomial& u, std::span<const Rat> w) {
    Rat acc(0);
    for (std::size_t i = 0; i < u.size(); ++i) acc += w[i] * u[i];
    return acc;
}

// "x^2*y", "x^(-1)", "1" for the unit monomial.
inline std::string mono_to_string(const Monomial& u, std::span<const std::string> vars) {
    std::string out;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += vars[i];
        if (u[i] != 1) {
            if (u[i] < 0)
                out += "^(" + std::to_string(u[i]) + ")";
            else
                out += "^" + std::to_string(u[i]);
        }
    }
    return out.empty() ? "1" : out;
}

inline std::string mono_to_string(const Monomial& u) {
    std::vector<std::string> vars;
    if (u.size() == 1) {
        vars = {"x"};
    } else {
        for (std::size_t i = 0; i < u.size(); ++i) vars.push_back("x" + std::to_string(i + 1));
        if (u.size() == 2) vars = {"x", "y"};
        if (u.size() == 3) vars = {"x", "y", "z"};
        if (u.size() == 4) vars = {"x", "y", "z", "w"};
    }
    return mono_to_string(u, vars);
}

}  // namespace tropgeo
