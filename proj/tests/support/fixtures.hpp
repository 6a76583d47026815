#pragma once

// Hand-derived fixtures, built in code so the corpus files can be checked
// against them.

#include <set>
#include <string>
#include <vector>

#include <lvcox/skeleton.hpp>

namespace fixtures {

using lvcox::Divisor;
using lvcox::Rat;
using lvcox::RootSystem;
using lvcox::RootSystemSpec;
using lvcox::SphericalSkeleton;
using lvcox::Vec;

inline Vec v(std::initializer_list<long long> xs) {
    Vec out;
    for (long long x : xs) out.push_back(Rat(x));
    return out;
}

inline Divisor div(std::string name, std::set<std::size_t> varsigma, Vec c, std::int64_t m = 1) {
    return Divisor{std::move(name), std::move(varsigma), std::move(c), m};
}

inline SphericalSkeleton make(std::string name, const std::string& spec, std::vector<Vec> sigma,
                              std::vector<Divisor> divisors) {
    SphericalSkeleton sk;
    sk.name = std::move(name);
    sk.rs = RootSystem(RootSystemSpec::parse(spec));
    sk.sigma_sc = std::move(sigma);
    sk.divisors = std::move(divisors);
    return sk;
}

// point: G/G with G of type A1
inline SphericalSkeleton pt() { return make("FIX-PT", "A1", {}, {}); }

// P^1 = SL2/B, one color of multiplicity 2
inline SphericalSkeleton p1() { return make("FIX-P1", "A1", {}, {div("D", {0}, {}, 2)}); }

// P^2 as SL2-variety: spherical root 2 alpha, color plus the invariant conic
inline SphericalSkeleton p2() {
    return make("FIX-P2", "A1", {v({2})}, {div("D", {0}, v({2})), div("E", {}, v({-1}))});
}

// SL2/N(T): not complete
inline SphericalSkeleton s2() { return make("FIX-S2", "A1", {v({2})}, {div("D", {0}, v({2}))}); }

inline SphericalSkeleton f1() {
    return make("FIX-F1", "A1xA1", {v({2, 0}), v({0, 1})},
                {div("D1", {0}, v({2, 0})), div("D2", {1}, v({0, 1})), div("D3", {1}, v({0, 1})),
                 div("E", {}, v({-2, -1}))});
}

// Synthetic complete datum reaching the Add-Invariant-Divisor branch.
inline SphericalSkeleton inv() {
    return make("FIX-INV", "A1xA1", {v({2, 0}), v({0, 2})},
                {div("D", {0}, v({2, -1})), div("F", {1}, v({-2, 2})), div("E", {}, v({-2, 0}))});
}

// As inv(), but the pairings of D* with gamma sum to 2.
inline SphericalSkeleton axiom_violation() {
    return make("FIX-AV", "A1xA1", {v({2, 0}), v({0, 2})},
                {div("D", {0}, v({2, -1})), div("F", {1}, v({-2, 3})), div("E", {}, v({-2, 0}))});
}

inline std::vector<SphericalSkeleton> complete_fixtures() { return {pt(), p1(), p2(), f1(), inv()}; }

} // namespace fixtures
