#ifndef LVCOX_FACTORIALIZE_HPP
#define LVCOX_FACTORIALIZE_HPP

// Turns a complete skeleton into a factorial complete one, one element of S
// at a time, without decreasing iota and without changing the set of moved
// simple roots. For each alpha in S with color D (varsigma(D) = {alpha}):
//
//   1. pick theta in the iota-optimal face maximizing <c(D), theta>;
//   2. if <c(D), theta> >= 0, add a second color copying D (alpha becomes a
//      spherical root of type a, so 2 alpha is renormalized to alpha);
//   3. otherwise check the structural statements on the unique gamma with
//      <c(D), gamma> = -1, move theta first along -2 alpha, then along
//      -2 alpha - 2 gamma, as far as the region allows, and add either the
//      color (if the pairing became nonnegative) or a G-invariant divisor
//      with c = alpha^* (-1 on 2 alpha, 0 elsewhere), which needs the
//      2 alpha-coefficient of the moved theta to vanish.
//
// The statements in step 3 hold for skeletons of actual spherical varieties;
// they are re-checked here and AxiomViolation is thrown when they fail.

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "cox.hpp"
#include "errors.hpp"
#include "exact.hpp"
#include "iota.hpp"
#include "skeleton.hpp"

namespace lvcox {

enum class StepCase { AddColor, AddInvariantDivisor };

inline const char* to_string(StepCase c) {
    return c == StepCase::AddColor ? "Add-Color" : "Add-Invariant-Divisor";
}

struct FactorializeStep {
    std::size_t alpha = 0;
    StepCase kind = StepCase::AddColor;
    Vec theta;        // optimal point picked in step 1 (coordinates of the step's input)
    Vec theta_prime;  // point after the moves of step 3 (equal to theta when skipped)
    Rat lambda1 = 0;
    Rat lambda2 = 0;
    Divisor added_divisor;
};

struct FactorializeTrace {
    std::vector<FactorializeStep> steps;
    IotaReport iota_before;
    IotaReport iota_after;
};

struct FactorializeOptions {
    /// m assigned to an added G-invariant divisor.
    std::int64_t invariant_m = 1;
};

struct FactorializeResult {
    SphericalSkeleton skeleton;
    FactorializeTrace trace;
};

namespace detail {

inline std::string unique_divisor_name(const SphericalSkeleton& sk, std::string base) {
    auto taken = [&](const std::string& n) {
        for (const Divisor& d : sk.divisors)
            if (d.name == n) return true;
        return false;
    };
    while (taken(base)) base += "'";
    return base;
}

// Largest lambda >= 0 with point + lambda * dir in `region`.
inline Rat max_step(const Polyhedron& region, const Vec& point, const Vec& dir) {
    Polyhedron line;
    line.dim = 1;
    line.add({Rat(1)}, 0);
    for (const Halfspace& h : region.rows) line.add({dot(h.normal, dir)}, h.rhs - dot(h.normal, point));
    const LpOutcome out = solve_lp(line, {Rat(1)});
    const auto* opt = std::get_if<Optimal>(&out);
    if (!opt) throw AxiomViolation("factorialize: step along adjustment direction is not bounded");
    return opt->value;
}

inline Vec axpy(const Vec& x, const Rat& a, const Vec& y) {
    Vec out = x;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += a * y[i];
    return out;
}

} // namespace detail

inline FactorializeResult factorialize(const SphericalSkeleton& input, const FactorializeOptions& opts = {}) {
    require_valid(input);
    if (!is_complete(input)) throw NotComplete("factorialize: skeleton is not complete");
    if (opts.invariant_m < 1) throw Error("factorialize: invariant_m must be positive");

    FactorializeResult res;
    res.skeleton = input;
    res.trace.iota_before = iota(input);
    SphericalSkeleton& cur = res.skeleton;

    for (;;) {
        const DerivedSets ds = derived_sets(cur);
        if (ds.script_S.empty()) break;
        const std::size_t alpha = ds.script_S.front();
        const std::string& label = cur.rs.label(alpha);
        const std::size_t a = *doubled_root_index(cur, alpha);
        std::size_t d2a = 0;
        while (cur.divisors[d2a].name != ds.d_script_S.front()) ++d2a;
        const Divisor color = cur.divisors[d2a];
        const Vec& c2a = color.c;
        const std::size_t r = cur.r();

        const Polyhedron region = iota_region(cur);
        const Vec objective = iota_objective(cur);
        const LpOutcome lp = solve_lp(region, objective, c2a);
        const auto* opt = std::get_if<Optimal>(&lp);
        if (!opt) throw Error("factorialize: iota LP of a complete skeleton is not bounded");
        const IotaReport iota_cur = iota(cur);

        FactorializeStep step;
        step.alpha = alpha;
        step.theta = opt->witness;
        step.theta_prime = opt->witness;

        bool add_color = dot(c2a, step.theta) >= 0;
        if (!add_color) {
            auto fail = [&](const std::string& what) {
                throw AxiomViolation("factorialize at " + label + ": " + what);
            };
            std::vector<std::size_t> negative;
            for (std::size_t j = 0; j < r; ++j)
                if (c2a[j] < 0) negative.push_back(j);
            if (negative.size() != 1)
                fail(std::to_string(negative.size()) +
                     " spherical roots pair negatively with the color (expected exactly one)");
            const std::size_t g = negative.front();
            if (g == a) fail("the color pairs negatively with 2" + label);
            if (c2a[g] != -1) fail("pairing of the color with gamma is " + to_string(c2a[g]) + ", not -1");

            std::vector<bool> starred(cur.divisors.size(), false);
            for (std::size_t d = 0; d < cur.divisors.size(); ++d)
                starred[d] = d == d2a || cur.divisors[d].c[g] > 0;
            Rat sum_a = 0, sum_g = 0;
            bool strict = false;
            for (std::size_t d = 0; d < cur.divisors.size(); ++d) {
                const Vec& c = cur.divisors[d].c;
                if (starred[d]) {
                    sum_a += c[a];
                    sum_g += c[g];
                } else {
                    if (c[a] > 0 || c[g] > 0)
                        fail("divisor " + cur.divisors[d].name + " outside D* pairs positively");
                    strict = strict || c[a] < 0 || c[g] < 0;
                }
            }
            if (sum_a != 0) fail("pairings of D* with 2" + label + " sum to " + to_string(sum_a) + ", not 0");
            if (sum_g != 1) fail("pairings of D* with gamma sum to " + to_string(sum_g) + ", not 1");
            if (!strict) fail("no divisor outside D* pairs strictly negatively");

            Vec v1 = zeros(r);
            v1[a] = -1;
            Vec v2 = v1;
            v2[g] = -2;
            step.lambda1 = detail::max_step(region, step.theta, v1);
            const Vec moved = detail::axpy(step.theta, step.lambda1, v1);
            step.lambda2 = detail::max_step(region, moved, v2);
            step.theta_prime = detail::axpy(moved, step.lambda2, v2);

            if (!region.contains(step.theta_prime) ||
                dot(objective, step.theta_prime) != opt->value)
                fail("adjusted point left the optimal face");
            add_color = dot(c2a, step.theta_prime) >= 0;
            if (!add_color && step.theta_prime[a] != 0)
                fail("adjusted point has nonzero coefficient " + to_string(step.theta_prime[a]) +
                     " on 2" + label);
        }

        if (add_color) {
            step.kind = StepCase::AddColor;
            Divisor extra = color;
            extra.name = detail::unique_divisor_name(cur, color.name + "'");
            cur.divisors.push_back(extra);
            cur.sigma_sc[a][alpha] = 1;
            for (Divisor& d : cur.divisors) d.c[a] /= 2;
            step.added_divisor = cur.divisors.back();
        } else {
            step.kind = StepCase::AddInvariantDivisor;
            Divisor extra;
            extra.name = detail::unique_divisor_name(cur, "E." + label);
            extra.c = zeros(r);
            extra.c[a] = -1;
            extra.m = opts.invariant_m;
            cur.divisors.push_back(extra);
            step.added_divisor = extra;
        }
        res.trace.steps.push_back(std::move(step));

        const DerivedSets after = derived_sets(cur);
        if (after.script_S.size() + 1 != ds.script_S.size())
            throw AxiomViolation("factorialize at " + label + ": S did not shrink by exactly one");
        const IotaReport iota_next = iota(cur);
        if (iota_next.infinite() || *iota_next.value < *iota_cur.value)
            throw Error("factorialize at " + label + ": iota decreased");
    }
    res.trace.iota_after = iota(cur);
    if (cur.moved() != input.moved()) throw Error("factorialize: moved simple roots changed");
    return res;
}

} // namespace lvcox

#endif // LVCOX_FACTORIALIZE_HPP
