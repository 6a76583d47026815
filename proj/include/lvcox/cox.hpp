#ifndef LVCOX_COX_HPP
#define LVCOX_COX_HPP

// The skeleton of Spec of the Cox ring, its class group, the weight lattice
// with basis (e_D) and the maps pi^*, pi_*, and the fixed-point criterion.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "exact.hpp"
#include "skeleton.hpp"

namespace lvcox {

struct CoxResult {
    SphericalSkeleton skeleton;
    /// (new divisor name, source divisor name), in output divisor order.
    std::vector<std::pair<std::string, std::string>> provenance;
};

/// Every color of D^S is split into D' and D'' with the same varsigma and m,
/// and each 2 alpha with alpha in S is renormalized to alpha (which halves the
/// corresponding column of pairings). Everything else is copied.
inline CoxResult cox_transform(const SphericalSkeleton& sk) {
    const DerivedSets ds = derived_sets(sk);
    CoxResult out;
    out.skeleton.name = sk.name;
    out.skeleton.rs = sk.rs;
    out.skeleton.sigma_sc = sk.sigma_sc;

    std::vector<bool> halve(sk.r(), false);
    for (std::size_t alpha : ds.script_S) {
        const std::size_t k = *doubled_root_index(sk, alpha);
        halve[k] = true;
        out.skeleton.sigma_sc[k][alpha] = 1;
    }
    for (const Divisor& d : sk.divisors) {
        Divisor copy = d;
        for (std::size_t k = 0; k < sk.r(); ++k)
            if (halve[k]) copy.c[k] /= 2;
        const bool split =
            std::find(ds.d_script_S.begin(), ds.d_script_S.end(), d.name) != ds.d_script_S.end();
        if (split) {
            Divisor second = copy;
            copy.name = d.name + "'";
            second.name = d.name + "''";
            out.provenance.emplace_back(copy.name, d.name);
            out.provenance.emplace_back(second.name, d.name);
            out.skeleton.divisors.push_back(std::move(copy));
            out.skeleton.divisors.push_back(std::move(second));
        } else {
            out.provenance.emplace_back(copy.name, d.name);
            out.skeleton.divisors.push_back(std::move(copy));
        }
    }
    return out;
}

struct ClassGroup {
    std::size_t rank = 0;
    std::vector<std::string> generator_names;
};

/// Cl(Spec R(X)) is free of rank |S|, one generator per color in D^S.
inline ClassGroup class_group(const SphericalSkeleton& sk) {
    const DerivedSets ds = derived_sets(sk);
    return {ds.script_S.size(), ds.d_script_S};
}

/// Weight lattice of Spec R(X) with basis (e_D). Row D of the pullback
/// matrix is c(D), so pi^*(v) = sum_D <c(D), v> e_D and pi_* is the transpose.
struct CoxAmbient {
    std::vector<std::string> basis_index;
    Mat pullback_matrix;
    /// pi^*(sigma_i) for each spherical root, in e_D coordinates.
    std::vector<Vec> t_bar_generators;

    std::size_t r() const { return t_bar_generators.size(); }

    /// `v` in coordinates over Sigma^sc.
    Vec pullback(const Vec& v) const {
        if (v.size() != r()) throw DimensionMismatch("pullback: expected " + std::to_string(r()));
        Vec out;
        out.reserve(pullback_matrix.size());
        for (const Vec& row : pullback_matrix) out.push_back(dot(row, v));
        return out;
    }

    /// `u` in the dual basis (e_D^*); result is a functional on Lambda given
    /// by its values on Sigma^sc.
    Vec pushforward(const Vec& u) const {
        if (u.size() != pullback_matrix.size())
            throw DimensionMismatch("pushforward: expected " + std::to_string(pullback_matrix.size()));
        Vec out = zeros(r());
        for (std::size_t d = 0; d < u.size(); ++d)
            for (std::size_t i = 0; i < r(); ++i) out[i] += u[d] * pullback_matrix[d][i];
        return out;
    }
};

inline CoxAmbient cox_ambient(const SphericalSkeleton& sk) {
    require_valid(sk);
    CoxAmbient a;
    for (const Divisor& d : sk.divisors) {
        a.basis_index.push_back(d.name);
        a.pullback_matrix.push_back(d.c);
    }
    for (std::size_t i = 0; i < sk.r(); ++i) {
        Vec col;
        col.reserve(sk.divisors.size());
        for (const Divisor& d : sk.divisors) col.push_back(d.c[i]);
        a.t_bar_generators.push_back(std::move(col));
    }
    return a;
}

/// Spec R(X) has a fixed point iff the relative interior of cone(e_D^*)
/// meets the valuation cone, i.e. some u > 0 has sum_D u_D <c(D), sigma_i> <= 0
/// for all i. Solved as: max eps with u_D >= eps, sum u = 1.
inline bool has_fixed_point(const SphericalSkeleton& sk) {
    require_valid(sk);
    const std::size_t k = sk.divisors.size();
    if (k == 0) return true;
    Polyhedron p;
    p.dim = k + 1;
    for (std::size_t d = 0; d < k; ++d) {
        Vec row = unit(k + 1, d);
        row[k] = -1;
        p.add(std::move(row), 0);
    }
    Vec ones(k + 1, Rat(1));
    ones[k] = 0;
    p.add_equality(ones, 1);
    for (std::size_t i = 0; i < sk.r(); ++i) {
        Vec row = zeros(k + 1);
        for (std::size_t d = 0; d < k; ++d) row[d] = -sk.divisors[d].c[i];
        p.add(std::move(row), 0);
    }
    const LpOutcome out = solve_lp(p, unit(k + 1, k));
    const auto* opt = std::get_if<Optimal>(&out);
    return opt && opt->value > 0;
}

} // namespace lvcox

#endif // LVCOX_COX_HPP
