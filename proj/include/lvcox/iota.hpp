#ifndef LVCOX_IOTA_HPP
#define LVCOX_IOTA_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <variant>

#include "cox.hpp"
#include "errors.hpp"
#include "exact.hpp"
#include "roots.hpp"
#include "skeleton.hpp"

namespace lvcox {

/// The invariant iota: a rational or infinity. When finite, `witness` holds
/// the coefficients over Sigma^sc of an optimal theta; when infinite, `ray`
/// (and `witness`, the base point) certify unboundedness.
struct IotaReport {
    std::optional<Rat> value;  // nullopt = infinity
    std::optional<Vec> witness;
    std::optional<Vec> ray;
    Rat base_term = 0;  // sum_D (m_D - 1)

    bool infinite() const { return !value.has_value(); }
    std::string value_string() const { return value ? to_string(*value) : "inf"; }
};

inline Rat base_term(const SphericalSkeleton& sk) {
    Rat s = 0;
    for (const Divisor& d : sk.divisors) s += d.m - 1;
    return s;
}

/// Q* cap T in coordinates t over Sigma^sc: t >= 0 and <c(D), t> >= -m_D.
inline Polyhedron iota_region(const SphericalSkeleton& sk) {
    Polyhedron p;
    p.dim = sk.r();
    for (std::size_t i = 0; i < sk.r(); ++i) p.add(unit(sk.r(), i), 0);
    for (const Divisor& d : sk.divisors) p.add(d.c, Rat(-d.m));
    return p;
}

/// Linear part of the iota objective: sum_D c(D).
inline Vec iota_objective(const SphericalSkeleton& sk) {
    Vec obj = zeros(sk.r());
    for (const Divisor& d : sk.divisors)
        for (std::size_t i = 0; i < sk.r(); ++i) obj[i] += d.c[i];
    return obj;
}

inline IotaReport report_from(const LpOutcome& out, const Rat& base) {
    IotaReport rep;
    rep.base_term = base;
    if (const auto* opt = std::get_if<Optimal>(&out)) {
        rep.value = base + opt->value;
        rep.witness = opt->witness;
    } else if (const auto* unb = std::get_if<Unbounded>(&out)) {
        rep.witness = unb->base;
        rep.ray = unb->ray;
    } else {
        // the origin is always feasible
        throw Error("iota: LP reported infeasible");
    }
    return rep;
}

/// sup of sum_D (m_D - 1 + <c(D), theta>) over theta in Q* cap T.
inline IotaReport iota(const SphericalSkeleton& sk) {
    require_valid(sk);
    const Rat base = base_term(sk);
    IotaReport rep = report_from(solve_lp(iota_region(sk), iota_objective(sk)), base);
    if (rep.value && (*rep.value < base || base < 0))
        throw Error("iota: value below sum (m_D - 1)");
    return rep;
}

/// iota of a factorial skeleton read as the affine variety Spec R(X): in e_D
/// coordinates, theta = lambda + pi^*(v) with lambda = sum m_D e_D, v in T,
/// theta >= 0; value is sup sum_D theta_D - |Delta|. The LP runs over
/// (theta, v) jointly, independently of the Q* formulation.
inline IotaReport iota_affine(const SphericalSkeleton& sk) {
    if (!is_factorial(sk)) throw NotFactorial("iota_affine: skeleton is not factorial");
    const CoxAmbient amb = cox_ambient(sk);
    const std::size_t k = amb.basis_index.size();
    const std::size_t r = amb.r();
    Polyhedron p;
    p.dim = k + r;
    for (std::size_t j = 0; j < k + r; ++j) p.add(unit(k + r, j), 0);
    for (std::size_t d = 0; d < k; ++d) {
        Vec row = unit(k + r, d);
        for (std::size_t i = 0; i < r; ++i) row[k + i] = -amb.pullback_matrix[d][i];
        p.add_equality(row, Rat(sk.divisors[d].m));
    }
    Vec obj = zeros(k + r);
    for (std::size_t d = 0; d < k; ++d) obj[d] = 1;
    const LpOutcome out = solve_lp(p, obj);

    IotaReport rep;
    rep.base_term = base_term(sk);
    const Rat rank_bar = static_cast<long long>(k);
    auto tail = [&](const Vec& x) { return Vec(x.begin() + static_cast<std::ptrdiff_t>(k), x.end()); };
    if (const auto* opt = std::get_if<Optimal>(&out)) {
        rep.value = opt->value - rank_bar;
        rep.witness = tail(opt->witness);
    } else if (const auto* unb = std::get_if<Unbounded>(&out)) {
        rep.witness = tail(unb->base);
        rep.ray = tail(unb->ray);
    } else {
        throw Error("iota_affine: LP reported infeasible");
    }
    return rep;
}

enum class Verdict { HoldsStrict, HoldsWithEquality, Violation, NotComplete };

inline const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::HoldsStrict: return "HoldsStrict";
    case Verdict::HoldsWithEquality: return "HoldsWithEquality";
    case Verdict::Violation: return "Violation";
    case Verdict::NotComplete: return "NotComplete";
    }
    return "?";
}

struct ConjectureVerdict {
    IotaReport iota;
    std::size_t dim_gp = 0;
    Verdict verdict = Verdict::NotComplete;
};

/// Compares iota with dim G/P, where P is the stabilizer of the open B-orbit
/// (its Levi's simple roots are those moving no divisor). Equality is
/// reported without certifying linearity.
inline ConjectureVerdict check_conjecture(const SphericalSkeleton& sk) {
    ConjectureVerdict v;
    v.iota = iota(sk);
    v.dim_gp = dim_GP(sk.rs, sk.moved());
    if (!is_complete(sk)) {
        v.verdict = Verdict::NotComplete;
        return v;
    }
    if (v.iota.infinite()) throw Error("check_conjecture: complete skeleton with infinite iota");
    const Rat dim = static_cast<long long>(v.dim_gp);
    if (*v.iota.value < dim)
        v.verdict = Verdict::HoldsStrict;
    else if (*v.iota.value == dim)
        v.verdict = Verdict::HoldsWithEquality;
    else
        v.verdict = Verdict::Violation;
    return v;
}

} // namespace lvcox

#endif // LVCOX_IOTA_HPP
