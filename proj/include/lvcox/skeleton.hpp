#ifndef LVCOX_SKELETON_HPP
#define LVCOX_SKELETON_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "exact.hpp"
#include "roots.hpp"

namespace lvcox {

/// A B-invariant prime divisor. `c[i]` is the pairing of its valuation with
/// the i-th spherically closed spherical root; `varsigma` holds indices of the
/// simple roots whose minimal parabolic moves it; `m` is its coefficient in
/// the anticanonical divisor.
struct Divisor {
    std::string name;
    std::set<std::size_t> varsigma;
    Vec c;
    std::int64_t m = 1;

    bool is_color() const { return !varsigma.empty(); }
    friend bool operator==(const Divisor&, const Divisor&) = default;
};

/// (R, S, Sigma^sc, Delta). Sigma^sc entries are coefficient vectors over
/// the simple roots of `rs`.
struct SphericalSkeleton {
    std::string name;
    RootSystem rs;
    std::vector<Vec> sigma_sc;
    std::vector<Divisor> divisors;

    std::size_t r() const { return sigma_sc.size(); }

    const Divisor& divisor(const std::string& n) const {
        for (const Divisor& d : divisors)
            if (d.name == n) return d;
        throw Error("no divisor named '" + n + "'");
    }
    std::vector<Vec> c_vectors() const {
        std::vector<Vec> out;
        out.reserve(divisors.size());
        for (const Divisor& d : divisors) out.push_back(d.c);
        return out;
    }
    /// Union of varsigma over all divisors.
    std::set<std::size_t> moved() const {
        std::set<std::size_t> out;
        for (const Divisor& d : divisors) out.insert(d.varsigma.begin(), d.varsigma.end());
        return out;
    }
};

struct Violation {
    std::string rule;  // "V0" (shape) or "V1".."V6"
    std::string where;
    std::string message;
    friend bool operator==(const Violation&, const Violation&) = default;
};

inline std::string describe(const std::vector<Violation>& vs) {
    std::string s;
    for (const Violation& v : vs) {
        if (!s.empty()) s += "; ";
        s += v.rule + " at " + v.where + ": " + v.message;
    }
    return s;
}

/// If `sigma` = k * alpha_i for a single simple root, returns (i, k).
inline std::optional<std::pair<std::size_t, Rat>> simple_multiple(const Vec& sigma) {
    std::optional<std::pair<std::size_t, Rat>> found;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (sigma[i] == 0) continue;
        if (found) return std::nullopt;
        found = std::make_pair(i, sigma[i]);
    }
    return found;
}

/// Index of the spherical root equal to 2*alpha_i, if any.
inline std::optional<std::size_t> doubled_root_index(const SphericalSkeleton& sk, std::size_t alpha) {
    for (std::size_t k = 0; k < sk.sigma_sc.size(); ++k) {
        auto sm = simple_multiple(sk.sigma_sc[k]);
        if (sm && sm->first == alpha && sm->second == 2) return k;
    }
    return std::nullopt;
}

inline std::vector<Violation> validate(const SphericalSkeleton& sk) {
    std::vector<Violation> out;
    const std::size_t n = sk.rs.rank();
    const std::size_t r = sk.r();
    auto root_where = [&](std::size_t k) { return "spherical root #" + std::to_string(k + 1); };

    // V0: shapes and names
    bool shapes_ok = true;
    for (std::size_t k = 0; k < r; ++k)
        if (sk.sigma_sc[k].size() != n) {
            out.push_back({"V0", root_where(k), "has " + std::to_string(sk.sigma_sc[k].size()) +
                                                    " coefficients, root system rank is " +
                                                    std::to_string(n)});
            shapes_ok = false;
        }
    std::set<std::string> names;
    for (const Divisor& d : sk.divisors) {
        if (d.name.empty()) out.push_back({"V0", "divisor", "empty name"});
        if (!names.insert(d.name).second) out.push_back({"V0", d.name, "duplicate divisor name"});
        if (d.c.size() != r) {
            out.push_back({"V0", d.name, "c has " + std::to_string(d.c.size()) + " entries, expected " +
                                             std::to_string(r)});
            shapes_ok = false;
        }
        for (std::size_t a : d.varsigma)
            if (a >= n) {
                out.push_back({"V0", d.name, "varsigma references simple root #" + std::to_string(a + 1)});
                shapes_ok = false;
            }
    }
    if (!shapes_ok) return out;

    // V1: Sigma^sc linearly independent with nonnegative expansions
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (sk.sigma_sc[k][i] < 0)
                out.push_back({"V1", root_where(k), "negative coefficient on " + sk.rs.label(i)});
    if (!is_linearly_independent(sk.sigma_sc))
        out.push_back({"V1", "spherical roots", "not linearly independent"});

    // V2: integrality of the pairings
    for (const Divisor& d : sk.divisors)
        for (std::size_t k = 0; k < r; ++k)
            if (!is_integral(d.c[k]))
                out.push_back({"V2", d.name, "pairing with " + root_where(k) + " is " +
                                                 to_string(d.c[k]) + ", not an integer"});

    // V3: G-invariant divisors (empty varsigma) are valuations in V = -T^vee
    for (const Divisor& d : sk.divisors)
        if (!d.is_color())
            for (std::size_t k = 0; k < r; ++k)
                if (d.c[k] > 0)
                    out.push_back({"V3", d.name, "G-invariant divisor pairs positively with " +
                                                     root_where(k)});

    // V4 / V6: color counts and normalization of simple spherical roots
    for (std::size_t k = 0; k < r; ++k) {
        auto sm = simple_multiple(sk.sigma_sc[k]);
        if (!sm) continue;
        const auto [alpha, mult] = *sm;
        const std::string& lab = sk.rs.label(alpha);
        std::vector<const Divisor*> movers;
        for (const Divisor& d : sk.divisors)
            if (d.varsigma.count(alpha)) movers.push_back(&d);
        if (mult == 2) {
            if (movers.size() != 1)
                out.push_back({"V4", lab, "2" + lab + " is a spherical root but " +
                                              std::to_string(movers.size()) +
                                              " colors move it (expected exactly one)"});
            else if (movers.front()->varsigma.size() != 1)
                out.push_back({"V4", lab, "the color " + movers.front()->name + " of 2" + lab +
                                              " must have varsigma = {" + lab + "}"});
        } else if (mult == 1) {
            if (movers.size() != 2)
                out.push_back({"V4", lab, lab + " is a spherical root but " +
                                              std::to_string(movers.size()) +
                                              " colors move it (expected exactly two)"});
            if (movers.size() == 1)
                out.push_back({"V6", lab, "moved by exactly one color, so its ray must be stored as 2" +
                                              lab});
        } else {
            out.push_back({"V6", lab, "spherical root " + to_string(mult) + "*" + lab +
                                          " is neither the simple root nor its double"});
        }
    }

    // V5
    for (const Divisor& d : sk.divisors)
        if (d.m < 1) out.push_back({"V5", d.name, "m = " + std::to_string(d.m) + " is not positive"});
    return out;
}

inline void require_valid(const SphericalSkeleton& sk) {
    auto vs = validate(sk);
    if (!vs.empty()) throw InvalidSkeleton("invalid skeleton: " + describe(vs));
}

struct DerivedSets {
    std::vector<std::size_t> sigma_a;   // indices into sigma_sc
    std::vector<std::size_t> sigma_2a;  // indices into sigma_sc
    std::vector<std::string> colors;
    std::vector<std::string> g_invariant;
    std::vector<std::size_t> script_S;  // simple-root indices, ascending
    std::vector<std::string> d_script_S;  // the color of each script_S entry, same order
};

/// alpha (with 2 alpha = sigma_k) belongs to script_S iff the 2alpha column
/// of the pairing matrix is even.
inline bool column_is_even(const SphericalSkeleton& sk, std::size_t k) {
    for (const Divisor& d : sk.divisors)
        if (!is_integral(d.c[k] / 2)) return false;
    return true;
}

inline DerivedSets derived_sets(const SphericalSkeleton& sk) {
    require_valid(sk);
    DerivedSets ds;
    for (std::size_t k = 0; k < sk.r(); ++k) {
        auto sm = simple_multiple(sk.sigma_sc[k]);
        if (!sm) continue;
        if (sm->second == 1) ds.sigma_a.push_back(k);
        if (sm->second == 2) ds.sigma_2a.push_back(k);
    }
    for (const Divisor& d : sk.divisors) (d.is_color() ? ds.colors : ds.g_invariant).push_back(d.name);

    std::vector<std::pair<std::size_t, std::string>> s;
    for (std::size_t k : ds.sigma_2a) {
        if (!column_is_even(sk, k)) continue;
        const std::size_t alpha = simple_multiple(sk.sigma_sc[k])->first;
        for (const Divisor& d : sk.divisors)
            if (d.varsigma.count(alpha)) s.emplace_back(alpha, d.name);
    }
    std::sort(s.begin(), s.end());
    for (auto& [a, nm] : s) {
        ds.script_S.push_back(a);
        ds.d_script_S.push_back(nm);
    }
    return ds;
}

inline bool is_complete(const SphericalSkeleton& sk) {
    require_valid(sk);
    return cone_is_full(sk.c_vectors(), sk.r());
}

inline bool is_factorial(const SphericalSkeleton& sk) { return derived_sets(sk).script_S.empty(); }

} // namespace lvcox

#endif // LVCOX_SKELETON_HPP
