#ifndef LVCOX_ISO_HPP
#define LVCOX_ISO_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "exact.hpp"
#include "roots.hpp"
#include "skeleton.hpp"

namespace lvcox {

/// phi_R maps simple-root index i of the first skeleton to phi_R.image[i] of
/// the second; phi_Delta maps divisor index d to phi_Delta[d].
struct SkeletonIso {
    BasedAutomorphism phi_R;
    std::vector<std::size_t> phi_Delta;
    friend bool operator==(const SkeletonIso&, const SkeletonIso&) = default;
};

namespace detail {

inline Vec permute_roots(const Vec& v, const BasedAutomorphism& phi) {
    Vec out = zeros(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[phi.image[i]] = v[i];
    return out;
}

// If phi(a) = k * b with k > 0, returns k.
inline std::optional<Rat> positive_ratio(const Vec& a, const Vec& b) {
    std::optional<Rat> k;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if ((a[i] == 0) != (b[i] == 0)) return std::nullopt;
        if (a[i] == 0) continue;
        Rat q = a[i] / b[i];
        if (q <= 0 || (k && *k != q)) return std::nullopt;
        k = std::move(q);
    }
    return k;
}

// For a root-system map, the matching of spherical-root rays:
// phi(sigma1_i) = scale[i] * sigma2_{target[i]}.
struct RayMatch {
    std::vector<std::size_t> target;
    std::vector<Rat> scale;
};

inline std::optional<RayMatch> match_rays(const SphericalSkeleton& a, const SphericalSkeleton& b,
                                          const BasedAutomorphism& phi) {
    RayMatch m;
    std::vector<bool> used(b.r(), false);
    for (const Vec& s : a.sigma_sc) {
        const Vec img = permute_roots(s, phi);
        bool found = false;
        for (std::size_t j = 0; j < b.r(); ++j) {
            if (used[j]) continue;
            if (auto k = positive_ratio(img, b.sigma_sc[j])) {
                used[j] = true;
                m.target.push_back(j);
                m.scale.push_back(*k);
                found = true;
                break;
            }
        }
        if (!found) return std::nullopt;
    }
    return m;
}

inline std::set<std::size_t> map_set(const std::set<std::size_t>& s, const BasedAutomorphism& phi) {
    std::set<std::size_t> out;
    for (std::size_t i : s) out.insert(phi.image[i]);
    return out;
}

} // namespace detail

/// Checks every condition on a candidate witness.
inline bool verify_iso(const SphericalSkeleton& a, const SphericalSkeleton& b, const SkeletonIso& w) {
    if (a.r() != b.r() || a.divisors.size() != b.divisors.size()) return false;
    if (w.phi_R.image.size() != a.rs.rank() || b.rs.rank() != a.rs.rank()) return false;
    if (w.phi_Delta.size() != a.divisors.size()) return false;
    const auto& ca = a.rs.cartan();
    const auto& cb = b.rs.cartan();
    std::vector<bool> seen(a.rs.rank(), false);
    for (std::size_t i = 0; i < a.rs.rank(); ++i) {
        const std::size_t pi = w.phi_R.image[i];
        if (pi >= b.rs.rank() || seen[pi]) return false;
        seen[pi] = true;
    }
    for (std::size_t i = 0; i < a.rs.rank(); ++i)
        for (std::size_t j = 0; j < a.rs.rank(); ++j)
            if (ca[i][j] != cb[w.phi_R.image[i]][w.phi_R.image[j]]) return false;
    const auto rays = detail::match_rays(a, b, w.phi_R);
    if (!rays) return false;
    std::vector<bool> used(b.divisors.size(), false);
    for (std::size_t d = 0; d < a.divisors.size(); ++d) {
        const std::size_t e = w.phi_Delta[d];
        if (e >= b.divisors.size() || used[e]) return false;
        used[e] = true;
        const Divisor& da = a.divisors[d];
        const Divisor& db = b.divisors[e];
        if (da.m != db.m) return false;
        if (detail::map_set(da.varsigma, w.phi_R) != db.varsigma) return false;
        for (std::size_t i = 0; i < a.r(); ++i)
            if (da.c[i] != rays->scale[i] * db.c[rays->target[i]]) return false;
    }
    return true;
}

/// Searches root-system maps in lexicographic order, then backtracks on the
/// divisor bijection; returns the first (lexicographically least) witness.
inline std::optional<SkeletonIso> are_isomorphic(const SphericalSkeleton& a, const SphericalSkeleton& b) {
    require_valid(a);
    require_valid(b);
    if (a.r() != b.r() || a.divisors.size() != b.divisors.size() || a.rs.rank() != b.rs.rank())
        return std::nullopt;
    const std::size_t k = a.divisors.size();

    for (const BasedAutomorphism& phi : root_isomorphisms(a.rs, b.rs)) {
        const auto rays = detail::match_rays(a, b, phi);
        if (!rays) continue;

        // Candidate table: compat[d][e] iff divisor e of b can be the image of d.
        std::vector<std::vector<bool>> compat(k, std::vector<bool>(k, false));
        bool hopeless = false;
        for (std::size_t d = 0; d < k && !hopeless; ++d) {
            const Divisor& da = a.divisors[d];
            const auto img_varsigma = detail::map_set(da.varsigma, phi);
            bool any = false;
            for (std::size_t e = 0; e < k; ++e) {
                const Divisor& db = b.divisors[e];
                if (da.m != db.m || img_varsigma != db.varsigma) continue;
                bool ok = true;
                for (std::size_t i = 0; i < a.r() && ok; ++i)
                    ok = da.c[i] == rays->scale[i] * db.c[rays->target[i]];
                compat[d][e] = ok;
                any = any || ok;
            }
            hopeless = !any;
        }
        if (hopeless) continue;

        std::vector<std::size_t> assign(k);
        std::vector<bool> used(k, false);
        auto extend = [&](auto&& self, std::size_t d) -> bool {
            if (d == k) return true;
            for (std::size_t e = 0; e < k; ++e) {
                if (used[e] || !compat[d][e]) continue;
                used[e] = true;
                assign[d] = e;
                if (self(self, d + 1)) return true;
                used[e] = false;
            }
            return false;
        };
        if (extend(extend, 0)) return SkeletonIso{phi, assign};
    }
    return std::nullopt;
}

inline SkeletonIso inverse(const SkeletonIso& w) {
    SkeletonIso inv;
    inv.phi_R.image.resize(w.phi_R.image.size());
    for (std::size_t i = 0; i < w.phi_R.image.size(); ++i) inv.phi_R.image[w.phi_R.image[i]] = i;
    inv.phi_Delta.resize(w.phi_Delta.size());
    for (std::size_t d = 0; d < w.phi_Delta.size(); ++d) inv.phi_Delta[w.phi_Delta[d]] = d;
    return inv;
}

/// Witness for a -> c from a -> b (`first`) and b -> c (`second`).
inline SkeletonIso compose(const SkeletonIso& first, const SkeletonIso& second) {
    SkeletonIso out;
    for (std::size_t i : first.phi_R.image) out.phi_R.image.push_back(second.phi_R.image[i]);
    for (std::size_t d : first.phi_Delta) out.phi_Delta.push_back(second.phi_Delta[d]);
    return out;
}

} // namespace lvcox

#endif // LVCOX_ISO_HPP
