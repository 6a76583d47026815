#ifndef LVCOX_ROOTS_HPP
#define LVCOX_ROOTS_HPP

// Finite reduced root systems realized in simple-root coordinates.
// Simple roots are labelled "c<i>.<j>": component i, node j in Bourbaki
// order, both 1-based.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"

namespace lvcox {

enum class RootType { A, B, C, D, E, F, G };

inline char type_letter(RootType t) { return "ABCDEFG"[static_cast<int>(t)]; }

inline RootType root_type_from(char c) {
    c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (c < 'A' || c > 'G') throw InadmissibleSpec(std::string("unknown root system type '") + c + "'");
    return static_cast<RootType>(c - 'A');
}

struct RootComponent {
    RootType type;
    int rank;
    friend bool operator==(const RootComponent&, const RootComponent&) = default;
};

inline bool admissible(const RootComponent& c) {
    switch (c.type) {
    case RootType::A: return c.rank >= 1;
    case RootType::B: return c.rank >= 2;
    case RootType::C: return c.rank >= 3;
    case RootType::D: return c.rank >= 4;
    case RootType::E: return c.rank >= 6 && c.rank <= 8;
    case RootType::F: return c.rank == 4;
    case RootType::G: return c.rank == 2;
    }
    return false;
}

struct RootSystemSpec {
    std::vector<RootComponent> components;

    friend bool operator==(const RootSystemSpec&, const RootSystemSpec&) = default;

    /// "A1xA1", "B3 x G2", "" (empty system).
    static RootSystemSpec parse(const std::string& text) {
        RootSystemSpec spec;
        std::string cleaned;
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) cleaned += ch;
        std::size_t pos = 0;
        while (pos < cleaned.size()) {
            const std::size_t end = cleaned.find_first_of("x*", pos);
            const std::string part = cleaned.substr(pos, end == std::string::npos ? end : end - pos);
            if (part.size() < 2 || !std::all_of(part.begin() + 1, part.end(), ::isdigit))
                throw InadmissibleSpec("malformed root system component '" + part + "'");
            spec.components.push_back({root_type_from(part[0]), std::stoi(part.substr(1))});
            if (end == std::string::npos) break;
            pos = end + 1;
        }
        return spec;
    }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < components.size(); ++i) {
            if (i) s += "x";
            s += type_letter(components[i].type) + std::to_string(components[i].rank);
        }
        return s;
    }
};

using IntVec = std::vector<int>;

/// Permutation of simple-root indices preserving the Cartan matrix; for
/// cross-system maps, `image[i]` is the index in the target system.
struct BasedAutomorphism {
    std::vector<std::size_t> image;
    friend bool operator==(const BasedAutomorphism&, const BasedAutomorphism&) = default;
};

class RootSystem {
public:
    RootSystem() = default;

    explicit RootSystem(RootSystemSpec spec) : spec_(std::move(spec)) {
        std::size_t offset = 0;
        for (std::size_t ci = 0; ci < spec_.components.size(); ++ci) {
            const RootComponent& c = spec_.components[ci];
            if (!admissible(c))
                throw InadmissibleSpec(std::string("inadmissible component ") + type_letter(c.type) +
                                       std::to_string(c.rank));
            offset += static_cast<std::size_t>(c.rank);
        }
        const std::size_t n = offset;
        form_.assign(n, IntVec(n, 0));
        offset = 0;
        for (std::size_t ci = 0; ci < spec_.components.size(); ++ci) {
            const RootComponent& c = spec_.components[ci];
            const auto block = component_form(c);
            for (int i = 0; i < c.rank; ++i) {
                labels_.push_back("c" + std::to_string(ci + 1) + "." + std::to_string(i + 1));
                component_.push_back(ci);
                for (int j = 0; j < c.rank; ++j) form_[offset + i][offset + j] = block[i][j];
            }
            offset += static_cast<std::size_t>(c.rank);
        }
        cartan_.assign(n, IntVec(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) cartan_[i][j] = 2 * form_[i][j] / form_[j][j];
        close_positive_roots();
    }

    const RootSystemSpec& spec() const { return spec_; }
    std::size_t rank() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    std::size_t component_of(std::size_t i) const { return component_.at(i); }

    std::size_t index_of(const std::string& label) const {
        auto it = std::find(labels_.begin(), labels_.end(), label);
        if (it == labels_.end()) throw UnknownLabel("unknown simple root label '" + label + "'");
        return static_cast<std::size_t>(it - labels_.begin());
    }

    /// cartan()[i][j] = <alpha_i, alpha_j^vee>.
    const std::vector<IntVec>& cartan() const { return cartan_; }
    /// Invariant symmetric form (integral, scaled per component).
    const std::vector<IntVec>& form() const { return form_; }
    /// Positive roots as nonnegative integer combinations of simple roots,
    /// sorted by height, then lexicographically descending (simple roots in index order).
    const std::vector<IntVec>& positive_roots() const { return positive_; }

    /// <beta, alpha_i^vee> for beta in simple-root coordinates.
    int coroot_pairing(const IntVec& beta, std::size_t i) const {
        int s = 0;
        for (std::size_t j = 0; j < beta.size(); ++j) s += beta[j] * cartan_[j][i];
        return s;
    }

private:
    // Symmetric form per Bourbaki numbering; diagonal entries are twice the
    // squared length up to a common factor.
    static std::vector<IntVec> component_form(const RootComponent& c) {
        const int n = c.rank;
        std::vector<IntVec> b(n, IntVec(n, 0));
        auto edge = [&](int i, int j, int w) { b[i][j] = b[j][i] = -w; };
        switch (c.type) {
        case RootType::A:
            for (int i = 0; i < n; ++i) b[i][i] = 2;
            for (int i = 0; i + 1 < n; ++i) edge(i, i + 1, 1);
            break;
        case RootType::B:
            for (int i = 0; i < n; ++i) b[i][i] = 4;
            b[n - 1][n - 1] = 2;
            for (int i = 0; i + 1 < n; ++i) edge(i, i + 1, 2);
            break;
        case RootType::C:
            for (int i = 0; i < n; ++i) b[i][i] = 2;
            b[n - 1][n - 1] = 4;
            for (int i = 0; i + 2 < n; ++i) edge(i, i + 1, 1);
            edge(n - 2, n - 1, 2);
            break;
        case RootType::D:
            for (int i = 0; i < n; ++i) b[i][i] = 2;
            for (int i = 0; i + 2 < n; ++i) edge(i, i + 1, 1);
            edge(n - 3, n - 1, 1);
            break;
        case RootType::E:
            for (int i = 0; i < n; ++i) b[i][i] = 2;
            edge(0, 2, 1);
            edge(1, 3, 1);
            for (int i = 2; i + 1 < n; ++i) edge(i, i + 1, 1);
            break;
        case RootType::F:
            b[0][0] = b[1][1] = 4;
            b[2][2] = b[3][3] = 2;
            edge(0, 1, 2);
            edge(1, 2, 2);
            edge(2, 3, 1);
            break;
        case RootType::G:
            b[0][0] = 2;
            b[1][1] = 6;
            edge(0, 1, 3);
            break;
        }
        return b;
    }

    // Close the simple roots under root-string addition, height by height.
    // For a positive root beta and simple alpha_i, the alpha_i-string through
    // beta runs from beta - p alpha_i to beta + q alpha_i with
    // p - q = <beta, alpha_i^vee>.
    void close_positive_roots() {
        const std::size_t n = rank();
        std::set<IntVec> known;
        std::vector<IntVec> layer;
        for (std::size_t i = 0; i < n; ++i) {
            IntVec e(n, 0);
            e[i] = 1;
            known.insert(e);
            layer.push_back(e);
        }
        std::vector<IntVec> all = layer;
        while (!layer.empty()) {
            std::set<IntVec> next;
            for (const IntVec& beta : layer) {
                for (std::size_t i = 0; i < n; ++i) {
                    IntVec down = beta;
                    int p = 0;
                    for (;;) {
                        down[i] -= 1;
                        if (!known.count(down)) break;
                        ++p;
                    }
                    const int q = p - coroot_pairing(beta, i);
                    if (q > 0) {
                        IntVec up = beta;
                        up[i] += 1;
                        if (!known.count(up)) next.insert(up);
                    }
                }
            }
            layer.assign(next.begin(), next.end());
            for (const IntVec& r : layer) {
                known.insert(r);
                all.push_back(r);
            }
        }
        std::stable_sort(all.begin(), all.end(), [](const IntVec& a, const IntVec& b) {
            int ha = 0, hb = 0;
            for (int x : a) ha += x;
            for (int x : b) hb += x;
            if (ha != hb) return ha < hb;
            return a > b;
        });
        positive_ = std::move(all);
    }

    RootSystemSpec spec_;
    std::vector<std::string> labels_;
    std::vector<std::size_t> component_;
    std::vector<IntVec> form_;
    std::vector<IntVec> cartan_;
    std::vector<IntVec> positive_;
};

inline RootSystem build_root_system(const RootSystemSpec& spec) { return RootSystem(spec); }

/// Every bijection S1 -> S2 preserving the Cartan matrix, in lexicographic
/// order of the image tuple.
inline std::vector<BasedAutomorphism> root_isomorphisms(const RootSystem& from, const RootSystem& to) {
    std::vector<BasedAutomorphism> out;
    const std::size_t n = from.rank();
    if (to.rank() != n) return out;
    const auto& a = from.cartan();
    const auto& b = to.cartan();

    auto signature = [](const std::vector<IntVec>& m, std::size_t i) {
        std::vector<std::pair<int, int>> s;
        for (std::size_t j = 0; j < m.size(); ++j)
            if (j != i && (m[i][j] != 0 || m[j][i] != 0)) s.emplace_back(m[i][j], m[j][i]);
        std::sort(s.begin(), s.end());
        return s;
    };
    std::vector<std::vector<std::pair<int, int>>> sig_a(n), sig_b(n);
    for (std::size_t i = 0; i < n; ++i) {
        sig_a[i] = signature(a, i);
        sig_b[i] = signature(b, i);
    }

    std::vector<std::size_t> image(n);
    std::vector<bool> used(n, false);
    auto extend = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            out.push_back({image});
            return;
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j] || sig_a[i] != sig_b[j]) continue;
            bool ok = true;
            for (std::size_t k = 0; k < i && ok; ++k)
                ok = a[i][k] == b[j][image[k]] && a[k][i] == b[image[k]][j];
            if (!ok) continue;
            used[j] = true;
            image[i] = j;
            self(self, i + 1);
            used[j] = false;
        }
    };
    extend(extend, 0);
    return out;
}

inline std::vector<BasedAutomorphism> based_automorphisms(const RootSystem& rs) {
    return root_isomorphisms(rs, rs);
}

/// |R+| minus the positive roots of the Levi of the simple roots outside
/// `moved`; i.e. the number of positive roots whose support meets `moved`.
inline std::size_t dim_GP(const RootSystem& rs, const std::set<std::size_t>& moved) {
    for (std::size_t i : moved)
        if (i >= rs.rank()) throw UnknownLabel("dim_GP: simple root index " + std::to_string(i));
    std::size_t count = 0;
    for (const IntVec& beta : rs.positive_roots()) {
        for (std::size_t i : moved)
            if (beta[i] != 0) {
                ++count;
                break;
            }
    }
    return count;
}

inline std::size_t dim_GP(const RootSystem& rs, const std::vector<std::string>& moved_labels) {
    std::set<std::size_t> moved;
    for (const std::string& l : moved_labels) moved.insert(rs.index_of(l));
    return dim_GP(rs, moved);
}

} // namespace lvcox

#endif // LVCOX_ROOTS_HPP
