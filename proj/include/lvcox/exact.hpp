#ifndef LVCOX_EXACT_HPP
#define LVCOX_EXACT_HPP

// Exact rational arithmetic, fraction-free rank, polyhedra and an exact
// simplex solver. Every instance the library builds is tiny (dimension is
// the number of spherical roots or divisors), so everything is dense.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace lvcox {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;

inline bool is_integral(const Rat& x) { return denominator(x) == 1; }

inline Rat dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw DimensionMismatch("dot: lengths " + std::to_string(a.size()) + " and " +
                                std::to_string(b.size()));
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    return s;
}

inline Vec zeros(std::size_t n) { return Vec(n, Rat(0)); }

inline Vec unit(std::size_t n, std::size_t i, Rat value = 1) {
    Vec v = zeros(n);
    v[i] = std::move(value);
    return v;
}

/// Rank of the stacked rows, by Bareiss fraction-free elimination after
/// clearing denominators row by row.
inline std::size_t rank(const Mat& rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::vector<std::vector<Int>> m;
    m.reserve(rows.size());
    for (const Vec& r : rows) {
        if (r.size() != cols) throw DimensionMismatch("rank: ragged rows");
        Int l = 1;
        for (const Rat& x : r) l = boost::multiprecision::lcm(l, denominator(x));
        std::vector<Int> ir;
        ir.reserve(cols);
        for (const Rat& x : r) ir.push_back(numerator(x) * (l / denominator(x)));
        m.push_back(std::move(ir));
    }
    std::size_t rk = 0;
    Int prev = 1;
    for (std::size_t col = 0; col < cols && rk < m.size(); ++col) {
        std::size_t piv = rk;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rk]);
        for (std::size_t i = rk + 1; i < m.size(); ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                m[i][j] = (m[i][j] * m[rk][col] - m[i][col] * m[rk][j]) / prev;
            m[i][col] = 0;
        }
        prev = m[rk][col];
        ++rk;
    }
    return rk;
}

inline bool is_linearly_independent(const std::vector<Vec>& vectors) {
    if (vectors.empty()) return true;
    const std::size_t n = vectors.front().size();
    for (const Vec& v : vectors)
        if (v.size() != n) throw DimensionMismatch("is_linearly_independent: ragged vectors");
    if (vectors.size() > n) return false;
    return rank(vectors) == vectors.size();
}

/// One halfspace `normal . x >= rhs`.
struct Halfspace {
    Vec normal;
    Rat rhs;
};

struct Polyhedron {
    std::size_t dim = 0;
    std::vector<Halfspace> rows;

    void add(Vec normal, Rat rhs) {
        if (normal.size() != dim)
            throw DimensionMismatch("Polyhedron::add: normal of length " +
                                    std::to_string(normal.size()) + " in dimension " +
                                    std::to_string(dim));
        rows.push_back({std::move(normal), std::move(rhs)});
    }
    void add_equality(const Vec& normal, const Rat& rhs) {
        add(normal, rhs);
        Vec neg = normal;
        for (Rat& x : neg) x = -x;
        add(std::move(neg), -rhs);
    }
    bool contains(const Vec& x) const {
        for (const Halfspace& h : rows)
            if (dot(h.normal, x) < h.rhs) return false;
        return true;
    }
};

struct Optimal {
    Rat value;
    Vec witness;
    /// Value of the secondary objective at `witness`, for lexicographic solves.
    std::optional<Rat> secondary_value;
};

/// `base + s * ray` is feasible for every s >= 0 and the objective grows
/// along `ray`. When `in_secondary` is set, the primary optimum was finite and
/// the ray improves the secondary objective inside the primary-optimal face.
struct Unbounded {
    Vec ray;
    Vec base;
    bool in_secondary = false;
};

struct Infeasible {};

using LpOutcome = std::variant<Optimal, Unbounded, Infeasible>;

/// Opt-in record of every LP solved on the current thread, for auditing the
/// solver against an independent oracle. Inactive unless a ScopedLpRecorder
/// is alive.
struct LpRecord {
    Polyhedron polyhedron;
    Vec objective;
    std::optional<Vec> secondary;
    LpOutcome outcome;
};

namespace detail {
inline thread_local std::vector<LpRecord>* lp_sink = nullptr;
}

class ScopedLpRecorder {
public:
    ScopedLpRecorder() : previous_(detail::lp_sink) { detail::lp_sink = &records_; }
    ~ScopedLpRecorder() { detail::lp_sink = previous_; }
    ScopedLpRecorder(const ScopedLpRecorder&) = delete;
    ScopedLpRecorder& operator=(const ScopedLpRecorder&) = delete;

    const std::vector<LpRecord>& records() const { return records_; }

private:
    std::vector<LpRecord> records_;
    std::vector<LpRecord>* previous_;
};

namespace detail {

// Dense two-phase tableau simplex over the standard form
//   A x+ - A x- - s = b,  (x+, x-, s) >= 0,
// one artificial per row. Bland's rule throughout.
class Simplex {
public:
    Simplex(const Polyhedron& p) : n_(p.dim), m_(p.rows.size()) {
        cols_ = 2 * n_ + 2 * m_;
        tab_.assign(m_, Vec(cols_ + 1, Rat(0)));
        basis_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            const Halfspace& h = p.rows[i];
            const bool flip = h.rhs < 0;
            Vec& row = tab_[i];
            for (std::size_t j = 0; j < n_; ++j) {
                row[j] = h.normal[j];
                row[n_ + j] = -h.normal[j];
            }
            row[2 * n_ + i] = -1;
            row[cols_] = h.rhs;
            if (flip)
                for (std::size_t j = 0; j < 2 * n_ + m_; ++j) row[j] = -row[j];
            if (flip) row[cols_] = -row[cols_];
            row[artificial(i)] = 1;
            basis_[i] = artificial(i);
        }
        allowed_.assign(cols_, true);
    }

    LpOutcome maximize(const Vec& objective) {
        // phase 1
        Vec cost(cols_, Rat(0));
        for (std::size_t i = 0; i < m_; ++i) cost[artificial(i)] = -1;
        price(cost);
        std::optional<std::size_t> ray_col = iterate();
        // Phase 1 is bounded above by zero, so no ray can appear here.
        (void)ray_col;
        if (-obj_[cols_] < 0) return Infeasible{};
        drive_out_artificials();
        for (std::size_t i = 0; i < m_; ++i) allowed_[artificial(i)] = false;

        // phase 2
        std::fill(cost.begin(), cost.end(), Rat(0));
        for (std::size_t j = 0; j < n_; ++j) {
            cost[j] = objective[j];
            cost[n_ + j] = -objective[j];
        }
        price(cost);
        ray_col = iterate();
        Vec x = point();
        if (ray_col) {
            Vec ray = zeros(n_);
            auto add_dir = [&](std::size_t col, const Rat& amount) {
                if (col < n_)
                    ray[col] += amount;
                else if (col < 2 * n_)
                    ray[col - n_] -= amount;
            };
            add_dir(*ray_col, 1);
            for (std::size_t i = 0; i < basis_.size(); ++i)
                if (tab_[i][*ray_col] != 0) add_dir(basis_[i], -tab_[i][*ray_col]);
            return Unbounded{std::move(ray), std::move(x)};
        }
        Rat value = dot(objective, x);
        return Optimal{std::move(value), std::move(x), std::nullopt};
    }

private:
    std::size_t artificial(std::size_t i) const { return 2 * n_ + m_ + i; }

    void price(const Vec& cost) {
        obj_.assign(cols_ + 1, Rat(0));
        for (std::size_t j = 0; j < cols_; ++j) obj_[j] = cost[j];
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            const Rat& cb = cost[basis_[i]];
            if (cb == 0) continue;
            for (std::size_t j = 0; j <= cols_; ++j)
                if (tab_[i][j] != 0) obj_[j] -= cb * tab_[i][j];
        }
    }

    void pivot(std::size_t r, std::size_t c) {
        Vec& prow = tab_[r];
        const Rat pv = prow[c];
        for (Rat& x : prow)
            if (x != 0) x /= pv;
        for (std::size_t i = 0; i < tab_.size(); ++i) {
            if (i == r || tab_[i][c] == 0) continue;
            const Rat f = tab_[i][c];
            for (std::size_t j = 0; j <= cols_; ++j)
                if (prow[j] != 0) tab_[i][j] -= f * prow[j];
        }
        if (obj_[c] != 0) {
            const Rat f = obj_[c];
            for (std::size_t j = 0; j <= cols_; ++j)
                if (prow[j] != 0) obj_[j] -= f * prow[j];
        }
        basis_[r] = c;
    }

    // Returns the entering column when the objective is unbounded.
    std::optional<std::size_t> iterate() {
        for (;;) {
            std::optional<std::size_t> enter;
            for (std::size_t j = 0; j < cols_; ++j)
                if (allowed_[j] && obj_[j] > 0) {
                    enter = j;
                    break;
                }
            if (!enter) return std::nullopt;
            std::optional<std::size_t> leave;
            Rat best;
            for (std::size_t i = 0; i < tab_.size(); ++i) {
                const Rat& a = tab_[i][*enter];
                if (a <= 0) continue;
                Rat ratio = tab_[i][cols_] / a;
                if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
                    leave = i;
                    best = std::move(ratio);
                }
            }
            if (!leave) return enter;
            pivot(*leave, *enter);
        }
    }

    void drive_out_artificials() {
        for (std::size_t i = 0; i < tab_.size();) {
            if (basis_[i] < 2 * n_ + m_) {
                ++i;
                continue;
            }
            std::optional<std::size_t> col;
            for (std::size_t j = 0; j < 2 * n_ + m_; ++j)
                if (tab_[i][j] != 0) {
                    col = j;
                    break;
                }
            if (col) {
                pivot(i, *col);
                ++i;
            } else {
                tab_.erase(tab_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
            }
        }
    }

    Vec point() const {
        Vec x = zeros(n_);
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            const std::size_t b = basis_[i];
            if (b < n_)
                x[b] += tab_[i][cols_];
            else if (b < 2 * n_)
                x[b - n_] -= tab_[i][cols_];
        }
        return x;
    }

    std::size_t n_, m_, cols_;
    std::vector<Vec> tab_;
    Vec obj_;
    std::vector<std::size_t> basis_;
    std::vector<bool> allowed_;
};

inline LpOutcome solve_single(const Polyhedron& p, const Vec& objective) {
    return Simplex(p).maximize(objective);
}

} // namespace detail

/// Exact maximization of `objective` over `p`. With `secondary`, the result is
/// a point of the primary-optimal face maximizing the secondary objective.
/// Deterministic: equal inputs give identical witnesses.
inline LpOutcome solve_lp(const Polyhedron& p, const Vec& objective,
                          const std::optional<Vec>& secondary = std::nullopt) {
    for (const Halfspace& h : p.rows)
        if (h.normal.size() != p.dim) throw DimensionMismatch("solve_lp: constraint length");
    if (objective.size() != p.dim) throw DimensionMismatch("solve_lp: objective length");
    if (secondary && secondary->size() != p.dim)
        throw DimensionMismatch("solve_lp: secondary objective length");

    LpOutcome out = detail::solve_single(p, objective);
    if (secondary) {
        if (auto* opt = std::get_if<Optimal>(&out)) {
            Polyhedron face = p;
            face.add(objective, opt->value);
            LpOutcome second = detail::solve_single(face, *secondary);
            if (auto* o2 = std::get_if<Optimal>(&second)) {
                out = Optimal{opt->value, std::move(o2->witness), std::move(o2->value)};
            } else if (auto* u2 = std::get_if<Unbounded>(&second)) {
                u2->in_secondary = true;
                out = std::move(*u2);
            }
        }
    }
    if (detail::lp_sink) detail::lp_sink->push_back({p, objective, secondary, out});
    return out;
}

/// True iff the nonnegative hull of `generators` is all of Q^dim.
/// Decided as: full rank, and some strictly positive combination vanishes.
inline bool cone_is_full(const std::vector<Vec>& generators, std::size_t dim) {
    for (const Vec& g : generators)
        if (g.size() != dim) throw DimensionMismatch("cone_is_full: generator length");
    if (dim == 0) return true;
    if (rank(generators) != dim) return false;

    // variables (lambda_1..lambda_k, eps): max eps, lambda_g >= eps,
    // sum lambda = 1, sum lambda_g g = 0
    const std::size_t k = generators.size();
    Polyhedron p;
    p.dim = k + 1;
    for (std::size_t g = 0; g < k; ++g) {
        Vec row = unit(k + 1, g);
        row[k] = -1;
        p.add(std::move(row), 0);
    }
    Vec ones(k + 1, Rat(1));
    ones[k] = 0;
    p.add_equality(ones, 1);
    for (std::size_t i = 0; i < dim; ++i) {
        Vec row = zeros(k + 1);
        for (std::size_t g = 0; g < k; ++g) row[g] = generators[g][i];
        p.add_equality(row, 0);
    }
    const LpOutcome out = solve_lp(p, unit(k + 1, k));
    const auto* opt = std::get_if<Optimal>(&out);
    return opt && opt->value > 0;
}

inline std::string to_string(const Rat& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

} // namespace lvcox

#endif // LVCOX_EXACT_HPP
