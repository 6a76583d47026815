#ifndef LVCOX_CLI_HPP
#define LVCOX_CLI_HPP

// Command-line surface. `run` is the whole tool; tools/lvcox.cpp only
// forwards argv. Data goes to `out`, diagnostics to `err`.
//
// Exit codes: 0 success, 1 parse/validation error, 2 conjecture violation
// found, 3 precondition error (e.g. factorialize on an incomplete skeleton).

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "cox.hpp"
#include "factorialize.hpp"
#include "format.hpp"
#include "iota.hpp"
#include "iso.hpp"
#include "skeleton.hpp"

namespace lvcox {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int invalid = 1;
inline constexpr int violation = 2;
inline constexpr int precondition = 3;
} // namespace exit_code

/// One row of the batch table.
struct Report {
    std::string file;
    std::string name;
    std::string status = "ok";  // "ok", "parse-error", "invalid", "error"
    std::string error;
    std::vector<Violation> violations;
    std::vector<std::string> script_S;
    std::size_t cl_rank = 0;
    bool complete = false;
    bool factorial = false;
    bool fixed_point = false;
    std::string iota;
    std::size_t dim_gp = 0;
    std::string verdict;
};

/// Open-question conventions that --strict turns into errors.
inline std::vector<std::string> strict_issues(const SkeletonFile& f) {
    std::vector<std::string> out;
    for (const Divisor& d : f.skeleton.divisors)
        if (!d.is_color() && d.m != 1)
            out.push_back("G-invariant divisor " + d.name + " has m = " + std::to_string(d.m) + " (convention: 1)");
    if (f.invariant_m != 1) out.push_back("invariant_m = " + std::to_string(f.invariant_m) + " (convention: 1)");
    return out;
}

inline Report make_report(const std::string& file, const std::string& text, bool strict = false) {
    Report r;
    r.file = file;
    SkeletonFile f;
    try {
        f = read_skeleton_file(text);
    } catch (const Error& e) {
        r.status = "parse-error";
        r.error = e.what();
        return r;
    }
    const SphericalSkeleton& sk = f.skeleton;
    r.name = sk.name;
    r.violations = validate(sk);
    if (strict)
        for (const std::string& s : strict_issues(f)) r.violations.push_back({"strict", sk.name, s});
    if (!r.violations.empty()) {
        r.status = "invalid";
        return r;
    }
    try {
        const DerivedSets ds = derived_sets(sk);
        for (std::size_t a : ds.script_S) r.script_S.push_back(sk.rs.label(a));
        r.cl_rank = class_group(sk).rank;
        r.complete = is_complete(sk);
        r.factorial = ds.script_S.empty();
        r.fixed_point = has_fixed_point(sk);
        const ConjectureVerdict v = check_conjecture(sk);
        r.iota = v.iota.value_string();
        r.dim_gp = v.dim_gp;
        r.verdict = to_string(v.verdict);
    } catch (const Error& e) {
        r.status = "error";
        r.error = e.what();
    }
    return r;
}

inline std::string read_text(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw Error("cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Reports for every *.skel file in `dir`, sorted by file name. The result
/// does not depend on `jobs`.
inline std::vector<Report> batch_reports(const std::filesystem::path& dir, unsigned jobs = 1,
                                         bool strict = false) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".skel") files.push_back(entry.path());
    std::sort(files.begin(), files.end(),
              [](const auto& a, const auto& b) { return a.filename().string() < b.filename().string(); });

    std::vector<Report> out(files.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < files.size();) {
            const std::string name = files[i].filename().string();
            try {
                out[i] = make_report(name, read_text(files[i]), strict);
            } catch (const Error& e) {
                out[i].file = name;
                out[i].status = "error";
                out[i].error = e.what();
            }
        }
    };
    jobs = std::max(1u, jobs);
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

inline json to_json(const Report& r) {
    json j;
    j["file"] = r.file;
    j["name"] = r.name;
    j["status"] = r.status;
    if (!r.error.empty()) j["error"] = r.error;
    if (!r.violations.empty()) j["violations"] = to_json(r.violations);
    if (r.status == "ok") {
        j["script_S"] = r.script_S;
        j["cl_rank"] = r.cl_rank;
        j["complete"] = r.complete;
        j["factorial"] = r.factorial;
        j["fixed_point"] = r.fixed_point;
        j["iota"] = r.iota;
        j["dim_gp"] = r.dim_gp;
        j["verdict"] = r.verdict;
    }
    return j;
}

inline std::string render_machine(const std::vector<Report>& reports) {
    json a = json::array();
    for (const Report& r : reports) a.push_back(to_json(r));
    return a.dump(2) + "\n";
}

inline std::string render_human(const std::vector<Report>& reports) {
    auto yn = [](bool b) { return std::string(b ? "yes" : "no"); };
    std::vector<std::vector<std::string>> rows = {
        {"file", "status", "S", "Cl", "complete", "factorial", "fixed-pt", "iota", "dimG/P", "verdict"}};
    for (const Report& r : reports) {
        if (r.status != "ok") {
            rows.push_back({r.file, r.status, "-", "-", "-", "-", "-", "-", "-", "-"});
            continue;
        }
        std::string s = "{";
        for (std::size_t i = 0; i < r.script_S.size(); ++i) s += (i ? "," : "") + r.script_S[i];
        s += "}";
        rows.push_back({r.file, r.status, s, std::to_string(r.cl_rank), yn(r.complete), yn(r.factorial),
                        yn(r.fixed_point), r.iota, std::to_string(r.dim_gp), r.verdict});
    }
    std::vector<std::size_t> width(rows.front().size(), 0);
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    std::ostringstream os;
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            os << row[c];
            if (c + 1 < row.size()) os << std::string(width[c] - row[c].size() + 2, ' ');
        }
        os << "\n";
    }
    return os.str();
}

namespace detail {

struct CliContext {
    std::ostream& out;
    std::ostream& err;
    bool machine = false;
    bool strict = false;
    std::string out_path;
};

// Loads and validates; on failure reports and returns the exit code.
inline int load(CliContext& ctx, const std::string& path, SkeletonFile& file) {
    try {
        file = parse_skeleton_file_ext(read_text(path));
    } catch (const ValidationError& e) {
        ctx.err << path << ": invalid skeleton\n";
        for (const Violation& v : e.violations()) ctx.err << "  " << v.rule << " at " << v.where << ": " << v.message << "\n";
        return exit_code::invalid;
    } catch (const Error& e) {
        ctx.err << path << ": " << e.what() << "\n";
        return exit_code::invalid;
    }
    if (ctx.strict) {
        const auto issues = strict_issues(file);
        for (const std::string& s : issues) ctx.err << path << ": strict: " << s << "\n";
        if (!issues.empty()) return exit_code::invalid;
    }
    return exit_code::ok;
}

inline void emit(CliContext& ctx, const std::string& text) {
    if (ctx.out_path.empty()) {
        ctx.out << text;
        return;
    }
    std::ofstream f(ctx.out_path, std::ios::binary);
    if (!f) throw Error("cannot write " + ctx.out_path);
    f << text;
}

inline std::string bool_word(bool b) { return b ? "yes" : "no"; }

inline std::string join_vec(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
    return s + ")";
}

inline int cmd_validate(CliContext& ctx, const std::string& path) {
    SkeletonFile f;
    std::vector<Violation> vs;
    try {
        f = read_skeleton_file(read_text(path));
    } catch (const Error& e) {
        ctx.err << path << ": " << e.what() << "\n";
        return exit_code::invalid;
    }
    vs = validate(f.skeleton);
    if (ctx.strict)
        for (const std::string& s : strict_issues(f)) vs.push_back({"strict", f.skeleton.name, s});
    if (ctx.machine) {
        ctx.out << json{{"file", path}, {"valid", vs.empty()}, {"violations", to_json(vs)}}.dump(2) << "\n";
    } else if (vs.empty()) {
        ctx.out << path << ": valid\n";
    } else {
        for (const Violation& v : vs) ctx.out << v.rule << " at " << v.where << ": " << v.message << "\n";
    }
    return vs.empty() ? exit_code::ok : exit_code::invalid;
}

inline int cmd_info(CliContext& ctx, const std::string& path) {
    SkeletonFile f;
    if (int rc = load(ctx, path, f)) return rc;
    const SphericalSkeleton& sk = f.skeleton;
    const DerivedSets ds = derived_sets(sk);
    const ClassGroup cl = class_group(sk);
    const bool complete = is_complete(sk);
    const bool fixed = has_fixed_point(sk);
    if (ctx.machine) {
        json j = to_json(sk, ds);
        j["class_group"] = {{"rank", cl.rank}, {"generators", cl.generator_names}};
        j["complete"] = complete;
        j["factorial"] = ds.script_S.empty();
        j["fixed_point"] = fixed;
        ctx.out << j.dump(2) << "\n";
        return exit_code::ok;
    }
    auto names = [](const std::vector<std::string>& v) {
        std::string s = "{";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
        return s + "}";
    };
    std::vector<std::string> s_labels;
    for (std::size_t a : ds.script_S) s_labels.push_back(sk.rs.label(a));
    auto roots = [&](const std::vector<std::size_t>& ks) {
        std::vector<std::string> v;
        for (std::size_t k : ks) v.push_back(join_vec(sk.sigma_sc[k]));
        return names(v);
    };
    ctx.out << "skeleton:     " << sk.name << " (" << (sk.rs.spec().components.empty() ? "-" : sk.rs.spec().str())
            << ")\n"
            << "Sigma^a:      " << roots(ds.sigma_a) << "\n"
            << "Sigma^2a:     " << roots(ds.sigma_2a) << "\n"
            << "colors:       " << names(ds.colors) << "\n"
            << "G-invariant:  " << names(ds.g_invariant) << "\n"
            << "S:            " << names(s_labels) << "\n"
            << "D^S:          " << names(ds.d_script_S) << "\n"
            << "Cl rank:      " << cl.rank << " generated by " << names(cl.generator_names) << "\n"
            << "complete:     " << bool_word(complete) << "\n"
            << "factorial:    " << bool_word(ds.script_S.empty()) << "\n"
            << "fixed point:  " << bool_word(fixed) << "\n";
    return exit_code::ok;
}

inline int cmd_cox(CliContext& ctx, const std::string& path) {
    SkeletonFile f;
    if (int rc = load(ctx, path, f)) return rc;
    const CoxResult res = cox_transform(f.skeleton);
    if (ctx.out_path.empty()) {
        ctx.out << to_json(res).dump(2) << "\n";
        return exit_code::ok;
    }
    emit(ctx, format_skeleton(SkeletonFile{res.skeleton, f.invariant_m}));
    json prov = to_json(res)["provenance"];
    if (ctx.machine)
        ctx.out << prov.dump(2) << "\n";
    else
        for (const auto& [to, from] : res.provenance) ctx.out << to << " <- " << from << "\n";
    return exit_code::ok;
}

inline int cmd_iota(CliContext& ctx, const std::string& path, bool affine) {
    SkeletonFile f;
    if (int rc = load(ctx, path, f)) return rc;
    IotaReport rep;
    try {
        rep = affine ? iota_affine(f.skeleton) : iota(f.skeleton);
    } catch (const NotFactorial& e) {
        ctx.err << path << ": " << e.what() << "\n";
        return exit_code::precondition;
    }
    if (ctx.machine) {
        ctx.out << to_json(rep).dump(2) << "\n";
        return exit_code::ok;
    }
    ctx.out << "iota = " << rep.value_string() << "\n";
    ctx.out << "sum (m_D - 1) = " << to_string(rep.base_term) << "\n";
    if (rep.infinite()) {
        ctx.out << "unbounded: base " << join_vec(*rep.witness) << ", ray " << join_vec(*rep.ray) << "\n";
    } else {
        ctx.out << "witness (coefficients over Sigma^sc) = " << join_vec(*rep.witness) << "\n";
    }
    return exit_code::ok;
}

inline int cmd_conjecture(CliContext& ctx, const std::string& path) {
    SkeletonFile f;
    if (int rc = load(ctx, path, f)) return rc;
    const ConjectureVerdict v = check_conjecture(f.skeleton);
    if (ctx.machine) {
        ctx.out << json{{"iota", to_json(v.iota)}, {"dim_gp", v.dim_gp}, {"verdict", to_string(v.verdict)}}.dump(2)
                << "\n";
    } else {
        ctx.out << "verdict: " << to_string(v.verdict) << "\n"
                << "iota = " << v.iota.value_string() << "\n"
                << "dim G/P = " << v.dim_gp << "\n";
    }
    return v.verdict == Verdict::Violation ? exit_code::violation : exit_code::ok;
}

inline int cmd_iso(CliContext& ctx, const std::string& p1, const std::string& p2) {
    SkeletonFile a, b;
    if (int rc = load(ctx, p1, a)) return rc;
    if (int rc = load(ctx, p2, b)) return rc;
    const auto w = are_isomorphic(a.skeleton, b.skeleton);
    if (ctx.machine) {
        ctx.out << json{{"isomorphic", w.has_value()},
                        {"witness", w ? to_json(a.skeleton, b.skeleton, *w) : json(nullptr)}}
                       .dump(2)
                << "\n";
    } else if (!w) {
        ctx.out << "not isomorphic\n";
    } else {
        ctx.out << "isomorphic\n";
        const json j = to_json(a.skeleton, b.skeleton, *w);
        for (const auto& [from, to] : j["phi_R"].items()) ctx.out << "  root " << from << " -> " << to.get<std::string>() << "\n";
        for (const auto& [from, to] : j["phi_Delta"].items())
            ctx.out << "  divisor " << from << " -> " << to.get<std::string>() << "\n";
    }
    return exit_code::ok;
}

inline int cmd_factorialize(CliContext& ctx, const std::string& path) {
    SkeletonFile f;
    if (int rc = load(ctx, path, f)) return rc;
    FactorializeResult res;
    try {
        res = factorialize(f.skeleton, {f.invariant_m});
    } catch (const NotComplete& e) {
        ctx.err << path << ": " << e.what() << "\n";
        return exit_code::precondition;
    } catch (const AxiomViolation& e) {
        ctx.err << path << ": " << e.what() << "\n";
        return exit_code::invalid;
    }
    const std::string file_text = format_skeleton(SkeletonFile{res.skeleton, f.invariant_m});
    const json trace = to_json(f.skeleton.rs, res.trace);
    if (ctx.out_path.empty()) {
        ctx.out << json{{"skeleton", json::parse(file_text)}, {"trace", trace}}.dump(2) << "\n";
        return exit_code::ok;
    }
    emit(ctx, file_text);
    if (ctx.machine) {
        ctx.out << trace.dump(2) << "\n";
    } else {
        for (const FactorializeStep& s : res.trace.steps)
            ctx.out << to_string(s.kind) << " at " << f.skeleton.rs.label(s.alpha) << ": theta' = "
                    << join_vec(s.theta_prime) << ", added " << s.added_divisor.name << "\n";
        ctx.out << "iota: " << res.trace.iota_before.value_string() << " -> "
                << res.trace.iota_after.value_string() << "\n";
    }
    return exit_code::ok;
}

inline int cmd_batch(CliContext& ctx, const std::string& dir, unsigned jobs) {
    if (!std::filesystem::is_directory(dir)) {
        ctx.err << dir << ": not a directory\n";
        return exit_code::invalid;
    }
    const auto reports = batch_reports(dir, jobs, ctx.strict);
    for (const Report& r : reports)
        if (r.status != "ok") ctx.err << r.file << ": " << r.status << (r.error.empty() ? "" : ": " + r.error) << "\n";
    emit(ctx, ctx.machine ? render_machine(reports) : render_human(reports));
    bool violation = false, invalid = false;
    for (const Report& r : reports) {
        violation = violation || r.verdict == "Violation";
        invalid = invalid || r.status != "ok";
    }
    if (violation) return exit_code::violation;
    return invalid ? exit_code::invalid : exit_code::ok;
}

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Luna-Vust invariants of Cox rings of spherical skeletons", "lvcox"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "human";
    std::string out_path;
    bool strict = false;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "machine"}));
    app.add_option("--out", out_path, "Write the primary output (skeleton file or table) to PATH");
    app.add_flag("--strict", strict, "Treat m conventions for G-invariant divisors as errors");

    std::string file, file2, dir;
    bool affine = false;
    unsigned jobs = 1;
    auto* validate_cmd = app.add_subcommand("validate", "Print the violated skeleton axioms");
    validate_cmd->add_option("file", file)->required();
    auto* info_cmd = app.add_subcommand("info", "Derived sets, class group, completeness, fixed point");
    info_cmd->add_option("file", file)->required();
    auto* cox_cmd = app.add_subcommand("cox", "Skeleton of Spec of the Cox ring, with provenance");
    cox_cmd->add_option("file", file)->required();
    auto* iota_cmd = app.add_subcommand("iota", "Exact value of iota with certificate");
    iota_cmd->add_option("file", file)->required();
    iota_cmd->add_flag("--affine", affine, "Use the factorial affine formulation");
    auto* conj_cmd = app.add_subcommand("conjecture", "Compare iota with dim G/P");
    conj_cmd->add_option("file", file)->required();
    auto* iso_cmd = app.add_subcommand("iso", "Decide isomorphism of two skeletons");
    iso_cmd->add_option("file1", file)->required();
    iso_cmd->add_option("file2", file2)->required();
    auto* fact_cmd = app.add_subcommand("factorialize", "Factorial complete skeleton with iota not smaller");
    fact_cmd->add_option("file", file)->required();
    auto* batch_cmd = app.add_subcommand("batch", "Report on every *.skel file in a directory");
    batch_cmd->add_option("dir", dir)->required();
    batch_cmd->add_option("--jobs,-j", jobs, "Worker threads")->check(CLI::PositiveNumber);

    // CLI11 wants argv order reversed when given a vector
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_code::ok : exit_code::invalid;
    }

    detail::CliContext ctx{out, err, format == "machine", strict, out_path};
    try {
        if (*validate_cmd) return detail::cmd_validate(ctx, file);
        if (*info_cmd) return detail::cmd_info(ctx, file);
        if (*cox_cmd) return detail::cmd_cox(ctx, file);
        if (*iota_cmd) return detail::cmd_iota(ctx, file, affine);
        if (*conj_cmd) return detail::cmd_conjecture(ctx, file);
        if (*iso_cmd) return detail::cmd_iso(ctx, file, file2);
        if (*fact_cmd) return detail::cmd_factorialize(ctx, file);
        if (*batch_cmd) return detail::cmd_batch(ctx, dir, jobs);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::invalid;
    }
    return exit_code::invalid;
}

} // namespace lvcox

#endif // LVCOX_CLI_HPP
