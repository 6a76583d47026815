#ifndef LVCOX_FORMAT_HPP
#define LVCOX_FORMAT_HPP

// Skeleton files (JSON, see docs/format.md) and JSON views of results.
// Fractions always travel as strings: "3", "-1/2".

#include <cstddef>
#include <cstdint>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cox.hpp"
#include "errors.hpp"
#include "exact.hpp"
#include "factorialize.hpp"
#include "iota.hpp"
#include "iso.hpp"
#include "roots.hpp"
#include "skeleton.hpp"

namespace lvcox {

using json = nlohmann::ordered_json;

/// Parsed file that failed validation.
class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<Violation> vs)
        : Error("validation failed: " + describe(vs)), violations_(std::move(vs)) {}
    const std::vector<Violation>& violations() const { return violations_; }

private:
    std::vector<Violation> violations_;
};

struct SkeletonFile {
    SphericalSkeleton skeleton;
    /// m of G-invariant divisors added by factorialize; omitted from the file when 1.
    std::int64_t invariant_m = 1;
};

inline Rat parse_rat(const std::string& s, const std::string& field) {
    static const std::regex re(R"(-?[0-9]+(/[0-9]+)?)");
    if (!std::regex_match(s, re)) throw ParseError(field + ": '" + s + "' is not a fraction");
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    const Int den(s.substr(slash + 1));
    if (den == 0) throw ParseError(field + ": zero denominator");
    return Rat(Int(s.substr(0, slash)), den);
}

namespace detail {

inline void check_keys(const json& obj, const std::string& field, const std::set<std::string>& required,
                       const std::set<std::string>& optional = {}) {
    if (!obj.is_object()) throw ParseError(field + ": expected an object");
    for (const auto& [key, _] : obj.items())
        if (!required.count(key) && !optional.count(key))
            throw ParseError(field + ": unknown field '" + key + "'");
    for (const std::string& key : required)
        if (!obj.contains(key)) throw ParseError(field + ": missing field '" + key + "'");
}

inline const json& array_at(const json& obj, const std::string& key, const std::string& field) {
    const json& v = obj.at(key);
    if (!v.is_array()) throw ParseError(field + "." + key + ": expected an array");
    return v;
}

inline std::string string_at(const json& v, const std::string& field) {
    if (!v.is_string()) throw ParseError(field + ": expected a string");
    return v.get<std::string>();
}

inline std::int64_t int_at(const json& v, const std::string& field) {
    if (!v.is_number_integer()) throw ParseError(field + ": expected an integer");
    return v.get<std::int64_t>();
}

inline Vec rat_list(const json& arr, const std::string& field) {
    if (!arr.is_array()) throw ParseError(field + ": expected an array");
    Vec out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string f = field + "[" + std::to_string(i) + "]";
        out.push_back(parse_rat(string_at(arr[i], f), f));
    }
    return out;
}

} // namespace detail

/// Parses without validating.
inline SkeletonFile read_skeleton_file(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    detail::check_keys(doc, "<root>", {"name", "root_system", "spherical_roots", "divisors"},
                       {"invariant_m"});
    SkeletonFile file;
    SphericalSkeleton& sk = file.skeleton;
    sk.name = detail::string_at(doc.at("name"), "name");

    RootSystemSpec spec;
    const json& comps = detail::array_at(doc, "root_system", "<root>");
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const std::string f = "root_system[" + std::to_string(i) + "]";
        detail::check_keys(comps[i], f, {"type", "rank"});
        const std::string type = detail::string_at(comps[i].at("type"), f + ".type");
        if (type.size() != 1) throw ParseError(f + ".type: expected one letter A-G");
        RootComponent comp;
        try {
            comp = {root_type_from(type[0]), static_cast<int>(detail::int_at(comps[i].at("rank"), f + ".rank"))};
        } catch (const InadmissibleSpec& e) {
            throw ParseError(f + ": " + e.what());
        }
        if (!admissible(comp))
            throw ParseError(f + ": " + std::string(1, type_letter(comp.type)) + std::to_string(comp.rank) +
                             " is not an admissible component");
        spec.components.push_back(comp);
    }
    try {
        sk.rs = RootSystem(spec);
    } catch (const InadmissibleSpec& e) {
        throw ParseError(std::string("root_system: ") + e.what());
    }

    const json& roots = detail::array_at(doc, "spherical_roots", "<root>");
    for (std::size_t k = 0; k < roots.size(); ++k)
        sk.sigma_sc.push_back(detail::rat_list(roots[k], "spherical_roots[" + std::to_string(k) + "]"));

    const json& divs = detail::array_at(doc, "divisors", "<root>");
    for (std::size_t i = 0; i < divs.size(); ++i) {
        const std::string f = "divisors[" + std::to_string(i) + "]";
        detail::check_keys(divs[i], f, {"name", "varsigma", "c", "m"});
        Divisor d;
        d.name = detail::string_at(divs[i].at("name"), f + ".name");
        const json& vs = detail::array_at(divs[i], "varsigma", f);
        for (std::size_t j = 0; j < vs.size(); ++j) {
            const std::string vf = f + ".varsigma[" + std::to_string(j) + "]";
            try {
                if (!d.varsigma.insert(sk.rs.index_of(detail::string_at(vs[j], vf))).second)
                    throw ParseError(vf + ": repeated label");
            } catch (const UnknownLabel& e) {
                throw ParseError(vf + ": " + e.what());
            }
        }
        d.c = detail::rat_list(divs[i].at("c"), f + ".c");
        d.m = detail::int_at(divs[i].at("m"), f + ".m");
        sk.divisors.push_back(std::move(d));
    }
    if (doc.contains("invariant_m")) file.invariant_m = detail::int_at(doc.at("invariant_m"), "invariant_m");
    return file;
}

/// Parses and validates; throws ValidationError with the violation list.
inline SkeletonFile parse_skeleton_file_ext(const std::string& text) {
    SkeletonFile f = read_skeleton_file(text);
    auto vs = validate(f.skeleton);
    if (!vs.empty()) throw ValidationError(std::move(vs));
    return f;
}

inline SphericalSkeleton parse_skeleton_file(const std::string& text) {
    return parse_skeleton_file_ext(text).skeleton;
}

inline json rat_array(const Vec& v) {
    json a = json::array();
    for (const Rat& x : v) a.push_back(to_string(x));
    return a;
}

/// Canonical text: fixed key order, one divisor per line, trailing newline.
inline std::string format_skeleton(const SkeletonFile& file) {
    const SphericalSkeleton& sk = file.skeleton;
    std::ostringstream os;
    os << "{\n  \"name\": " << json(sk.name).dump() << ",\n  \"root_system\": [";
    for (std::size_t i = 0; i < sk.rs.spec().components.size(); ++i) {
        const RootComponent& c = sk.rs.spec().components[i];
        if (i) os << ", ";
        os << "{\"type\": \"" << type_letter(c.type) << "\", \"rank\": " << c.rank << "}";
    }
    os << "],\n  \"spherical_roots\": [";
    for (std::size_t k = 0; k < sk.sigma_sc.size(); ++k) {
        if (k) os << ", ";
        os << rat_array(sk.sigma_sc[k]).dump(-1, ' ', false);
    }
    os << "],\n  \"divisors\": [";
    for (std::size_t i = 0; i < sk.divisors.size(); ++i) {
        const Divisor& d = sk.divisors[i];
        json vs = json::array();
        for (std::size_t a : d.varsigma) vs.push_back(sk.rs.label(a));
        os << (i ? ",\n" : "\n") << "    {\"name\": " << json(d.name).dump() << ", \"varsigma\": " << vs.dump()
           << ", \"c\": " << rat_array(d.c).dump() << ", \"m\": " << d.m << "}";
    }
    os << (sk.divisors.empty() ? "]" : "\n  ]");
    if (file.invariant_m != 1) os << ",\n  \"invariant_m\": " << file.invariant_m;
    os << "\n}\n";
    std::string s = os.str();
    // nlohmann separates array items with "," only; normalize to ", "
    std::string out;
    out.reserve(s.size());
    bool in_string = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char ch = s[i];
        if (ch == '"' && (i == 0 || s[i - 1] != '\\')) in_string = !in_string;
        out += ch;
        if (!in_string && ch == ',' && i + 1 < s.size() && s[i + 1] != ' ' && s[i + 1] != '\n') out += ' ';
    }
    return out;
}

inline std::string format_skeleton(const SphericalSkeleton& sk) { return format_skeleton(SkeletonFile{sk, 1}); }

// ---- JSON views of results ----

inline json to_json(const std::vector<Violation>& vs) {
    json a = json::array();
    for (const Violation& v : vs) a.push_back({{"rule", v.rule}, {"where", v.where}, {"message", v.message}});
    return a;
}

inline json to_json(const IotaReport& rep) {
    json j;
    j["value"] = rep.value_string();
    j["base_term"] = to_string(rep.base_term);
    j["witness"] = rep.witness ? rat_array(*rep.witness) : json(nullptr);
    j["ray"] = rep.ray ? rat_array(*rep.ray) : json(nullptr);
    return j;
}

inline json labels_json(const RootSystem& rs, const std::vector<std::size_t>& idx) {
    json a = json::array();
    for (std::size_t i : idx) a.push_back(rs.label(i));
    return a;
}

inline json to_json(const SphericalSkeleton& sk, const DerivedSets& ds) {
    auto roots = [&](const std::vector<std::size_t>& ks) {
        json a = json::array();
        for (std::size_t k : ks) a.push_back(rat_array(sk.sigma_sc[k]));
        return a;
    };
    json j;
    j["sigma_a"] = roots(ds.sigma_a);
    j["sigma_2a"] = roots(ds.sigma_2a);
    j["colors"] = ds.colors;
    j["g_invariant"] = ds.g_invariant;
    j["script_S"] = labels_json(sk.rs, ds.script_S);
    j["d_script_S"] = ds.d_script_S;
    return j;
}

inline json to_json(const CoxResult& res) {
    json prov = json::object();
    for (const auto& [to, from] : res.provenance) prov[to] = from;
    return {{"skeleton", json::parse(format_skeleton(res.skeleton))}, {"provenance", prov}};
}

/// Witness as two name maps.
inline json to_json(const SphericalSkeleton& a, const SphericalSkeleton& b, const SkeletonIso& w) {
    json roots = json::object();
    for (std::size_t i = 0; i < w.phi_R.image.size(); ++i) roots[a.rs.label(i)] = b.rs.label(w.phi_R.image[i]);
    json divs = json::object();
    for (std::size_t d = 0; d < w.phi_Delta.size(); ++d)
        divs[a.divisors[d].name] = b.divisors[w.phi_Delta[d]].name;
    return {{"phi_R", roots}, {"phi_Delta", divs}};
}

inline json to_json(const RootSystem& rs, const FactorializeTrace& t) {
    json steps = json::array();
    for (const FactorializeStep& s : t.steps) {
        json sj;
        sj["alpha"] = rs.label(s.alpha);
        sj["case"] = to_string(s.kind);
        sj["theta"] = rat_array(s.theta);
        sj["lambda1"] = to_string(s.lambda1);
        sj["lambda2"] = to_string(s.lambda2);
        sj["theta_prime"] = rat_array(s.theta_prime);
        json vs = json::array();
        for (std::size_t a : s.added_divisor.varsigma) vs.push_back(rs.label(a));
        sj["added_divisor"] = {{"name", s.added_divisor.name},
                               {"varsigma", vs},
                               {"c", rat_array(s.added_divisor.c)},
                               {"m", s.added_divisor.m}};
        steps.push_back(sj);
    }
    return {{"steps", steps}, {"iota_before", to_json(t.iota_before)}, {"iota_after", to_json(t.iota_after)}};
}

} // namespace lvcox

#endif // LVCOX_FORMAT_HPP
