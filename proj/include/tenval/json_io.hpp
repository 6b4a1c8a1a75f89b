#pragma once

#include <tenval/verify.hpp>

#include <json.hpp>

#include <set>
#include <string>
#include <vector>

namespace tenval {

// ------------------------------------------------------------------
// Rationals: written as exact strings ("16/3", "-2"); read from strings or
// JSON integers.  Floating point input is rejected outright — decimals cannot
// represent the exact values this library traffics in.
// ------------------------------------------------------------------

inline Rational rational_from_json(const nlohmann::json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_number_unsigned()) return Rational(Int(j.get<unsigned long long>()));
    if (j.is_number_float())
        throw ParseError("floating point numbers are not accepted; use \"num/den\" strings");
    throw ParseError("expected a rational as a string or integer");
}

inline nlohmann::json rational_to_json(const Rational& q) { return to_string(q); }

inline Vec vec_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("expected a nonempty coordinate array");
    Vec v(static_cast<int>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<int>(i)] = rational_from_json(j[i]);
    return v;
}

inline nlohmann::json vec_to_json(const Vec& v) {
    nlohmann::json out = nlohmann::json::array();
    for (int i = 0; i < v.dim(); ++i) out.push_back(rational_to_json(v[i]));
    return out;
}

// ------------------------------------------------------------------
// Tensors: {"dim": n, "rank": p, "coords": [{"exp": [..], "value": ".."}, ..]}
// with one entry per exponent in lexicographic order.  The reader accepts
// sparse coordinate lists (missing exponents are zero) and duplicates are an
// error.  With float_values the writer emits 20-significant-digit decimal
// strings instead of exact ones (inspection only; the reader rejects them).
// ------------------------------------------------------------------

inline nlohmann::json tensor_to_json(const SymTensor& t, bool float_values = false) {
    nlohmann::json coords = nlohmann::json::array();
    for (const auto& e : enumerate_exponents(t.dim(), t.rank())) {
        nlohmann::json entry;
        entry["exp"] = e;
        const Rational v = t.coord(e);
        entry["value"] = float_values ? to_decimal_string(v) : to_string(v);
        coords.push_back(std::move(entry));
    }
    nlohmann::json out;
    out["dim"] = t.dim();
    out["rank"] = t.rank();
    out["coords"] = std::move(coords);
    return out;
}

inline SymTensor tensor_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("rank") || !j.contains("coords"))
        throw ParseError("tensor: expected {\"dim\", \"rank\", \"coords\"}");
    if (!j["dim"].is_number_integer() || !j["rank"].is_number_integer())
        throw ParseError("tensor: dim and rank must be integers");
    const int dim = j["dim"].get<int>();
    const int rank = j["rank"].get<int>();
    if (dim < 1 || rank < 0) throw ParseError("tensor: invalid dim or rank");
    SymTensor t(dim, rank);
    if (!j["coords"].is_array()) throw ParseError("tensor: coords must be an array");
    std::set<Exponent> seen;
    for (const auto& entry : j["coords"]) {
        if (!entry.is_object() || !entry.contains("exp") || !entry.contains("value"))
            throw ParseError("tensor: each coordinate needs \"exp\" and \"value\"");
        const auto& je = entry["exp"];
        if (!je.is_array()) throw ParseError("tensor: exp must be an array");
        Exponent e;
        for (const auto& part : je) {
            if (!part.is_number_integer() && !part.is_number_unsigned())
                throw ParseError("tensor: exponents must be integers");
            e.push_back(part.get<int>());
        }
        try {
            check_exponent(e, dim, rank);
        } catch (const Error& err) {
            throw ParseError(std::string("tensor: ") + err.what());
        }
        if (!seen.insert(e).second) throw ParseError("tensor: duplicate exponent");
        t.set_coord(e, rational_from_json(entry["value"]));
    }
    return t;
}

// ------------------------------------------------------------------
// Polytopes: either explicit vertices
//     {"dim": 2, "vertices": [["-1","0"], ["1","0"], ["0","1"], ["0","-1"]]}
// or a family shorthand
//     {"family": "double_pyramid", "a":"1","b":"1","c":"1/4","d":"1/4",
//      "x":["1"], "y":["-1"]}
// with families box, crosspolytope (neg/pos arrays), double_pyramid
// (a,b,c,d scalars broadcast over the base axes, x/y base tilt arrays),
// straight_double_pyramid (dim,a,b,c,d), straight_triangle (a,b,c,d) and
// simplex (dim, scale).
// ------------------------------------------------------------------

inline nlohmann::json polytope_to_json(const Polytope& P) {
    nlohmann::json verts = nlohmann::json::array();
    for (const auto& v : P.vertices()) verts.push_back(vec_to_json(v));
    nlohmann::json out;
    out["dim"] = P.dim();
    out["vertices"] = std::move(verts);
    return out;
}

namespace detail {

inline const nlohmann::json& require_field(const nlohmann::json& j, const char* name) {
    if (!j.contains(name))
        throw ParseError(std::string("polytope: missing field \"") + name + "\"");
    return j[name];
}

inline std::vector<Rational> rational_list(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("polytope: expected a nonempty array");
    std::vector<Rational> out;
    for (const auto& x : j) out.push_back(rational_from_json(x));
    return out;
}

} // namespace detail

inline Polytope polytope_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("polytope: expected an object");
    if (j.contains("family")) {
        const std::string family = detail::require_field(j, "family").get<std::string>();
        if (family == "box" || family == "crosspolytope") {
            auto neg = detail::rational_list(detail::require_field(j, "neg"));
            auto pos = detail::rational_list(detail::require_field(j, "pos"));
            return family == "box" ? make_box(std::move(neg), std::move(pos))
                                   : make_crosspolytope(std::move(neg), std::move(pos));
        }
        if (family == "double_pyramid") {
            return make_double_pyramid(rational_from_json(detail::require_field(j, "a")),
                                       rational_from_json(detail::require_field(j, "b")),
                                       rational_from_json(detail::require_field(j, "c")),
                                       rational_from_json(detail::require_field(j, "d")),
                                       vec_from_json(detail::require_field(j, "x")),
                                       vec_from_json(detail::require_field(j, "y")));
        }
        if (family == "straight_double_pyramid") {
            return make_straight_double_pyramid(
                detail::require_field(j, "dim").get<int>(),
                rational_from_json(detail::require_field(j, "a")),
                rational_from_json(detail::require_field(j, "b")),
                rational_from_json(detail::require_field(j, "c")),
                rational_from_json(detail::require_field(j, "d")));
        }
        if (family == "straight_triangle") {
            return make_straight_triangle(rational_from_json(detail::require_field(j, "a")),
                                          rational_from_json(detail::require_field(j, "b")),
                                          rational_from_json(detail::require_field(j, "c")),
                                          rational_from_json(detail::require_field(j, "d")));
        }
        if (family == "simplex") {
            const Rational scale =
                j.contains("scale") ? rational_from_json(j["scale"]) : Rational(1);
            return make_simplex(detail::require_field(j, "dim").get<int>(), scale);
        }
        throw ParseError("polytope: unknown family \"" + family + "\"");
    }
    if (!j.contains("dim") || !j.contains("vertices"))
        throw ParseError("polytope: expected {\"dim\", \"vertices\"} or a family shorthand");
    if (!j["dim"].is_number_integer()) throw ParseError("polytope: dim must be an integer");
    const int dim = j["dim"].get<int>();
    const auto& jv = j["vertices"];
    if (!jv.is_array() || jv.empty()) throw ParseError("polytope: vertices must be a nonempty array");
    std::vector<Vec> verts;
    for (const auto& row : jv) {
        Vec v = vec_from_json(row);
        if (v.dim() != dim) throw ParseError("polytope: vertex dimension mismatch");
        verts.push_back(std::move(v));
    }
    return Polytope::from_vertices(dim, std::move(verts));
}

// ------------------------------------------------------------------
// Descriptors: {"kind": "mrs_rho", "r": 1, "s": 2,
//               "polar_input": false, "rho_output": false}
// ------------------------------------------------------------------

inline std::string kind_to_string(ValuationKind k) {
    switch (k) {
        case ValuationKind::moment: return "moment";
        case ValuationKind::lp_normal: return "lp_normal";
        case ValuationKind::mrs: return "mrs";
        case ValuationKind::mrs_rho: return "mrs_rho";
        case ValuationKind::euler: return "euler";
        case ValuationKind::vol: return "vol";
    }
    throw BadParameter("kind_to_string: unreachable");
}

inline ValuationKind kind_from_string(const std::string& s) {
    if (s == "moment") return ValuationKind::moment;
    if (s == "lp_normal") return ValuationKind::lp_normal;
    if (s == "mrs") return ValuationKind::mrs;
    if (s == "mrs_rho") return ValuationKind::mrs_rho;
    if (s == "euler") return ValuationKind::euler;
    if (s == "vol") return ValuationKind::vol;
    throw ParseError("descriptor: unknown kind \"" + s + "\"");
}

inline nlohmann::json descriptor_to_json(const ValuationDescriptor& d) {
    nlohmann::json out;
    out["kind"] = kind_to_string(d.kind);
    out["r"] = d.r;
    out["s"] = d.s;
    out["polar_input"] = d.polar_input;
    out["rho_output"] = d.rho_output;
    return out;
}

inline ValuationDescriptor descriptor_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw ParseError("descriptor: expected an object with \"kind\"");
    ValuationDescriptor d;
    d.kind = kind_from_string(j["kind"].get<std::string>());
    auto read_int = [&](const char* name, int fallback) {
        if (!j.contains(name)) return fallback;
        if (!j[name].is_number_integer()) throw ParseError("descriptor: integer field expected");
        return j[name].get<int>();
    };
    auto read_bool = [&](const char* name) {
        if (!j.contains(name)) return false;
        if (!j[name].is_boolean()) throw ParseError("descriptor: boolean field expected");
        return j[name].get<bool>();
    };
    d.r = read_int("r", 0);
    d.s = read_int("s", 0);
    d.polar_input = read_bool("polar_input");
    d.rho_output = read_bool("rho_output");
    return d;
}

// ------------------------------------------------------------------
// Sample sets and reports
// ------------------------------------------------------------------

struct SampleSet {
    int n = 0;
    int p = 0;
    std::vector<ValuationSample> samples;
};

inline nlohmann::json samples_to_json(const SampleSet& set) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& s : set.samples) {
        nlohmann::json entry;
        entry["polytope"] = polytope_to_json(s.polytope);
        entry["value"] = tensor_to_json(s.value);
        arr.push_back(std::move(entry));
    }
    nlohmann::json out;
    out["n"] = set.n;
    out["p"] = set.p;
    out["samples"] = std::move(arr);
    return out;
}

inline SampleSet samples_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("p") || !j.contains("samples"))
        throw ParseError("samples: expected {\"n\", \"p\", \"samples\"}");
    SampleSet set;
    set.n = j["n"].get<int>();
    set.p = j["p"].get<int>();
    if (!j["samples"].is_array()) throw ParseError("samples: samples must be an array");
    for (const auto& entry : j["samples"]) {
        if (!entry.is_object() || !entry.contains("polytope") || !entry.contains("value"))
            throw ParseError("samples: each sample needs \"polytope\" and \"value\"");
        ValuationSample s{polytope_from_json(entry["polytope"]),
                          tensor_from_json(entry["value"])};
        if (s.polytope.dim() != set.n || s.value.dim() != set.n || s.value.rank() != set.p)
            throw ParseError("samples: sample shape does not match n/p");
        set.samples.push_back(std::move(s));
    }
    return set;
}

inline nlohmann::json report_to_json(const CheckReport& r) {
    nlohmann::json out;
    out["check"] = r.check;
    out["cases"] = r.cases;
    out["failures"] = r.failures;
    out["exact"] = r.exact;
    return out;
}

} // namespace tenval
