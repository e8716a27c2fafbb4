#pragma once

// JSON input documents and density files. Coordinates are exact: integers,
// "p/q" strings or decimal strings. JSON floating point literals are
// rejected since their binary value is not the written decimal.

#include "polycurv/analysis.hpp"
#include "polycurv/complexes.hpp"

#include "json.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace polycurv::io {

using json = nlohmann::json;

/// Malformed or inconsistent input; the message starts with its location.
class InputError : public Error {
public:
    using Error::Error;
};

inline Rational parse_coordinate(const json& v, const std::string& where)
{
    if (v.is_number_integer()) {
        if (v.is_number_unsigned()) return Rational(Integer(std::to_string(v.get<std::uint64_t>())));
        return Rational(Integer(std::to_string(v.get<std::int64_t>())));
    }
    if (v.is_number_float())
        throw InputError(where + ": floating point literal " + v.dump() +
                         " is not exact; write it as a string such as \"0.5\" or \"1/2\"");
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>());
        } catch (const Error& e) {
            throw InputError(where + ": " + e.what());
        }
    }
    throw InputError(where + ": expected a number or a rational string, found " + std::string(v.type_name()));
}

inline RatVector parse_point(const json& v, std::size_t n, const std::string& where)
{
    if (!v.is_array()) throw InputError(where + ": expected a coordinate array");
    if (v.size() != n)
        throw InputError(where + ": point has " + std::to_string(v.size()) + " coordinates, expected " +
                         std::to_string(n));
    RatVector p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = parse_coordinate(v[i], where + "[" + std::to_string(i) + "]");
    return p;
}

inline std::vector<RatVector> parse_point_list(const json& v, std::size_t n, const std::string& where,
                                               bool allow_empty = false)
{
    if (!v.is_array()) throw InputError(where + ": expected a list of points");
    if (v.empty() && !allow_empty) throw InputError(where + ": empty point list");
    std::vector<RatVector> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(parse_point(v[i], n, where + "[" + std::to_string(i) + "]"));
    return out;
}

/// "1,2" or "1/2,-3" on the command line.
inline RatVector parse_point_text(const std::string& text, std::size_t n, const std::string& what)
{
    std::vector<Rational> coords;
    std::stringstream ss(text);
    std::string item;
    try {
        while (std::getline(ss, item, ',')) coords.push_back(parse_rational(item));
    } catch (const Error& e) {
        throw InputError(what + ": " + e.what());
    }
    if (coords.size() != n)
        throw InputError(what + ": " + std::to_string(coords.size()) + " coordinates given, expected " +
                         std::to_string(n));
    return RatVector(std::move(coords));
}

struct ConeSpec {
    std::vector<RatVector> generators;
    std::vector<RatVector> lineality;

    PolyhedralCone cone(std::size_t n) const { return PolyhedralCone::from_generators(n, generators, lineality); }
};

struct ComplexSpec {
    std::vector<std::vector<RatVector>> cells;
    bool closure = false;  // add all faces of the listed cells
};

struct InputDocument {
    std::size_t dimension = 0;
    std::vector<std::vector<RatVector>> pieces;
    std::optional<ComplexSpec> complex;
    std::optional<RatVector> xi;
    std::optional<json> measure;
    std::vector<ConeSpec> cones;

    Polyhedron polyhedron() const
    {
        std::vector<ConvexPolytope> ps;
        for (const auto& p : pieces) ps.push_back(hull(p));
        return Polyhedron(dimension, std::move(ps));
    }

    CellComplex cell_complex() const
    {
        if (!complex) throw InputError("document has no \"complex\" entry");
        std::vector<ConvexPolytope> cells;
        for (const auto& c : complex->cells) cells.push_back(hull(c));
        if (complex->closure) cells = face_closure(cells);
        return validate_complex(std::move(cells));
    }
};

inline InputDocument parse_document(const json& doc, const std::string& source)
{
    auto at = [&](const std::string& path) { return source + ": " + path; };
    if (!doc.is_object()) throw InputError(at("top level") + ": expected an object");
    static const std::vector<std::string> known{"dimension", "pieces", "complex", "xi",
                                                "measure",   "cones",  "comment", "expected"};
    for (const auto& [key, _] : doc.items())
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw InputError(at(key) + ": unknown field");

    InputDocument d;
    if (!doc.contains("dimension")) throw InputError(at("dimension") + ": missing");
    const auto& dim = doc["dimension"];
    if (!dim.is_number_integer() || dim.get<long long>() < 1)
        throw InputError(at("dimension") + ": expected a positive integer");
    d.dimension = dim.get<std::size_t>();

    if (doc.contains("pieces")) {
        const auto& ps = doc["pieces"];
        if (!ps.is_array()) throw InputError(at("pieces") + ": expected a list of vertex lists");
        for (std::size_t i = 0; i < ps.size(); ++i)
            d.pieces.push_back(parse_point_list(ps[i], d.dimension, at("pieces[" + std::to_string(i) + "]")));
    }
    if (doc.contains("complex")) {
        const auto& c = doc["complex"];
        ComplexSpec spec;
        const json* cells = &c;
        if (c.is_object()) {
            if (!c.contains("cells")) throw InputError(at("complex.cells") + ": missing");
            cells = &c["cells"];
            if (c.contains("closure")) {
                if (!c["closure"].is_boolean()) throw InputError(at("complex.closure") + ": expected a boolean");
                spec.closure = c["closure"].get<bool>();
            }
        }
        if (!cells->is_array()) throw InputError(at("complex") + ": expected a list of cells");
        for (std::size_t i = 0; i < cells->size(); ++i)
            spec.cells.push_back(
                parse_point_list((*cells)[i], d.dimension, at("complex.cells[" + std::to_string(i) + "]")));
        d.complex = std::move(spec);
    }
    if (doc.contains("xi")) d.xi = parse_point(doc["xi"], d.dimension, at("xi"));
    if (doc.contains("measure")) d.measure = doc["measure"];
    if (doc.contains("cones")) {
        const auto& cs = doc["cones"];
        if (!cs.is_array()) throw InputError(at("cones") + ": expected a list of cones");
        for (std::size_t i = 0; i < cs.size(); ++i) {
            const std::string where = at("cones[" + std::to_string(i) + "]");
            const auto& c = cs[i];
            if (!c.is_object()) throw InputError(where + ": expected an object with \"generators\"");
            ConeSpec spec;
            if (c.contains("generators"))
                spec.generators = parse_point_list(c["generators"], d.dimension, where + ".generators", true);
            if (c.contains("lineality"))
                spec.lineality = parse_point_list(c["lineality"], d.dimension, where + ".lineality", true);
            d.cones.push_back(std::move(spec));
        }
    }
    return d;
}

inline InputDocument parse_input(std::istream& in, const std::string& source = "<input>")
{
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(source + ": byte " + std::to_string(e.byte) + ": malformed JSON: " + e.what());
    }
    return parse_document(doc, source);
}

inline InputDocument parse_input_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError(path + ": cannot open file");
    return parse_input(in, path);
}

// ---------------------------------------------------------------------------
// Density measures
//
//   {"name": "tilt", "terms": [{"coefficient": 1, "exponents": [0,0]},
//                              {"coefficient": "1/2", "exponents": [1,0]}],
//    "sup": 2, "normalized": true, "vanishes_on_great_subspheres": true}
//
// The density is taken with respect to the uniform probability measure.

inline double parse_real(const json& v, const std::string& where)
{
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>()).get_d();
        } catch (const Error& e) {
            throw InputError(where + ": " + e.what());
        }
    }
    throw InputError(where + ": expected a number");
}

inline SphereMeasure parse_measure(const json& m, std::size_t n, const std::string& where)
{
    if (m.is_string()) {
        if (m.get<std::string>() == "uniform") return SphereMeasure::uniform();
        throw InputError(where + ": unknown measure '" + m.get<std::string>() + "'");
    }
    if (!m.is_object()) throw InputError(where + ": expected \"uniform\" or a density object");
    if (!m.contains("terms") || !m["terms"].is_array()) throw InputError(where + ".terms: missing term list");
    if (!m.contains("sup")) throw InputError(where + ".sup: missing declared sup bound");
    PolynomialDensity f;
    for (std::size_t i = 0; i < m["terms"].size(); ++i) {
        const auto& t = m["terms"][i];
        const std::string tw = where + ".terms[" + std::to_string(i) + "]";
        if (!t.is_object() || !t.contains("coefficient") || !t.contains("exponents"))
            throw InputError(tw + ": expected {\"coefficient\", \"exponents\"}");
        PolynomialDensity::Term term;
        term.coefficient = parse_real(t["coefficient"], tw + ".coefficient");
        const auto& ex = t["exponents"];
        if (!ex.is_array() || ex.size() != n)
            throw InputError(tw + ".exponents: expected " + std::to_string(n) + " nonnegative integers");
        for (const auto& e : ex) {
            if (!e.is_number_unsigned()) throw InputError(tw + ".exponents: expected nonnegative integers");
            term.exponents.push_back(e.get<unsigned>());
        }
        f.terms.push_back(std::move(term));
    }
    auto flag = [&](const char* key, bool fallback) {
        if (!m.contains(key)) return fallback;
        if (!m[key].is_boolean()) throw InputError(where + "." + key + ": expected a boolean");
        return m[key].get<bool>();
    };
    const std::string name = m.contains("name") && m["name"].is_string() ? m["name"].get<std::string>() : "density";
    const double sup = parse_real(m["sup"], where + ".sup");
    try {
        return SphereMeasure::from_density(name, f, sup, flag("normalized", true),
                                           flag("vanishes_on_great_subspheres", true));
    } catch (const Error& e) {
        throw InputError(where + ": " + e.what());
    }
}

inline SphereMeasure load_measure_file(const std::string& path, std::size_t n)
{
    std::ifstream in(path);
    if (!in) throw InputError(path + ": cannot open density file");
    json m;
    try {
        m = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": byte " + std::to_string(e.byte) + ": malformed JSON: " + e.what());
    }
    return parse_measure(m, n, path);
}

// ---------------------------------------------------------------------------
// Serialization helpers

inline json to_json(const RatVector& v)
{
    json a = json::array();
    for (const auto& q : v) a.push_back(q.get_str());
    return a;
}

inline RatVector point_from_json(const json& a)
{
    RatVector v(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) v[i] = parse_rational(a[i].get<std::string>());
    return v;
}

/// Twelve significant digits; negative zero prints as 0.
inline std::string format_real(double x)
{
    if (x == 0) x = 0;
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

}  // namespace polycurv::io
