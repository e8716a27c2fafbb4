#pragma once

// Command execution for the CLI: each command turns an input document into
// a JSON report, and the text form is rendered from that report, so both
// formats always carry the same numbers.

#include "polycurv/io.hpp"

#include <chrono>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace polycurv::io {

struct RunOptions {
    McConfig mc;
    double tolerance = 1e-9;
    std::string measure;  // "", "uniform", or a density file path
    std::optional<RatVector> xi;
    std::optional<RatVector> point;
    std::string method = "exact";  // curvature: exact | halfsphere
    bool timing = false;
};

inline const std::vector<std::string>& commands()
{
    static const std::vector<std::string> names{"gauss-bonnet", "curvature", "euler",
                                                "index",        "complex-check", "cone-identities"};
    return names;
}

namespace detail {

inline json curvature_json(const CurvatureValue& c)
{
    return {{"point", to_json(c.point)}, {"value", c.value}, {"abs_error", c.abs_error}};
}

inline json gauss_bonnet_json(const GaussBonnetReport& r)
{
    json points = json::array();
    for (const auto& c : r.points) points.push_back(curvature_json(c));
    return {{"quantity", r.quantity},
            {"points", points},
            {"sum", r.sum},
            {"sum_error", r.sum_error},
            {"euler_characteristic", r.euler_characteristic},
            {"tolerance", r.tolerance},
            {"pass", r.pass}};
}

inline SphereMeasure select_measure(const InputDocument& doc, const RunOptions& opt)
{
    if (!opt.measure.empty() && opt.measure != "uniform") return load_measure_file(opt.measure, doc.dimension);
    if (opt.measure.empty() && doc.measure) return parse_measure(*doc.measure, doc.dimension, "measure");
    return SphereMeasure::uniform();
}

inline json run_gauss_bonnet(const InputDocument& doc, const RunOptions& opt)
{
    auto phi = measure_valuation(select_measure(doc, opt), opt.mc);
    return gauss_bonnet_json(gauss_bonnet_report(doc.polyhedron(), phi, opt.tolerance));
}

inline json run_curvature(const InputDocument& doc, const RunOptions& opt)
{
    const auto p = doc.polyhedron();
    std::vector<RatVector> pts;
    if (opt.point) pts.push_back(*opt.point);
    else pts = candidate_points(p);

    json out;
    json points = json::array();
    if (opt.method == "exact") {
        auto phi = measure_valuation(select_measure(doc, opt), opt.mc);
        out["quantity"] = phi.name;
        for (const auto& x : pts) points.push_back(curvature_json(vertex_curvature(phi, p, x)));
    } else if (opt.method == "halfsphere") {
        if (select_measure(doc, opt).kind != SphereMeasure::Kind::Uniform)
            throw InputError("the halfsphere method supports only the uniform measure");
        // Each estimate is compared with the outer-angle value at the same point.
        out["quantity"] = "halfsphere";
        bool all = true;
        for (const auto& x : pts) {
            auto est = mc_halfsphere_curvature(p, x, opt.mc);
            auto ref = hadwiger_curvature(p, x, opt.mc);
            const bool ok = std::fabs(est.value - ref.value) <= est.abs_error + ref.abs_error + opt.tolerance;
            all = all && ok;
            auto j = curvature_json(est);
            j["reference"] = ref.value;
            j["reference_error"] = ref.abs_error;
            j["pass"] = ok;
            points.push_back(std::move(j));
        }
        out["tolerance"] = opt.tolerance;
        out["pass"] = all;
    } else {
        throw InputError("unknown curvature method '" + opt.method + "'; expected exact or halfsphere");
    }
    out["points"] = points;
    return out;
}

inline json run_euler(const InputDocument& doc, const RunOptions&)
{
    json out;
    const long chi = euler_characteristic(doc.polyhedron());
    out["euler_characteristic"] = chi;
    if (doc.complex) {
        const long chi_z = euler_characteristic_complex(doc.cell_complex());
        out["complex_euler_characteristic"] = chi_z;
        out["pass"] = doc.pieces.empty() || chi == chi_z;
    }
    return out;
}

inline json run_index(const InputDocument& doc, const RunOptions& opt)
{
    std::optional<RatVector> xi = opt.xi ? opt.xi : doc.xi;
    if (!xi) throw InputError("index requires a direction: pass --xi or set \"xi\" in the document");
    auto j = gauss_bonnet_json(critical_point_report(doc.polyhedron(), *xi, opt.tolerance));
    j["xi"] = to_json(*xi);
    return j;
}

inline json run_complex_check(const InputDocument& doc, const RunOptions& opt)
{
    const auto z = doc.cell_complex();
    const long chi = euler_characteristic_complex(z);
    json vertices = json::array();
    Rational c_sum = 0;
    double g_sum = 0, g_error = 0;
    bool brin_all = true;
    for (const auto& cell : z.cells()) {
        if (cell.dim() != 0) continue;
        const auto& x = cell.vertices().front();
        auto brin = brin_check(z, x, opt.tolerance, opt.mc);
        auto c = combinatorial_curvature_C(z, x);
        c_sum += c;
        g_sum += brin.lhs;
        g_error += brin.lhs_error;
        brin_all = brin_all && brin.pass;
        vertices.push_back({{"point", to_json(x)},
                            {"G", brin.lhs},
                            {"G_error", brin.lhs_error},
                            {"hadwiger", brin.rhs},
                            {"hadwiger_error", brin.rhs_error},
                            {"C", c.get_str()},
                            {"pass", brin.pass}});
    }
    const bool c_ok = c_sum == Rational(chi);
    const bool g_ok = std::fabs(g_sum - static_cast<double>(chi)) <= opt.tolerance + g_error;
    return {{"cells", z.cells().size()},
            {"euler_characteristic", chi},
            {"vertices", vertices},
            {"C_sum", c_sum.get_str()},
            {"G_sum", g_sum},
            {"G_sum_error", g_error},
            {"tolerance", opt.tolerance},
            {"pass", brin_all && c_ok && g_ok}};
}

inline json check_json(const IdentityCheck& c)
{
    return {{"lhs", c.lhs}, {"lhs_error", c.lhs_error}, {"rhs", c.rhs}, {"rhs_error", c.rhs_error}, {"pass", c.pass}};
}

inline json run_cone_identities(const InputDocument& doc, const RunOptions& opt)
{
    if (doc.cones.empty()) throw InputError("cone-identities requires a \"cones\" list");
    const std::size_t n = doc.dimension;
    json cones = json::array();
    bool all = true;
    std::vector<PolyhedralCone> closure;
    for (const auto& spec : doc.cones) {
        const auto c = spec.cone(n);
        auto face_sum = sommerville_check(c, opt.tolerance, opt.mc);
        long proper = 0;
        bool euler_ok = true;
        for (const auto& f : c.faces()) {
            if (f == c) continue;
            ++proper;
            euler_ok = euler_ok && local_euler_check(c, f).pass;
            closure.push_back(f);
        }
        closure.push_back(c);
        const bool involution = c.dual().dual() == c;
        all = all && face_sum.pass && euler_ok && involution;
        cones.push_back({{"cone", c.str()},
                         {"face_sum", check_json(face_sum)},
                         {"proper_faces", proper},
                         {"local_euler", euler_ok},
                         {"dual_involution", involution}});
    }
    auto fan = conic_gamma_sum(validate_conic_complex(std::move(closure)), opt.tolerance, opt.mc);
    all = all && fan.pass;
    return {{"cones", cones}, {"complex", check_json(fan)}, {"tolerance", opt.tolerance}, {"pass", all}};
}

}  // namespace detail

/// Runs a command. Library and input errors propagate as exceptions.
inline json run(const std::string& command, const InputDocument& doc, const RunOptions& opt)
{
    const auto start = std::chrono::steady_clock::now();
    json out;
    if (command == "gauss-bonnet") out = detail::run_gauss_bonnet(doc, opt);
    else if (command == "curvature") out = detail::run_curvature(doc, opt);
    else if (command == "euler") out = detail::run_euler(doc, opt);
    else if (command == "index") out = detail::run_index(doc, opt);
    else if (command == "complex-check") out = detail::run_complex_check(doc, opt);
    else if (command == "cone-identities") out = detail::run_cone_identities(doc, opt);
    else throw InputError("unknown command '" + command + "'");
    out["command"] = command;
    out["dimension"] = doc.dimension;
    out["monte_carlo"] = {{"samples", opt.mc.samples}, {"seed", opt.mc.seed}, {"confidence", opt.mc.confidence}};
    if (opt.timing) {
        const auto elapsed = std::chrono::steady_clock::now() - start;
        out["timing_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
    }
    return out;
}

/// 0 on pass or when the command has no verdict, 1 on fail.
inline int exit_status(const json& report)
{
    if (report.contains("pass") && !report["pass"].get<bool>()) return 1;
    return 0;
}

inline std::string point_text(const json& p) { return point_from_json(p).str(); }

inline std::string verdict(const json& j) { return j["pass"].get<bool>() ? "pass" : "fail"; }

/// Human-readable form of a report produced by run().
inline std::string render_text(const json& r)
{
    std::ostringstream os;
    const std::string cmd = r["command"].get<std::string>();
    auto value_line = [&](const json& c) {
        os << point_text(c["point"]) << ": " << format_real(c["value"].get<double>()) << " ± "
           << format_real(c["abs_error"].get<double>());
    };

    if (cmd == "gauss-bonnet" || cmd == "index") {
        for (const auto& c : r["points"]) {
            value_line(c);
            os << "\n";
        }
        os << "χ = " << r["euler_characteristic"].get<long>() << ", sum = " << format_real(r["sum"].get<double>());
        if (r["sum_error"].get<double>() > 0) os << " ± " << format_real(r["sum_error"].get<double>());
        os << ", " << verdict(r) << "\n";
    } else if (cmd == "curvature") {
        for (const auto& c : r["points"]) {
            value_line(c);
            if (c.contains("reference"))
                os << " (outer angle " << format_real(c["reference"].get<double>()) << ", " << verdict(c) << ")";
            os << "\n";
        }
        if (r.contains("pass")) os << verdict(r) << "\n";
    } else if (cmd == "euler") {
        os << "χ = " << r["euler_characteristic"].get<long>() << "\n";
        if (r.contains("complex_euler_characteristic"))
            os << "χ(complex) = " << r["complex_euler_characteristic"].get<long>() << ", " << verdict(r) << "\n";
    } else if (cmd == "complex-check") {
        for (const auto& v : r["vertices"])
            os << point_text(v["point"]) << ": G = " << format_real(v["G"].get<double>())
               << ", outer angle = " << format_real(v["hadwiger"].get<double>())
               << ", C = " << v["C"].get<std::string>() << ", " << verdict(v) << "\n";
        os << "cells = " << r["cells"].get<std::size_t>() << ", χ = " << r["euler_characteristic"].get<long>()
           << ", sum C = " << r["C_sum"].get<std::string>() << ", sum G = " << format_real(r["G_sum"].get<double>())
           << ", " << verdict(r) << "\n";
    } else if (cmd == "cone-identities") {
        std::size_t i = 0;
        for (const auto& c : r["cones"]) {
            const auto& fs = c["face_sum"];
            os << "cone " << i++ << ": face sum = " << format_real(fs["lhs"].get<double>())
               << ", outer angle = " << format_real(fs["rhs"].get<double>()) << ", " << verdict(fs)
               << "; local Euler " << (c["local_euler"].get<bool>() ? "pass" : "fail") << "; dual involution "
               << (c["dual_involution"].get<bool>() ? "pass" : "fail") << "\n";
        }
        const auto& z = r["complex"];
        os << "complex: outer angle of union = " << format_real(z["lhs"].get<double>())
           << ", alternating sum = " << format_real(z["rhs"].get<double>()) << ", " << verdict(z) << "\n";
        os << verdict(r) << "\n";
    }
    if (r.contains("timing_ms")) os << "time = " << format_real(r["timing_ms"].get<double>()) << " ms\n";
    return os.str();
}

}  // namespace polycurv::io
