// polycurv: vertex curvatures and angle identities of polyhedra given as
// unions of convex polytopes.
//
//   polycurv <command> <input.json> [options]
//
// Exit status: 0 pass, 1 an identity check failed, 2 usage or input error.

#include "polycurv/report.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <string>

int main(int argc, char** argv)
{
    using namespace polycurv;

    CLI::App app{"Vertex curvatures and Gauss-Bonnet checks for polyhedra"};
    std::string command, input, xi_text, point_text;
    io::RunOptions opt;
    bool as_json = false;

    app.add_option("command", command, "gauss-bonnet | curvature | euler | index | complex-check | cone-identities")
        ->required()
        ->check(CLI::IsMember(io::commands()));
    app.add_option("input", input, "input document (JSON)")->required();
    app.add_option("--samples", opt.mc.samples, "Monte Carlo sample count")->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--seed", opt.mc.seed, "Monte Carlo seed")->capture_default_str();
    app.add_option("--confidence", opt.mc.confidence, "confidence level 1 - delta of reported error bounds")
        ->capture_default_str()
        ->check(CLI::Range(0.0, 1.0));
    app.add_option("--tolerance", opt.tolerance, "absolute tolerance of identity checks")->capture_default_str();
    app.add_option("--measure", opt.measure, "uniform, or a density file");
    app.add_option("--xi", xi_text, "direction for index, e.g. 1,2");
    app.add_option("--point", point_text, "single point for curvature, e.g. 1/2,0");
    app.add_option("--method", opt.method, "curvature method: exact | halfsphere")->capture_default_str();
    app.add_flag("--json", as_json, "emit the JSON report");
    app.add_flag("--timing", opt.timing, "include wall-clock time in the report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    if (!(opt.mc.confidence > 0 && opt.mc.confidence < 1)) {
        std::cerr << "error: --confidence must lie strictly between 0 and 1\n";
        return 2;
    }

    try {
        const auto doc = io::parse_input_file(input);
        if (!xi_text.empty()) opt.xi = io::parse_point_text(xi_text, doc.dimension, "--xi");
        if (!point_text.empty()) opt.point = io::parse_point_text(point_text, doc.dimension, "--point");
        const auto report = io::run(command, doc, opt);
        if (as_json) std::cout << report.dump(2) << "\n";
        else std::cout << io::render_text(report);
        return io::exit_status(report);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
