#include "support.hpp"

#include <gtest/gtest.h>

#include <fstream>

using namespace polycurv;
using namespace polycurv::test;

namespace {

constexpr double tol = 1e-9;

Polyhedron l_shape() { return Polyhedron::of({box(pt({0, 0}), pt({2, 1})), box(pt({0, 0}), pt({1, 2}))}); }

nlohmann::json expected(const std::string& name)
{
    std::ifstream in(fixture(name));
    return nlohmann::json::parse(in).at("expected");
}

RatVector parse_key(const std::string& key, std::size_t n)
{
    return io::parse_point_text(key.substr(1, key.size() - 2), n, key);
}

double value_at(const GaussBonnetReport& r, const RatVector& x)
{
    for (const auto& c : r.points)
        if (c.point == x) return c.value;
    return 0;
}

SphereMeasure tilt()
{
    return SphereMeasure::from_density("tilt", [](std::span<const double> u) { return 1 + u[0] / 2; }, 1.5);
}

const std::vector<std::string> polyhedron_fixtures{"square.json", "cube.json",    "tetrahedron.json", "l_shape.json",
                                                   "annulus.json", "two_squares.json", "empty.json"};

}  // namespace

TEST(EulerCharacteristic, Examples)
{
    EXPECT_EQ(euler_characteristic(Polyhedron::of({unit_cube(2)})), 1);
    EXPECT_EQ(euler_characteristic(load("annulus.json").polyhedron()), 0);
    EXPECT_EQ(euler_characteristic(load("two_squares.json").polyhedron()), 2);
    EXPECT_EQ(euler_characteristic(Polyhedron(3)), 0);
    auto segments = Polyhedron::of({hull({pt({0, 0}), pt({2, 0})}), hull({pt({1, 0}), pt({3, 0})}), hull({pt({2, 0}), pt({4, 0})})});
    // Three overlapping segments: 3 - 3 + 1, the triple meets at (2,0).
    EXPECT_EQ(euler_characteristic(segments), 1);
}

TEST(EulerCharacteristic, ComplexExamples)
{
    EXPECT_EQ(euler_characteristic_complex(load("square_diagonal_a.json").cell_complex()), 1);
    EXPECT_EQ(euler_characteristic_complex(load("triangle_boundary.json").cell_complex()), 0);
    EXPECT_EQ(euler_characteristic_complex(validate_complex({hull({pt({3, 3})})})), 1);
}

TEST(EulerCharacteristic, CapErrorSuggestsRefinement)
{
    std::vector<ConvexPolytope> boxes;
    for (long i = 0; i < 21; ++i) boxes.push_back(box(pt({3 * i, 0}), pt({3 * i + 1, 1})));
    try {
        euler_characteristic(Polyhedron::of(boxes));
        FAIL();
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("refine"), std::string::npos);
    }
    EXPECT_EQ(euler_characteristic(Polyhedron::of(boxes), 21), 21);
}

TEST(EulerCharacteristic, AgreesWithIndependentOracles)
{
    Rng rng(61);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 2);
        auto boxes = random_boxes(rng, n);
        EXPECT_EQ(euler_characteristic(Polyhedron(n, boxes)), grid_euler_characteristic(boxes, n));
    }
    for (int trial = 0; trial < 10; ++trial) {
        auto poly = random_star_polygon(rng);
        auto tris = ear_clip(poly);
        std::vector<ConvexPolytope> pieces;
        for (const auto& t : tris) pieces.push_back(hull(t));
        EXPECT_EQ(euler_characteristic(Polyhedron::of(pieces)), euler_characteristic_complex(complex_of(tris)));
    }
    EXPECT_EQ(euler_characteristic(load("l_shape.json").polyhedron()),
              euler_characteristic_complex(load("l_shape_triangulated.json").cell_complex()));
}

TEST(CandidatePoints, Examples)
{
    EXPECT_EQ(candidate_points(Polyhedron::of({unit_cube(2)})), unit_cube(2).vertices());

    // The intersection of the two rectangles is the unit square, whose
    // corners are all rectangle corners already: 8 distinct points.
    auto l = candidate_points(l_shape());
    EXPECT_EQ(l.size(), 8u);
    EXPECT_TRUE(std::binary_search(l.begin(), l.end(), pt({1, 1})));
    EXPECT_TRUE(std::is_sorted(l.begin(), l.end()));

    auto triangles = Polyhedron::of({hull({pt({0, 0}), pt({1, 0}), pt({0, 1})}), hull({pt({5, 5}), pt({6, 5}), pt({5, 6})})});
    EXPECT_EQ(candidate_points(triangles).size(), 6u);
    EXPECT_TRUE(candidate_points(Polyhedron(2)).empty());
}

TEST(GaussBonnetReport, Examples)
{
    auto sq = gauss_bonnet_report(Polyhedron::of({unit_cube(2)}), sigma_valuation());
    ASSERT_EQ(sq.points.size(), 4u);
    for (const auto& c : sq.points) EXPECT_NEAR(c.value, 0.25, tol);
    EXPECT_NEAR(sq.sum, 1.0, tol);
    EXPECT_EQ(sq.euler_characteristic, 1);
    EXPECT_TRUE(sq.pass);
    EXPECT_EQ(sq.quantity, "sigma");

    auto l = gauss_bonnet_report(l_shape(), sigma_valuation());
    int quarter = 0;
    for (const auto& c : l.points) quarter += std::abs(c.value - 0.25) < tol;
    EXPECT_EQ(quarter, 5);
    EXPECT_NEAR(value_at(l, pt({1, 1})), -0.25, tol);
    EXPECT_TRUE(l.pass);

    auto a = gauss_bonnet_report(load("annulus.json").polyhedron(), sigma_valuation());
    EXPECT_NEAR(a.sum, 0.0, tol);
    EXPECT_EQ(a.euler_characteristic, 0);
    EXPECT_TRUE(a.pass);
}

TEST(GaussBonnetReport, VerdictUsesToleranceAndErrors)
{
    // A valuation that is off by a fixed amount on full-dimensional cones.
    ConeValuation skewed{"skewed",
                         [](const PolyhedralCone& c) {
                             auto e = solid_angle(c);
                             if (c.is_full_dimensional() && !c.is_full_space()) e.value += 0.01;
                             return e;
                         },
                         true, true};
    auto r = gauss_bonnet_report(Polyhedron::of({unit_cube(2)}), skewed);
    EXPECT_NEAR(r.sum, 1.04, 1e-12);
    EXPECT_FALSE(r.pass);
    EXPECT_TRUE(gauss_bonnet_report(Polyhedron::of({unit_cube(2)}), skewed, 0.05).pass);
}

TEST(CriticalPointReport, Examples)
{
    auto cube = critical_point_report(load("cube.json").polyhedron(), pt({1, 2, 4}));
    EXPECT_EQ(cube.sum, 1.0);
    int ones = 0;
    for (const auto& c : cube.points) ones += c.value == 1.0;
    EXPECT_EQ(ones, 1);
    EXPECT_TRUE(cube.pass);

    auto annulus = critical_point_report(load("annulus.json").polyhedron(), pt({1, 2}));
    EXPECT_EQ(annulus.sum, 0.0);
    EXPECT_TRUE(annulus.pass);

    auto two = critical_point_report(load("two_squares.json").polyhedron(), pt({1, 2}));
    EXPECT_EQ(two.sum, 2.0);
    EXPECT_EQ(two.euler_characteristic, 2);

    EXPECT_THROW(critical_point_report(Polyhedron::of({unit_cube(2)}), pt({1, 0})), PreconditionError);
}

TEST(Fixtures, MatchHandComputedValues)
{
    for (const auto& name : polyhedron_fixtures) {
        SCOPED_TRACE(name);
        auto doc = load(name);
        auto p = doc.polyhedron();
        auto ex = expected(name);
        EXPECT_EQ(euler_characteristic(p), ex.at("euler_characteristic").get<long>());
        auto gb = gauss_bonnet_report(p, sigma_valuation());
        EXPECT_TRUE(gb.pass);
        if (ex.contains("curvature")) {
            for (const auto& [key, value] : ex["curvature"].items()) {
                const double want = parse_rational(value.get<std::string>()).get_d();
                EXPECT_NEAR(hadwiger_curvature(p, parse_key(key, doc.dimension)).value, want, tol) << key;
            }
        }
        if (doc.xi) {
            auto cp = critical_point_report(p, *doc.xi);
            EXPECT_TRUE(cp.pass);
            EXPECT_EQ(cp.sum, static_cast<double>(gb.euler_characteristic));
            const auto indices = ex.value("index", nlohmann::json::object());
            for (const auto& c : cp.points) {
                const std::string key = c.point.str();
                EXPECT_EQ(c.value, indices.contains(key) ? indices[key].get<double>() : 0.0) << key;
            }
        }
    }
}

TEST(Fixtures, GaussBonnetWithADensityValuation)
{
    McConfig mc{20000, 6, 1 - 1e-6};
    const auto phi = measure_valuation(tilt(), mc);
    for (const auto& name : polyhedron_fixtures) {
        SCOPED_TRACE(name);
        auto r = gauss_bonnet_report(load(name).polyhedron(), phi);
        EXPECT_TRUE(r.pass) << r.sum << " ± " << r.sum_error;
    }
}

TEST(GaussBonnetReport, RandomHullsAndBoxUnions)
{
    Rng rng(62);
    McConfig mc{5000, 2, 1 - 1e-6};
    const auto density = measure_valuation(tilt(), mc);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 2);
        auto hullp = Polyhedron::of({hull(random_points(rng, 12, n))});
        auto boxes = Polyhedron(n, random_boxes(rng, n));
        for (const auto& p : {hullp, boxes}) {
            auto r = gauss_bonnet_report(p, sigma_valuation());
            EXPECT_TRUE(r.pass) << r.sum << " vs " << r.euler_characteristic;
            EXPECT_NEAR(r.sum, static_cast<double>(r.euler_characteristic), 1e-8);
            EXPECT_TRUE(gauss_bonnet_report(p, density).pass);
        }
    }
}

TEST(CandidatePoints, CurvatureVanishesElsewhere)
{
    Rng rng(63);
    std::uniform_int_distribution<long> coord(0, 32);
    int checked = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 2);
        auto p = Polyhedron(n, random_boxes(rng, n));
        const auto candidates = candidate_points(p);
        // Grid points with quarter-integer coordinates hit edges and faces often.
        for (int s = 0; s < 40; ++s) {
            RatVector x(n);
            for (auto& c : x) c = Rational(coord(rng), 4);
            x.canonicalize();
            if (!p.contains(x) || std::binary_search(candidates.begin(), candidates.end(), x)) continue;
            ++checked;
            EXPECT_NEAR(hadwiger_curvature(p, x).value, 0.0, tol) << x;
        }
    }
    EXPECT_GT(checked, 50);
}
