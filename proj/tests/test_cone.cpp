#include "support.hpp"

#include <gtest/gtest.h>

using namespace polycurv;
using namespace polycurv::test;

namespace {

PolyhedralCone cone(std::size_t n, std::vector<RatVector> gens, std::vector<RatVector> lin = {})
{
    return PolyhedralCone::from_generators(n, gens, lin);
}

PolyhedralCone quadrant() { return cone(2, {pt({1, 0}), pt({0, 1})}); }

Polyhedron l_shape() { return Polyhedron::of({box(pt({0, 0}), pt({2, 1})), box(pt({0, 0}), pt({1, 2}))}); }

/// Integer directions in [-r, r]^n, zero excluded.
std::vector<RatVector> grid_directions(std::size_t n, long r)
{
    std::vector<RatVector> out;
    std::vector<long> c(n, -r);
    while (true) {
        RatVector v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = c[i];
        if (!v.is_zero()) out.push_back(v);
        std::size_t i = 0;
        while (i < n && ++c[i] > r) c[i++] = -r;
        if (i == n) break;
    }
    return out;
}

}  // namespace

TEST(TangentConeOfPolytope, Examples)
{
    auto sq = unit_cube(2);
    EXPECT_EQ(tangent_cone_of_polytope(sq, pt({0, 0})), quadrant());
    EXPECT_EQ(tangent_cone_of_polytope(sq, rat({"1/2", "0"})), cone(2, {pt({0, 1})}, {pt({1, 0})}));
    EXPECT_TRUE(tangent_cone_of_polytope(sq, rat({"1/2", "1/2"})).is_full_space());
    try {
        tangent_cone_of_polytope(sq, pt({2, 0}));
        FAIL();
    } catch (const PreconditionError& e) {
        EXPECT_NE(std::string(e.what()).find("point not in polytope"), std::string::npos);
    }
}

TEST(TangentConeOfUnion, Examples)
{
    auto t = tangent_cone(l_shape(), pt({1, 1}));
    ASSERT_EQ(t.pieces.size(), 2u);
    EXPECT_EQ(t.pieces[0], cone(2, {pt({0, -1})}, {pt({1, 0})}));
    EXPECT_EQ(t.pieces[1], cone(2, {pt({-1, 0})}, {pt({0, 1})}));

    EXPECT_TRUE(tangent_cone(l_shape(), pt({5, 5})).empty());
    EXPECT_TRUE(tangent_cone(Polyhedron(2), pt({0, 0})).empty());

    auto corner = tangent_cone(Polyhedron::of({unit_cube(3)}), pt({1, 1, 1}));
    ASSERT_EQ(corner.pieces.size(), 1u);
    EXPECT_EQ(corner.pieces[0], cone(3, {pt({-1, 0, 0}), pt({0, -1, 0}), pt({0, 0, -1})}));
}

TEST(TangentConeOfUnion, MatchesMembershipDefinition)
{
    // v is tangent at x iff x + eps v is in P for small eps; all pieces are
    // conical within distance 1/2 of the probe points.
    auto l = l_shape();
    const Rational eps(1, 100);
    for (const auto& x : {pt({1, 1}), pt({0, 0}), pt({2, 1}), rat({"1", "1/2"}), pt({1, 2}), rat({"1/2", "1/2"})}) {
        auto t = tangent_cone(l, x);
        for (const auto& v : grid_directions(2, 3)) EXPECT_EQ(t.contains(v), l.contains(x + eps * v)) << x << " " << v;
    }
}

TEST(DualCone, Examples)
{
    EXPECT_EQ(quadrant().dual(), cone(2, {pt({-1, 0}), pt({0, -1})}));
    EXPECT_EQ(PolyhedralCone::full_space(3).dual(), PolyhedralCone::origin(3));
    EXPECT_EQ(PolyhedralCone::origin(3).dual(), PolyhedralCone::full_space(3));
}

TEST(LinealitySpace, Examples)
{
    auto half = cone(2, {pt({0, 1})}, {pt({1, 0})});
    ASSERT_EQ(lineality_space(half).size(), 1u);
    EXPECT_EQ(rank({lineality_space(half)[0], pt({1, 0})}), 1u);
    EXPECT_TRUE(lineality_space(quadrant()).empty());
    EXPECT_EQ(lineality_space(PolyhedralCone::full_space(2)).size(), 2u);
}

TEST(ConeFaces, Examples)
{
    auto fs = cone_faces(quadrant());
    ASSERT_EQ(fs.size(), 4u);
    EXPECT_TRUE(fs[0].is_origin());
    EXPECT_EQ(fs[3], quadrant());

    auto plane = cone_faces(PolyhedralCone::full_space(2));
    ASSERT_EQ(plane.size(), 1u);
    EXPECT_TRUE(plane[0].is_full_space());

    auto half = cone(2, {pt({0, 1})}, {pt({1, 0})});
    auto hf = cone_faces(half);
    ASSERT_EQ(hf.size(), 2u);
    EXPECT_EQ(hf[0], cone(2, {}, {pt({1, 0})}));
    EXPECT_EQ(hf[1], half);
}

TEST(IntersectCones, Examples)
{
    auto lower = PolyhedralCone::from_halfspaces(2, {pt({0, 1})});
    EXPECT_EQ(intersect_cones(quadrant(), lower), cone(2, {pt({1, 0})}));

    Rng rng(31);
    for (int i = 0; i < 30; ++i) {
        auto c = random_cone(rng, 3);
        EXPECT_EQ(intersect_cones(c, PolyhedralCone::full_space(3)), c);
        std::vector<RatVector> neg_gens;
        for (const auto& r : c.rays()) neg_gens.push_back(-r);
        auto minus = cone(3, neg_gens, c.lineality());
        EXPECT_EQ(intersect_cones(c, minus), cone(3, {}, c.lineality()));
    }
    EXPECT_THROW(intersect_cones(quadrant(), PolyhedralCone::origin(3)), Error);
}

TEST(GeometricVertex, Examples)
{
    auto sq = Polyhedron::of({unit_cube(2)});
    EXPECT_TRUE(is_geometric_vertex(sq, pt({0, 0})));
    EXPECT_FALSE(is_geometric_vertex(sq, rat({"1/2", "0"})));
    EXPECT_FALSE(is_geometric_vertex(sq, rat({"1/2", "1/2"})));
    EXPECT_FALSE(is_geometric_vertex(sq, pt({3, 0})));
    EXPECT_TRUE(is_geometric_vertex(l_shape(), pt({1, 1})));
    EXPECT_FALSE(is_geometric_vertex(l_shape(), pt({1, 0})));
}

TEST(GeometricVertex, UnionOfParallelLinesWithoutALinePiece)
{
    // Two triangles meeting along the segment from (0,0) to (1,0): at
    // (1/2,0) each piece's tangent cone is pointed, but the union is the
    // upper and lower halfplane, i.e. R^2.
    auto p = Polyhedron::of({hull({pt({0, 0}), pt({1, 0}), pt({0, 1})}), hull({pt({0, 0}), pt({1, 0}), pt({1, -1})})});
    EXPECT_FALSE(is_geometric_vertex(p, rat({"1/2", "0"})));
    EXPECT_TRUE(is_geometric_vertex(p, pt({0, 0})));

    // Square split along its diagonal: the diagonal point is interior.
    auto split = Polyhedron::of({hull({pt({0, 0}), pt({1, 0}), pt({1, 1})}), hull({pt({0, 0}), pt({0, 1}), pt({1, 1})})});
    EXPECT_FALSE(is_geometric_vertex(split, rat({"1/2", "1/2"})));
    auto d = translation_invariance_space(tangent_cone(split, rat({"1/2", "1/2"})));
    EXPECT_EQ(d.size(), 2u);

    auto edge = translation_invariance_space(tangent_cone(l_shape(), pt({1, 0})));
    ASSERT_EQ(edge.size(), 1u);
    EXPECT_EQ(primitive(edge[0]), pt({1, 0}));
}

TEST(ConeProperties, DualIsAnInvolution)
{
    Rng rng(32);
    for (int i = 0; i < 200; ++i) {
        auto c = random_cone(rng, 2 + static_cast<std::size_t>(i % 3));
        EXPECT_EQ(c.dual().dual(), c) << c.str();
        // The dual computed independently from the halfspace description.
        EXPECT_EQ(PolyhedralCone::from_generators(c.ambient_dim(), c.facets(), c.equations()), c.dual());
    }
}

TEST(ConeProperties, SplittingByAHyperplane)
{
    Rng rng(33);
    std::uniform_int_distribution<int> coord(-3, 3);
    for (int i = 0; i < 60; ++i) {
        const std::size_t n = 2 + static_cast<std::size_t>(i % 2);
        auto c = random_cone(rng, n);
        RatVector a(n);
        do {
            for (auto& x : a) x = coord(rng);
        } while (a.is_zero());
        auto c1 = intersect_cones(c, PolyhedralCone::from_halfspaces(n, {a}));
        auto c2 = intersect_cones(c, PolyhedralCone::from_halfspaces(n, {-a}));
        auto d12 = intersect_cones(c1, c2).dual();
        for (const auto& y : grid_directions(n, 2))
            EXPECT_EQ(d12.contains(y), c1.dual().contains(y) || c2.dual().contains(y)) << c.str() << " " << y;
        EXPECT_EQ(intersect_cones(c1.dual(), c2.dual()), c.dual());
    }
}

TEST(ConeProperties, LowerDimensionalConesHaveDualsWithLines)
{
    Rng rng(34);
    for (int i = 0; i < 200; ++i) {
        auto c = random_cone(rng, 2 + static_cast<std::size_t>(i % 3));
        // dim C + dim lineality(C°) = n
        EXPECT_EQ(c.dim() + c.dual().lineality().size(), c.ambient_dim()) << c.str();
        if (c.dim() < c.ambient_dim()) {
            EXPECT_FALSE(c.dual().lineality().empty());
        }
    }
}

TEST(ConeProperties, TangentConeIgnoresPiecesAwayFromThePoint)
{
    Rng rng(35);
    for (int i = 0; i < 40; ++i) {
        const std::size_t n = 2 + static_cast<std::size_t>(i % 2);
        auto boxes = random_boxes(rng, n);
        auto p = Polyhedron(n, boxes);
        const auto x = boxes.front().vertices()[static_cast<std::size_t>(i) % boxes.front().vertices().size()];
        RatVector far(n);
        for (auto& c : far) c = 100;
        auto q = p.with_piece(box(far, far + far));
        auto a = tangent_cone(p, x), b = tangent_cone(q, x);
        EXPECT_EQ(a.pieces, b.pieces);
    }
}
