#include <doctest.h>

#include <set>

#include "slagtoric/minkowski.hpp"

using namespace slag;

namespace {

using Pt = std::array<Int, 2>;

LatticePolygon hexagon() {
    return make_polygon({{Int(0), Int(0)},
                         {Int(1), Int(0)},
                         {Int(2), Int(1)},
                         {Int(2), Int(2)},
                         {Int(1), Int(2)},
                         {Int(0), Int(1)}});
}

LatticePolygon unit_square() {
    return make_polygon({{Int(0), Int(0)}, {Int(1), Int(0)}, {Int(1), Int(1)}, {Int(0), Int(1)}});
}

LatticePolygon unimodular_triangle() {
    return make_polygon({{Int(0), Int(0)}, {Int(1), Int(0)}, {Int(0), Int(1)}});
}

std::multiset<std::pair<std::array<long, 2>, long>> edge_summary(const LatticePolygon& p) {
    std::multiset<std::pair<std::array<long, 2>, long>> s;
    for (const auto& e : edge_vector_multiset(p))
        s.insert({{e.dir[0].get_si(), e.dir[1].get_si()}, e.multiplicity.get_si()});
    return s;
}

// Support-function check: sum of summands equals P up to translation.
bool recomposes(const LatticePolygon& p, const MinkowskiDecomposition& d) {
    auto support = [](const LatticePolygon& poly, const Pt& u) {
        Int best = poly.vertices[0][0] * u[0] + poly.vertices[0][1] * u[1];
        for (const auto& v : poly.vertices) {
            Int cand = v[0] * u[0] + v[1] * u[1];
            if (cand > best) best = cand;
        }
        return best;
    };
    // probe all edge normals of P plus a few extra directions
    std::vector<Pt> dirs;
    for (const auto& e : edge_vector_multiset(p)) dirs.push_back({-e.dir[1], e.dir[0]});
    dirs.push_back({Int(1), Int(0)});
    dirs.push_back({Int(0), Int(1)});
    dirs.push_back({Int(-1), Int(0)});
    dirs.push_back({Int(0), Int(-1)});
    dirs.push_back({Int(1), Int(1)});
    dirs.push_back({Int(-1), Int(-1)});
    // h_P(u) - sum h_Rk(u) must be linear: <u, c> for a fixed c; since both
    // sides are translated to lex-min at the origin, c = 0 here.
    for (const auto& u : dirs) {
        Int total = 0;
        for (const auto& s : d.summands) total += support(s, u);
        LatticePolygon pn = p;
        // translate p to lex-min at origin for comparability
        Pt mn = *std::min_element(pn.vertices.begin(), pn.vertices.end());
        for (auto& v : pn.vertices) v = {v[0] - mn[0], v[1] - mn[1]};
        if (support(pn, u) != total) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("make_polygon canonicalizes order and drops interior points") {
    auto p = make_polygon({{Int(2), Int(2)},
                           {Int(0), Int(0)},
                           {Int(2), Int(0)},
                           {Int(1), Int(1)},  // interior
                           {Int(0), Int(2)}});
    CHECK(p.vertices.size() == 4);
    CHECK(p.vertices[0] == Pt{Int(0), Int(0)});
    // counterclockwise
    CHECK(p.vertices[1] == Pt{Int(2), Int(0)});
}

TEST_CASE("edge vectors of the hexagon") {
    auto s = edge_summary(hexagon());
    std::multiset<std::pair<std::array<long, 2>, long>> want{
        {{1, 0}, 1}, {{1, 1}, 1}, {{0, 1}, 1}, {{-1, 0}, 1}, {{-1, -1}, 1}, {{0, -1}, 1}};
    CHECK(s == want);
    // counterclockwise edge vectors sum to zero
    Int sx = 0, sy = 0;
    for (const auto& e : edge_vector_multiset(hexagon())) {
        sx += e.dir[0] * e.multiplicity;
        sy += e.dir[1] * e.multiplicity;
    }
    CHECK(sx == 0);
    CHECK(sy == 0);
}

TEST_CASE("edge vectors of the unit square and a long segment") {
    auto sq = edge_summary(unit_square());
    std::multiset<std::pair<std::array<long, 2>, long>> want{
        {{1, 0}, 1}, {{0, 1}, 1}, {{-1, 0}, 1}, {{0, -1}, 1}};
    CHECK(sq == want);

    auto seg = make_polygon({{Int(0), Int(0)}, {Int(2), Int(0)}});
    auto es = edge_summary(seg);
    std::multiset<std::pair<std::array<long, 2>, long>> want_seg{{{1, 0}, 2}, {{-1, 0}, 2}};
    CHECK(es == want_seg);
}

TEST_CASE("hexagon has exactly two maximal decompositions") {
    auto p = hexagon();
    auto maximal = minkowski_decompositions(p, /*maximal_only=*/true);
    REQUIRE(maximal.size() == 2);
    for (const auto& d : maximal) CHECK(recomposes(p, d));

    // one decomposition into two triangles, one into three segments
    std::set<size_t> sizes;
    for (const auto& d : maximal) sizes.insert(d.summands.size());
    CHECK(sizes == std::set<size_t>{2, 3});

    for (const auto& d : maximal) {
        if (d.summands.size() == 2) {
            std::set<std::vector<Pt>> got{d.summands[0].vertices, d.summands[1].vertices};
            std::vector<Pt> t1{{Int(0), Int(0)}, {Int(1), Int(0)}, {Int(1), Int(1)}};
            std::vector<Pt> t2{{Int(0), Int(0)}, {Int(1), Int(1)}, {Int(0), Int(1)}};
            CHECK(got == std::set<std::vector<Pt>>{t1, t2});
        } else {
            for (const auto& s : d.summands) CHECK(s.is_segment());
            std::set<std::vector<Pt>> got;
            for (const auto& s : d.summands) got.insert(s.vertices);
            std::vector<Pt> s1{{Int(0), Int(0)}, {Int(1), Int(0)}};
            std::vector<Pt> s2{{Int(0), Int(0)}, {Int(0), Int(1)}};
            std::vector<Pt> s3{{Int(0), Int(0)}, {Int(1), Int(1)}};
            CHECK(got == std::set<std::vector<Pt>>{s1, s2, s3});
        }
    }
}

TEST_CASE("unit square: one maximal decomposition into two segments") {
    auto maximal = minkowski_decompositions(unit_square(), true);
    REQUIRE(maximal.size() == 1);
    CHECK(maximal[0].summands.size() == 2);
    for (const auto& s : maximal[0].summands) CHECK(s.is_segment());
    CHECK(recomposes(unit_square(), maximal[0]));
}

TEST_CASE("unimodular triangle is rigid") {
    CHECK(minkowski_decompositions(unimodular_triangle(), true).empty());
    // the full list still contains the trivial decomposition
    auto all = minkowski_decompositions(unimodular_triangle(), false);
    REQUIRE(all.size() == 1);
    CHECK(all[0].summands.size() == 1);
}

TEST_CASE("decomposition search is order-independent (canonical dedup)") {
    // same hexagon entered with a rotated/shuffled vertex list
    auto p2 = make_polygon({{Int(2), Int(2)},
                            {Int(0), Int(1)},
                            {Int(1), Int(2)},
                            {Int(0), Int(0)},
                            {Int(2), Int(1)},
                            {Int(1), Int(0)}});
    auto m1 = minkowski_decompositions(hexagon(), true);
    auto m2 = minkowski_decompositions(p2, true);
    REQUIRE(m1.size() == m2.size());
    for (size_t i = 0; i < m1.size(); ++i) {
        std::set<std::vector<Pt>> a, b;
        for (const auto& s : m1[i].summands) a.insert(s.vertices);
        for (const auto& s : m2[i].summands) b.insert(s.vertices);
        CHECK(a == b);
    }
}

TEST_CASE("search budget is enforced") {
    // a segment of lattice length 7 expands to 14 items
    auto long_seg = make_polygon({{Int(0), Int(0)}, {Int(7), Int(0)}});
    CHECK_THROWS_AS(minkowski_decompositions(long_seg, false), SlagError);
}

TEST_CASE("altmann cone of the square's segment decomposition") {
    auto p = unit_square();
    auto maximal = minkowski_decompositions(p, true);
    REQUIRE(maximal.size() == 1);
    auto a = altmann_cone(p, maximal[0]);
    CHECK(a.num_summands == 2);
    CHECK(a.n_prime.rank() == 4);
    // generators (0,0;1,0),(1,0;1,0),(0,0;0,1),(0,1;0,1) up to ordering
    std::set<RatVec> gens(a.sigma_tilde.generators.begin(), a.sigma_tilde.generators.end());
    std::set<RatVec> want{{Rat(0), Rat(0), Rat(1), Rat(0)},
                          {Rat(1), Rat(0), Rat(1), Rat(0)},
                          {Rat(0), Rat(0), Rat(0), Rat(1)},
                          {Rat(0), Rat(1), Rat(0), Rat(1)}};
    CHECK(gens == want);
    for (const auto& g : a.sigma_tilde.generators) CHECK(dot(g, a.m0_prime) == 1);
    CHECK(verify_embedding(a));
}

TEST_CASE("altmann cones of both hexagon decompositions embed correctly") {
    auto p = hexagon();
    for (const auto& d : minkowski_decompositions(p, true)) {
        auto a = altmann_cone(p, d);
        CHECK(a.sigma_tilde.generators.size() == (d.summands.size() == 2 ? 6 : 6));
        for (const auto& g : a.sigma_tilde.generators) CHECK(dot(g, a.m0_prime) == 1);
        CHECK(verify_embedding(a));
    }
}

TEST_CASE("trivial decomposition gives sigma itself") {
    auto p = unimodular_triangle();
    auto all = minkowski_decompositions(p, false);
    auto a = altmann_cone(p, all[0]);
    CHECK(a.num_summands == 1);
    CHECK(a.n_prime.rank() == 3);
    CHECK(a.sigma_tilde.generators.size() == 3);
    CHECK(verify_embedding(a));
}

TEST_CASE("corrupted embedding is rejected") {
    auto p = unit_square();
    auto a = altmann_cone(p, minkowski_decompositions(p, true)[0]);
    REQUIRE(verify_embedding(a));
    // swap e0 and e1 in the n0 column only
    a.embedding(2, 2) = 0;
    a.embedding(3, 2) = 2;
    CHECK_FALSE(verify_embedding(a));
}

TEST_CASE("smoothing discriminant of the hexagon decompositions") {
    auto p = hexagon();
    auto maximal = minkowski_decompositions(p, true);
    REQUIRE(maximal.size() == 2);

    for (const auto& d : maximal) {
        std::vector<GaussRat> x;
        for (size_t k = 0; k < d.summands.size(); ++k)
            x.push_back({Rat(0), Rat((long)k)});  // distinct imaginary parts
        auto sm = smoothing_discriminant(d, x, 3);
        CHECK(sm.generic);
        std::set<Rat> planes(sm.plane_values.begin(), sm.plane_values.end());
        if (d.summands.size() == 3) {
            // three segments: 3 components in 3 distinct planes
            CHECK(sm.components.size() == 3);
            CHECK(planes.size() == 3);
        } else {
            // two triangles: 6 components in 2 planes
            CHECK(sm.components.size() == 6);
            CHECK(planes.size() == 2);
        }
        // direction annihilates the edge vector
        for (const auto& c : sm.components) {
            Int dx = c.edge[1][0] - c.edge[0][0];
            Int dy = c.edge[1][1] - c.edge[0][1];
            CHECK(c.direction[0] * dx + c.direction[1] * dy == 0);
        }
    }
}

TEST_CASE("square smoothing: two components in two planes") {
    auto p = unit_square();
    auto d = minkowski_decompositions(p, true)[0];
    std::vector<GaussRat> x{{Rat(0), Rat(0)}, {Rat(0), Rat(1)}};
    auto sm = smoothing_discriminant(d, x, 3);
    CHECK(sm.components.size() == 2);
    CHECK(sm.generic);
    CHECK(sm.plane_values[0] != sm.plane_values[1]);

    // n = 3: plane value is Im(i^4 (x0 - xk)) = Im(x0 - xk)
    CHECK(sm.plane_values[0] == 0);
    CHECK(sm.plane_values[1] == -1);

    // non-generic when parameters coincide
    std::vector<GaussRat> same{{Rat(0), Rat(0)}, {Rat(0), Rat(0)}};
    CHECK_FALSE(smoothing_discriminant(d, same, 3).generic);
}

TEST_CASE("plane values collapse as x -> 0") {
    auto p = unit_square();
    auto d = minkowski_decompositions(p, true)[0];
    std::vector<GaussRat> x{{Rat(0), Rat(0)}, {Rat(1, 2), Rat(3)}};
    auto rep = extremal_transition_report(d, x, 3, nullptr);
    CHECK(rep.num_summands == 2);
    CHECK(rep.at_x.components.size() == 2);
    CHECK(rep.planes_collapse_at_zero);
    std::set<Rat> zero_planes(rep.at_zero.plane_values.begin(), rep.at_zero.plane_values.end());
    CHECK(zero_planes == std::set<Rat>{Rat(0)});
}

TEST_CASE("trivial decomposition reports an empty smoothing side") {
    auto p = unimodular_triangle();
    auto d = minkowski_decompositions(p, false)[0];
    std::vector<GaussRat> x{{Rat(0), Rat(0)}};
    auto rep = extremal_transition_report(d, x, 3, nullptr);
    CHECK(rep.at_x.components.empty());
    CHECK(rep.at_zero.components.empty());
}
