#include <doctest.h>

#include <algorithm>
#include <set>

#include "slagtoric/moment.hpp"

using namespace slag;

namespace {

LatticeSpec third_lattice() {
    return LatticeSpec(RatMat{{Rat(1), Rat(0), Rat(1, 3)},
                              {Rat(0), Rat(1), Rat(1, 3)},
                              {Rat(0), Rat(0), Rat(1, 3)}});
}

std::vector<RatVec> rvecs(std::initializer_list<std::initializer_list<long>> vs) {
    std::vector<RatVec> out;
    for (auto& v : vs) {
        RatVec r;
        for (long x : v) r.push_back(Rat(x));
        out.push_back(r);
    }
    return out;
}

struct Setup {
    GorensteinData g;
    Fan fan;
    RayMap rm;
};

Setup example23() {
    auto cone = make_cone(third_lattice(), rvecs({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    auto g = gorenstein_degree(cone);
    auto t = star_subdivision(*g, {Rat(1, 3), Rat(1, 3), Rat(1, 3)});
    Fan fan = fan_from_triangulation(*g, t);
    RayMap rm = build_ray_map(fan);
    return {*g, fan, rm};
}

Setup delpezzo6() {
    auto cone = make_cone(LatticeSpec::standard(3),
                          rvecs({{0, 0, 1}, {1, 0, 1}, {2, 1, 1}, {2, 2, 1}, {1, 2, 1}, {0, 1, 1}}));
    auto g = gorenstein_degree(cone);
    auto t = star_subdivision(*g, {Rat(1), Rat(1), Rat(1)});
    Fan fan = fan_from_triangulation(*g, t);
    RayMap rm = build_ray_map(fan);
    return {*g, fan, rm};
}

}  // namespace

TEST_CASE("ray map of Example 2.3") {
    auto ex = example23();
    REQUIRE(ex.fan.rays.size() == 4);
    // column order follows the triangulation points: the lex-sorted
    // cross-section vertices e3, e2, e1, then the centre
    RatMat expected{{Rat(0), Rat(0), Rat(1), Rat(1, 3)},
                    {Rat(0), Rat(1), Rat(0), Rat(1, 3)},
                    {Rat(1), Rat(0), Rat(0), Rat(1, 3)}};
    CHECK(ex.rm.pi == expected);
    REQUIRE(ex.rm.kernel.size() == 1);
    CHECK(ex.rm.kernel[0] == IntVec{1, 1, 1, -3});
}

TEST_CASE("ray map of a unimodular simplex cone is square with no kernel") {
    auto z3 = LatticeSpec::standard(3);
    auto g = gorenstein_degree(make_cone(z3, rvecs({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})));
    Triangulation t;
    t.points = g->cross_section;
    t.simplices = {{0, 1, 2}};
    Fan fan = fan_from_triangulation(*g, t);
    RayMap rm = build_ray_map(fan);
    CHECK(rm.pi.rows() == 3);
    CHECK(rm.pi.cols() == 3);
    CHECK(rm.kernel.empty());
}

TEST_CASE("ray map of the del Pezzo 6 star subdivision") {
    auto dp = delpezzo6();
    CHECK(dp.rm.pi.rows() == 3);
    CHECK(dp.rm.pi.cols() == 7);
    CHECK(dp.rm.kernel.size() == 4);
    for (const auto& k : dp.rm.kernel)
        for (size_t r = 0; r < 3; ++r) CHECK(dot(dp.rm.pi.row(r), k) == 0);
}

TEST_CASE("ray map rejects non-surjective fans") {
    auto z2 = LatticeSpec::standard(2);
    Fan fan = make_fan(z2, rvecs({{2, 1}, {0, 1}}), {{0, 1}});
    CHECK_THROWS_AS(build_ray_map(fan), SlagError);
}

TEST_CASE("ampleness of Example 2.3 classes") {
    auto ex = example23();
    DivisorClass pos{RatVec{Rat(3)}, std::nullopt};
    auto amp = ampleness(ex.fan, ex.rm, pos);
    CHECK(amp.ample);
    // the solved lift is supported on the centre ray with offset -a/3
    CHECK(amp.lift == RatVec{Rat(0), Rat(0), Rat(0), Rat(-1)});

    DivisorClass zero{RatVec{Rat(0)}, std::nullopt};
    CHECK_FALSE(ampleness(ex.fan, ex.rm, zero).ample);

    DivisorClass neg{RatVec{Rat(-2)}, std::nullopt};
    CHECK_FALSE(ampleness(ex.fan, ex.rm, neg).ample);
}

TEST_CASE("Example 2.3 moment polytope reproduces the paper's coordinates") {
    auto ex = example23();
    DivisorClass d{RatVec{Rat(3)}, std::nullopt};
    auto p = moment_polytope(ex.fan, ex.rm, d);

    // H-representation {r_i >= 0, r1+r2+r3 >= 3} (the last row scaled by 1/3)
    CHECK(p.h_offsets == RatVec{Rat(0), Rat(0), Rat(0), Rat(-1)});

    std::set<RatVec> verts(p.vertices.begin(), p.vertices.end());
    CHECK(verts == std::set<RatVec>{{Rat(3), Rat(0), Rat(0)},
                                    {Rat(0), Rat(3), Rat(0)},
                                    {Rat(0), Rat(0), Rat(3)}});
    std::set<IntVec> rays(p.recession_rays.begin(), p.recession_rays.end());
    CHECK(rays == std::set<IntVec>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});

    size_t bounded = 0, unbounded = 0;
    for (const auto& e : one_skeleton(p)) (e.bounded ? bounded : unbounded)++;
    CHECK(bounded == 3);
    CHECK(unbounded == 3);
    for (const auto& e : p.edges) CHECK(e.active_facets.size() == 2);
}

TEST_CASE("simplex cone: P = dual cone with a single vertex") {
    auto z3 = LatticeSpec::standard(3);
    auto g = gorenstein_degree(make_cone(z3, rvecs({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})));
    Triangulation t;
    t.points = g->cross_section;
    t.simplices = {{0, 1, 2}};
    Fan fan = fan_from_triangulation(*g, t);
    RayMap rm = build_ray_map(fan);
    DivisorClass d{RatVec{}, std::nullopt};
    auto p = moment_polytope(fan, rm, d);
    CHECK(p.vertices == std::vector<RatVec>{RatVec{Rat(0), Rat(0), Rat(0)}});
    CHECK(p.recession_rays.size() == 3);
    CHECK(one_skeleton(p).size() == 3);
}

TEST_CASE("quadrant: two rays from one vertex") {
    auto z2 = LatticeSpec::standard(2);
    Fan fan = make_fan(z2, rvecs({{1, 0}, {0, 1}}), {{0, 1}});
    RayMap rm = build_ray_map(fan);
    auto p = moment_polytope(fan, rm, DivisorClass{RatVec{}, std::nullopt});
    CHECK(p.vertices.size() == 1);
    CHECK(p.recession_rays.size() == 2);
    CHECK(one_skeleton(p).size() == 2);
}

TEST_CASE("vertex count equals the number of maximal cones") {
    auto ex = example23();
    auto p = moment_polytope(ex.fan, ex.rm, DivisorClass{RatVec{Rat(5)}, std::nullopt});
    CHECK(p.vertices.size() == ex.fan.max_cones.size());

    auto dp = delpezzo6();
    RatVec lift(7, Rat(0));
    lift[6] = Rat(-3);  // centre ray
    auto amp = ampleness(dp.fan, dp.rm, DivisorClass{std::nullopt, lift});
    REQUIRE(amp.ample);
    auto pd = moment_polytope(dp.fan, dp.rm, DivisorClass{std::nullopt, lift});
    CHECK(pd.vertices.size() == 6);
    size_t bounded = 0, unbounded = 0;
    for (const auto& e : pd.edges) (e.bounded ? bounded : unbounded)++;
    CHECK(bounded == 6);
    CHECK(unbounded == 6);
}

TEST_CASE("recession cone equals the dual cone of the support") {
    auto ex = example23();
    auto p = moment_polytope(ex.fan, ex.rm, DivisorClass{RatVec{Rat(3)}, std::nullopt});
    Cone dual = dual_cone(ex.fan.support());
    std::set<IntVec> rec;
    for (const auto& r : p.recession_rays) rec.insert(primitive_vector(r));
    std::set<IntVec> dual_rays;
    for (const auto& g : dual.generators) dual_rays.insert(primitive_vector(g));
    CHECK(rec == dual_rays);
}

TEST_CASE("edge directions at each vertex are the dual basis and sum to m0") {
    for (bool use_dp : {false, true}) {
        Setup s = use_dp ? delpezzo6() : example23();
        DivisorClass d;
        if (use_dp) {
            RatVec lift(7, Rat(0));
            lift[6] = Rat(-2);
            d = DivisorClass{std::nullopt, lift};
        } else {
            d = DivisorClass{RatVec{Rat(3)}, std::nullopt};
        }
        auto p = moment_polytope(s.fan, s.rm, d);
        LatticeSpec m = s.fan.lattice.dual();

        for (size_t v = 0; v < p.vertices.size(); ++v) {
            const auto& act = p.vertex_active[v];
            REQUIRE(act.size() == 3);
            RatMat gens(3, 3);
            for (size_t k = 0; k < 3; ++k) gens.set_col(k, s.fan.rays[act[k]]);
            auto inv = inverse(gens);
            REQUIRE(inv.has_value());
            std::set<RatVec> dual_basis;  // rows of gens^{-1} pair to delta_ij
            for (size_t k = 0; k < 3; ++k) dual_basis.insert(inv->row(k));

            std::set<RatVec> edge_dirs;
            RatVec sum(3, Rat(0));
            for (const auto& e : p.edges) {
                RatVec dir;
                if (e.bounded) {
                    if (e.a == v)
                        dir = vsub(p.vertices[e.b], p.vertices[e.a]);
                    else if (e.b == v)
                        dir = vsub(p.vertices[e.a], p.vertices[e.b]);
                    else
                        continue;
                } else {
                    if (e.a != v) continue;
                    dir.assign(3, Rat(0));
                    for (size_t i = 0; i < 3; ++i) dir[i] = Rat(p.recession_rays[e.b][i]);
                }
                RatVec prim = m.primitive(dir);  // primitive in the dual lattice M
                edge_dirs.insert(prim);
                sum = vadd(sum, prim);
            }
            CHECK(edge_dirs == dual_basis);
            CHECK(sum == s.g.m0);
        }
    }
}
