#include "slagtoric/cones.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace slag {

namespace {

RatVec rat_of(const IntVec& v) {
    RatVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
    return out;
}

// Set-of-rays comparison key: the ambient-primitive integer representative.
IntVec ray_key(const RatVec& v) { return primitive_vector(v, /*keep_direction=*/true); }

}  // namespace

Cone make_cone(const LatticeSpec& lattice, std::vector<RatVec> generators) {
    Cone c;
    c.lattice = lattice;
    if (generators.empty()) {
        c.strongly_convex = true;
        return c;
    }
    for (const auto& g : generators)
        if (g.size() != lattice.rank()) throw std::invalid_argument("make_cone: dimension mismatch");

    // V -> H -> V roundtrip canonicalizes to extreme rays + lineality.
    std::vector<RatVec> rows;
    for (const auto& g : generators)
        if (!is_zero(g)) rows.push_back(g);
    if (rows.empty()) return c;
    dd::ConeV dual = dd::extreme_rays(RatMat::from_rows(rows));
    RatMat a(dual.rays.size(), lattice.rank());
    for (size_t i = 0; i < dual.rays.size(); ++i) a.set_row(i, rat_of(dual.rays[i]));
    RatMat e(dual.lineality.size(), lattice.rank());
    for (size_t i = 0; i < dual.lineality.size(); ++i) e.set_row(i, rat_of(dual.lineality[i]));
    dd::ConeV prim = dd::extreme_rays(a, e);

    c.strongly_convex = prim.lineality.empty();
    for (const auto& r : prim.rays) c.generators.push_back(lattice.primitive(rat_of(r)));
    for (const auto& l : prim.lineality) {
        c.generators.push_back(lattice.primitive(rat_of(l)));
        c.generators.push_back(lattice.primitive(vscale(Rat(-1), rat_of(l))));
    }
    std::sort(c.generators.begin(), c.generators.end());
    return c;
}

ConeH facets(const Cone& c) {
    ConeH h;
    if (c.generators.empty()) {
        // Only the origin: cut out by the coordinate equations.
        for (size_t i = 0; i < c.lattice.rank(); ++i) {
            IntVec ei(c.lattice.rank());
            ei[i] = 1;
            h.span_equations.push_back(ei);
        }
        return h;
    }
    dd::ConeV dual = dd::extreme_rays(RatMat::from_rows(c.generators));
    h.facet_normals = dual.rays;
    h.span_equations = dual.lineality;
    return h;
}

bool cone_contains_point(const Cone& c, const RatVec& x) {
    ConeH h = facets(c);
    for (const auto& f : h.facet_normals)
        if (dot(x, f) < 0) return false;
    for (const auto& l : h.span_equations)
        if (dot(x, l) != 0) return false;
    return true;
}

Cone dual_cone(const Cone& c) {
    LatticeSpec m = c.lattice.dual();
    ConeH h = facets(c);
    std::vector<RatVec> gens;
    for (const auto& f : h.facet_normals) gens.push_back(rat_of(f));
    for (const auto& l : h.span_equations) {
        gens.push_back(rat_of(l));
        gens.push_back(vscale(Rat(-1), rat_of(l)));
    }
    return make_cone(m, gens);
}

std::optional<GorensteinData> gorenstein_degree(const Cone& c) {
    const size_t n = c.lattice.rank();
    if (!c.strongly_convex) throw std::invalid_argument("gorenstein_degree: cone not strongly convex");
    if (c.generators.size() < n || rank(RatMat::from_rows(c.generators)) != n)
        throw std::invalid_argument("gorenstein_degree: cone not full-dimensional");

    RatMat a(c.generators.size(), n);
    for (size_t i = 0; i < c.generators.size(); ++i) a.set_row(i, c.generators[i]);
    RatVec ones(c.generators.size(), Rat(1));
    auto m0 = solve(a, ones);
    if (!m0) return std::nullopt;
    if (!c.lattice.dual().contains(*m0)) return std::nullopt;

    GorensteinData g;
    g.m0 = *m0;
    g.cross_section = c.generators;
    g.cone = c;
    return g;
}

std::vector<RatVec> cross_section_lattice_points(const GorensteinData& g) {
    const LatticeSpec& lat = g.cone.lattice;
    const size_t n = lat.rank();
    ConeH h = facets(g.cone);

    // Integer bounding box in N-coordinates.
    std::vector<Int> lo(n), hi(n);
    bool first = true;
    for (const auto& v : g.cross_section) {
        IntVec c = lat.lattice_coords(v);
        for (size_t i = 0; i < n; ++i) {
            if (first || c[i] < lo[i]) lo[i] = c[i];
            if (first || c[i] > hi[i]) hi[i] = c[i];
        }
        first = false;
    }

    std::vector<RatVec> out;
    IntVec cur = lo;
    while (true) {
        RatVec pt = lat.to_ambient(rat_of(cur));
        if (dot(pt, g.m0) == 1) {
            bool inside = true;
            for (const auto& f : h.facet_normals)
                if (dot(pt, f) < 0) {
                    inside = false;
                    break;
                }
            if (inside) out.push_back(pt);
        }
        size_t k = 0;
        while (k < n) {
            if (cur[k] < hi[k]) {
                ++cur[k];
                break;
            }
            cur[k] = lo[k];
            ++k;
        }
        if (k == n) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

Triangulation star_subdivision(const GorensteinData& g, const RatVec& center) {
    const LatticeSpec& lat = g.cone.lattice;
    if (lat.rank() != 3)
        throw std::invalid_argument("star_subdivision: implemented for rank-3 lattices");
    if (!lat.contains(center) || dot(center, g.m0) != 1)
        throw std::invalid_argument("star_subdivision: center must be a lattice point of P");
    ConeH h = facets(g.cone);
    for (const auto& f : h.facet_normals)
        if (dot(center, f) <= 0)
            throw std::invalid_argument("star_subdivision: center not interior to P");

    Triangulation t;
    t.points = g.cross_section;
    t.points.push_back(center);
    const size_t c_idx = t.points.size() - 1;
    // Each facet of the 3-cone carries exactly two cross-section vertices
    // (an edge of the polygon P); cone each edge to the center.
    for (const auto& f : h.facet_normals) {
        std::vector<size_t> on;
        for (size_t i = 0; i < g.cross_section.size(); ++i)
            if (dot(g.cross_section[i], f) == 0) on.push_back(i);
        if (on.size() != 2) throw std::logic_error("star_subdivision: non-edge facet");
        t.simplices.push_back({on[0], on[1], c_idx});
    }
    return t;
}

Cone Fan::cone_at(const std::vector<size_t>& idx) const {
    std::vector<RatVec> gens;
    for (size_t i : idx) gens.push_back(rays.at(i));
    return make_cone(lattice, gens);
}

Cone Fan::support() const { return make_cone(lattice, rays); }

namespace {

// Checks F := C1 ∩ C2 is a common face; returns false with no diagnosis.
bool intersection_is_common_face(const Cone& c1, const Cone& c2) {
    ConeH h1 = facets(c1), h2 = facets(c2);
    std::vector<RatVec> ineq;
    for (const auto& f : h1.facet_normals) ineq.push_back(rat_of(f));
    for (const auto& f : h2.facet_normals) ineq.push_back(rat_of(f));
    std::vector<RatVec> eqs;
    for (const auto& l : h1.span_equations) eqs.push_back(rat_of(l));
    for (const auto& l : h2.span_equations) eqs.push_back(rat_of(l));
    RatMat a = ineq.empty() ? RatMat(0, c1.lattice.rank()) : RatMat::from_rows(ineq);
    RatMat e = eqs.empty() ? RatMat(0, c1.lattice.rank()) : RatMat::from_rows(eqs);
    dd::ConeV inter = dd::extreme_rays(a, e);
    if (!inter.lineality.empty()) return false;  // strongly convex inputs: face must be pointed

    auto is_face_of = [](const std::vector<IntVec>& face_rays, const Cone& c) {
        ConeH h = facets(c);
        // w = sum of facets active on all face rays; the face is then
        // C ∩ {w = 0}, whose rays must be exactly the given ones.
        RatVec w(c.lattice.rank(), Rat(0));
        for (const auto& f : h.facet_normals) {
            bool active = true;
            for (const auto& r : face_rays)
                if (dot(rat_of(r), f) != 0) {
                    active = false;
                    break;
                }
            if (active) w = vadd(w, rat_of(f));
        }
        std::set<IntVec> cut;
        for (const auto& g : c.generators)
            if (dot(g, w) == 0) cut.insert(ray_key(g));
        std::set<IntVec> given;
        for (const auto& r : face_rays) given.insert(primitive_vector(r));
        return cut == given;
    };
    return is_face_of(inter.rays, c1) && is_face_of(inter.rays, c2);
}

void close_under_faces(Fan& fan) {
    std::set<std::vector<size_t>> all;
    all.insert({});
    std::map<IntVec, size_t> ray_index;
    for (size_t i = 0; i < fan.rays.size(); ++i) ray_index[ray_key(fan.rays[i])] = i;

    for (const auto& mc : fan.max_cones) {
        Cone c = fan.cone_at(mc);
        ConeH h = facets(c);
        // Faces are intersections of facet-active generator subsets.
        std::vector<std::set<size_t>> facet_sets;
        for (const auto& f : h.facet_normals) {
            std::set<size_t> on;
            for (size_t i : mc)
                if (dot(fan.rays[i], f) == 0) on.insert(i);
            facet_sets.push_back(on);
        }
        std::set<std::set<size_t>> faces;
        faces.insert(std::set<size_t>(mc.begin(), mc.end()));
        bool grew = true;
        while (grew) {
            grew = false;
            std::set<std::set<size_t>> next = faces;
            for (const auto& face : faces)
                for (const auto& fs : facet_sets) {
                    std::set<size_t> inter;
                    std::set_intersection(face.begin(), face.end(), fs.begin(), fs.end(),
                                          std::inserter(inter, inter.begin()));
                    if (next.insert(inter).second) grew = true;
                }
            faces = next;
        }
        for (const auto& face : faces) all.insert(std::vector<size_t>(face.begin(), face.end()));
    }
    fan.cones.assign(all.begin(), all.end());
}

}  // namespace

Fan make_fan(const LatticeSpec& lattice, std::vector<RatVec> rays,
             std::vector<std::vector<size_t>> max_cones) {
    Fan fan;
    fan.lattice = lattice;
    for (auto& r : rays) {
        if (is_zero(r)) throw std::invalid_argument("make_fan: zero ray");
        fan.rays.push_back(lattice.primitive(r));
    }
    for (auto& mc : max_cones) {
        std::sort(mc.begin(), mc.end());
        for (size_t i : mc)
            if (i >= fan.rays.size()) throw std::invalid_argument("make_fan: ray index out of range");
        fan.max_cones.push_back(mc);
    }
    for (size_t i = 0; i < fan.max_cones.size(); ++i)
        for (size_t j = i + 1; j < fan.max_cones.size(); ++j) {
            Cone ci = fan.cone_at(fan.max_cones[i]);
            Cone cj = fan.cone_at(fan.max_cones[j]);
            if (!intersection_is_common_face(ci, cj))
                throw SlagError(SlagError::Kind::InvalidTriangulation,
                                "fan cones do not intersect in common faces");
        }
    close_under_faces(fan);
    return fan;
}

Fan fan_from_triangulation(const GorensteinData& g, const Triangulation& t) {
    const LatticeSpec& lat = g.cone.lattice;
    const size_t n = lat.rank();
    ConeH h = facets(g.cone);

    for (const auto& p : t.points) {
        if (!lat.contains(p))
            throw SlagError(SlagError::Kind::InvalidTriangulation, "non-lattice vertex");
        if (dot(p, g.m0) != 1)
            throw SlagError(SlagError::Kind::InvalidTriangulation, "vertex not at height one");
        for (const auto& f : h.facet_normals)
            if (dot(p, f) < 0)
                throw SlagError(SlagError::Kind::InvalidTriangulation, "vertex outside the cone");
    }

    Int simplex_vol_sum = 0;
    for (const auto& s : t.simplices) {
        if (s.size() != n)
            throw SlagError(SlagError::Kind::InvalidTriangulation, "simplex of wrong dimension");
        RatMat m(n, n);
        for (size_t j = 0; j < n; ++j) {
            if (s[j] >= t.points.size())
                throw SlagError(SlagError::Kind::InvalidTriangulation, "simplex index out of range");
            m.set_col(j, lat.to_lattice_coords(t.points[s[j]]));
        }
        Rat d = det(m);
        if (d == 0) throw SlagError(SlagError::Kind::InvalidTriangulation, "degenerate simplex");
        simplex_vol_sum += abs(to_int(d));
    }

    if (n == 3) {
        // Exact cover check: lattice volumes of the simplices must add up to
        // the volume of the cross-section polygon (fan-triangulated from a
        // cyclic ordering of its vertices).
        std::vector<IntVec> plane = kernel_basis(RatMat::from_rows({g.m0}));
        RatMat plane_basis = RatMat::from_columns({rat_of(plane[0]), rat_of(plane[1])});
        RatVec centroid(n, Rat(0));
        for (const auto& v : g.cross_section) centroid = vadd(centroid, v);
        centroid = vscale(Rat(1, (long)g.cross_section.size()), centroid);

        std::vector<std::pair<RatVec, size_t>> pts2;  // plane coords, vertex index
        for (size_t i = 0; i < g.cross_section.size(); ++i) {
            auto c = solve(plane_basis, vsub(g.cross_section[i], centroid));
            pts2.push_back({*c, i});
        }
        auto half = [](const RatVec& p) { return (p[1] > 0 || (p[1] == 0 && p[0] > 0)) ? 0 : 1; };
        std::sort(pts2.begin(), pts2.end(), [&](const auto& a, const auto& b) {
            int ha = half(a.first), hb = half(b.first);
            if (ha != hb) return ha < hb;
            Rat cross = a.first[0] * b.first[1] - a.first[1] * b.first[0];
            return cross > 0;
        });
        Int polygon_vol = 0;
        for (size_t i = 1; i + 1 < pts2.size(); ++i) {
            RatMat m(n, n);
            m.set_col(0, lat.to_lattice_coords(g.cross_section[pts2[0].second]));
            m.set_col(1, lat.to_lattice_coords(g.cross_section[pts2[i].second]));
            m.set_col(2, lat.to_lattice_coords(g.cross_section[pts2[i + 1].second]));
            polygon_vol += abs(to_int(det(m)));
        }
        if (simplex_vol_sum != polygon_vol)
            throw SlagError(SlagError::Kind::InvalidTriangulation,
                            simplex_vol_sum > polygon_vol ? "overlapping simplices"
                                                          : "triangulation does not cover P");
    }

    // Rays in point-list order, restricted to points used by some simplex.
    std::vector<bool> used(t.points.size(), false);
    for (const auto& s : t.simplices)
        for (size_t i : s) used[i] = true;
    std::vector<RatVec> rays;
    std::vector<size_t> remap(t.points.size());
    for (size_t i = 0; i < t.points.size(); ++i)
        if (used[i]) {
            remap[i] = rays.size();
            rays.push_back(t.points[i]);
        }
    std::vector<std::vector<size_t>> mcs;
    for (const auto& s : t.simplices) {
        std::vector<size_t> mc;
        for (size_t i : s) mc.push_back(remap[i]);
        mcs.push_back(mc);
    }
    return make_fan(lat, rays, mcs);
}

SmoothnessReport is_smooth(const Fan& f) {
    SmoothnessReport rep;
    for (const auto& mc : f.max_cones) {
        std::vector<RatVec> gens;
        for (size_t i : mc) gens.push_back(f.rays[i]);
        if (gens.size() != f.lattice.rank() ||
            is_lattice_basis(gens, f.lattice) != BasisCheck::Yes) {
            rep.smooth = false;
            rep.offending_cones.push_back(mc);
        }
    }
    return rep;
}

bool crepancy_check(const GorensteinData& g, const Fan& f) {
    for (const auto& r : f.rays)
        if (dot(r, g.m0) != 1) return false;
    return true;
}

}  // namespace slag
