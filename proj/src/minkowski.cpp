#include "slagtoric/minkowski.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace slag {

namespace {

using Pt = std::array<Int, 2>;

Int cross(const Pt& o, const Pt& a, const Pt& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Andrew monotone chain, strict turns (collinear points dropped).
std::vector<Pt> convex_hull(std::vector<Pt> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    std::vector<Pt> hull(2 * pts.size());
    size_t k = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    size_t lower = k + 1;
    for (size_t i = pts.size() - 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);  // counterclockwise
    if (hull.size() == 2 && hull[0] == hull[1]) hull.pop_back();
    return hull;
}

Pt primitive2(const Pt& v) {
    IntVec p = primitive_vector(IntVec{v[0], v[1]});
    return {p[0], p[1]};
}

// Counterclockwise angular order, starting at direction (1,0).
bool angle_less(const Pt& a, const Pt& b) {
    auto half = [](const Pt& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; };
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    Int cr = a[0] * b[1] - a[1] * b[0];
    if (cr != 0) return cr > 0;
    return a < b;
}

LatticePolygon translate_to_origin(LatticePolygon p) {
    Pt lexmin = *std::min_element(p.vertices.begin(), p.vertices.end());
    for (auto& v : p.vertices) {
        v[0] -= lexmin[0];
        v[1] -= lexmin[1];
    }
    auto it = std::min_element(p.vertices.begin(), p.vertices.end());
    std::rotate(p.vertices.begin(), it, p.vertices.end());
    return p;
}

}  // namespace

LatticePolygon make_polygon(std::vector<Pt> points) {
    if (points.size() < 2) throw std::invalid_argument("make_polygon: need at least 2 points");
    std::vector<Pt> hull = convex_hull(points);
    if (hull.size() < 2) throw std::invalid_argument("make_polygon: degenerate point set");
    LatticePolygon p;
    p.vertices = hull;
    auto it = std::min_element(p.vertices.begin(), p.vertices.end());
    std::rotate(p.vertices.begin(), it, p.vertices.end());
    return p;
}

std::vector<EdgeVector> edge_vector_multiset(const LatticePolygon& p) {
    std::vector<EdgeVector> out;
    const auto& v = p.vertices;
    const size_t k = v.size();
    if (k == 2) {
        Pt d{v[1][0] - v[0][0], v[1][1] - v[0][1]};
        Int len = gcd_of(IntVec{d[0], d[1]});
        out.push_back({primitive2(d), len});
        out.push_back({primitive2({-d[0], -d[1]}), len});
        return out;
    }
    for (size_t i = 0; i < k; ++i) {
        const Pt& a = v[i];
        const Pt& b = v[(i + 1) % k];
        Pt d{b[0] - a[0], b[1] - a[1]};
        Int len = gcd_of(IntVec{d[0], d[1]});
        out.push_back({primitive2(d), len});
    }
    return out;
}

namespace {

std::vector<Pt> expand_items(const LatticePolygon& p) {
    std::vector<Pt> items;
    for (const auto& e : edge_vector_multiset(p))
        for (Int c = 0; c < e.multiplicity; ++c) items.push_back(e.dir);
    std::sort(items.begin(), items.end());
    return items;
}

LatticePolygon polygon_from_items(std::vector<Pt> items) {
    std::sort(items.begin(), items.end(), angle_less);
    std::vector<Pt> pts{{Int(0), Int(0)}};
    Pt cur{Int(0), Int(0)};
    for (const auto& d : items) {
        cur = {cur[0] + d[0], cur[1] + d[1]};
        pts.push_back(cur);
    }
    return translate_to_origin(make_polygon(pts));
}

bool has_proper_zero_sum_subset(const std::vector<Pt>& items) {
    const size_t m = items.size();
    if (m < 2) return false;
    for (size_t mask = 1; mask + 1 < (size_t{1} << m); ++mask) {
        Int sx = 0, sy = 0;
        for (size_t i = 0; i < m; ++i)
            if (mask & (size_t{1} << i)) {
                sx += items[i][0];
                sy += items[i][1];
            }
        if (sx == 0 && sy == 0) return true;
    }
    return false;
}

using CanonicalForm = std::vector<std::vector<Pt>>;  // sorted summand vertex lists

CanonicalForm canonical_form(const MinkowskiDecomposition& d) {
    CanonicalForm cf;
    for (const auto& s : d.summands) cf.push_back(s.vertices);
    std::sort(cf.begin(), cf.end());
    return cf;
}

}  // namespace

std::vector<MinkowskiDecomposition> minkowski_decompositions(const LatticePolygon& p,
                                                             bool maximal_only) {
    std::vector<Pt> items = expand_items(p);
    if (items.size() > 12)
        throw SlagError(SlagError::Kind::TooLarge,
                        "edge multiset larger than the partition search budget");

    std::set<CanonicalForm> seen;
    std::vector<MinkowskiDecomposition> out;
    std::vector<int> group(items.size(), -1);

    std::function<void(size_t, int)> rec = [&](size_t i, int num_groups) {
        if (i == items.size()) {
            std::vector<std::vector<Pt>> groups(num_groups);
            for (size_t k = 0; k < items.size(); ++k) groups[group[k]].push_back(items[k]);
            for (const auto& g : groups) {
                Int sx = 0, sy = 0;
                for (const auto& d : g) {
                    sx += d[0];
                    sy += d[1];
                }
                if (sx != 0 || sy != 0) return;
            }
            MinkowskiDecomposition dec;
            for (auto& g : groups) dec.summands.push_back(polygon_from_items(g));
            auto cf = canonical_form(dec);
            if (seen.insert(cf).second) out.push_back(dec);
            return;
        }
        // identical items only go into groups with index >= that of the
        // previous copy, which prunes symmetric assignments
        int start = 0;
        if (i > 0 && items[i] == items[i - 1]) start = group[i - 1];
        for (int g = start; g <= num_groups && g < (int)items.size(); ++g) {
            group[i] = g;
            rec(i + 1, std::max(num_groups, g + 1));
        }
        group[i] = -1;
    };
    rec(0, 0);

    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.summands.size() != b.summands.size()) return a.summands.size() < b.summands.size();
        return canonical_form(a) < canonical_form(b);
    });

    if (!maximal_only) return out;

    std::vector<MinkowskiDecomposition> maximal;
    for (const auto& d : out) {
        if (d.summands.size() < 2) continue;  // trivial
        bool all_indecomposable = true;
        for (const auto& s : d.summands)
            if (has_proper_zero_sum_subset(expand_items(s))) {
                all_indecomposable = false;
                break;
            }
        if (all_indecomposable) maximal.push_back(d);
    }
    return maximal;
}

AltmannCone altmann_cone(const LatticePolygon& p, const MinkowskiDecomposition& d) {
    if (d.summands.empty()) throw std::invalid_argument("altmann_cone: empty decomposition");
    {
        std::vector<Pt> want = expand_items(p);
        std::vector<Pt> have;
        for (const auto& s : d.summands)
            for (const auto& it : expand_items(s)) have.push_back(it);
        std::sort(have.begin(), have.end());
        if (want != have)
            throw std::invalid_argument("altmann_cone: decomposition does not match the polygon");
    }

    AltmannCone a;
    const size_t p1 = d.summands.size();
    a.num_summands = p1;
    const size_t dim = 2 + p1;
    a.n_prime = LatticeSpec::standard(dim);

    std::vector<RatVec> gens;
    for (size_t k = 0; k < p1; ++k)
        for (const auto& v : d.summands[k].vertices) {
            RatVec g(dim, Rat(0));
            g[0] = Rat(v[0]);
            g[1] = Rat(v[1]);
            g[2 + k] = 1;
            gens.push_back(g);
        }
    a.sigma_tilde = make_cone(a.n_prime, gens);

    a.m0_prime.assign(dim, Rat(1));
    a.m0_prime[0] = a.m0_prime[1] = 0;
    for (const auto& g : a.sigma_tilde.generators)
        if (dot(g, a.m0_prime) != 1)
            throw std::logic_error("altmann_cone: sigma_tilde is not Gorenstein of degree m0'");

    a.embedding = IntMat(dim, 3);
    a.embedding(0, 0) = 1;
    a.embedding(1, 1) = 1;
    for (size_t k = 0; k < p1; ++k) a.embedding(2 + k, 2) = 1;
    return a;
}

bool verify_embedding(const AltmannCone& a) {
    const size_t dim = 2 + a.num_summands;

    // Recompose P from the generators at each height e_k.
    std::vector<Pt> items;
    for (size_t k = 0; k < a.num_summands; ++k) {
        std::vector<Pt> verts;
        for (const auto& g : a.sigma_tilde.generators)
            if (g[2 + k] == 1) verts.push_back({to_int(g[0]), to_int(g[1])});
        if (verts.empty()) return false;
        if (verts.size() == 1) continue;  // point summand contributes no edges
        LatticePolygon s = make_polygon(verts);
        for (const auto& e : expand_items(s)) items.push_back(e);
    }
    if (items.empty()) return false;
    LatticePolygon p = polygon_from_items(items);

    ConeH h = facets(a.sigma_tilde);
    RatMat emb = to_rat(a.embedding);

    // (1) every ray of sigma maps into sigma_tilde
    for (const auto& v : p.vertices) {
        RatVec n{Rat(v[0]), Rat(v[1]), Rat(1)};
        RatVec image = emb * n;
        for (const auto& f : h.facet_normals)
            if (dot(image, f) < 0) return false;
        for (const auto& l : h.span_equations)
            if (dot(image, l) != 0) return false;
    }

    // (2) sigma_tilde ∩ image(N_R) = image(sigma): cut with the equations
    // defining the image subspace (kernel of pairing with emb columns) and
    // compare extreme rays.
    RatMat emb_t = emb.transpose();
    auto normal_basis = kernel_basis(emb_t);  // w with w ⟂ every column of emb
    RatMat ineq(h.facet_normals.size(), dim);
    for (size_t i = 0; i < h.facet_normals.size(); ++i)
        for (size_t j = 0; j < dim; ++j) ineq(i, j) = Rat(h.facet_normals[i][j]);
    RatMat eqs(normal_basis.size() + h.span_equations.size(), dim);
    size_t row = 0;
    for (const auto& w : normal_basis) {
        for (size_t j = 0; j < dim; ++j) eqs(row, j) = Rat(w[j]);
        ++row;
    }
    for (const auto& l : h.span_equations) {
        for (size_t j = 0; j < dim; ++j) eqs(row, j) = Rat(l[j]);
        ++row;
    }
    auto inter = dd::extreme_rays(ineq, eqs);
    if (!inter.lineality.empty()) return false;

    std::set<IntVec> image_rays;
    for (const auto& v : p.vertices) {
        RatVec n{Rat(v[0]), Rat(v[1]), Rat(1)};
        image_rays.insert(primitive_vector(emb * n));
    }
    std::set<IntVec> got(inter.rays.begin(), inter.rays.end());
    return got == image_rays;
}

SmoothingDiscriminant smoothing_discriminant(const MinkowskiDecomposition& d,
                                             const std::vector<GaussRat>& x, int dim_n) {
    if (x.size() != d.summands.size())
        throw std::invalid_argument("smoothing_discriminant: need one parameter per summand");
    SmoothingDiscriminant out;
    for (size_t k = 0; k < d.summands.size(); ++k)
        out.plane_values.push_back(im_of_ipow_times(dim_n + 1, x[0] - x[k]));

    for (size_t k = 0; k < d.summands.size(); ++k) {
        const auto& verts = d.summands[k].vertices;
        const size_t m = verts.size();
        const size_t edge_count = m == 2 ? 1 : m;
        for (size_t i = 0; i < edge_count; ++i) {
            const Pt& n1 = verts[i];
            const Pt& n2 = verts[(i + 1) % m];
            Pt dvec{n2[0] - n1[0], n2[1] - n1[1]};
            IntVec ann = primitive_vector(IntVec{-dvec[1], dvec[0]}, /*keep_direction=*/false);
            out.components.push_back(
                {k, out.plane_values[k], {ann[0], ann[1]}, {{n1, n2}}});
        }
    }
    out.generic = true;
    for (size_t i = 0; i < out.plane_values.size() && out.generic; ++i)
        for (size_t j = i + 1; j < out.plane_values.size(); ++j)
            if (out.plane_values[i] == out.plane_values[j]) {
                out.generic = false;
                break;
            }
    return out;
}

ExtremalTransitionReport extremal_transition_report(const MinkowskiDecomposition& d,
                                                    const std::vector<GaussRat>& x, int dim_n,
                                                    const DiscriminantGraph* resolution_graph) {
    ExtremalTransitionReport rep;
    rep.num_summands = d.summands.size();
    if (d.summands.size() >= 2) {
        rep.at_x = smoothing_discriminant(d, x, dim_n);
        std::vector<GaussRat> zero(d.summands.size());
        rep.at_zero = smoothing_discriminant(d, zero, dim_n);
        rep.planes_collapse_at_zero = true;
        for (const auto& v : rep.at_zero.plane_values)
            if (v != 0) rep.planes_collapse_at_zero = false;
    }
    if (resolution_graph) {
        rep.has_resolution_graph = true;
        rep.resolution_vertices = resolution_graph->vertices.size();
        rep.resolution_bounded_edges = resolution_graph->bounded_edges.size();
        rep.resolution_rays = resolution_graph->rays.size();
    }
    return rep;
}

}  // namespace slag
