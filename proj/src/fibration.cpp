#include "slagtoric/fibration.hpp"

#include <algorithm>
#include <map>

namespace slag {

namespace {

RatVec rat_of(const IntVec& v) {
    RatVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
    return out;
}

bool all_ones(const RatVec& v) {
    for (const auto& x : v)
        if (x != 1) return false;
    return true;
}

}  // namespace

std::optional<AdaptedBasis> adapted_basis(const LatticeSpec& lattice, const RatVec& m0) {
    const size_t n = lattice.rank();
    // w = B^T m0: the pairing of m0 with the lattice generators. m0 lies in
    // the dual lattice iff w is integral, and is primitive iff gcd(w) = 1.
    RatVec w_rat = lattice.basis().transpose() * m0;
    IntVec w(n);
    for (size_t i = 0; i < n; ++i) {
        if (!is_integer(w_rat[i])) return std::nullopt;
        w[i] = w_rat[i].get_num();
    }
    if (gcd_of(w) != 1) return std::nullopt;

    // U * w^T = (1,0,...,0)^T: row 1 of U pairs to 1 with w, the remaining
    // rows are a basis of the integer kernel of w.
    IntMat wcol(n, 1);
    for (size_t i = 0; i < n; ++i) wcol(i, 0) = w[i];
    auto [h, u] = hermite_normal_form(wcol);

    AdaptedBasis b;
    b.lattice = lattice;
    b.m0 = m0;
    RatVec e1 = lattice.to_ambient(rat_of(u.row(0)));
    b.e.push_back(e1);
    for (size_t i = 1; i < n; ++i) {
        RatVec fi = lattice.to_ambient(rat_of(u.row(i)));
        b.f.push_back(fi);
        b.e.push_back(vsub(e1, fi));  // f_i = e_1 - e_{i+1}
    }
    return b;
}

RatVec projection_r(const RatVec& x) {
    if (x.size() < 2) throw std::invalid_argument("projection_r: need dimension >= 2");
    RatVec out(x.size() - 1);
    for (size_t i = 1; i < x.size(); ++i) out[i - 1] = x[0] - x[i];
    return out;
}

const char* fiber_type_name(FiberType t) {
    switch (t) {
        case FiberType::Generic22: return "generic (2,2)";
        case FiberType::Positive12: return "positive (1,2)";
        case FiberType::Negative21: return "negative (2,1)";
        case FiberType::SmoothTorus: return "smooth torus";
        case FiberType::NoncompactTR: return "noncompact T^{n-1}xR";
        default: return "unclassified";
    }
}

std::optional<IntMat> edge_monodromy(const RatVec& delta, const AdaptedBasis& b) {
    if (dot(delta, b.m0) != 0) return std::nullopt;
    auto coords = express_in_basis(delta, b.f);
    if (!coords) return std::nullopt;
    const size_t n = b.e.size();
    IntMat t = IntMat::identity(n);
    for (size_t i = 0; i + 1 < n; ++i) {
        if (!is_integer((*coords)[i])) return std::nullopt;
        t(i, n - 1) = (*coords)[i].get_num();
    }
    return t;
}

DiscriminantGraph discriminant_graph(const MomentPolytope& p, const Fan& f,
                                     const AdaptedBasis& b, bool proper) {
    const size_t n = b.e.size();
    DiscriminantGraph g;
    g.ambient_dim = n - 1;
    g.proper = proper;
    g.basis = b;

    // Planar embedding. The paper applies (x1-x2, ..., x1-xn) in the moment
    // map's ambient coordinates, where m0 = (1,...,1); for other m0 the
    // e-dual coordinates xi_i = <x, e_i> restore that normalization.
    const bool ambient_formula = all_ones(b.m0);
    auto project_point = [&](const RatVec& x) {
        if (ambient_formula) return projection_r(x);
        RatVec xi(n);
        for (size_t i = 0; i < n; ++i) xi[i] = dot(x, b.e[i]);
        return projection_r(xi);
    };

    for (const auto& v : p.vertices) g.vertices.push_back(project_point(v));

    for (size_t i = 0; i < g.vertices.size(); ++i)
        for (size_t j = i + 1; j < g.vertices.size(); ++j)
            if (g.vertices[i] == g.vertices[j])
                g.warnings.push_back("NonInjectiveProjection: vertices " + std::to_string(i) +
                                     " and " + std::to_string(j) + " coincide");

    auto label_edge = [&](GraphEdge& edge, const std::vector<size_t>& active) {
        if (n != 3 || active.size() != 2) {
            edge.labeled = false;
            edge.fiber = FiberType::Unclassified;
            return;
        }
        RatVec n1 = f.rays[active[0]], n2 = f.rays[active[1]];
        if (n2 < n1) std::swap(n1, n2);
        edge.n1 = n1;
        edge.n2 = n2;
        edge.delta = vsub(n1, n2);
        auto t = edge_monodromy(edge.delta, b);
        if (!t) {
            edge.labeled = false;
            edge.fiber = FiberType::Unclassified;
            return;
        }
        auto coords = express_in_basis(edge.delta, b.f);
        edge.f_coords.clear();
        for (size_t i = 0; i + 1 < n; ++i) edge.f_coords.push_back((*coords)[i].get_num());
        edge.monodromy = *t;
        edge.fiber = FiberType::Generic22;
        edge.labeled = true;
    };

    for (const auto& e : p.edges) {
        GraphEdge edge;
        if (e.bounded) {
            edge.bounded = true;
            edge.a = e.a;
            edge.b = e.b;
        } else {
            edge.bounded = false;
            edge.a = e.a;
            RatVec dir = rat_of(p.recession_rays[e.b]);
            RatVec pdir = project_point(dir);  // directions project by the same linear map
            if (is_zero(pdir)) {
                g.warnings.push_back("skipped skeleton ray parallel to m0");
                continue;
            }
            edge.ray_dir = primitive_vector(pdir);
        }
        label_edge(edge, e.active_facets);
        (edge.bounded ? g.bounded_edges : g.rays).push_back(edge);
    }
    g.degenerate_no_bounded_edges = g.bounded_edges.empty();

    // Vertex fiber types: trivalent vertices carry positive (1,2) fibers
    // ("type (1,2) at all vertices") for n = 3.
    for (size_t v = 0; v < g.vertices.size(); ++v) {
        size_t valence = 0;
        for (const auto& e : g.bounded_edges) valence += (e.a == v) + (e.b == v);
        for (const auto& e : g.rays) valence += (e.a == v);
        g.vertex_types.push_back(n == 3 && valence == 3 ? FiberType::Positive12
                                                        : FiberType::Unclassified);
    }

    // Proper crossings between projected cells (reported, not fatal).
    if (n == 3) {
        struct Seg {
            RatVec p;
            RatVec d;
            bool ray;
        };
        std::vector<Seg> segs;
        for (const auto& e : g.bounded_edges)
            segs.push_back({g.vertices[e.a], vsub(g.vertices[e.b], g.vertices[e.a]), false});
        for (const auto& e : g.rays) segs.push_back({g.vertices[e.a], rat_of(e.ray_dir), true});
        for (size_t i = 0; i < segs.size(); ++i)
            for (size_t j = i + 1; j < segs.size(); ++j) {
                Rat det2 = segs[i].d[0] * segs[j].d[1] - segs[i].d[1] * segs[j].d[0];
                if (det2 == 0) continue;
                RatVec rhs = vsub(segs[j].p, segs[i].p);
                Rat s = (rhs[0] * segs[j].d[1] - rhs[1] * segs[j].d[0]) / det2;
                Rat t = (rhs[0] * segs[i].d[1] - rhs[1] * segs[i].d[0]) / det2;
                bool si = segs[i].ray ? s > 0 : (s > 0 && s < 1);
                bool tj = segs[j].ray ? t > 0 : (t > 0 && t < 1);
                if (si && tj)
                    g.warnings.push_back("NonInjectiveProjection: cells " + std::to_string(i) +
                                         " and " + std::to_string(j) + " cross");
            }
    }

    return g;
}

ConsistencyReport vertex_consistency(const DiscriminantGraph& g) {
    ConsistencyReport rep;
    std::vector<std::vector<const GraphEdge*>> inc(g.vertices.size());
    for (const auto& e : g.bounded_edges) {
        inc[e.a].push_back(&e);
        inc[e.b].push_back(&e);
    }
    for (const auto& e : g.rays) inc[e.a].push_back(&e);

    for (size_t v = 0; v < g.vertices.size(); ++v) {
        if (inc[v].size() != 3) continue;  // only the trivalent case is classified
        bool ok = true;
        std::vector<RatVec> gens;  // distinct facet generators around the vertex
        for (const GraphEdge* e : inc[v]) {
            if (!e->labeled) {
                ok = false;
                break;
            }
            if (e->delta != vsub(e->n1, e->n2)) ok = false;  // corrupted label
            for (const RatVec* r : {&e->n1, &e->n2})
                if (std::find(gens.begin(), gens.end(), *r) == gens.end()) gens.push_back(*r);
        }
        if (ok && gens.size() != 3) ok = false;
        if (ok) {
            // The three pairs are the 2-subsets of three generators; with the
            // cyclic orientation g0->g1->g2->g0 the classes sum to zero and
            // the monodromies multiply to the identity.
            const size_t n = g.basis.e.size();
            IntMat prod = IntMat::identity(n);
            RatVec sum(g.basis.m0.size(), Rat(0));
            for (const GraphEdge* e : inc[v]) {
                int i1 = -1, i2 = -1;
                for (int k = 0; k < 3; ++k) {
                    if (gens[(size_t)k] == e->n1) i1 = k;
                    if (gens[(size_t)k] == e->n2) i2 = k;
                }
                if (i1 < 0 || i2 < 0 || i1 == i2) {
                    ok = false;
                    break;
                }
                bool forward = (i2 - i1 + 3) % 3 == 1;
                sum = vadd(sum, forward ? e->delta : vscale(Rat(-1), e->delta));
                IntMat t = e->monodromy;
                if (!forward) t = inverse_transpose(t).transpose();  // T^{-1}
                prod = prod * t;
            }
            if (ok && (!is_zero(sum) || prod != IntMat::identity(g.basis.e.size()))) ok = false;
        }
        if (!ok) {
            rep.consistent = false;
            rep.offending_vertices.push_back(v);
        }
    }
    return rep;
}

IntMat inverse_transpose(const IntMat& t) {
    auto inv = inverse(to_rat(t));
    if (!inv) throw std::invalid_argument("inverse_transpose: singular matrix");
    IntMat out(t.rows(), t.cols());
    for (size_t i = 0; i < t.rows(); ++i)
        for (size_t j = 0; j < t.cols(); ++j) {
            Rat q = (*inv)(j, i);
            if (!is_integer(q))
                throw std::invalid_argument("inverse_transpose: matrix not unimodular");
            out(i, j) = q.get_num();
        }
    return out;
}

DualFibrationData dualize(const DiscriminantGraph& g) {
    auto rep = vertex_consistency(g);
    if (!rep.consistent)
        throw SlagError(SlagError::Kind::InconsistentGraph,
                        "vertex consistency fails; cannot dualize");
    DualFibrationData dual;
    dual.graph = g;

    auto dual_edge = [&](const GraphEdge& e) {
        DualEdgeData d;
        if (e.labeled) {
            if (e.f_coords.size() != 2)
                throw SlagError(SlagError::Kind::InconsistentGraph, "dualize needs n = 3 labels");
            // annihilator of (a1, a2) in N_{m0}^*: primitive (-a2, a1)
            IntVec ann{-e.f_coords[1], e.f_coords[0]};
            d.circle_class = primitive_vector(ann, /*keep_direction=*/false);
            d.monodromy = inverse_transpose(e.monodromy);
        }
        d.fiber = e.fiber;  // (2,2) stays generic on edges
        return d;
    };
    for (auto& e : dual.graph.bounded_edges) dual.bounded_edges.push_back(dual_edge(e));
    for (auto& e : dual.graph.rays) dual.rays.push_back(dual_edge(e));
    for (auto& t : dual.graph.vertex_types) {
        if (t == FiberType::Positive12)
            t = FiberType::Negative21;
        else if (t == FiberType::Negative21)
            t = FiberType::Positive12;
    }
    for (size_t i = 0; i < dual.graph.bounded_edges.size(); ++i)
        if (dual.graph.bounded_edges[i].labeled)
            dual.graph.bounded_edges[i].monodromy = dual.bounded_edges[i].monodromy;
    for (size_t i = 0; i < dual.graph.rays.size(); ++i)
        if (dual.graph.rays[i].labeled) dual.graph.rays[i].monodromy = dual.rays[i].monodromy;
    return dual;
}

}  // namespace slag
