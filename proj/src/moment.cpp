#include "slagtoric/moment.hpp"

#include <algorithm>

namespace slag {

namespace {

// Rays that are extreme in the support cone ("old" rays: the vertices of
// the cross-section); subdivision rays are in the conic hull of the others.
std::vector<bool> extreme_ray_mask(const Fan& f) {
    std::vector<bool> extreme(f.rays.size(), true);
    for (size_t i = 0; i < f.rays.size(); ++i) {
        std::vector<IntVec> others;
        for (size_t j = 0; j < f.rays.size(); ++j)
            if (j != i) others.push_back(primitive_vector(f.rays[j]));
        if (!others.empty() && dd::cone_contains(others, f.rays[i])) extreme[i] = false;
    }
    return extreme;
}

}  // namespace

RayMap build_ray_map(const Fan& f) {
    RayMap rm;
    const size_t n = f.lattice.rank();
    rm.pi = RatMat(n, f.rays.size());
    for (size_t j = 0; j < f.rays.size(); ++j) rm.pi.set_col(j, f.rays[j]);

    // Surjectivity onto N as a lattice: all elementary divisors of the
    // N-coordinate matrix must be 1.
    IntMat coords(n, f.rays.size());
    for (size_t j = 0; j < f.rays.size(); ++j)
        coords.set_col(j, f.lattice.lattice_coords(f.rays[j]));
    auto snf = smith_normal_form(coords);
    size_t full = 0;
    for (size_t i = 0; i < n && i < coords.cols(); ++i)
        if (snf.s(i, i) == 1) ++full;
    if (full != n)
        throw SlagError(SlagError::Kind::NotSurjective, "ray map is not surjective onto N");

    rm.kernel = kernel_basis(rm.pi);
    return rm;
}

RatVec resolve_lift(const Fan& f, const RayMap& rm, const DivisorClass& d) {
    const size_t nrays = f.rays.size();
    RatVec x0;
    if (d.lift) {
        if (d.lift->size() != nrays) throw std::invalid_argument("lift has wrong length");
        x0 = *d.lift;
        if (d.alpha) {
            for (size_t k = 0; k < rm.kernel.size(); ++k)
                if (dot(x0, rm.kernel[k]) != (*d.alpha)[k])
                    throw std::invalid_argument("lift does not map to alpha");
        }
        return x0;
    }
    if (!d.alpha) throw std::invalid_argument("divisor class needs alpha or a lift");
    if (d.alpha->size() != rm.kernel.size())
        throw std::invalid_argument("alpha has wrong length for the kernel rank");

    // Deterministic support: added rays first, scanned from the back.
    std::vector<bool> extreme = extreme_ray_mask(f);
    std::vector<size_t> order;
    for (size_t i = nrays; i-- > 0;)
        if (!extreme[i]) order.push_back(i);
    for (size_t i = nrays; i-- > 0;)
        if (extreme[i]) order.push_back(i);

    std::vector<size_t> support;
    {
        std::vector<RatVec> cols;
        for (size_t i : order) {
            RatVec col(rm.kernel.size());
            for (size_t k = 0; k < rm.kernel.size(); ++k) col[k] = Rat(rm.kernel[k][i]);
            cols.push_back(col);
            if (rank(RatMat::from_columns(cols)) == cols.size())
                support.push_back(i);
            else
                cols.pop_back();
            if (support.size() == rm.kernel.size()) break;
        }
    }
    if (support.size() != rm.kernel.size())
        throw std::invalid_argument("kernel pairing degenerate; cannot lift alpha");

    RatMat ks(rm.kernel.size(), support.size());
    for (size_t k = 0; k < rm.kernel.size(); ++k)
        for (size_t j = 0; j < support.size(); ++j) ks(k, j) = Rat(rm.kernel[k][support[j]]);
    auto xs = solve(ks, *d.alpha);
    if (!xs) throw std::invalid_argument("alpha not in the image of p");
    x0.assign(nrays, Rat(0));
    for (size_t j = 0; j < support.size(); ++j) x0[support[j]] = (*xs)[j];

    // Translate so extreme rays get offset zero when that is consistent:
    // find c with <c, n_sigma> = -x0_sigma on extreme rays.
    std::vector<RatVec> rows;
    RatVec rhs;
    for (size_t i = 0; i < nrays; ++i)
        if (extreme[i]) {
            rows.push_back(f.rays[i]);
            rhs.push_back(-x0[i]);
        }
    auto c = solve(RatMat::from_rows(rows), rhs);
    if (c) {
        for (size_t i = 0; i < nrays; ++i) x0[i] += dot(*c, f.rays[i]);
    }
    return x0;
}

AmplenessResult ampleness(const Fan& f, const RayMap& rm, const DivisorClass& d) {
    AmplenessResult res;
    res.lift = resolve_lift(f, rm, d);
    res.ample = true;
    const size_t n = f.lattice.rank();

    for (const auto& mc : f.max_cones) {
        RatMat a(mc.size(), n);
        RatVec rhs(mc.size());
        for (size_t k = 0; k < mc.size(); ++k) {
            a.set_row(k, f.rays[mc[k]]);
            rhs[k] = -res.lift[mc[k]];
        }
        auto m_tau = solve(a, rhs);
        if (!m_tau)
            throw SlagError(SlagError::Kind::Inconsistent,
                            "PL function undefined on a non-simplicial cone");
        res.phi.m_tau.push_back(*m_tau);
        for (size_t s = 0; s < f.rays.size(); ++s) {
            if (std::find(mc.begin(), mc.end(), s) != mc.end()) continue;
            if (!(dot(*m_tau, f.rays[s]) > -res.lift[s])) res.ample = false;
        }
    }
    return res;
}

MomentPolytope moment_polytope(const Fan& f, const RayMap& rm, const DivisorClass& d) {
    MomentPolytope p;
    RatVec x0 = resolve_lift(f, rm, d);
    const size_t n = f.lattice.rank();
    p.h_normals = RatMat(f.rays.size(), n);
    for (size_t i = 0; i < f.rays.size(); ++i) p.h_normals.set_row(i, f.rays[i]);
    p.h_offsets = x0;

    auto res = dd::vertex_enumeration(p.h_normals, p.h_offsets);
    if (res.status != dd::PolyStatus::Ok)
        throw SlagError(SlagError::Kind::EmptyPolytope,
                        res.status == dd::PolyStatus::Empty ? "moment polytope is empty"
                                                            : "moment polytope has no vertices");
    p.vertices = res.poly.vertices;
    p.recession_rays = res.poly.rays;
    p.vertex_active = res.poly.vertex_active;
    for (const auto& e : res.poly.edges)
        p.edges.push_back({e.bounded, e.a, e.b, e.active_facets});
    return p;
}

const std::vector<SkeletonEdge>& one_skeleton(const MomentPolytope& p) { return p.edges; }

}  // namespace slag
