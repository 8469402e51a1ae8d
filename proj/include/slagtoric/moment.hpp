#pragma once

#include "slagtoric/cones.hpp"

namespace slag {

// The ray map pi: Z^{Sigma(1)} -> N (columns = primitive ray generators in
// ambient coordinates, fixed fan order) together with its integer kernel.
struct RayMap {
    RatMat pi;
    std::vector<IntVec> kernel;
};

// Throws NotSurjective when the ray generators do not generate N over Z.
RayMap build_ray_map(const Fan& f);

// A real divisor class: either alpha in k* (coordinates w.r.t. the kernel
// basis) or a full lift x0 in t* = R^{Sigma(1)} (or both; then p(x0)=alpha).
struct DivisorClass {
    std::optional<RatVec> alpha;
    std::optional<RatVec> lift;
};

// The lift used by ampleness and the moment polytope. When only alpha is
// given, x0 is solved with support on a deterministic set of rays:
// non-extreme ("added") rays are preferred, scanning from the back of the
// ray list. Then x0 is translated so the extreme rays of the support cone
// get offset zero, whenever that system is solvable.
RatVec resolve_lift(const Fan& f, const RayMap& rm, const DivisorClass& d);

// The PL function phi_alpha, one linear functional per maximal cone.
struct PLFunction {
    std::vector<RatVec> m_tau;  // parallel to fan.max_cones
};

struct AmplenessResult {
    bool ample = false;
    PLFunction phi;
    RatVec lift;  // the x0 actually used
};

// Strict upper convexity of phi_alpha: <m_tau, n_sigma> > -x0_sigma for
// every ray sigma not in tau. Throws Inconsistent when some m_tau system
// has no solution (non-simplicial maximal cone).
AmplenessResult ampleness(const Fan& f, const RayMap& rm, const DivisorClass& d);

struct SkeletonEdge {
    bool bounded;
    size_t a;                            // vertex index
    size_t b;                            // vertex index or recession-ray index
    std::vector<size_t> active_facets;   // ray indices of the fan
};

struct MomentPolytope {
    RatMat h_normals;   // rows = ray generators n_sigma (ambient)
    RatVec h_offsets;   // x0_sigma
    std::vector<RatVec> vertices;
    std::vector<IntVec> recession_rays;  // ambient-primitive directions
    std::vector<SkeletonEdge> edges;
    std::vector<std::vector<size_t>> vertex_active;
};

// P_alpha = {m : <m, n_sigma> + x0_sigma >= 0}, with exact vertex/ray
// enumeration and the 1-skeleton. Throws EmptyPolytope. Callers should
// check ampleness first; the polytope itself only needs the H-data.
MomentPolytope moment_polytope(const Fan& f, const RayMap& rm, const DivisorClass& d);

// The 1-skeleton with active-facet annotations (accessor; the skeleton is
// computed together with the polytope).
const std::vector<SkeletonEdge>& one_skeleton(const MomentPolytope& p);

}  // namespace slag
