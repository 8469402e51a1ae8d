#pragma once

#include <optional>
#include <string>

#include "slagtoric/dd.hpp"
#include "slagtoric/lattice.hpp"

namespace slag {

// Typed failure for pipeline-aborting conditions; expected alternative
// outcomes (NotGorenstein, NotAmple, ...) travel through return values.
class SlagError : public std::runtime_error {
  public:
    enum class Kind {
        ParseError,
        InvalidTriangulation,
        NotSurjective,
        Inconsistent,
        EmptyPolytope,
        InconsistentGraph,
        TooLarge,
        DegenerateHeights,
        OnDivisor,
        NotConvex,
    };
    SlagError(Kind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    Kind kind() const { return kind_; }

  private:
    Kind kind_;
};

// A rational polyhedral cone, stored by its primitive extreme ray
// generators in ambient coordinates, sorted lexicographically. Cones that
// contain lines (duals of low-dimensional cones) carry their lineality
// generators among `generators` as +/- pairs and are flagged.
struct Cone {
    LatticeSpec lattice;
    std::vector<RatVec> generators;
    bool strongly_convex = true;

    size_t dim_ambient() const { return lattice.rank(); }
};

// Canonicalizes: primitivizes generators w.r.t. the lattice, removes
// duplicates and non-extreme generators, sorts, and checks strong convexity.
Cone make_cone(const LatticeSpec& lattice, std::vector<RatVec> generators);

// Facet inequalities of the cone, as primitive normals in the dual space.
// For non-full-dimensional cones the span equalities are returned separately.
struct ConeH {
    std::vector<IntVec> facet_normals;  // <f, x> >= 0
    std::vector<IntVec> span_equations;  // <l, x> == 0
};
ConeH facets(const Cone& c);

bool cone_contains_point(const Cone& c, const RatVec& x);

// {m : <m, v> >= 0 for all v in c}, as a cone in the dual lattice.
Cone dual_cone(const Cone& c);

struct GorensteinData {
    RatVec m0;                           // ambient coordinates in the dual space
    std::vector<RatVec> cross_section;   // vertices of P = conv(ray generators)
    Cone cone;
};

// The unique m0 in the dual lattice M with <m0, n_i> = 1 on all ray
// generators; nullopt when no such (integral) solution exists.
// Requires a strongly convex full-dimensional cone.
std::optional<GorensteinData> gorenstein_degree(const Cone& c);

// Lattice points of the cross-section polytope P = sigma ∩ {<m0,.> = 1},
// sorted lexicographically by ambient coordinates.
std::vector<RatVec> cross_section_lattice_points(const GorensteinData& g);

// A triangulation of P: an explicit vertex list (lattice points of P) and
// simplices as index tuples into it.
struct Triangulation {
    std::vector<RatVec> points;
    std::vector<std::vector<size_t>> simplices;
};

// Star subdivision of P at an interior lattice point (the Example 2.3 /
// del Pezzo workflow). Vertex list order: cross-section vertices in cone
// generator order, then the center.
Triangulation star_subdivision(const GorensteinData& g, const RatVec& center);

struct Fan {
    LatticeSpec lattice;
    std::vector<RatVec> rays;                     // Sigma(1), primitive, in input order
    std::vector<std::vector<size_t>> max_cones;   // sorted ray-index lists
    std::vector<std::vector<size_t>> cones;       // face closure (includes max cones and {})

    Cone cone_at(const std::vector<size_t>& idx) const;
    // Conic hull of all rays (the support sigma for fans refining a cone).
    Cone support() const;
};

// Fan whose maximal cones are the cones over the simplices; validates the
// triangulation (lattice vertices at height one, full-dimensional simplices,
// exact volume cover, pairwise face-to-face) and throws InvalidTriangulation.
Fan fan_from_triangulation(const GorensteinData& g, const Triangulation& t);

// Builds a fan directly from rays + maximal cone index lists (document
// input path); validates pairwise intersections are common faces.
Fan make_fan(const LatticeSpec& lattice, std::vector<RatVec> rays,
             std::vector<std::vector<size_t>> max_cones);

struct SmoothnessReport {
    bool smooth = true;
    std::vector<std::vector<size_t>> offending_cones;
};
SmoothnessReport is_smooth(const Fan& f);

// True iff every ray of the fan pairs to 1 with m0 (all new rays pass
// through the cross-section P).
bool crepancy_check(const GorensteinData& g, const Fan& f);

}  // namespace slag
