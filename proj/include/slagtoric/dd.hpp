#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "slagtoric/matrix.hpp"
#include "slagtoric/normal_form.hpp"

namespace slag::dd {

// V-description of a cone {x : A x >= 0, E x = 0}: extreme rays of the
// pointed quotient plus a basis of the lineality space.
struct ConeV {
    std::vector<IntVec> rays;           // primitive integer generators
    std::vector<IntVec> lineality;      // basis of {x : Ax = 0, Ex = 0}
    std::vector<std::vector<bool>> active;  // per ray, over rows of A
    std::vector<std::pair<size_t, size_t>> adjacent;  // extreme adjacent ray pairs
};

// Double description method. Exact; intended for desk-scale systems
// (tens of rows, dimension <= ~8).
ConeV extreme_rays(const RatMat& a, const RatMat& e = RatMat());

// V-description of P = {x : A x + b >= 0}.
struct PolyV {
    std::vector<RatVec> vertices;
    std::vector<IntVec> rays;  // primitive recession directions

    struct Edge {
        bool bounded;
        size_t a;  // vertex index
        size_t b;  // vertex index (bounded) or ray index (unbounded)
        std::vector<size_t> active_facets;  // row indices of A
    };
    std::vector<Edge> edges;
    std::vector<std::vector<size_t>> vertex_active;  // per vertex, rows of A
};

enum class PolyStatus { Ok, Empty, NoVertices };

struct PolyResult {
    PolyStatus status = PolyStatus::Empty;
    PolyV poly;
};

PolyResult vertex_enumeration(const RatMat& a, const RatVec& b);

// Membership x in cone(rays): checked against the facet description of the
// cone (dual rays), exact.
bool cone_contains(const std::vector<IntVec>& rays, const RatVec& x);

}  // namespace slag::dd
