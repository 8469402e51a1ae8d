#include "slagtoric/dd.hpp"

#include <algorithm>
#include <set>

namespace slag::dd {

namespace {

// True when zs := Z(r1) ∩ Z(r2) is contained in Z(r3).
bool subset_of(const std::vector<bool>& z1, const std::vector<bool>& z2,
               const std::vector<bool>& z3) {
    for (size_t i = 0; i < z1.size(); ++i)
        if (z1[i] && z2[i] && !z3[i]) return false;
    return true;
}

// Combinatorial adjacency test among a complete set of extreme rays.
bool adjacent_rays(const std::vector<std::vector<bool>>& zero_sets, size_t a, size_t b) {
    for (size_t c = 0; c < zero_sets.size(); ++c) {
        if (c == a || c == b) continue;
        if (subset_of(zero_sets[a], zero_sets[b], zero_sets[c])) return false;
    }
    return true;
}

RatVec to_rat_vec_of(const IntVec& v) {
    RatVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
    return out;
}

}  // namespace

ConeV extreme_rays(const RatMat& a, const RatMat& e) {
    const size_t dim = a.cols() ? a.cols() : e.cols();
    if (dim == 0) throw std::invalid_argument("extreme_rays: zero-dimensional ambient");

    // Lineality space: common kernel of all rows.
    std::vector<RatVec> stacked_rows;
    for (size_t i = 0; i < a.rows(); ++i) stacked_rows.push_back(a.row(i));
    for (size_t i = 0; i < e.rows(); ++i) stacked_rows.push_back(e.row(i));

    ConeV out;
    std::vector<IntVec> lin;
    if (stacked_rows.empty()) {
        for (size_t i = 0; i < dim; ++i) {
            IntVec ei(dim);
            ei[i] = 1;
            lin.push_back(ei);
        }
        out.lineality = lin;
        return out;
    }
    lin = kernel_basis(RatMat::from_rows(stacked_rows));
    out.lineality = lin;

    // Subspace V = {x : Ex = 0}.
    std::vector<RatVec> v_basis;
    if (e.rows() == 0) {
        for (size_t i = 0; i < dim; ++i) {
            RatVec ei(dim);
            ei[i] = 1;
            v_basis.push_back(ei);
        }
    } else {
        for (const auto& k : kernel_basis(e)) v_basis.push_back(to_rat_vec_of(k));
    }
    if (v_basis.empty()) return out;  // only the origin

    // Complement of the lineality inside V: drop the V-basis columns that the
    // lineality vectors pivot on.
    std::vector<size_t> keep;
    if (lin.empty()) {
        for (size_t j = 0; j < v_basis.size(); ++j) keep.push_back(j);
    } else {
        RatMat vmat = RatMat::from_columns(v_basis);
        RatMat lin_coords(v_basis.size(), lin.size());
        for (size_t j = 0; j < lin.size(); ++j) {
            auto y = solve(vmat, to_rat_vec_of(lin[j]));
            if (!y) throw std::logic_error("lineality outside equality subspace");
            lin_coords.set_col(j, *y);
        }
        // Pivot rows of the echelonized lineality coordinates are spanned;
        // the remaining coordinates index a complement.
        RatMat lt = lin_coords.transpose();
        std::vector<bool> pivot(v_basis.size(), false);
        size_t r = 0;
        for (size_t c = 0; c < lt.cols() && r < lt.rows(); ++c) {
            size_t p = r;
            while (p < lt.rows() && lt(p, c) == 0) ++p;
            if (p == lt.rows()) continue;
            lt.swap_rows(p, r);
            for (size_t i = 0; i < lt.rows(); ++i) {
                if (i == r || lt(i, c) == 0) continue;
                Rat f = lt(i, c) / lt(r, c);
                for (size_t j = c; j < lt.cols(); ++j) lt(i, j) -= f * lt(r, j);
            }
            pivot[c] = true;
            ++r;
        }
        for (size_t j = 0; j < v_basis.size(); ++j)
            if (!pivot[j]) keep.push_back(j);
    }
    if (keep.empty()) return out;  // cone equals its lineality space

    std::vector<RatVec> w_cols;
    for (size_t j : keep) w_cols.push_back(v_basis[j]);
    RatMat w = RatMat::from_columns(w_cols);
    const size_t d = w.cols();

    // Pointed cone {y : B y >= 0} with B = A * W.
    RatMat b(a.rows(), d);
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < d; ++j) b(i, j) = dot(a.row(i), w.col(j));

    // Initial simplicial cone from d linearly independent rows.
    std::vector<size_t> base;
    {
        std::vector<RatVec> acc;
        for (size_t i = 0; i < b.rows() && base.size() < d; ++i) {
            acc.push_back(b.row(i));
            if (rank(RatMat::from_rows(acc)) == acc.size())
                base.push_back(i);
            else
                acc.pop_back();
        }
    }
    if (base.size() < d) throw std::logic_error("extreme_rays: quotient cone not pointed");

    RatMat b0(d, d);
    for (size_t i = 0; i < d; ++i) b0.set_row(i, b.row(base[i]));
    RatMat b0inv = *inverse(b0);

    std::vector<IntVec> rays;        // in y-coordinates
    std::vector<std::vector<bool>> zs;  // active over rows of b, processed or not
    std::vector<bool> processed(b.rows(), false);
    for (size_t i : base) processed[i] = true;

    auto pairing = [&](const IntVec& r, size_t row) {
        Rat s;
        for (size_t j = 0; j < d; ++j) s += b(row, j) * r[j];
        return s;
    };
    auto zero_set_processed = [&](const IntVec& r) {
        std::vector<bool> z(b.rows(), false);
        for (size_t i = 0; i < b.rows(); ++i)
            if (processed[i] && pairing(r, i) == 0) z[i] = true;
        return z;
    };

    for (size_t j = 0; j < d; ++j) rays.push_back(primitive_vector(b0inv.col(j)));
    for (const auto& r : rays) zs.push_back(zero_set_processed(r));

    for (size_t row = 0; row < b.rows(); ++row) {
        if (processed[row]) continue;
        std::vector<Rat> sign(rays.size());
        for (size_t i = 0; i < rays.size(); ++i) sign[i] = pairing(rays[i], row);

        std::vector<IntVec> next;
        std::vector<size_t> pos, neg;
        for (size_t i = 0; i < rays.size(); ++i) {
            if (sign[i] >= 0) next.push_back(rays[i]);
            if (sign[i] > 0) pos.push_back(i);
            if (sign[i] < 0) neg.push_back(i);
        }
        for (size_t p : pos)
            for (size_t m : neg) {
                if (!adjacent_rays(zs, p, m)) continue;
                RatVec comb(d);
                for (size_t j = 0; j < d; ++j)
                    comb[j] = sign[p] * Rat(rays[m][j]) - sign[m] * Rat(rays[p][j]);
                next.push_back(primitive_vector(comb));
            }
        processed[row] = true;
        rays = std::move(next);
        zs.clear();
        for (const auto& r : rays) zs.push_back(zero_set_processed(r));
    }

    // Deduplicate (paranoia; primitive representatives are canonical).
    {
        std::set<IntVec> seen;
        std::vector<IntVec> uniq;
        for (auto& r : rays)
            if (seen.insert(r).second) uniq.push_back(std::move(r));
        rays = std::move(uniq);
    }

    // Back to ambient coordinates.
    for (const auto& r : rays) {
        RatVec x(dim);
        for (size_t j = 0; j < d; ++j)
            for (size_t i = 0; i < dim; ++i) x[i] += w(i, j) * r[j];
        out.rays.push_back(primitive_vector(x));
    }
    std::sort(out.rays.begin(), out.rays.end());

    for (const auto& r : out.rays) {
        std::vector<bool> z(a.rows(), false);
        for (size_t i = 0; i < a.rows(); ++i)
            if (dot(a.row(i), to_rat_vec_of(r)) == 0) z[i] = true;
        out.active.push_back(z);
    }
    for (size_t i = 0; i < out.rays.size(); ++i)
        for (size_t j = i + 1; j < out.rays.size(); ++j)
            if (adjacent_rays(out.active, i, j)) out.adjacent.push_back({i, j});
    return out;
}

PolyResult vertex_enumeration(const RatMat& a, const RatVec& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("vertex_enumeration: shape mismatch");
    const size_t d = a.cols();
    // Homogenize: { (x,t) : A x + b t >= 0, t >= 0 }.
    RatMat h(a.rows() + 1, d + 1);
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < d; ++j) h(i, j) = a(i, j);
        h(i, d) = b[i];
    }
    h(a.rows(), d) = 1;

    ConeV cone = extreme_rays(h);
    PolyResult res;
    if (!cone.lineality.empty()) {
        res.status = PolyStatus::NoVertices;  // recession lineality: P has no vertex
        return res;
    }

    std::vector<int> vertex_of(cone.rays.size(), -1), ray_of(cone.rays.size(), -1);
    for (size_t i = 0; i < cone.rays.size(); ++i) {
        const IntVec& r = cone.rays[i];
        if (r[d] > 0) {
            RatVec v(d);
            for (size_t j = 0; j < d; ++j) v[j] = Rat(r[j]) / Rat(r[d]);
            vertex_of[i] = static_cast<int>(res.poly.vertices.size());
            res.poly.vertices.push_back(v);
            std::vector<size_t> act;
            for (size_t row = 0; row < a.rows(); ++row)
                if (cone.active[i][row]) act.push_back(row);
            res.poly.vertex_active.push_back(act);
        } else {
            IntVec dir(r.begin(), r.begin() + d);
            ray_of[i] = static_cast<int>(res.poly.rays.size());
            res.poly.rays.push_back(primitive_vector(dir));
        }
    }
    if (res.poly.vertices.empty()) {
        res.status = PolyStatus::Empty;
        return res;
    }

    for (auto [i, j] : cone.adjacent) {
        bool vi = vertex_of[i] >= 0, vj = vertex_of[j] >= 0;
        if (!vi && !vj) continue;  // 2-face of the recession cone, not an edge of P
        PolyV::Edge edge;
        std::vector<size_t> act;
        for (size_t row = 0; row < a.rows(); ++row)
            if (cone.active[i][row] && cone.active[j][row]) act.push_back(row);
        edge.active_facets = act;
        if (vi && vj) {
            edge.bounded = true;
            edge.a = static_cast<size_t>(vertex_of[i]);
            edge.b = static_cast<size_t>(vertex_of[j]);
            if (edge.a > edge.b) std::swap(edge.a, edge.b);
        } else {
            edge.bounded = false;
            edge.a = static_cast<size_t>(vi ? vertex_of[i] : vertex_of[j]);
            edge.b = static_cast<size_t>(vi ? ray_of[j] : ray_of[i]);
        }
        res.poly.edges.push_back(edge);
    }
    std::sort(res.poly.edges.begin(), res.poly.edges.end(), [](const auto& x, const auto& y) {
        return std::tie(x.bounded, x.a, x.b) < std::tie(y.bounded, y.a, y.b);
    });
    res.status = PolyStatus::Ok;
    return res;
}

bool cone_contains(const std::vector<IntVec>& rays, const RatVec& x) {
    if (rays.empty()) return is_zero(x);
    RatMat gens(rays.size(), rays[0].size());
    for (size_t i = 0; i < rays.size(); ++i) gens.set_row(i, to_rat_vec_of(rays[i]));
    ConeV dual = extreme_rays(gens);  // {m : <m, ray> >= 0 for all rays}
    for (const auto& m : dual.rays)
        if (dot(x, m) < 0) return false;
    for (const auto& l : dual.lineality)
        if (dot(x, l) != 0) return false;
    return true;
}

}  // namespace slag::dd
