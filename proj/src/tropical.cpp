#include "slagtoric/tropical.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>

namespace slag {

namespace {

using Pt2 = std::array<Int, 2>;

Int cross2(const Pt2& a, const Pt2& b) { return a[0] * b[1] - a[1] * b[0]; }

bool collinear(const Pt2& a, const Pt2& b, const Pt2& c) {
    return cross2({b[0] - a[0], b[1] - a[1]}, {c[0] - a[0], c[1] - a[1]}) == 0;
}

}  // namespace

TropicalCurve tropical_curve(const TropicalPolynomial& tp) {
    const size_t n = tp.support.size();
    if (n < 2 || tp.heights.size() != n)
        throw SlagError(SlagError::Kind::DegenerateHeights, "need at least two lifted terms");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (tp.support[i] == tp.support[j])
                throw SlagError(SlagError::Kind::DegenerateHeights,
                                "duplicate support point (two-dimensional tie region)");

    TropicalCurve tc;

    bool spanning = false;
    for (size_t i = 1; i < n && !spanning; ++i)
        for (size_t j = i + 1; j < n && !spanning; ++j)
            if (!collinear(tp.support[0], tp.support[i], tp.support[j])) spanning = true;

    if (!spanning) {
        // One-dimensional support: the curve is a union of parallel lines,
        // one per edge of the upper envelope along the support line.
        Pt2 base = tp.support[0];
        Pt2 far = tp.support[1];
        for (const auto& s : tp.support) {
            Int cur = abs(s[0] - base[0]) + abs(s[1] - base[1]);
            Int best = abs(far[0] - base[0]) + abs(far[1] - base[1]);
            if (s != base && cur > best) far = s;
        }
        IntVec u = primitive_vector(IntVec{far[0] - base[0], far[1] - base[1]});
        Int uu = u[0] * u[0] + u[1] * u[1];
        std::vector<std::pair<Int, size_t>> param;  // (position along line, index)
        for (size_t i = 0; i < n; ++i) {
            Int s = (tp.support[i][0] - base[0]) * u[0] + (tp.support[i][1] - base[1]) * u[1];
            if (s % uu != 0) throw std::logic_error("support point off the lattice line");
            param.push_back({s / uu, i});
        }
        std::sort(param.begin(), param.end());
        // upper concave envelope of (s_i, c_i)
        std::vector<std::pair<Rat, Rat>> pts;
        std::vector<size_t> idx;
        for (auto& [s, i] : param) {
            Rat sr = Rat(s);
            while (pts.size() >= 1) {
                if (pts.size() == 1) {
                    if (pts.back().first == sr) {
                        // same position cannot happen (distinct support)
                        break;
                    }
                    break;
                }
                auto& a = pts[pts.size() - 2];
                auto& b = pts[pts.size() - 1];
                Rat lhs = (b.second - a.second) * (sr - a.first);
                Rat rhs = (tp.heights[i] - a.second) * (b.first - a.first);
                if (lhs > rhs) break;  // b stays strictly above the chord
                pts.pop_back();
                idx.pop_back();
            }
            pts.push_back({sr, tp.heights[i]});
            idx.push_back(i);
        }
        for (size_t k = 0; k + 1 < pts.size(); ++k) {
            Rat tstar = -(pts[k + 1].second - pts[k].second) / (pts[k + 1].first - pts[k].first);
            RatVec basept{tstar * u[0] / Rat(uu), tstar * u[1] / Rat(uu)};
            IntVec line_dir = primitive_vector(IntVec{-u[1], u[0]});
            Int mult = to_int(pts[k + 1].first - pts[k].first);
            std::array<size_t, 2> dual{std::min(idx[k], idx[k + 1]),
                                       std::max(idx[k], idx[k + 1])};
            tc.rays.push_back({false, 0, basept, line_dir, mult, dual});
            IntVec opp{-line_dir[0], -line_dir[1]};
            tc.rays.push_back({false, 0, basept, opp, mult, dual});
        }
        return tc;
    }

    // Cells of the dual regular subdivision: planes through lifted triples
    // that dominate every lifted point, merged by their equality sets.
    std::set<std::vector<size_t>> cell_set;
    std::vector<RatVec> cell_plane;
    std::vector<std::vector<size_t>> cells;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k) {
                if (collinear(tp.support[i], tp.support[j], tp.support[k])) continue;
                RatMat a(3, 3);
                RatVec rhs(3);
                size_t rows[3] = {i, j, k};
                for (int r = 0; r < 3; ++r) {
                    a(r, 0) = Rat(tp.support[rows[r]][0]);
                    a(r, 1) = Rat(tp.support[rows[r]][1]);
                    a(r, 2) = 1;
                    rhs[r] = tp.heights[rows[r]];
                }
                auto plane = solve(a, rhs);
                if (!plane) continue;
                bool upper = true;
                std::vector<size_t> on;
                for (size_t s = 0; s < n; ++s) {
                    Rat val = (*plane)[0] * tp.support[s][0] + (*plane)[1] * tp.support[s][1] +
                              (*plane)[2];
                    if (tp.heights[s] > val) {
                        upper = false;
                        break;
                    }
                    if (tp.heights[s] == val) on.push_back(s);
                }
                if (!upper) continue;
                if (cell_set.insert(on).second) {
                    cells.push_back(on);
                    cell_plane.push_back(*plane);
                }
            }

    for (size_t c = 0; c < cells.size(); ++c)
        tc.vertices.push_back({-cell_plane[c][0], -cell_plane[c][1]});
    tc.dual_cells = cells;

    // Bounded edges: pairs of cells sharing an edge of the subdivision.
    for (size_t c1 = 0; c1 < cells.size(); ++c1)
        for (size_t c2 = c1 + 1; c2 < cells.size(); ++c2) {
            std::vector<size_t> shared;
            std::set_intersection(cells[c1].begin(), cells[c1].end(), cells[c2].begin(),
                                  cells[c2].end(), std::back_inserter(shared));
            if (shared.size() < 2) continue;
            size_t pa = shared[0], pb = shared[1];
            Int best = -1;
            for (size_t x : shared)
                for (size_t y : shared) {
                    Int d2 = (tp.support[x][0] - tp.support[y][0]) *
                                 (tp.support[x][0] - tp.support[y][0]) +
                             (tp.support[x][1] - tp.support[y][1]) *
                                 (tp.support[x][1] - tp.support[y][1]);
                    if (d2 > best) {
                        best = d2;
                        pa = x;
                        pb = y;
                    }
                }
            std::array<size_t, 2> dual{std::min(pa, pb), std::max(pa, pb)};
            Int dx = tp.support[dual[1]][0] - tp.support[dual[0]][0];
            Int dy = tp.support[dual[1]][1] - tp.support[dual[0]][1];
            Int mult = gcd_of(IntVec{dx, dy});
            RatVec diff = vsub(tc.vertices[c2], tc.vertices[c1]);
            if (is_zero(diff)) throw std::logic_error("coincident dual vertices");
            tc.bounded.push_back({c1, c2, primitive_vector(diff), mult, dual});
        }

    // Rays: boundary edges of the subdivision; the direction is the outward
    // primitive normal of the dual edge.
    for (size_t c = 0; c < cells.size(); ++c) {
        const auto& cell = cells[c];
        RatVec centroid{Rat(0), Rat(0)};
        for (size_t s : cell) {
            centroid[0] += tp.support[s][0];
            centroid[1] += tp.support[s][1];
        }
        centroid[0] /= (long)cell.size();
        centroid[1] /= (long)cell.size();

        // extreme points of the cell, in counterclockwise order
        std::vector<size_t> hull;
        for (size_t s : cell) {
            bool extreme = true;
            for (size_t x : cell) {
                for (size_t y : cell) {
                    if (x == s || y == s || x == y) continue;
                    if (!collinear(tp.support[x], tp.support[y], tp.support[s])) continue;
                    Int d1 = (tp.support[s][0] - tp.support[x][0]) *
                                 (tp.support[y][0] - tp.support[s][0]) +
                             (tp.support[s][1] - tp.support[x][1]) *
                                 (tp.support[y][1] - tp.support[s][1]);
                    if (d1 > 0) extreme = false;
                }
            }
            if (extreme) hull.push_back(s);
        }
        std::sort(hull.begin(), hull.end(), [&](size_t x, size_t y) {
            Rat ax = tp.support[x][0] - centroid[0], ay = tp.support[x][1] - centroid[1];
            Rat bx = tp.support[y][0] - centroid[0], by = tp.support[y][1] - centroid[1];
            int ha = (ay > 0 || (ay == 0 && ax > 0)) ? 0 : 1;
            int hb = (by > 0 || (by == 0 && bx > 0)) ? 0 : 1;
            if (ha != hb) return ha < hb;
            return ax * by - ay * bx > 0;
        });

        for (size_t h = 0; h < hull.size(); ++h) {
            size_t pa = hull[h], pb = hull[(h + 1) % hull.size()];
            Pt2 e{tp.support[pb][0] - tp.support[pa][0], tp.support[pb][1] - tp.support[pa][1]};
            RatVec nrm{Rat(e[1]), Rat(-e[0])};
            Rat side = nrm[0] * (centroid[0] - tp.support[pa][0]) +
                       nrm[1] * (centroid[1] - tp.support[pa][1]);
            if (side > 0) {
                nrm[0] = -nrm[0];
                nrm[1] = -nrm[1];
            }
            bool boundary = true;
            for (size_t s = 0; s < n && boundary; ++s) {
                Rat v = nrm[0] * (tp.support[s][0] - tp.support[pa][0]) +
                        nrm[1] * (tp.support[s][1] - tp.support[pa][1]);
                if (v > 0) boundary = false;
            }
            if (!boundary) continue;
            Int mult = gcd_of(IntVec{e[0], e[1]});
            tc.rays.push_back({true, c, tc.vertices[c], primitive_vector(nrm), mult,
                               {std::min(pa, pb), std::max(pa, pb)}});
        }
    }

    // Balancing at every vertex, exact.
    for (size_t v = 0; v < tc.vertices.size(); ++v) {
        Int sx = 0, sy = 0;
        for (const auto& e : tc.bounded) {
            if (e.a == v) {
                sx += e.mult * e.dir[0];
                sy += e.mult * e.dir[1];
            } else if (e.b == v) {
                sx -= e.mult * e.dir[0];
                sy -= e.mult * e.dir[1];
            }
        }
        for (const auto& r : tc.rays)
            if (r.has_vertex && r.vertex == v) {
                sx += r.mult * r.dir[0];
                sy += r.mult * r.dir[1];
            }
        if (sx != 0 || sy != 0)
            throw std::logic_error("tropical curve fails the balancing condition");
    }
    return tc;
}

SpineComparison compare_spine_to_discriminant(const TropicalCurve& tc,
                                              const DiscriminantGraph& g,
                                              const BasisChange& map) {
    SpineComparison cmp;
    auto apply = [&](const RatVec& v) {
        RatVec out(2);
        for (size_t i = 0; i < 2; ++i)
            out[i] = Rat(map.linear(i, 0)) * v[0] + Rat(map.linear(i, 1)) * v[1] + map.offset[i];
        return out;
    };
    auto apply_dir = [&](const IntVec& d) {
        RatVec out(2);
        for (size_t i = 0; i < 2; ++i)
            out[i] = Rat(map.linear(i, 0)) * d[0] + Rat(map.linear(i, 1)) * d[1];
        return primitive_vector(out);
    };

    std::vector<RatVec> gverts;
    for (const auto& v : g.vertices) gverts.push_back(apply(v));

    size_t spine_anchored = 0, spine_lines = 0;
    for (const auto& r : tc.rays) (r.has_vertex ? spine_anchored : spine_lines)++;
    if (g.vertices.size() != tc.vertices.size() || g.bounded_edges.size() != tc.bounded.size() ||
        g.rays.size() != spine_anchored) {
        cmp.detail = "count mismatch";
        return cmp;
    }
    cmp.vertices = tc.vertices.size();
    cmp.bounded_edges = tc.bounded.size();
    cmp.rays = spine_anchored;

    auto graph_rays_at = [&](size_t v) {
        std::multiset<IntVec> dirs;
        for (const auto& r : g.rays)
            if (r.a == v) dirs.insert(apply_dir(r.ray_dir));
        return dirs;
    };
    auto spine_rays_at = [&](size_t v) {
        std::multiset<IntVec> dirs;
        for (const auto& r : tc.rays)
            if (r.has_vertex && r.vertex == v) dirs.insert(r.dir);
        return dirs;
    };
    std::set<std::pair<size_t, size_t>> spine_edges;
    for (const auto& e : tc.bounded)
        spine_edges.insert({std::min(e.a, e.b), std::max(e.a, e.b)});

    const size_t nv = g.vertices.size();
    std::vector<int> match(nv, -1);
    std::vector<bool> used(tc.vertices.size(), false);
    std::function<bool(size_t)> assign = [&](size_t gi) -> bool {
        if (gi == nv) {
            for (const auto& e : g.bounded_edges) {
                size_t a = (size_t)match[e.a], b = (size_t)match[e.b];
                if (!spine_edges.count({std::min(a, b), std::max(a, b)})) return false;
            }
            return true;
        }
        for (size_t si = 0; si < tc.vertices.size(); ++si) {
            if (used[si]) continue;
            if (graph_rays_at(gi) != spine_rays_at(si)) continue;
            match[gi] = (int)si;
            used[si] = true;
            if (assign(gi + 1)) return true;
            used[si] = false;
            match[gi] = -1;
        }
        return false;
    };
    if (!(nv == 0 || assign(0))) {
        cmp.detail = "no incidence-preserving vertex matching";
        return cmp;
    }
    if (spine_lines != 0) {
        cmp.detail = "spine has free lines, graph does not";
        return cmp;
    }
    cmp.isomorphic = true;

    double num = 0, den = 0;
    std::vector<std::array<double, 2>> xs(nv), ys(nv);
    for (size_t i = 0; i < nv; ++i) {
        xs[i] = {gverts[i][0].get_d(), gverts[i][1].get_d()};
        ys[i] = {tc.vertices[(size_t)match[i]][0].get_d(),
                 tc.vertices[(size_t)match[i]][1].get_d()};
        num += xs[i][0] * ys[i][0] + xs[i][1] * ys[i][1];
        den += xs[i][0] * xs[i][0] + xs[i][1] * xs[i][1];
    }
    cmp.fitted_scale = den > 0 ? num / den : 1.0;
    for (size_t i = 0; i < nv; ++i) {
        double dx = xs[i][0] - ys[i][0], dy = xs[i][1] - ys[i][1];
        cmp.max_vertex_distance = std::max(cmp.max_vertex_distance, std::hypot(dx, dy));
        double fx = cmp.fitted_scale * xs[i][0] - ys[i][0];
        double fy = cmp.fitted_scale * xs[i][1] - ys[i][1];
        cmp.fitted_max_distance = std::max(cmp.fitted_max_distance, std::hypot(fx, fy));
    }
    return cmp;
}

namespace {

struct DSeg {
    double ax, ay, bx, by;
};

double point_seg_dist(double px, double py, const DSeg& s) {
    double dx = s.bx - s.ax, dy = s.by - s.ay;
    double len2 = dx * dx + dy * dy;
    double t = len2 > 0 ? ((px - s.ax) * dx + (py - s.ay) * dy) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    double cx = s.ax + t * dx, cy = s.ay + t * dy;
    return std::hypot(px - cx, py - cy);
}

// Clip p + t d, t in [0, tmax] (tmax < 0 means a ray) to the window.
bool clip_ray(double px, double py, double dx, double dy, double tmax, const Window& w,
              DSeg& out) {
    double t0 = 0.0, t1 = tmax < 0 ? 1e18 : tmax;
    auto update = [&](double p, double q) {
        if (p == 0) return q >= 0;
        double r = q / p;
        if (p > 0) {
            if (r < t0) return false;
            t1 = std::min(t1, r);
        } else {
            if (r > t1) return false;
            t0 = std::max(t0, r);
        }
        return true;
    };
    // p*t <= q form for the four window sides
    if (!update(dx, w.xmax - px)) return false;
    if (!update(-dx, px - w.xmin)) return false;
    if (!update(dy, w.ymax - py)) return false;
    if (!update(-dy, py - w.ymin)) return false;
    if (t0 > t1) return false;
    out = {px + t0 * dx, py + t0 * dy, px + t1 * dx, py + t1 * dy};
    return true;
}

std::vector<DSeg> spine_segments(const TropicalCurve& tc, const Window& w) {
    std::vector<DSeg> segs;
    for (const auto& e : tc.bounded) {
        double ax = tc.vertices[e.a][0].get_d(), ay = tc.vertices[e.a][1].get_d();
        double bx = tc.vertices[e.b][0].get_d(), by = tc.vertices[e.b][1].get_d();
        DSeg s;
        if (clip_ray(ax, ay, bx - ax, by - ay, 1.0, w, s)) segs.push_back(s);
    }
    for (const auto& r : tc.rays) {
        double px = r.base[0].get_d(), py = r.base[1].get_d();
        DSeg s;
        if (clip_ray(px, py, r.dir[0].get_d(), r.dir[1].get_d(), -1.0, w, s)) segs.push_back(s);
    }
    return segs;
}

}  // namespace

FatteningResult fattening_check(const std::vector<std::array<double, 2>>& cloud,
                                const TropicalCurve& tc, double eps, const Window& w) {
    FatteningResult res;
    auto segs = spine_segments(tc, w);

    size_t in_window = 0, near_spine = 0;
    std::vector<std::array<double, 2>> cloud_in;
    for (const auto& p : cloud) {
        if (!w.inside(p[0], p[1])) continue;
        ++in_window;
        cloud_in.push_back(p);
        double best = 1e18;
        for (const auto& s : segs) best = std::min(best, point_seg_dist(p[0], p[1], s));
        if (best <= eps) ++near_spine;
    }
    res.cloud_points_in_window = in_window;
    res.contained = in_window ? double(near_spine) / double(in_window) : 1.0;

    const double step = std::max(eps / 4.0, 1e-3);
    size_t samples = 0, covered = 0;
    for (const auto& s : segs) {
        double len = std::hypot(s.bx - s.ax, s.by - s.ay);
        size_t k = std::max<size_t>(1, (size_t)std::ceil(len / step));
        for (size_t i = 0; i <= k; ++i) {
            double t = double(i) / double(k);
            double x = s.ax + t * (s.bx - s.ax), y = s.ay + t * (s.by - s.ay);
            ++samples;
            double best = 1e18;
            for (const auto& p : cloud_in)
                best = std::min(best, std::hypot(p[0] - x, p[1] - y));
            if (best <= eps) ++covered;
        }
    }
    res.spine_samples = samples;
    res.covers = samples ? double(covered) / double(samples) : 1.0;
    return res;
}

double required_fattening_eps(const std::vector<std::array<double, 2>>& cloud,
                              const TropicalCurve& tc, const Window& w, double fraction) {
    auto segs = spine_segments(tc, w);
    std::vector<double> d_cloud;
    std::vector<std::array<double, 2>> cloud_in;
    for (const auto& p : cloud) {
        if (!w.inside(p[0], p[1])) continue;
        cloud_in.push_back(p);
        double best = 1e18;
        for (const auto& s : segs) best = std::min(best, point_seg_dist(p[0], p[1], s));
        d_cloud.push_back(best);
    }
    const double step = 0.05;
    std::vector<double> d_spine;
    for (const auto& s : segs) {
        double len = std::hypot(s.bx - s.ax, s.by - s.ay);
        size_t k = std::max<size_t>(1, (size_t)std::ceil(len / step));
        for (size_t i = 0; i <= k; ++i) {
            double t = double(i) / double(k);
            double x = s.ax + t * (s.bx - s.ax), y = s.ay + t * (s.by - s.ay);
            double best = 1e18;
            for (const auto& p : cloud_in)
                best = std::min(best, std::hypot(p[0] - x, p[1] - y));
            d_spine.push_back(best);
        }
    }
    // eps at which the given fraction of one-sided distances is covered
    auto quantile = [&](std::vector<double> v) {
        if (v.empty()) return 0.0;
        std::sort(v.begin(), v.end());
        size_t idx = (size_t)std::ceil(fraction * double(v.size()));
        if (idx > 0) --idx;
        return v[idx];
    };
    return std::max(quantile(d_cloud), quantile(d_spine));
}

}  // namespace slag
