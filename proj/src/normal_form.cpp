#include "slagtoric/normal_form.hpp"

namespace slag {

namespace {

void add_row_multiple(IntMat& m, size_t dst, size_t src, const Int& f) {
    if (f == 0) return;
    for (size_t j = 0; j < m.cols(); ++j) m(dst, j) += f * m(src, j);
}

void negate_row(IntMat& m, size_t r) {
    for (size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

}  // namespace

HnfResult hermite_normal_form(const IntMat& m) {
    if (m.empty()) throw std::invalid_argument("hermite_normal_form: empty matrix");
    IntMat h = m;
    IntMat u = IntMat::identity(m.rows());
    size_t r = 0;
    for (size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
        // Euclidean elimination in column c, rows r..end.
        while (true) {
            size_t p = h.rows();
            for (size_t i = r; i < h.rows(); ++i) {
                if (h(i, c) == 0) continue;
                if (p == h.rows() || abs(h(i, c)) < abs(h(p, c))) p = i;
            }
            if (p == h.rows()) break;  // column already clear
            if (p != r) {
                h.swap_rows(p, r);
                u.swap_rows(p, r);
            }
            bool cleared = true;
            for (size_t i = r + 1; i < h.rows(); ++i) {
                if (h(i, c) == 0) continue;
                Int q = h(i, c) / h(r, c);  // truncated division keeps remainders small
                add_row_multiple(h, i, r, -q);
                add_row_multiple(u, i, r, -q);
                if (h(i, c) != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (h(r, c) == 0) continue;
        if (h(r, c) < 0) {
            negate_row(h, r);
            negate_row(u, r);
        }
        // Reduce entries above the pivot into [0, pivot).
        for (size_t i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
            add_row_multiple(h, i, r, -q);
            add_row_multiple(u, i, r, -q);
        }
        ++r;
    }
    return {h, u};
}

SnfResult smith_normal_form(const IntMat& m) {
    if (m.empty()) throw std::invalid_argument("smith_normal_form: empty matrix");
    IntMat s = m;
    IntMat u = IntMat::identity(m.rows());
    IntMat v = IntMat::identity(m.cols());

    auto add_col_multiple = [&](IntMat& mat, size_t dst, size_t src, const Int& f) {
        if (f == 0) return;
        for (size_t i = 0; i < mat.rows(); ++i) mat(i, dst) += f * mat(i, src);
    };

    const size_t n = std::min(s.rows(), s.cols());
    for (size_t k = 0; k < n; ++k) {
        while (true) {
            // Pick the smallest nonzero entry of the trailing block as pivot.
            size_t pi = s.rows(), pj = s.cols();
            for (size_t i = k; i < s.rows(); ++i)
                for (size_t j = k; j < s.cols(); ++j) {
                    if (s(i, j) == 0) continue;
                    if (pi == s.rows() || abs(s(i, j)) < abs(s(pi, pj))) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == s.rows()) goto done;  // trailing block is zero
            if (pi != k) {
                s.swap_rows(pi, k);
                u.swap_rows(pi, k);
            }
            if (pj != k) {
                s.swap_cols(pj, k);
                v.swap_cols(pj, k);
            }
            bool clean = true;
            for (size_t i = k + 1; i < s.rows(); ++i) {
                if (s(i, k) == 0) continue;
                Int q = s(i, k) / s(k, k);
                add_row_multiple(s, i, k, -q);
                add_row_multiple(u, i, k, -q);
                if (s(i, k) != 0) clean = false;
            }
            for (size_t j = k + 1; j < s.cols(); ++j) {
                if (s(k, j) == 0) continue;
                Int q = s(k, j) / s(k, k);
                add_col_multiple(s, j, k, -q);
                add_col_multiple(v, j, k, -q);
                if (s(k, j) != 0) clean = false;
            }
            if (!clean) continue;
            // Divisibility fix-up: pivot must divide the trailing block.
            bool divides = true;
            for (size_t i = k + 1; i < s.rows() && divides; ++i)
                for (size_t j = k + 1; j < s.cols() && divides; ++j)
                    if (s(i, j) % s(k, k) != 0) {
                        add_row_multiple(s, k, i, Int(1));
                        add_row_multiple(u, k, i, Int(1));
                        divides = false;
                    }
            if (divides) break;
        }
        if (s(k, k) < 0) {
            negate_row(s, k);
            negate_row(u, k);
        }
    }
done:
    return {s, u, v};
}

Int gcd_of(const IntVec& v) {
    Int g = 0;
    for (const auto& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntVec primitive_vector(const IntVec& v, bool keep_direction) {
    Int g = gcd_of(v);
    IntVec out = v;
    if (g > 1)
        for (auto& x : out) x /= g;
    if (!keep_direction) {
        for (const auto& x : out) {
            if (x == 0) continue;
            if (x < 0)
                for (auto& y : out) y = -y;
            break;
        }
    }
    return out;
}

IntVec primitive_vector(const RatVec& v, bool keep_direction) {
    // Clear denominators, then divide by the gcd.
    Int l = 1;
    for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    IntVec iv(v.size());
    for (size_t i = 0; i < v.size(); ++i) iv[i] = v[i].get_num() * (l / v[i].get_den());
    return primitive_vector(iv, keep_direction);
}

std::vector<IntVec> kernel_basis(const IntMat& m) {
    // Columns of V past the rank of the Smith form span the integer kernel;
    // V unimodular makes them a basis of the saturated kernel lattice.
    SnfResult snf = smith_normal_form(m);
    size_t r = 0;
    const size_t n = std::min(snf.s.rows(), snf.s.cols());
    while (r < n && snf.s(r, r) != 0) ++r;
    std::vector<IntVec> out;
    for (size_t j = r; j < m.cols(); ++j)
        out.push_back(primitive_vector(snf.v.col(j), /*keep_direction=*/false));
    return out;
}

std::vector<IntVec> kernel_basis(const RatMat& m) {
    // Scale each row to integers; the kernel is unchanged.
    IntMat im(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i) {
        Int l = 1;
        for (size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den().get_mpz_t());
        for (size_t j = 0; j < m.cols(); ++j)
            im(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
    }
    if (im.empty()) return {};
    return kernel_basis(im);
}

}  // namespace slag
