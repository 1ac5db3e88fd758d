#include "fourfold/intlat.hpp"

#include <algorithm>

namespace fourfold::intlat {

GramMatrix::GramMatrix(IntMatrix m) : entries_(std::move(m)) {
    if (!entries_.is_square()) throw Error("shape", "Gram matrix must be square");
    if (!entries_.is_symmetric()) throw Error("shape", "Gram matrix must be symmetric");
}

GramMatrix GramMatrix::from_rows(std::initializer_list<std::vector<Int>> rows) {
    return GramMatrix(IntMatrix::from_rows(rows));
}

SublatticeSpec make_spec(GramMatrix ambient, const std::vector<std::vector<Int>>& generators) {
    const std::size_t n = ambient.dim();
    for (const auto& g : generators)
        if (g.size() != n) throw Error("shape", "generator length differs from ambient rank");
    return SublatticeSpec{std::move(ambient), IntMatrix::from_rows(generators, n)};
}

static void check_spec(const SublatticeSpec& spec) {
    if (spec.generators.cols() != spec.ambient.dim())
        throw Error("shape", "generator length differs from ambient rank");
}

GramMatrix gram_from_generators(const SublatticeSpec& spec) {
    check_spec(spec);
    const IntMatrix& g = spec.generators;
    IntMatrix prod = g * spec.ambient.entries() * g.transposed();
    return GramMatrix(std::move(prod));
}

Int determinant(const IntMatrix& m) {
    if (!m.is_square()) throw Error("shape", "determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int sign = 1;
    Int prev = 1;  // Bareiss: divisions by the previous pivot are exact
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

Int determinant(const GramMatrix& g) { return determinant(g.entries()); }

bool is_positive_definite(const GramMatrix& g) {
    // Pivot-free Bareiss; the k-th pivot equals the k-th leading principal
    // minor, so a pivot <= 0 ends the scan.
    const std::size_t n = g.dim();
    IntMatrix a = g.entries();
    Int prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (a(k, k) <= 0) return false;
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return true;
}

namespace {

std::size_t nonzero_divisors(const SnfResult& snf) {
    std::size_t rk = 0;
    for (const Int& e : snf.elementary_divisors)
        if (e != 0) ++rk;
    return rk;
}

// Pivot choice: smallest |entry| among nonzero entries of the submatrix
// with rows >= t, cols >= t; ties by lowest row, then lowest col.
bool find_pivot(const IntMatrix& a, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            Int mag = abs(a(i, j));
            if (!found || mag < best) {
                found = true;
                best = mag;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
    const std::size_t r = m.rows(), c = m.cols();
    IntMatrix a = m;
    IntMatrix left = IntMatrix::identity(r);
    IntMatrix right = IntMatrix::identity(c);
    const std::size_t steps = std::min(r, c);

    for (std::size_t t = 0; t < steps; ++t) {
        std::size_t pi = 0, pj = 0;
        if (!find_pivot(a, t, pi, pj)) break;  // submatrix all zero; trailing zeros stay
        a.swap_rows(t, pi);
        left.swap_rows(t, pi);
        a.swap_cols(t, pj);
        right.swap_cols(t, pj);

        for (;;) {
            // One reduction pass over column t and row t.
            bool clean = true;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (a(i, t) == 0) continue;
                Int q = a(i, t) / a(t, t);  // truncated; remainder |.| < |pivot|
                a.row_axpy(i, t, q);
                left.row_axpy(i, t, q);
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (a(t, j) == 0) continue;
                Int q = a(t, j) / a(t, t);
                a.col_axpy(j, t, q);
                right.col_axpy(j, t, q);
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) {
                // Some remainder is now strictly smaller than the pivot.
                std::size_t qi = 0, qj = 0;
                find_pivot(a, t, qi, qj);
                a.swap_rows(t, qi);
                left.swap_rows(t, qi);
                a.swap_cols(t, qj);
                right.swap_cols(t, qj);
                continue;
            }
            // Divisibility sweep: the pivot must divide the whole rest.
            bool fixed = false;
            for (std::size_t i = t + 1; i < r && !fixed; ++i)
                for (std::size_t j = t + 1; j < c && !fixed; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        a.row_axpy(t, i, Int(-1));  // fold row i into row t
                        left.row_axpy(t, i, Int(-1));
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (a(t, t) < 0) {
            a.negate_row(t);
            left.negate_row(t);
        }
    }

    SnfResult res{std::move(a), std::move(left), std::move(right), {}};
    res.elementary_divisors.reserve(steps);
    for (std::size_t i = 0; i < steps; ++i) res.elementary_divisors.push_back(res.d(i, i));
    return res;
}

DiscriminantGroup discriminant_group(const GramMatrix& g) {
    if (determinant(g) == 0) throw Error("degenerate", "form has determinant 0");
    SnfResult snf = smith_normal_form(g.entries());
    DiscriminantGroup group;
    for (const Int& e : snf.elementary_divisors)
        if (e > 1) group.invariant_factors.push_back(e);
    return group;
}

namespace {

// Rows i of `left` with i >= rank(m) form a basis of the saturated left
// kernel {x : x . m == 0}.
IntMatrix left_kernel(const IntMatrix& m) {
    SnfResult snf = smith_normal_form(m);
    std::size_t rk = nonzero_divisors(snf);
    IntMatrix basis(m.rows() - rk, m.rows());
    for (std::size_t i = rk; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.rows(); ++j) basis(i - rk, j) = snf.left(i, j);
    return basis;
}

}  // namespace

IntMatrix orthogonal_complement(const SublatticeSpec& spec) {
    check_spec(spec);
    IntMatrix pairing = spec.ambient.entries() * spec.generators.transposed();
    return left_kernel(pairing);
}

bool is_primitive(const SublatticeSpec& spec) {
    check_spec(spec);
    const IntMatrix& g = spec.generators;
    SnfResult snf = smith_normal_form(g);
    if (nonzero_divisors(snf) != g.rows()) throw Error("rank", "generators are dependent over the rationals");
    return std::all_of(snf.elementary_divisors.begin(), snf.elementary_divisors.end(),
                       [](const Int& e) { return e == 1; });
}

GramMatrix direct_sum(const GramMatrix& g1, const GramMatrix& g2) {
    const std::size_t n1 = g1.dim(), n2 = g2.dim();
    IntMatrix out(n1 + n2, n1 + n2);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j) out(i, j) = g1(i, j);
    for (std::size_t i = 0; i < n2; ++i)
        for (std::size_t j = 0; j < n2; ++j) out(n1 + i, n1 + j) = g2(i, j);
    return GramMatrix(std::move(out));
}

std::size_t rank(const IntMatrix& m) { return nonzero_divisors(smith_normal_form(m)); }

IntMatrix saturation(const IntMatrix& rows) {
    // sat(rowspan) is the set of integer vectors orthogonal (standard dot
    // product) to the integer kernel of rows^T; both kernels come from SNF.
    IntMatrix k = left_kernel(rows.transposed());  // spans {x : rows . x^T == 0}
    return left_kernel(k.transposed());
}

IntMatrix row_hnf(const IntMatrix& rows) {
    IntMatrix a = rows;
    const std::size_t r = a.rows(), c = a.cols();
    std::size_t pivot_row = 0;
    for (std::size_t j = 0; j < c && pivot_row < r; ++j) {
        // Clear column j below pivot_row with the Euclidean algorithm.
        for (;;) {
            std::size_t best = r;
            for (std::size_t i = pivot_row; i < r; ++i)
                if (a(i, j) != 0 && (best == r || abs(a(i, j)) < abs(a(best, j)))) best = i;
            if (best == r) break;  // column clear
            a.swap_rows(pivot_row, best);
            bool reduced = true;
            for (std::size_t i = pivot_row + 1; i < r; ++i) {
                if (a(i, j) == 0) continue;
                Int q = a(i, j) / a(pivot_row, j);
                a.row_axpy(i, pivot_row, q);
                if (a(i, j) != 0) reduced = false;
            }
            if (reduced) break;
        }
        if (a(pivot_row, j) == 0) continue;
        if (a(pivot_row, j) < 0) a.negate_row(pivot_row);
        // Reduce entries above the pivot into [0, pivot).
        for (std::size_t i = 0; i < pivot_row; ++i) {
            Int q = a(i, j) / a(pivot_row, j);
            if (a(i, j) - q * a(pivot_row, j) < 0) q -= 1;  // floor division
            a.row_axpy(i, pivot_row, q);
        }
        ++pivot_row;
    }
    IntMatrix out(pivot_row, c);
    for (std::size_t i = 0; i < pivot_row; ++i)
        for (std::size_t j = 0; j < c; ++j) out(i, j) = a(i, j);
    return out;
}

}  // namespace fourfold::intlat
