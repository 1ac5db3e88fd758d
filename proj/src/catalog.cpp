#include "fourfold/catalog.hpp"

namespace fourfold::catalog {

using intlat::GramMatrix;
using intlat::SublatticeSpec;

Int labelling_discriminant(const LabellingData& data) { return 3 * data.q - data.p * data.p; }

GramMatrix k_ab(const Int& a, const Int& b) {
    if (a < -1 || a > 1) throw Error("constraint", "a must be -1, 0 or 1");
    if ((a - b) % 2 != 0) throw Error("constraint", "a and b must have equal parity");
    return GramMatrix::from_rows({{3, 6, a}, {6, 18, 1}, {a, 1, b}});
}

GramMatrix admissible_a_matrix(const Int& b) {
    if (b % 2 != 0) throw Error("constraint", "b must be even");
    return GramMatrix::from_rows({{3, 0, 0}, {0, b, 1}, {0, 1, 6}});
}

namespace {

// Pairing of (h^2, u, v, w) with u.v = uv, u.w = uw, v.w = vw and all
// scroll classes of square 4, orthogonal to h^2.
GramMatrix scroll_ambient(const Int& uv, const Int& uw, const Int& vw) {
    return GramMatrix::from_rows({{3, 0, 0, 0}, {0, 4, uv, uw}, {0, uv, 4, vw}, {0, uw, vw, 4}});
}

GramMatrix scroll_span(const GramMatrix& ambient) {
    // {h^2, first class, difference of the other two}
    SublatticeSpec spec{ambient, IntMatrix::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, -1}})};
    return gram_from_generators(spec);
}

}  // namespace

GramMatrix scroll_kx_gram() {
    // basis (h^2, a_k, a_i, a_j): a_k.a_i = 2, a_k.a_j = 1, a_i.a_j = 1
    return scroll_span(scroll_ambient(2, 1, 1));
}

GramMatrix scroll_ky_gram() {
    // basis (h^2, b_n, b_l, b_m): b_n.b_l = 2, b_n.b_m = 1, b_l.b_m = 1
    return scroll_span(scroll_ambient(2, 1, 1));
}

LabellingData scroll_labelling() { return {3, 7}; }

Int scroll_alpha_square() {
    // alpha = T - h^2 inside the (h^2, T) pairing
    GramMatrix pairing = GramMatrix::from_rows({{3, scroll_labelling().p},
                                                {scroll_labelling().p, scroll_labelling().q}});
    SublatticeSpec spec{pairing, IntMatrix::from_rows({{-1, 1}})};
    return gram_from_generators(spec)(0, 0);
}

LabellingData eckardt_f0_labelling() {
    GramMatrix g = eckardt_gram();
    return {g(0, 1), g(1, 1)};  // (h^2.F_0, F_0.F_0)
}

GramMatrix eckardt_gram() {
    // Known pairings; unknowns y = h^2.F_i and x = F_i.F_j (i,j >= 1) are
    // forced by the relation r = h^2 - 3F_0 + F_1 + ... + F_6 pairing to
    // zero with h^2 and with each F_j:
    //   <r, h^2> = 0:  3 - 9 + 6y = 0
    //   <r, F_j> = 0:  y - 9 + 3 + 5x = 0
    // i.e. the system [[6,0],[1,5]] (y,x)^T = (6,6)^T, solved exactly.
    const Int det = 6 * 5 - 0 * 1;
    const Int y_num = 6 * 5 - 0 * 6;
    const Int x_num = 6 * 6 - 1 * 6;
    if (y_num % det != 0 || x_num % det != 0)
        throw Error("internal", "eckardt completion is not integral");
    const Int y = y_num / det;
    const Int x = x_num / det;

    IntMatrix g(8, 8);
    g(0, 0) = 3;
    g(0, 1) = g(1, 0) = 3;
    g(1, 1) = 7;
    for (std::size_t i = 2; i < 8; ++i) {
        g(0, i) = g(i, 0) = y;
        g(1, i) = g(i, 1) = 3;
        g(i, i) = 3;
        for (std::size_t j = i + 1; j < 8; ++j) g(i, j) = g(j, i) = x;
    }

    // The relation must pair to zero with all eight generators.
    std::vector<Int> r = eckardt_relation();
    for (std::size_t j = 0; j < 8; ++j) {
        Int pairing = 0;
        for (std::size_t i = 0; i < 8; ++i) pairing += r[i] * g(i, j);
        if (pairing != 0) throw Error("internal", "eckardt relation does not pair to zero");
    }
    return GramMatrix(std::move(g));
}

std::vector<Int> eckardt_relation() { return {1, -3, 1, 1, 1, 1, 1, 1}; }

GramMatrix e8_2() {
    IntMatrix g(8, 8);
    for (std::size_t i = 0; i < 8; ++i) g(i, i) = 2;
    for (std::size_t i = 0; i + 1 < 7; ++i) g(i, i + 1) = g(i + 1, i) = -1;
    g(4, 7) = g(7, 4) = -1;  // branch node
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) g(i, j) *= 2;
    return GramMatrix(std::move(g));
}

}  // namespace fourfold::catalog
