#pragma once

#include "fourfold/intlat.hpp"

namespace fourfold::catalog {

// Rank-2 labelling <h^2, v> data: p = v.h^2, q = v.v.
struct LabellingData {
    Int p, q;
};

// det [[3, p], [p, q]] = 3q - p^2.
Int labelling_discriminant(const LabellingData& data);

// Rank-3 form [[3,6,a],[6,18,1],[a,1,b]]. Requires a in {-1,0,1} and
// a ≡ b (mod 2); Error("constraint") otherwise.
intlat::GramMatrix k_ab(const Int& a, const Int& b);

// Rank-3 admissible form [[3,0,0],[0,b,1],[0,1,6]] for even b;
// Error("constraint") for odd b.
intlat::GramMatrix admissible_a_matrix(const Int& b);

// Rank-3 form spanned by {h^2, a_k, a_i - a_j} inside the rank-4 pairing
// of (h^2, a_k, a_i, a_j), where the a's are cubic-scroll classes:
// a.a = 4, a.h^2 = 0, a_i.a_j = 1, a_k.a_i = 2, a_k.a_j = 1.
intlat::GramMatrix scroll_kx_gram();

// Same construction from the partner's scroll classes (b_l, b_m, b_n with
// b_l.b_m = 1, b_n.b_l = 2, b_n.b_m = 1), spanned by {h^2, b_n, b_l - b_m}.
intlat::GramMatrix scroll_ky_gram();

// The cubic-scroll pairing on (h^2, T): T.T = 7, T.h^2 = 3, h^2.h^2 = 3.
LabellingData scroll_labelling();

// (T - h^2)^2 expanded under the scroll pairing; equals 4.
Int scroll_alpha_square();

// The labelling read off the Eckardt configuration's (h^2, F_0) pair.
LabellingData eckardt_f0_labelling();

// 8x8 pairing of (h^2, F_0, ..., F_6) for a fourfold with an Eckardt
// point: F_0.F_0 = 7, F_0.F_i = 3, F_i.F_i = 3, F_0.h^2 = 3, h^2.h^2 = 3.
// The remaining entries (h^2.F_i and F_i.F_j for i,j >= 1) are solved
// from the relation h^2 = 3F_0 - F_1 - ... - F_6 at construction time and
// the relation is re-checked to pair to zero with every generator, so the
// matrix has rank 7 and determinant 0.
intlat::GramMatrix eckardt_gram();

// The relation vector h^2 - 3F_0 + F_1 + ... + F_6 in the eckardt basis.
std::vector<Int> eckardt_relation();

// E8 root form with all pairings doubled: even, rank 8, determinant 256,
// discriminant group (Z/2)^8. Basis: simple-root chain 1-2-...-7 with the
// branch node attached to node 5, diagonal 2s and -1 bonds, then doubled.
intlat::GramMatrix e8_2();

}  // namespace fourfold::catalog
