#pragma once

#include "fourfold/matrix.hpp"

#include <vector>

namespace fourfold::intlat {

// Symmetric integer bilinear form on a free module of finite rank.
// Rank 0 (the zero lattice) is legal.
class GramMatrix {
public:
    GramMatrix() = default;
    // Error("shape") unless m is square and symmetric.
    explicit GramMatrix(IntMatrix m);
    static GramMatrix from_rows(std::initializer_list<std::vector<Int>> rows);

    std::size_t dim() const { return entries_.rows(); }
    const IntMatrix& entries() const { return entries_; }
    const Int& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

    bool operator==(const GramMatrix&) const = default;

private:
    IntMatrix entries_;
};

// A set of generator rows expressed in the coordinates of an ambient form.
// Every generator row must have length ambient.dim().
struct SublatticeSpec {
    GramMatrix ambient;
    IntMatrix generators;  // k x ambient.dim()
};

SublatticeSpec make_spec(GramMatrix ambient, const std::vector<std::vector<Int>>& generators);

// left * input * right == d, with left/right unimodular and d diagonal,
// nonnegative, each entry dividing the next, zeros last.
struct SnfResult {
    IntMatrix d;
    IntMatrix left;
    IntMatrix right;
    std::vector<Int> elementary_divisors;  // diagonal of d, length min(rows, cols)
};

// Invariant factors > 1 of the finite group (dual lattice)/(lattice),
// each dividing the next; their product is |det| of the form.
struct DiscriminantGroup {
    std::vector<Int> invariant_factors;
    bool operator==(const DiscriminantGroup&) const = default;
};

// Gram of the generators under the ambient pairing: G[i][j] = g_i . A . g_j^T.
GramMatrix gram_from_generators(const SublatticeSpec& spec);

// Exact determinant (fraction-free Bareiss). det of the 0x0 matrix is 1.
Int determinant(const IntMatrix& m);
Int determinant(const GramMatrix& g);

// Sylvester: all leading principal minors strictly positive.
bool is_positive_definite(const GramMatrix& g);

// Smith normal form. Deterministic pivoting: smallest absolute value among
// the nonzero entries of the working submatrix, ties broken by lowest
// (row, col).
SnfResult smith_normal_form(const IntMatrix& m);

// Error("degenerate") when det == 0.
DiscriminantGroup discriminant_group(const GramMatrix& g);

// Basis rows of the saturated integer kernel of x -> (x . A . g_i^T)_i.
// An empty generator list yields the full standard basis.
IntMatrix orthogonal_complement(const SublatticeSpec& spec);

// True iff the generator rows span a saturated sublattice (all SNF
// elementary divisors of the generator matrix are 1).
// Error("rank") if the generators are dependent over the rationals.
bool is_primitive(const SublatticeSpec& spec);

// Block-diagonal sum of two forms.
GramMatrix direct_sum(const GramMatrix& g1, const GramMatrix& g2);

// Rank over the rationals (count of nonzero SNF divisors).
std::size_t rank(const IntMatrix& m);

// Basis rows of the saturation of the row span: (Q-span of rows) ∩ Z^n.
IntMatrix saturation(const IntMatrix& rows);

// Canonical row Hermite form of the lattice generated by the rows: pivots
// positive, pivot columns strictly increasing, entries above each pivot
// reduced into [0, pivot), zero rows dropped. Equal lattices give equal
// output, so this compares row spans.
IntMatrix row_hnf(const IntMatrix& rows);

}  // namespace fourfold::intlat
