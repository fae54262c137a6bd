#pragma once

#include <optional>
#include <vector>

#include "toriclink/matrix.hpp"

namespace toriclink {

// Exact rank over Q (fraction-free Bareiss elimination on a row-scaled
// integer copy).
int rank(const RatMatrix& m);
int rank(const IntMatrix& m);

// Basis of the right kernel {v : m v = 0}; size == cols - rank.
std::vector<RatVec> kernel_basis(const RatMatrix& m);
std::vector<RatVec> kernel_basis(const IntMatrix& m);

struct HnfResult {
    IntMatrix h;  // row-style Hermite normal form, pivots positive, entries above pivots reduced
    IntMatrix u;  // unimodular, u * m == h
};
HnfResult hermite_normal_form(const IntMatrix& m);

// Rows form a basis of {x in Z^n : a x = 0}; the lattice is saturated by
// construction.
IntMatrix integer_kernel(const IntMatrix& a);

// Z-basis (canonical HNF rows) of span_Q(gens) cap Z^n.
IntMatrix saturate(const std::vector<IntVec>& gens, int n);

// Surjection Z^n -> Z^(n-k) with kernel exactly the (saturated) row
// lattice of s. Coordinates fixed by the HNF completion of s.
IntMatrix quotient_projection(int n, const IntMatrix& s);

// Solves x a = b exactly; empty when inconsistent.
std::optional<RatMatrix> solve_left(const RatMatrix& a, const RatMatrix& b);

// Coordinates of v in the row basis b (v must lie in the row span);
// integral when v is in the lattice generated by the rows.
std::optional<RatVec> coordinates_in_basis(const IntMatrix& b, const IntVec& v);

Rat determinant(const RatMatrix& m);

}  // namespace toriclink
