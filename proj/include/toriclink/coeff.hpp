#pragma once

#include <map>
#include <vector>

#include "toriclink/poset.hpp"

namespace toriclink {

// Sorted index subsets naming the basis of the j-th exterior power of a
// rank-r space, in lexicographic order; size C(r, j).
std::vector<std::vector<int>> wedge_basis(int r, int j);

// Induced map on j-th exterior powers: entry (S, T) is the j x j minor of
// a with rows S and columns T. Shape C(rows,j) x C(cols,j); j = 0 gives
// the 1x1 identity.
RatMatrix exterior_power_map(const RatMatrix& a, int j);

// Per cell, the presentation Q^n -> Q^n/span(face) in the coordinates
// fixed by HNF completion, plus the forced transition map along every
// covering relation.
struct CoeffSystem {
    std::vector<IntMatrix> proj;                      // proj[cell]: (n - dim face) x n
    std::map<std::pair<int, int>, RatMatrix> trans;   // (cell, facet cell) -> Q with Q proj[c] = proj[f]
    int fiber_rank(int cell) const { return proj[cell].rows(); }
    const RatMatrix& transition(int cell, int facet) const;
};

CoeffSystem build_coeff_system(const CellPoset& p);

}  // namespace toriclink
