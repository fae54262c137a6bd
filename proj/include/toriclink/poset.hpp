#pragma once

#include <map>
#include <vector>

#include "toriclink/fan.hpp"

namespace toriclink {

struct PosetCell {
    int dim = 0;                 // cell dimension in the CW ball
    std::vector<int> face_rays;  // ray indices of the originating cone face
};

// Regular CW poset of a ball: cells graded by dimension, covering
// relations dropping dimension by one, incidence signs with d*d = 0.
struct CellPoset {
    int ambient_rank = 0;
    std::vector<IntVec> rays;
    std::vector<PosetCell> cells;
    std::vector<std::vector<int>> facets;            // facets[c] = facet cell ids
    std::map<std::pair<int, int>, int> incidence;    // (cell, facet) -> +-1
    int top_dim = 0;

    std::vector<int> cells_of_dim(int k) const;
    int sign(int cell, int facet) const;
};

// Dual-polytope poset of a complete fan: one cell per cone, dimension
// n - dim(cone); the zero cone gives the n-ball's top cell.
CellPoset variety_poset(const Fan& f);

// Base polytope of the link of a pointed full-dimensional cone in Z^d:
// one cell per proper face, dimension d - 1 - dim(face). Requires d >= 2.
CellPoset link_base_poset(const Cone& c);

// Chooses incidence values in {+1,-1} with signed d*d = 0 on every
// length-2 interval, deterministically in the cell ordering. Throws when
// the poset is not graded with the diamond property (never for cone face
// lattices).
void assign_incidence_signs(CellPoset& p);

}  // namespace toriclink
