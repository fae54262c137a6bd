#pragma once

#include <vector>

#include "toriclink/coeff.hpp"

namespace toriclink {

// One chain-group basis vector: a cell together with a wedge index set of
// its fiber coordinates.
struct BasisElem {
    int cell = 0;
    std::vector<int> wedge;
};

struct BettiTable {
    std::vector<long long> b;
    long long euler() const;
    long long at(int k) const { return (k >= 0 && k < static_cast<int>(b.size())) ? b[k] : 0; }
    bool operator==(const BettiTable&) const = default;
};

// Total complex of the cell poset with exterior-power coefficients:
// C_k = (+) over cells of Lambda^(k - dim cell)(fiber), with boundary
// summing signed transition maps over facet cells. d*d = 0 is verified
// exactly on assembly.
struct ToricChainComplex {
    int top_degree = 0;
    std::vector<std::vector<BasisElem>> basis;  // per degree 0..top_degree
    std::vector<RatMatrix> boundary;            // boundary[k]: C_k -> C_(k-1), k >= 1
    long long dim(int k) const {
        return (k >= 0 && k <= top_degree) ? static_cast<long long>(basis[k].size()) : 0;
    }
};

ToricChainComplex assemble_complex(const CellPoset& p, const CoeffSystem& cs);

// Complete fan -> chain model of the compact toric variety; top degree 2n.
ToricChainComplex build_variety_complex(const Fan& f);

// Pointed full-dimensional cone in Z^d (d >= 2) -> chain model of the
// (2d-1)-dimensional link of the corresponding point.
ToricChainComplex build_link_complex(const Cone& c);

BettiTable betti(const ToricChainComplex& cx);

}  // namespace toriclink
