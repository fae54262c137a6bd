#include "toriclink/coeff.hpp"

#include "toriclink/linalg.hpp"

namespace toriclink {

std::vector<std::vector<int>> wedge_basis(int r, int j) {
    std::vector<std::vector<int>> out;
    if (j < 0 || j > r) return out;
    std::vector<int> idx(j);
    for (int i = 0; i < j; ++i) idx[i] = i;
    while (true) {
        out.push_back(idx);
        int i = j - 1;
        while (i >= 0 && idx[i] == r - j + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int t = i + 1; t < j; ++t) idx[t] = idx[t - 1] + 1;
    }
    if (j == 0) out = {{}};
    return out;
}

RatMatrix exterior_power_map(const RatMatrix& a, int j) {
    if (j < 0) throw input_error("exterior_power_map: negative degree");
    auto rows_sets = wedge_basis(a.rows(), j);
    auto cols_sets = wedge_basis(a.cols(), j);
    RatMatrix w(static_cast<int>(rows_sets.size()), static_cast<int>(cols_sets.size()));
    for (std::size_t ri = 0; ri < rows_sets.size(); ++ri)
        for (std::size_t ci = 0; ci < cols_sets.size(); ++ci) {
            RatMatrix minor(j, j);
            for (int x = 0; x < j; ++x)
                for (int y = 0; y < j; ++y) minor(x, y) = a(rows_sets[ri][x], cols_sets[ci][y]);
            w(static_cast<int>(ri), static_cast<int>(ci)) = j == 0 ? Rat(1) : determinant(minor);
        }
    return w;
}

const RatMatrix& CoeffSystem::transition(int cell, int facet) const {
    auto it = trans.find({cell, facet});
    if (it == trans.end()) throw internal_error("coeff system: missing transition map");
    return it->second;
}

CoeffSystem build_coeff_system(const CellPoset& p) {
    CoeffSystem cs;
    const int n = p.ambient_rank;
    cs.proj.reserve(p.cells.size());
    for (const PosetCell& cell : p.cells) {
        if (cell.face_rays.empty()) {
            cs.proj.push_back(IntMatrix::identity(n));
            continue;
        }
        std::vector<IntVec> gens;
        for (int r : cell.face_rays) gens.push_back(p.rays[r]);
        cs.proj.push_back(quotient_projection(n, saturate(gens, n)));
    }
    for (std::size_t c = 0; c < p.cells.size(); ++c) {
        for (int m : p.facets[c]) {
            auto q = solve_left(to_rational(cs.proj[c]), to_rational(cs.proj[m]));
            if (!q)
                throw internal_error(
                    "coeff system: face span not nested along a covering relation (poset bug)");
            cs.trans.emplace(std::make_pair(static_cast<int>(c), m), std::move(*q));
        }
    }
    return cs;
}

}  // namespace toriclink
