#include "toriclink/complex.hpp"

#include <map>

#include "toriclink/linalg.hpp"

namespace toriclink {

long long BettiTable::euler() const {
    long long e = 0;
    for (std::size_t k = 0; k < b.size(); ++k) e += (k % 2 ? -1 : 1) * b[k];
    return e;
}

ToricChainComplex assemble_complex(const CellPoset& p, const CoeffSystem& cs) {
    ToricChainComplex cx;
    for (std::size_t c = 0; c < p.cells.size(); ++c)
        cx.top_degree = std::max(cx.top_degree, p.cells[c].dim + cs.fiber_rank(static_cast<int>(c)));

    cx.basis.resize(cx.top_degree + 1);
    // offsets[k][cell] = column of the cell's first wedge vector in degree k
    std::vector<std::map<int, int>> offsets(cx.top_degree + 1);
    for (int k = 0; k <= cx.top_degree; ++k) {
        for (std::size_t c = 0; c < p.cells.size(); ++c) {
            const int j = k - p.cells[c].dim;
            const int r = cs.fiber_rank(static_cast<int>(c));
            if (j < 0 || j > r) continue;
            offsets[k][static_cast<int>(c)] = static_cast<int>(cx.basis[k].size());
            for (auto& w : wedge_basis(r, j)) cx.basis[k].push_back({static_cast<int>(c), w});
        }
    }

    std::map<std::pair<std::pair<int, int>, int>, RatMatrix> wedge_cache;
    auto wedge_map = [&](int c, int m, int j) -> const RatMatrix& {
        auto key = std::make_pair(std::make_pair(c, m), j);
        auto it = wedge_cache.find(key);
        if (it == wedge_cache.end())
            it = wedge_cache.emplace(key, exterior_power_map(cs.transition(c, m), j)).first;
        return it->second;
    };

    cx.boundary.resize(cx.top_degree + 1);
    for (int k = 1; k <= cx.top_degree; ++k) {
        RatMatrix d(static_cast<int>(cx.basis[k - 1].size()), static_cast<int>(cx.basis[k].size()));
        for (const auto& [c, col0] : offsets[k]) {
            const int j = k - p.cells[c].dim;
            for (int m : p.facets[c]) {
                if (j > cs.fiber_rank(m)) continue;
                const int sign = p.sign(c, m);
                const RatMatrix& w = wedge_map(c, m, j);
                const int row0 = offsets[k - 1].at(m);
                for (int s = 0; s < w.rows(); ++s)
                    for (int t = 0; t < w.cols(); ++t)
                        if (w(s, t) != 0) d(row0 + s, col0 + t) = sign * w(s, t);
            }
        }
        cx.boundary[k] = std::move(d);
    }

    for (int k = 2; k <= cx.top_degree; ++k)
        if (!cx.boundary[k - 1].mul(cx.boundary[k]).is_zero())
            throw internal_error("chain complex: d o d != 0 at degree " + std::to_string(k));
    return cx;
}

ToricChainComplex build_variety_complex(const Fan& f) {
    CellPoset p = variety_poset(f);
    ToricChainComplex cx = assemble_complex(p, build_coeff_system(p));
    if (f.ambient_rank() > 0 && cx.top_degree != 2 * f.ambient_rank())
        throw internal_error("variety complex: unexpected top degree");
    return cx;
}

ToricChainComplex build_link_complex(const Cone& c) {
    if (!c.is_full_dim())
        throw input_error("link complex: cone must be full-dimensional in its lattice");
    if (c.dim() < 2) throw input_error("link complex: cone dimension must be at least 2");
    CellPoset p = link_base_poset(c);
    ToricChainComplex cx = assemble_complex(p, build_coeff_system(p));
    if (cx.top_degree != 2 * c.dim() - 1)
        throw internal_error("link complex: unexpected top degree");
    return cx;
}

BettiTable betti(const ToricChainComplex& cx) {
    std::vector<int> ranks(cx.top_degree + 2, 0);
    for (int k = 1; k <= cx.top_degree; ++k) ranks[k] = rank(cx.boundary[k]);
    BettiTable t;
    t.b.resize(cx.top_degree + 1);
    for (int k = 0; k <= cx.top_degree; ++k) {
        t.b[k] = cx.dim(k) - ranks[k] - ranks[k + 1];
        if (t.b[k] < 0) throw internal_error("betti: negative rank (rank computation bug)");
    }
    return t;
}

}  // namespace toriclink
