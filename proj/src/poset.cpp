#include "toriclink/poset.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace toriclink {

std::vector<int> CellPoset::cells_of_dim(int k) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (cells[i].dim == k) out.push_back(static_cast<int>(i));
    return out;
}

int CellPoset::sign(int cell, int facet) const {
    auto it = incidence.find({cell, facet});
    if (it == incidence.end()) throw internal_error("poset: missing incidence sign");
    return it->second;
}

CellPoset variety_poset(const Fan& f) {
    CellPoset p;
    p.ambient_rank = f.ambient_rank();
    p.rays = f.rays();
    p.top_dim = f.ambient_rank();

    const auto& cones = f.all_cones();
    p.cells.resize(cones.size());
    p.facets.resize(cones.size());
    for (std::size_t i = 0; i < cones.size(); ++i) {
        p.cells[i].dim = f.ambient_rank() - cones[i].dim;
        p.cells[i].face_rays = cones[i].rays;
    }
    // cone sigma a facet of cone sigma' in the fan poset means cell(sigma')
    // is a facet of cell(sigma) in the reversed grading.
    for (const auto& [lo, hi] : f.coverings()) p.facets[lo].push_back(hi);
    for (auto& v : p.facets) std::sort(v.begin(), v.end());

    assign_incidence_signs(p);
    return p;
}

CellPoset link_base_poset(const Cone& c) {
    if (!c.is_full_dim())
        throw input_error("link base: cone must be full-dimensional (restrict to its span first)");
    if (c.dim() < 2) throw input_error("link base: cone dimension must be at least 2");

    CellPoset p;
    p.ambient_rank = c.ambient_rank();
    p.rays = c.rays();
    p.top_dim = c.dim() - 1;

    const auto& faces = c.faces();
    std::vector<int> face_to_cell(faces.size(), -1);
    for (std::size_t i = 0; i < faces.size(); ++i) {
        if (faces[i].dim == c.dim()) continue;  // the cone itself is not a cell
        PosetCell cell;
        cell.dim = c.dim() - 1 - faces[i].dim;
        cell.face_rays = faces[i].rays;
        face_to_cell[i] = static_cast<int>(p.cells.size());
        p.cells.push_back(std::move(cell));
    }
    p.facets.resize(p.cells.size());
    for (std::size_t a = 0; a < faces.size(); ++a) {
        if (face_to_cell[a] < 0) continue;
        for (std::size_t b = 0; b < faces.size(); ++b) {
            if (face_to_cell[b] < 0 || faces[a].dim + 1 != faces[b].dim) continue;
            if (std::includes(faces[b].rays.begin(), faces[b].rays.end(), faces[a].rays.begin(),
                              faces[a].rays.end()))
                p.facets[face_to_cell[a]].push_back(face_to_cell[b]);
        }
    }
    for (auto& v : p.facets) std::sort(v.begin(), v.end());

    assign_incidence_signs(p);
    return p;
}

void assign_incidence_signs(CellPoset& p) {
    std::vector<int> order(p.cells.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return p.cells[a].dim < p.cells[b].dim; });

    for (int c : order) {
        const int k = p.cells[c].dim;
        if (k == 0) continue;
        const std::vector<int>& ms = p.facets[c];

        if (k == 1) {
            // Diamond through the (virtual) empty cell: the two endpoint
            // signs are opposite; the lower id gets -1.
            if (ms.size() != 2)
                throw internal_error("sign assignment: 1-cell without exactly two endpoints");
            p.incidence[{c, ms[0]}] = -1;
            p.incidence[{c, ms[1]}] = +1;
            continue;
        }

        // Ridges two dimensions below c, with their middle cells.
        std::map<int, std::vector<int>> middles_of_ridge;
        for (int m : ms)
            for (int g : p.facets[m]) middles_of_ridge[g].push_back(m);
        for (auto& [g, mids] : middles_of_ridge) {
            std::sort(mids.begin(), mids.end());
            mids.erase(std::unique(mids.begin(), mids.end()), mids.end());
            if (mids.size() != 2)
                throw internal_error("sign assignment: diamond property violated at cell " +
                                     std::to_string(c) + " over ridge " + std::to_string(g));
        }

        // Propagate along the facet graph; the diamond constraint fixes
        // each relative sign.
        std::map<int, std::vector<std::pair<int, int>>> adj;  // m -> (m', required relative sign)
        for (const auto& [g, mids] : middles_of_ridge) {
            int rel = -p.sign(mids[0], g) * p.sign(mids[1], g);
            adj[mids[0]].push_back({mids[1], rel});
            adj[mids[1]].push_back({mids[0], rel});
        }
        std::map<int, int> x;
        for (int seed : ms) {
            if (x.count(seed)) continue;
            x[seed] = +1;
            std::deque<int> queue{seed};
            while (!queue.empty()) {
                int a = queue.front();
                queue.pop_front();
                for (const auto& [b, rel] : adj[a]) {
                    int want = x[a] * rel;
                    auto it = x.find(b);
                    if (it == x.end()) {
                        x[b] = want;
                        queue.push_back(b);
                    } else if (it->second != want) {
                        throw internal_error("sign assignment: inconsistent diamond under cell " +
                                             std::to_string(c));
                    }
                }
            }
        }
        for (int m : ms) p.incidence[{c, m}] = x.at(m);

        // Exhaustive re-check of every 2-interval under c.
        for (const auto& [g, mids] : middles_of_ridge) {
            int total = p.sign(c, mids[0]) * p.sign(mids[0], g) + p.sign(c, mids[1]) * p.sign(mids[1], g);
            if (total != 0)
                throw internal_error("sign assignment: d*d != 0 at cell " + std::to_string(c));
        }
    }
}

}  // namespace toriclink
