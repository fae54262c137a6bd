#include "toriclink/fan.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "toriclink/hrep.hpp"
#include "toriclink/linalg.hpp"

namespace toriclink {

Fan Fan::from_data(int ambient_rank, std::vector<IntVec> rays,
                   std::vector<std::vector<int>> max_cones) {
    Fan f;
    f.ambient_ = ambient_rank;

    std::set<IntVec> seen;
    for (std::size_t i = 0; i < rays.size(); ++i) {
        if (static_cast<int>(rays[i].size()) != ambient_rank)
            throw input_error("fan: ray " + std::to_string(i) + " has wrong length");
        if (is_zero_vec(rays[i]))
            throw input_error("fan: ray " + std::to_string(i) + " is the zero vector");
        rays[i] = primitive(std::move(rays[i]));
        if (!seen.insert(rays[i]).second)
            throw input_error("fan: duplicate ray at index " + std::to_string(i));
    }
    f.rays_ = std::move(rays);

    std::set<std::vector<int>> cone_keys;
    std::vector<bool> used(f.rays_.size(), false);
    for (std::size_t ci = 0; ci < max_cones.size(); ++ci) {
        std::vector<int>& idx = max_cones[ci];
        if (idx.empty()) throw input_error("fan: max_cones[" + std::to_string(ci) + "] is empty");
        std::sort(idx.begin(), idx.end());
        if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
            throw input_error("fan: repeated ray index in max_cones[" + std::to_string(ci) + "]");
        std::vector<IntVec> cone_rays;
        for (int r : idx) {
            if (r < 0 || r >= static_cast<int>(f.rays_.size()))
                throw input_error("fan: ray index " + std::to_string(r) + " out of range in max_cones[" +
                                  std::to_string(ci) + "]");
            used[r] = true;
            cone_rays.push_back(f.rays_[r]);
        }
        if (!cone_keys.insert(idx).second)
            throw input_error("fan: max_cones[" + std::to_string(ci) + "] repeats an earlier cone");
        try {
            f.max_objs_.push_back(Cone::from_rays(ambient_rank, cone_rays));
        } catch (const input_error& e) {
            throw input_error("fan: max_cones[" + std::to_string(ci) + "]: " + e.what());
        }
    }
    for (std::size_t i = 0; i < used.size(); ++i)
        if (!used[i]) throw input_error("fan: ray " + std::to_string(i) + " is not used by any max cone");
    for (const auto& a : cone_keys)
        for (const auto& b : cone_keys)
            if (a != b && std::includes(b.begin(), b.end(), a.begin(), a.end()))
                throw input_error("fan: a listed max cone is a face of another");
    f.max_cones_ = std::move(max_cones);

    // Close under faces: collect every face of every maximal cone under
    // global ray indices, then the covering pairs of the whole poset.
    std::map<std::vector<int>, int> dim_of;
    dim_of[{}] = 0;  // the zero cone
    std::set<std::pair<std::vector<int>, std::vector<int>>> cover_keys;
    for (std::size_t ci = 0; ci < f.max_objs_.size(); ++ci) {
        const Cone& mc = f.max_objs_[ci];
        const std::vector<int>& global = f.max_cones_[ci];
        const auto& faces = mc.faces();
        std::vector<std::vector<int>> gsets(faces.size());
        for (std::size_t fi = 0; fi < faces.size(); ++fi) {
            std::vector<int> g;
            for (int local : faces[fi].rays) g.push_back(global[local]);
            std::sort(g.begin(), g.end());
            dim_of[g] = faces[fi].dim;
            gsets[fi] = std::move(g);
        }
        for (std::size_t a = 0; a < faces.size(); ++a)
            for (std::size_t b = 0; b < faces.size(); ++b) {
                if (faces[a].dim + 1 != faces[b].dim) continue;
                if (std::includes(gsets[b].begin(), gsets[b].end(), gsets[a].begin(), gsets[a].end()))
                    cover_keys.insert({gsets[a], gsets[b]});
            }
    }
    for (const auto& [key, d] : dim_of) f.cones_.push_back({key, d});
    std::sort(f.cones_.begin(), f.cones_.end(), [](const FanCone& a, const FanCone& b) {
        return std::tie(a.dim, a.rays) < std::tie(b.dim, b.rays);
    });
    for (const auto& [lo, hi] : cover_keys)
        f.coverings_.push_back({f.cone_index(lo), f.cone_index(hi)});
    std::sort(f.coverings_.begin(), f.coverings_.end());
    return f;
}

int Fan::cone_index(const std::vector<int>& sorted_rays) const {
    for (std::size_t i = 0; i < cones_.size(); ++i)
        if (cones_[i].rays == sorted_rays) return static_cast<int>(i);
    return -1;
}

namespace {

std::string describe_rays(const std::vector<int>& idx) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
    os << "}";
    return os.str();
}

// The exact test of the fan axiom for one pair: enumerate the extreme
// rays of the intersection and require them to name a face of each cone.
bool intersection_is_common_face(const Fan& fan, int ci, int cj, std::string& why) {
    const Cone& a = fan.max_cone_objs()[ci];
    const Cone& b = fan.max_cone_objs()[cj];
    std::vector<IntVec> ineqs = a.facet_normals();
    ineqs.insert(ineqs.end(), b.facet_normals().begin(), b.facet_normals().end());
    std::vector<IntVec> eqs;
    for (int i = 0; i < a.span_perp().rows(); ++i) eqs.push_back(a.span_perp().row(i));
    for (int i = 0; i < b.span_perp().rows(); ++i) eqs.push_back(b.span_perp().row(i));

    std::vector<IntVec> meet;
    try {
        meet = extreme_rays_of_hrep(ineqs, eqs, fan.ambient_rank());
    } catch (const internal_error&) {
        why = "intersection contains a line";
        return false;
    }

    auto face_of = [&](const Cone& c, std::vector<int>& local_out) {
        local_out.clear();
        for (const IntVec& r : meet) {
            auto it = std::find(c.rays().begin(), c.rays().end(), r);
            if (it == c.rays().end()) return false;
            local_out.push_back(static_cast<int>(it - c.rays().begin()));
        }
        std::sort(local_out.begin(), local_out.end());
        for (const Face& f : c.faces())
            if (f.rays == local_out) return true;
        return false;
    };

    std::vector<int> la, lb;
    if (!face_of(a, la)) {
        why = "intersection is not a face of max_cones[" + std::to_string(ci) + "]";
        return false;
    }
    if (!face_of(b, lb)) {
        why = "intersection is not a face of max_cones[" + std::to_string(cj) + "]";
        return false;
    }
    return true;
}

}  // namespace

FanValidation validate_fan(const Fan& f) {
    FanValidation v;
    const int n = f.ambient_rank();
    const auto& maxes = f.max_cone_objs();

    for (std::size_t i = 0; i < maxes.size(); ++i)
        if (maxes[i].dim() != n) {
            v.max_cones_full_dim = false;
            v.low_dim_cones.push_back(static_cast<int>(i));
        }

    for (std::size_t i = 0; i < maxes.size(); ++i)
        for (std::size_t j = i + 1; j < maxes.size(); ++j) {
            std::string why;
            if (!intersection_is_common_face(f, static_cast<int>(i), static_cast<int>(j), why)) {
                v.intersections_ok = false;
                v.bad_pairs.push_back({static_cast<int>(i), static_cast<int>(j)});
                v.intersection_failures.push_back("max_cones[" + std::to_string(i) + "] vs max_cones[" +
                                                  std::to_string(j) + "]: " + why);
            }
        }

    // Completeness: every ridge of a maximal cone is shared by exactly two
    // maximal cones and the adjacency graph is connected.
    if (n == 0) {
        // The point fan covers R^0.
        return v;
    }
    std::map<std::vector<int>, std::vector<int>> ridge_owners;
    for (std::size_t ci = 0; ci < maxes.size(); ++ci) {
        const auto& global = f.max_cones()[ci];
        for (const Face& face : maxes[ci].faces()) {
            if (face.dim != n - 1) continue;
            std::vector<int> key;
            for (int local : face.rays) key.push_back(global[local]);
            std::sort(key.begin(), key.end());
            ridge_owners[key].push_back(static_cast<int>(ci));
        }
    }
    std::vector<int> comp(maxes.size());
    for (std::size_t i = 0; i < comp.size(); ++i) comp[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
    for (const auto& [key, owners] : ridge_owners) {
        if (owners.size() != 2) {
            v.ridges_paired = false;
            v.ridge_failures.push_back("ridge " + describe_rays(key) + " belongs to " +
                                       std::to_string(owners.size()) + " max cones");
        } else {
            comp[find(owners[0])] = find(owners[1]);
        }
    }
    for (std::size_t i = 1; i < comp.size(); ++i)
        if (find(static_cast<int>(i)) != find(0)) v.dual_graph_connected = false;
    if (maxes.empty()) v.dual_graph_connected = false;
    return v;
}

std::string FanValidation::summary() const {
    std::ostringstream os;
    if (complete()) {
        os << "complete fan: all checks passed";
        return os.str();
    }
    if (!max_cones_full_dim) os << "max cones of low dimension: " << low_dim_cones.size() << "; ";
    for (const auto& s : intersection_failures) os << s << "; ";
    for (const auto& s : ridge_failures) os << s << "; ";
    if (!dual_graph_connected) os << "dual graph disconnected; ";
    return os.str();
}

}  // namespace toriclink
