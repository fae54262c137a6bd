#pragma once

#include <array>
#include <string>
#include <vector>

#include "toriclink/cone.hpp"

namespace toriclink {

// A cone of a fan, recorded by its (sorted) global ray indices.
struct FanCone {
    std::vector<int> rays;
    int dim = 0;
    bool operator==(const FanCone&) const = default;
};

// Fan given by shared primitive rays plus maximal cones as ray-index
// subsets; the closure under faces is derived on construction.
class Fan {
public:
    static Fan from_data(int ambient_rank, std::vector<IntVec> rays,
                         std::vector<std::vector<int>> max_cones);

    int ambient_rank() const { return ambient_; }
    const std::vector<IntVec>& rays() const { return rays_; }
    const std::vector<std::vector<int>>& max_cones() const { return max_cones_; }
    const std::vector<Cone>& max_cone_objs() const { return max_objs_; }

    // All cones including the zero cone, sorted by (dim, ray index set).
    const std::vector<FanCone>& all_cones() const { return cones_; }
    // Pairs (a, b) of indices into all_cones() with cone a a facet of cone b.
    const std::vector<std::array<int, 2>>& coverings() const { return coverings_; }

    int cone_index(const std::vector<int>& sorted_rays) const;  // -1 when absent

private:
    int ambient_ = 0;
    std::vector<IntVec> rays_;
    std::vector<std::vector<int>> max_cones_;
    std::vector<Cone> max_objs_;
    std::vector<FanCone> cones_;
    std::vector<std::array<int, 2>> coverings_;
};

struct FanValidation {
    bool max_cones_full_dim = true;
    std::vector<int> low_dim_cones;

    bool intersections_ok = true;
    std::vector<std::array<int, 2>> bad_pairs;
    std::vector<std::string> intersection_failures;

    bool ridges_paired = true;
    std::vector<std::string> ridge_failures;
    bool dual_graph_connected = true;

    bool complete() const {
        return max_cones_full_dim && intersections_ok && ridges_paired && dual_graph_connected;
    }
    std::string summary() const;
};

// Checks the fan axioms (pairwise intersections are faces of both cones)
// and completeness (full-dimensional maximal cones, every ridge shared by
// exactly two of them, connected dual graph). Failures are reported, not
// thrown.
FanValidation validate_fan(const Fan& f);

}  // namespace toriclink
