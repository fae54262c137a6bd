#pragma once

#include <string>
#include <vector>

#include "toriclink/matrix.hpp"

namespace toriclink {

// A face recorded as the (sorted) indices of the rays it contains plus
// its dimension. The empty index set is the zero face.
struct Face {
    std::vector<int> rays;
    int dim = 0;
    bool operator==(const Face&) const = default;
};

// Pointed rational polyhedral cone with primitive, pairwise distinct ray
// generators, none of which is a nonnegative combination of the others.
// Immutable after construction.
class Cone {
public:
    // Strict ingestion: duplicate or redundant generators are errors.
    static Cone from_rays(int ambient_rank, std::vector<IntVec> rays);
    // Normalizing ingestion: primitivizes, merges duplicates, drops
    // non-extreme generators. Used for fuzz hulls and projected images.
    static Cone hull(int ambient_rank, std::vector<IntVec> generators);

    int ambient_rank() const { return ambient_; }
    int dim() const { return dim_; }
    bool is_full_dim() const { return dim_ == ambient_; }
    const std::vector<IntVec>& rays() const { return rays_; }

    // Primitive inward facet normals as ambient functionals. For
    // full-dimensional cones these give the exact inequality description.
    const std::vector<IntVec>& facet_normals() const { return normals_; }

    // Saturated basis of span(cone) (dim x ambient) and of its orthogonal
    // complement ((ambient-dim) x ambient).
    const IntMatrix& span_basis() const { return span_basis_; }
    const IntMatrix& span_perp() const { return perp_; }

    // All faces including the zero face and the cone itself, sorted by
    // (dim, ray index set).
    const std::vector<Face>& faces() const;

    // Face counts indexed by dimension, 0..dim. For 4-dimensional cones
    // the Euler relation of the base polytope is verified.
    std::vector<long long> f_vector() const;

    bool contains(const IntVec& x) const;
    // Strict interior test; only meaningful for full-dimensional cones.
    bool contains_in_interior(const IntVec& x) const;

    // The same cone rewritten as a full-dimensional cone in Z^dim via the
    // saturated basis of its span.
    Cone restricted_to_span() const;

private:
    Cone() = default;
    static Cone build(int ambient_rank, std::vector<IntVec> rays, bool strict);

    int ambient_ = 0;
    int dim_ = 0;
    std::vector<IntVec> rays_;        // ambient coordinates
    std::vector<IntVec> local_rays_;  // coordinates in span_basis_
    std::vector<IntVec> local_normals_;
    std::vector<IntVec> normals_;     // lifted to ambient functionals
    IntMatrix span_basis_;
    IntMatrix perp_;
    mutable std::vector<Face> faces_;
    mutable bool faces_built_ = false;
};

// The inequality description of a pointed cone (primitive inward facet
// normals); construction has already rejected non-pointed input.
inline const std::vector<IntVec>& dual_description(const Cone& c) { return c.facet_normals(); }

}  // namespace toriclink
