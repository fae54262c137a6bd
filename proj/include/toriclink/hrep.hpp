#pragma once

#include <vector>

#include "toriclink/matrix.hpp"

namespace toriclink {

// Facet normals of the full-dimensional cone spanned by `rays` in R^d,
// primitive and inward. Exact enumeration over (d-1)-subsets of the rays;
// adequate at the ray counts this engine sees (<= a few dozen).
std::vector<IntVec> supporting_normals(const std::vector<IntVec>& rays, int d);

// Extreme rays of {x in Z^n : eq x = 0, ineq x >= 0}. The feasible cone
// must be pointed; a nontrivial lineality space is reported by throwing.
std::vector<IntVec> extreme_rays_of_hrep(const std::vector<IntVec>& ineqs,
                                         const std::vector<IntVec>& eqs, int n);

}  // namespace toriclink
