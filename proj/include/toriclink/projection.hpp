#pragma once

#include <optional>
#include <string>

#include "toriclink/complex.hpp"

namespace toriclink {

// Primitive sum of the ray generators; always interior for pointed
// full-dimensional cones.
IntVec default_interior_ray(const Cone& c);

struct ProjectionResult {
    IntVec interior_ray;
    IntMatrix quotient_map;  // (d-1) x d, kernel exactly Z * interior_ray
    std::optional<Fan> base_fan;
    FanValidation validation;
    bool face_bijection_ok = false;
    std::string failure_detail;

    bool ok() const { return base_fan && validation.complete() && face_bijection_ok; }
};

// Projects every proper face of the cone along the interior ray into the
// quotient lattice; maximal cones of the image fan are the facet images.
// The face-image bijection and the fan axioms of the result are checked,
// never assumed.
ProjectionResult project_boundary_fan(const Cone& c, const IntVec& interior_ray);

struct GysinItem {
    std::string name;
    std::string formula;
    long long lhs = 0, rhs = 0;
    bool pass = false;
};

struct GysinReport {
    std::vector<GysinItem> items;
    bool all_pass() const;
};

// The five rank identities of the circle-bundle homology sequence linking
// a 7-dimensional link with its 6-dimensional base variety.
GysinReport gysin_check(const BettiTable& link_b, const BettiTable& base_b);

// rk ker(H_4(X) -> H_2(X)) under the cap product with the Euler class,
// read off the exact sequence as b4(link) - b3(base).
long long euler_class_kernel_rank(const BettiTable& link_b, const BettiTable& base_b);

}  // namespace toriclink
