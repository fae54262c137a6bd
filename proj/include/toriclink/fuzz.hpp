#pragma once

#include <cstdint>
#include <random>

#include "toriclink/cone.hpp"

namespace toriclink {

// mt19937_64 with a hand-rolled bounded draw; the standard distributions
// are implementation-defined and would break cross-platform determinism.
class FuzzRng {
public:
    explicit FuzzRng(std::uint64_t seed) : eng_(seed) {}
    long long uniform(long long lo, long long hi) {
        return lo + static_cast<long long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::mt19937_64 eng_;
};

// Random pointed full-dimensional d-cone (d = 2, 3 or 4). For d >= 3 the
// cone is the hull of distinct height-1 lattice points in a small box,
// resampled until the hull is (d-1)-dimensional with 4..12 vertices for
// d = 4.
Cone random_link_cone(FuzzRng& rng, int d);

// Cone in Z^3 over a lattice k-gon (points on a parabola are in strictly
// convex position), for exact control of the edge count.
Cone polygon_cone(int k);

}  // namespace toriclink
