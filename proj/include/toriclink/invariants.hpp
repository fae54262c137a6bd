#pragma once

#include <array>
#include <string>

#include "toriclink/projection.hpp"

namespace toriclink {

// The non-combinatorial invariant of a 7-dimensional link, extracted from
// the degree-2 and degree-3 Betti numbers. The two routes must agree; a
// disagreement is reported, never resolved silently.
long long extract_b2(const BettiTable& link_b, long long f1, long long f2);

struct SingularCensus {
    long long m = 0;                           // facets with more than 3 rays
    std::vector<long long> facet_edge_counts;  // rays per facet, in face order
};

// Census of the bottom-stratum circle components of a 4-dimensional
// cone's link: a component is rationally singular exactly when its facet
// polygon has more than 3 edges. The two counting identities
// sum(f1_i) = 2 f2 and sum(f1_i - 3) = 3 f1 - f2 - 6 are verified.
SingularCensus singular_components(const Cone& c);

struct ISBettiResult {
    std::array<long long, 8> b{};
    // m = 0 leaves the formula b1 = m - 1 without meaning; the engine
    // returns the rational-homology-sphere table and flags the regime.
    bool degenerate_regime = false;
};

ISBettiResult intersection_space_betti(long long f1, long long f2, long long b2, long long m);

// Independent oracle for simplicial complete fans: even Betti numbers
// from the h-vector of the boundary complex, odd Betti zero.
BettiTable h_vector_oracle(const Fan& f);

struct Check {
    std::string name;
    std::string formula;
    bool pass = false;
    std::string expected;
    std::string actual;
};

struct LinkReport {
    std::string name;
    long long f1 = 0, f2 = 0, facet_count = 0;
    BettiTable link_betti;
    bool has_b2 = false;
    long long b2 = 0;
    long long m = 0;
    std::vector<long long> facet_edge_counts;
    std::array<long long, 8> is_betti{};
    bool m_zero_regime = false;
    IntVec interior_ray;
    bool projection_ok = false;
    BettiTable base_betti;
    bool has_b_projection = false;
    long long b_projection = 0;
    std::vector<Check> checks;

    bool all_pass() const;
};

// Runs the whole pipeline on a pointed full-dimensional 4-cone and
// itemizes every identity check; failures are findings carried by the
// report, not crashes.
LinkReport verify_paper_formulas(const Cone& c, const std::string& name,
                                 const IntVec* ray_override = nullptr);

}  // namespace toriclink
