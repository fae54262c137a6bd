#include <doctest.h>

#include <algorithm>
#include <set>

#include "toriclink/fan.hpp"
#include "toriclink/hrep.hpp"
#include "toriclink/linalg.hpp"

using namespace toriclink;

namespace {

IntVec v(std::initializer_list<long long> xs) {
    IntVec out;
    for (long long x : xs) out.push_back(Int(x));
    return out;
}

Cone cube4() {
    return Cone::from_rays(4, {v({0, 0, 0, 1}), v({1, 0, 0, 1}), v({0, 1, 0, 1}), v({1, 1, 0, 1}),
                               v({0, 0, 1, 1}), v({1, 0, 1, 1}), v({0, 1, 1, 1}), v({1, 1, 1, 1})});
}

Fan cp2() {
    return Fan::from_data(2, {v({1, 0}), v({0, 1}), v({-1, -1})}, {{0, 1}, {1, 2}, {0, 2}});
}

}  // namespace

TEST_CASE("dual_description: first orthant is self-dual") {
    Cone c = Cone::from_rays(3, {v({1, 0, 0}), v({0, 1, 0}), v({0, 0, 1})});
    auto normals = dual_description(c);
    std::set<IntVec> got(normals.begin(), normals.end());
    std::set<IntVec> want{v({1, 0, 0}), v({0, 1, 0}), v({0, 0, 1})};
    CHECK(got == want);
}

TEST_CASE("dual_description: cone over the unit square has 4 facets") {
    Cone c = Cone::from_rays(3, {v({0, 0, 1}), v({1, 0, 1}), v({0, 1, 1}), v({1, 1, 1})});
    auto normals = dual_description(c);
    CHECK(normals.size() == 4);
    // oracle: each normal bounds every ray and its active rays span a
    // facet hyperplane
    for (const IntVec& a : normals) {
        std::vector<IntVec> active;
        for (const IntVec& r : c.rays()) {
            Int s = dot(a, r);
            CHECK(s >= 0);
            if (s == 0) active.push_back(r);
        }
        CHECK(rank(IntMatrix::from_rows(active, 3)) == 2);
    }
}

TEST_CASE("dual_description: 2-dim cone normals") {
    Cone c = Cone::from_rays(2, {v({1, 0}), v({1, 2})});
    auto normals = dual_description(c);
    std::set<IntVec> got(normals.begin(), normals.end());
    std::set<IntVec> want{v({0, 1}), v({2, -1})};
    CHECK(got == want);
}

TEST_CASE("dual_description round-trip: normals reconstruct the rays") {
    Cone c = cube4();
    auto rays = extreme_rays_of_hrep(c.facet_normals(), {}, 4);
    std::set<IntVec> got(rays.begin(), rays.end());
    std::set<IntVec> want(c.rays().begin(), c.rays().end());
    CHECK(got == want);
}

TEST_CASE("cone rejects bad input") {
    CHECK_THROWS_AS(Cone::from_rays(2, {v({0, 0})}), input_error);
    CHECK_THROWS_AS(Cone::from_rays(2, {v({1, 0}), v({-1, 0})}), input_error);  // not pointed
    CHECK_THROWS_AS(Cone::from_rays(2, {v({1, 0}), v({2, 0})}), input_error);   // duplicate after normalize
    CHECK_THROWS_AS(Cone::from_rays(2, {v({1, 0}), v({0, 1}), v({1, 1})}), input_error);  // redundant
    // hull mode drops the redundant generator instead
    Cone h = Cone::hull(2, {v({1, 0}), v({0, 1}), v({1, 1})});
    CHECK(h.rays().size() == 2);
}

TEST_CASE("face_lattice: simplex 4-cone is boolean") {
    Cone c = Cone::from_rays(4, {v({1, 0, 0, 0}), v({0, 1, 0, 0}), v({0, 0, 1, 0}), v({0, 0, 0, 1})});
    auto f = c.f_vector();
    REQUIRE(f.size() == 5);
    CHECK(f[0] == 1);
    CHECK(f[1] == 4);
    CHECK(f[2] == 6);
    CHECK(f[3] == 4);
    CHECK(f[4] == 1);
}

TEST_CASE("face_lattice: cone over the 3-cube") {
    Cone c = cube4();
    auto f = c.f_vector();
    CHECK(f[1] == 8);
    CHECK(f[2] == 12);
    CHECK(f[3] == 6);
}

TEST_CASE("face_lattice: 2-dim cone has 2 rays and a zero face") {
    Cone c = Cone::from_rays(2, {v({1, 0}), v({1, 2})});
    auto f = c.f_vector();
    CHECK(f[0] == 1);
    CHECK(f[1] == 2);
    CHECK(f[2] == 1);
}

TEST_CASE("face lattice is graded with the diamond property") {
    for (Cone c : {cube4(), Cone::from_rays(4, {v({0, 0, 0, 1}), v({1, 0, 0, 1}), v({0, 1, 0, 1}),
                                                v({1, 1, 0, 1}), v({0, 0, 1, 1})})}) {
        const auto& faces = c.faces();
        // every length-2 interval has exactly two middle elements
        for (std::size_t a = 0; a < faces.size(); ++a)
            for (std::size_t b = 0; b < faces.size(); ++b) {
                if (faces[a].dim + 2 != faces[b].dim) continue;
                if (!std::includes(faces[b].rays.begin(), faces[b].rays.end(), faces[a].rays.begin(),
                                   faces[a].rays.end()))
                    continue;
                int middles = 0;
                for (const Face& m : faces) {
                    if (m.dim != faces[a].dim + 1) continue;
                    if (std::includes(m.rays.begin(), m.rays.end(), faces[a].rays.begin(),
                                      faces[a].rays.end()) &&
                        std::includes(faces[b].rays.begin(), faces[b].rays.end(), m.rays.begin(),
                                      m.rays.end()))
                        ++middles;
                }
                CHECK(middles == 2);
            }
    }
}

TEST_CASE("validate_fan: projective plane fan is complete") {
    FanValidation val = validate_fan(cp2());
    CHECK(val.complete());
    CHECK(val.intersections_ok);
    CHECK(val.ridges_paired);
    CHECK(val.dual_graph_connected);
}

TEST_CASE("validate_fan: the first orthant alone is not complete") {
    Fan f = Fan::from_data(2, {v({1, 0}), v({0, 1})}, {{0, 1}});
    FanValidation val = validate_fan(f);
    CHECK_FALSE(val.complete());
    CHECK(val.intersections_ok);  // a single cone has no bad pairs
    CHECK_FALSE(val.ridges_paired);
}

TEST_CASE("validate_fan: overlapping cones fail the intersection axiom") {
    // cone{(1,0),(0,1)} and cone{(1,1),(-1,2)} overlap in a 2-dim region
    Fan f = Fan::from_data(2, {v({1, 0}), v({0, 1}), v({1, 1}), v({-1, 2})}, {{0, 1}, {2, 3}});
    FanValidation val = validate_fan(f);
    CHECK_FALSE(val.intersections_ok);
    CHECK_FALSE(val.bad_pairs.empty());
}

TEST_CASE("fan ingestion errors name the offender") {
    CHECK_THROWS_WITH_AS(Fan::from_data(2, {v({1, 0}), v({0, 0})}, {{0, 1}}),
                         doctest::Contains("ray 1"), input_error);
    CHECK_THROWS_WITH_AS(Fan::from_data(2, {v({1, 0}), v({0, 1})}, {{0, 3}}),
                         doctest::Contains("out of range"), input_error);
    CHECK_THROWS_AS(Fan::from_data(2, {v({1, 0}), v({0, 1}), v({-1, 0})}, {{0, 1}}), input_error);
}

TEST_CASE("f_vector: 3-cones over k-gons have f1 = f2 = k") {
    Cone c = Cone::from_rays(3, {v({0, 0, 1}), v({1, 0, 1}), v({1, 1, 1}), v({0, 1, 1})});
    auto f = c.f_vector();
    CHECK(f[1] == 4);
    CHECK(f[2] == 4);
}
