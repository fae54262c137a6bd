#include <doctest.h>

#include "toriclink/coeff.hpp"
#include "toriclink/fuzz.hpp"
#include "toriclink/linalg.hpp"

using namespace toriclink;

namespace {

IntVec v(std::initializer_list<long long> xs) {
    IntVec out;
    for (long long x : xs) out.push_back(Int(x));
    return out;
}

RatMatrix random_matrix(FuzzRng& rng, int rows, int cols) {
    RatMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = Rat(rng.uniform(-3, 3), rng.uniform(1, 2));
    return m;
}

}  // namespace

TEST_CASE("wedge_basis: lexicographic order and binomial size") {
    auto b = wedge_basis(4, 2);
    REQUIRE(b.size() == 6);
    CHECK(b.front() == std::vector<int>{0, 1});
    CHECK(b.back() == std::vector<int>{2, 3});
    CHECK(wedge_basis(3, 0) == std::vector<std::vector<int>>{{}});
    CHECK(wedge_basis(2, 3).empty());
}

TEST_CASE("exterior_power_map: degree zero and identity") {
    RatMatrix a(3, 2);
    a(0, 0) = 5;
    RatMatrix w0 = exterior_power_map(a, 0);
    REQUIRE(w0.rows() == 1);
    REQUIRE(w0.cols() == 1);
    CHECK(w0(0, 0) == 1);

    RatMatrix id = to_rational(IntMatrix::identity(4));
    for (int j = 0; j <= 4; ++j) {
        RatMatrix w = exterior_power_map(id, j);
        CHECK(w.rows() == w.cols());
        for (int i = 0; i < w.rows(); ++i)
            for (int k = 0; k < w.cols(); ++k) CHECK(w(i, k) == (i == k ? 1 : 0));
    }
}

TEST_CASE("exterior_power_map: explicit 2-minors") {
    RatMatrix a(2, 3);
    a(0, 0) = 1; a(0, 1) = 0; a(0, 2) = 2;
    a(1, 0) = 0; a(1, 1) = 1; a(1, 2) = 3;
    RatMatrix w = exterior_power_map(a, 2);
    REQUIRE(w.rows() == 1);
    REQUIRE(w.cols() == 3);
    CHECK(w(0, 0) == 1);
    CHECK(w(0, 1) == 3);
    CHECK(w(0, 2) == -2);
}

TEST_CASE("exterior_power_map is functorial") {
    FuzzRng rng(5);
    for (int t = 0; t < 20; ++t) {
        int p = static_cast<int>(rng.uniform(1, 4));
        int q = static_cast<int>(rng.uniform(1, 4));
        int r = static_cast<int>(rng.uniform(1, 4));
        RatMatrix a = random_matrix(rng, q, p), b = random_matrix(rng, p, r);
        for (int j = 0; j <= std::min({p, q, r}); ++j)
            CHECK(exterior_power_map(a.mul(b), j) ==
                  exterior_power_map(a, j).mul(exterior_power_map(b, j)));
    }
}

TEST_CASE("exterior_power_map of a surjection stays surjective") {
    FuzzRng rng(9);
    for (int t = 0; t < 20; ++t) {
        int q = static_cast<int>(rng.uniform(1, 3));
        int p = q + static_cast<int>(rng.uniform(0, 2));
        RatMatrix a = random_matrix(rng, q, p);
        if (rank(a) != q) continue;
        for (int j = 0; j <= q; ++j) {
            RatMatrix w = exterior_power_map(a, j);
            CHECK(rank(w) == w.rows());
        }
    }
}

TEST_CASE("build_coeff_system: zero face carries the identity presentation") {
    Cone c = Cone::from_rays(2, {v({1, 0}), v({1, 2})});
    CellPoset p = link_base_poset(c);
    CoeffSystem cs = build_coeff_system(p);
    for (std::size_t i = 0; i < p.cells.size(); ++i)
        if (p.cells[i].face_rays.empty()) CHECK(cs.proj[i] == IntMatrix::identity(2));
}

TEST_CASE("build_coeff_system: total collapse gives the 0 x 1 transition") {
    // cell of ray (1,0) against the cells of the full 2-cones above it
    CellPoset p = variety_poset(Fan::from_data(2, {v({1, 0}), v({0, 1}), v({-1, -1})},
                                               {{0, 1}, {1, 2}, {0, 2}}));
    CoeffSystem cs = build_coeff_system(p);
    bool found = false;
    for (std::size_t i = 0; i < p.cells.size(); ++i) {
        if (p.cells[i].face_rays != std::vector<int>{0}) continue;
        for (int m : p.facets[i]) {
            const RatMatrix& q = cs.transition(static_cast<int>(i), m);
            CHECK(q.rows() == 0);
            CHECK(q.cols() == 1);
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("build_coeff_system: transitions satisfy Q P = P' exactly") {
    // includes the covering pair ray (1,1,1) < 2-face {(1,1,1),(1,0,0)}
    Cone c = Cone::from_rays(3, {v({1, 1, 1}), v({1, 0, 0}), v({0, 1, 0})});
    CellPoset p = link_base_poset(c);
    CoeffSystem cs = build_coeff_system(p);
    for (std::size_t i = 0; i < p.cells.size(); ++i)
        for (int m : p.facets[i]) {
            RatMatrix lhs = cs.transition(static_cast<int>(i), m).mul(to_rational(cs.proj[i]));
            CHECK(lhs == to_rational(cs.proj[m]));
        }
}

TEST_CASE("coefficient transitions agree across diamonds, in all degrees") {
    Cone c = Cone::from_rays(4, {v({0, 0, 0, 1}), v({1, 0, 0, 1}), v({0, 1, 0, 1}), v({1, 1, 0, 1}),
                                 v({0, 0, 1, 1}), v({1, 0, 1, 1}), v({0, 1, 1, 1}), v({1, 1, 1, 1})});
    CellPoset p = link_base_poset(c);
    CoeffSystem cs = build_coeff_system(p);
    for (std::size_t bot = 0; bot < p.cells.size(); ++bot) {
        std::map<int, std::vector<int>> tops;  // top cell -> middles
        for (int m : p.facets[bot])
            for (int t : p.facets[m]) tops[t].push_back(m);
        for (const auto& [t, mids] : tops) {
            REQUIRE(mids.size() == 2);
            for (int j = 0; j <= cs.fiber_rank(static_cast<int>(bot)); ++j) {
                RatMatrix r1 = exterior_power_map(cs.transition(mids[0], t), j)
                                   .mul(exterior_power_map(cs.transition(static_cast<int>(bot), mids[0]), j));
                RatMatrix r2 = exterior_power_map(cs.transition(mids[1], t), j)
                                   .mul(exterior_power_map(cs.transition(static_cast<int>(bot), mids[1]), j));
                CHECK(r1 == r2);
            }
        }
    }
}
