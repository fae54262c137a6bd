#include "toriclink/invariants.hpp"

#include <sstream>

#include "toriclink/linalg.hpp"

namespace toriclink {

long long extract_b2(const BettiTable& link_b, long long f1, long long f2) {
    const long long via_b2 = f1 - 4 - link_b.at(2);
    const long long via_b3 = 3 * f1 - f2 - 6 - link_b.at(3);
    if (via_b2 != via_b3) {
        std::ostringstream os;
        os << "extract_b2: degree-2 route gives " << via_b2 << ", degree-3 route gives " << via_b3;
        throw consistency_error(os.str());
    }
    if (via_b2 < 0) throw consistency_error("extract_b2: negative value");
    return via_b2;
}

SingularCensus singular_components(const Cone& c) {
    if (c.dim() != 4 || !c.is_full_dim())
        throw input_error("singular_components: expects a full-dimensional 4-cone");
    auto fv = c.f_vector();
    const long long f1 = fv[1], f2 = fv[2];

    SingularCensus out;
    for (const Face& f : c.faces()) {
        if (f.dim != 3) continue;
        long long edges = static_cast<long long>(f.rays.size());
        out.facet_edge_counts.push_back(edges);
        if (edges > 3) ++out.m;
    }
    long long edge_sum = 0, excess = 0;
    for (long long e : out.facet_edge_counts) {
        edge_sum += e;
        excess += e - 3;
    }
    if (edge_sum != 2 * f2 || excess != 3 * f1 - f2 - 6)
        throw internal_error("singular_components: facet census identity failed (face lattice bug)");
    return out;
}

ISBettiResult intersection_space_betti(long long f1, long long f2, long long b2, long long m) {
    ISBettiResult r;
    if (m == 0) {
        r.b = {1, 0, 0, 0, 0, 0, 0, 0};
        r.degenerate_regime = true;
        return r;
    }
    const long long mid_low = f2 - 4 - b2;
    const long long mid_high = 3 * f1 - f2 - 6 - b2;
    r.b = {1, m - 1, mid_low, mid_high, mid_high, mid_low, m - 1, 0};
    for (long long v : r.b)
        if (v < 0) throw consistency_error("intersection_space_betti: negative entry (outside regime)");
    return r;
}

BettiTable h_vector_oracle(const Fan& f) {
    const int n = f.ambient_rank();
    for (std::size_t i = 0; i < f.max_cone_objs().size(); ++i) {
        const Cone& c = f.max_cone_objs()[i];
        if (static_cast<int>(c.rays().size()) != c.dim())
            throw input_error("h_vector_oracle: max_cones[" + std::to_string(i) + "] is not simplicial");
    }
    // face_count[i] = number of i-dimensional cones; the zero cone gives
    // the (-1)-dimensional face of the boundary complex.
    std::vector<long long> face_count(n + 1, 0);
    for (const FanCone& c : f.all_cones()) ++face_count[c.dim];

    BettiTable t;
    t.b.assign(2 * n + 1, 0);
    for (int k = 0; k <= n; ++k) {
        long long h = 0;
        for (int i = 0; i <= k; ++i) {
            long long fi = (i == 0) ? 1 : face_count[i];
            long long term = binomial(n - i, k - i) * fi;
            h += ((k - i) % 2 ? -term : term);
        }
        t.b[2 * k] = h;
    }
    return t;
}

bool LinkReport::all_pass() const {
    for (const Check& c : checks)
        if (!c.pass) return false;
    return true;
}

namespace {

std::string str(long long v) { return std::to_string(v); }

std::string str(const std::vector<long long>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

}  // namespace

LinkReport verify_paper_formulas(const Cone& c, const std::string& name, const IntVec* ray_override) {
    if (c.dim() != 4 || !c.is_full_dim())
        throw input_error("verify: expects a pointed full-dimensional 4-cone");

    LinkReport rep;
    rep.name = name;
    auto add = [&](const std::string& check, const std::string& formula, long long actual,
                   long long expected) {
        rep.checks.push_back({check, formula, actual == expected, str(expected), str(actual)});
    };
    auto add_fail = [&](const std::string& check, const std::string& formula, const std::string& why) {
        rep.checks.push_back({check, formula, false, "", why});
    };

    auto fv = c.f_vector();
    rep.f1 = fv[1];
    rep.f2 = fv[2];
    rep.facet_count = fv[3];
    add("euler_vertex_count", "facets == f2 - f1 + 2", rep.facet_count, rep.f2 - rep.f1 + 2);

    try {
        rep.link_betti = betti(build_link_complex(c));
    } catch (const std::exception& e) {
        add_fail("link_complex", "d o d == 0 and ranks computable", e.what());
        return rep;
    }
    add("link_b7", "b7 == 1", rep.link_betti.at(7), 1);
    add("link_b6", "b6 == 0", rep.link_betti.at(6), 0);
    add("link_b5", "b5 == f1 - 4", rep.link_betti.at(5), rep.f1 - 4);
    add("link_b4", "b4 == 3*f1 - f2 - 6", rep.link_betti.at(4), 3 * rep.f1 - rep.f2 - 6);
    add("link_b1", "b1 == 0", rep.link_betti.at(1), 0);
    add("link_b0", "b0 == 1", rep.link_betti.at(0), 1);
    add("link_euler", "euler characteristic == 0", rep.link_betti.euler(), 0);
    add("duality_shift", "b5 - b2 == b4 - b3", rep.link_betti.at(5) - rep.link_betti.at(2),
        rep.link_betti.at(4) - rep.link_betti.at(3));

    try {
        rep.b2 = extract_b2(rep.link_betti, rep.f1, rep.f2);
        rep.has_b2 = true;
        add("b2_routes_agree", "f1 - 4 - b2(L) == 3*f1 - f2 - 6 - b3(L)", rep.f1 - 4 - rep.link_betti.at(2),
            3 * rep.f1 - rep.f2 - 6 - rep.link_betti.at(3));
        add("b2_nonnegative", "b2 >= 0", rep.b2 >= 0 ? 1 : 0, 1);
    } catch (const consistency_error& e) {
        add_fail("b2_routes_agree", "f1 - 4 - b2(L) == 3*f1 - f2 - 6 - b3(L)", e.what());
    }

    try {
        SingularCensus census = singular_components(c);
        rep.m = census.m;
        rep.facet_edge_counts = census.facet_edge_counts;
        long long edge_sum = 0, excess = 0;
        for (long long e : census.facet_edge_counts) {
            edge_sum += e;
            excess += e - 3;
        }
        add("facet_census_edges", "sum(f1_i) == 2*f2", edge_sum, 2 * rep.f2);
        add("facet_census_excess", "sum(f1_i - 3) == 3*f1 - f2 - 6", excess, 3 * rep.f1 - rep.f2 - 6);
    } catch (const std::exception& e) {
        add_fail("facet_census_edges", "sum(f1_i) == 2*f2", e.what());
    }

    if (rep.has_b2) {
        try {
            ISBettiResult is = intersection_space_betti(rep.f1, rep.f2, rep.b2, rep.m);
            rep.is_betti = is.b;
            rep.m_zero_regime = is.degenerate_regime;
            if (is.degenerate_regime) {
                add("intersection_space_regime", "m == 0: rational homology sphere table", 1, 1);
            } else {
                add("intersection_space_b0", "IS b0 == 1", is.b[0], 1);
                add("intersection_space_b7", "IS b7 == 0", is.b[7], 0);
                bool palindrome = true;
                for (int k = 1; k <= 6; ++k)
                    if (is.b[k] != is.b[7 - k]) palindrome = false;
                add("intersection_space_palindrome", "IS b_k == IS b_(7-k) for k = 1..6", palindrome ? 1 : 0,
                    1);
            }
        } catch (const consistency_error& e) {
            add_fail("intersection_space_table", "table entries nonnegative", e.what());
        }
    }

    try {
        IntVec tau = ray_override ? primitive(*ray_override) : default_interior_ray(c);
        ProjectionResult proj = project_boundary_fan(c, tau);
        rep.interior_ray = proj.interior_ray;
        rep.projection_ok = proj.ok();
        add("projection_fan_complete", "projected fan passes all fan axioms and completeness",
            proj.base_fan && proj.validation.complete() ? 1 : 0, 1);
        add("projection_face_bijection", "proper faces <-> projected cones", proj.face_bijection_ok ? 1 : 0,
            1);
        if (!proj.ok()) {
            add_fail("projection", "projected base fan is a complete fan",
                     proj.failure_detail.empty() ? proj.validation.summary() : proj.failure_detail);
            return rep;
        }
        bool kernel_ok = is_zero_vec(proj.quotient_map.apply(proj.interior_ray)) &&
                         rank(proj.quotient_map) == c.dim() - 1;
        add("projection_kernel", "ker(quotient map) == Z * interior_ray", kernel_ok ? 1 : 0, 1);
        add("projection_ray_count", "rays of projected fan == f1",
            static_cast<long long>(proj.base_fan->rays().size()), rep.f1);
        add("projection_max_cone_count", "max cones of projected fan == facet count",
            static_cast<long long>(proj.base_fan->max_cones().size()), rep.facet_count);

        rep.base_betti = betti(build_variety_complex(*proj.base_fan));
        GysinReport gysin = gysin_check(rep.link_betti, rep.base_betti);
        for (const GysinItem& g : gysin.items)
            add(g.name, g.formula, g.lhs, g.rhs);

        long long b = euler_class_kernel_rank(rep.link_betti, rep.base_betti);
        rep.b_projection = b;
        rep.has_b_projection = true;
        add("euler_class_kernel_nonnegative", "b4(L) - b3(X) >= 0", b >= 0 ? 1 : 0, 1);
        if (rep.has_b2) add("projection_b_equals_b2", "b == b2", b, rep.b2);
    } catch (const std::exception& e) {
        add_fail("projection", "projected base fan is a complete fan", e.what());
    }

    return rep;
}

}  // namespace toriclink
