#include "toriclink/projection.hpp"

#include <algorithm>
#include <map>

#include "toriclink/linalg.hpp"

namespace toriclink {

IntVec default_interior_ray(const Cone& c) {
    IntVec sum(c.ambient_rank(), Int(0));
    for (const IntVec& r : c.rays()) sum = add(sum, r);
    sum = primitive(std::move(sum));
    if (!c.contains_in_interior(sum))
        throw internal_error("default_interior_ray: ray sum not interior (upstream bug)");
    return sum;
}

ProjectionResult project_boundary_fan(const Cone& c, const IntVec& interior_ray) {
    if (!c.is_full_dim())
        throw input_error("projection: cone must be full-dimensional in its lattice");
    const int d = c.dim();
    ProjectionResult out;
    out.interior_ray = primitive(interior_ray);
    if (is_zero_vec(out.interior_ray)) throw input_error("projection: zero interior ray");
    if (!c.contains_in_interior(out.interior_ray))
        throw input_error("projection: the given ray is not in the interior of the cone");

    out.quotient_map = quotient_projection(d, IntMatrix::from_rows({out.interior_ray}, d));

    // Project the rays; for an interior direction distinct extreme rays
    // stay distinct, but images are still merged by equality and the
    // bijection is verified below rather than assumed.
    std::vector<IntVec> base_rays;
    std::map<IntVec, int> ray_index;
    std::vector<int> image_of(c.rays().size());
    for (std::size_t i = 0; i < c.rays().size(); ++i) {
        IntVec img = primitive(out.quotient_map.apply(c.rays()[i]));
        if (is_zero_vec(img)) {
            out.failure_detail = "ray " + std::to_string(i) + " projects to zero";
            return out;
        }
        auto it = ray_index.find(img);
        if (it == ray_index.end()) {
            it = ray_index.emplace(img, static_cast<int>(base_rays.size())).first;
            base_rays.push_back(img);
        }
        image_of[i] = it->second;
    }

    std::vector<std::vector<int>> max_sets;
    for (const Face& f : c.faces()) {
        if (f.dim != d - 1) continue;
        std::vector<int> s;
        for (int r : f.rays) s.push_back(image_of[r]);
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        max_sets.push_back(std::move(s));
    }

    try {
        out.base_fan = Fan::from_data(d - 1, base_rays, max_sets);
    } catch (const input_error& e) {
        out.failure_detail = std::string("projected facets do not assemble into a fan: ") + e.what();
        return out;
    }
    out.validation = validate_fan(*out.base_fan);

    // Face-image map: proper faces of the cone vs cones of the base fan.
    std::map<std::vector<int>, int> image_count;
    bool bijective = true;
    std::string detail;
    int proper_faces = 0;
    for (const Face& f : c.faces()) {
        if (f.dim == d) continue;
        ++proper_faces;
        std::vector<int> s;
        for (int r : f.rays) s.push_back(image_of[r]);
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        int idx = out.base_fan->cone_index(s);
        if (idx < 0 || out.base_fan->all_cones()[idx].dim != f.dim) {
            bijective = false;
            detail = "face image is not a matching cone of the projected fan";
            break;
        }
        if (++image_count[s] > 1) {
            bijective = false;
            detail = "two faces share one image cone";
            break;
        }
    }
    if (bijective && proper_faces != static_cast<int>(out.base_fan->all_cones().size())) {
        bijective = false;
        detail = "projected fan has cones that are not face images";
    }
    out.face_bijection_ok = bijective;
    if (!bijective) out.failure_detail = detail;
    return out;
}

bool GysinReport::all_pass() const {
    for (const auto& i : items)
        if (!i.pass) return false;
    return true;
}

GysinReport gysin_check(const BettiTable& link_b, const BettiTable& base_b) {
    GysinReport r;
    auto item = [&](const std::string& name, const std::string& formula, long long lhs, long long rhs) {
        r.items.push_back({name, formula, lhs, rhs, lhs == rhs});
    };
    item("gysin_top", "b7(L) == 1", link_b.at(7), 1);
    item("gysin_b5", "b5(L) == b4(X) - 1", link_b.at(5), base_b.at(4) - 1);
    item("gysin_middle", "b4(L) - b3(L) == b4(X) - b2(X)", link_b.at(4) - link_b.at(3),
         base_b.at(4) - base_b.at(2));
    item("gysin_b2", "b2(L) == b2(X) - 1", link_b.at(2), base_b.at(2) - 1);
    item("gysin_b0", "b0(L) == b0(X)", link_b.at(0), base_b.at(0));
    return r;
}

long long euler_class_kernel_rank(const BettiTable& link_b, const BettiTable& base_b) {
    long long b = link_b.at(4) - base_b.at(3);
    if (b < 0)
        throw consistency_error("euler_class_kernel_rank: b4(link) - b3(base) is negative");
    return b;
}

}  // namespace toriclink
