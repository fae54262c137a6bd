#include "toriclink/fuzz.hpp"

#include <set>

namespace toriclink {

namespace {

Cone random_2cone(FuzzRng& rng) {
    for (;;) {
        IntVec a = {Int(rng.uniform(-9, 9)), Int(rng.uniform(-9, 9))};
        IntVec b = {Int(rng.uniform(-9, 9)), Int(rng.uniform(-9, 9))};
        if (is_zero_vec(a) || is_zero_vec(b)) continue;
        if (a[0] * b[1] - a[1] * b[0] == 0) continue;  // collinear
        return Cone::from_rays(2, {primitive(a), primitive(b)});
    }
}

Cone random_height_one_cone(FuzzRng& rng, int d, long long box, int min_pts, int max_pts,
                            int min_rays, int max_rays) {
    for (;;) {
        const int k = static_cast<int>(rng.uniform(min_pts, max_pts));
        std::set<IntVec> pts;
        int guard = 0;
        while (static_cast<int>(pts.size()) < k && ++guard < 1000) {
            IntVec p(d);
            for (int j = 0; j + 1 < d; ++j) p[j] = Int(rng.uniform(0, box));
            p[d - 1] = 1;
            pts.insert(std::move(p));
        }
        if (static_cast<int>(pts.size()) < k) continue;
        Cone c = Cone::hull(d, {pts.begin(), pts.end()});
        if (c.dim() != d) continue;
        const int nrays = static_cast<int>(c.rays().size());
        if (nrays < min_rays || nrays > max_rays) continue;
        return c;
    }
}

}  // namespace

Cone random_link_cone(FuzzRng& rng, int d) {
    switch (d) {
        case 2:
            return random_2cone(rng);
        case 3:
            return random_height_one_cone(rng, 3, 6, 3, 10, 3, 12);
        case 4:
            return random_height_one_cone(rng, 4, 4, 4, 12, 4, 12);
        default:
            throw input_error("random_link_cone: dimension must be 2, 3 or 4");
    }
}

Cone polygon_cone(int k) {
    if (k < 3) throw input_error("polygon_cone: need at least 3 vertices");
    std::vector<IntVec> rays;
    for (int i = 0; i < k; ++i) rays.push_back({Int(i), Int(i) * Int(i), Int(1)});
    return Cone::from_rays(3, rays);
}

}  // namespace toriclink
