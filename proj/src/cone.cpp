#include "toriclink/cone.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "toriclink/hrep.hpp"
#include "toriclink/linalg.hpp"

namespace toriclink {

namespace {

IntVec lift_functional(const IntMatrix& span_basis, const IntVec& local) {
    // Any ambient functional restricting to `local` on the span will do;
    // points off the span are screened by the perp equations.
    RatMatrix rhs(1, span_basis.rows());
    for (int j = 0; j < span_basis.rows(); ++j) rhs(0, j) = Rat(local[j]);
    auto x = solve_left(to_rational(span_basis.transpose()), rhs);
    if (!x) throw internal_error("lift_functional: inconsistent system");
    Int lcm = 1;
    for (int j = 0; j < x->cols(); ++j) lcm = lcm / int_gcd(lcm, denominator((*x)(0, j))) * denominator((*x)(0, j));
    IntVec a(x->cols());
    for (int j = 0; j < x->cols(); ++j) a[j] = numerator(Rat((*x)(0, j) * lcm));
    return primitive(std::move(a));
}

int active_rank(const std::vector<IntVec>& normals, const IntVec& ray, int d) {
    std::vector<IntVec> active;
    for (const IntVec& a : normals)
        if (dot(a, ray) == 0) active.push_back(a);
    if (active.empty()) return 0;
    return rank(IntMatrix::from_rows(active, d));
}

}  // namespace

Cone Cone::from_rays(int ambient_rank, std::vector<IntVec> rays) {
    return build(ambient_rank, std::move(rays), /*strict=*/true);
}

Cone Cone::hull(int ambient_rank, std::vector<IntVec> generators) {
    return build(ambient_rank, std::move(generators), /*strict=*/false);
}

Cone Cone::build(int ambient_rank, std::vector<IntVec> input, bool strict) {
    if (input.empty()) throw input_error("cone: no ray generators");
    for (std::size_t i = 0; i < input.size(); ++i) {
        if (static_cast<int>(input[i].size()) != ambient_rank)
            throw input_error("cone: ray " + std::to_string(i) + " has wrong length");
        if (is_zero_vec(input[i]))
            throw input_error("cone: ray " + std::to_string(i) + " is the zero vector");
        input[i] = primitive(std::move(input[i]));
    }

    std::vector<IntVec> rays;
    std::set<IntVec> seen;
    for (std::size_t i = 0; i < input.size(); ++i) {
        if (seen.count(input[i])) {
            if (strict) throw input_error("cone: duplicate ray at index " + std::to_string(i));
            continue;
        }
        seen.insert(input[i]);
        rays.push_back(input[i]);
    }

    Cone c;
    c.ambient_ = ambient_rank;
    c.span_basis_ = saturate(rays, ambient_rank);
    c.dim_ = c.span_basis_.rows();
    c.perp_ = integer_kernel(c.span_basis_);

    for (const IntVec& r : rays) {
        auto coords = coordinates_in_basis(c.span_basis_, r);
        if (!coords) throw internal_error("cone: ray escapes its own span");
        IntVec local(c.dim_);
        for (int j = 0; j < c.dim_; ++j) {
            if (denominator((*coords)[j]) != 1)
                throw internal_error("cone: non-integral coordinates in saturated basis");
            local[j] = numerator((*coords)[j]);
        }
        c.local_rays_.push_back(std::move(local));
    }

    c.local_normals_ = supporting_normals(c.local_rays_, c.dim_);
    if (c.local_normals_.empty() ||
        rank(IntMatrix::from_rows(c.local_normals_, c.dim_)) < c.dim_)
        throw input_error("cone is not pointed (rays do not lie strictly on one side of a hyperplane)");

    // Extreme rays are exactly those supported by a rank-(dim-1) set of
    // active facet normals.
    std::vector<int> keep;
    for (std::size_t i = 0; i < rays.size(); ++i) {
        if (active_rank(c.local_normals_, c.local_rays_[i], c.dim_) == c.dim_ - 1) {
            keep.push_back(static_cast<int>(i));
        } else if (strict) {
            throw input_error("cone: ray " + std::to_string(i) +
                              " is a nonnegative combination of the other rays");
        }
    }
    if (keep.size() != rays.size()) {
        std::vector<IntVec> r2, l2;
        for (int i : keep) {
            r2.push_back(rays[i]);
            l2.push_back(c.local_rays_[i]);
        }
        rays = std::move(r2);
        c.local_rays_ = std::move(l2);
    }
    c.rays_ = std::move(rays);

    for (const IntVec& a : c.local_normals_) c.normals_.push_back(lift_functional(c.span_basis_, a));
    return c;
}

const std::vector<Face>& Cone::faces() const {
    if (faces_built_) return faces_;

    // Every proper face is an intersection of facets; close the facet ray
    // sets under pairwise intersection, then add the cone itself.
    std::set<std::vector<int>> sets;
    for (const IntVec& a : local_normals_) {
        std::vector<int> s;
        for (std::size_t i = 0; i < local_rays_.size(); ++i)
            if (dot(a, local_rays_[i]) == 0) s.push_back(static_cast<int>(i));
        sets.insert(std::move(s));
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> current(sets.begin(), sets.end());
        for (std::size_t i = 0; i < current.size(); ++i)
            for (std::size_t j = i + 1; j < current.size(); ++j) {
                std::vector<int> meet;
                std::set_intersection(current[i].begin(), current[i].end(), current[j].begin(),
                                      current[j].end(), std::back_inserter(meet));
                if (sets.insert(std::move(meet)).second) grew = true;
            }
    }
    std::vector<int> all(rays_.size());
    for (std::size_t i = 0; i < rays_.size(); ++i) all[i] = static_cast<int>(i);
    sets.insert(std::move(all));

    for (const auto& s : sets) {
        Face f;
        f.rays = s;
        if (s.empty()) {
            f.dim = 0;
        } else {
            std::vector<IntVec> sub;
            for (int i : s) sub.push_back(local_rays_[i]);
            f.dim = rank(IntMatrix::from_rows(sub, dim_));
        }
        faces_.push_back(std::move(f));
    }
    std::sort(faces_.begin(), faces_.end(),
              [](const Face& a, const Face& b) { return std::tie(a.dim, a.rays) < std::tie(b.dim, b.rays); });
    faces_built_ = true;
    return faces_;
}

std::vector<long long> Cone::f_vector() const {
    std::vector<long long> f(dim_ + 1, 0);
    for (const Face& face : faces()) ++f[face.dim];
    if (dim_ == 4) {
        // Vertex count of the base polytope must satisfy Euler's relation.
        if (f[3] != f[2] - f[1] + 2)
            throw internal_error("f_vector: Euler relation violated (face lattice bug)");
    }
    return f;
}

bool Cone::contains(const IntVec& x) const {
    for (int i = 0; i < perp_.rows(); ++i)
        if (dot(perp_.row(i), x) != 0) return false;
    for (const IntVec& a : normals_)
        if (dot(a, x) < 0) return false;
    return true;
}

bool Cone::contains_in_interior(const IntVec& x) const {
    if (!is_full_dim()) return false;
    for (const IntVec& a : normals_)
        if (dot(a, x) <= 0) return false;
    return true;
}

Cone Cone::restricted_to_span() const {
    return Cone::from_rays(dim_, local_rays_);
}

}  // namespace toriclink
