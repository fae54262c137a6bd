#include "toriclink/hrep.hpp"

#include <algorithm>
#include <set>

#include "toriclink/linalg.hpp"

namespace toriclink {

namespace {

// Visits every k-subset of {0..m-1} in lexicographic order.
template <typename F>
void for_each_subset(int m, int k, F&& visit) {
    if (k > m) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        visit(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Primitive integer spanning vector of a one-dimensional rational kernel,
// or empty when the kernel is not one-dimensional.
IntVec line_kernel(const std::vector<IntVec>& rows, const std::vector<int>& pick, int n) {
    RatMatrix m(static_cast<int>(pick.size()), n);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < n; ++j) m(i, j) = Rat(rows[pick[i]][j]);
    auto ker = kernel_basis(m);
    if (ker.size() != 1) return {};
    Int lcm = 1;
    for (const Rat& x : ker[0]) lcm = lcm / int_gcd(lcm, denominator(x)) * denominator(x);
    IntVec v(n);
    for (int j = 0; j < n; ++j) v[j] = numerator(Rat(ker[0][j] * lcm));
    return primitive(std::move(v));
}

}  // namespace

std::vector<IntVec> supporting_normals(const std::vector<IntVec>& rays, int d) {
    std::set<IntVec> out;
    const int m = static_cast<int>(rays.size());
    for_each_subset(m, d - 1, [&](const std::vector<int>& pick) {
        IntVec a = line_kernel(rays, pick, d);
        if (a.empty()) return;
        bool nonneg = true, nonpos = true;
        for (const IntVec& r : rays) {
            Int s = dot(a, r);
            if (s < 0) nonneg = false;
            if (s > 0) nonpos = false;
            if (!nonneg && !nonpos) return;
        }
        out.insert(nonneg ? a : negate(std::move(a)));
    });
    return {out.begin(), out.end()};
}

std::vector<IntVec> extreme_rays_of_hrep(const std::vector<IntVec>& ineqs,
                                         const std::vector<IntVec>& eqs, int n) {
    // Fold the equalities away: work in coordinates of their kernel.
    IntMatrix span = eqs.empty() ? IntMatrix::identity(n)
                                 : integer_kernel(IntMatrix::from_rows(eqs, n));
    const int w = span.rows();
    if (w == 0) return {};

    std::vector<IntVec> rows;
    for (const IntVec& a : ineqs) {
        IntVec local(w);
        for (int i = 0; i < w; ++i) local[i] = dot(a, span.row(i));
        if (!is_zero_vec(local)) rows.push_back(primitive(std::move(local)));
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

    if (rank(IntMatrix::from_rows(rows, w)) < w)
        throw internal_error("extreme_rays_of_hrep: feasible cone is not pointed");

    std::set<IntVec> local_rays;
    for_each_subset(static_cast<int>(rows.size()), w - 1, [&](const std::vector<int>& pick) {
        IntVec v = line_kernel(rows, pick, w);
        if (v.empty()) return;
        bool nonneg = true, nonpos = true;
        for (const IntVec& a : rows) {
            Int s = dot(a, v);
            if (s < 0) nonneg = false;
            if (s > 0) nonpos = false;
            if (!nonneg && !nonpos) return;
        }
        if (nonneg || nonpos) local_rays.insert(nonneg ? v : negate(std::move(v)));
    });

    std::vector<IntVec> out;
    for (const IntVec& v : local_rays) {
        IntVec x(n, Int(0));
        for (int i = 0; i < w; ++i)
            for (int j = 0; j < n; ++j) x[j] += v[i] * span(i, j);
        out.push_back(std::move(x));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace toriclink
