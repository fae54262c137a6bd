#include "toriclink/linalg.hpp"

#include <algorithm>
#include <utility>

namespace toriclink {

namespace {

// Fraction-free elimination; destroys its argument, returns the rank.
// Pivot selection: smallest absolute nonzero entry in the current
// column block keeps the intermediate minors small on the sparse +-1
// matrices this engine produces.
int bareiss_rank(IntMatrix m) {
    const int rows = m.rows(), cols = m.cols();
    Int prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i) {
            if (m(i, c) == 0) continue;
            if (pivot < 0 || boost::multiprecision::abs(m(i, c)) < boost::multiprecision::abs(m(pivot, c)))
                pivot = i;
        }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < cols; ++j) std::swap(m(pivot, j), m(r, j));
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j)
                m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
            m(i, c) = 0;
        }
        prev = m(r, c);
        ++r;
    }
    return r;
}

IntMatrix scale_rows_integral(const RatMatrix& m) {
    IntMatrix z(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        Int l = 1;
        for (int j = 0; j < m.cols(); ++j) l = l / int_gcd(l, denominator(m(i, j))) * denominator(m(i, j));
        for (int j = 0; j < m.cols(); ++j) {
            Rat v = m(i, j) * l;
            z(i, j) = numerator(v);
        }
    }
    return z;
}

// Reduced row echelon form over Q; returns pivot columns.
std::vector<int> rref(RatMatrix& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m(i, c) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Rat inv = m(r, c);
        for (int j = 0; j < m.cols(); ++j) m(r, j) /= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rat f = m(i, c);
            for (int j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Floor division, consistent for negative operands.
Int floor_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

int rank(const IntMatrix& m) { return bareiss_rank(m); }

int rank(const RatMatrix& m) { return bareiss_rank(scale_rows_integral(m)); }

std::vector<RatVec> kernel_basis(const RatMatrix& m) {
    RatMatrix r = m;
    std::vector<int> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<RatVec> basis;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        RatVec v(m.cols(), Rat(0));
        v[c] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(static_cast<int>(k), c);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<RatVec> kernel_basis(const IntMatrix& m) { return kernel_basis(to_rational(m)); }

HnfResult hermite_normal_form(const IntMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    IntMatrix h = m;
    IntMatrix u = IntMatrix::identity(rows);

    auto row_swap = [&](int a, int b) {
        for (int j = 0; j < cols; ++j) std::swap(h(a, j), h(b, j));
        for (int j = 0; j < rows; ++j) std::swap(u(a, j), u(b, j));
    };
    auto row_axpy = [&](int dst, int src, const Int& f) {  // row dst -= f * row src
        if (f == 0) return;
        for (int j = 0; j < cols; ++j) h(dst, j) -= f * h(src, j);
        for (int j = 0; j < rows; ++j) u(dst, j) -= f * u(src, j);
    };
    auto row_negate = [&](int i) {
        for (int j = 0; j < cols; ++j) h(i, j) = -h(i, j);
        for (int j = 0; j < rows; ++j) u(i, j) = -u(i, j);
    };

    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        // Euclidean reduction in column c on rows r..end.
        while (true) {
            int pivot = -1;
            for (int i = r; i < rows; ++i) {
                if (h(i, c) == 0) continue;
                if (pivot < 0 || boost::multiprecision::abs(h(i, c)) < boost::multiprecision::abs(h(pivot, c)))
                    pivot = i;
            }
            if (pivot < 0) break;
            if (pivot != r) row_swap(pivot, r);
            bool done = true;
            for (int i = r + 1; i < rows; ++i) {
                if (h(i, c) == 0) continue;
                row_axpy(i, r, h(i, c) / h(r, c));
                if (h(i, c) != 0) done = false;  // remainder left, another round
            }
            if (done) break;
        }
        if (h(r, c) == 0) continue;
        if (h(r, c) < 0) row_negate(r);
        for (int i = 0; i < r; ++i) row_axpy(i, r, floor_div(h(i, c), h(r, c)));
        ++r;
    }
    return {std::move(h), std::move(u)};
}

IntMatrix integer_kernel(const IntMatrix& a) {
    // Left kernel of a^T equals {x : a x = 0}; read it off the zero rows
    // of the HNF transform.
    HnfResult hu = hermite_normal_form(a.transpose());
    std::vector<IntVec> rows;
    for (int i = 0; i < hu.h.rows(); ++i) {
        bool zero = true;
        for (int j = 0; j < hu.h.cols(); ++j)
            if (hu.h(i, j) != 0) { zero = false; break; }
        if (zero) rows.push_back(hu.u.row(i));
    }
    return IntMatrix::from_rows(rows, a.cols());
}

IntMatrix saturate(const std::vector<IntVec>& gens, int n) {
    if (gens.empty()) throw input_error("saturate: empty generator list");
    for (const IntVec& g : gens)
        if (static_cast<int>(g.size()) != n) throw input_error("saturate: generator of wrong length");
    IntMatrix g = IntMatrix::from_rows(gens, n);
    IntMatrix k = integer_kernel(g);          // orthogonal complement lattice
    IntMatrix s = integer_kernel(k);          // double complement = saturation
    // Canonical basis: nonzero HNF rows.
    HnfResult hu = hermite_normal_form(s);
    std::vector<IntVec> rows;
    for (int i = 0; i < hu.h.rows(); ++i) {
        IntVec row = hu.h.row(i);
        if (!is_zero_vec(row)) rows.push_back(std::move(row));
    }
    return IntMatrix::from_rows(rows, n);
}

IntMatrix quotient_projection(int n, const IntMatrix& s) {
    const int k = s.rows();
    if (s.cols() != n) throw input_error("quotient_projection: basis has wrong ambient rank");
    if (k > n) throw input_error("quotient_projection: sublattice rank exceeds ambient rank");
    if (rank(s) != k) throw input_error("quotient_projection: rows are not independent");

    HnfResult hu = hermite_normal_form(s.transpose());
    // The top k x k block of h is upper triangular; unit pivots certify
    // saturation (any pivot > 1 means the rows generate a finite-index
    // sublattice of their saturation).
    for (int i = 0; i < k; ++i)
        if (hu.h(i, i) != 1) throw input_error("quotient_projection: basis is not saturated");

    IntMatrix p(n - k, n);
    for (int i = k; i < n; ++i)
        for (int j = 0; j < n; ++j) p(i - k, j) = hu.u(i, j);

    if (!p.mul(s.transpose()).is_zero()) throw internal_error("quotient_projection: kernel violation");
    return p;
}

std::optional<RatMatrix> solve_left(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.cols()) throw internal_error("solve_left: shape mismatch");
    // x a = b  <=>  a^T x^T = b^T; eliminate once on [a^T | b^T].
    RatMatrix at = a.transpose(), bt = b.transpose();
    const int n = at.rows(), r = at.cols(), q = bt.cols();
    RatMatrix aug(n, r + q);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < r; ++j) aug(i, j) = at(i, j);
        for (int j = 0; j < q; ++j) aug(i, r + j) = bt(i, j);
    }
    std::vector<int> pivots = rref(aug);
    std::vector<int> pivot_row_of(r, -1);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] >= r) return std::nullopt;  // inconsistent system
        pivot_row_of[pivots[i]] = static_cast<int>(i);
    }
    // Particular solution with free variables at zero; unique when a has
    // full row rank (the transition-map case).
    RatMatrix xt(r, q);
    for (int j = 0; j < r; ++j) {
        if (pivot_row_of[j] < 0) continue;
        for (int c = 0; c < q; ++c) xt(j, c) = aug(pivot_row_of[j], r + c);
    }
    return xt.transpose();
}

std::optional<RatVec> coordinates_in_basis(const IntMatrix& b, const IntVec& v) {
    RatMatrix target(1, b.cols());
    for (int j = 0; j < b.cols(); ++j) target(0, j) = Rat(v[j]);
    auto x = solve_left(to_rational(b), target);
    if (!x) return std::nullopt;
    return x->row(0);
}

Rat determinant(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw internal_error("determinant: not square");
    RatMatrix a = m;
    const int n = a.rows();
    Rat det = 1;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (a(i, c) != 0) { p = i; break; }
        if (p < 0) return Rat(0);
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        for (int i = c + 1; i < n; ++i) {
            if (a(i, c) == 0) continue;
            Rat f = a(i, c) / a(c, c);
            for (int j = c; j < n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    return det;
}

}  // namespace toriclink
