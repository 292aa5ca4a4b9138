#include "germcalc/linalg.hpp"

namespace germcalc {

namespace {

// Gaussian elimination to row echelon form; returns pivot column per row.
// Shared shape for Scalar and mpq entries via templates.
template <class T>
struct FieldOps;

template <>
struct FieldOps<Scalar> {
    static bool is_zero(const Scalar& x) { return x.is_zero(); }
    static Scalar inv(const Scalar& x) { return x.inverse(); }
};

template <>
struct FieldOps<mpq_class> {
    static bool is_zero(const mpq_class& x) { return x == 0; }
    static mpq_class inv(const mpq_class& x) { return 1 / x; }
};

template <class T>
std::vector<long> echelonize(std::vector<std::vector<T>>& m) {
    std::vector<long> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && FieldOps<T>::is_zero(m[sel][c])) ++sel;
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        T inv = FieldOps<T>::inv(m[r][c]);
        for (size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || FieldOps<T>::is_zero(m[i][c])) continue;
            T f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        pivots.push_back((long)c);
        ++r;
    }
    return pivots;
}

template <class T>
std::vector<std::vector<T>> kernel_impl(std::vector<std::vector<T>> m, const T& zero,
                                        const T& one) {
    if (m.empty()) return {};
    size_t cols = m[0].size();
    std::vector<long> pivots = echelonize(m);
    std::vector<bool> is_pivot(cols, false);
    for (long c : pivots) is_pivot[(size_t)c] = true;
    std::vector<std::vector<T>> basis;
    for (size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<T> v(cols, zero);
        v[free_c] = one;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[(size_t)pivots[r]] = zero - m[r][free_c];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

size_t rank(ScalarMatrix m) { return echelonize(m).size(); }
size_t rank(RatMatrix m) { return echelonize(m).size(); }

std::vector<size_t> rref(ScalarMatrix& m) {
    std::vector<size_t> pivots;
    for (long c : echelonize(m)) pivots.push_back((size_t)c);
    return pivots;
}

std::optional<ScalarMatrix> invert(const ScalarMatrix& m) {
    size_t n = m.size();
    ScalarMatrix aug(n);
    for (size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw error("invert: not square");
        aug[i] = m[i];
        for (size_t j = 0; j < n; ++j) aug[i].push_back(Scalar(i == j ? 1 : 0));
    }
    std::vector<long> pivots = echelonize(aug);
    if (pivots.size() != n) return std::nullopt;
    for (size_t i = 0; i < n; ++i)
        if ((size_t)pivots[i] != i) return std::nullopt;
    ScalarMatrix inv(n, std::vector<Scalar>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

std::vector<std::vector<Scalar>> kernel_basis(ScalarMatrix m) {
    return kernel_impl(std::move(m), Scalar(0), Scalar(1));
}

std::vector<std::vector<mpq_class>> kernel_basis_rat(RatMatrix m) {
    return kernel_impl(std::move(m), mpq_class(0), mpq_class(1));
}

std::optional<std::vector<Scalar>> solve(ScalarMatrix m, std::vector<Scalar> b) {
    if (m.empty()) return b.empty() ? std::make_optional(std::vector<Scalar>{}) : std::nullopt;
    size_t rows = m.size(), cols = m[0].size();
    if (b.size() != rows) throw error("solve: size mismatch");
    for (size_t i = 0; i < rows; ++i) m[i].push_back(b[i]);
    std::vector<long> pivots = echelonize(m);
    // Inconsistent iff a pivot lands in the augmented column.
    for (long c : pivots)
        if ((size_t)c == cols) return std::nullopt;
    std::vector<Scalar> x(cols, Scalar(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[(size_t)pivots[r]] = m[r][cols];
    return x;
}

std::vector<Poly> char_poly(const PolyMatrix& m) {
    size_t p = m.size();
    if (p == 0) throw error("char_poly: empty matrix");
    for (const auto& row : m)
        if (row.size() != p) throw error("char_poly: not square");
    const VarContext& ctx = m[0][0].ctx();
    auto mat_mul = [&](const PolyMatrix& a, const PolyMatrix& b) {
        PolyMatrix r(p, std::vector<Poly>(p, Poly(ctx)));
        for (size_t i = 0; i < p; ++i)
            for (size_t k = 0; k < p; ++k) {
                if (a[i][k].is_zero()) continue;
                for (size_t j = 0; j < p; ++j) {
                    if (b[k][j].is_zero()) continue;
                    r[i][j] += a[i][k] * b[k][j];
                }
            }
        return r;
    };
    auto trace = [&](const PolyMatrix& a) {
        Poly t(ctx);
        for (size_t i = 0; i < p; ++i) t += a[i][i];
        return t;
    };
    std::vector<Poly> c;
    PolyMatrix n = m;  // N_1 = M
    for (size_t k = 1; k <= p; ++k) {
        Poly ck = trace(n).scaled(Scalar::fraction(-1, (long)k));
        c.push_back(ck);
        if (k == p) break;
        for (size_t i = 0; i < p; ++i) n[i][i] += ck;  // N_k + c_k I
        n = mat_mul(m, n);
    }
    return c;
}

Poly poly_det(const PolyMatrix& m) {
    std::vector<Poly> c = char_poly(m);
    Poly d = c.back();
    if (m.size() % 2) d = -d;  // det = (-1)^p c_p
    return d;
}

PolyMatrix poly_adjugate(const PolyMatrix& m) {
    size_t p = m.size();
    const VarContext& ctx = m[0][0].ctx();
    if (p == 1) {
        return {{Poly::constant(ctx, Scalar(1))}};
    }
    // adj(M) = (-1)^{p-1} (M^{p-1} + c1 M^{p-2} + ... + c_{p-1} I)
    std::vector<Poly> c = char_poly(m);
    PolyMatrix acc(p, std::vector<Poly>(p, Poly(ctx)));
    for (size_t i = 0; i < p; ++i) acc[i][i] = Poly::constant(ctx, Scalar(1));
    auto mat_mul = [&](const PolyMatrix& a, const PolyMatrix& b) {
        PolyMatrix r(p, std::vector<Poly>(p, Poly(ctx)));
        for (size_t i = 0; i < p; ++i)
            for (size_t k = 0; k < p; ++k) {
                if (a[i][k].is_zero()) continue;
                for (size_t j = 0; j < p; ++j) {
                    if (b[k][j].is_zero()) continue;
                    r[i][j] += a[i][k] * b[k][j];
                }
            }
        return r;
    };
    // Horner: (((I*M + c1 I)M + c2 I)M + ...) up to c_{p-1}
    for (size_t k = 1; k <= p - 1; ++k) {
        acc = mat_mul(acc, m);
        for (size_t i = 0; i < p; ++i) acc[i][i] += c[k - 1];
    }
    if ((p - 1) % 2) {
        for (auto& row : acc)
            for (auto& e : row) e = -e;
    }
    return acc;
}

RatMatrix realify(const ScalarMatrix& a) {
    size_t n = a.size();
    RatMatrix r(2 * n, std::vector<mpq_class>(a.empty() ? 0 : 2 * a[0].size(), 0));
    size_t cols = a.empty() ? 0 : a[0].size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < cols; ++j) {
            r[i][j] = a[i][j].re();
            r[i][j + cols] = -a[i][j].im();
            r[i + n][j] = a[i][j].im();
            r[i + n][j + cols] = a[i][j].re();
        }
    return r;
}

}  // namespace germcalc
