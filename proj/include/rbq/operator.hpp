#pragma once

#include <array>
#include <optional>
#include <string>

#include "rbq/algebra.hpp"

namespace rbq {

template <Ring R>
using Mat4 = std::array<std::array<R, 4>, 4>;

template <Ring R>
Mat4<R> zero_mat4() {
    Mat4<R> m;
    for (auto& row : m) row.fill(R(Rational(0)));
    return m;
}

// Linear operator on the split semi-quaternion algebra together with the
// weight it is tested against. Column j holds the coordinates of P(e_j):
// apply(P, e_j) = sum_i a[i][j] * e_i.
template <Ring R>
struct OperatorMatrix {
    Mat4<R> a = zero_mat4<R>();
    R weight = R(Rational(0));

    static OperatorMatrix zero(R w = R(Rational(0))) {
        OperatorMatrix p;
        p.weight = std::move(w);
        return p;
    }

    static OperatorMatrix scalar(const R& s, R w = R(Rational(0))) {
        OperatorMatrix p;
        for (int i = 0; i < 4; ++i) p.a[i][i] = s;
        p.weight = std::move(w);
        return p;
    }

    static OperatorMatrix identity(R w = R(Rational(0))) {
        return scalar(R(Rational(1)), std::move(w));
    }

    bool operator==(const OperatorMatrix& o) const { return a == o.a && weight == o.weight; }

    std::array<R, 4> column(int j) const {
        return {a[0][j], a[1][j], a[2][j], a[3][j]};
    }
};

template <Ring R>
SsqElement<R> apply(const OperatorMatrix<R>& P, const SsqElement<R>& x) {
    SsqElement<R> r;
    for (int j = 0; j < 4; ++j) {
        if (x.c[j].is_zero()) continue;
        for (int i = 0; i < 4; ++i) r.c[i] = r.c[i] + P.a[i][j] * x.c[j];
    }
    return r;
}

// P(x)P(y) - P(P(x)y) - P(xP(y)) - weight*P(xy); identically zero over all
// (x, y) exactly when P is a Rota-Baxter operator of that weight.
template <Ring R>
SsqElement<R> rb_defect(const OperatorMatrix<R>& P, const SsqElement<R>& x,
                        const SsqElement<R>& y) {
    SsqElement<R> px = apply(P, x);
    SsqElement<R> py = apply(P, y);
    SsqElement<R> lhs = multiply(px, py);
    SsqElement<R> t1 = apply(P, multiply(px, y));
    SsqElement<R> t2 = apply(P, multiply(x, py));
    SsqElement<R> t3 = apply(P, multiply(x, y));
    SsqElement<R> r;
    for (int k = 0; k < 4; ++k)
        r.c[k] = lhs.c[k] - t1.c[k] - t2.c[k] - P.weight * t3.c[k];
    return r;
}

template <Ring R>
struct RbWitness {
    int i, j;  // first failing basis pair (e_i, e_j)
    SsqElement<R> defect;
};

template <Ring R>
struct RbResult {
    bool ok;
    std::optional<RbWitness<R>> witness;
};

// Checks the defect on the 16 basis pairs in (i, j) lexicographic order;
// both sides of the defining identity are bilinear, so this decides the
// operator property for all elements.
template <Ring R>
RbResult<R> is_rota_baxter(const OperatorMatrix<R>& P) {
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            SsqElement<R> d =
                rb_defect(P, SsqElement<R>::basis(i), SsqElement<R>::basis(j));
            if (!d.is_zero()) return RbResult<R>{false, RbWitness<R>{i, j, d}};
        }
    }
    return RbResult<R>{true, std::nullopt};
}

// Fixed rational matrices encoding the algebra's multiplication against an
// operator matrix:
//   - C (4x16): block k of columns is M_k, where the e_k-coordinate of
//     P(e_i)P(e_j) equals gamma_i^T M_k gamma_j;
//   - E[i] (4x4): coords(e_i * x) = E[i] * coords(x);
//   - right_mult[j-1] (4x4), j = 1..3: coords(x * e_j) = right_mult[j-1]^T * coords(x)
//     (right multiplication by e_0 is the identity and is not stored).
struct StructureMatrices {
    std::array<std::array<Rational, 16>, 4> C;
    std::array<Mat4<Rational>, 4> E;
    std::array<Mat4<Rational>, 3> right_mult;
};

inline StructureMatrices build_structure_matrices() {
    StructureMatrices s{};
    static const int c_rows[4][16] = {
        {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1},
        {0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0, 0, 0},
    };
    static const int e_mats[4][4][4] = {
        {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}},
        {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}},
        {{0, 0, 0, 0}, {0, 0, 0, 0}, {1, 0, 0, 0}, {0, -1, 0, 0}},
        {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}},
    };
    static const int r_mats[3][4][4] = {
        {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, -1, 0}},
        {{0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}},
        {{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}},
    };
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 16; ++c) s.C[r][c] = Rational(c_rows[r][c]);
    for (int m = 0; m < 4; ++m)
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) s.E[m][r][c] = Rational(e_mats[m][r][c]);
    for (int m = 0; m < 3; ++m)
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) s.right_mult[m][r][c] = Rational(r_mats[m][r][c]);
    return s;
}

inline const StructureMatrices& structure_matrices() {
    static const StructureMatrices s = build_structure_matrices();
    return s;
}

namespace detail {

// small dense matrix over R with compile-time shape
template <Ring R, int M, int N>
using MatMN = std::array<std::array<R, N>, M>;

template <Ring R, int M, int N>
MatMN<R, M, N> zeros() {
    MatMN<R, M, N> m;
    for (auto& row : m)
        for (auto& x : row) x = R(Rational(0));
    return m;
}

template <Ring R, int M, int K, int N>
MatMN<R, M, N> mat_mul(const MatMN<R, M, K>& A, const MatMN<R, K, N>& B) {
    auto out = zeros<R, M, N>();
    for (int i = 0; i < M; ++i)
        for (int k = 0; k < K; ++k) {
            if (A[i][k].is_zero()) continue;
            for (int j = 0; j < N; ++j) out[i][j] = out[i][j] + A[i][k] * B[k][j];
        }
    return out;
}

template <Ring R, int M, int N>
MatMN<R, M, N> mat_sub(const MatMN<R, M, N>& A, const MatMN<R, M, N>& B) {
    auto out = A;
    for (int i = 0; i < M; ++i)
        for (int j = 0; j < N; ++j) out[i][j] = A[i][j] - B[i][j];
    return out;
}

}  // namespace detail

// The four 4x4 matrix identities characterizing Rota-Baxter operators,
// returned as LHS - RHS. Residual j collects the basis pairs (e_i, e_j):
// entry (k, i) is the e_k-coordinate of the defect at (e_i, e_j). All four
// matrices vanish exactly when the defect vanishes on every basis pair; this
// route is assembled purely from the fixed structure matrices, independently
// of the element-level defect computation.
template <Ring R>
std::array<Mat4<R>, 4> characterization_residuals(const OperatorMatrix<R>& P) {
    using detail::mat_mul;
    using detail::mat_sub;
    using detail::MatMN;
    const StructureMatrices& s = structure_matrices();

    // C^T (16x4) and the horizontal concatenation (E_0|E_1|E_2|E_3) (4x16)
    auto ct = detail::zeros<R, 16, 4>();
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 16; ++c) ct[c][r] = R(s.C[r][c]);
    auto eh = detail::zeros<R, 4, 16>();
    for (int m = 0; m < 4; ++m)
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) eh[r][4 * m + c] = R(s.E[m][r][c]);

    MatMN<R, 4, 4> p;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) p[r][c] = P.a[r][c];

    std::array<Mat4<R>, 4> out;
    for (int j = 0; j < 4; ++j) {
        // gamma_j replicated block-diagonally (16x4) and its transpose (4x16)
        auto g4 = detail::zeros<R, 16, 4>();
        auto g4t = detail::zeros<R, 4, 16>();
        for (int blk = 0; blk < 4; ++blk) {
            for (int r = 0; r < 4; ++r) {
                g4[4 * blk + r][blk] = P.a[r][j];
                g4t[blk][4 * blk + r] = P.a[r][j];
            }
        }
        auto lhs = mat_mul<R, 4, 4, 4>(mat_mul<R, 4, 16, 4>(g4t, ct), p);
        auto peh = mat_mul<R, 4, 4, 16>(p, eh);
        auto term1 = mat_mul<R, 4, 16, 4>(peh, g4);

        // right-multiplication matrix for e_j (identity for j = 0), transposed
        auto rjt = detail::zeros<R, 4, 4>();
        if (j == 0) {
            for (int r = 0; r < 4; ++r) rjt[r][r] = R(Rational(1));
        } else {
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c) rjt[c][r] = R(s.right_mult[j - 1][r][c]);
        }
        auto prjt = mat_mul<R, 4, 4, 4>(p, rjt);
        auto term2 = mat_mul<R, 4, 4, 4>(prjt, p);
        auto term3 = prjt;
        for (auto& row : term3)
            for (auto& x : row) x = P.weight * x;

        auto res = mat_sub<R, 4, 4>(mat_sub<R, 4, 4>(mat_sub<R, 4, 4>(lhs, term1), term2),
                                    term3);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) out[j][r][c] = res[r][c];
    }
    return out;
}

template <Ring R>
bool residuals_vanish(const std::array<Mat4<R>, 4>& rs) {
    for (const auto& m : rs)
        for (const auto& row : m)
            for (const auto& x : row)
                if (!x.is_zero()) return false;
    return true;
}

}  // namespace rbq
