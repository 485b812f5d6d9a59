#include "linroots/linalg.hpp"

#include <sstream>

namespace linroots {

namespace {
void require_same(const FFMatrix& A, const FFMatrix& B) {
    if (A.ctx != B.ctx || A.rows != B.rows || A.cols != B.cols)
        throw FieldError("matrix shape/context mismatch");
}
}  // namespace

FFMatrix identity_matrix(const FieldCtx& ctx, size_t n) {
    FFMatrix I(ctx, n, n);
    for (size_t i = 0; i < n; ++i) I.at(i, i) = ctx.one();
    return I;
}

FFMatrix mat_add(const FFMatrix& A, const FFMatrix& B) {
    require_same(A, B);
    FFMatrix R = A;
    for (size_t i = 0; i < A.a.size(); ++i) R.a[i] = A.ctx->add(A.a[i], B.a[i]);
    return R;
}

FFMatrix mat_sub(const FFMatrix& A, const FFMatrix& B) {
    require_same(A, B);
    FFMatrix R = A;
    for (size_t i = 0; i < A.a.size(); ++i) R.a[i] = A.ctx->sub(A.a[i], B.a[i]);
    return R;
}

FFMatrix mat_mul(const FFMatrix& A, const FFMatrix& B) {
    if (A.ctx != B.ctx || A.cols != B.rows)
        throw FieldError("matrix shape/context mismatch");
    const FieldCtx& f = *A.ctx;
    FFMatrix R(f, A.rows, B.cols);
    for (size_t i = 0; i < A.rows; ++i)
        for (size_t k = 0; k < A.cols; ++k) {
            const FFElem& aik = A.at(i, k);
            if (f.is_zero(aik)) continue;
            for (size_t j = 0; j < B.cols; ++j)
                R.at(i, j) = f.add(R.at(i, j), f.mul(aik, B.at(k, j)));
        }
    return R;
}

FFMatrix transpose(const FFMatrix& M) {
    FFMatrix R(*M.ctx, M.cols, M.rows);
    for (size_t i = 0; i < M.rows; ++i)
        for (size_t j = 0; j < M.cols; ++j) R.at(j, i) = M.at(i, j);
    return R;
}

size_t rank(const FFMatrix& M) {
    const FieldCtx& f = *M.ctx;
    FFMatrix W = M;
    size_t r = 0;
    for (size_t c = 0; c < W.cols && r < W.rows; ++c) {
        // pivot: first nonzero entry in column order
        size_t sel = r;
        while (sel < W.rows && f.is_zero(W.at(sel, c))) ++sel;
        if (sel == W.rows) continue;
        for (size_t j = 0; j < W.cols; ++j) std::swap(W.at(sel, j), W.at(r, j));
        FFElem piv_inv = f.inv(W.at(r, c));
        for (size_t j = c; j < W.cols; ++j) W.at(r, j) = f.mul(W.at(r, j), piv_inv);
        for (size_t i = r + 1; i < W.rows; ++i) {
            if (f.is_zero(W.at(i, c))) continue;
            FFElem fac = W.at(i, c);
            for (size_t j = c; j < W.cols; ++j)
                W.at(i, j) = f.sub(W.at(i, j), f.mul(fac, W.at(r, j)));
        }
        ++r;
    }
    return r;
}

FFElem det(const FFMatrix& M) {
    if (M.rows != M.cols) throw FieldError("NotSquare");
    const FieldCtx& f = *M.ctx;
    if (M.rows == 0) return f.one();
    FFMatrix W = M;
    FFElem d = f.one();
    for (size_t c = 0; c < W.cols; ++c) {
        size_t sel = c;
        while (sel < W.rows && f.is_zero(W.at(sel, c))) ++sel;
        if (sel == W.rows) return f.zero();
        if (sel != c) {
            for (size_t j = 0; j < W.cols; ++j) std::swap(W.at(sel, j), W.at(c, j));
            d = f.neg(d);
        }
        d = f.mul(d, W.at(c, c));
        FFElem piv_inv = f.inv(W.at(c, c));
        for (size_t i = c + 1; i < W.rows; ++i) {
            if (f.is_zero(W.at(i, c))) continue;
            FFElem fac = f.mul(W.at(i, c), piv_inv);
            for (size_t j = c; j < W.cols; ++j)
                W.at(i, j) = f.sub(W.at(i, j), f.mul(fac, W.at(c, j)));
        }
    }
    return d;
}

FFMatrix twist(const FFMatrix& M, unsigned e) {
    FFMatrix R = M;
    for (auto& x : R.a) x = M.ctx->frobenius(x, e);
    return R;
}

FFMatrix twisted_product(const FFMatrix& M, unsigned step, unsigned count) {
    if (M.rows != M.cols) throw FieldError("NotSquare");
    if (count < 1) throw FieldError("twisted_product: count must be >= 1");
    FFMatrix R = M;
    for (unsigned i = 1; i < count; ++i) R = mat_mul(twist(M, step * i), R);
    return R;
}

FFMatrix shift_matrix(const FieldCtx& ctx, size_t size, unsigned power) {
    FFMatrix J(ctx, size, size);
    unsigned s = (unsigned)(power % size);
    for (size_t i = 0; i < size; ++i) J.at(i, (i + s) % size) = ctx.one();
    return J;
}

std::string format_matrix(const FFMatrix& M) {
    std::ostringstream os;
    for (size_t i = 0; i < M.rows; ++i) {
        for (size_t j = 0; j < M.cols; ++j) {
            if (j) os << ' ';
            const auto& e = M.at(i, j);
            for (size_t k = 0; k < e.c.size(); ++k) {
                if (k) os << ',';
                os << e.c[k];
            }
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace linroots
