#pragma once

#include "linroots/gf.hpp"

namespace linroots {

/// Dense matrix over a FieldCtx, row-major.
struct FFMatrix {
    const FieldCtx* ctx = nullptr;
    size_t rows = 0, cols = 0;
    std::vector<FFElem> a;

    FFMatrix() = default;
    FFMatrix(const FieldCtx& c, size_t r, size_t n)
        : ctx(&c), rows(r), cols(n), a(r * n, c.zero()) {}

    FFElem& at(size_t i, size_t j) { return a[i * cols + j]; }
    const FFElem& at(size_t i, size_t j) const { return a[i * cols + j]; }
    bool operator==(const FFMatrix& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

FFMatrix identity_matrix(const FieldCtx& ctx, size_t n);
FFMatrix mat_add(const FFMatrix& A, const FFMatrix& B);
FFMatrix mat_sub(const FFMatrix& A, const FFMatrix& B);
FFMatrix mat_mul(const FFMatrix& A, const FFMatrix& B);
FFMatrix transpose(const FFMatrix& M);

size_t rank(const FFMatrix& M);
FFElem det(const FFMatrix& M);

/// Entrywise Frobenius a -> a^(p^e).
FFMatrix twist(const FFMatrix& M, unsigned e);

/// twist(M, step*(count-1)) * ... * twist(M, step) * M; step in p-power units.
FFMatrix twisted_product(const FFMatrix& M, unsigned step, unsigned count);

/// J^power for the cyclic shift J (1s on the superdiagonal and bottom-left).
FFMatrix shift_matrix(const FieldCtx& ctx, size_t size, unsigned power);

std::string format_matrix(const FFMatrix& M);

}  // namespace linroots
