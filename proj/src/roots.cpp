#include "linroots/roots.hpp"

#include "linroots/pmat.hpp"

namespace linroots {

namespace {

// F_p matrix of the F_p-linear map x -> f(x), columns indexed by basis x^j.
pmat::Mat fp_matrix(const LinPoly& f) {
    const FieldCtx& F = *f.ctx;
    unsigned m = F.degree();
    pmat::Mat M(m, pmat::Row(m, 0));
    for (unsigned j = 0; j < m; ++j) {
        FFElem basis = F.zero();
        basis.c[j] = 1;
        FFElem img = evaluate(f, basis);
        for (unsigned i = 0; i < m; ++i) M[i][j] = img.c[i];
    }
    return M;
}

// Reduced echelon form of the F_p-coordinate rows of `elems`; canonical.
std::vector<FFElem> echelonize(const FieldCtx& F, const std::vector<FFElem>& elems) {
    pmat::Mat rows;
    for (const auto& x : elems) rows.push_back(x.c);
    auto piv = pmat::rref(rows, F.p());
    std::vector<FFElem> out;
    for (size_t i = 0; i < piv.size(); ++i) out.push_back(FFElem{rows[i]});
    return out;
}

// Greedy extraction of a maximal F_{p^d}-independent subset, in input order.
std::vector<FFElem> scalar_basis_extract(const FieldCtx& F, unsigned d,
                                         const std::vector<FFElem>& elems) {
    std::vector<FFElem> sub = F.subfield_basis(d);
    std::vector<FFElem> picked;
    pmat::Mat span;   // F_p rows spanning the F_{p^d}-span of picked
    for (const auto& x : elems) {
        pmat::Mat trial = span;
        trial.push_back(x.c);
        if (pmat::rank(trial, F.p()) == span.size()) continue;  // dependent
        picked.push_back(x);
        for (const auto& lam : sub) span.push_back(F.mul(lam, x).c);
        auto piv = pmat::rref(span, F.p());
        span.resize(piv.size());
    }
    return picked;
}

}  // namespace

bool in_scalar_span(const FieldCtx& ctx, const std::vector<FFElem>& basis,
                    unsigned d, const FFElem& x) {
    std::vector<FFElem> sub = ctx.subfield_basis(d);
    pmat::Mat span;
    for (const auto& b : basis)
        for (const auto& lam : sub) span.push_back(ctx.mul(lam, b).c);
    size_t r0 = pmat::rank(span, ctx.p());
    span.push_back(x.c);
    return pmat::rank(span, ctx.p()) == r0;
}

KernelBasis kernel_basis_generic(const LinPoly& f) {
    const FieldCtx& F = *f.ctx;
    auto ns = pmat::nullspace(fp_matrix(f), F.degree(), F.p());
    std::vector<FFElem> kernel_fp;
    for (auto& row : ns) kernel_fp.push_back(FFElem{row});
    kernel_fp = echelonize(F, kernel_fp);
    std::vector<FFElem> basis = scalar_basis_extract(F, f.e, kernel_fp);
    KernelBasis out;
    out.elements = std::move(basis);
    out.scalar_degree = f.e;
    out.dim = (unsigned)out.elements.size();
    if (out.dim * f.e != ns.size())
        throw FieldError("kernel is not an F_q-subspace");  // cannot happen for q-polynomials
    for (const auto& x : out.elements)
        if (!F.is_zero(evaluate(f, x)))
            throw FieldError("basis element is not a root");
    return out;
}

KernelBasis fixed_space_Hn(const SigmaForm& F) {
    const TowerCtx& tw = *F.tower;
    LinPoly P = poly_sub(semilinear_power(F, tw.n), identity_poly(tw.field, tw.e));
    auto ns = pmat::nullspace(fp_matrix(P), tw.field.degree(), tw.p);
    std::vector<FFElem> kernel_fp;
    for (auto& row : ns) kernel_fp.push_back(FFElem{row});
    kernel_fp = echelonize(tw.field, kernel_fp);
    KernelBasis out;
    out.scalar_degree = tw.e * tw.n;
    out.elements = scalar_basis_extract(tw.field, out.scalar_degree, kernel_fp);
    out.dim = (unsigned)out.elements.size();
    if (out.dim * out.scalar_degree != ns.size())
        throw FieldError("E_1(H^n) is not an F_{q^n}-subspace");
    return out;
}

KernelBasis roots_via_L(const SigmaForm& F) {
    const TowerCtx& tw = *F.tower;
    const FieldCtx& fld = tw.field;
    KernelBasis e1 = fixed_space_Hn(F);
    LinPoly L = L_operator(F);
    // images of lambda_j * v_i for lambda_j an F_q-basis of F_{q^n}
    std::vector<FFElem> lambdas = fld.subfield_basis(tw.e * tw.n);
    std::vector<FFElem> qbasis_of_qn =
        scalar_basis_extract(fld, tw.e, lambdas);   // F_q-basis of F_{q^n}
    std::vector<FFElem> images;
    for (const auto& v : e1.elements)
        for (const auto& lam : qbasis_of_qn)
            images.push_back(evaluate(L, fld.mul(lam, v)));
    images = echelonize(fld, images);
    KernelBasis out;
    out.scalar_degree = tw.e;
    out.elements = scalar_basis_extract(fld, tw.e, images);
    out.dim = (unsigned)out.elements.size();
    LinPoly f = embed(F);
    for (const auto& x : out.elements)
        if (!fld.is_zero(evaluate(f, x)))
            throw FieldError("roots_via_L produced a non-root");
    return out;
}

bool fix_semilinear_property_check(const SigmaForm& F) {
    const TowerCtx& tw = *F.tower;
    const FieldCtx& fld = tw.field;
    KernelBasis e1 = fixed_space_Hn(F);
    KernelBasis fix = kernel_basis_generic(embed(F));   // E_1(H) = ker f
    if (fix.dim != e1.dim) return false;
    // every fixed point must lie in E_1(H^n), and span it over F_{q^n}
    for (const auto& x : fix.elements)
        if (!in_scalar_span(fld, e1.elements, tw.e * tw.n, x)) return false;
    std::vector<FFElem> fix_as_qn =
        scalar_basis_extract(fld, tw.e * tw.n, fix.elements);
    return fix_as_qn.size() == e1.dim;
}

}  // namespace linroots
