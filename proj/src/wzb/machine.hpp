#pragma once

#include <array>
#include <optional>

#include "wzb/reptheory.hpp"

namespace wzb {

// Element of End_g(T (x) V_lambda) in the projector basis {pr_eps}; the
// coefficient vector f represents the operator -sum f_eps T*_eps T_eps.
struct WFormula {
    const RelevantSet* ctx = nullptr;
    RatVec coeffs;
};

// Endomorphism of the space of Weitzenboeck formulas in the {pr_eps} basis.
// Row eps holds the expansion of the image of pr_eps, so a coefficient
// vector f transforms as f -> f * m.
struct OpMatrix {
    const RelevantSet* ctx = nullptr;
    Mat m;
};

WFormula wf_unit(const RelevantSet& ctx);
WFormula wf_from(const RelevantSet& ctx, RatVec coeffs);

Rat wf_inner(const WFormula& f, const WFormula& g);
Rat wf_trace(const WFormula& f);

// Coefficient vectors (b_eps) resp. (b^{iR}_eps); b_center is u(n) only.
WFormula b_operator(const RelevantSet& ctx);
WFormula b_center(const RelevantSet& ctx);

// p(B) for a polynomial p given lowest-degree-first; the algebra is diagonal
// in {pr_eps}, so this is pointwise evaluation at the conformal weights.
WFormula wf_poly(const RelevantSet& ctx, const RatVec& p);

WFormula wf_mul_b(const WFormula& f); // pointwise multiplication by B
WFormula apply(const OpMatrix& op, const WFormula& f);

// Twist matrix per the family formula. Entries whose denominator vanishes
// are recovered as limits along lambda + t*rho; diagonal entries that stay
// 0/0 along the ray (those with dim V_{lambda+eps} = dim V_lambda) come from
// tau(1) = 1. Column sums are asserted to be 1 afterwards.
OpMatrix twist_matrix(const RelevantSet& ctx);

// Bochner coefficient vectors, restricted to the relevant weights.
// Zero when no Bochner identity exists for lambda.
WFormula bochner_g2(const RelevantSet& ctx);
WFormula bochner_spin7(const RelevantSet& ctx);

OpMatrix k_matrix(const RelevantSet& ctx, const OpMatrix& tau);

struct KEigenspace {
    std::string name;
    Rat eigenvalue;
    std::vector<WFormula> basis;
};

// Kernel of K - kappa per candidate eigenvalue; the dimensions must add up
// to the number of relevant weights.
std::vector<KEigenspace> k_eigenspaces(const RelevantSet& ctx, const OpMatrix& k);

struct BasisVector {
    WFormula f;
    std::optional<int> degree_in_b; // for vectors produced as polynomials in B
    int tau_eig = 0;                // +1 or -1, verified against the twist
    std::optional<Rat> k_eig;
};

// Basis vectors are orthogonal under wf_inner whenever their twist or K
// eigenvalues differ. For so(n) the sequence keeps the closed forms of the
// modified recursion, which are independent but not orthogonalized within a
// single K-eigenspace; g2, spin(7) and u(n) bases are fully orthogonal.
struct BasisReport {
    std::vector<BasisVector> polys;
    bool complete = false;
    bool spin_gap = false; // so(2r) degenerate case: one K-eigenvector missing
};

BasisReport recursion_basis(const RelevantSet& ctx);

struct QLambda {
    std::array<Rat, 4> q_coeffs; // multipliers of Cas^[4], (Cas)^2, Cas, 1
    WFormula delta_q;
};

// Central element of degree 4 whose evaluation is orthogonal to 1, B, B^2;
// spin(7) only.
QLambda spin7_qlambda(const RelevantSet& ctx);

struct Classification {
    bool pure_curvature = false;
    WFormula antisym_part;
    WFormula sym_part;
};

Classification classify(const WFormula& f, const OpMatrix& tau);

struct CurvatureReport {
    RatVec qr;        // coefficients of T*_eps T_eps in q(R)
    RatVec laplacian; // coefficients of T*_eps T_eps in Delta
};

CurvatureReport curvature_report(const RelevantSet& ctx);

// F - (F[idx]/G[idx]) G; zeroes the idx coefficient.
RatVec eliminate(const RatVec& f, const RatVec& g, int idx);

} // namespace wzb
