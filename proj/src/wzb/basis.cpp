#include "wzb/machine.hpp"

namespace wzb {

namespace {

RatVec dratio_weights(const RelevantSet& ctx) {
    RatVec w(static_cast<size_t>(ctx.size()));
    for (int i = 0; i < ctx.size(); ++i)
        w[static_cast<size_t>(i)] = ctx.entries[static_cast<size_t>(i)].dratio;
    return w;
}

// residual of v against the (pairwise orthogonal) list; zero when dependent
RatVec orthogonal_residual(const RelevantSet& ctx, const RatVec& v,
                           const std::vector<BasisVector>& list) {
    const RatVec w = dratio_weights(ctx);
    RatVec r = v;
    for (const BasisVector& u : list) {
        Rat c = weighted_inner(v, u.f.coeffs, w) / weighted_inner(u.f.coeffs, u.f.coeffs, w);
        r = vec_sub(r, vec_scale(c, u.f.coeffs));
    }
    return r;
}

int verified_tau_eig(const OpMatrix& tau, const WFormula& f) {
    WFormula tf = apply(tau, f);
    if (tf.coeffs == f.coeffs) return 1;
    if (tf.coeffs == vec_scale(Rat(-1), f.coeffs)) return -1;
    throw internal_error("recursion basis vector is not a twist eigenvector");
}

std::optional<Rat> detect_k_eig(const RelevantSet& ctx, const OpMatrix& k, const WFormula& f) {
    WFormula kf = apply(k, f);
    for (const KEigenvalue& cand : ctx.alg->k_table) {
        if (kf.coeffs == vec_scale(cand.value, f.coeffs)) return cand.value;
    }
    return std::nullopt;
}

void push_vector(std::vector<BasisVector>& out, const RelevantSet& ctx, const OpMatrix& tau,
                 const OpMatrix& k, WFormula f, std::optional<int> degree) {
    BasisVector bv;
    bv.tau_eig = verified_tau_eig(tau, f);
    bv.k_eig = detect_k_eig(ctx, k, f);
    bv.degree_in_b = degree;
    bv.f = std::move(f);
    out.push_back(std::move(bv));
}

int distinct_b_count(const RelevantSet& ctx) {
    std::vector<Rat> seen;
    for (const auto& e : ctx.entries) {
        bool found = false;
        for (const Rat& b : seen)
            if (b == e.b) found = true;
        if (!found) seen.push_back(e.b);
    }
    return static_cast<int>(seen.size());
}

WFormula wf_axpy(const Rat& a, const WFormula& x, const Rat& b, const WFormula& y) {
    return {x.ctx, vec_add(vec_scale(a, x.coeffs), vec_scale(b, y.coeffs))};
}

BasisReport so_basis(const RelevantSet& ctx, const OpMatrix& tau, const OpMatrix& k) {
    const int n = ctx.alg->n_of_so();
    const int d = distinct_b_count(ctx);
    BasisReport rep;
    WFormula one = wf_unit(ctx);
    push_vector(rep.polys, ctx, tau, k, one, 0);
    if (d >= 2) push_vector(rep.polys, ctx, tau, k, b_operator(ctx), 1);
    while (static_cast<int>(rep.polys.size()) < d) {
        const WFormula& f = rep.polys.back().f;
        const int deg = *rep.polys.back().degree_in_b;
        WFormula next;
        if (deg % 2 == 1) {
            // tau = -1 input: (B + (n-2)/2) F - (1/n) <BF,1> 1
            WFormula bf = wf_mul_b(f);
            next = wf_axpy(Rat(1), bf, Rat(n - 2, 2), f);
            next = wf_axpy(Rat(1), next, -wf_trace(bf) / Rat(n), one);
        } else {
            // tau = +1 input orthogonal to 1: (B + n/2) F
            next = wf_axpy(Rat(1), wf_mul_b(f), Rat(n, 2), f);
        }
        push_vector(rep.polys, ctx, tau, k, std::move(next), deg + 1);
    }
    rep.spin_gap = ctx.degenerate;
    rep.complete = static_cast<int>(rep.polys.size()) == ctx.size();
    if (rep.spin_gap && rep.complete) throw internal_error("degenerate so(2r) basis count");
    return rep;
}

BasisReport exceptional_basis(const RelevantSet& ctx, const OpMatrix& tau, const OpMatrix& k) {
    const bool g2 = ctx.alg->family == Family::G2;
    const Rat cas = casimir_l2(*ctx.alg, Ideal::Full, ctx.lambda.vec);
    BasisReport rep;
    const int upto = std::min(ctx.size(), 4);
    for (int deg = 0; deg < upto; ++deg) {
        RatVec p;
        switch (deg) {
            case 0: p = {Rat(1)}; break;
            case 1: p = {Rat(0), Rat(1)}; break;
            case 2:
                p = g2 ? RatVec{Rat(2, 7) * cas, Rat(2), Rat(1)}
                       : RatVec{Rat(1, 4) * cas, Rat(5, 2), Rat(1)};
                break;
            default:
                if (g2) {
                    p = {Rat(2, 3) * cas, Rat(1, 2) * cas + Rat(4), Rat(13, 3), Rat(1)};
                } else {
                    Rat cas4 = higher_casimir(*ctx.alg, ctx.lambda, 4);
                    p = {Rat(3, 4) * cas, (cas4 + Rat(55, 2) * cas) / (Rat(2) * cas),
                         Rat(11, 2), Rat(1)};
                }
                break;
        }
        push_vector(rep.polys, ctx, tau, k, wf_poly(ctx, p), deg);
    }
    // complete with K-eigenspace kernels, orthogonalized against what exists
    for (const KEigenspace& es : k_eigenspaces(ctx, k)) {
        for (const WFormula& v : es.basis) {
            RatVec r = orthogonal_residual(ctx, v.coeffs, rep.polys);
            if (vec_is_zero(r)) continue;
            push_vector(rep.polys, ctx, tau, k, wf_from(ctx, std::move(r)), std::nullopt);
        }
    }
    rep.complete = static_cast<int>(rep.polys.size()) == ctx.size();
    if (!rep.complete) throw internal_error("exceptional basis completion");
    return rep;
}

BasisReport u_basis(const RelevantSet& ctx, const OpMatrix& tau, const OpMatrix& k) {
    BasisReport rep;
    for (int i = 0; i < ctx.size(); ++i) {
        if (ctx.entries[static_cast<size_t>(i)].label.kind != EpsLabel::Minus) continue;
        RatVec pr(static_cast<size_t>(ctx.size()));
        pr[static_cast<size_t>(i)] = Rat(1);
        WFormula f = wf_from(ctx, pr);
        WFormula tf = apply(tau, f);
        push_vector(rep.polys, ctx, tau, k, wf_axpy(Rat(1), f, Rat(1), tf), std::nullopt);
        push_vector(rep.polys, ctx, tau, k, wf_axpy(Rat(1), f, Rat(-1), tf), std::nullopt);
    }
    rep.complete = static_cast<int>(rep.polys.size()) == ctx.size();
    if (!rep.complete) throw internal_error("kaehler basis count");
    return rep;
}

} // namespace

BasisReport recursion_basis(const RelevantSet& ctx) {
    OpMatrix tau = twist_matrix(ctx);
    OpMatrix k = k_matrix(ctx, tau);
    switch (ctx.alg->family) {
        case Family::SOodd:
        case Family::SOeven: return so_basis(ctx, tau, k);
        case Family::U: return u_basis(ctx, tau, k);
        default: return exceptional_basis(ctx, tau, k);
    }
}

QLambda spin7_qlambda(const RelevantSet& ctx) {
    const Algebra& alg = *ctx.alg;
    if (alg.family != Family::Spin7)
        throw Error("WrongFamily", "Q_lambda is defined for spin(7) only");
    const Rat c = casimir_l2(alg, Ideal::Full, ctx.lambda.vec);
    // Cas^[4] enters in the integral normalization 32 tr(B^4); with the
    // plain trace the stated orthogonality to 1, B, B^2 fails
    const Rat h = Rat(32) * higher_casimir(alg, ctx.lambda, 4);

    QLambda q;
    q.q_coeffs = {Rat(2) * c, Rat(-160) * c,
                  Rat(320) * c * c - Rat(1184) * c - Rat(4) * h,
                  Rat(-160) * c * c * c + Rat(2) * c * h + Rat(1712) * c * c -
                      Rat(9408) * c - Rat(21) * h};

    RatVec coeffs(static_cast<size_t>(ctx.size()));
    for (int i = 0; i < ctx.size(); ++i) {
        const auto& e = ctx.entries[static_cast<size_t>(i)];
        HighestWeight shifted = highest_weight(alg, e.mu_fund);
        Rat cs = casimir_l2(alg, Ideal::Full, e.mu);
        Rat hs = Rat(32) * higher_casimir(alg, shifted, 4);
        coeffs[static_cast<size_t>(i)] =
            q.q_coeffs[0] * hs + q.q_coeffs[1] * cs * cs + q.q_coeffs[2] * cs + q.q_coeffs[3];
    }
    q.delta_q = wf_from(ctx, std::move(coeffs));

    WFormula b = b_operator(ctx);
    if (!wf_trace(q.delta_q).is_zero() || !wf_inner(q.delta_q, b).is_zero() ||
        !wf_inner(q.delta_q, wf_mul_b(b)).is_zero())
        throw internal_error("Q_lambda orthogonality to 1, B, B^2");
    return q;
}

} // namespace wzb
