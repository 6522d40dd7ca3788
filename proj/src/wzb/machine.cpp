#include "wzb/machine.hpp"

namespace wzb {

namespace {

void require_same_ctx(const RelevantSet* a, const RelevantSet* b) {
    if (a == nullptr || a != b) throw Error("ContextMismatch", "mixed relevant sets");
}

// Bochner coefficient products over the full catalog weight order, generic in
// the scalar ring so the same formulas serve exact values and t-ray
// polynomials. Order matches t_weights: +e1,-e1,+e2,-e2,+e3,-e3[,+e4,-e4|,0].
template <typename R>
std::vector<R> g2_bochner_all(const R& a, const R& b) {
    R a2 = a + R(2);
    R u = a + R(3) * b; // a + 3b
    R v = R(2) * a + R(3) * b;
    std::vector<R> out;
    out.push_back(a * (u + R(3)) * (v + R(4)));          // +e1
    out.push_back(R(-1) * a2 * (u + R(5)) * (v + R(6))); // -e1
    out.push_back(R(-1) * a2 * (u + R(3)) * (v + R(4))); // +e2
    out.push_back(a * (u + R(5)) * (v + R(6)));          // -e2
    out.push_back(R(-1) * a * (u + R(5)) * (v + R(4)));  // +e3
    out.push_back(a2 * (u + R(3)) * (v + R(6)));         // -e3
    // 6 (a^2 + 3b^2 + 3ab + 5a + 9b + 6)
    out.push_back(R(6) * (a * a + R(3) * b * b + R(3) * a * b + R(5) * a + R(9) * b + R(6)));
    return out;
}

template <typename R>
std::vector<R> spin7_bochner_all(const R& a, const R& b, const R& c) {
    R c2 = c + R(2);
    R u = R(2) * b + c;          // 2b + c
    R v = R(2) * a + R(2) * b + c;
    std::vector<R> out;
    out.push_back(c * (u + R(2)) * (v + R(4)));           // +e1
    out.push_back(R(-1) * c2 * (u + R(4)) * (v + R(6)));  // -e1
    out.push_back(R(-1) * c2 * (u + R(2)) * (v + R(4)));  // +e2
    out.push_back(c * (u + R(4)) * (v + R(6)));           // -e2
    out.push_back(R(-1) * c * (u + R(4)) * (v + R(4)));   // +e3
    out.push_back(c2 * (u + R(2)) * (v + R(6)));          // -e3
    out.push_back(c2 * (u + R(4)) * (v + R(4)));          // +e4
    out.push_back(R(-1) * c * (u + R(2)) * (v + R(6)));   // -e4
    return out;
}

int t_weight_index(const Algebra& alg, const EpsLabel& label) {
    for (size_t i = 0; i < alg.t_weights.size(); ++i)
        if (alg.t_weights[i].label == label) return static_cast<int>(i);
    throw internal_error("unknown weight label");
}

RatVec bochner_restricted(const RelevantSet& ctx) {
    const Algebra& alg = *ctx.alg;
    std::vector<Rat> all;
    if (alg.family == Family::G2) {
        all = g2_bochner_all(Rat(ctx.lambda.fund[0]), Rat(ctx.lambda.fund[1]));
    } else if (alg.family == Family::Spin7) {
        all = spin7_bochner_all(Rat(ctx.lambda.fund[0]), Rat(ctx.lambda.fund[1]),
                                Rat(ctx.lambda.fund[2]));
    } else {
        throw Error("WrongFamily", "Bochner vector exists for g2 and spin(7) only");
    }
    RatVec out(static_cast<size_t>(ctx.size()));
    for (int i = 0; i < ctx.size(); ++i)
        out[static_cast<size_t>(i)] =
            all[static_cast<size_t>(t_weight_index(alg, ctx.entries[static_cast<size_t>(i)].label))];
    return out;
}

struct FamilyTwist {
    Rat scale;  // multiplier of b_eps + b_eps~ in the denominator
    Rat offset; // constant term of the denominator
};

FamilyTwist twist_denominator(const Algebra& alg) {
    switch (alg.family) {
        case Family::SOodd:
        case Family::SOeven: return {Rat(1), Rat(alg.n_of_so() - 1)};
        case Family::G2: return {Rat(3), Rat(13)};
        case Family::Spin7: return {Rat(2), Rat(11)};
        default: return {Rat(1), Rat(alg.param)};
    }
}

// Numerator weight of d_eps in the twist formula: SO uses 1 (so the entry is
// -(delta - d)/den), G2 and Spin7 carry the Bochner correction.
Rat beta_weight(const Algebra& alg, const Rat& bi, const Rat& bj, const Rat& bnorm,
                bool has_beta) {
    if (alg.family == Family::G2) {
        Rat w = Rat(2);
        if (has_beta) w -= Rat(6) * bi * bj / bnorm;
        return w;
    }
    if (alg.family == Family::Spin7) {
        Rat w = Rat(3, 2);
        if (has_beta) w -= Rat(4) * bi * bj / bnorm;
        return w;
    }
    return Rat(1);
}

// everything that varies along lambda + t*rho, built only when needed
struct RayData {
    Poly weyl_lambda;                  // Weyl numerator of lambda(t)
    std::vector<Poly> weyl_shift;      // per catalog weight of T
    std::vector<Poly> beta;            // per catalog weight (G2/Spin7)
    Poly beta_norm_num;                // sum beta^2 * weyl_shift
    std::vector<Rat> b_base, b_slope;  // per relevant entry
};

RayData build_ray(const RelevantSet& ctx) {
    const Algebra& alg = *ctx.alg;
    RayData ray;
    ray.weyl_lambda = weyl_numerator_poly(alg, ctx.lambda.vec);
    for (const TWeight& tw : alg.t_weights)
        ray.weyl_shift.push_back(weyl_numerator_poly(alg, vec_add(ctx.lambda.vec, tw.vec)));
    if (alg.family == Family::G2) {
        Poly a = Poly::linear(Rat(ctx.lambda.fund[0]), Rat(1));
        Poly b = Poly::linear(Rat(ctx.lambda.fund[1]), Rat(1));
        ray.beta = g2_bochner_all(a, b);
    } else if (alg.family == Family::Spin7) {
        Poly a = Poly::linear(Rat(ctx.lambda.fund[0]), Rat(1));
        Poly b = Poly::linear(Rat(ctx.lambda.fund[1]), Rat(1));
        Poly c = Poly::linear(Rat(ctx.lambda.fund[2]), Rat(1));
        ray.beta = spin7_bochner_all(a, b, c);
    }
    if (!ray.beta.empty()) {
        for (size_t k = 0; k < ray.beta.size(); ++k)
            ray.beta_norm_num += ray.beta[k] * ray.beta[k] * ray.weyl_shift[k];
    }
    for (const auto& e : ctx.entries) {
        ray.b_base.push_back(e.b);
        ray.b_slope.push_back(conformal_weight_slope(alg, Ideal::Full, e.eps));
    }
    return ray;
}

// limit of the twist entry (i, j) along lambda + t*rho
Rat ray_entry(const RelevantSet& ctx, const RayData& ray, int i, int j) {
    const Algebra& alg = *ctx.alg;
    const FamilyTwist ft = twist_denominator(alg);
    Poly den_lin =
        Poly::linear(ft.scale * (ray.b_base[static_cast<size_t>(i)] +
                                 ray.b_base[static_cast<size_t>(j)]) + ft.offset,
                     ft.scale * (ray.b_slope[static_cast<size_t>(i)] +
                                 ray.b_slope[static_cast<size_t>(j)]));
    if (den_lin.is_zero()) throw Error("UnexpectedSingularity", "denominator zero along ray");
    const Poly& w = ray.weyl_lambda;
    const int wi = t_weight_index(alg, ctx.entries[static_cast<size_t>(i)].label);
    const Poly& ni = ray.weyl_shift[static_cast<size_t>(wi)];
    const Poly delta = i == j ? Poly(Rat(1)) : Poly();

    Poly num, den;
    if (alg.is_so()) {
        num = -(delta * w - ni);
        den = w * den_lin;
    } else {
        const int wj = t_weight_index(alg, ctx.entries[static_cast<size_t>(j)].label);
        const Poly& s = ray.beta_norm_num;
        Poly bprod = ray.beta[static_cast<size_t>(wi)] * ray.beta[static_cast<size_t>(wj)] * w;
        Poly corr = alg.family == Family::G2 ? s.scaled(Rat(2)) - bprod.scaled(Rat(6))
                                             : s.scaled(Rat(3, 2)) - bprod.scaled(Rat(4));
        num = -(delta * s * w - corr * ni);
        den = s * w * den_lin;
    }
    return ratfun_eval_at_zero(RatFun(num, den));
}

} // namespace

WFormula wf_unit(const RelevantSet& ctx) {
    return {&ctx, RatVec(static_cast<size_t>(ctx.size()), Rat(1))};
}

WFormula wf_from(const RelevantSet& ctx, RatVec coeffs) {
    if (static_cast<int>(coeffs.size()) != ctx.size())
        throw Error("ContextMismatch", "coefficient count vs relevant set");
    return {&ctx, std::move(coeffs)};
}

Rat wf_inner(const WFormula& f, const WFormula& g) {
    require_same_ctx(f.ctx, g.ctx);
    Rat s(0);
    for (int i = 0; i < f.ctx->size(); ++i)
        s += f.coeffs[static_cast<size_t>(i)] * g.coeffs[static_cast<size_t>(i)] *
             f.ctx->entries[static_cast<size_t>(i)].dratio;
    return s;
}

Rat wf_trace(const WFormula& f) { return wf_inner(f, wf_unit(*f.ctx)); }

WFormula b_operator(const RelevantSet& ctx) {
    RatVec c(static_cast<size_t>(ctx.size()));
    for (int i = 0; i < ctx.size(); ++i)
        c[static_cast<size_t>(i)] = ctx.entries[static_cast<size_t>(i)].b;
    return {&ctx, std::move(c)};
}

WFormula b_center(const RelevantSet& ctx) {
    if (ctx.alg->family != Family::U)
        throw Error("BadIdeal", "central conformal weight operator is u(n) only");
    RatVec c(static_cast<size_t>(ctx.size()));
    for (int i = 0; i < ctx.size(); ++i)
        c[static_cast<size_t>(i)] = *ctx.entries[static_cast<size_t>(i)].b_center;
    return {&ctx, std::move(c)};
}

WFormula wf_poly(const RelevantSet& ctx, const RatVec& p) {
    Poly poly{RatVec(p)};
    RatVec c(static_cast<size_t>(ctx.size()));
    for (int i = 0; i < ctx.size(); ++i)
        c[static_cast<size_t>(i)] = poly.eval(ctx.entries[static_cast<size_t>(i)].b);
    return {&ctx, std::move(c)};
}

WFormula wf_mul_b(const WFormula& f) {
    RatVec c = f.coeffs;
    for (int i = 0; i < f.ctx->size(); ++i)
        c[static_cast<size_t>(i)] *= f.ctx->entries[static_cast<size_t>(i)].b;
    return {f.ctx, std::move(c)};
}

WFormula apply(const OpMatrix& op, const WFormula& f) {
    require_same_ctx(op.ctx, f.ctx);
    return {f.ctx, op.m.apply_to_row(f.coeffs)};
}

OpMatrix twist_matrix(const RelevantSet& ctx) {
    const Algebra& alg = *ctx.alg;
    const int n = ctx.size();
    const FamilyTwist ft = twist_denominator(alg);
    Mat m(n, n);

    RatVec beta;
    Rat beta_norm;
    bool has_beta = false;
    if (alg.family == Family::G2 || alg.family == Family::Spin7) {
        beta = bochner_restricted(ctx);
        has_beta = !vec_is_zero(beta);
        for (int i = 0; has_beta && i < n; ++i)
            beta_norm += beta[static_cast<size_t>(i)] * beta[static_cast<size_t>(i)] *
                         ctx.entries[static_cast<size_t>(i)].dratio;
    }

    std::vector<std::pair<int, int>> singular, deferred;
    for (int i = 0; i < n; ++i) {
        const auto& ei = ctx.entries[static_cast<size_t>(i)];
        for (int j = 0; j < n; ++j) {
            const auto& ej = ctx.entries[static_cast<size_t>(j)];
            if (alg.family == Family::U) {
                // block off-diagonal: within a holomorphic or antiholomorphic
                // block the twist vanishes
                if (ei.label.kind == ej.label.kind) continue;
                Rat den = ei.b + ej.b + Rat(alg.param);
                if (den.is_zero())
                    throw Error("UnexpectedSingularity", "u(n) twist denominator zero");
                m.at(i, j) = ei.dratio / den;
                continue;
            }
            Rat den = ft.scale * (ei.b + ej.b) + ft.offset;
            if (den.is_zero()) {
                singular.emplace_back(i, j);
                continue;
            }
            Rat num = beta_weight(alg, has_beta ? beta[static_cast<size_t>(i)] : Rat(0),
                                  has_beta ? beta[static_cast<size_t>(j)] : Rat(0), beta_norm,
                                  has_beta) *
                      ei.dratio;
            num = (i == j ? Rat(1) : Rat(0)) - num; // delta - (weight) * d_eps
            m.at(i, j) = -num / den;
        }
    }

    if (!singular.empty()) {
        RayData ray = build_ray(ctx);
        for (auto [i, j] : singular) {
            Rat slope = ft.scale * (ray.b_slope[static_cast<size_t>(i)] +
                                    ray.b_slope[static_cast<size_t>(j)]);
            if (slope.is_zero()) {
                // 0/0 at every point of the ray; recovered from tau(1) = 1
                if (i != j)
                    throw Error("UnexpectedSingularity",
                                "off-diagonal entry with denominator zero along ray");
                deferred.emplace_back(i, j);
                continue;
            }
            m.at(i, j) = ray_entry(ctx, ray, i, j);
        }
    }
    for (auto [i, j] : deferred) {
        Rat s(0);
        for (int k = 0; k < n; ++k)
            if (k != i) s += m.at(k, j);
        m.at(i, j) = Rat(1) - s;
    }

    for (int j = 0; j < n; ++j) {
        Rat s(0);
        for (int i = 0; i < n; ++i) s += m.at(i, j);
        if (s != Rat(1)) throw internal_error("twist column sum");
    }
    return {&ctx, std::move(m)};
}

WFormula bochner_g2(const RelevantSet& ctx) {
    if (ctx.alg->family != Family::G2) throw Error("WrongFamily", "g2 Bochner vector");
    return {&ctx, bochner_restricted(ctx)};
}

WFormula bochner_spin7(const RelevantSet& ctx) {
    if (ctx.alg->family != Family::Spin7) throw Error("WrongFamily", "spin(7) Bochner vector");
    return {&ctx, bochner_restricted(ctx)};
}

OpMatrix k_matrix(const RelevantSet& ctx, const OpMatrix& tau) {
    require_same_ctx(&ctx, tau.ctx);
    const Algebra& alg = *ctx.alg;
    const int n = ctx.size();
    Mat m(n, n);

    if (alg.family == Family::U) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (ctx.entries[static_cast<size_t>(i)].label.kind ==
                    ctx.entries[static_cast<size_t>(j)].label.kind)
                    m.at(i, j) = -ctx.entries[static_cast<size_t>(i)].dratio;
        return {&ctx, std::move(m)};
    }

    Rat c_tau, c_id, c_one;
    if (alg.is_so()) {
        c_tau = Rat(1);
        c_id = Rat(0);
        c_one = Rat(1);
    } else if (alg.family == Family::G2) {
        c_tau = Rat(1, 3);
        c_id = Rat(1, 3);
        c_one = Rat(2, 3);
    } else {
        c_tau = Rat(1, 2);
        c_id = Rat(1, 4);
        c_one = Rat(3, 4);
    }

    RatVec beta;
    Rat beta_norm;
    bool has_beta = false;
    if (alg.family == Family::G2 || alg.family == Family::Spin7) {
        beta = bochner_restricted(ctx);
        has_beta = !vec_is_zero(beta);
        if (has_beta) {
            for (int i = 0; i < n; ++i)
                beta_norm += beta[static_cast<size_t>(i)] * beta[static_cast<size_t>(i)] *
                             ctx.entries[static_cast<size_t>(i)].dratio;
        }
    }

    for (int i = 0; i < n; ++i) {
        const Rat di = ctx.entries[static_cast<size_t>(i)].dratio;
        for (int j = 0; j < n; ++j) {
            Rat v = c_tau * tau.m.at(i, j) - c_one * di;
            if (i == j) v += c_id;
            if (has_beta)
                v -= Rat(2) / beta_norm * beta[static_cast<size_t>(i)] * di *
                     beta[static_cast<size_t>(j)];
            m.at(i, j) = v;
        }
    }
    return {&ctx, std::move(m)};
}

std::vector<KEigenspace> k_eigenspaces(const RelevantSet& ctx, const OpMatrix& k) {
    require_same_ctx(&ctx, k.ctx);
    const int n = ctx.size();
    Mat kt = k.m.transposed();
    std::vector<KEigenspace> out;
    int total = 0;
    for (const KEigenvalue& cand : ctx.alg->k_table) {
        Mat shifted = kt - Mat::identity(n).scaled(cand.value);
        KEigenspace es{cand.name, cand.value, {}};
        for (RatVec& v : kernel_basis(shifted)) es.basis.push_back({&ctx, std::move(v)});
        total += static_cast<int>(es.basis.size());
        out.push_back(std::move(es));
    }
    if (total != n)
        throw Error("SpectrumMismatch", "K eigenspace dimensions do not sum to N");
    return out;
}

Classification classify(const WFormula& f, const OpMatrix& tau) {
    require_same_ctx(f.ctx, tau.ctx);
    WFormula tf = apply(tau, f);
    Classification c;
    c.antisym_part = {f.ctx, vec_scale(Rat(1, 2), vec_sub(f.coeffs, tf.coeffs))};
    c.sym_part = {f.ctx, vec_scale(Rat(1, 2), vec_add(f.coeffs, tf.coeffs))};
    c.pure_curvature = vec_is_zero(c.sym_part.coeffs);
    return c;
}

CurvatureReport curvature_report(const RelevantSet& ctx) {
    CurvatureReport r;
    for (const auto& e : ctx.entries) {
        r.qr.push_back(-e.b);
        r.laplacian.push_back(Rat(1) - e.b);
    }
    return r;
}

RatVec eliminate(const RatVec& f, const RatVec& g, int idx) {
    if (f.size() != g.size()) throw Error("DimensionMismatch", "eliminate vector sizes");
    if (idx < 0 || idx >= static_cast<int>(f.size()))
        throw Error("DimensionMismatch", "eliminate index out of range");
    if (g[static_cast<size_t>(idx)].is_zero())
        throw Error("ZeroPivot", "eliminating against a zero coefficient");
    return vec_sub(f, vec_scale(f[static_cast<size_t>(idx)] / g[static_cast<size_t>(idx)], g));
}

} // namespace wzb
