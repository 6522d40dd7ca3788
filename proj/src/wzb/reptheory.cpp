#include "wzb/reptheory.hpp"

#include <algorithm>

namespace wzb {

namespace {

std::vector<long> fund_coords_integral(const Algebra& alg, const WeightVec& mu) {
    RatVec c = to_fundamental(alg, mu);
    std::vector<long> out(c.size());
    for (size_t i = 0; i < c.size(); ++i) {
        if (!c[i].is_integer()) throw Error("NotInLattice", "non-integral fundamental coordinate");
        out[i] = c[i].num().get_si();
    }
    return out;
}

// u(n): mu in eps coordinates with weakly decreasing integer entries
bool u_dominant(const WeightVec& mu) {
    for (size_t i = 0; i + 1 < mu.size(); ++i)
        if (mu[i] < mu[i + 1]) return false;
    for (const Rat& c : mu)
        if (!c.is_integer()) throw Error("NotInLattice", "u(n) weight not integral");
    return true;
}

Rat sum_coords(const WeightVec& v) {
    Rat s(0);
    for (const Rat& c : v) s += c;
    return s;
}

WeightVec central_part(const Algebra& alg, const WeightVec& mu) {
    Rat avg = sum_coords(mu) / Rat(alg.rank);
    return WeightVec(static_cast<size_t>(alg.rank), avg);
}

} // namespace

HighestWeight highest_weight(const Algebra& alg, const std::vector<long>& fund) {
    if (static_cast<int>(fund.size()) != alg.rank)
        throw Error("DimensionMismatch", "fundamental coordinate count vs rank");
    for (size_t i = 0; i < fund.size(); ++i) {
        bool last_u = alg.family == Family::U && i + 1 == fund.size();
        if (fund[i] < 0 && !last_u)
            throw Error("NotDominant", "negative fundamental coordinate");
    }
    RatVec c(fund.size());
    for (size_t i = 0; i < fund.size(); ++i) c[i] = Rat(fund[i]);
    return {&alg, fund, from_fundamental(alg, c)};
}

bool is_dominant(const Algebra& alg, const WeightVec& mu) {
    if (alg.family == Family::U) return u_dominant(mu);
    for (long c : fund_coords_integral(alg, mu))
        if (c < 0) return false;
    return true;
}

bool is_relevant(const Algebra& alg, const HighestWeight& lambda, const TWeight& tw) {
    if (tw.label.kind != EpsLabel::Zero)
        return is_dominant(alg, vec_add(lambda.vec, tw.vec));
    // zero weight: lambda - lambda_Sigma (so odd) resp. lambda - lambda_T (g2)
    WeightVec top;
    if (alg.family == Family::SOodd)
        top = alg.fund_weights.back(); // spinor representation
    else if (alg.family == Family::G2)
        top = alg.fund_weights.front(); // standard representation
    else
        throw internal_error("zero weight outside so(odd)/g2");
    return is_dominant(alg, vec_sub(lambda.vec, top));
}

int RelevantSet::index_of(const EpsLabel& label) const {
    for (size_t i = 0; i < entries.size(); ++i)
        if (entries[i].label == label) return static_cast<int>(i);
    return -1;
}

RelevantSet relevant_weights(const Algebra& alg, const HighestWeight& lambda) {
    RelevantSet rs;
    rs.alg = &alg;
    rs.lambda = lambda;
    rs.dim_v = weyl_dim(alg, lambda.vec);
    for (const TWeight& tw : alg.t_weights) {
        if (!is_relevant(alg, lambda, tw)) continue;
        RelevantEntry e;
        e.label = tw.label;
        e.eps = tw.vec;
        e.mu = vec_add(lambda.vec, tw.vec);
        e.mu_fund = fund_coords_integral(alg, e.mu);
        e.dim = weyl_dim(alg, e.mu);
        e.dratio = Rat(e.dim, rs.dim_v);
        rs.entries.push_back(std::move(e));
    }

    const auto& f = lambda.fund;
    if (alg.family == Family::SOeven) {
        rs.degenerate = f[f.size() - 2] == f.back() && f.back() >= 1;
    } else if (alg.family == Family::Spin7) {
        rs.degenerate = f[2] == 2 * f[0] + 1 && f[0] >= 1;
    }

    // completeness of the decomposition
    BigInt total = 0;
    for (const auto& e : rs.entries) total += e.dim;
    if (total != BigInt(alg.dim_t) * rs.dim_v)
        throw internal_error("decomposition dimension sum");
    return rs;
}

RelevantSet decompose(const Algebra& alg, const HighestWeight& lambda) {
    RelevantSet rs = relevant_weights(alg, lambda);
    for (auto& e : rs.entries) {
        e.b = conformal_weight(alg, Ideal::Full, lambda, {e.label, e.eps});
        if (alg.family == Family::U)
            e.b_center = conformal_weight(alg, Ideal::Center, lambda, {e.label, e.eps});
    }
    // tr B = Cas^{[1]} = 0
    Rat tr(0);
    for (const auto& e : rs.entries) tr += e.b * e.dratio;
    if (!tr.is_zero()) throw internal_error("trace of conformal weight operator");
    return rs;
}

BigInt weyl_dim(const Algebra& alg, const WeightVec& mu) {
    Rat d(1);
    WeightVec shifted = vec_add(mu, alg.rho);
    for (const WeightVec& a : alg.pos_roots) d *= inner(alg, shifted, a) / inner(alg, alg.rho, a);
    if (!d.is_integer() || d.sign() <= 0)
        throw Error("NonIntegerDimension", "Weyl dimension not a positive integer");
    return d.num();
}

Poly weyl_numerator_poly(const Algebra& alg, const WeightVec& mu) {
    Poly p(Rat(1));
    WeightVec shifted = vec_add(mu, alg.rho);
    for (const WeightVec& a : alg.pos_roots)
        p *= Poly::linear(inner(alg, shifted, a), inner(alg, alg.rho, a));
    return p;
}

namespace {

Rat eps_norm_denominator(const Algebra& alg) {
    // <eps_max + 2 rho, eps_max>
    return inner(alg, vec_add(alg.eps_max, vec_scale(Rat(2), alg.rho)), alg.eps_max);
}

} // namespace

Rat casimir_l2(const Algebra& alg, Ideal ideal, const WeightVec& mu) {
    if (ideal != Ideal::Full && alg.family != Family::U)
        throw Error("BadIdeal", "Center/SU ideals exist for u(n) only");
    if (alg.family == Family::U && ideal != Ideal::Full) {
        WeightVec c = central_part(alg, mu);
        Rat center = -inner(alg, c, c);
        if (ideal == Ideal::Center) return center;
        WeightVec su = vec_sub(mu, c);
        return -inner(alg, vec_add(su, vec_scale(Rat(2), alg.rho)), su);
    }
    Rat freudenthal = inner(alg, vec_add(mu, vec_scale(Rat(2), alg.rho)), mu);
    return Rat(-2 * alg.dim_g, alg.dim_t) * freudenthal / eps_norm_denominator(alg);
}

Rat casimir_l2_adjoint(const Algebra& alg) { return casimir_l2(alg, Ideal::Full, alg.adjoint_hw); }

Rat casimir_l2_t(const Algebra& alg) { return Rat(-2 * alg.dim_g, alg.dim_t); }

namespace {

Rat ideal_dim(const Algebra& alg, Ideal ideal) {
    switch (ideal) {
        case Ideal::Center: return Rat(1);
        case Ideal::SU: return Rat(alg.param * alg.param - 1);
        default: return Rat(alg.dim_g);
    }
}

// the weight of T seen by the ideal: full weight, central part or su part
WeightVec ideal_weight(const Algebra& alg, Ideal ideal, const WeightVec& v) {
    switch (ideal) {
        case Ideal::Center: return central_part(alg, v);
        case Ideal::SU: return vec_sub(v, central_part(alg, v));
        default: return v;
    }
}

Rat confw_by_formula(const Algebra& alg, Ideal ideal, const WeightVec& lambda,
                     const WeightVec& eps) {
    WeightVec l = ideal_weight(alg, ideal, lambda);
    WeightVec e = ideal_weight(alg, ideal, eps);
    WeightVec emax = ideal_weight(alg, ideal, alg.eps_max);
    WeightVec rho = ideal == Ideal::Center ? weight_zero(alg) : alg.rho;
    Rat denom = inner(alg, vec_add(emax, vec_scale(Rat(2), rho)), emax);
    Rat num = inner(alg, vec_add(l, rho), e) - inner(alg, rho, emax) +
              (inner(alg, e, e) - inner(alg, emax, emax)) / Rat(2);
    return Rat(2) * ideal_dim(alg, ideal) / Rat(alg.dim_t) * num / denom;
}

Rat confw_by_casimirs(const Algebra& alg, Ideal ideal, const WeightVec& lambda,
                      const WeightVec& eps) {
    Rat cas_t = ideal == Ideal::Full
                    ? casimir_l2_t(alg)
                    : Rat(-2) * ideal_dim(alg, ideal) / Rat(alg.dim_t);
    Rat cas_sum = casimir_l2(alg, ideal, vec_add(lambda, eps));
    Rat cas_l = casimir_l2(alg, ideal, lambda);
    return (cas_sum - cas_t - cas_l) / Rat(-2);
}

// family closed forms for the conformal weights, from the coordinates of
// lambda in the catalog basis
Rat confw_closed_form(const Algebra& alg, Ideal ideal, const HighestWeight& lambda,
                      const EpsLabel& label) {
    if (alg.family == Family::U && ideal == Ideal::Center) {
        Rat s = sum_coords(lambda.vec) / Rat(alg.rank);
        return label.kind == EpsLabel::Minus ? -s : s;
    }
    const auto& f = lambda.fund;
    switch (alg.family) {
        case Family::SOodd:
        case Family::SOeven: {
            const int n = alg.n_of_so();
            const int r = alg.param;
            if (label.kind == EpsLabel::Zero) return Rat(-r);
            Rat mu_k = lambda.vec[static_cast<size_t>(label.k - 1)];
            if (label.kind == EpsLabel::Plus) return mu_k - Rat(label.k) + Rat(1);
            return -mu_k - Rat(n) + Rat(label.k) + Rat(1);
        }
        case Family::U: {
            Rat mu_k = lambda.vec[static_cast<size_t>(label.k - 1)];
            if (label.kind == EpsLabel::Plus) return mu_k - Rat(label.k) + Rat(1);
            return -mu_k + Rat(label.k) - Rat(alg.rank);
        }
        case Family::G2: {
            Rat a(f[0]), b(f[1]);
            switch (label.kind) {
                case EpsLabel::Zero: return Rat(-2);
                case EpsLabel::Plus:
                    if (label.k == 1) return Rat(2, 3) * a + b;
                    if (label.k == 2) return Rat(-1, 3) + Rat(1, 3) * a + b;
                    return Rat(-4, 3) + Rat(1, 3) * a;
                default:
                    if (label.k == 1) return Rat(-10, 3) - (Rat(2, 3) * a + b);
                    if (label.k == 2) return Rat(-3) - (Rat(1, 3) * a + b);
                    return Rat(-2) - Rat(1, 3) * a;
            }
        }
        default: { // Spin7
            Rat a(f[0]), b(f[1]), c(f[2]);
            Rat half_a = a / Rat(2), qc = c / Rat(4);
            Rat pos, off;
            switch (label.k) {
                case 1: pos = half_a + b + Rat(3) * qc; off = Rat(9, 4); break;
                case 2: pos = half_a + b + qc; off = Rat(7, 4); break;
                case 3: pos = half_a + qc; off = Rat(3, 4); break;
                default: pos = half_a - qc; off = Rat(1, 4); break;
            }
            return label.kind == EpsLabel::Plus ? -(Rat(9, 4) - off) + pos
                                                : -(Rat(9, 4) + off) - pos;
        }
    }
}

} // namespace

Rat conformal_weight(const Algebra& alg, Ideal ideal, const HighestWeight& lambda,
                     const TWeight& tw) {
    if (ideal != Ideal::Full && alg.family != Family::U)
        throw Error("BadIdeal", "Center/SU ideals exist for u(n) only");
    if (!is_relevant(alg, lambda, tw))
        throw Error("NotRelevant", "weight " + tw.label.str() + " not relevant");
    Rat b = confw_by_formula(alg, ideal, lambda.vec, tw.vec);
    if (ideal != Ideal::SU) {
        if (b != confw_by_casimirs(alg, ideal, lambda.vec, tw.vec))
            throw internal_error("conformal weight: formula vs Casimir difference");
        if (b != confw_closed_form(alg, ideal, lambda, tw.label))
            throw internal_error("conformal weight: formula vs closed form");
    } else {
        // SU part must complement the central part
        Rat full = confw_by_formula(alg, Ideal::Full, lambda.vec, tw.vec);
        Rat center = confw_by_formula(alg, Ideal::Center, lambda.vec, tw.vec);
        if (b != full - center) throw internal_error("conformal weight: ideal split");
    }
    return b;
}

Rat conformal_weight_slope(const Algebra& alg, Ideal ideal, const WeightVec& eps) {
    // only the <lambda + rho, eps> term varies along lambda + t*rho
    WeightVec e = ideal_weight(alg, ideal, eps);
    WeightVec rho_h = ideal == Ideal::Center ? weight_zero(alg) : alg.rho;
    WeightVec emax = ideal_weight(alg, ideal, alg.eps_max);
    Rat denom = inner(alg, vec_add(emax, vec_scale(Rat(2), rho_h)), emax);
    return Rat(2) * ideal_dim(alg, ideal) / Rat(alg.dim_t) * inner(alg, alg.rho, e) / denom;
}

Rat higher_casimir(const Algebra& alg, const HighestWeight& lambda, unsigned k) {
    if (k == 0) throw Error("BadIdeal", "higher Casimir needs k >= 1");
    RelevantSet rs = decompose(alg, lambda);
    Rat s(0);
    for (const auto& e : rs.entries) s += e.b.pow(k) * e.dratio;
    return s;
}

namespace {

// reflect into the open dominant chamber; sign 0 when a wall is hit
std::pair<int, WeightVec> to_dominant_chamber(const Algebra& alg, WeightVec v) {
    int sign = 1;
    bool moved = true;
    while (moved) {
        moved = false;
        for (const WeightVec& a : alg.simple_roots) {
            Rat p = inner(alg, v, a);
            if (p.is_zero()) return {0, v};
            if (p.sign() < 0) {
                Rat c = Rat(2) * p / inner(alg, a, a);
                v = vec_sub(v, vec_scale(c, a));
                sign = -sign;
                moved = true;
            }
        }
    }
    return {sign, v};
}

} // namespace

std::vector<std::pair<std::vector<long>, long>>
brute_force_decompose(const Algebra& alg, const HighestWeight& lambda, const BigInt& max_dim) {
    if (weyl_dim(alg, lambda.vec) > max_dim)
        throw Error("TooLarge", "dim V_lambda above the configured bound");
    std::map<std::vector<long>, long> acc;
    for (const TWeight& tw : alg.t_weights) {
        WeightVec v = vec_add(vec_add(lambda.vec, tw.vec), alg.rho);
        auto [sign, dom] = to_dominant_chamber(alg, v);
        if (sign == 0) continue;
        acc[fund_coords_integral(alg, vec_sub(dom, alg.rho))] += sign;
    }
    std::vector<std::pair<std::vector<long>, long>> out;
    for (auto& [fund, mult] : acc)
        if (mult != 0) out.emplace_back(fund, mult);
    return out;
}

} // namespace wzb
