#include "wzb/algebra.hpp"

namespace wzb {

std::string EpsLabel::str() const {
    switch (kind) {
        case Plus: return "+e" + std::to_string(k);
        case Minus: return "-e" + std::to_string(k);
        default: return "0";
    }
}

std::string Algebra::name() const {
    switch (family) {
        case Family::SOodd:
        case Family::SOeven: return "so(" + std::to_string(n_of_so()) + ")";
        case Family::U: return "u(" + std::to_string(param) + ")";
        case Family::G2: return "g2";
        default: return "spin(7)";
    }
}

namespace {

WeightVec unit(int rank, int k, Rat c = Rat(1)) {
    WeightVec v(static_cast<size_t>(rank));
    v[static_cast<size_t>(k - 1)] = std::move(c);
    return v;
}

WeightVec ones_prefix(int rank, int upto, const Rat& c) {
    WeightVec v(static_cast<size_t>(rank));
    for (int i = 0; i < upto; ++i) v[static_cast<size_t>(i)] = c;
    return v;
}

void push_pm(std::vector<TWeight>& tw, int k, const WeightVec& eps) {
    tw.push_back({EpsLabel::plus(k), eps});
    WeightVec neg(eps.size());
    for (size_t i = 0; i < eps.size(); ++i) neg[i] = -eps[i];
    tw.push_back({EpsLabel::minus(k), neg});
}

Algebra build_so(int r, bool odd) {
    if (odd && r < 1) throw Error("UnsupportedFamily", "so(2r+1) needs r >= 1");
    if (!odd && r < 2) throw Error("UnsupportedFamily", "so(2r) needs r >= 2");
    Algebra a;
    a.family = odd ? Family::SOodd : Family::SOeven;
    a.param = r;
    a.rank = r;
    const int n = odd ? 2 * r + 1 : 2 * r;
    a.dim_t = n;
    a.dim_g = n * (n - 1) / 2;
    a.gram = Mat::identity(r);

    for (int k = 1; k <= r; ++k) {
        if (odd) {
            a.fund_weights.push_back(k < r ? ones_prefix(r, k, Rat(1))
                                           : ones_prefix(r, r, Rat(1, 2)));
        } else {
            if (k <= r - 2) {
                a.fund_weights.push_back(ones_prefix(r, k, Rat(1)));
            } else {
                WeightVec w = ones_prefix(r, r, Rat(1, 2));
                if (k == r) w[static_cast<size_t>(r - 1)] = Rat(-1, 2);
                a.fund_weights.push_back(std::move(w));
            }
        }
    }

    a.rho.resize(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i)
        a.rho[static_cast<size_t>(i)] = odd ? Rat(2 * (r - i) - 1, 2) : Rat(r - 1 - i);

    a.eps_max = unit(r, 1);
    for (int k = 1; k <= r; ++k) push_pm(a.t_weights, k, unit(r, k));
    if (odd) a.t_weights.push_back({EpsLabel::zero(), WeightVec(static_cast<size_t>(r))});

    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j) {
            WeightVec diff = unit(r, i);
            diff[static_cast<size_t>(j - 1)] = Rat(-1);
            a.pos_roots.push_back(diff);
            WeightVec sum = unit(r, i);
            sum[static_cast<size_t>(j - 1)] = Rat(1);
            a.pos_roots.push_back(sum);
        }
    if (odd)
        for (int i = 1; i <= r; ++i) a.pos_roots.push_back(unit(r, i));

    for (int i = 1; i < r; ++i) {
        WeightVec s = unit(r, i);
        s[static_cast<size_t>(i)] = Rat(-1);
        a.simple_roots.push_back(s);
    }
    if (odd) {
        a.simple_roots.push_back(unit(r, r));
    } else {
        WeightVec s = unit(r, r - 1);
        s[static_cast<size_t>(r - 1)] = Rat(1);
        a.simple_roots.push_back(s);
    }

    a.k_table = {{"C", Rat(-(n - 1)), 1},
                 {"Sym0", Rat(1), (n - 1) / 2},
                 {"g", Rat(-1), n / 2}};

    if (r == 1) {
        a.adjoint_hw = unit(r, 1); // so(3): adjoint is T itself
    } else {
        a.adjoint_hw = unit(r, 1);
        a.adjoint_hw[1] = Rat(1);
    }
    return a;
}

Algebra build_u(int n) {
    if (n < 2) throw Error("UnsupportedFamily", "u(n) needs n >= 2");
    Algebra a;
    a.family = Family::U;
    a.param = n;
    a.rank = n;
    a.dim_t = 2 * n;
    a.dim_g = n * n;
    a.gram = Mat::identity(n);

    for (int k = 1; k <= n; ++k) a.fund_weights.push_back(ones_prefix(n, k, Rat(1)));

    // rho of the su(n) ideal; orthogonal to the central direction
    a.rho.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) a.rho[static_cast<size_t>(i)] = Rat(n - 1 - 2 * i, 2);

    a.eps_max = unit(n, 1);
    // holomorphic weights (of T^{0,1}) first, then antiholomorphic
    for (int k = 1; k <= n; ++k) a.t_weights.push_back({EpsLabel::minus(k), unit(n, k, Rat(-1))});
    for (int k = 1; k <= n; ++k) a.t_weights.push_back({EpsLabel::plus(k), unit(n, k)});

    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            WeightVec diff = unit(n, i);
            diff[static_cast<size_t>(j - 1)] = Rat(-1);
            a.pos_roots.push_back(diff);
        }
    for (int i = 1; i < n; ++i) {
        WeightVec s = unit(n, i);
        s[static_cast<size_t>(i)] = Rat(-1);
        a.simple_roots.push_back(s);
    }

    a.k_table = {{"pr", Rat(-n), std::nullopt}, {"zero", Rat(0), std::nullopt}};

    a.adjoint_hw = unit(n, 1);
    a.adjoint_hw[static_cast<size_t>(n - 1)] = Rat(-1);
    return a;
}

Algebra build_g2() {
    Algebra a;
    a.family = Family::G2;
    a.param = 0;
    a.rank = 2;
    a.dim_t = 7;
    a.dim_g = 14;
    a.gram = Mat(2, 2);
    a.gram.at(0, 0) = Rat(1);
    a.gram.at(1, 1) = Rat(1);
    a.gram.at(0, 1) = Rat(1, 2);
    a.gram.at(1, 0) = Rat(1, 2);

    a.fund_weights = {WeightVec{Rat(1), Rat(0)}, WeightVec{Rat(1), Rat(1)}};
    a.rho = WeightVec{Rat(2), Rat(1)};
    a.eps_max = WeightVec{Rat(1), Rat(0)};

    push_pm(a.t_weights, 1, WeightVec{Rat(1), Rat(0)});
    push_pm(a.t_weights, 2, WeightVec{Rat(0), Rat(1)});
    push_pm(a.t_weights, 3, WeightVec{Rat(1), Rat(-1)}); // eps3 = eps1 - eps2
    a.t_weights.push_back({EpsLabel::zero(), WeightVec{Rat(0), Rat(0)}});

    a.pos_roots = {WeightVec{Rat(1), Rat(0)},  WeightVec{Rat(0), Rat(1)},
                   WeightVec{Rat(1), Rat(-1)}, WeightVec{Rat(1), Rat(1)},
                   WeightVec{Rat(2), Rat(-1)}, WeightVec{Rat(-1), Rat(2)}};
    a.simple_roots = {WeightVec{Rat(1), Rat(-1)}, WeightVec{Rat(-1), Rat(2)}};

    a.k_table = {{"C", Rat(-4), 1},
                 {"Sym0", Rat(2, 3), 3},
                 {"g", Rat(0), 2},
                 {"gperp", Rat(-2), 1}};

    a.adjoint_hw = WeightVec{Rat(1), Rat(1)}; // omega_2
    return a;
}

Algebra build_spin7() {
    Algebra a;
    a.family = Family::Spin7;
    a.param = 0;
    a.rank = 3;
    a.dim_t = 8;
    a.dim_g = 21;
    a.gram = Mat::identity(3);

    a.fund_weights = {WeightVec{Rat(1), Rat(0), Rat(0)}, WeightVec{Rat(1), Rat(1), Rat(0)},
                      WeightVec{Rat(1, 2), Rat(1, 2), Rat(1, 2)}};
    a.rho = WeightVec{Rat(5, 2), Rat(3, 2), Rat(1, 2)};
    a.eps_max = WeightVec{Rat(1, 2), Rat(1, 2), Rat(1, 2)};

    push_pm(a.t_weights, 1, WeightVec{Rat(1, 2), Rat(1, 2), Rat(1, 2)});
    push_pm(a.t_weights, 2, WeightVec{Rat(1, 2), Rat(1, 2), Rat(-1, 2)});
    push_pm(a.t_weights, 3, WeightVec{Rat(1, 2), Rat(-1, 2), Rat(1, 2)});
    push_pm(a.t_weights, 4, WeightVec{Rat(1, 2), Rat(-1, 2), Rat(-1, 2)});

    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) {
            WeightVec diff = unit(3, i);
            diff[static_cast<size_t>(j - 1)] = Rat(-1);
            a.pos_roots.push_back(diff);
            WeightVec sum = unit(3, i);
            sum[static_cast<size_t>(j - 1)] = Rat(1);
            a.pos_roots.push_back(sum);
        }
    for (int i = 1; i <= 3; ++i) a.pos_roots.push_back(unit(3, i));

    a.simple_roots = {WeightVec{Rat(1), Rat(-1), Rat(0)}, WeightVec{Rat(0), Rat(1), Rat(-1)},
                      WeightVec{Rat(0), Rat(0), Rat(1)}};

    a.k_table = {{"C", Rat(-21, 4), 1},
                 {"Sym0", Rat(3, 4), 3},
                 {"g", Rat(-1, 4), 3},
                 {"gperp", Rat(-9, 4), 1}};

    a.adjoint_hw = WeightVec{Rat(1), Rat(1), Rat(0)}; // omega_2
    return a;
}

} // namespace

Algebra build_algebra(Family family, int param) {
    switch (family) {
        case Family::SOodd: return build_so(param, true);
        case Family::SOeven: return build_so(param, false);
        case Family::U: return build_u(param);
        case Family::G2: return build_g2();
        default: return build_spin7();
    }
}

Rat inner(const Algebra& alg, const WeightVec& v, const WeightVec& w) {
    if (static_cast<int>(v.size()) != alg.rank || static_cast<int>(w.size()) != alg.rank)
        throw Error("DimensionMismatch", "weight coordinate length vs rank");
    Rat s(0);
    for (int i = 0; i < alg.rank; ++i) {
        if (v[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; j < alg.rank; ++j)
            s += v[static_cast<size_t>(i)] * alg.gram.at(i, j) * w[static_cast<size_t>(j)];
    }
    return s;
}

RatVec to_fundamental(const Algebra& alg, const WeightVec& v) {
    if (static_cast<int>(v.size()) != alg.rank)
        throw Error("DimensionMismatch", "weight coordinate length vs rank");
    // solve F c = v with F's columns the fundamental weights
    const int r = alg.rank;
    Mat aug(r, r + 1);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j)
            aug.at(i, j) = alg.fund_weights[static_cast<size_t>(j)][static_cast<size_t>(i)];
        aug.at(i, r) = v[static_cast<size_t>(i)];
    }
    // plain rational elimination; the system is square and regular
    for (int c = 0; c < r; ++c) {
        int piv = -1;
        for (int i = c; i < r; ++i)
            if (!aug.at(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) throw Error("NotInLattice", "fundamental weights degenerate");
        for (int j = 0; j <= r; ++j) std::swap(aug.at(c, j), aug.at(piv, j));
        for (int i = 0; i < r; ++i) {
            if (i == c || aug.at(i, c).is_zero()) continue;
            Rat f = aug.at(i, c) / aug.at(c, c);
            for (int j = c; j <= r; ++j) aug.at(i, j) -= f * aug.at(c, j);
        }
    }
    RatVec c(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) c[static_cast<size_t>(i)] = aug.at(i, r) / aug.at(i, i);
    return c;
}

WeightVec from_fundamental(const Algebra& alg, const RatVec& coeffs) {
    if (static_cast<int>(coeffs.size()) != alg.rank)
        throw Error("DimensionMismatch", "coefficient count vs rank");
    WeightVec v(static_cast<size_t>(alg.rank));
    for (int k = 0; k < alg.rank; ++k)
        v = vec_add(v, vec_scale(coeffs[static_cast<size_t>(k)],
                                 alg.fund_weights[static_cast<size_t>(k)]));
    return v;
}

WeightVec weight_zero(const Algebra& alg) { return WeightVec(static_cast<size_t>(alg.rank)); }

} // namespace wzb
