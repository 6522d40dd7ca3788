#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace wzb;
using namespace wzbtest;

namespace {

RatVec coeffs_at(const RelevantSet& rs, std::vector<std::pair<EpsLabel, Rat>> vals) {
    RatVec out(static_cast<size_t>(rs.size()));
    for (auto& [label, v] : vals) {
        int i = rs.index_of(label);
        REQUIRE(i >= 0);
        out[static_cast<size_t>(i)] = v;
    }
    return out;
}

void check_twist_invariants(const RelevantSet& rs, const OpMatrix& tau) {
    const int n = rs.size();
    // involution
    CHECK(tau.m * tau.m == Mat::identity(n));
    // column sums 1 (tau(1) = 1)
    for (int j = 0; j < n; ++j) {
        Rat s(0);
        for (int i = 0; i < n; ++i) s += tau.m.at(i, j);
        CHECK(s == Rat(1));
    }
    // weighted symmetry tau_{e,f} d_f = tau_{f,e} d_e
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            CHECK(tau.m.at(i, j) * rs.entries[static_cast<size_t>(j)].dratio ==
                  tau.m.at(j, i) * rs.entries[static_cast<size_t>(i)].dratio);
    // B lies in the (-1)-eigenspace
    WFormula b = b_operator(rs);
    CHECK(apply(tau, b).coeffs == vec_scale(Rat(-1), b.coeffs));
}

void check_recursion_identity(const RelevantSet& rs, const OpMatrix& tau, const OpMatrix& k) {
    const int n = rs.size();
    Mat bdiag(n, n);
    for (int i = 0; i < n; ++i) bdiag.at(i, i) = rs.entries[static_cast<size_t>(i)].b;
    Mat lhs = k.m + bdiag + tau.m * bdiag * tau.m;
    CHECK(lhs == Mat::identity(n).scaled(casimir_l2_t(*rs.alg)));
}

} // namespace

TEST_CASE("inner product and trace in the projector basis") {
    Algebra g2 = build_algebra(Family::G2);
    RelevantSet rs = decompose(g2, highest_weight(g2, {1, 0}));
    CHECK(wf_trace(wf_unit(rs)) == Rat(g2.dim_t));
    CHECK(wf_trace(b_operator(rs)) == Rat(0));
    for (int i = 0; i < rs.size(); ++i)
        for (int j = 0; j < rs.size(); ++j) {
            RatVec pi(static_cast<size_t>(rs.size())), pj(static_cast<size_t>(rs.size()));
            pi[static_cast<size_t>(i)] = Rat(1);
            pj[static_cast<size_t>(j)] = Rat(1);
            Rat v = wf_inner(wf_from(rs, pi), wf_from(rs, pj));
            CHECK(v == (i == j ? rs.entries[static_cast<size_t>(i)].dratio : Rat(0)));
        }
}

TEST_CASE("wf_poly evaluates polynomials at the conformal weights") {
    Algebra so9 = build_algebra(Family::SOodd, 4);
    RelevantSet rs = decompose(so9, highest_weight(so9, {0, 1, 0, 0}));
    CHECK(wf_poly(rs, {Rat(0), Rat(1)}).coeffs == b_operator(rs).coeffs);
    CHECK(wf_poly(rs, {Rat(1)}).coeffs == wf_unit(rs).coeffs);
    const int n = 9;
    Rat cas = casimir_l2(so9, Ideal::Full, rs.lambda.vec);
    WFormula p2 = wf_poly(rs, {Rat(2, n) * cas, Rat(n - 2, 2), Rat(1)});
    CHECK(wf_trace(p2) == Rat(0));
}

TEST_CASE("twist matrix for so(5) on 1-forms equals the invariant-map oracle") {
    Algebra so5 = build_algebra(Family::SOodd, 2);
    RelevantSet rs = decompose(so5, highest_weight(so5, {1, 0}));
    REQUIRE(rs.size() == 3);
    // relevant order (+e1, -e1, +e2) carries (Sym^2_0 T, C, g)
    CHECK(rs.entries[0].dim == 14);
    CHECK(rs.entries[1].dim == 1);
    CHECK(rs.entries[2].dim == 10);

    // the three invariant maps of T(x)T(x)T -> T in the projector basis:
    // <a,b>c = identity, <a,c>b = the swap of T(x)T, <b,c>a = 5 pr_C.
    // The twist permutes them: F1 -> F1, F2 -> F3, F3 -> F2.
    RatVec f1{Rat(1), Rat(1), Rat(1)};
    RatVec f2{Rat(1), Rat(1), Rat(-1)};
    RatVec f3{Rat(0), Rat(5), Rat(0)};
    Mat s(3, 3), img(3, 3);
    for (int i = 0; i < 3; ++i) {
        s.at(i, 0) = f1[static_cast<size_t>(i)];
        s.at(i, 1) = f2[static_cast<size_t>(i)];
        s.at(i, 2) = f3[static_cast<size_t>(i)];
        img.at(i, 0) = f1[static_cast<size_t>(i)];
        img.at(i, 1) = f3[static_cast<size_t>(i)]; // tau F2 = F3
        img.at(i, 2) = f2[static_cast<size_t>(i)]; // tau F3 = F2
    }
    // C = img * s^{-1}; the oracle matrix rows are the images C e_i
    Mat aug(3, 6);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) aug.at(i, j) = s.at(i, j);
        for (int j = 0; j < 3; ++j) aug.at(i, 3 + j) = Rat(i == j ? 1 : 0);
    }
    for (int c = 0; c < 3; ++c) {
        int piv = -1;
        for (int i = c; i < 3; ++i)
            if (!aug.at(i, c).is_zero()) {
                piv = i;
                break;
            }
        REQUIRE(piv >= 0);
        for (int j = 0; j < 6; ++j) std::swap(aug.at(c, j), aug.at(piv, j));
        Rat p = aug.at(c, c);
        for (int j = 0; j < 6; ++j) aug.at(c, j) /= p;
        for (int i = 0; i < 3; ++i) {
            if (i == c) continue;
            Rat f = aug.at(i, c);
            if (f.is_zero()) continue;
            for (int j = 0; j < 6; ++j) aug.at(i, j) -= f * aug.at(c, j);
        }
    }
    Mat sinv(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) sinv.at(i, j) = aug.at(i, 3 + j);
    Mat c = img * sinv;
    Mat oracle = c.transposed(); // row eps holds the expansion of tau pr_eps

    OpMatrix tau = twist_matrix(rs);
    CHECK(tau.m == oracle);
    check_twist_invariants(rs, tau);
}

TEST_CASE("twist invariants across families on random weights") {
    std::mt19937 rng(101);
    for (Family fam : all_families()) {
        for (int it = 0; it < 20; ++it) {
            Algebra alg = random_family_instance(fam, rng);
            HighestWeight hw = random_lambda(alg, rng);
            RelevantSet rs = decompose(alg, hw);
            OpMatrix tau = twist_matrix(rs);
            check_twist_invariants(rs, tau);
            OpMatrix k = k_matrix(rs, tau);
            check_recursion_identity(rs, tau, k);
        }
    }
}

TEST_CASE("singular twist entries across the catalog") {
    // so(5), spinor weight: relevant {+e1, 0}; the (0,0) entry is 0/0
    // identically and comes from the column sum
    Algebra so5 = build_algebra(Family::SOodd, 2);
    RelevantSet rs = decompose(so5, highest_weight(so5, {0, 1}));
    REQUIRE(rs.size() == 2);
    OpMatrix tau = twist_matrix(rs);
    Mat expect(2, 2);
    expect.at(0, 0) = Rat(3, 5);
    expect.at(0, 1) = Rat(8, 5);
    expect.at(1, 0) = Rat(2, 5);
    expect.at(1, 1) = Rat(-3, 5);
    CHECK(tau.m == expect);
    check_twist_invariants(rs, tau);

    // so(6) with mu_r = 1/2: the diagonal entry at -e3 is 0/0 along the ray
    Algebra so6 = build_algebra(Family::SOeven, 3);
    RelevantSet rs6 = decompose(so6, highest_weight(so6, {0, 1, 0}));
    OpMatrix tau6 = twist_matrix(rs6);
    check_twist_invariants(rs6, tau6);
    check_recursion_identity(rs6, tau6, k_matrix(rs6, tau6));

    // g2, lambda = 2 omega_1: the (-e1, +e2) denominator vanishes (a = 2)
    Algebra g2 = build_algebra(Family::G2);
    RelevantSet rsg = decompose(g2, highest_weight(g2, {2, 0}));
    Rat den = Rat(3) * (rsg.entries[static_cast<size_t>(rsg.index_of(EpsLabel::minus(1)))].b +
                        rsg.entries[static_cast<size_t>(rsg.index_of(EpsLabel::plus(2)))].b) +
              Rat(13);
    CHECK(den.is_zero());
    OpMatrix taug = twist_matrix(rsg);
    check_twist_invariants(rsg, taug);

    // spin(7), lambda = omega_1 + omega_3: the (+e4, -e3) denominator vanishes
    Algebra s7 = build_algebra(Family::Spin7);
    RelevantSet rss = decompose(s7, highest_weight(s7, {1, 0, 1}));
    Rat dens = Rat(2) * (rss.entries[static_cast<size_t>(rss.index_of(EpsLabel::plus(4)))].b +
                         rss.entries[static_cast<size_t>(rss.index_of(EpsLabel::minus(3)))].b) +
               Rat(11);
    CHECK(dens.is_zero());
    OpMatrix taus = twist_matrix(rss);
    check_twist_invariants(rss, taus);
    check_recursion_identity(rss, taus, k_matrix(rss, taus));
}

TEST_CASE("Bochner coefficient vectors on the worked examples") {
    Algebra g2 = build_algebra(Family::G2);
    RelevantSet t7 = decompose(g2, highest_weight(g2, {1, 0}));
    CHECK(bochner_g2(t7).coeffs == coeffs_at(t7, {{EpsLabel::plus(1), Rat(24)},
                                                  {EpsLabel::minus(1), Rat(-144)},
                                                  {EpsLabel::plus(2), Rat(-72)},
                                                  {EpsLabel::zero(), Rat(72)}}));

    Algebra s7 = build_algebra(Family::Spin7);
    RelevantSet t8 = decompose(s7, highest_weight(s7, {0, 0, 1}));
    CHECK(bochner_spin7(t8).coeffs == coeffs_at(t8, {{EpsLabel::plus(1), Rat(15)},
                                                     {EpsLabel::minus(1), Rat(-105)},
                                                     {EpsLabel::plus(2), Rat(-45)},
                                                     {EpsLabel::plus(4), Rat(75)}}));

    // no Bochner identity on Lambda^2_14 resp. Lambda^2_21
    RelevantSet l14 = decompose(g2, highest_weight(g2, {0, 1}));
    CHECK(vec_is_zero(bochner_g2(l14).coeffs));
    RelevantSet l21 = decompose(s7, highest_weight(s7, {0, 1, 0}));
    CHECK(vec_is_zero(bochner_spin7(l21).coeffs));

    CHECK_THROWS_WITH_AS(bochner_g2(t8), doctest::Contains("WrongFamily"), Error);
}

TEST_CASE("27 p3(B) equals the g2 Bochner vector") {
    Algebra g2 = build_algebra(Family::G2);
    std::mt19937 rng(59);
    for (int it = 0; it < 30; ++it) {
        HighestWeight hw = random_lambda(g2, rng, 5);
        RelevantSet rs = decompose(g2, hw);
        Rat cas = casimir_l2(g2, Ideal::Full, hw.vec);
        WFormula p3 =
            wf_poly(rs, {Rat(2, 3) * cas, Rat(1, 2) * cas + Rat(4), Rat(13, 3), Rat(1)});
        CHECK(vec_scale(Rat(27), p3.coeffs) == bochner_g2(rs).coeffs);
    }
}

TEST_CASE("classifying endomorphism properties") {
    std::mt19937 rng(61);
    for (Family fam : all_families()) {
        for (int it = 0; it < 15; ++it) {
            Algebra alg = random_family_instance(fam, rng);
            HighestWeight hw = random_lambda(alg, rng);
            RelevantSet rs = decompose(alg, hw);
            OpMatrix tau = twist_matrix(rs);
            OpMatrix k = k_matrix(rs, tau);

            WFormula one = wf_unit(rs);
            CHECK(apply(k, one).coeffs == vec_scale(casimir_l2_t(alg), one.coeffs));
            WFormula b = b_operator(rs);
            if (alg.family != Family::U) {
                Rat kb = casimir_l2_t(alg) - Rat(1, 2) * casimir_l2_adjoint(alg);
                CHECK(apply(k, b).coeffs == vec_scale(kb, b.coeffs));
            }

            // spectrum within the table and eigenspace dimensions
            auto spaces = k_eigenspaces(rs, k);
            int total = 0;
            for (const auto& es : spaces) {
                total += static_cast<int>(es.basis.size());
                for (const KEigenvalue& cand : alg.k_table)
                    if (cand.name == es.name && cand.zero_weight_bound)
                        CHECK(static_cast<int>(es.basis.size()) <= *cand.zero_weight_bound);
                for (const WFormula& v : es.basis)
                    CHECK(apply(k, v).coeffs == vec_scale(es.eigenvalue, v.coeffs));
            }
            CHECK(total == rs.size());

            if (alg.family == Family::G2 || alg.family == Family::Spin7) {
                // at most one Bochner identity
                CHECK(spaces.back().basis.size() <= 1);
                WFormula beta = alg.family == Family::G2 ? bochner_g2(rs) : bochner_spin7(rs);
                Rat kappa = alg.k_table.back().value;
                CHECK(apply(k, beta).coeffs == vec_scale(kappa, beta.coeffs));
                if (!vec_is_zero(beta.coeffs)) {
                    REQUIRE(spaces.back().basis.size() == 1);
                    CHECK(vec_proportional(spaces.back().basis[0].coeffs, beta.coeffs));
                } else {
                    CHECK(spaces.back().basis.empty());
                }
            }
            if (alg.is_so()) {
                // kappa_C eigenspace is spanned by the unit
                REQUIRE(spaces.front().basis.size() == 1);
                CHECK(vec_proportional(spaces.front().basis[0].coeffs, one.coeffs));
            }
            if (alg.family == Family::U) {
                // block-diagonal rank-1 blocks with eigenvalue -n
                RatVec pr01(static_cast<size_t>(rs.size())), pr10(static_cast<size_t>(rs.size()));
                for (int i = 0; i < rs.size(); ++i) {
                    if (rs.entries[static_cast<size_t>(i)].label.kind == EpsLabel::Minus)
                        pr01[static_cast<size_t>(i)] = Rat(1);
                    else
                        pr10[static_cast<size_t>(i)] = Rat(1);
                }
                CHECK(apply(k, wf_from(rs, pr01)).coeffs == vec_scale(Rat(-alg.param), pr01));
                CHECK(apply(k, wf_from(rs, pr10)).coeffs == vec_scale(Rat(-alg.param), pr10));
            }
        }
    }
}

TEST_CASE("recursion basis for so(n) matches the closed forms") {
    std::mt19937 rng(67);
    for (int it = 0; it < 25; ++it) {
        Algebra alg = it % 2 ? random_family_instance(Family::SOodd, rng)
                             : random_family_instance(Family::SOeven, rng);
        const int n = alg.n_of_so();
        HighestWeight hw = random_lambda(alg, rng);
        RelevantSet rs = decompose(alg, hw);
        BasisReport rep = recursion_basis(rs);
        Rat cas = casimir_l2(alg, Ideal::Full, hw.vec);

        if (rep.polys.size() >= 3) {
            WFormula p2 = wf_poly(rs, {Rat(2, n) * cas, Rat(n - 2, 2), Rat(1)});
            CHECK(rep.polys[2].f.coeffs == p2.coeffs);
        }
        if (rep.polys.size() >= 4) {
            WFormula p3 =
                wf_poly(rs, {cas, Rat(2, n) * cas + Rat(n * (n - 2), 4), Rat(n - 1), Rat(1)});
            CHECK(rep.polys[3].f.coeffs == p3.coeffs);
        }
        // alternating twist eigenvalues; orthogonality holds across distinct
        // eigenspaces (within one K-eigenspace the closed-form sequence is
        // independent but not orthogonal, e.g. <p3, B> != 0)
        for (size_t i = 0; i < rep.polys.size(); ++i) {
            CHECK(rep.polys[i].tau_eig == (i % 2 == 0 ? 1 : -1));
            for (size_t j = 0; j < i; ++j) {
                bool separated = rep.polys[i].tau_eig != rep.polys[j].tau_eig ||
                                 rep.polys[i].k_eig != rep.polys[j].k_eig;
                if (separated)
                    CHECK(wf_inner(rep.polys[i].f, rep.polys[j].f).is_zero());
            }
        }
        if (rs.degenerate) {
            CHECK(rep.spin_gap);
            CHECK_FALSE(rep.complete);
            CHECK(static_cast<int>(rep.polys.size()) == rs.size() - 1);
        } else {
            CHECK_FALSE(rep.spin_gap);
            CHECK(rep.complete);
            int minus = 0;
            for (const auto& bv : rep.polys) minus += bv.tau_eig < 0;
            CHECK(minus == rs.size() / 2);
        }
    }
}

TEST_CASE("Rarita-Schwinger: p3 coefficients match the worked example") {
    for (int r : {4, 5}) {
        Algebra so = build_algebra(Family::SOeven, r);
        for (int variant = 0; variant < 2; ++variant) {
            std::vector<long> f(static_cast<size_t>(r), 0);
            f[0] = 1;
            f[static_cast<size_t>(variant ? r - 1 : r - 2)] = 1; // omega_1 + omega_{r-1 or r}
            RelevantSet rs = decompose(so, highest_weight(so, f));
            REQUIRE(rs.size() == 4);
            BasisReport rep = recursion_basis(rs);
            REQUIRE(rep.polys.size() == 4);
            EpsLabel fourth = variant ? EpsLabel::plus(r) : EpsLabel::minus(r);
            RatVec expected =
                coeffs_at(rs, {{EpsLabel::plus(1), Rat((3 + 2 * r) * (r - 1), 2)},
                               {EpsLabel::minus(1), Rat(-(2 * r - 1) * (r * r - 1))},
                               {EpsLabel::plus(2), Rat(-(2 * r - 1) * (r + 1), 2)},
                               {fourth, Rat(-1)}});
            CHECK(rep.polys[3].f.coeffs == expected);
            // q(R) row: -b per entry
            CurvatureReport cur = curvature_report(rs);
            RatVec qr = coeffs_at(rs, {{EpsLabel::plus(1), Rat(-3, 2)},
                                       {EpsLabel::minus(1), Rat(4 * r - 1, 2)},
                                       {EpsLabel::plus(2), Rat(1, 2)},
                                       {fourth, Rat(2 * r - 1, 2)}});
            CHECK(cur.qr == qr);
        }
    }
}

TEST_CASE("recursion basis for g2 and spin(7): explicit start, kernel completion") {
    std::mt19937 rng(71);
    for (Family fam : {Family::G2, Family::Spin7}) {
        Algebra alg = build_algebra(fam);
        for (int it = 0; it < 25; ++it) {
            HighestWeight hw = random_lambda(alg, rng, 4);
            RelevantSet rs = decompose(alg, hw);
            BasisReport rep = recursion_basis(rs);
            CHECK(rep.complete);
            CHECK(static_cast<int>(rep.polys.size()) == rs.size());
            for (size_t i = 0; i < rep.polys.size(); ++i)
                for (size_t j = 0; j < i; ++j)
                    CHECK(wf_inner(rep.polys[i].f, rep.polys[j].f).is_zero());
            int minus = 0;
            for (const auto& bv : rep.polys) minus += bv.tau_eig < 0;
            CHECK(minus == rs.size() / 2);
            for (const auto& bv : rep.polys) {
                if (bv.degree_in_b) CHECK(bv.tau_eig == (*bv.degree_in_b % 2 ? -1 : 1));
            }
            if (fam == Family::G2 && rs.size() >= 4) {
                // p3 is the Bochner eigenvector, eigenvalue -2
                REQUIRE(rep.polys[3].k_eig.has_value());
                CHECK(*rep.polys[3].k_eig == Rat(-2));
                CHECK(vec_proportional(rep.polys[3].f.coeffs, bochner_g2(rs).coeffs));
            }
        }
    }
    // degenerate spin(7) case: c = 2a+1 with a >= 1 still yields a complete basis
    Algebra s7 = build_algebra(Family::Spin7);
    RelevantSet deg = decompose(s7, highest_weight(s7, {1, 0, 3}));
    CHECK(deg.degenerate);
    BasisReport rep = recursion_basis(deg);
    CHECK(rep.complete);
    CHECK_FALSE(rep.spin_gap);
}

TEST_CASE("Q_lambda for spin(7)") {
    Algebra s7 = build_algebra(Family::Spin7);
    std::mt19937 rng(73);
    for (int it = 0; it < 15; ++it) {
        HighestWeight hw = random_lambda(s7, rng, 3);
        if (weyl_dim(s7, hw.vec) == 1) continue;
        RelevantSet rs = decompose(s7, hw);
        QLambda q = spin7_qlambda(rs); // orthogonality to 1, B, B^2 asserted inside
        WFormula b = b_operator(rs);
        CHECK(wf_trace(q.delta_q).is_zero());
        CHECK(wf_inner(q.delta_q, b).is_zero());
        CHECK(wf_inner(q.delta_q, wf_mul_b(b)).is_zero());

        // K Delta Q is a multiple of Delta Q
        OpMatrix tau = twist_matrix(rs);
        OpMatrix k = k_matrix(rs, tau);
        WFormula kq = apply(k, q.delta_q);
        CHECK(vec_proportional(kq.coeffs, q.delta_q.coeffs));

        // projecting p3(B) off Delta Q lands on the Bochner identity
        Rat cas = casimir_l2(s7, Ideal::Full, hw.vec);
        Rat cas4 = higher_casimir(s7, hw, 4);
        WFormula p3 = wf_poly(
            rs, {Rat(3, 4) * cas, (cas4 + Rat(55, 2) * cas) / (Rat(2) * cas), Rat(11, 2),
                 Rat(1)});
        WFormula proj = p3;
        if (!vec_is_zero(q.delta_q.coeffs)) {
            Rat c = wf_inner(p3, q.delta_q) / wf_inner(q.delta_q, q.delta_q);
            proj = wf_from(rs, vec_sub(p3.coeffs, vec_scale(c, q.delta_q.coeffs)));
        }
        CHECK(vec_proportional(proj.coeffs, bochner_spin7(rs).coeffs));
    }
}

TEST_CASE("classify splits along the twist eigenspaces") {
    Algebra g2 = build_algebra(Family::G2);
    RelevantSet rs = decompose(g2, highest_weight(g2, {1, 1}));
    OpMatrix tau = twist_matrix(rs);
    CHECK(classify(b_operator(rs), tau).pure_curvature);
    Classification unit_class = classify(wf_unit(rs), tau);
    CHECK_FALSE(unit_class.pure_curvature);
    CHECK(unit_class.sym_part.coeffs == wf_unit(rs).coeffs);

    // Kaehler: F - tau F is a pure curvature term for holomorphic F
    std::mt19937 rng(79);
    for (int n : {3, 4}) {
        Algebra u = build_algebra(Family::U, n);
        for (int it = 0; it < 10; ++it) {
            HighestWeight hw = random_lambda(u, rng);
            RelevantSet urs = decompose(u, hw);
            OpMatrix utau = twist_matrix(urs);
            for (int i = 0; i < urs.size(); ++i) {
                if (urs.entries[static_cast<size_t>(i)].label.kind != EpsLabel::Minus) continue;
                RatVec pr(static_cast<size_t>(urs.size()));
                pr[static_cast<size_t>(i)] = Rat(1);
                WFormula f = wf_from(urs, pr);
                WFormula diff = wf_from(urs, vec_sub(f.coeffs, apply(utau, f).coeffs));
                CHECK(classify(diff, utau).pure_curvature);
            }
        }
    }
}

TEST_CASE("curvature rows and elimination on the worked examples") {
    Algebra g2 = build_algebra(Family::G2);
    RelevantSet l14 = decompose(g2, highest_weight(g2, {0, 1}));
    CurvatureReport cur = curvature_report(l14);
    CHECK(cur.qr == coeffs_at(l14, {{EpsLabel::plus(1), Rat(-1)},
                                    {EpsLabel::minus(2), Rat(4)},
                                    {EpsLabel::plus(3), Rat(4, 3)}}));
    CHECK(cur.laplacian == coeffs_at(l14, {{EpsLabel::plus(1), Rat(0)},
                                           {EpsLabel::minus(2), Rat(5)},
                                           {EpsLabel::plus(3), Rat(7, 3)}}));

    // Lambda^3_27: eliminate +e1 then +e2 from Delta using the Bochner row
    RelevantSet l27 = decompose(g2, highest_weight(g2, {2, 0}));
    CurvatureReport cur27 = curvature_report(l27);
    RatVec boch = bochner_g2(l27).coeffs;
    RatVec delta = eliminate(cur27.laplacian, boch, l27.index_of(EpsLabel::plus(1)));
    delta = eliminate(delta, boch, l27.index_of(EpsLabel::plus(2)));
    CHECK(delta == coeffs_at(l27, {{EpsLabel::minus(1), Rat(9, 2)},
                                   {EpsLabel::zero(), Rat(7, 2)},
                                   {EpsLabel::minus(3), Rat(9, 2)},
                                   {EpsLabel::plus(2), Rat(0)},
                                   {EpsLabel::plus(1), Rat(0)}}));

    // spin(7) Lambda^4_35: Delta = 5 T*T[-e1] + 5 T*T[+e4]
    Algebra s7 = build_algebra(Family::Spin7);
    RelevantSet l35 = decompose(s7, highest_weight(s7, {0, 0, 2}));
    CurvatureReport cur35 = curvature_report(l35);
    RatVec boch35 = bochner_spin7(l35).coeffs;
    RatVec delta35 = eliminate(cur35.laplacian, boch35, l35.index_of(EpsLabel::plus(1)));
    delta35 = eliminate(delta35, boch35, l35.index_of(EpsLabel::plus(2)));
    CHECK(delta35 == coeffs_at(l35, {{EpsLabel::minus(1), Rat(5)},
                                     {EpsLabel::plus(4), Rat(5)},
                                     {EpsLabel::plus(1), Rat(0)},
                                     {EpsLabel::plus(2), Rat(0)}}));

    // spin(7) Lambda^2_7: q(R) vanishes identically, -1/2 T*T[+e1] + 3 T*T[-e4]
    RelevantSet l7 = decompose(s7, highest_weight(s7, {1, 0, 0}));
    CurvatureReport cur7 = curvature_report(l7);
    CHECK(cur7.qr ==
          coeffs_at(l7, {{EpsLabel::plus(1), Rat(-1, 2)}, {EpsLabel::minus(4), Rat(3)}}));

    // eliminate degenerates
    CHECK(vec_is_zero(eliminate(cur7.qr, cur7.qr, 0)));
    CHECK_THROWS_WITH_AS(eliminate(cur7.qr, RatVec{Rat(0), Rat(1)}, 0),
                         doctest::Contains("ZeroPivot"), Error);
}

TEST_CASE("kaehler basis and block structure") {
    std::mt19937 rng(83);
    for (int n : {3, 4}) {
        Algebra u = build_algebra(Family::U, n);
        for (int it = 0; it < 10; ++it) {
            HighestWeight hw = random_lambda(u, rng);
            RelevantSet rs = decompose(u, hw);
            OpMatrix tau = twist_matrix(rs);
            for (int i = 0; i < rs.size(); ++i)
                for (int j = 0; j < rs.size(); ++j)
                    if (rs.entries[static_cast<size_t>(i)].label.kind ==
                        rs.entries[static_cast<size_t>(j)].label.kind)
                        CHECK(tau.m.at(i, j).is_zero());
            BasisReport rep = recursion_basis(rs);
            CHECK(rep.complete);
            for (size_t i = 0; i < rep.polys.size(); ++i) {
                CHECK(rep.polys[i].tau_eig == (i % 2 == 0 ? 1 : -1));
                for (size_t j = 0; j < i; ++j)
                    CHECK(wf_inner(rep.polys[i].f, rep.polys[j].f).is_zero());
            }
        }
    }
}
