#pragma once

// Shared helpers for the test suites: the box-diagram relevance oracle, the
// closed-form higher-Casimir polynomials used as independent oracles, and
// random dominant weight generation.

#include <random>

#include "wzb/machine.hpp"

namespace wzbtest {

using namespace wzb;

// Relevance read straight off the box diagrams, one inequality list per
// weight per family; independent of the dominance-based implementation.
inline bool diagram_relevant(const Algebra& alg, const std::vector<long>& f,
                             const EpsLabel& label) {
    const int r = alg.rank;
    auto lam = [&](int k) { return f[static_cast<size_t>(k - 1)]; }; // 1-based
    switch (alg.family) {
        case Family::SOeven:
            if (label.kind == EpsLabel::Plus) {
                if (label.k == 1) return true;
                if (label.k <= r - 1) return lam(label.k - 1) >= 1;
                return lam(r) >= 1; // +eps_r
            }
            if (label.k <= r - 2) return lam(label.k) >= 1;
            if (label.k == r - 1) return lam(r - 1) >= 1 && lam(r) >= 1;
            return lam(r - 1) >= 1; // -eps_r
        case Family::SOodd:
            if (label.kind == EpsLabel::Zero) return lam(r) >= 1;
            if (label.kind == EpsLabel::Plus) return label.k == 1 || lam(label.k - 1) >= 1;
            if (label.k <= r - 1) return lam(label.k) >= 1;
            return lam(r) >= 2; // -eps_r
        case Family::U:
            if (label.kind == EpsLabel::Plus) return label.k == 1 || lam(label.k - 1) >= 1;
            return label.k == r || lam(label.k) >= 1; // -eps_n always relevant
        case Family::G2: {
            long a = f[0], b = f[1];
            if (label.kind == EpsLabel::Zero) return a >= 1;
            if (label.kind == EpsLabel::Plus) {
                if (label.k == 1) return true;
                if (label.k == 2) return a >= 1;
                return b >= 1;
            }
            if (label.k == 1) return a >= 1;
            if (label.k == 2) return b >= 1;
            return a >= 2;
        }
        default: { // Spin7
            long a = f[0], b = f[1], c = f[2];
            if (label.kind == EpsLabel::Plus) {
                if (label.k == 1) return true;
                if (label.k == 2) return c >= 1;
                if (label.k == 3) return b >= 1;
                return c >= 1;
            }
            if (label.k == 1) return c >= 1;
            if (label.k == 2) return b >= 1;
            if (label.k == 3) return a >= 1 && c >= 1;
            return a >= 1;
        }
    }
}

// Appendix closed forms for the central characters of the higher Casimirs.

inline Rat g2_cas2_poly(long a, long b) {
    return Rat(4, 3) * Rat(a * a + 3 * a * b + 3 * b * b + 5 * a + 9 * b);
}

inline Rat g2_cas6_poly(long a_, long b_) {
    BigInt a(a_), b(b_);
    auto p = [](BigInt base, int e) {
        BigInt r = 1;
        for (int i = 0; i < e; ++i) r *= base;
        return r;
    };
    BigInt v = 4 * p(a, 6) + 36 * p(a, 5) * b + 117 * p(a, 4) * p(b, 2) +
               162 * p(a, 3) * p(b, 3) + 81 * p(a, 2) * p(b, 4) + 60 * p(a, 5) +
               414 * p(a, 4) * b + 954 * p(a, 3) * p(b, 2) + 810 * p(a, 2) * p(b, 3) +
               162 * a * p(b, 4) - 408 * p(a, 4) - 2808 * p(a, 3) * b -
               8829 * p(a, 2) * p(b, 2) - 12636 * a * p(b, 3) - 6804 * p(b, 4) -
               6580 * p(a, 3) - 33174 * p(a, 2) * b - 61362 * a * p(b, 2) - 40824 * p(b, 3) -
               6396 * p(a, 2) - 32508 * a * b - 27756 * p(b, 2) + 56520 * a + 100440 * b;
    return Rat(11 * v, BigInt(243));
}

inline Rat spin7_cas2_poly(long a, long b, long c) {
    return Rat(4 * a * a + 8 * b * b + 3 * c * c + 8 * a * b + 4 * a * c + 8 * b * c + 20 * a +
                   32 * b + 18 * c,
               2);
}

inline Rat spin7_cas4_poly(long a_, long b_, long c_) {
    BigInt a(a_), b(b_), c(c_);
    auto p = [](BigInt base, int e) {
        BigInt r = 1;
        for (int i = 0; i < e; ++i) r *= base;
        return r;
    };
    BigInt v = 16 * p(a, 4) + 128 * p(b, 4) + 21 * p(c, 4) + 192 * p(a, 2) * p(b, 2) +
               72 * p(a, 2) * p(c, 2) + 240 * p(b, 2) * p(c, 2) + 32 * p(a, 3) * c +
               64 * p(a, 3) * b + 256 * p(b, 3) * c + 256 * p(b, 3) * a + 56 * p(c, 3) * a +
               112 * p(c, 3) * b + 192 * p(a, 2) * b * c + 384 * p(b, 2) * a * c +
               240 * p(c, 2) * a * b + 160 * p(a, 3) + 1024 * p(b, 3) + 252 * p(c, 3) +
               768 * p(a, 2) * b + 432 * p(a, 2) * c + 1536 * p(b, 2) * a + 1632 * p(b, 2) * c +
               1056 * p(c, 2) * b + 552 * p(c, 2) * a + 1632 * a * b * c + 800 * p(a, 2) +
               1152 * p(c, 2) + 3040 * p(b, 2) + 3040 * a * b + 1760 * a * c + 3424 * b * c +
               2000 * a + 3968 * b + 2376 * c;
    return Rat(v, BigInt(32));
}

inline Rat spin7_cas6_poly(long a_, long b_, long c_) {
    BigInt a(a_), b(b_), c(c_);
    auto p = [](BigInt base, int e) {
        BigInt r = 1;
        for (int i = 0; i < e; ++i) r *= base;
        return r;
    };
    BigInt v = 64 * p(a, 6) + 2048 * p(b, 6) + 183 * p(c, 6) + 384 * p(a, 5) * b +
               192 * p(a, 5) * c + 6144 * p(b, 5) * c + 6144 * p(b, 5) * a + 732 * p(c, 5) * a +
               1464 * p(c, 5) * b + 1920 * p(a, 4) * p(b, 2) + 720 * p(a, 4) * p(c, 2) +
               7680 * p(b, 4) * p(a, 2) + 9600 * p(b, 4) * p(c, 2) + 1260 * p(c, 4) * p(a, 2) +
               4920 * p(c, 4) * p(b, 2) + 1920 * p(a, 4) * b * c + 15360 * p(b, 4) * a * c +
               4920 * p(c, 4) * a * b + 5120 * p(a, 3) * p(b, 3) + 1120 * p(a, 3) * p(c, 3) +
               8960 * p(b, 3) * p(c, 3) + 7680 * p(a, 3) * p(b, 2) * c +
               4800 * p(a, 3) * p(c, 2) * b + 15360 * p(b, 3) * p(a, 2) * c +
               19200 * p(b, 3) * p(c, 2) * a + 6720 * p(c, 3) * p(a, 2) * b +
               13440 * p(c, 3) * p(b, 2) * a + 14400 * p(a, 2) * p(b, 2) * p(c, 2) +
               960 * p(a, 5) + 24576 * p(b, 5) + 3294 * p(c, 5) + 7680 * p(a, 4) * b +
               4320 * p(a, 4) * c + 61440 * p(b, 4) * a + 65280 * p(b, 4) * c +
               11100 * p(c, 4) * a + 22080 * p(c, 4) * b + 30720 * p(a, 3) * p(b, 2) +
               11040 * p(a, 3) * p(c, 2) + 61440 * p(b, 3) * p(a, 2) +
               84480 * p(b, 3) * p(c, 2) + 15120 * p(c, 3) * p(a, 2) +
               60000 * p(c, 3) * p(b, 2) + 32640 * p(a, 3) * b * c + 130560 * p(b, 3) * a * c +
               60000 * p(c, 3) * a * b + 97920 * p(a, 2) * p(b, 2) * c +
               63360 * p(a, 2) * p(c, 2) * b + 126720 * p(b, 2) * p(c, 2) * a +
               9600 * p(a, 4) + 167424 * p(b, 4) + 32592 * p(c, 4) + 67200 * p(a, 3) * b +
               38400 * p(a, 3) * c + 334848 * p(b, 3) * a + 365568 * p(b, 3) * c +
               88032 * p(c, 3) * a + 175584 * p(c, 3) * b + 234624 * p(a, 2) * p(b, 2) +
               92832 * p(a, 2) * p(c, 2) + 364128 * p(b, 2) * p(c, 2) +
               257664 * p(a, 2) * b * c + 548352 * p(b, 2) * a * c + 364128 * p(c, 2) * a * b +
               56000 * p(a, 3) + 684032 * p(b, 3) + 193464 * p(c, 3) + 413952 * p(a, 2) * b +
               251808 * p(a, 2) * c + 993024 * p(b, 2) * a + 1158912 * p(b, 2) * c +
               397968 * p(c, 2) * a + 790656 * p(c, 2) * b + 1125888 * a * b * c +
               160000 * p(a, 2) + 1321856 * p(b, 2) + 562848 * p(c, 2) + 1189760 * a * b +
               759040 * a * c + 1607552 * b * c + 200000 * a + 863744 * b + 606240 * c;
    return Rat(v, BigInt(512));
}

// Random dominant weight with dim V_lambda below the bound. For u(n) the
// last coordinate may be negative.
inline HighestWeight random_lambda(const Algebra& alg, std::mt19937& rng, long max_coord = 4,
                                   const BigInt& max_dim = BigInt(1000000)) {
    std::uniform_int_distribution<long> coord(0, max_coord);
    std::uniform_int_distribution<long> ucoord(-max_coord, max_coord);
    for (;;) {
        std::vector<long> f(static_cast<size_t>(alg.rank));
        for (size_t i = 0; i < f.size(); ++i) {
            bool last_u = alg.family == Family::U && i + 1 == f.size();
            f[i] = last_u ? ucoord(rng) : coord(rng);
        }
        HighestWeight hw = highest_weight(alg, f);
        if (weyl_dim(alg, hw.vec) <= max_dim) return hw;
    }
}

// One random algebra per family tag, parameters drawn from a small range.
inline Algebra random_family_instance(Family fam, std::mt19937& rng) {
    switch (fam) {
        case Family::SOodd: return build_algebra(Family::SOodd, std::uniform_int_distribution<int>(1, 5)(rng));
        case Family::SOeven: return build_algebra(Family::SOeven, std::uniform_int_distribution<int>(2, 5)(rng));
        case Family::U: return build_algebra(Family::U, std::uniform_int_distribution<int>(2, 5)(rng));
        case Family::G2: return build_algebra(Family::G2);
        default: return build_algebra(Family::Spin7);
    }
}

inline const std::vector<Family>& all_families() {
    static const std::vector<Family> fams{Family::SOodd, Family::SOeven, Family::U, Family::G2,
                                          Family::Spin7};
    return fams;
}

} // namespace wzbtest
