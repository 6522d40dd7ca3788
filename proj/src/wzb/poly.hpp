#pragma once

#include <vector>

#include "wzb/rational.hpp"

namespace wzb {

// Dense univariate polynomial over Rat in one formal variable t.
// Coefficients stored lowest degree first; canonical form has no trailing
// zero coefficient, the zero polynomial is the empty list.
class Poly {
public:
    Poly() = default;
    Poly(Rat c) { if (!c.is_zero()) c_ = {std::move(c)}; } // NOLINT: implicit
    Poly(long c) : Poly(Rat(c)) {}                         // NOLINT: implicit
    explicit Poly(RatVec coeffs) : c_(std::move(coeffs)) { trim(); }

    // c0 + c1*t
    static Poly linear(Rat c0, Rat c1) { return Poly(RatVec{std::move(c0), std::move(c1)}); }

    const RatVec& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }
    Rat at_zero() const { return c_.empty() ? Rat(0) : c_.front(); }

    Rat eval(const Rat& x) const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly scaled(const Rat& c) const;
    Poly monic() const;

    // Euclidean division, returns {quotient, remainder}; divisor must be nonzero.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

    // Monic gcd; gcd(0, 0) = 0.
    static Poly gcd(Poly a, Poly b);

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    RatVec c_;
};

// Rational function num/den over Rat, reduced on construction:
// gcd(num, den) constant and den monic. den must be nonzero.
class RatFun {
public:
    RatFun() : num_(), den_(Rat(1)) {}
    RatFun(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

private:
    Poly num_, den_;
};

// Value of the reduced fraction at t = 0, i.e. the limit t -> 0 when the
// unreduced numerator and denominator share a root there.
// Throws PoleAtZero if the reduced denominator still vanishes at 0.
Rat ratfun_eval_at_zero(const RatFun& f);

} // namespace wzb
