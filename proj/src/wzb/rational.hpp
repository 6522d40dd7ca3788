#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "wzb/error.hpp"

namespace wzb {

using BigInt = mpz_class;

// Exact rational scalar backed by GMP. Always kept in lowest terms with
// positive denominator; every operation is exact.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}                       // NOLINT: implicit by design
    Rat(long n, long d) : v_(n, d) { normalize(); }
    Rat(const BigInt& n, const BigInt& d) : v_(n, d) { normalize(); }
    explicit Rat(const BigInt& n) : v_(n) {}
    explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    static Rat parse(const std::string& s);

    BigInt num() const { return v_.get_num(); }
    BigInt den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw Error("DivisionByZero", "rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    Rat abs() const { return v_ < 0 ? -*this : *this; }
    Rat pow(unsigned k) const;

    // Canonical form: "p/q" with q > 1, plain "p" for integers.
    std::string str() const;

private:
    void normalize() {
        if (v_.get_den() == 0) throw Error("DivisionByZero", "zero denominator");
        v_.canonicalize();
    }

    mpq_class v_;
};

using RatVec = std::vector<Rat>;

RatVec vec_add(const RatVec& a, const RatVec& b);
RatVec vec_sub(const RatVec& a, const RatVec& b);
RatVec vec_scale(const Rat& c, const RatVec& a);
bool vec_is_zero(const RatVec& a);

// True when a = c * b for some nonzero rational c (or both are zero).
bool vec_proportional(const RatVec& a, const RatVec& b);

} // namespace wzb
