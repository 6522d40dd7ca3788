#include "wzb/poly.hpp"

namespace wzb {

Rat Poly::eval(const Rat& x) const {
    Rat r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

Poly Poly::operator-() const {
    RatVec r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return Poly(std::move(r));
}

Poly operator+(const Poly& a, const Poly& b) {
    RatVec r(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.c_.size()) r[i] += a.c_[i];
        if (i < b.c_.size()) r[i] += b.c_[i];
    }
    return Poly(std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    RatVec r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(r));
}

Poly Poly::scaled(const Rat& c) const {
    if (c.is_zero()) return Poly();
    RatVec r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c * c_[i];
    return Poly(std::move(r));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(Rat(1) / leading());
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error("DivisionByZero", "polynomial division by zero");
    Poly rem = a;
    if (a.degree() < b.degree()) return {Poly(), rem};
    RatVec q(static_cast<size_t>(a.degree() - b.degree()) + 1);
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        Rat c = rem.leading() / b.leading();
        q[static_cast<size_t>(shift)] = c;
        RatVec sub(static_cast<size_t>(shift), Rat(0));
        sub.push_back(c);
        rem -= b * Poly(std::move(sub));
    }
    return {Poly(std::move(q)), rem};
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

RatFun::RatFun(Poly num, Poly den) {
    if (den.is_zero()) throw Error("DivisionByZero", "zero denominator polynomial");
    Poly g = Poly::gcd(num, den);
    if (g.degree() > 0) {
        num = Poly::divmod(num, g).first;
        den = Poly::divmod(den, g).first;
    }
    Rat lead = den.leading();
    num_ = num.scaled(Rat(1) / lead);
    den_ = den.scaled(Rat(1) / lead);
}

Rat ratfun_eval_at_zero(const RatFun& f) {
    Rat d0 = f.den().at_zero();
    if (d0.is_zero())
        throw Error("PoleAtZero", "reduced denominator vanishes at t = 0");
    return f.num().at_zero() / d0;
}

} // namespace wzb
