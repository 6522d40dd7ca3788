#include "wzb/rational.hpp"

namespace wzb {

Rat Rat::parse(const std::string& s) {
    mpq_class v;
    if (v.set_str(s, 10) != 0)
        throw Error("ParseError", "not a rational: '" + s + "'");
    if (v.get_den() == 0)
        throw Error("DivisionByZero", "zero denominator in '" + s + "'");
    v.canonicalize();
    return Rat(v);
}

Rat Rat::pow(unsigned k) const {
    Rat r(1);
    Rat base = *this;
    while (k > 0) {
        if (k & 1u) r *= base;
        base *= base;
        k >>= 1u;
    }
    return r;
}

std::string Rat::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

RatVec vec_add(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw Error("DimensionMismatch", "vector sizes differ");
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw Error("DimensionMismatch", "vector sizes differ");
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RatVec vec_scale(const Rat& c, const RatVec& a) {
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

bool vec_is_zero(const RatVec& a) {
    for (const Rat& x : a)
        if (!x.is_zero()) return false;
    return true;
}

bool vec_proportional(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) return false;
    bool az = vec_is_zero(a), bz = vec_is_zero(b);
    if (az || bz) return az && bz;
    // first common nonzero position fixes the ratio
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero() != b[i].is_zero()) return false;
    }
    Rat c;
    for (size_t i = 0; i < a.size(); ++i) {
        if (!b[i].is_zero()) {
            c = a[i] / b[i];
            break;
        }
    }
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != c * b[i]) return false;
    return true;
}

} // namespace wzb
