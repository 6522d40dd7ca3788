#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wzb/linalg.hpp"
#include "wzb/rational.hpp"

namespace wzb {

enum class Family { SOodd, SOeven, U, G2, Spin7 };

// Weight-of-T label: +eps_k / -eps_k / 0.
struct EpsLabel {
    enum Kind { Plus, Minus, Zero } kind = Zero;
    int k = 0; // 1-based, unused for Zero

    static EpsLabel plus(int k) { return {Plus, k}; }
    static EpsLabel minus(int k) { return {Minus, k}; }
    static EpsLabel zero() { return {Zero, 0}; }

    bool operator==(const EpsLabel& o) const { return kind == o.kind && k == o.k; }
    std::string str() const;
};

// Coordinates in the catalog basis of t*: the eps-basis for SO/U/G2 and the
// eta-basis for Spin7.
using WeightVec = RatVec;

struct TWeight {
    EpsLabel label;
    WeightVec vec;
};

// Named candidate eigenvalue of the classifying endomorphism, with the
// zero-weight-space dimension of its summand in T (x) T as an upper bound
// for the eigenspace dimension (no bound recorded for U(n)).
struct KEigenvalue {
    std::string name;
    Rat value;
    std::optional<int> zero_weight_bound;
};

// Immutable descriptor of one holonomy algebra. Built once by build_algebra
// and shared freely; all data is exact.
struct Algebra {
    Family family;
    int param = 0; // r for SO families, n for U; 0 for G2/Spin7
    int rank = 0;
    int dim_t = 0;
    int dim_g = 0;
    Mat gram;                          // invariant scalar product on t*
    std::vector<WeightVec> fund_weights;
    WeightVec rho;
    WeightVec eps_max;                 // highest weight of T
    std::vector<TWeight> t_weights;    // catalog order, also the report order
    std::vector<WeightVec> pos_roots;
    std::vector<WeightVec> simple_roots;
    std::vector<KEigenvalue> k_table;
    WeightVec adjoint_hw;              // highest weight of the adjoint rep

    bool is_so() const { return family == Family::SOodd || family == Family::SOeven; }
    int n_of_so() const { return family == Family::SOodd ? 2 * param + 1 : 2 * param; }
    std::string name() const;
};

// Catalog entries: SOodd(r >= 1), SOeven(r >= 2), U(n >= 2), G2, Spin7.
// Throws UnsupportedFamily for parameters out of range.
Algebra build_algebra(Family family, int param = 0);

Rat inner(const Algebra& alg, const WeightVec& v, const WeightVec& w);

// Mutually inverse changes between the catalog basis and the basis of
// fundamental weights.
RatVec to_fundamental(const Algebra& alg, const WeightVec& v);
WeightVec from_fundamental(const Algebra& alg, const RatVec& coeffs);

WeightVec weight_zero(const Algebra& alg);

} // namespace wzb
