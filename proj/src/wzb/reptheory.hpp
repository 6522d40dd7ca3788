#pragma once

#include <map>
#include <optional>
#include <vector>

#include "wzb/algebra.hpp"
#include "wzb/poly.hpp"

namespace wzb {

enum class Ideal { Full, Center, SU };

// Dominant integral highest weight; fundamental coefficients are nonnegative
// integers, except that for u(n) the last one may be any integer (the
// determinant character twists freely).
struct HighestWeight {
    const Algebra* alg = nullptr;
    std::vector<long> fund;
    WeightVec vec;
};

HighestWeight highest_weight(const Algebra& alg, const std::vector<long>& fund);

bool is_dominant(const Algebra& alg, const WeightVec& mu);

// Relevance of a weight of T for lambda: nonzero weights need lambda + eps
// dominant, the zero weight needs lambda minus the spinor resp. standard
// highest weight still dominant (so(2r+1) and g2 only).
bool is_relevant(const Algebra& alg, const HighestWeight& lambda, const TWeight& tw);

struct RelevantEntry {
    EpsLabel label;
    WeightVec eps;
    WeightVec mu;                 // lambda + eps
    std::vector<long> mu_fund;
    BigInt dim;                   // dim V_{lambda+eps}
    Rat dratio;                   // dim V_{lambda+eps} / dim V_lambda
    Rat b;                        // conformal weight of the full algebra
    std::optional<Rat> b_center;  // u(n) only
};

// Ordered decomposition data of T (x) V_lambda. The entry order follows the
// catalog's t_weights order and is the order used everywhere downstream.
struct RelevantSet {
    const Algebra* alg = nullptr;
    HighestWeight lambda;
    BigInt dim_v;
    std::vector<RelevantEntry> entries;
    // a conformal-weight collision among relevant weights:
    // so(2r) with lambda_{r-1} = lambda_r >= 1, spin(7) with c = 2a+1, a >= 1
    bool degenerate = false;

    int size() const { return static_cast<int>(entries.size()); }
    int index_of(const EpsLabel& label) const; // -1 if absent
};

// Decomposition without conformal weights filled in.
RelevantSet relevant_weights(const Algebra& alg, const HighestWeight& lambda);

// Decomposition with b (and b_center for u(n)) filled in.
RelevantSet decompose(const Algebra& alg, const HighestWeight& lambda);

// Weyl dimension; exact, with an integrality check on the result.
BigInt weyl_dim(const Algebra& alg, const WeightVec& mu);

// prod over positive roots of (<mu + rho, alpha> + t <rho, alpha>), the
// numerator of the Weyl dimension of mu + t*rho.
Poly weyl_numerator_poly(const Algebra& alg, const WeightVec& mu);

// Casimir eigenvalue normalized by the scalar product induced on
// Lambda^2 T. Ideals Center and SU are u(n) only.
Rat casimir_l2(const Algebra& alg, Ideal ideal, const WeightVec& mu);

// Conformal weight b^h_eps. Computed three ways (weight formula, difference
// of normalized Casimirs, family closed form) which must agree exactly.
Rat conformal_weight(const Algebra& alg, Ideal ideal, const HighestWeight& lambda,
                     const TWeight& tw);

// d/dt of the conformal weight along lambda + t*rho.
Rat conformal_weight_slope(const Algebra& alg, Ideal ideal, const WeightVec& eps);

// Casimir of the adjoint representation in the Lambda^2 normalization.
Rat casimir_l2_adjoint(const Algebra& alg);

Rat casimir_l2_t(const Algebra& alg); // value on T itself

// chi_lambda(Cas^{[k]}) = sum over relevant eps of b_eps^k * dratio_eps.
Rat higher_casimir(const Algebra& alg, const HighestWeight& lambda, unsigned k);

// Independent tensor-product oracle (Klimyk): reflects lambda + nu + rho into
// the dominant chamber with sign for every weight nu of T and accumulates.
// Returns (fundamental coordinates, net multiplicity), sorted.
std::vector<std::pair<std::vector<long>, long>>
brute_force_decompose(const Algebra& alg, const HighestWeight& lambda,
                      const BigInt& max_dim = BigInt(1000000));

} // namespace wzb
