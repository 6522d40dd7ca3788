#pragma once

#include <vector>

#include "wzb/rational.hpp"

namespace wzb {

// Dense row-major matrix over Rat.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static Mat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    Mat transposed() const;
    friend Mat operator*(const Mat& a, const Mat& b);
    friend Mat operator+(const Mat& a, const Mat& b);
    friend Mat operator-(const Mat& a, const Mat& b);
    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    Mat scaled(const Rat& c) const;

    // Row vector f mapped to f * M; this is how operators in the projector
    // basis act on coefficient vectors.
    RatVec apply_to_row(const RatVec& f) const;

private:
    int rows_, cols_;
    RatVec a_;
};

// Basis of the null space { v : M v = 0 }, computed by fraction-free
// (Bareiss) elimination on the denominator-cleared integer matrix.
// One basis vector per free column, unit entry at its free position.
std::vector<RatVec> kernel_basis(const Mat& m);

int rank(const Mat& m);

// Orthogonalizes vectors against the inner product <x,y> = sum_i w_i x_i y_i.
// Output vectors are orthogonal but deliberately not normalized, so all
// entries stay rational. Throws DependentInput when a projection collapses.
std::vector<RatVec> weighted_gram_schmidt(const std::vector<RatVec>& vectors,
                                          const RatVec& weights);

Rat weighted_inner(const RatVec& x, const RatVec& y, const RatVec& w);

} // namespace wzb
