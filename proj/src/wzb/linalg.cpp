#include "wzb/linalg.hpp"

#include <algorithm>

namespace wzb {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
}

Mat Mat::transposed() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw Error("DimensionMismatch", "matrix product shapes");
    Mat r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

Mat operator+(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw Error("DimensionMismatch", "matrix sum shapes");
    Mat r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
    return r;
}

Mat operator-(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw Error("DimensionMismatch", "matrix difference shapes");
    Mat r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
    return r;
}

Mat Mat::scaled(const Rat& c) const {
    Mat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = c * a_[i];
    return r;
}

RatVec Mat::apply_to_row(const RatVec& f) const {
    if (static_cast<int>(f.size()) != rows_)
        throw Error("DimensionMismatch", "row vector length vs matrix rows");
    RatVec r(static_cast<size_t>(cols_));
    for (int i = 0; i < rows_; ++i) {
        if (f[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; j < cols_; ++j)
            r[static_cast<size_t>(j)] += f[static_cast<size_t>(i)] * at(i, j);
    }
    return r;
}

namespace {

// Clears denominators row by row; row scaling leaves the kernel unchanged.
std::vector<std::vector<BigInt>> to_integer_rows(const Mat& m) {
    std::vector<std::vector<BigInt>> rows(static_cast<size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) {
        BigInt l = 1;
        for (int j = 0; j < m.cols(); ++j) {
            BigInt d = m.at(i, j).den();
            l = l / gcd(l, d) * d;
        }
        rows[static_cast<size_t>(i)].resize(static_cast<size_t>(m.cols()));
        for (int j = 0; j < m.cols(); ++j)
            rows[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                m.at(i, j).num() * (l / m.at(i, j).den());
    }
    return rows;
}

struct Echelon {
    std::vector<std::vector<BigInt>> rows;
    std::vector<int> pivot_col; // per used row
};

// Bareiss fraction-free forward elimination; every division below is exact.
Echelon echelon_form(const Mat& m) {
    Echelon e;
    e.rows = to_integer_rows(m);
    const int ncols = m.cols();
    int r = 0;
    BigInt prev = 1;
    for (int c = 0; c < ncols && r < static_cast<int>(e.rows.size()); ++c) {
        int piv = -1;
        for (int i = r; i < static_cast<int>(e.rows.size()); ++i) {
            if (e.rows[static_cast<size_t>(i)][static_cast<size_t>(c)] != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(e.rows[static_cast<size_t>(r)], e.rows[static_cast<size_t>(piv)]);
        const BigInt p = e.rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
        for (int i = r + 1; i < static_cast<int>(e.rows.size()); ++i) {
            auto& row = e.rows[static_cast<size_t>(i)];
            const BigInt f = row[static_cast<size_t>(c)];
            for (int j = c; j < ncols; ++j) {
                row[static_cast<size_t>(j)] =
                    (row[static_cast<size_t>(j)] * p -
                     f * e.rows[static_cast<size_t>(r)][static_cast<size_t>(j)]) /
                    prev;
            }
        }
        e.pivot_col.push_back(c);
        prev = p;
        ++r;
    }
    e.rows.resize(e.pivot_col.size());
    return e;
}

} // namespace

std::vector<RatVec> kernel_basis(const Mat& m) {
    Echelon e = echelon_form(m);
    const int ncols = m.cols();
    std::vector<bool> is_pivot(static_cast<size_t>(ncols), false);
    for (int c : e.pivot_col) is_pivot[static_cast<size_t>(c)] = true;

    std::vector<RatVec> basis;
    for (int f = 0; f < ncols; ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        RatVec v(static_cast<size_t>(ncols));
        v[static_cast<size_t>(f)] = Rat(1);
        for (int i = static_cast<int>(e.pivot_col.size()); i-- > 0;) {
            const auto& row = e.rows[static_cast<size_t>(i)];
            const int pc = e.pivot_col[static_cast<size_t>(i)];
            Rat s(0);
            for (int j = pc + 1; j < ncols; ++j) {
                if (row[static_cast<size_t>(j)] == 0) continue;
                s += Rat(row[static_cast<size_t>(j)], BigInt(1)) * v[static_cast<size_t>(j)];
            }
            v[static_cast<size_t>(pc)] = -s / Rat(row[static_cast<size_t>(pc)], BigInt(1));
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

int rank(const Mat& m) { return static_cast<int>(echelon_form(m).pivot_col.size()); }

Rat weighted_inner(const RatVec& x, const RatVec& y, const RatVec& w) {
    if (x.size() != y.size() || x.size() != w.size())
        throw Error("DimensionMismatch", "weighted inner product lengths");
    Rat s(0);
    for (size_t i = 0; i < x.size(); ++i) s += w[i] * x[i] * y[i];
    return s;
}

std::vector<RatVec> weighted_gram_schmidt(const std::vector<RatVec>& vectors,
                                          const RatVec& weights) {
    for (const Rat& w : weights)
        if (w.sign() <= 0) throw Error("DimensionMismatch", "weights must be positive");
    std::vector<RatVec> out;
    out.reserve(vectors.size());
    for (const RatVec& v : vectors) {
        RatVec u = v;
        for (const RatVec& p : out) {
            Rat c = weighted_inner(v, p, weights) / weighted_inner(p, p, weights);
            u = vec_sub(u, vec_scale(c, p));
        }
        if (vec_is_zero(u))
            throw Error("DependentInput", "vector in span of its predecessors");
        out.push_back(std::move(u));
    }
    return out;
}

} // namespace wzb
