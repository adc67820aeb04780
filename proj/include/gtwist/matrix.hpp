#pragma once

#include "gtwist/scalar.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace gtwist {

// Dense matrix of exact scalars.  All arithmetic goes through a Field so
// prime-field reduction is applied after every operation.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

    static Mat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    const std::vector<Scalar>& data() const { return data_; }
    std::vector<Scalar>& data() { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

Mat mat_mul(const Field& F, const Mat& a, const Mat& b);
std::vector<Scalar> mat_vec(const Field& F, const Mat& a, const std::vector<Scalar>& x);
bool mat_is_identity(const Mat& a);

// Gauss-Jordan inverse; nullopt when singular.
std::optional<Mat> mat_inverse(const Field& F, const Mat& a);

// One exact solution of a x = b (free variables set to 0); nullopt when
// inconsistent.  a may be rectangular.
std::optional<std::vector<Scalar>> mat_solve(const Field& F, const Mat& a,
                                             const std::vector<Scalar>& b);

std::vector<Scalar> vec_add(const Field& F, const std::vector<Scalar>& a,
                            const std::vector<Scalar>& b);
std::vector<Scalar> vec_scale(const Field& F, const Scalar& c, const std::vector<Scalar>& a);
bool vec_is_zero(const std::vector<Scalar>& a);

// Structure-constant tensor: entry (i, j, m) is the coefficient of basis
// vector m of the product component in e_i * e_j.
class Tensor3 {
public:
    Tensor3() = default;
    Tensor3(std::size_t d0, std::size_t d1, std::size_t d2)
        : d0_(d0), d1_(d1), d2_(d2), data_(d0 * d1 * d2, Scalar(0)) {}

    std::size_t dim0() const { return d0_; }
    std::size_t dim1() const { return d1_; }
    std::size_t dim2() const { return d2_; }

    Scalar& at(std::size_t i, std::size_t j, std::size_t m) {
        return data_[(i * d1_ + j) * d2_ + m];
    }
    const Scalar& at(std::size_t i, std::size_t j, std::size_t m) const {
        return data_[(i * d1_ + j) * d2_ + m];
    }

    bool operator==(const Tensor3& o) const {
        return d0_ == o.d0_ && d1_ == o.d1_ && d2_ == o.d2_ && data_ == o.data_;
    }
    bool operator!=(const Tensor3& o) const { return !(*this == o); }

private:
    std::size_t d0_ = 0, d1_ = 0, d2_ = 0;
    std::vector<Scalar> data_;
};

// coords of (x * y) under the tensor: bilinear contraction.
std::vector<Scalar> tensor_apply(const Field& F, const Tensor3& t, const std::vector<Scalar>& x,
                                 const std::vector<Scalar>& y);

}  // namespace gtwist
