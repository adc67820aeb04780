#include "gtwist/matrix.hpp"

#include "gtwist/error.hpp"

namespace gtwist {

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Mat mat_mul(const Field& F, const Mat& a, const Mat& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatchError("mat_mul " + std::to_string(a.rows()) + "x" +
                                     std::to_string(a.cols()) + " * " + std::to_string(b.rows()) +
                                     "x" + std::to_string(b.cols()));
    Mat c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c.at(i, j) = F.add(c.at(i, j), F.mul(aik, b.at(k, j)));
        }
    return c;
}

std::vector<Scalar> mat_vec(const Field& F, const Mat& a, const std::vector<Scalar>& x) {
    if (a.cols() != x.size())
        throw DimensionMismatchError("mat_vec " + std::to_string(a.cols()) + " vs " +
                                     std::to_string(x.size()));
    std::vector<Scalar> y(a.rows(), Scalar(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != 0) y[i] = F.add(y[i], F.mul(a.at(i, j), x[j]));
    return y;
}

bool mat_is_identity(const Mat& a) {
    if (a.rows() != a.cols()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != Scalar(i == j ? 1 : 0)) return false;
    return true;
}

std::optional<Mat> mat_inverse(const Field& F, const Mat& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    const std::size_t n = a.rows();
    Mat work = a;
    Mat inv = Mat::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && work.at(pivot, col) == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work.at(pivot, j), work.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        Scalar s = F.inv(work.at(col, col));
        for (std::size_t j = 0; j < n; ++j) {
            work.at(col, j) = F.mul(work.at(col, j), s);
            inv.at(col, j) = F.mul(inv.at(col, j), s);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || work.at(i, col) == 0) continue;
            Scalar f = work.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                work.at(i, j) = F.sub(work.at(i, j), F.mul(f, work.at(col, j)));
                inv.at(i, j) = F.sub(inv.at(i, j), F.mul(f, inv.at(col, j)));
            }
        }
    }
    return inv;
}

std::optional<std::vector<Scalar>> mat_solve(const Field& F, const Mat& a,
                                             const std::vector<Scalar>& b) {
    if (a.rows() != b.size())
        throw DimensionMismatchError("mat_solve rhs length " + std::to_string(b.size()) +
                                     " vs " + std::to_string(a.rows()) + " rows");
    const std::size_t m = a.rows(), n = a.cols();
    Mat aug(m, n + 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n) = b[i];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t pivot = row;
        while (pivot < m && aug.at(pivot, col) == 0) ++pivot;
        if (pivot == m) continue;
        if (pivot != row)
            for (std::size_t j = 0; j <= n; ++j) std::swap(aug.at(pivot, j), aug.at(row, j));
        Scalar s = F.inv(aug.at(row, col));
        for (std::size_t j = 0; j <= n; ++j) aug.at(row, j) = F.mul(aug.at(row, j), s);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || aug.at(i, col) == 0) continue;
            Scalar f = aug.at(i, col);
            for (std::size_t j = 0; j <= n; ++j)
                aug.at(i, j) = F.sub(aug.at(i, j), F.mul(f, aug.at(row, j)));
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < m; ++i)
        if (aug.at(i, n) != 0) return std::nullopt;
    std::vector<Scalar> x(n, Scalar(0));
    for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = aug.at(r, n);
    return x;
}

std::vector<Scalar> vec_add(const Field& F, const std::vector<Scalar>& a,
                            const std::vector<Scalar>& b) {
    if (a.size() != b.size()) throw DimensionMismatchError("vec_add");
    std::vector<Scalar> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = F.add(a[i], b[i]);
    return c;
}

std::vector<Scalar> vec_scale(const Field& F, const Scalar& c, const std::vector<Scalar>& a) {
    std::vector<Scalar> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(c, a[i]);
    return r;
}

bool vec_is_zero(const std::vector<Scalar>& a) {
    for (const auto& v : a)
        if (v != 0) return false;
    return true;
}

std::vector<Scalar> tensor_apply(const Field& F, const Tensor3& t, const std::vector<Scalar>& x,
                                 const std::vector<Scalar>& y) {
    if (x.size() != t.dim0() || y.size() != t.dim1())
        throw DimensionMismatchError("tensor_apply operand lengths");
    std::vector<Scalar> out(t.dim2(), Scalar(0));
    for (std::size_t i = 0; i < t.dim0(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < t.dim1(); ++j) {
            if (y[j] == 0) continue;
            Scalar xy = F.mul(x[i], y[j]);
            for (std::size_t m = 0; m < t.dim2(); ++m)
                if (t.at(i, j, m) != 0) out[m] = F.add(out[m], F.mul(xy, t.at(i, j, m)));
        }
    }
    return out;
}

}  // namespace gtwist
