#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oracle {

Tensor3 mode3(const Tensor3& a, const Matrix& m) {
    Tensor3 out(a.rows(), a.cols(), m.rows());
    for (Index k = 0; k < m.rows(); ++k) {
        for (Index l = 0; l < a.slices(); ++l) {
            for (Index j = 0; j < a.cols(); ++j) {
                for (Index i = 0; i < a.rows(); ++i) out(i, j, k) += m(k, l) * a(i, j, l);
            }
        }
    }
    return out;
}

Matrix mat(const Tensor3& a, const Matrix& m) {
    const Tensor3 hat = mode3(a, m);
    const Index n1 = a.rows();
    const Index n2 = a.cols();
    Matrix out = Matrix::Zero(n1 * a.slices(), n2 * a.slices());
    for (Index k = 0; k < a.slices(); ++k) {
        for (Index j = 0; j < n2; ++j) {
            for (Index i = 0; i < n1; ++i) out(k * n1 + i, k * n2 + j) = hat(i, j, k);
        }
    }
    return out;
}

Tensor3 unmat(const Matrix& blocks, Index n1, Index n2, Index n3, const Matrix& m) {
    Tensor3 hat(n1, n2, n3);
    for (Index k = 0; k < n3; ++k) {
        for (Index j = 0; j < n2; ++j) {
            for (Index i = 0; i < n1; ++i) hat(i, j, k) = blocks(k * n1 + i, k * n2 + j);
        }
    }
    return mode3(hat, m.inverse());
}

Tensor3 m_product(const Tensor3& c, const Tensor3& d, const Matrix& m) {
    return unmat(mat(c, m) * mat(d, m), c.rows(), d.cols(), c.slices(), m);
}

Matrix pinv(const Matrix& a) {
    Eigen::CompleteOrthogonalDecomposition<Matrix> cod(a);
    cod.setThreshold(1e-10);
    return cod.pseudoInverse();
}

namespace {

Index rank_of(const Matrix& a, double rel = 1e-9) {
    if (a.size() == 0) return 0;
    Eigen::BDCSVD<Matrix> svd(a);
    const auto& s = svd.singularValues();
    if (s.size() == 0 || s(0) == 0.0) return 0;
    Index r = 0;
    while (r < s.size() && s(r) > rel * s(0)) ++r;
    return r;
}

Index count_above(const Matrix& a, double threshold) {
    Eigen::BDCSVD<Matrix> svd(a);
    const auto& s = svd.singularValues();
    Index r = 0;
    while (r < s.size() && s(r) > threshold) ++r;
    return r;
}

} // namespace

int matrix_index(const Matrix& a) {
    if (a.size() == 0) return 0;
    // Rank of A^k measured against ||A||^k: a power that is zero up to
    // rounding must not be judged relative to its own largest singular value.
    const double norm = Eigen::BDCSVD<Matrix>(a).singularValues()(0);
    Matrix p = Matrix::Identity(a.rows(), a.cols());
    Index prev = a.rows();
    double scale = 1.0;
    for (int k = 0; k <= a.rows(); ++k) {
        p = p * a;
        scale *= norm;
        const Index r = count_above(p, 1e-12 * scale);
        if (r == prev) return k;
        prev = r;
    }
    return static_cast<int>(a.rows());
}

Matrix drazin(const Matrix& a) {
    const Index n = a.rows();
    const int l = std::max(matrix_index(a), 1);
    Matrix al = Matrix::Identity(n, n);
    for (int i = 0; i < l; ++i) al = al * a;
    const double norm = Eigen::BDCSVD<Matrix>(a).singularValues()(0);
    const Index r = count_above(al, 1e-9 * std::pow(norm, l));
    if (r == 0) return Matrix::Zero(n, n);
    Eigen::BDCSVD<Matrix> svd(al, Eigen::ComputeFullU | Eigen::ComputeFullV);
    // Columns of P span R(A^l) then N(A^l); P^-1 A P = diag(C, N) with C invertible.
    Matrix p(n, n);
    p.leftCols(r) = svd.matrixU().leftCols(r);
    p.rightCols(n - r) = svd.matrixV().rightCols(n - r);
    const Matrix p_inv = p.inverse();
    const Matrix core = (p_inv * a * p).topLeftCorner(r, r);
    Matrix mid = Matrix::Zero(n, n);
    mid.topLeftCorner(r, r) = core.inverse();
    return p * mid * p_inv;
}

Tensor3 mp_inverse(const Tensor3& a, const Matrix& m) {
    return unmat(pinv(mat(a, m)), a.cols(), a.rows(), a.slices(), m);
}

Tensor3 drazin_inverse(const Tensor3& a, const Matrix& m) {
    return unmat(drazin(mat(a, m)), a.rows(), a.rows(), a.slices(), m);
}

Tensor3 exact_inverse(const Tensor3& a, const Matrix& m) {
    return unmat(mat(a, m).inverse(), a.rows(), a.rows(), a.slices(), m);
}

Tensor3 one_mp_inverse(const Tensor3& a, const Tensor3& a_minus, const Matrix& m) {
    const Matrix ma = mat(a, m);
    return unmat(mat(a_minus, m) * ma * pinv(ma), a.cols(), a.rows(), a.slices(), m);
}

Tensor3 one_d_inverse(const Tensor3& a, const Tensor3& a_minus, const Matrix& m) {
    const Matrix ma = mat(a, m);
    return unmat(mat(a_minus, m) * ma * drazin(ma), a.rows(), a.rows(), a.slices(), m);
}

Tensor3 one_star_inverse(const Tensor3& a, const Tensor3& a_minus, const Matrix& m) {
    const Matrix ma = mat(a, m);
    return unmat(mat(a_minus, m) * ma * ma.adjoint(), a.cols(), a.rows(), a.slices(), m);
}

int tensor_index(const Tensor3& a, const Matrix& m) { return matrix_index(mat(a, m)); }

Tensor3 t_product(const Tensor3& a, const Tensor3& b) {
    const Index n1 = a.rows();
    const Index n2 = a.cols();
    const Index n3 = a.slices();
    const Index p = b.cols();
    Matrix circ(n1 * n3, n2 * n3);
    for (Index r = 0; r < n3; ++r) {
        for (Index c = 0; c < n3; ++c) {
            const Index s = ((r - c) % n3 + n3) % n3;
            for (Index j = 0; j < n2; ++j) {
                for (Index i = 0; i < n1; ++i) circ(r * n1 + i, c * n2 + j) = a(i, j, s);
            }
        }
    }
    Matrix stacked(n2 * n3, p);
    for (Index l = 0; l < n3; ++l) {
        for (Index j = 0; j < p; ++j) {
            for (Index i = 0; i < n2; ++i) stacked(l * n2 + i, j) = b(i, j, l);
        }
    }
    const Matrix prod = circ * stacked;
    Tensor3 out(n1, p, n3);
    for (Index k = 0; k < n3; ++k) {
        for (Index j = 0; j < p; ++j) {
            for (Index i = 0; i < n1; ++i) out(i, j, k) = prod(k * n1 + i, j);
        }
    }
    return out;
}

double rel_err(const Tensor3& got, const Tensor3& want) {
    if (!got.same_shape(want)) throw std::invalid_argument("rel_err: shape mismatch");
    double err = 0.0;
    double scale = 1.0;
    for (Index k = 0; k < want.slices(); ++k) {
        for (Index j = 0; j < want.cols(); ++j) {
            for (Index i = 0; i < want.rows(); ++i) {
                err = std::max(err, std::abs(got(i, j, k) - want(i, j, k)));
                scale = std::max(scale, std::abs(want(i, j, k)));
            }
        }
    }
    return err / scale;
}

} // namespace oracle
