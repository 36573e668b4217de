#include "mprod/transform.hpp"

#include "mprod/errors.hpp"

#include <cmath>
#include <numbers>

namespace mprod {

namespace {

double one_norm(const Matrix& m) { return m.cwiseAbs().colwise().sum().maxCoeff(); }

Matrix dft_matrix(Index n, double scale) {
    Matrix f(n, n);
    for (Index j = 0; j < n; ++j) {
        for (Index k = 0; k < n; ++k) {
            const double angle = -2.0 * std::numbers::pi * static_cast<double>((j * k) % n) / static_cast<double>(n);
            f(j, k) = std::polar(scale, angle);
        }
    }
    return f;
}

} // namespace

TransformSpec::TransformSpec(Matrix m) : m_(std::move(m)) {
    if (m_.rows() == 0 || m_.rows() != m_.cols()) {
        throw ShapeError("TransformSpec: M must be square and non-empty");
    }
    if (!m_.allFinite()) {
        throw InputError("TransformSpec: M has non-finite entries");
    }
    Eigen::FullPivLU<Matrix> lu(m_);
    const double min_pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
    if (min_pivot <= 1e-14 * m_.norm()) {
        throw SingularError("TransformSpec: M is singular");
    }
    m_inv_ = lu.inverse();
    cond_ = one_norm(m_) * one_norm(m_inv_);
}

TransformSpec TransformSpec::identity(Index n) { return TransformSpec(Matrix::Identity(n, n)); }

TransformSpec TransformSpec::normalized_dft(Index n) {
    return TransformSpec(dft_matrix(n, 1.0 / std::sqrt(static_cast<double>(n))));
}

TransformSpec TransformSpec::dft(Index n) { return TransformSpec(dft_matrix(n, 1.0)); }

TransformSpec TransformSpec::sample3() {
    Matrix m(3, 3);
    m << 1, 0, 1,
         0, 1, 0,
         0, 1, 1;
    return TransformSpec(std::move(m));
}

} // namespace mprod
