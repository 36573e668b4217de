#pragma once

#include "mprod/tensor.hpp"

namespace mprod {

/// Invertible n3 x n3 matrix M defining the mode-3 transform L(A) = A x_3 M.
///
/// The inverse is factored once at construction. Construction fails with
/// SingularError when a pivot of the LU factorization falls below
/// 1e-14 * ||M||_F.
class TransformSpec {
public:
    static constexpr double kIllConditioned = 1e8;

    explicit TransformSpec(Matrix m);

    static TransformSpec identity(Index n);
    /// Unitary DFT, entries exp(-2 pi i jk / n) / sqrt(n).
    static TransformSpec normalized_dft(Index n);
    /// Unnormalized DFT, entries exp(-2 pi i jk / n).
    static TransformSpec dft(Index n);
    /// The integer 3x3 transform [[1,0,1],[0,1,0],[0,1,1]] whose inverse is
    /// also integral; used by every bundled worked example.
    static TransformSpec sample3();

    [[nodiscard]] Index size() const noexcept { return m_.rows(); }
    [[nodiscard]] const Matrix& matrix() const noexcept { return m_; }
    [[nodiscard]] const Matrix& inverse() const noexcept { return m_inv_; }

    /// ||M||_1 * ||M^-1||_1.
    [[nodiscard]] double condition_estimate() const noexcept { return cond_; }
    [[nodiscard]] bool ill_conditioned() const noexcept { return cond_ > kIllConditioned; }

private:
    Matrix m_;
    Matrix m_inv_;
    double cond_ = 1.0;
};

} // namespace mprod
