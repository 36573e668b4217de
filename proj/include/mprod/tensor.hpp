#pragma once

#include <Eigen/Dense>

#include <complex>
#include <span>
#include <vector>

namespace mprod {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Index = Eigen::Index;

/// Dense complex n1 x n2 x n3 tensor.
///
/// Storage is slice-major: frontal slice k occupies a contiguous column-major
/// block of n1*n2 scalars, so entry (i, j, k) lives at k*n1*n2 + j*n1 + i.
/// All indices are zero-based.
class Tensor3 {
public:
    using SliceMap = Eigen::Map<Matrix>;
    using ConstSliceMap = Eigen::Map<const Matrix>;

    Tensor3() = default;

    /// Zero tensor. Every dimension must be positive.
    Tensor3(Index n1, Index n2, Index n3);

    static Tensor3 zeros(Index n1, Index n2, Index n3) { return {n1, n2, n3}; }

    /// Stacks equally sized matrices as frontal slices.
    static Tensor3 from_slices(std::span<const Matrix> slices);
    static Tensor3 from_slices(std::initializer_list<Matrix> slices);

    [[nodiscard]] Index rows() const noexcept { return n1_; }
    [[nodiscard]] Index cols() const noexcept { return n2_; }
    [[nodiscard]] Index slices() const noexcept { return n3_; }
    [[nodiscard]] Index size() const noexcept { return n1_ * n2_ * n3_; }
    [[nodiscard]] bool empty() const noexcept { return data_.empty(); }

    Complex& operator()(Index i, Index j, Index k) { return data_[offset(i, j, k)]; }
    const Complex& operator()(Index i, Index j, Index k) const { return data_[offset(i, j, k)]; }

    /// Bounds-checked access; throws std::out_of_range.
    Complex& at(Index i, Index j, Index k);
    [[nodiscard]] const Complex& at(Index i, Index j, Index k) const;

    /// View of frontal slice k; throws std::out_of_range.
    SliceMap slice(Index k);
    [[nodiscard]] ConstSliceMap slice(Index k) const;

    [[nodiscard]] std::span<Complex> data() noexcept { return data_; }
    [[nodiscard]] std::span<const Complex> data() const noexcept { return data_; }

    [[nodiscard]] bool same_shape(const Tensor3& other) const noexcept {
        return n1_ == other.n1_ && n2_ == other.n2_ && n3_ == other.n3_;
    }

    [[nodiscard]] double frobenius_norm() const;
    [[nodiscard]] double max_abs() const;
    [[nodiscard]] bool all_finite() const;

    Tensor3& operator+=(const Tensor3& rhs);
    Tensor3& operator-=(const Tensor3& rhs);
    Tensor3& operator*=(Complex s);

    friend Tensor3 operator+(Tensor3 lhs, const Tensor3& rhs) { return lhs += rhs; }
    friend Tensor3 operator-(Tensor3 lhs, const Tensor3& rhs) { return lhs -= rhs; }
    friend Tensor3 operator*(Complex s, Tensor3 rhs) { return rhs *= s; }
    friend Tensor3 operator*(Tensor3 lhs, Complex s) { return lhs *= s; }
    friend Tensor3 operator-(Tensor3 t) { return t *= Complex{-1.0, 0.0}; }

    /// Exact (bitwise on values) equality including shape.
    friend bool operator==(const Tensor3& a, const Tensor3& b);

private:
    [[nodiscard]] Index offset(Index i, Index j, Index k) const noexcept {
        return (k * n2_ + j) * n1_ + i;
    }

    Index n1_ = 0;
    Index n2_ = 0;
    Index n3_ = 0;
    std::vector<Complex> data_;
};

/// Copy of frontal slice k (zero-based); throws std::out_of_range.
Matrix frontal_slice(const Tensor3& a, Index k);

Tensor3 tensor_add(const Tensor3& a, const Tensor3& b);
Tensor3 tensor_scale(const Tensor3& a, Complex s);

/// max |a - b| over all entries. Shapes must match.
double max_abs_diff(const Tensor3& a, const Tensor3& b);

} // namespace mprod
