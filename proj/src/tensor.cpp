#include "mprod/tensor.hpp"

#include "mprod/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mprod {

namespace {

void require_same_shape(const Tensor3& a, const Tensor3& b, const char* op) {
    if (!a.same_shape(b)) {
        throw ShapeError(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + "x" + std::to_string(a.slices()) + " vs " +
                         std::to_string(b.rows()) + "x" + std::to_string(b.cols()) + "x" +
                         std::to_string(b.slices()));
    }
}

} // namespace

Tensor3::Tensor3(Index n1, Index n2, Index n3) : n1_(n1), n2_(n2), n3_(n3) {
    if (n1 <= 0 || n2 <= 0 || n3 <= 0) {
        throw ShapeError("Tensor3: dimensions must be positive");
    }
    data_.assign(static_cast<std::size_t>(n1 * n2 * n3), Complex{});
}

Tensor3 Tensor3::from_slices(std::span<const Matrix> slices) {
    if (slices.empty()) {
        throw ShapeError("Tensor3::from_slices: no slices");
    }
    Tensor3 out(slices.front().rows(), slices.front().cols(), static_cast<Index>(slices.size()));
    for (Index k = 0; k < out.slices(); ++k) {
        const auto& s = slices[static_cast<std::size_t>(k)];
        if (s.rows() != out.rows() || s.cols() != out.cols()) {
            throw ShapeError("Tensor3::from_slices: slice " + std::to_string(k) + " has a different shape");
        }
        out.slice(k) = s;
    }
    return out;
}

Tensor3 Tensor3::from_slices(std::initializer_list<Matrix> slices) {
    return from_slices(std::span<const Matrix>(slices.begin(), slices.size()));
}

Complex& Tensor3::at(Index i, Index j, Index k) {
    if (i < 0 || i >= n1_ || j < 0 || j >= n2_ || k < 0 || k >= n3_) {
        throw std::out_of_range("Tensor3::at: index out of range");
    }
    return (*this)(i, j, k);
}

const Complex& Tensor3::at(Index i, Index j, Index k) const {
    return const_cast<Tensor3&>(*this).at(i, j, k);
}

Tensor3::SliceMap Tensor3::slice(Index k) {
    if (k < 0 || k >= n3_) {
        throw std::out_of_range("Tensor3::slice: slice " + std::to_string(k) + " out of range [0, " +
                                std::to_string(n3_) + ")");
    }
    return {data_.data() + k * n1_ * n2_, n1_, n2_};
}

Tensor3::ConstSliceMap Tensor3::slice(Index k) const {
    if (k < 0 || k >= n3_) {
        throw std::out_of_range("Tensor3::slice: slice " + std::to_string(k) + " out of range [0, " +
                                std::to_string(n3_) + ")");
    }
    return {data_.data() + k * n1_ * n2_, n1_, n2_};
}

double Tensor3::frobenius_norm() const {
    double s = 0.0;
    for (const auto& z : data_) s += std::norm(z);
    return std::sqrt(s);
}

double Tensor3::max_abs() const {
    double m = 0.0;
    for (const auto& z : data_) m = std::max(m, std::abs(z));
    return m;
}

bool Tensor3::all_finite() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

Tensor3& Tensor3::operator+=(const Tensor3& rhs) {
    require_same_shape(*this, rhs, "operator+");
    for (std::size_t n = 0; n < data_.size(); ++n) data_[n] += rhs.data_[n];
    return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& rhs) {
    require_same_shape(*this, rhs, "operator-");
    for (std::size_t n = 0; n < data_.size(); ++n) data_[n] -= rhs.data_[n];
    return *this;
}

Tensor3& Tensor3::operator*=(Complex s) {
    for (auto& z : data_) z *= s;
    return *this;
}

bool operator==(const Tensor3& a, const Tensor3& b) {
    return a.same_shape(b) && a.data_ == b.data_;
}

Matrix frontal_slice(const Tensor3& a, Index k) { return a.slice(k); }

Tensor3 tensor_add(const Tensor3& a, const Tensor3& b) { return a + b; }

Tensor3 tensor_scale(const Tensor3& a, Complex s) { return a * s; }

double max_abs_diff(const Tensor3& a, const Tensor3& b) {
    require_same_shape(a, b, "max_abs_diff");
    double m = 0.0;
    for (std::size_t n = 0; n < a.data().size(); ++n) m = std::max(m, std::abs(a.data()[n] - b.data()[n]));
    return m;
}

} // namespace mprod
