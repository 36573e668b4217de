#include "mprod/mproduct.hpp"

#include "mprod/errors.hpp"
#include "transform_domain.hpp"

#include <string>

namespace mprod {

namespace detail {

void require(bool ok, const std::string& what) {
    if (!ok) throw ShapeError(what);
}

void require_square(const Tensor3& a, const char* op) {
    require(a.rows() == a.cols(), std::string(op) + ": tensor must be square (n1 == n2), got " +
                                      std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
}

void require_transform_fits(const Tensor3& a, Index n3, const char* op) {
    require(a.slices() == n3, std::string(op) + ": tensor has " + std::to_string(a.slices()) +
                                  " slices but the transform is " + std::to_string(n3) + "x" +
                                  std::to_string(n3));
}

Matrix matrix_power(const Matrix& a, int p) {
    Matrix r = Matrix::Identity(a.rows(), a.cols());
    for (int i = 0; i < p; ++i) r = r * a;
    return r;
}

} // namespace detail

Matrix mode3_unfold(const Tensor3& a) {
    // Slice-major storage is exactly the transpose of the mode-3 unfolding.
    const Eigen::Map<const Matrix> cols(a.data().data(), a.rows() * a.cols(), a.slices());
    return cols.transpose();
}

Tensor3 mode3_fold(const Matrix& u, Index n1, Index n2) {
    detail::require(n1 > 0 && n2 > 0 && u.rows() > 0 && u.cols() == n1 * n2,
                    "mode3_fold: expected " + std::to_string(n1 * n2) + " columns, got " +
                        std::to_string(u.cols()));
    Tensor3 out(n1, n2, u.rows());
    Eigen::Map<Matrix>(out.data().data(), n1 * n2, u.rows()) = u.transpose();
    return out;
}

Tensor3 transform(const Tensor3& a, const TransformSpec& t) {
    detail::require_transform_fits(a, t.size(), "transform");
    return mode3_fold(t.matrix() * mode3_unfold(a), a.rows(), a.cols());
}

Tensor3 inverse_transform(const Tensor3& a, const TransformSpec& t) {
    detail::require_transform_fits(a, t.size(), "inverse_transform");
    return mode3_fold(t.inverse() * mode3_unfold(a), a.rows(), a.cols());
}

Tensor3 facewise_product(const Tensor3& c, const Tensor3& d) {
    detail::require(c.cols() == d.rows() && c.slices() == d.slices(),
                    "facewise_product: cannot multiply " + std::to_string(c.rows()) + "x" +
                        std::to_string(c.cols()) + "x" + std::to_string(c.slices()) + " by " +
                        std::to_string(d.rows()) + "x" + std::to_string(d.cols()) + "x" +
                        std::to_string(d.slices()));
    return detail::build_slices(c.rows(), d.cols(), c.slices(),
                                [&](Index k) -> Matrix { return c.slice(k) * d.slice(k); });
}

Tensor3 m_product(const Tensor3& c, const Tensor3& d, const TransformSpec& t) {
    detail::require(c.cols() == d.rows(), "m_product: inner dimensions differ");
    detail::require_transform_fits(c, t.size(), "m_product");
    detail::require_transform_fits(d, t.size(), "m_product");
    return inverse_transform(facewise_product(transform(c, t), transform(d, t)), t);
}

Tensor3 m_chain(std::initializer_list<std::reference_wrapper<const Tensor3>> factors,
                const TransformSpec& t) {
    detail::require(factors.size() > 0, "m_chain: no factors");
    auto it = factors.begin();
    Tensor3 acc = transform(it->get(), t);
    for (++it; it != factors.end(); ++it) {
        detail::require(acc.cols() == it->get().rows(), "m_chain: inner dimensions differ");
        acc = facewise_product(acc, transform(it->get(), t));
    }
    return inverse_transform(acc, t);
}

Tensor3 conj_transpose(const Tensor3& a, const TransformSpec& t) {
    const Tensor3 hat = transform(a, t);
    return inverse_transform(detail::build_slices(a.cols(), a.rows(), a.slices(),
                                                  [&](Index k) -> Matrix { return hat.slice(k).adjoint(); }),
                             t);
}

Tensor3 identity_tensor(Index n, const TransformSpec& t) {
    return inverse_transform(detail::build_slices(n, n, t.size(),
                                                  [&](Index) -> Matrix { return Matrix::Identity(n, n); }),
                             t);
}

Tensor3 tensor_power(const Tensor3& a, int k, const TransformSpec& t) {
    detail::require_square(a, "tensor_power");
    if (k < 0) throw InputError("tensor_power: negative exponent");
    if (k == 0) return identity_tensor(a.rows(), t);
    const Tensor3 hat = transform(a, t);
    return inverse_transform(
        detail::build_slices(a.rows(), a.cols(), a.slices(),
                             [&](Index s) -> Matrix { return detail::matrix_power(hat.slice(s), k); }),
        t);
}

} // namespace mprod
