#pragma once

#include "mprod/tensor.hpp"
#include "mprod/transform.hpp"

#include <functional>
#include <initializer_list>

namespace mprod {

/// Mode-3 unfolding: an n3 x (n1*n2) matrix with U(k, j*n1 + i) = A(i, j, k).
Matrix mode3_unfold(const Tensor3& a);

/// Inverse of mode3_unfold. `u` must have n1*n2 columns.
Tensor3 mode3_fold(const Matrix& u, Index n1, Index n2);

/// L(A) = A x_3 M.
Tensor3 transform(const Tensor3& a, const TransformSpec& t);

/// L^-1(A) = A x_3 M^-1.
Tensor3 inverse_transform(const Tensor3& a, const TransformSpec& t);

/// Slice-by-slice matrix product.
Tensor3 facewise_product(const Tensor3& c, const Tensor3& d);

/// C *_M D = L^-1(L(C) face-wise L(D)).
Tensor3 m_product(const Tensor3& c, const Tensor3& d, const TransformSpec& t);

/// Left-to-right product of a chain of tensors, transforming each factor once.
Tensor3 m_chain(std::initializer_list<std::reference_wrapper<const Tensor3>> factors,
                const TransformSpec& t);

/// A*: n2 x n1 x n3 with L(A*)^(i) = (L(A)^(i))^H.
Tensor3 conj_transpose(const Tensor3& a, const TransformSpec& t);

/// The n x n x n3 tensor whose every transformed slice is I_n.
Tensor3 identity_tensor(Index n, const TransformSpec& t);

/// A^k under *_M; A^0 is the identity tensor. Requires n1 == n2.
Tensor3 tensor_power(const Tensor3& a, int k, const TransformSpec& t);

} // namespace mprod
