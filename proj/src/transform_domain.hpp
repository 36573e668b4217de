#pragma once

// Internal helpers for slice-wise work in the transform domain.

#include "mprod/tensor.hpp"

#include <string>

namespace mprod::detail {

void require(bool ok, const std::string& what);
void require_square(const Tensor3& a, const char* op);
void require_transform_fits(const Tensor3& a, Index n3, const char* op);

/// Builds an out_rows x out_cols x n3 tensor whose slice k is f(k).
template <class F>
Tensor3 build_slices(Index out_rows, Index out_cols, Index n3, F&& f) {
    Tensor3 out(out_rows, out_cols, n3);
    for (Index k = 0; k < n3; ++k) out.slice(k) = f(k);
    return out;
}

/// Square matrix power by repeated multiplication; p == 0 gives the identity.
Matrix matrix_power(const Matrix& a, int p);

} // namespace mprod::detail
