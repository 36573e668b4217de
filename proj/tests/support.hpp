#pragma once

#include "mprod/tensor.hpp"

#include <gtest/gtest.h>

#include <initializer_list>

namespace support {

using mprod::Index;
using mprod::Matrix;
using mprod::Tensor3;

inline Matrix mat(std::initializer_list<std::initializer_list<double>> rows) {
    Matrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
    Index i = 0;
    for (const auto& row : rows) {
        Index j = 0;
        for (double v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

inline double max_abs_diff(const Eigen::Ref<const Matrix>& a, const Eigen::Ref<const Matrix>& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

/// ||a - b||_F / max(1, ||b||_F).
inline double rel_fro(const Tensor3& a, const Tensor3& b) {
    return (a - b).frobenius_norm() / std::max(1.0, b.frobenius_norm());
}

} // namespace support

#define EXPECT_SLICE_NEAR(tensor, k, expected, tol) \
    EXPECT_LE(support::max_abs_diff((tensor).slice(k), (expected)), (tol)) << "slice " << (k)
