#pragma once

#include "mprod/tensor.hpp"
#include "mprod/transform.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace mprod {

/// SVD of one transformed frontal slice: slice = u * diag(singular_values) * v^H,
/// with u and v square unitary and singular values nonincreasing.
struct SliceFactors {
    Matrix u;
    Eigen::VectorXd singular_values;
    Matrix v;
    Index rank = 0;
};

/// Per-slice SVD of L(A). Numerical rank counts singular values strictly above
/// rel_tol * sigma_max, the largest singular value over all slices.
struct SliceSVD {
    Index rows = 0;
    Index cols = 0;
    double rel_tol = 0.0;
    std::vector<SliceFactors> slices;

    [[nodiscard]] std::vector<Index> ranks() const;
};

/// Default relative rank tolerance: max(n1, n2) * eps * max(1, cond(M)).
double default_rank_tolerance(Index n1, Index n2, const TransformSpec& t);

/// Throws NumericalError (carrying the slice index) if an SVD fails or a
/// slice holds non-finite values.
SliceSVD slice_svd(const Tensor3& a, const TransformSpec& t,
                   std::optional<double> rel_tol = std::nullopt);

enum class ParamProvenance { zero, seeded, user };

/// Free blocks of one slice of the {1}-inverse canonical form
///   V * [[D^-1, W12], [W21, W22]] * U^H
/// with W12: r x (n1-r), W21: (n2-r) x r, W22: (n2-r) x (n1-r).
struct OneInverseBlocks {
    Matrix w12;
    Matrix w21;
    Matrix w22;
};

struct OneInverseParams {
    std::vector<OneInverseBlocks> slices;
    ParamProvenance provenance = ParamProvenance::zero;
    std::uint64_t seed = 0;

    static OneInverseParams zeros(const SliceSVD& svd);

    /// Standard complex Gaussian blocks. Slice k draws from its own stream
    /// derived from (seed, k), so the result does not depend on evaluation order.
    static OneInverseParams random(const SliceSVD& svd, std::uint64_t seed);

    [[nodiscard]] bool conforms(const SliceSVD& svd) const;
};

/// Per-slice index of L(A) and their maximum. stable_rank[i] is the rank at
/// which the power sequence of slice i stabilizes, i.e. rank(L(A)^(i)^p) for
/// every p >= per_slice[i]. Nonsingular slices have index 0.
struct IndexResult {
    std::vector<int> per_slice;
    std::vector<Index> stable_rank;
    int overall = 0;
};

Tensor3 mp_inverse(const Tensor3& a, const TransformSpec& t);

/// Member of A{1} selected by `params`; zero blocks give the Moore-Penrose inverse.
Tensor3 one_inverse(const Tensor3& a, const TransformSpec& t, const OneInverseParams& params);
Tensor3 one_inverse(const SliceSVD& svd, const OneInverseParams& params, const TransformSpec& t);

std::pair<Tensor3, OneInverseParams> one_inverse_random(const Tensor3& a, const TransformSpec& t,
                                                        std::uint64_t seed);

/// A^{-,+} = A^- *_M A *_M A^+, computed from the canonical form where only
/// W21 survives.
Tensor3 one_mp_inverse(const Tensor3& a, const TransformSpec& t, const OneInverseParams& params);
/// Same, for an explicitly given A^-.
Tensor3 one_mp_inverse(const Tensor3& a, const Tensor3& a_minus, const TransformSpec& t);

/// Requires n1 == n2.
IndexResult tensor_index(const Tensor3& a, const TransformSpec& t,
                         std::optional<double> rel_tol = std::nullopt);

/// Slice-wise A^k (A^{2k+1})^+ A^k with k = max(ind(A), 1).
Tensor3 drazin_inverse(const Tensor3& a, const TransformSpec& t);

/// A^{-,D} = A^- *_M A *_M A^D.
Tensor3 one_d_inverse(const Tensor3& a, const TransformSpec& t, const OneInverseParams& params);
Tensor3 one_d_inverse(const Tensor3& a, const Tensor3& a_minus, const TransformSpec& t);

/// A^{-,*} = A^- *_M A *_M A*.
Tensor3 one_star_inverse(const Tensor3& a, const TransformSpec& t, const OneInverseParams& params);
Tensor3 one_star_inverse(const Tensor3& a, const Tensor3& a_minus, const TransformSpec& t);

/// Throws SingularError naming the first slice whose smallest singular value
/// is at or below the rank tolerance.
Tensor3 exact_inverse(const Tensor3& a, const TransformSpec& t);

} // namespace mprod
