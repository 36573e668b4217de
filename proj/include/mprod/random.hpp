#pragma once

#include "mprod/tensor.hpp"
#include "mprod/transform.hpp"

#include <cstdint>
#include <random>

namespace mprod {

/// mt19937_64 stream with a portable Box-Muller normal sampler, so seeded
/// output is identical across standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed);
    Rng(std::uint64_t seed, std::uint64_t stream);

    /// Uniform in [0, 1).
    double uniform();
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Uniform integer in [lo, hi].
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
    double normal();
    /// (N(0,1) + i N(0,1)) / sqrt(2).
    Complex complex_normal();

    Matrix gaussian_matrix(Index rows, Index cols);
    /// Haar-like unitary from the QR factorization of a Gaussian matrix.
    Matrix unitary(Index n);

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// Entries i.i.d. standard complex Gaussian.
Tensor3 random_tensor(Index n1, Index n2, Index n3, std::uint64_t seed);

/// M = U diag(s) V^H with unitary U, V and s uniform in [1, 3].
TransformSpec random_transform(Index n, std::uint64_t seed);

/// Tensor whose transformed slices are U_i diag(s) V_i^H with random rank
/// r_i in [min_rank, min(n1, n2)] and nonzero singular values in [0.5, 2].
Tensor3 random_conditioned_tensor(Index n1, Index n2, const TransformSpec& t, std::uint64_t seed,
                                  Index min_rank = 0);

/// Square n x n x n3 tensor with ind(A) == index exactly (requires index <= n).
///
/// Each transformed slice is Q diag(N, B) Q^H with Q unitary, B invertible with
/// singular values in [0.5, 2], and N a nilpotent shift block. One slice
/// carries a block of nilpotency `index`; the others draw theirs from [0, index].
Tensor3 random_tensor_with_index(Index n, int index, const TransformSpec& t, std::uint64_t seed);

} // namespace mprod
