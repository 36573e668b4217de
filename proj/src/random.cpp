#include "mprod/random.hpp"

#include "mprod/errors.hpp"
#include "mprod/mproduct.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace mprod {

namespace {

std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return std::mt19937_64(seq);
}

// A * diag(s) * B^H restricted to the first r columns of A and B.
Matrix low_rank(const Matrix& a, const Eigen::VectorXd& s, const Matrix& b) {
    const Index r = s.size();
    return a.leftCols(r) * s.cast<Complex>().asDiagonal() * b.leftCols(r).adjoint();
}

Eigen::VectorXd uniform_vector(Rng& rng, Index n, double lo, double hi) {
    Eigen::VectorXd v(n);
    for (Index i = 0; i < n; ++i) v(i) = rng.uniform(lo, hi);
    return v;
}

} // namespace

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

Rng::Rng(std::uint64_t seed, std::uint64_t stream) : engine_(seeded_engine(seed, stream)) {}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw InputError("Rng::uniform_int: empty range");
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine_());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return lo + static_cast<std::int64_t>(x % span);
}

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

Complex Rng::complex_normal() {
    const double re = normal();
    const double im = normal();
    return Complex{re, im} * std::numbers::sqrt2 * 0.5;
}

Matrix Rng::gaussian_matrix(Index rows, Index cols) {
    Matrix m(rows, cols);
    for (Index j = 0; j < cols; ++j) {
        for (Index i = 0; i < rows; ++i) m(i, j) = complex_normal();
    }
    return m;
}

Matrix Rng::unitary(Index n) {
    const Matrix g = gaussian_matrix(n, n);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    const Matrix& r = qr.matrixQR();
    for (Index i = 0; i < n; ++i) {
        const double mag = std::abs(r(i, i));
        if (mag > 0.0) q.col(i) *= r(i, i) / mag;
    }
    return q;
}

Tensor3 random_tensor(Index n1, Index n2, Index n3, std::uint64_t seed) {
    Tensor3 a(n1, n2, n3);
    Rng rng(seed);
    for (auto& z : a.data()) z = rng.complex_normal();
    return a;
}

TransformSpec random_transform(Index n, std::uint64_t seed) {
    Rng rng(seed);
    const Matrix u = rng.unitary(n);
    const Matrix v = rng.unitary(n);
    const Eigen::VectorXd s = uniform_vector(rng, n, 1.0, 3.0);
    return TransformSpec(low_rank(u, s, v));
}

Tensor3 random_conditioned_tensor(Index n1, Index n2, const TransformSpec& t, std::uint64_t seed,
                                  Index min_rank) {
    const Index full = std::min(n1, n2);
    if (min_rank < 0 || min_rank > full) throw InputError("random_conditioned_tensor: min_rank out of range");
    Tensor3 hat(n1, n2, t.size());
    for (Index k = 0; k < hat.slices(); ++k) {
        Rng rng(seed, static_cast<std::uint64_t>(k));
        const auto r = static_cast<Index>(rng.uniform_int(min_rank, full));
        const Matrix u = rng.unitary(n1);
        const Matrix v = rng.unitary(n2);
        hat.slice(k) = low_rank(u, uniform_vector(rng, r, 0.5, 2.0), v);
    }
    return inverse_transform(hat, t);
}

Tensor3 random_tensor_with_index(Index n, int index, const TransformSpec& t, std::uint64_t seed) {
    if (index < 0 || index > n) throw InputError("random_tensor_with_index: index must lie in [0, n]");
    const Index n3 = t.size();
    Rng picker(seed);
    const auto lead = static_cast<Index>(picker.uniform_int(0, n3 - 1));
    Tensor3 hat(n, n, n3);
    for (Index k = 0; k < n3; ++k) {
        Rng rng(seed, static_cast<std::uint64_t>(k) + 1);
        const auto nil = static_cast<Index>(k == lead ? index : rng.uniform_int(0, index));
        Matrix block = Matrix::Zero(n, n);
        for (Index i = 0; i + 1 < nil; ++i) block(i, i + 1) = rng.uniform(0.5, 2.0);
        const Index m = n - nil;
        if (m > 0) {
            const Matrix u = rng.unitary(m);
            const Matrix v = rng.unitary(m);
            block.bottomRightCorner(m, m) = low_rank(u, uniform_vector(rng, m, 0.5, 2.0), v);
        }
        const Matrix q = rng.unitary(n);
        hat.slice(k) = q * block * q.adjoint();
    }
    return inverse_transform(hat, t);
}

} // namespace mprod
