#include "mprod/geninv.hpp"

#include "mprod/errors.hpp"
#include "mprod/mproduct.hpp"
#include "mprod/random.hpp"
#include "transform_domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace mprod {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_finite(const Matrix& s, Index k, const char* op) {
    if (!s.allFinite()) {
        throw NumericalError(std::string(op) + ": non-finite entries", static_cast<std::size_t>(k));
    }
}

// Checked before transforming: M spreads a NaN in one slice to all of them.
void require_finite_input(const Tensor3& a, const char* op) {
    for (Index k = 0; k < a.slices(); ++k) {
        if (!a.slice(k).allFinite()) {
            throw NumericalError(std::string(op) + ": non-finite entries", static_cast<std::size_t>(k));
        }
    }
}

Index count_above(const Eigen::VectorXd& sv, double threshold) {
    Index r = 0;
    while (r < sv.size() && sv(r) > threshold) ++r;
    return r;
}

Eigen::VectorXd singular_values(const Matrix& s, Index k, const char* op) {
    require_finite(s, k, op);
    Eigen::JacobiSVD<Matrix> svd(s);
    if (svd.info() != Eigen::Success) {
        throw NumericalError(std::string(op) + ": SVD did not converge", static_cast<std::size_t>(k));
    }
    return svd.singularValues();
}

SliceFactors factor_slice(const Matrix& s, Index k) {
    require_finite(s, k, "slice_svd");
    Eigen::JacobiSVD<Matrix> svd(s, Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (svd.info() != Eigen::Success) {
        throw NumericalError("slice_svd: SVD did not converge", static_cast<std::size_t>(k));
    }
    return {svd.matrixU(), svd.singularValues(), svd.matrixV(), 0};
}

// Largest singular value over all slices. Rounding in L(A) is proportional to
// it, so a slice that is zero up to rounding must not be measured against itself.
double global_sigma_max(const std::vector<Eigen::VectorXd>& svs) {
    double m = 0.0;
    for (const auto& sv : svs) {
        if (sv.size() > 0) m = std::max(m, sv(0));
    }
    return m;
}

// V * [[D^-1, W12], [W21, W22]] * U^H for one slice. Null blocks mean zero.
Matrix assemble(const SliceFactors& f, const Matrix* w12, const Matrix* w21, const Matrix* w22) {
    const Index n1 = f.u.rows();
    const Index n2 = f.v.rows();
    const Index r = f.rank;
    Matrix mid = Matrix::Zero(n2, n1);
    for (Index i = 0; i < r; ++i) mid(i, i) = 1.0 / f.singular_values(i);
    if (w12 != nullptr) mid.topRightCorner(r, n1 - r) = *w12;
    if (w21 != nullptr) mid.bottomLeftCorner(n2 - r, r) = *w21;
    if (w22 != nullptr) mid.bottomRightCorner(n2 - r, n1 - r) = *w22;
    return f.v * mid * f.u.adjoint();
}

// Moore-Penrose inverse of a matrix keeping exactly `rank` singular values.
Matrix truncated_pinv(const Matrix& s, Index rank, Index k) {
    require_finite(s, k, "drazin_inverse");
    if (rank == 0) return Matrix::Zero(s.cols(), s.rows());
    Eigen::JacobiSVD<Matrix> svd(s, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (svd.info() != Eigen::Success) {
        throw NumericalError("drazin_inverse: SVD did not converge", static_cast<std::size_t>(k));
    }
    const Eigen::VectorXd inv = svd.singularValues().head(rank).cwiseInverse();
    return svd.matrixV().leftCols(rank) * inv.asDiagonal() * svd.matrixU().leftCols(rank).adjoint();
}

struct SliceIndex {
    int index = 0;
    Index stable_rank = 0;
};

// Smallest p with rank(S^p) == rank(S^{p+1}), capped at n. The rank of S^p is
// taken relative to smax^p, widened by p for the accumulated rounding.
SliceIndex index_of_slice(const Matrix& s, const Eigen::VectorXd& sv, double smax, double rel_tol, Index k) {
    const Index n = s.rows();
    Index prev = n;
    Matrix power = Matrix::Identity(n, n);
    for (Index p = 1; p <= n; ++p) {
        power = power * s;
        const Eigen::VectorXd spv = p == 1 ? sv : singular_values(power, k, "tensor_index");
        const double tol = static_cast<double>(p) * rel_tol * std::pow(smax, static_cast<double>(p));
        const Index r = count_above(spv, tol);
        if (r == prev) return {static_cast<int>(p - 1), r};
        prev = r;
    }
    return {static_cast<int>(n), prev};
}

void require_conformable_inverse(const Tensor3& a, const Tensor3& a_minus, const char* op) {
    detail::require(a_minus.rows() == a.cols() && a_minus.cols() == a.rows() && a_minus.slices() == a.slices(),
                    std::string(op) + ": A^- must be " + std::to_string(a.cols()) + "x" +
                        std::to_string(a.rows()) + "x" + std::to_string(a.slices()));
}

// Slice-wise Drazin inverse of an already transformed square tensor.
Tensor3 drazin_hat(const Tensor3& hat, const IndexResult& idx) {
    const int k = std::max(idx.overall, 1);
    return detail::build_slices(hat.rows(), hat.cols(), hat.slices(), [&](Index s) -> Matrix {
        const Matrix ak = detail::matrix_power(hat.slice(s), k);
        const Matrix p = ak * ak * hat.slice(s);
        return ak * truncated_pinv(p, idx.stable_rank[static_cast<std::size_t>(s)], s) * ak;
    });
}

IndexResult index_of_hat(const Tensor3& hat, double rel_tol) {
    IndexResult out;
    out.per_slice.reserve(static_cast<std::size_t>(hat.slices()));
    out.stable_rank.reserve(static_cast<std::size_t>(hat.slices()));
    std::vector<Eigen::VectorXd> svs;
    for (Index k = 0; k < hat.slices(); ++k) svs.push_back(singular_values(hat.slice(k), k, "tensor_index"));
    const double smax = global_sigma_max(svs);
    for (Index k = 0; k < hat.slices(); ++k) {
        const auto si = index_of_slice(hat.slice(k), svs[static_cast<std::size_t>(k)], smax, rel_tol, k);
        out.per_slice.push_back(si.index);
        out.stable_rank.push_back(si.stable_rank);
        out.overall = std::max(out.overall, si.index);
    }
    return out;
}

// hat(A^-) * hat(A) * hat(Y) slice-wise, inverse-transformed once.
Tensor3 product_with_a_minus(const Tensor3& a_minus, const Tensor3& a_hat, const Tensor3& right_hat,
                             const TransformSpec& t) {
    const Tensor3 am_hat = transform(a_minus, t);
    return inverse_transform(
        detail::build_slices(am_hat.rows(), right_hat.cols(), a_hat.slices(),
                             [&](Index k) -> Matrix { return am_hat.slice(k) * a_hat.slice(k) * right_hat.slice(k); }),
        t);
}

} // namespace

std::vector<Index> SliceSVD::ranks() const {
    std::vector<Index> r;
    r.reserve(slices.size());
    for (const auto& f : slices) r.push_back(f.rank);
    return r;
}

double default_rank_tolerance(Index n1, Index n2, const TransformSpec& t) {
    return static_cast<double>(std::max(n1, n2)) * kEps * std::max(1.0, t.condition_estimate());
}

SliceSVD slice_svd(const Tensor3& a, const TransformSpec& t, std::optional<double> rel_tol) {
    require_finite_input(a, "slice_svd");
    detail::require_transform_fits(a, t.size(), "slice_svd");
    const Tensor3 hat = transform(a, t);
    SliceSVD out;
    out.rows = a.rows();
    out.cols = a.cols();
    out.rel_tol = rel_tol.value_or(default_rank_tolerance(a.rows(), a.cols(), t));
    out.slices.reserve(static_cast<std::size_t>(a.slices()));
    std::vector<Eigen::VectorXd> svs;
    for (Index k = 0; k < hat.slices(); ++k) {
        out.slices.push_back(factor_slice(hat.slice(k), k));
        svs.push_back(out.slices.back().singular_values);
    }
    const double threshold = out.rel_tol * global_sigma_max(svs);
    for (auto& f : out.slices) f.rank = count_above(f.singular_values, threshold);
    return out;
}

OneInverseParams OneInverseParams::zeros(const SliceSVD& svd) {
    OneInverseParams p;
    p.provenance = ParamProvenance::zero;
    for (const auto& f : svd.slices) {
        const Index r = f.rank;
        p.slices.push_back({Matrix::Zero(r, svd.rows - r), Matrix::Zero(svd.cols - r, r),
                            Matrix::Zero(svd.cols - r, svd.rows - r)});
    }
    return p;
}

OneInverseParams OneInverseParams::random(const SliceSVD& svd, std::uint64_t seed) {
    OneInverseParams p;
    p.provenance = ParamProvenance::seeded;
    p.seed = seed;
    for (std::size_t k = 0; k < svd.slices.size(); ++k) {
        Rng rng(seed, k);
        const Index r = svd.slices[k].rank;
        OneInverseBlocks b;
        b.w12 = rng.gaussian_matrix(r, svd.rows - r);
        b.w21 = rng.gaussian_matrix(svd.cols - r, r);
        b.w22 = rng.gaussian_matrix(svd.cols - r, svd.rows - r);
        p.slices.push_back(std::move(b));
    }
    return p;
}

bool OneInverseParams::conforms(const SliceSVD& svd) const {
    if (slices.size() != svd.slices.size()) return false;
    for (std::size_t k = 0; k < slices.size(); ++k) {
        const Index r = svd.slices[k].rank;
        const Index n1 = svd.rows;
        const Index n2 = svd.cols;
        const auto& b = slices[k];
        if (b.w12.rows() != r || b.w12.cols() != n1 - r) return false;
        if (b.w21.rows() != n2 - r || b.w21.cols() != r) return false;
        if (b.w22.rows() != n2 - r || b.w22.cols() != n1 - r) return false;
    }
    return true;
}

Tensor3 mp_inverse(const Tensor3& a, const TransformSpec& t) {
    const SliceSVD svd = slice_svd(a, t);
    return inverse_transform(detail::build_slices(a.cols(), a.rows(), a.slices(),
                                                  [&](Index k) -> Matrix {
                                                      return assemble(svd.slices[static_cast<std::size_t>(k)],
                                                                      nullptr, nullptr, nullptr);
                                                  }),
                             t);
}

Tensor3 one_inverse(const SliceSVD& svd, const OneInverseParams& params, const TransformSpec& t) {
    if (!params.conforms(svd)) {
        throw ShapeError("one_inverse: parameter blocks do not conform to the slice ranks");
    }
    const auto n3 = static_cast<Index>(svd.slices.size());
    return inverse_transform(detail::build_slices(svd.cols, svd.rows, n3,
                                                  [&](Index k) -> Matrix {
                                                      const auto s = static_cast<std::size_t>(k);
                                                      const auto& b = params.slices[s];
                                                      return assemble(svd.slices[s], &b.w12, &b.w21, &b.w22);
                                                  }),
                             t);
}

Tensor3 one_inverse(const Tensor3& a, const TransformSpec& t, const OneInverseParams& params) {
    return one_inverse(slice_svd(a, t), params, t);
}

std::pair<Tensor3, OneInverseParams> one_inverse_random(const Tensor3& a, const TransformSpec& t,
                                                        std::uint64_t seed) {
    const SliceSVD svd = slice_svd(a, t);
    OneInverseParams params = OneInverseParams::random(svd, seed);
    Tensor3 g = one_inverse(svd, params, t);
    return {std::move(g), std::move(params)};
}

Tensor3 one_mp_inverse(const Tensor3& a, const TransformSpec& t, const OneInverseParams& params) {
    const SliceSVD svd = slice_svd(a, t);
    if (!params.conforms(svd)) {
        throw ShapeError("one_mp_inverse: parameter blocks do not conform to the slice ranks");
    }
    return inverse_transform(detail::build_slices(a.cols(), a.rows(), a.slices(),
                                                  [&](Index k) -> Matrix {
                                                      const auto s = static_cast<std::size_t>(k);
                                                      return assemble(svd.slices[s], nullptr,
                                                                      &params.slices[s].w21, nullptr);
                                                  }),
                             t);
}

Tensor3 one_mp_inverse(const Tensor3& a, const Tensor3& a_minus, const TransformSpec& t) {
    require_conformable_inverse(a, a_minus, "one_mp_inverse");
    const Tensor3 a_hat = transform(a, t);
    const Tensor3 pinv_hat = transform(mp_inverse(a, t), t);
    return product_with_a_minus(a_minus, a_hat, pinv_hat, t);
}

IndexResult tensor_index(const Tensor3& a, const TransformSpec& t, std::optional<double> rel_tol) {
    require_finite_input(a, "tensor_index");
    detail::require_square(a, "tensor_index");
    detail::require_transform_fits(a, t.size(), "tensor_index");
    return index_of_hat(transform(a, t), rel_tol.value_or(default_rank_tolerance(a.rows(), a.cols(), t)));
}

Tensor3 drazin_inverse(const Tensor3& a, const TransformSpec& t) {
    require_finite_input(a, "drazin_inverse");
    detail::require_square(a, "drazin_inverse");
    detail::require_transform_fits(a, t.size(), "drazin_inverse");
    const Tensor3 hat = transform(a, t);
    const IndexResult idx = index_of_hat(hat, default_rank_tolerance(a.rows(), a.cols(), t));
    return inverse_transform(drazin_hat(hat, idx), t);
}

Tensor3 one_d_inverse(const Tensor3& a, const Tensor3& a_minus, const TransformSpec& t) {
    require_finite_input(a, "one_d_inverse");
    detail::require_square(a, "one_d_inverse");
    detail::require_transform_fits(a, t.size(), "one_d_inverse");
    require_conformable_inverse(a, a_minus, "one_d_inverse");
    const Tensor3 hat = transform(a, t);
    const IndexResult idx = index_of_hat(hat, default_rank_tolerance(a.rows(), a.cols(), t));
    return product_with_a_minus(a_minus, hat, drazin_hat(hat, idx), t);
}

Tensor3 one_d_inverse(const Tensor3& a, const TransformSpec& t, const OneInverseParams& params) {
    detail::require_square(a, "one_d_inverse");
    return one_d_inverse(a, one_inverse(a, t, params), t);
}

Tensor3 one_star_inverse(const Tensor3& a, const Tensor3& a_minus, const TransformSpec& t) {
    require_finite_input(a, "one_star_inverse");
    detail::require_transform_fits(a, t.size(), "one_star_inverse");
    require_conformable_inverse(a, a_minus, "one_star_inverse");
    const Tensor3 hat = transform(a, t);
    const Tensor3 adj_hat = detail::build_slices(a.cols(), a.rows(), a.slices(),
                                                 [&](Index k) -> Matrix { return hat.slice(k).adjoint(); });
    return product_with_a_minus(a_minus, hat, adj_hat, t);
}

Tensor3 one_star_inverse(const Tensor3& a, const TransformSpec& t, const OneInverseParams& params) {
    return one_star_inverse(a, one_inverse(a, t, params), t);
}

Tensor3 exact_inverse(const Tensor3& a, const TransformSpec& t) {
    require_finite_input(a, "exact_inverse");
    detail::require_square(a, "exact_inverse");
    detail::require_transform_fits(a, t.size(), "exact_inverse");
    const Tensor3 hat = transform(a, t);
    const double rel_tol = default_rank_tolerance(a.rows(), a.cols(), t);
    std::vector<Eigen::VectorXd> svs;
    for (Index k = 0; k < hat.slices(); ++k) svs.push_back(singular_values(hat.slice(k), k, "exact_inverse"));
    const double smax = global_sigma_max(svs);
    return inverse_transform(detail::build_slices(a.rows(), a.cols(), a.slices(),
                                                  [&](Index k) -> Matrix {
                                                      const auto& sv = svs[static_cast<std::size_t>(k)];
                                                      if (!(smax > 0.0) || sv(sv.size() - 1) <= rel_tol * smax) {
                                                          throw SingularError("exact_inverse: singular slice",
                                                                              static_cast<std::size_t>(k));
                                                      }
                                                      return hat.slice(k).partialPivLu().inverse();
                                                  }),
                             t);
}

} // namespace mprod
