#pragma once

#include "mprod/tensor.hpp"
#include "mprod/transform.hpp"

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace mprod {

enum class Claim { mp, one_mp, drazin, one_d, one_star, exact, one_inverse, penrose };

std::string_view to_string(Claim c);
std::optional<Claim> parse_claim(std::string_view name);

struct Residual {
    std::string name;
    double value = 0.0;
};

/// Residuals are Frobenius norms in the original (untransformed) domain.
/// pass holds iff every residual <= tolerance * scale, scale = max(||A||_F, 1).
struct VerificationReport {
    Claim claim = Claim::mp;
    std::vector<Residual> residuals;
    double tolerance = 0.0;
    double scale = 1.0;
    bool pass = false;
    std::optional<int> index; // power k used by Drazin-type claims

    [[nodiscard]] std::optional<double> residual(std::string_view name) const;
    /// One `key=value` pair per line.
    [[nodiscard]] std::string to_text() const;
};

inline constexpr double kDefaultVerifyTolerance = 1e-8;

/// Equations (1) AXA = A, (2) XAX = X, (3) (AX)* = AX, (4) (XA)* = XA for the
/// requested subset of {1,2,3,4}.
VerificationReport check_penrose(const Tensor3& a, const Tensor3& x, const TransformSpec& t,
                                 const std::set<int>& subset = {1, 2, 3, 4},
                                 double tol = kDefaultVerifyTolerance);

/// XA^{k+1} = A^k, XAX = X, AX = XA with k = max(ind(A), 1).
VerificationReport check_drazin(const Tensor3& a, const Tensor3& x, const TransformSpec& t,
                                double tol = kDefaultVerifyTolerance);

/// XAX = X, XA^k = A^- A^k, AX = A A^D. Throws InputError if `a_minus` fails AGA = A.
VerificationReport check_one_d(const Tensor3& a, const Tensor3& x, const Tensor3& a_minus,
                               const TransformSpec& t, double tol = kDefaultVerifyTolerance);

/// X (A^+)* X = X, AX = AA*, X (A^+)* = A^- A. Throws InputError if `a_minus` fails AGA = A.
VerificationReport check_one_star(const Tensor3& a, const Tensor3& x, const Tensor3& a_minus,
                                  const TransformSpec& t, double tol = kDefaultVerifyTolerance);

/// XAX = X, AX = AA^+; passing is equivalent to X being a 1-MP inverse.
VerificationReport check_one_mp_system(const Tensor3& a, const Tensor3& x, const TransformSpec& t,
                                       double tol = kDefaultVerifyTolerance);

/// AX = I, XA = I.
VerificationReport check_exact(const Tensor3& a, const Tensor3& x, const TransformSpec& t,
                               double tol = kDefaultVerifyTolerance);

} // namespace mprod
