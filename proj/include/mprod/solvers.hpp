#pragma once

#include "mprod/geninv.hpp"
#include "mprod/tensor.hpp"
#include "mprod/transform.hpp"

#include <optional>
#include <string_view>

namespace mprod {

enum class FreeSide {
    left,  // X = particular + projector * Z
    right, // X = particular + Z * projector
};

/// General solution of a multilinear system as (particular, projector, side).
struct SolutionFamily {
    Tensor3 particular;
    Tensor3 projector;
    FreeSide side = FreeSide::left;

    /// Shape (n1, n2) of the free parameter Z; n3 is shared.
    [[nodiscard]] std::pair<Index, Index> free_shape() const;

    [[nodiscard]] Tensor3 instantiate(const Tensor3& z, const TransformSpec& t) const;
};

enum class System {
    mp_projected,     // A X = A A^+ B
    mp_right,         // X A A^+ = A^{-,+}
    drazin_projected, // A X = A A^D B
    drazin_right,     // X A A^D = A^{-,D}
    star_projected,   // A X = A A* B
};

std::string_view to_string(System s);
std::optional<System> parse_system(std::string_view name);

[[nodiscard]] constexpr bool needs_rhs(System s) noexcept {
    return s == System::mp_projected || s == System::drazin_projected || s == System::star_projected;
}

// X = A^{-,+} B + (I - A^- A) Z
SolutionFamily solve_mp_projected(const Tensor3& a, const Tensor3& b, const Tensor3& a_minus,
                                  const TransformSpec& t);
// X = A^- + Z (I - A A^+)
SolutionFamily solve_mp_right(const Tensor3& a, const Tensor3& a_minus, const TransformSpec& t);
// X = A^{-,D} B + (I - A^- A) Z
SolutionFamily solve_drazin_projected(const Tensor3& a, const Tensor3& b, const Tensor3& a_minus,
                                      const TransformSpec& t);
// X = A^- + Z (I - A A^D)
SolutionFamily solve_drazin_right(const Tensor3& a, const Tensor3& a_minus, const TransformSpec& t);
// X = A^{-,*} B + (I - A^- A) Z
SolutionFamily solve_star_projected(const Tensor3& a, const Tensor3& b, const Tensor3& a_minus,
                                    const TransformSpec& t);

// Same families with A^- = one_inverse(a, t, params).
SolutionFamily solve_mp_projected(const Tensor3& a, const Tensor3& b, const TransformSpec& t,
                                  const OneInverseParams& params);
SolutionFamily solve_mp_right(const Tensor3& a, const TransformSpec& t, const OneInverseParams& params);
SolutionFamily solve_drazin_projected(const Tensor3& a, const Tensor3& b, const TransformSpec& t,
                                      const OneInverseParams& params);
SolutionFamily solve_drazin_right(const Tensor3& a, const TransformSpec& t, const OneInverseParams& params);
SolutionFamily solve_star_projected(const Tensor3& a, const Tensor3& b, const TransformSpec& t,
                                    const OneInverseParams& params);

/// Dispatch by system; `b` is required exactly when needs_rhs(s).
SolutionFamily solve(System s, const Tensor3& a, const Tensor3* b, const Tensor3& a_minus,
                     const TransformSpec& t);

/// ||lhs - rhs||_F of the system's defining equation evaluated at X.
double system_residual(System s, const Tensor3& a, const Tensor3* b, const Tensor3& a_minus,
                       const Tensor3& x, const TransformSpec& t);

} // namespace mprod
