#include "mprod/solvers.hpp"

#include "mprod/errors.hpp"
#include "mprod/mproduct.hpp"
#include "transform_domain.hpp"

#include <array>
#include <string>

namespace mprod {

namespace {

constexpr std::array<std::pair<System, std::string_view>, 5> kSystemNames{{
    {System::mp_projected, "mp-proj"},
    {System::mp_right, "mp-right"},
    {System::drazin_projected, "drazin-proj"},
    {System::drazin_right, "drazin-right"},
    {System::star_projected, "star-proj"},
}};

void require_a_minus(const Tensor3& a, const Tensor3& a_minus, const char* op) {
    detail::require(a_minus.rows() == a.cols() && a_minus.cols() == a.rows() && a_minus.slices() == a.slices(),
                    std::string(op) + ": A^- must have the shape of A transposed");
}

void require_rhs(const Tensor3& a, const Tensor3& b, const char* op) {
    detail::require(b.rows() == a.rows() && b.slices() == a.slices(),
                    std::string(op) + ": B must have as many rows and slices as A");
}

// I - A^- A, an n2 x n2 x n3 projector.
Tensor3 left_projector(const Tensor3& a, const Tensor3& a_minus, const TransformSpec& t) {
    return identity_tensor(a.cols(), t) - m_product(a_minus, a, t);
}

SolutionFamily projected(const Tensor3& a, const Tensor3& b, const Tensor3& a_minus,
                         const Tensor3& inverse, const TransformSpec& t) {
    return {m_product(inverse, b, t), left_projector(a, a_minus, t), FreeSide::left};
}

} // namespace

std::pair<Index, Index> SolutionFamily::free_shape() const {
    if (side == FreeSide::left) return {projector.cols(), particular.cols()};
    return {particular.rows(), projector.rows()};
}

Tensor3 SolutionFamily::instantiate(const Tensor3& z, const TransformSpec& t) const {
    const auto [rows, cols] = free_shape();
    detail::require(z.rows() == rows && z.cols() == cols && z.slices() == particular.slices(),
                    "SolutionFamily::instantiate: Z must be " + std::to_string(rows) + "x" +
                        std::to_string(cols) + "x" + std::to_string(particular.slices()));
    if (side == FreeSide::left) return particular + m_product(projector, z, t);
    return particular + m_product(z, projector, t);
}

std::string_view to_string(System s) {
    for (const auto& [sys, name] : kSystemNames) {
        if (sys == s) return name;
    }
    return "unknown";
}

std::optional<System> parse_system(std::string_view name) {
    for (const auto& [sys, n] : kSystemNames) {
        if (n == name) return sys;
    }
    return std::nullopt;
}

SolutionFamily solve_mp_projected(const Tensor3& a, const Tensor3& b, const Tensor3& a_minus,
                                  const TransformSpec& t) {
    require_a_minus(a, a_minus, "solve_mp_projected");
    require_rhs(a, b, "solve_mp_projected");
    return projected(a, b, a_minus, one_mp_inverse(a, a_minus, t), t);
}

SolutionFamily solve_mp_right(const Tensor3& a, const Tensor3& a_minus, const TransformSpec& t) {
    require_a_minus(a, a_minus, "solve_mp_right");
    const Tensor3 proj = identity_tensor(a.rows(), t) - m_product(a, mp_inverse(a, t), t);
    return {a_minus, proj, FreeSide::right};
}

SolutionFamily solve_drazin_projected(const Tensor3& a, const Tensor3& b, const Tensor3& a_minus,
                                      const TransformSpec& t) {
    detail::require_square(a, "solve_drazin_projected");
    require_a_minus(a, a_minus, "solve_drazin_projected");
    require_rhs(a, b, "solve_drazin_projected");
    return projected(a, b, a_minus, one_d_inverse(a, a_minus, t), t);
}

SolutionFamily solve_drazin_right(const Tensor3& a, const Tensor3& a_minus, const TransformSpec& t) {
    detail::require_square(a, "solve_drazin_right");
    require_a_minus(a, a_minus, "solve_drazin_right");
    const Tensor3 proj = identity_tensor(a.rows(), t) - m_product(a, drazin_inverse(a, t), t);
    return {a_minus, proj, FreeSide::right};
}

SolutionFamily solve_star_projected(const Tensor3& a, const Tensor3& b, const Tensor3& a_minus,
                                    const TransformSpec& t) {
    require_a_minus(a, a_minus, "solve_star_projected");
    require_rhs(a, b, "solve_star_projected");
    return projected(a, b, a_minus, one_star_inverse(a, a_minus, t), t);
}

SolutionFamily solve_mp_projected(const Tensor3& a, const Tensor3& b, const TransformSpec& t,
                                  const OneInverseParams& params) {
    return solve_mp_projected(a, b, one_inverse(a, t, params), t);
}

SolutionFamily solve_mp_right(const Tensor3& a, const TransformSpec& t, const OneInverseParams& params) {
    return solve_mp_right(a, one_inverse(a, t, params), t);
}

SolutionFamily solve_drazin_projected(const Tensor3& a, const Tensor3& b, const TransformSpec& t,
                                      const OneInverseParams& params) {
    detail::require_square(a, "solve_drazin_projected");
    return solve_drazin_projected(a, b, one_inverse(a, t, params), t);
}

SolutionFamily solve_drazin_right(const Tensor3& a, const TransformSpec& t, const OneInverseParams& params) {
    detail::require_square(a, "solve_drazin_right");
    return solve_drazin_right(a, one_inverse(a, t, params), t);
}

SolutionFamily solve_star_projected(const Tensor3& a, const Tensor3& b, const TransformSpec& t,
                                    const OneInverseParams& params) {
    return solve_star_projected(a, b, one_inverse(a, t, params), t);
}

SolutionFamily solve(System s, const Tensor3& a, const Tensor3* b, const Tensor3& a_minus,
                     const TransformSpec& t) {
    if (needs_rhs(s) && b == nullptr) {
        throw InputError("solve: system " + std::string(to_string(s)) + " needs a right-hand side B");
    }
    switch (s) {
    case System::mp_projected: return solve_mp_projected(a, *b, a_minus, t);
    case System::mp_right: return solve_mp_right(a, a_minus, t);
    case System::drazin_projected: return solve_drazin_projected(a, *b, a_minus, t);
    case System::drazin_right: return solve_drazin_right(a, a_minus, t);
    case System::star_projected: return solve_star_projected(a, *b, a_minus, t);
    }
    throw InputError("solve: unknown system");
}

double system_residual(System s, const Tensor3& a, const Tensor3* b, const Tensor3& a_minus,
                       const Tensor3& x, const TransformSpec& t) {
    if (needs_rhs(s) && b == nullptr) {
        throw InputError("system_residual: system " + std::string(to_string(s)) + " needs B");
    }
    switch (s) {
    case System::mp_projected: {
        const Tensor3 pinv = mp_inverse(a, t);
        return (m_product(a, x, t) - m_chain({a, pinv, *b}, t)).frobenius_norm();
    }
    case System::mp_right: {
        const Tensor3 pinv = mp_inverse(a, t);
        return (m_chain({x, a, pinv}, t) - one_mp_inverse(a, a_minus, t)).frobenius_norm();
    }
    case System::drazin_projected: {
        const Tensor3 ad = drazin_inverse(a, t);
        return (m_product(a, x, t) - m_chain({a, ad, *b}, t)).frobenius_norm();
    }
    case System::drazin_right: {
        const Tensor3 ad = drazin_inverse(a, t);
        return (m_chain({x, a, ad}, t) - one_d_inverse(a, a_minus, t)).frobenius_norm();
    }
    case System::star_projected: {
        const Tensor3 ah = conj_transpose(a, t);
        return (m_product(a, x, t) - m_chain({a, ah, *b}, t)).frobenius_norm();
    }
    }
    throw InputError("system_residual: unknown system");
}

} // namespace mprod
