#include "mprod/verify.hpp"

#include "mprod/errors.hpp"
#include "mprod/geninv.hpp"
#include "mprod/mproduct.hpp"
#include "transform_domain.hpp"

#include <algorithm>
#include <array>
#include <cstdio>

namespace mprod {

namespace {

constexpr std::array<std::pair<Claim, std::string_view>, 8> kClaimNames{{
    {Claim::mp, "mp"},
    {Claim::one_mp, "one-mp"},
    {Claim::drazin, "drazin"},
    {Claim::one_d, "one-d"},
    {Claim::one_star, "one-star"},
    {Claim::exact, "exact"},
    {Claim::one_inverse, "one-inverse"},
    {Claim::penrose, "penrose"},
}};

void require_inverse_shape(const Tensor3& a, const Tensor3& x, const char* op) {
    detail::require(x.rows() == a.cols() && x.cols() == a.rows() && x.slices() == a.slices(),
                    std::string(op) + ": X must be " + std::to_string(a.cols()) + "x" +
                        std::to_string(a.rows()) + "x" + std::to_string(a.slices()));
}

VerificationReport make_report(Claim claim, const Tensor3& a, double tol, std::vector<Residual> residuals) {
    VerificationReport r;
    r.claim = claim;
    r.tolerance = tol;
    r.scale = std::max(a.frobenius_norm(), 1.0);
    r.residuals = std::move(residuals);
    r.pass = std::all_of(r.residuals.begin(), r.residuals.end(),
                         [&](const Residual& res) { return res.value <= tol * r.scale; });
    return r;
}

double diff(const Tensor3& lhs, const Tensor3& rhs) { return (lhs - rhs).frobenius_norm(); }

void require_one_inverse(const Tensor3& a, const Tensor3& a_minus, const TransformSpec& t, double tol,
                         const char* op) {
    require_inverse_shape(a, a_minus, op);
    const double scale = std::max(a.frobenius_norm(), 1.0);
    const double res = diff(m_chain({a, a_minus, a}, t), a);
    if (!(res <= tol * scale)) {
        throw InputError(std::string(op) + ": A^- is not a {1}-inverse of A (residual " + std::to_string(res) + ")");
    }
}

int drazin_power(const Tensor3& a, const TransformSpec& t) { return std::max(tensor_index(a, t).overall, 1); }

} // namespace

std::string_view to_string(Claim c) {
    for (const auto& [claim, name] : kClaimNames) {
        if (claim == c) return name;
    }
    return "unknown";
}

std::optional<Claim> parse_claim(std::string_view name) {
    for (const auto& [claim, n] : kClaimNames) {
        if (n == name) return claim;
    }
    return std::nullopt;
}

std::optional<double> VerificationReport::residual(std::string_view name) const {
    for (const auto& r : residuals) {
        if (r.name == name) return r.value;
    }
    return std::nullopt;
}

std::string VerificationReport::to_text() const {
    char buf[64];
    std::string out = "claim=" + std::string(to_string(claim)) + "\n";
    std::snprintf(buf, sizeof buf, "%.17g", tolerance);
    out += "tolerance=" + std::string(buf) + "\n";
    std::snprintf(buf, sizeof buf, "%.17g", scale);
    out += "scale=" + std::string(buf) + "\n";
    if (index) out += "index=" + std::to_string(*index) + "\n";
    for (const auto& r : residuals) {
        std::snprintf(buf, sizeof buf, "%.17g", r.value);
        out += "residual." + r.name + "=" + buf + "\n";
    }
    out += std::string("pass=") + (pass ? "true" : "false") + "\n";
    return out;
}

VerificationReport check_penrose(const Tensor3& a, const Tensor3& x, const TransformSpec& t,
                                 const std::set<int>& subset, double tol) {
    require_inverse_shape(a, x, "check_penrose");
    for (int e : subset) {
        if (e < 1 || e > 4) throw InputError("check_penrose: equations are numbered 1 to 4");
    }
    std::vector<Residual> res;
    const Tensor3 ax = m_product(a, x, t);
    const Tensor3 xa = m_product(x, a, t);
    if (subset.count(1) != 0) res.push_back({"axa_minus_a", diff(m_product(ax, a, t), a)});
    if (subset.count(2) != 0) res.push_back({"xax_minus_x", diff(m_product(xa, x, t), x)});
    if (subset.count(3) != 0) res.push_back({"ax_hermitian", diff(conj_transpose(ax, t), ax)});
    if (subset.count(4) != 0) res.push_back({"xa_hermitian", diff(conj_transpose(xa, t), xa)});
    Claim claim = Claim::penrose;
    if (subset == std::set<int>{1, 2, 3, 4}) claim = Claim::mp;
    if (subset == std::set<int>{1}) claim = Claim::one_inverse;
    return make_report(claim, a, tol, std::move(res));
}

VerificationReport check_drazin(const Tensor3& a, const Tensor3& x, const TransformSpec& t, double tol) {
    detail::require_square(a, "check_drazin");
    require_inverse_shape(a, x, "check_drazin");
    const int k = drazin_power(a, t);
    const Tensor3 ak = tensor_power(a, k, t);
    std::vector<Residual> res;
    res.push_back({"xa_pow_k1_minus_a_pow_k", diff(m_chain({x, ak, a}, t), ak)});
    res.push_back({"xax_minus_x", diff(m_chain({x, a, x}, t), x)});
    res.push_back({"ax_minus_xa", diff(m_product(a, x, t), m_product(x, a, t))});
    auto r = make_report(Claim::drazin, a, tol, std::move(res));
    r.index = k;
    return r;
}

VerificationReport check_one_d(const Tensor3& a, const Tensor3& x, const Tensor3& a_minus,
                               const TransformSpec& t, double tol) {
    detail::require_square(a, "check_one_d");
    require_inverse_shape(a, x, "check_one_d");
    require_one_inverse(a, a_minus, t, tol, "check_one_d");
    const int k = drazin_power(a, t);
    const Tensor3 ak = tensor_power(a, k, t);
    const Tensor3 ad = drazin_inverse(a, t);
    std::vector<Residual> res;
    res.push_back({"xax_minus_x", diff(m_chain({x, a, x}, t), x)});
    res.push_back({"xa_pow_k_minus_aminus_a_pow_k", diff(m_product(x, ak, t), m_product(a_minus, ak, t))});
    res.push_back({"ax_minus_a_ad", diff(m_product(a, x, t), m_product(a, ad, t))});
    auto r = make_report(Claim::one_d, a, tol, std::move(res));
    r.index = k;
    return r;
}

VerificationReport check_one_star(const Tensor3& a, const Tensor3& x, const Tensor3& a_minus,
                                  const TransformSpec& t, double tol) {
    require_inverse_shape(a, x, "check_one_star");
    require_one_inverse(a, a_minus, t, tol, "check_one_star");
    const Tensor3 pinv_h = conj_transpose(mp_inverse(a, t), t);
    const Tensor3 ah = conj_transpose(a, t);
    const Tensor3 x_ph = m_product(x, pinv_h, t);
    std::vector<Residual> res;
    res.push_back({"x_apinvh_x_minus_x", diff(m_product(x_ph, x, t), x)});
    res.push_back({"ax_minus_a_astar", diff(m_product(a, x, t), m_product(a, ah, t))});
    res.push_back({"x_apinvh_minus_aminus_a", diff(x_ph, m_product(a_minus, a, t))});
    return make_report(Claim::one_star, a, tol, std::move(res));
}

VerificationReport check_one_mp_system(const Tensor3& a, const Tensor3& x, const TransformSpec& t, double tol) {
    require_inverse_shape(a, x, "check_one_mp_system");
    const Tensor3 pinv = mp_inverse(a, t);
    std::vector<Residual> res;
    res.push_back({"xax_minus_x", diff(m_chain({x, a, x}, t), x)});
    res.push_back({"ax_minus_a_apinv", diff(m_product(a, x, t), m_product(a, pinv, t))});
    return make_report(Claim::one_mp, a, tol, std::move(res));
}

VerificationReport check_exact(const Tensor3& a, const Tensor3& x, const TransformSpec& t, double tol) {
    detail::require_square(a, "check_exact");
    require_inverse_shape(a, x, "check_exact");
    const Tensor3 id = identity_tensor(a.rows(), t);
    std::vector<Residual> res;
    res.push_back({"ax_minus_i", diff(m_product(a, x, t), id)});
    res.push_back({"xa_minus_i", diff(m_product(x, a, t), id)});
    return make_report(Claim::exact, a, tol, std::move(res));
}

} // namespace mprod
