#include "mprod/io.hpp"

#include "mprod/errors.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <sstream>

namespace mprod::io {

namespace {

void expect(bool ok, const std::string& what) {
    if (!ok) throw SchemaError(what);
}

void expect_kind(const Json& j, const char* kind) {
    expect(j.is_object(), std::string("expected a JSON object of kind '") + kind + "'");
    const std::string k = kind_of(j);
    expect(k == kind, std::string("expected kind '") + kind + "', got '" + k + "'");
}

Json complex_to_json(Complex z, const char* where) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw InputError(std::string(where) + ": refusing to write a non-finite value");
    }
    return Json::array({z.real(), z.imag()});
}

Complex complex_from_json(const Json& j, const std::string& where) {
    expect(j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number(),
           where + ": expected [re, im]");
    const double re = j[0].get<double>();
    const double im = j[1].get<double>();
    expect(std::isfinite(re) && std::isfinite(im), where + ": non-finite value");
    return {re, im};
}

Index positive_dim(const Json& j, const std::string& where) {
    expect(j.is_number_integer() && j.get<std::int64_t>() > 0, where + ": expected a positive integer");
    return static_cast<Index>(j.get<std::int64_t>());
}

Index nonnegative_dim(const Json& j, const std::string& where) {
    expect(j.is_number_integer() && j.get<std::int64_t>() >= 0, where + ": expected a nonnegative integer");
    return static_cast<Index>(j.get<std::int64_t>());
}

std::array<Index, 3> read_shape(const Json& j) {
    expect(j.contains("shape") && j["shape"].is_array() && j["shape"].size() == 3,
           "'shape' must be an array [n1, n2, n3]");
    return {positive_dim(j["shape"][0], "shape[0]"), positive_dim(j["shape"][1], "shape[1]"),
            positive_dim(j["shape"][2], "shape[2]")};
}

// data[k][j][i] with the given extents; f(i, j, k, value) stores each entry.
template <class F>
void read_data(const Json& j, Index n1, Index n2, Index n3, F&& f) {
    expect(j.contains("data") && j["data"].is_array(), "'data' must be an array");
    const Json& d = j["data"];
    expect(d.size() == static_cast<std::size_t>(n3),
           "'data' has " + std::to_string(d.size()) + " slices, shape says " + std::to_string(n3));
    for (Index k = 0; k < n3; ++k) {
        const Json& s = d[static_cast<std::size_t>(k)];
        const std::string sw = "data[" + std::to_string(k) + "]";
        expect(s.is_array() && s.size() == static_cast<std::size_t>(n2),
               sw + " must hold " + std::to_string(n2) + " columns");
        for (Index c = 0; c < n2; ++c) {
            const Json& col = s[static_cast<std::size_t>(c)];
            const std::string cw = sw + "[" + std::to_string(c) + "]";
            expect(col.is_array() && col.size() == static_cast<std::size_t>(n1),
                   cw + " must hold " + std::to_string(n1) + " entries");
            for (Index i = 0; i < n1; ++i) {
                f(i, c, k, complex_from_json(col[static_cast<std::size_t>(i)], cw + "[" + std::to_string(i) + "]"));
            }
        }
    }
}

Json matrix_columns(const Eigen::Ref<const Matrix>& m, const char* where) {
    Json cols = Json::array();
    for (Index c = 0; c < m.cols(); ++c) {
        Json col = Json::array();
        for (Index i = 0; i < m.rows(); ++i) col.push_back(complex_to_json(m(i, c), where));
        cols.push_back(std::move(col));
    }
    return cols;
}

Json matrix_to_json(const Matrix& m) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["data"] = matrix_columns(m, "matrix_to_json");
    return j;
}

Matrix matrix_from_json(const Json& j, const std::string& where) {
    expect(j.is_object() && j.contains("rows") && j.contains("cols"), where + ": expected {rows, cols, data}");
    const Index r = nonnegative_dim(j["rows"], where + ".rows");
    const Index c = nonnegative_dim(j["cols"], where + ".cols");
    expect(j.contains("data") && j["data"].is_array() && j["data"].size() == static_cast<std::size_t>(c),
           where + ".data must hold " + std::to_string(c) + " columns");
    Matrix m(r, c);
    for (Index cc = 0; cc < c; ++cc) {
        const Json& col = j["data"][static_cast<std::size_t>(cc)];
        expect(col.is_array() && col.size() == static_cast<std::size_t>(r),
               where + ".data[" + std::to_string(cc) + "] must hold " + std::to_string(r) + " entries");
        for (Index i = 0; i < r; ++i) {
            m(i, cc) = complex_from_json(col[static_cast<std::size_t>(i)], where + ".data");
        }
    }
    return m;
}

const char* provenance_name(ParamProvenance p) {
    switch (p) {
    case ParamProvenance::zero: return "zero";
    case ParamProvenance::seeded: return "seeded";
    case ParamProvenance::user: return "user";
    }
    return "user";
}

bool flat(const Json& j) {
    if (!j.is_array()) return !j.is_object();
    for (const auto& e : j) {
        if (e.is_object()) return false;
        if (e.is_array()) {
            for (const auto& x : e) {
                if (x.is_structured()) return false;
            }
        }
    }
    return true;
}

void format_into(const Json& j, int depth, std::string& out) {
    if (flat(j)) {
        out += j.dump();
        return;
    }
    const std::string pad(static_cast<std::size_t>(depth + 1) * 2, ' ');
    const bool obj = j.is_object();
    out += obj ? "{\n" : "[\n";
    std::size_t n = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++n) {
        out += pad;
        if (obj) out += Json(it.key()).dump() + ": ";
        format_into(it.value(), depth + 1, out);
        if (n + 1 < j.size()) out += ",";
        out += "\n";
    }
    out += std::string(static_cast<std::size_t>(depth) * 2, ' ') + (obj ? "}" : "]");
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path.string() + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

std::string kind_of(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) return {};
    return j["kind"].get<std::string>();
}

Json tensor_to_json(const Tensor3& a) {
    Json j;
    j["kind"] = "tensor";
    j["shape"] = Json::array({a.rows(), a.cols(), a.slices()});
    Json data = Json::array();
    for (Index k = 0; k < a.slices(); ++k) data.push_back(matrix_columns(a.slice(k), "tensor_to_json"));
    j["data"] = std::move(data);
    return j;
}

Tensor3 tensor_from_json(const Json& j) {
    expect_kind(j, "tensor");
    const auto [n1, n2, n3] = read_shape(j);
    Tensor3 a(n1, n2, n3);
    read_data(j, n1, n2, n3, [&](Index i, Index c, Index k, Complex z) { a(i, c, k) = z; });
    return a;
}

Json transform_to_json(const TransformSpec& t) {
    Json j;
    j["kind"] = "transform";
    j["shape"] = Json::array({t.size(), t.size(), 1});
    j["data"] = Json::array({matrix_columns(t.matrix(), "transform_to_json")});
    return j;
}

TransformSpec transform_from_json(const Json& j) {
    expect_kind(j, "transform");
    const auto [n1, n2, n3] = read_shape(j);
    expect(n1 == n2 && n3 == 1, "transform shape must be [n, n, 1]");
    Matrix m(n1, n2);
    read_data(j, n1, n2, 1, [&](Index i, Index c, Index, Complex z) { m(i, c) = z; });
    return TransformSpec(std::move(m));
}

Json params_to_json(const OneInverseParams& p) {
    Json j;
    j["kind"] = "one-inverse-params";
    j["provenance"] = provenance_name(p.provenance);
    j["seed"] = p.seed;
    Json slices = Json::array();
    for (const auto& b : p.slices) {
        Json s;
        s["w12"] = matrix_to_json(b.w12);
        s["w21"] = matrix_to_json(b.w21);
        s["w22"] = matrix_to_json(b.w22);
        slices.push_back(std::move(s));
    }
    j["slices"] = std::move(slices);
    return j;
}

OneInverseParams params_from_json(const Json& j) {
    expect_kind(j, "one-inverse-params");
    OneInverseParams p;
    const std::string prov = j.value("provenance", std::string("user"));
    if (prov == "zero") {
        p.provenance = ParamProvenance::zero;
    } else if (prov == "seeded") {
        p.provenance = ParamProvenance::seeded;
    } else if (prov == "user") {
        p.provenance = ParamProvenance::user;
    } else {
        throw SchemaError("unknown provenance '" + prov + "'");
    }
    if (j.contains("seed")) {
        expect(j["seed"].is_number_unsigned() || j["seed"].is_number_integer(), "'seed' must be an integer");
        p.seed = j["seed"].get<std::uint64_t>();
    }
    expect(j.contains("slices") && j["slices"].is_array(), "'slices' must be an array");
    for (std::size_t k = 0; k < j["slices"].size(); ++k) {
        const Json& s = j["slices"][k];
        const std::string w = "slices[" + std::to_string(k) + "]";
        expect(s.is_object() && s.contains("w12") && s.contains("w21") && s.contains("w22"),
               w + " must hold w12, w21 and w22");
        p.slices.push_back({matrix_from_json(s["w12"], w + ".w12"), matrix_from_json(s["w21"], w + ".w21"),
                            matrix_from_json(s["w22"], w + ".w22")});
    }
    return p;
}

Json family_to_json(const SolutionFamily& f) {
    Json j;
    j["kind"] = "solution-family";
    j["side"] = f.side == FreeSide::left ? "left-free" : "right-free";
    j["particular"] = tensor_to_json(f.particular);
    j["projector"] = tensor_to_json(f.projector);
    return j;
}

SolutionFamily family_from_json(const Json& j) {
    expect_kind(j, "solution-family");
    const std::string side = j.value("side", std::string());
    expect(side == "left-free" || side == "right-free", "'side' must be left-free or right-free");
    expect(j.contains("particular") && j.contains("projector"), "family needs 'particular' and 'projector'");
    return {tensor_from_json(j["particular"]), tensor_from_json(j["projector"]),
            side == "left-free" ? FreeSide::left : FreeSide::right};
}

Json report_to_json(const VerificationReport& r) {
    Json j;
    j["kind"] = "verification-report";
    j["claim"] = std::string(to_string(r.claim));
    j["pass"] = r.pass;
    j["tolerance"] = r.tolerance;
    j["scale"] = r.scale;
    if (r.index) j["index"] = *r.index;
    Json res = Json::object();
    for (const auto& x : r.residuals) res[x.name] = x.value;
    j["residuals"] = std::move(res);
    return j;
}

Json index_to_json(const IndexResult& r) {
    Json j;
    j["kind"] = "index";
    j["overall"] = r.overall;
    j["per_slice"] = r.per_slice;
    j["stable_rank"] = r.stable_rank;
    return j;
}

std::string format(const Json& j) {
    std::string out;
    format_into(j, 0, out);
    return out;
}

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), e.byte);
    }
}

Json read_json(const std::filesystem::path& path) {
    try {
        return parse(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what(), e.byte_offset());
    }
}

void write_json(const Json& j, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot open '" + path.string() + "' for writing");
    out << format(j) << '\n';
    if (!out) throw InputError("failed writing '" + path.string() + "'");
}

Tensor3 load_tensor(const std::filesystem::path& path) {
    try {
        return tensor_from_json(read_json(path));
    } catch (const SchemaError& e) {
        throw SchemaError(path.string() + ": " + e.what());
    }
}

void save_tensor(const Tensor3& a, const std::filesystem::path& path) { write_json(tensor_to_json(a), path); }

TransformSpec load_transform(const std::filesystem::path& path) {
    try {
        return transform_from_json(read_json(path));
    } catch (const SchemaError& e) {
        throw SchemaError(path.string() + ": " + e.what());
    }
}

void save_transform(const TransformSpec& t, const std::filesystem::path& path) {
    write_json(transform_to_json(t), path);
}

} // namespace mprod::io
