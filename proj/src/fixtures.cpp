#include "mprod/fixtures.hpp"

#include "mprod/io.hpp"
#include "mprod/mproduct.hpp"

#include <initializer_list>

namespace mprod::fixtures {

namespace {

using Rows = std::initializer_list<std::initializer_list<double>>;

Matrix mat(Rows rows) {
    const auto r = static_cast<Index>(rows.size());
    const auto c = static_cast<Index>(rows.begin()->size());
    Matrix m(r, c);
    Index i = 0;
    for (const auto& row : rows) {
        Index j = 0;
        for (double v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

} // namespace

OneMpExample one_mp_example() {
    return {Tensor3::from_slices({mat({{1, -2}, {0, -6}, {0, 0}}),
                                  mat({{1, 2}, {2, 4}, {0, 0}}),
                                  mat({{0, 3}, {0, 6}, {0, 0}})}),
            TransformSpec::sample3()};
}

OneDExample one_d_example() {
    return {Tensor3::from_slices({mat({{0, 1, 1}, {0, -1, 0}, {1, -1, 1}}),
                                  mat({{1, 0, 1}, {0, 0, 0}, {1, 0, 0}}),
                                  mat({{0, 0, 0}, {0, 1, 0}, {-1, 1, 0}})}),
            Tensor3::from_slices({mat({{1, 1, 1}, {2, 1, -1}, {0, 2, 1}}),
                                  mat({{0, 1, 1}, {1, 1, 1}, {1, 1, -1}}),
                                  mat({{0, 0, 0}, {-1, -1, 0}, {0, -2, 0}})}),
            TransformSpec::sample3()};
}

OneStarExample one_star_example(const OneStarFree& f) {
    const TransformSpec t = TransformSpec::sample3();
    const Tensor3 a = Tensor3::from_slices({mat({{2, 0, 0}, {0, 2, 1}}),
                                            mat({{1, 0, 1}, {1, 1, 1}}),
                                            mat({{-1, 0, 0}, {0, -1, -1}})});
    // Row 3 of the second slice is (1, 1); with it the reference X slices follow.
    const Tensor3 hat = Tensor3::from_slices({mat({{1, 0}, {0, 1}, {f.a31, f.a32}}),
                                              mat({{f.b11, f.b12}, {1 - f.b11, 1 - f.b12}, {1, 1}}),
                                              mat({{0, 1}, {f.c21, f.c22}, {1, 0}})});
    return {a, inverse_transform(hat, t), t};
}

StarSystemExample star_system_example(const StarSystemFree& f) {
    const TransformSpec t = TransformSpec::sample3();
    const Tensor3 a = Tensor3::from_slices({mat({{0, 0, 1}, {1, -1, 1}}),
                                            mat({{1, 0, 0}, {0, 0, 1}}),
                                            mat({{0, 0, 0}, {0, 1, -1}})});
    const Tensor3 b = Tensor3::from_slices({mat({{0}, {2}}), mat({{0}, {1}}), mat({{1}, {-1}})});
    const Tensor3 hat = Tensor3::from_slices({mat({{0, 1}, {f.a21, f.a22}, {1, 0}}),
                                              mat({{1, 0}, {f.b21, f.b22}, {0, 1}}),
                                              mat({{1, 0}, {0, 1}, {f.c31, f.c32}})});
    return {a, b, inverse_transform(hat, t), t};
}

std::vector<std::filesystem::path> write_all(const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    std::vector<std::filesystem::path> written;
    auto tensor = [&](const Tensor3& x, const char* name) {
        written.push_back(dir / name);
        io::save_tensor(x, written.back());
    };
    written.push_back(dir / "M.json");
    io::save_transform(TransformSpec::sample3(), written.back());

    tensor(one_mp_example().a, "alg1_A.json");
    const auto d = one_d_example();
    tensor(d.a, "alg2_A.json");
    tensor(d.a_minus, "alg2_Aminus.json");
    const auto s = one_star_example();
    tensor(s.a, "alg3_A.json");
    tensor(s.a_minus, "alg3_Aminus.json");
    const auto sys = star_system_example();
    tensor(sys.a, "star_system_A.json");
    tensor(sys.b, "star_system_B.json");
    tensor(sys.a_minus, "star_system_Aminus.json");
    return written;
}

} // namespace mprod::fixtures
