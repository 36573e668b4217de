#pragma once

#include "mprod/tensor.hpp"
#include "mprod/transform.hpp"

#include <filesystem>
#include <vector>

namespace mprod::fixtures {

// Worked examples bundled with the library. All use TransformSpec::sample3().

/// 3x2x3 tensor for the 1-MP computation.
struct OneMpExample {
    Tensor3 a;
    TransformSpec t;
};

/// 3x3x3 tensor of index 2 with a fixed {1}-inverse, for the 1-D computation.
struct OneDExample {
    Tensor3 a;
    Tensor3 a_minus;
    TransformSpec t;
};

/// 2x3x3 tensor and a fixed A^- (given in the transform domain) for the
/// 1-Star computation. Free entries of A^- are set to the given values.
struct OneStarExample {
    Tensor3 a;
    Tensor3 a_minus;
    TransformSpec t;
};

/// 2x3x3 tensor, right-hand side, and fixed A^- for A X = A A* B.
struct StarSystemExample {
    Tensor3 a;
    Tensor3 b;
    Tensor3 a_minus;
    TransformSpec t;
};

OneMpExample one_mp_example();
OneDExample one_d_example();

/// Free entries a31, a32 (slice 1), b11, b12 (slice 2), c21, c22 (slice 3)
/// of the transform-domain A^-.
struct OneStarFree {
    double a31 = 0, a32 = 0, b11 = 0, b12 = 0, c21 = 0, c22 = 0;
};
OneStarExample one_star_example(const OneStarFree& free = {});

/// Free entries a21, a22 (slice 1), b21, b22 (slice 2), c31, c32 (slice 3)
/// of the transform-domain A^-.
struct StarSystemFree {
    double a21 = 0, a22 = 0, b21 = 0, b22 = 0, c31 = 0, c32 = 0;
};
StarSystemExample star_system_example(const StarSystemFree& free = {});

/// Writes every example (free entries zero) as JSON files into `dir`,
/// creating it if needed. Returns the written paths.
std::vector<std::filesystem::path> write_all(const std::filesystem::path& dir);

} // namespace mprod::fixtures
