#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace vcfes {

// The four latent spaces. Order is part of the wire formats, do not reorder.
enum Space : int { kGlobal = 0, kFront = 1, kSide = 2, kRear = 3 };
inline constexpr int kNumSpaces = 4;
inline constexpr std::array<const char*, kNumSpaces> kSpaceNames = {"global", "front", "side",
                                                                    "rear"};

/// Visibility weights of the three vehicle sides, each the fraction of
/// foreground pixels covered by that side's mask. Components live in [0,1];
/// their sum may be below 1 (uncovered pixels) and is allowed to exceed 1
/// only by floating rounding when side masks overlap.
struct AreaRatios {
    double front = 0.0;
    double side = 0.0;
    double rear = 0.0;
};

/// One embedding per latent space, all of the same dimension d. Each vector
/// is either unit L2 norm or exactly zero; an all-zero vector marks a
/// degenerate projection and scores maximal distance downstream.
struct PerSpaceEmbeddings {
    std::array<std::vector<double>, kNumSpaces> space;

    std::size_t dim() const { return space[0].size(); }
};

bool is_degenerate(const std::vector<double>& v);

/// Embeddings for a whole batch, one row-major block per space.
/// Row i of block s is sample i's embedding in space s.
struct BatchSpaces {
    std::size_t n = 0;
    std::size_t d = 0;
    std::array<std::vector<double>, kNumSpaces> data;  // each n*d

    const double* row(int space, std::size_t i) const { return data[space].data() + i * d; }
    double* row(int space, std::size_t i) { return data[space].data() + i * d; }
};

}  // namespace vcfes
