#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "vcfes/types.hpp"

namespace vcfes {

/// Row-major binary image, 1 = foreground pixel.
struct BinaryMask {
    std::uint32_t width = 0;
    std::uint32_t height = 0;
    std::vector<std::uint8_t> bits;  // width*height entries of {0,1}

    std::size_t popcount() const;
};

/// Foreground mask plus the three side-view masks of one detection crop.
/// All four share dimensions; side masks are only guaranteed to be subsets
/// of the foreground after clamp_to_foreground.
struct MaskSet {
    BinaryMask foreground;
    BinaryMask front;
    BinaryMask side;
    BinaryMask rear;
};

/// Loads an 8-bit grayscale mask file, binarizing at the 128 midpoint.
/// Accepts binary PGM ("P5", maxval 255) and the raw "MSK1 <w> <h>\n"
/// format; detected by magic.
BinaryMask load_mask(const std::filesystem::path& path);

/// Writes a mask as binary PGM (foreground pixels 255, background 0).
void save_mask_pgm(const std::filesystem::path& path, const BinaryMask& mask);

/// Replaces each side mask by its pixelwise AND with the foreground.
/// Idempotent. Throws DimensionMismatch when masks disagree in size.
MaskSet clamp_to_foreground(const MaskSet& set);

/// Per-side visibility weights: popcount(side mask) / popcount(foreground).
/// The set must already be clamped. When renormalize is set and the three
/// ratios sum above 1 (overlapping side masks), they are rescaled to sum 1.
/// Throws EmptyForeground when the foreground has no pixels.
AreaRatios area_ratios(const MaskSet& set, bool renormalize = false);

/// Loads `<stem>.fg.pgm` / `.front.pgm` / `.side.pgm` / `.rear.pgm` from a
/// directory and returns the clamped set.
MaskSet load_mask_set(const std::filesystem::path& masks_dir, const std::string& stem);

}  // namespace vcfes
