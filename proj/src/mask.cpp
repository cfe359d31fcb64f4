#include "vcfes/mask.hpp"

#include <cctype>
#include <fstream>
#include <numeric>

#include "vcfes/error.hpp"

namespace vcfes {

namespace {

constexpr std::uint8_t kBinarizeThreshold = 128;

void check_dims(const BinaryMask& mask, const BinaryMask& reference, const char* name) {
    if (mask.width != reference.width || mask.height != reference.height) {
        throw Error(ErrorKind::DimensionMismatch,
                    std::string(name) + " mask is " + std::to_string(mask.width) + "x" +
                        std::to_string(mask.height) + ", foreground is " +
                        std::to_string(reference.width) + "x" + std::to_string(reference.height));
    }
}

// Reads the next PGM header token, skipping whitespace and '#' comments.
std::string next_pgm_token(std::istream& in) {
    std::string token;
    int c;
    while ((c = in.get()) != EOF) {
        if (c == '#') {
            while ((c = in.get()) != EOF && c != '\n') {
            }
            continue;
        }
        if (!std::isspace(c)) {
            token.push_back(static_cast<char>(c));
            break;
        }
    }
    while ((c = in.get()) != EOF && !std::isspace(c) && c != '#') {
        token.push_back(static_cast<char>(c));
    }
    if (c == '#') in.unget();
    return token;
}

std::uint32_t parse_dim_token(const std::string& token, const std::filesystem::path& path) {
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
        throw Error(ErrorKind::MalformedFile,
                    path.string() + ": bad header token '" + token + "'");
    }
    unsigned long value = std::stoul(token);
    if (value == 0 || value > 0xFFFFFFFFul) {
        throw Error(ErrorKind::MalformedFile, path.string() + ": dimension out of range");
    }
    return static_cast<std::uint32_t>(value);
}

BinaryMask read_payload(std::istream& in, std::uint32_t width, std::uint32_t height,
                        const std::filesystem::path& path) {
    BinaryMask mask;
    mask.width = width;
    mask.height = height;
    std::size_t total = static_cast<std::size_t>(width) * height;
    std::vector<std::uint8_t> raw(total);
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(total));
    if (static_cast<std::size_t>(in.gcount()) != total) {
        throw Error(ErrorKind::MalformedFile, path.string() + ": truncated pixel data");
    }
    mask.bits.resize(total);
    for (std::size_t i = 0; i < total; ++i) {
        mask.bits[i] = raw[i] >= kBinarizeThreshold ? 1 : 0;
    }
    return mask;
}

}  // namespace

std::size_t BinaryMask::popcount() const {
    return std::accumulate(bits.begin(), bits.end(), std::size_t{0});
}

BinaryMask load_mask(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::IoFailure, "cannot open " + path.string());
    }
    char magic[4] = {};
    in.read(magic, 4);
    if (in.gcount() < 2) {
        throw Error(ErrorKind::MalformedFile, path.string() + ": too short for a magic");
    }
    if (magic[0] == 'P' && magic[1] == '5') {
        in.seekg(2);
        std::uint32_t width = parse_dim_token(next_pgm_token(in), path);
        std::uint32_t height = parse_dim_token(next_pgm_token(in), path);
        std::string maxval = next_pgm_token(in);
        if (maxval != "255") {
            throw Error(ErrorKind::MalformedFile,
                        path.string() + ": maxval " + maxval + ", expected 255");
        }
        // The header terminator is the single whitespace byte already
        // consumed by next_pgm_token.
        return read_payload(in, width, height, path);
    }
    if (in.gcount() == 4 && magic[0] == 'M' && magic[1] == 'S' && magic[2] == 'K' &&
        magic[3] == '1') {
        std::string header;
        std::getline(in, header);
        if (!in) {
            throw Error(ErrorKind::MalformedFile, path.string() + ": truncated MSK1 header");
        }
        std::size_t split = header.find(' ', 1);
        if (header.empty() || header[0] != ' ' || split == std::string::npos) {
            throw Error(ErrorKind::MalformedFile, path.string() + ": bad MSK1 header");
        }
        std::uint32_t width = parse_dim_token(header.substr(1, split - 1), path);
        std::uint32_t height = parse_dim_token(header.substr(split + 1), path);
        return read_payload(in, width, height, path);
    }
    throw Error(ErrorKind::MalformedFile, path.string() + ": unrecognized magic bytes");
}

void save_mask_pgm(const std::filesystem::path& path, const BinaryMask& mask) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorKind::IoFailure, "cannot write " + path.string());
    }
    out << "P5\n" << mask.width << " " << mask.height << "\n255\n";
    std::vector<std::uint8_t> raw(mask.bits.size());
    for (std::size_t i = 0; i < mask.bits.size(); ++i) {
        raw[i] = mask.bits[i] ? 255 : 0;
    }
    out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (!out) {
        throw Error(ErrorKind::IoFailure, "short write to " + path.string());
    }
}

MaskSet clamp_to_foreground(const MaskSet& set) {
    check_dims(set.front, set.foreground, "front");
    check_dims(set.side, set.foreground, "side");
    check_dims(set.rear, set.foreground, "rear");
    MaskSet out = set;
    const auto& fg = set.foreground.bits;
    for (BinaryMask* side : {&out.front, &out.side, &out.rear}) {
        for (std::size_t i = 0; i < side->bits.size(); ++i) {
            side->bits[i] = static_cast<std::uint8_t>(side->bits[i] & fg[i]);
        }
    }
    return out;
}

AreaRatios area_ratios(const MaskSet& set, bool renormalize) {
    std::size_t fg = set.foreground.popcount();
    if (fg == 0) {
        throw Error(ErrorKind::EmptyForeground, "foreground mask has no pixels");
    }
    double denom = static_cast<double>(fg);
    AreaRatios ratios;
    ratios.front = static_cast<double>(set.front.popcount()) / denom;
    ratios.side = static_cast<double>(set.side.popcount()) / denom;
    ratios.rear = static_cast<double>(set.rear.popcount()) / denom;
    if (renormalize) {
        double sum = ratios.front + ratios.side + ratios.rear;
        if (sum > 1.0) {
            ratios.front /= sum;
            ratios.side /= sum;
            ratios.rear /= sum;
        }
    }
    return ratios;
}

MaskSet load_mask_set(const std::filesystem::path& masks_dir, const std::string& stem) {
    MaskSet set;
    set.foreground = load_mask(masks_dir / (stem + ".fg.pgm"));
    set.front = load_mask(masks_dir / (stem + ".front.pgm"));
    set.side = load_mask(masks_dir / (stem + ".side.pgm"));
    set.rear = load_mask(masks_dir / (stem + ".rear.pgm"));
    return clamp_to_foreground(set);
}

}  // namespace vcfes
