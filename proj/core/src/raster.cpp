// Copyright 2026 The glyphocr Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License"); you
// may not use this file except in compliance with the License. You may
// obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "glyphocr/raster.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <iterator>

#include "glyphocr/errors.hpp"

namespace glyphocr {

namespace {

std::size_t checked_area(int width, int height) {
    if (width < 0 || height < 0) {
        throw PreconditionError("raster dimensions must be non-negative");
    }
    return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
}

}  // namespace

GrayRaster::GrayRaster(int width, int height, std::uint8_t fill)
    : width_(width), height_(height) {
    if (width < 1 || height < 1) {
        throw PreconditionError("gray raster must be at least 1x1");
    }
    data_.assign(checked_area(width, height), fill);
}

GrayRaster::GrayRaster(int width, int height, std::vector<std::uint8_t> data)
    : width_(width), height_(height), data_(std::move(data)) {
    if (width < 1 || height < 1) {
        throw PreconditionError("gray raster must be at least 1x1");
    }
    if (data_.size() != checked_area(width, height)) {
        throw PreconditionError("gray raster data length does not match its dimensions");
    }
}

BinaryRaster::BinaryRaster(int width, int height)
    : width_(width), height_(height), data_(checked_area(width, height), 0) {}

BinaryRaster::BinaryRaster(int width, int height, std::vector<std::uint8_t> data)
    : width_(width), height_(height), data_(std::move(data)) {
    if (data_.size() != checked_area(width, height)) {
        throw PreconditionError("binary raster data length does not match its dimensions");
    }
    if (std::any_of(data_.begin(), data_.end(), [](std::uint8_t v) { return v > 1; })) {
        throw PreconditionError("binary raster values must be 0 or 1");
    }
}

std::size_t BinaryRaster::foreground_count() const noexcept {
    return static_cast<std::size_t>(std::count(data_.begin(), data_.end(), std::uint8_t{1}));
}

// ---------------------------------------------------------------------------
// PNM decoding

namespace {

bool is_pnm_space(std::uint8_t c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

class PnmReader {
public:
    PnmReader(std::span<const std::uint8_t> bytes, std::size_t start) : bytes_(bytes), pos_(start) {}

    std::size_t pos() const { return pos_; }
    std::size_t remaining() const { return bytes_.size() - pos_; }
    bool at_end() const { return pos_ >= bytes_.size(); }

    [[noreturn]] void fail(PnmErrorKind kind, const std::string& detail) const {
        throw PnmParseError(kind, pos_, detail);
    }

    void skip_space_and_comments() {
        while (!at_end()) {
            if (is_pnm_space(bytes_[pos_])) {
                ++pos_;
            } else if (bytes_[pos_] == '#') {
                while (!at_end() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
            } else {
                break;
            }
        }
    }

    // Returns false at end of input without consuming anything.
    bool read_uint(unsigned long& value, PnmErrorKind on_garbage) {
        skip_space_and_comments();
        if (at_end()) return false;
        if (bytes_[pos_] < '0' || bytes_[pos_] > '9') fail(on_garbage, "expected a decimal number");
        value = 0;
        while (!at_end() && bytes_[pos_] >= '0' && bytes_[pos_] <= '9') {
            value = value * 10 + static_cast<unsigned long>(bytes_[pos_] - '0');
            if (value > 0xFFFFFFul) fail(on_garbage, "number too large");
            ++pos_;
        }
        return true;
    }

    unsigned long header_uint(const char* what) {
        unsigned long value = 0;
        if (!read_uint(value, PnmErrorKind::malformed_header)) {
            fail(PnmErrorKind::malformed_header, std::string("missing ") + what);
        }
        return value;
    }

    int plain_bit() {
        skip_space_and_comments();
        if (at_end()) fail(PnmErrorKind::truncated_data, "expected more bits");
        const std::uint8_t c = bytes_[pos_];
        if (c != '0' && c != '1') fail(PnmErrorKind::invalid_sample, "bitmap samples must be 0 or 1");
        ++pos_;
        return c - '0';
    }

    // Exactly one whitespace byte separates a raw header from its payload.
    void raster_separator() {
        if (at_end()) fail(PnmErrorKind::truncated_data, "missing pixel data");
        if (!is_pnm_space(bytes_[pos_])) {
            fail(PnmErrorKind::malformed_header, "expected whitespace before raster data");
        }
        ++pos_;
    }

    std::uint8_t raw_byte() { return bytes_[pos_++]; }

    void require_raw(std::size_t count) {
        if (remaining() < count) {
            pos_ = bytes_.size();
            fail(PnmErrorKind::truncated_data, "expected " + std::to_string(count) + " payload bytes");
        }
    }

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t pos_;
};

std::uint8_t rescale(unsigned long value, unsigned long maxval) {
    if (maxval == 255) return static_cast<std::uint8_t>(value);
    // round(v * 255 / maxval), halves rounded up
    return static_cast<std::uint8_t>((2 * value * 255 + maxval) / (2 * maxval));
}

BinaryRaster decode_bitmap(PnmReader& in, bool raw) {
    const auto width = in.header_uint("width");
    const auto height = in.header_uint("height");
    const std::size_t area = width * height;
    std::vector<std::uint8_t> data;

    if (raw) {
        if (area == 0) {
            // header-only file; a trailing separator is optional
            if (!in.at_end()) in.raster_separator();
            return BinaryRaster(static_cast<int>(width), static_cast<int>(height));
        }
        in.raster_separator();
        const std::size_t stride = (width + 7) / 8;
        in.require_raw(stride * height);
        data.resize(area);
        for (std::size_t y = 0; y < height; ++y) {
            for (std::size_t b = 0; b < stride; ++b) {
                const std::uint8_t packed = in.raw_byte();
                for (std::size_t bit = 0; bit < 8; ++bit) {
                    const std::size_t x = b * 8 + bit;
                    if (x >= width) break;
                    data[y * width + x] = (packed >> (7 - bit)) & 1u;
                }
            }
        }
    } else {
        if (in.remaining() < area) {
            // every plain sample takes at least one byte
            in.require_raw(area);
        }
        data.resize(area);
        for (auto& px : data) px = static_cast<std::uint8_t>(in.plain_bit());
    }
    return BinaryRaster(static_cast<int>(width), static_cast<int>(height), std::move(data));
}

GrayRaster decode_graymap(PnmReader& in, bool raw) {
    const auto width = in.header_uint("width");
    const auto height = in.header_uint("height");
    const auto maxval = in.header_uint("maxval");
    if (width == 0 || height == 0) in.fail(PnmErrorKind::malformed_header, "graymap must be at least 1x1");
    if (maxval == 0 || maxval > 65535) in.fail(PnmErrorKind::malformed_header, "maxval must be in 1..65535");
    const std::size_t area = width * height;
    std::vector<std::uint8_t> data(area);

    if (raw) {
        in.raster_separator();
        const std::size_t sample_bytes = maxval < 256 ? 1 : 2;
        in.require_raw(area * sample_bytes);
        for (auto& px : data) {
            unsigned long v = in.raw_byte();
            if (sample_bytes == 2) v = (v << 8) | in.raw_byte();
            if (v > maxval) in.fail(PnmErrorKind::invalid_sample, "sample exceeds maxval");
            px = rescale(v, maxval);
        }
    } else {
        if (in.remaining() < area) in.require_raw(area);
        for (auto& px : data) {
            unsigned long v = 0;
            if (!in.read_uint(v, PnmErrorKind::invalid_sample)) {
                in.fail(PnmErrorKind::truncated_data, "expected more samples");
            }
            if (v > maxval) in.fail(PnmErrorKind::invalid_sample, "sample exceeds maxval");
            px = rescale(v, maxval);
        }
    }
    return GrayRaster(static_cast<int>(width), static_cast<int>(height), std::move(data));
}

}  // namespace

PnmImage load_pnm(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P') {
        throw PnmParseError(PnmErrorKind::malformed_header, 0, "missing P magic");
    }
    switch (bytes[1]) {
    case '1':
    case '2':
    case '4':
    case '5':
        break;
    case '3':
    case '6':
    case '7':
        throw PnmParseError(PnmErrorKind::unsupported_magic, 0,
                            std::string("P") + static_cast<char>(bytes[1]) + " is not supported");
    default:
        throw PnmParseError(PnmErrorKind::malformed_header, 1, "unknown magic number");
    }
    const char magic = static_cast<char>(bytes[1]);
    if (bytes.size() > 2 && !is_pnm_space(bytes[2]) && bytes[2] != '#') {
        throw PnmParseError(PnmErrorKind::malformed_header, 2, "magic number must be followed by whitespace");
    }
    PnmReader in(bytes, 2);
    if (magic == '1' || magic == '4') return decode_bitmap(in, magic == '4');
    return decode_graymap(in, magic == '5');
}

PnmImage load_pnm(const std::string& bytes) {
    return load_pnm(std::span<const std::uint8_t>(
        reinterpret_cast<const std::uint8_t*>(bytes.data()), bytes.size()));
}

std::vector<std::uint8_t> save_pbm(const BinaryRaster& raster) {
    const std::string header =
        "P4 " + std::to_string(raster.width()) + " " + std::to_string(raster.height()) + "\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    const int stride = (raster.width() + 7) / 8;
    out.reserve(out.size() + static_cast<std::size_t>(stride) * static_cast<std::size_t>(raster.height()));
    for (int y = 0; y < raster.height(); ++y) {
        for (int b = 0; b < stride; ++b) {
            std::uint8_t packed = 0;
            for (int bit = 0; bit < 8; ++bit) {
                const int x = b * 8 + bit;
                if (x < raster.width() && raster.at(x, y)) packed |= static_cast<std::uint8_t>(0x80u >> bit);
            }
            out.push_back(packed);
        }
    }
    return out;
}

PnmImage read_pnm_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
    if (file.bad()) throw IoError("cannot read " + path);
    try {
        return load_pnm(bytes);
    } catch (const PnmParseError& e) {
        throw PnmParseError(e.kind(), e.offset(), path + ": " + e.what());
    }
}

void write_pbm_file(const std::string& path, const BinaryRaster& raster) {
    const auto bytes = save_pbm(raster);
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot create " + path);
    file.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!file) throw IoError("cannot write " + path);
}

// ---------------------------------------------------------------------------
// Thresholding

int otsu_threshold(const GrayRaster& gray) {
    std::array<std::uint64_t, 256> histogram{};
    for (const auto v : gray.data()) ++histogram[v];

    const auto occupied = std::count_if(histogram.begin(), histogram.end(), [](auto n) { return n != 0; });
    if (occupied == 1) {
        return static_cast<int>(std::find_if(histogram.begin(), histogram.end(), [](auto n) { return n != 0; }) -
                                histogram.begin());
    }

    std::uint64_t total_count = 0;
    std::uint64_t total_sum = 0;
    for (int level = 0; level < 256; ++level) {
        total_count += histogram[level];
        total_sum += histogram[level] * static_cast<std::uint64_t>(level);
    }

    int best_level = 0;
    double best_variance = -1.0;
    std::uint64_t low_count = 0;
    std::uint64_t low_sum = 0;
    for (int level = 0; level < 256; ++level) {
        low_count += histogram[level];
        low_sum += histogram[level] * static_cast<std::uint64_t>(level);
        const std::uint64_t high_count = total_count - low_count;
        const std::uint64_t high_sum = total_sum - low_sum;
        double variance = 0.0;
        if (low_count != 0 && high_count != 0) {
            const double weight = static_cast<double>(low_count) * static_cast<double>(high_count);
            const double diff = static_cast<double>(low_sum) / static_cast<double>(low_count) -
                                static_cast<double>(high_sum) / static_cast<double>(high_count);
            variance = weight * diff * diff;
        }
        if (variance > best_variance) {
            best_variance = variance;
            best_level = level;
        }
    }
    return best_level;
}

BinaryRaster binarize(const GrayRaster& gray, const ThresholdPolicy& policy, bool invert) {
    int cut = 0;
    if (const auto* fixed = std::get_if<FixedThreshold>(&policy)) {
        if (fixed->level < 0 || fixed->level > 255) {
            throw PreconditionError("fixed threshold must be in 0..255");
        }
        cut = fixed->level;
    } else {
        cut = otsu_threshold(gray) + 1;
    }

    std::vector<std::uint8_t> data(gray.data().size());
    std::transform(gray.data().begin(), gray.data().end(), data.begin(), [&](std::uint8_t v) {
        const bool dark = v < cut;
        return static_cast<std::uint8_t>(dark != invert ? 1 : 0);
    });
    return BinaryRaster(gray.width(), gray.height(), std::move(data));
}

}  // namespace glyphocr
