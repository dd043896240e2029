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

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace glyphocr {

/// 8-bit grayscale image, row-major. Always at least 1x1.
class GrayRaster {
public:
    GrayRaster(int width, int height, std::uint8_t fill = 0);
    GrayRaster(int width, int height, std::vector<std::uint8_t> data);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }

    std::uint8_t at(int x, int y) const { return data_[index(x, y)]; }
    void set(int x, int y, std::uint8_t value) { data_[index(x, y)] = value; }

    std::span<const std::uint8_t> data() const noexcept { return data_; }

    friend bool operator==(const GrayRaster&, const GrayRaster&) = default;

private:
    std::size_t index(int x, int y) const {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
               static_cast<std::size_t>(x);
    }

    int width_;
    int height_;
    std::vector<std::uint8_t> data_;
};

/// Two-level image, row-major. 1 is foreground (ink), 0 background.
/// Zero-sized rasters are allowed.
class BinaryRaster {
public:
    BinaryRaster() = default;
    BinaryRaster(int width, int height);
    BinaryRaster(int width, int height, std::vector<std::uint8_t> data);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }

    bool contains(int x, int y) const noexcept {
        return x >= 0 && y >= 0 && x < width_ && y < height_;
    }

    std::uint8_t at(int x, int y) const { return data_[index(x, y)]; }
    /// Out-of-bounds reads return background.
    std::uint8_t at_or_zero(int x, int y) const noexcept {
        return contains(x, y) ? data_[index(x, y)] : std::uint8_t{0};
    }
    void set(int x, int y, bool ink) { data_[index(x, y)] = ink ? 1 : 0; }

    std::span<const std::uint8_t> data() const noexcept { return data_; }

    std::size_t foreground_count() const noexcept;
    bool empty_foreground() const noexcept { return foreground_count() == 0; }

    friend bool operator==(const BinaryRaster&, const BinaryRaster&) = default;

private:
    std::size_t index(int x, int y) const {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
               static_cast<std::size_t>(x);
    }

    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint8_t> data_;
};

using PnmImage = std::variant<GrayRaster, BinaryRaster>;

/// Decodes P1, P2, P4 and P5. Bitmaps keep the PBM convention (1 = black =
/// foreground). Graymaps with maxval other than 255 are rescaled with
/// round(v * 255 / maxval). Throws PnmParseError.
PnmImage load_pnm(std::span<const std::uint8_t> bytes);
PnmImage load_pnm(const std::string& bytes);

/// Encodes as packed P4 with a "P4 <w> <h>\n" header.
std::vector<std::uint8_t> save_pbm(const BinaryRaster& raster);

/// Whole-file helpers; throw IoError on file system failure.
PnmImage read_pnm_file(const std::string& path);
void write_pbm_file(const std::string& path, const BinaryRaster& raster);

/// Threshold maximizing between-class variance over the 256-bin histogram,
/// where class 0 holds intensities <= t. Ties resolve to the smallest t; a
/// single-intensity image returns that intensity.
int otsu_threshold(const GrayRaster& gray);

struct FixedThreshold {
    int level;
};
struct OtsuThreshold {};
using ThresholdPolicy = std::variant<FixedThreshold, OtsuThreshold>;

/// Dark ink convention: pixel < cut becomes foreground; `invert` selects
/// pixel >= cut instead. Under Otsu the cut is otsu_threshold + 1 so that the
/// lower class is exactly the foreground.
BinaryRaster binarize(const GrayRaster& gray, const ThresholdPolicy& policy,
                      bool invert = false);

}  // namespace glyphocr
