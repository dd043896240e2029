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

// Shape descriptors of a normalized glyph: raw geometric moments, four
// moment combinations, and row/column/ring histograms.
//
// Moments use x = column and y = row, zero-based from the top-left corner:
//   M_pq = sum over foreground pixels of x^p * y^q

#include <array>
#include <utility>
#include <vector>

#include "glyphocr/glyphnorm.hpp"

namespace glyphocr {

struct MomentSet {
    double m00 = 0, m10 = 0, m01 = 0, m11 = 0, m20 = 0, m02 = 0, m30 = 0, m03 = 0;

    friend bool operator==(const MomentSet&, const MomentSet&) = default;
};

inline constexpr int kDefaultRings = 8;

struct FeatureConfig {
    int size = kDefaultGlyphSize;
    int rings = kDefaultRings;

    /// 4 shape features + row histogram + column histogram + rings.
    int dimension() const noexcept { return 4 + 2 * size + rings; }
    friend bool operator==(const FeatureConfig&, const FeatureConfig&) = default;
};

struct FeatureVector {
    std::array<double, 4> shape{};
    std::vector<double> horizontal;
    std::vector<double> vertical;
    std::vector<double> radial;

    /// [f1..f4, horizontal, vertical, radial]
    std::vector<double> flatten() const;
};

/// Exact for p, q in 0..3 on any canvas below ~10^4 pixels a side.
double raw_moment(const BinaryRaster& raster, int p, int q);
inline double raw_moment(const Glyph& g, int p, int q) { return raw_moment(g.raster, p, q); }

MomentSet moments(const BinaryRaster& raster);
inline MomentSet moments(const Glyph& g) { return moments(g.raster); }

/// (M10 / M00, M01 / M00). Throws PreconditionError when M00 is 0.
std::pair<double, double> centroid(const MomentSet& m);

/// f1 = M20 + M02 + M00
/// f2 = |M20 - M02| + M11
/// f3 = |M10 - M01|
/// f4 = M30 + M03
std::array<double, 4> shape_features(const MomentSet& m);

/// Foreground count per row.
std::vector<int> horizontal_histogram(const BinaryRaster& raster);
/// Foreground count per column.
std::vector<int> vertical_histogram(const BinaryRaster& raster);

/// Foreground counts in `rings` equal-width annuli around the centroid. The
/// outer radius is the distance from the centroid to the farthest pixel-center
/// corner of the canvas; the last ring absorbs anything beyond it.
std::vector<int> radial_histogram(const BinaryRaster& raster, int rings);

/// Throws PreconditionError for an empty glyph or a canvas that does not
/// match config.size.
FeatureVector feature_vector(const Glyph& glyph, const FeatureConfig& config);

}  // namespace glyphocr
