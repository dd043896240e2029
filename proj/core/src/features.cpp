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

#include "glyphocr/features.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "glyphocr/errors.hpp"

namespace glyphocr {

namespace {

std::int64_t ipow(std::int64_t base, int exponent) {
    std::int64_t r = 1;
    for (int i = 0; i < exponent; ++i) r *= base;
    return r;
}

}  // namespace

std::vector<double> FeatureVector::flatten() const {
    std::vector<double> out(shape.begin(), shape.end());
    out.insert(out.end(), horizontal.begin(), horizontal.end());
    out.insert(out.end(), vertical.begin(), vertical.end());
    out.insert(out.end(), radial.begin(), radial.end());
    return out;
}

double raw_moment(const BinaryRaster& raster, int p, int q) {
    if (p < 0 || q < 0 || p > 3 || q > 3) throw PreconditionError("moment orders must be in 0..3");
    std::int64_t sum = 0;
    for (int y = 0; y < raster.height(); ++y) {
        for (int x = 0; x < raster.width(); ++x) {
            if (raster.at(x, y)) sum += ipow(x, p) * ipow(y, q);
        }
    }
    return static_cast<double>(sum);
}

MomentSet moments(const BinaryRaster& raster) {
    std::int64_t m00 = 0, m10 = 0, m01 = 0, m11 = 0, m20 = 0, m02 = 0, m30 = 0, m03 = 0;
    for (std::int64_t y = 0; y < raster.height(); ++y) {
        for (std::int64_t x = 0; x < raster.width(); ++x) {
            if (!raster.at(static_cast<int>(x), static_cast<int>(y))) continue;
            ++m00;
            m10 += x;
            m01 += y;
            m11 += x * y;
            m20 += x * x;
            m02 += y * y;
            m30 += x * x * x;
            m03 += y * y * y;
        }
    }
    auto d = [](std::int64_t v) { return static_cast<double>(v); };
    return {d(m00), d(m10), d(m01), d(m11), d(m20), d(m02), d(m30), d(m03)};
}

std::pair<double, double> centroid(const MomentSet& m) {
    if (m.m00 <= 0) throw PreconditionError("centroid of an empty glyph is undefined");
    return {m.m10 / m.m00, m.m01 / m.m00};
}

std::array<double, 4> shape_features(const MomentSet& m) {
    return {
        m.m20 + m.m02 + m.m00,
        std::abs(m.m20 - m.m02) + m.m11,
        std::abs(m.m10 - m.m01),
        m.m30 + m.m03,
    };
}

std::vector<int> horizontal_histogram(const BinaryRaster& raster) {
    std::vector<int> rows(static_cast<std::size_t>(raster.height()), 0);
    for (int y = 0; y < raster.height(); ++y) {
        for (int x = 0; x < raster.width(); ++x) rows[static_cast<std::size_t>(y)] += raster.at(x, y);
    }
    return rows;
}

std::vector<int> vertical_histogram(const BinaryRaster& raster) {
    std::vector<int> columns(static_cast<std::size_t>(raster.width()), 0);
    for (int y = 0; y < raster.height(); ++y) {
        for (int x = 0; x < raster.width(); ++x) columns[static_cast<std::size_t>(x)] += raster.at(x, y);
    }
    return columns;
}

std::vector<int> radial_histogram(const BinaryRaster& raster, int rings) {
    if (rings < 1) throw PreconditionError("ring count must be at least 1");
    const auto [cx, cy] = centroid(moments(raster));

    const double far_x = std::max(cx, static_cast<double>(raster.width() - 1) - cx);
    const double far_y = std::max(cy, static_cast<double>(raster.height() - 1) - cy);
    const double max_radius = std::hypot(far_x, far_y);
    const double ring_width = max_radius / rings;

    std::vector<int> counts(static_cast<std::size_t>(rings), 0);
    for (int y = 0; y < raster.height(); ++y) {
        for (int x = 0; x < raster.width(); ++x) {
            if (!raster.at(x, y)) continue;
            int ring = 0;
            if (ring_width > 0) {
                const double d = std::hypot(x - cx, y - cy);
                ring = std::min(rings - 1, static_cast<int>(std::floor(d / ring_width)));
            }
            ++counts[static_cast<std::size_t>(ring)];
        }
    }
    return counts;
}

FeatureVector feature_vector(const Glyph& glyph, const FeatureConfig& config) {
    const auto& r = glyph.raster;
    if (r.width() != config.size || r.height() != config.size) {
        throw PreconditionError("glyph canvas is " + std::to_string(r.width()) + "x" + std::to_string(r.height()) +
                                ", expected " + std::to_string(config.size) + "x" + std::to_string(config.size));
    }
    if (r.empty_foreground()) throw PreconditionError("cannot extract features from an empty glyph");

    auto to_real = [](const std::vector<int>& v) { return std::vector<double>(v.begin(), v.end()); };
    FeatureVector fv;
    fv.shape = shape_features(moments(r));
    fv.horizontal = to_real(horizontal_histogram(r));
    fv.vertical = to_real(vertical_histogram(r));
    fv.radial = to_real(radial_histogram(r, config.rings));
    return fv;
}

}  // namespace glyphocr
