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

#include "glyphocr/glyphnorm.hpp"

#include <algorithm>

#include "glyphocr/errors.hpp"

namespace glyphocr {

BinaryRaster crop(const BinaryRaster& raster, const CharBox& box) {
    if (box.x0 < 0 || box.y0 < 0 || box.x1 > raster.width() || box.y1 > raster.height() || box.x0 >= box.x1 ||
        box.y0 >= box.y1) {
        throw PreconditionError("crop box is empty or outside the raster");
    }
    BinaryRaster out(box.width(), box.height());
    for (int y = 0; y < out.height(); ++y) {
        for (int x = 0; x < out.width(); ++x) out.set(x, y, raster.at(box.x0 + x, box.y0 + y));
    }
    return out;
}

namespace {

// round(a * size / b) with halves rounded up, clamped to [1, size].
int scaled_extent(int a, int b, int size) {
    const long long num = 2LL * a * size + b;
    const int extent = static_cast<int>(num / (2LL * b));
    return std::clamp(extent, 1, size);
}

}  // namespace

Glyph normalize(const BinaryRaster& raster, int size) {
    if (size < kMinGlyphSize) {
        throw PreconditionError("glyph size must be at least " + std::to_string(kMinGlyphSize));
    }
    if (raster.empty_foreground()) throw PreconditionError("cannot normalize a glyph with no foreground");

    const int w = raster.width();
    const int h = raster.height();
    const int out_w = w >= h ? size : scaled_extent(w, h, size);
    const int out_h = h >= w ? size : scaled_extent(h, w, size);
    const int off_x = (size - out_w) / 2;
    const int off_y = (size - out_h) / 2;

    Glyph glyph{BinaryRaster(size, size), CharBox{0, 0, w, h, 0, 0}};
    for (int v = 0; v < out_h; ++v) {
        const int sy = static_cast<int>(static_cast<long long>(v) * h / out_h);
        for (int u = 0; u < out_w; ++u) {
            const int sx = static_cast<int>(static_cast<long long>(u) * w / out_w);
            if (raster.at(sx, sy)) glyph.raster.set(off_x + u, off_y + v, true);
        }
    }
    // Downsampling can step over every ink pixel of a sparse input; keep the
    // first one so a nonempty crop never yields an empty glyph.
    if (glyph.raster.empty_foreground()) {
        const auto data = raster.data();
        const auto first = static_cast<int>(std::find(data.begin(), data.end(), std::uint8_t{1}) - data.begin());
        const int x = first % w;
        const int y = first / w;
        glyph.raster.set(off_x + static_cast<int>(static_cast<long long>(x) * out_w / w),
                         off_y + static_cast<int>(static_cast<long long>(y) * out_h / h), true);
    }
    return glyph;
}

}  // namespace glyphocr
