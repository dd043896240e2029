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

#include "glyphocr/raster.hpp"
#include "glyphocr/segmentation.hpp"

namespace glyphocr {

inline constexpr int kDefaultGlyphSize = 32;
inline constexpr int kMinGlyphSize = 4;

/// A character scaled onto a square canvas of side size().
struct Glyph {
    BinaryRaster raster;
    CharBox source_box;

    int size() const noexcept { return raster.width(); }
};

/// Copies the sub-region covered by `box`. Throws PreconditionError when the
/// box is empty or leaves the raster.
BinaryRaster crop(const BinaryRaster& raster, const CharBox& box);

/// Nearest-neighbor scale so the longer side spans `size` pixels, aspect
/// ratio kept, centered with floor((size - extent) / 2) padding. The short
/// side's extent is round(short * size / long), at least 1.
Glyph normalize(const BinaryRaster& raster, int size = kDefaultGlyphSize);

}  // namespace glyphocr
