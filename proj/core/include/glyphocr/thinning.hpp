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

// Hilditch thinning over a 3x3 window.
//
// Neighbors of the center pixel p1 are numbered clockwise from north:
//
//     p9 p2 p3
//     p8 p1 p4
//     p7 p6 p5
//
// A foreground pixel is deletable when
//   (1) 2 <= B(p1) <= 6             B = number of foreground neighbors
//   (2) X(p1) == 1                  X = 0->1 transitions around p2..p9,p2
//   (3) p2*p4*p8 == 0 or X(p2) != 1
//   (4) p2*p4*p6 == 0 or X(p4) != 1
// where X(p2) and X(p4) are taken on the windows centered on the north and
// east neighbors. Pixels outside the raster read as background.

#include <array>
#include <cstdint>
#include <optional>

#include "glyphocr/raster.hpp"

namespace glyphocr {

/// p2..p9 stored at indices 0..7.
struct Neighborhood {
    std::array<std::uint8_t, 8> p{};

    std::uint8_t operator[](int n) const { return p[static_cast<std::size_t>(n - 2)]; }

    /// Bit i of `mask` becomes p(i+2).
    static Neighborhood from_mask(unsigned mask);
    static Neighborhood around(const BinaryRaster& raster, int x, int y);
};

/// B(p1), in [0, 8].
int nonzero_neighbor_count(const Neighborhood& n) noexcept;

/// X(p1), in [0, 4].
int crossing_number(const Neighborhood& n) noexcept;

bool deletable(const BinaryRaster& raster, int x, int y);

struct ThinningStats {
    int passes = 0;
    std::size_t removed = 0;
};

struct ThinningOptions {
    /// Safety cap for debugging; unset means run to the fixpoint.
    std::optional<int> max_passes;
};

/// Repeats passes until one removes nothing. Each pass marks the pixels that
/// are deletable on a snapshot of the raster taken at the start of the pass,
/// then removes the marks one at a time, most snapshot neighbors first and
/// raster order within a tie, skipping any mark that is no longer deletable
/// given the removals already made in that pass. Every removal keeps the
/// number of 8-connected components unchanged.
BinaryRaster hilditch_thin(const BinaryRaster& raster, const ThinningOptions& options = {},
                           ThinningStats* stats = nullptr);

}  // namespace glyphocr
