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

#include "glyphocr/thinning.hpp"

#include <algorithm>
#include <vector>

#include "glyphocr/errors.hpp"

namespace glyphocr {

namespace {

// Offsets of p2..p9, clockwise from north; y grows downwards.
constexpr std::array<int, 8> kDx = {0, 1, 1, 1, 0, -1, -1, -1};
constexpr std::array<int, 8> kDy = {-1, -1, 0, 1, 1, 1, 0, -1};

int crossing_number_at(const BinaryRaster& raster, int x, int y) {
    return crossing_number(Neighborhood::around(raster, x, y));
}

}  // namespace

Neighborhood Neighborhood::from_mask(unsigned mask) {
    Neighborhood n;
    for (std::size_t i = 0; i < 8; ++i) n.p[i] = static_cast<std::uint8_t>((mask >> i) & 1u);
    return n;
}

Neighborhood Neighborhood::around(const BinaryRaster& raster, int x, int y) {
    Neighborhood n;
    for (std::size_t i = 0; i < 8; ++i) n.p[i] = raster.at_or_zero(x + kDx[i], y + kDy[i]);
    return n;
}

int nonzero_neighbor_count(const Neighborhood& n) noexcept {
    int count = 0;
    for (const auto v : n.p) count += v;
    return count;
}

int crossing_number(const Neighborhood& n) noexcept {
    int transitions = 0;
    for (std::size_t i = 0; i < 8; ++i) {
        if (n.p[i] == 0 && n.p[(i + 1) % 8] == 1) ++transitions;
    }
    return transitions;
}

bool deletable(const BinaryRaster& raster, int x, int y) {
    if (!raster.contains(x, y)) throw PreconditionError("pixel outside the raster");
    if (!raster.at(x, y)) return false;

    const Neighborhood n = Neighborhood::around(raster, x, y);
    const int b = nonzero_neighbor_count(n);
    if (b < 2 || b > 6) return false;
    if (crossing_number(n) != 1) return false;
    if (n[2] && n[4] && n[8] && crossing_number_at(raster, x, y - 1) == 1) return false;
    if (n[2] && n[4] && n[6] && crossing_number_at(raster, x + 1, y) == 1) return false;
    return true;
}

BinaryRaster hilditch_thin(const BinaryRaster& raster, const ThinningOptions& options, ThinningStats* stats) {
    if (options.max_passes && *options.max_passes < 1) throw PreconditionError("max passes must be at least 1");

    BinaryRaster current = raster;
    ThinningStats local;
    struct Mark {
        int x;
        int y;
        int neighbors;
    };
    std::vector<Mark> marked;

    while (true) {
        ++local.passes;
        const BinaryRaster snapshot = current;
        marked.clear();
        for (int y = 0; y < snapshot.height(); ++y) {
            for (int x = 0; x < snapshot.width(); ++x) {
                if (deletable(snapshot, x, y)) {
                    marked.push_back({x, y, nonzero_neighbor_count(Neighborhood::around(snapshot, x, y))});
                }
            }
        }
        // Removing every mark at once can split or erase small blocks
        // (a 2x2 square vanishes), so each removal is re-checked. Flank
        // pixels go before line ends (fewer neighbors) so ends survive.
        std::stable_sort(marked.begin(), marked.end(),
                         [](const Mark& a, const Mark& b) { return a.neighbors > b.neighbors; });
        std::size_t removed = 0;
        for (const auto& m : marked) {
            if (deletable(current, m.x, m.y)) {
                current.set(m.x, m.y, false);
                ++removed;
            }
        }
        local.removed += removed;
        if (removed == 0) break;
        if (options.max_passes && local.passes >= *options.max_passes) break;
    }

    if (stats) *stats = local;
    return current;
}

}  // namespace glyphocr
