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

// Generators and brute-force oracles shared by the test binaries. Nothing
// here calls into the library code paths it is used to check.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <deque>
#include <random>
#include <string>
#include <vector>

#include "glyphocr/raster.hpp"

namespace glyphocr::testing {

using Rng = std::mt19937_64;

inline BinaryRaster random_raster(int w, int h, double density, Rng& rng) {
    std::bernoulli_distribution ink(density);
    std::vector<std::uint8_t> data(static_cast<std::size_t>(w) * static_cast<std::size_t>(h));
    for (auto& v : data) v = ink(rng) ? 1 : 0;
    return BinaryRaster(w, h, std::move(data));
}

inline GrayRaster random_gray(int w, int h, Rng& rng) {
    std::uniform_int_distribution<int> level(0, 255);
    std::vector<std::uint8_t> data(static_cast<std::size_t>(w) * static_cast<std::size_t>(h));
    for (auto& v : data) v = static_cast<std::uint8_t>(level(rng));
    return GrayRaster(w, h, std::move(data));
}

/// Union of a few random filled rectangles and disks: thick, blobby shapes
/// of the kind thinning is meant for.
inline BinaryRaster random_blob(int w, int h, Rng& rng) {
    BinaryRaster r(w, h);
    std::uniform_int_distribution<int> count(1, 5);
    std::uniform_int_distribution<int> px(0, w - 1);
    std::uniform_int_distribution<int> py(0, h - 1);
    std::uniform_int_distribution<int> extent(2, std::max(3, w / 2));
    std::bernoulli_distribution disk(0.5);
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
        const int cx = px(rng), cy = py(rng), ex = extent(rng), ey = extent(rng);
        const bool round = disk(rng);
        for (int y = 0; y < h; ++y) {
            for (int x = 0; x < w; ++x) {
                const bool inside = round ? (x - cx) * (x - cx) + (y - cy) * (y - cy) <= ex * ex / 4
                                          : (x >= cx && x < cx + ex && y >= cy && y < cy + ey);
                if (inside) r.set(x, y, true);
            }
        }
    }
    return r;
}

/// Number of 8-connected foreground components, by breadth-first flood fill.
inline int count_components(const BinaryRaster& r) {
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(r.width()) * static_cast<std::size_t>(r.height()), 0);
    auto idx = [&](int x, int y) { return static_cast<std::size_t>(y) * static_cast<std::size_t>(r.width()) + x; };
    int components = 0;
    for (int y = 0; y < r.height(); ++y) {
        for (int x = 0; x < r.width(); ++x) {
            if (!r.at(x, y) || seen[idx(x, y)]) continue;
            ++components;
            std::deque<std::pair<int, int>> queue{{x, y}};
            seen[idx(x, y)] = 1;
            while (!queue.empty()) {
                const auto [cx, cy] = queue.front();
                queue.pop_front();
                for (int dy = -1; dy <= 1; ++dy) {
                    for (int dx = -1; dx <= 1; ++dx) {
                        const int nx = cx + dx, ny = cy + dy;
                        if (nx < 0 || ny < 0 || nx >= r.width() || ny >= r.height()) continue;
                        if (!r.at(nx, ny) || seen[idx(nx, ny)]) continue;
                        seen[idx(nx, ny)] = 1;
                        queue.emplace_back(nx, ny);
                    }
                }
            }
        }
    }
    return components;
}

/// Raster from rows of '#' (ink) and '.' (background).
inline BinaryRaster from_art(const std::vector<std::string>& rows) {
    const int h = static_cast<int>(rows.size());
    const int w = h ? static_cast<int>(rows[0].size()) : 0;
    BinaryRaster r(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) r.set(x, y, rows[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] == '#');
    }
    return r;
}

inline std::vector<std::string> to_art(const BinaryRaster& r) {
    std::vector<std::string> rows;
    for (int y = 0; y < r.height(); ++y) {
        std::string row;
        for (int x = 0; x < r.width(); ++x) row += r.at(x, y) ? '#' : '.';
        rows.push_back(row);
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Machine-drawn glyph shapes: strokes in unit coordinates, rendered at a
// given pixel extent with a stroke width proportional to it.

struct Stroke {
    double x0, y0, x1, y1;
};

inline const std::vector<std::vector<Stroke>>& shape_library() {
    static const std::vector<std::vector<Stroke>> shapes = {
        // L
        {{0.2, 0.0, 0.2, 1.0}, {0.2, 1.0, 0.9, 1.0}},
        // T
        {{0.0, 0.0, 1.0, 0.0}, {0.5, 0.0, 0.5, 1.0}},
        // plus
        {{0.0, 0.5, 1.0, 0.5}, {0.5, 0.0, 0.5, 1.0}},
        // X
        {{0.0, 0.0, 1.0, 1.0}, {1.0, 0.0, 0.0, 1.0}},
        // square outline
        {{0.0, 0.0, 1.0, 0.0}, {1.0, 0.0, 1.0, 1.0}, {1.0, 1.0, 0.0, 1.0}, {0.0, 1.0, 0.0, 0.0}},
        // triangle
        {{0.5, 0.0, 1.0, 1.0}, {1.0, 1.0, 0.0, 1.0}, {0.0, 1.0, 0.5, 0.0}},
        // H
        {{0.0, 0.0, 0.0, 1.0}, {1.0, 0.0, 1.0, 1.0}, {0.0, 0.5, 1.0, 0.5}},
        // Z
        {{0.0, 0.0, 1.0, 0.0}, {1.0, 0.0, 0.0, 1.0}, {0.0, 1.0, 1.0, 1.0}},
        // V
        {{0.0, 0.0, 0.5, 1.0}, {0.5, 1.0, 1.0, 0.0}},
        // E
        {{0.0, 0.0, 0.0, 1.0}, {0.0, 0.0, 1.0, 0.0}, {0.0, 0.5, 0.8, 0.5}, {0.0, 1.0, 1.0, 1.0}},
        // U
        {{0.0, 0.0, 0.0, 1.0}, {0.0, 1.0, 1.0, 1.0}, {1.0, 1.0, 1.0, 0.0}},
        // F
        {{0.0, 0.0, 0.0, 1.0}, {0.0, 0.0, 1.0, 0.0}, {0.0, 0.5, 0.7, 0.5}},
    };
    return shapes;
}

inline double segment_distance(double px, double py, const Stroke& s) {
    const double dx = s.x1 - s.x0, dy = s.y1 - s.y0;
    const double len2 = dx * dx + dy * dy;
    double t = len2 > 0 ? ((px - s.x0) * dx + (py - s.y0) * dy) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    const double ex = s.x0 + t * dx - px, ey = s.y0 + t * dy - py;
    return std::sqrt(ex * ex + ey * ey);
}

/// Draws shape `id` spanning `extent` pixels with its top-left corner at
/// (ox, oy) on a canvas x canvas raster.
inline BinaryRaster render_shape(std::size_t id, double extent, int canvas, int ox, int oy) {
    const auto& strokes = shape_library().at(id);
    const double half_width = std::max(1.0, extent * 0.06);
    BinaryRaster r(canvas, canvas);
    for (int y = 0; y < canvas; ++y) {
        for (int x = 0; x < canvas; ++x) {
            const double px = x + 0.5 - ox, py = y + 0.5 - oy;
            for (const auto& s : strokes) {
                const Stroke scaled{s.x0 * extent, s.y0 * extent, s.x1 * extent, s.y1 * extent};
                if (segment_distance(px, py, scaled) <= half_width) {
                    r.set(x, y, true);
                    break;
                }
            }
        }
    }
    return r;
}

/// Otsu by brute force: for every candidate t, re-partition the raw pixel
/// list and keep the first t with the largest between-class variance.
inline int otsu_oracle(const GrayRaster& g) {
    const auto px = g.data();
    bool uniform = true;
    for (auto v : px) uniform = uniform && v == px[0];
    if (uniform) return px[0];
    int best_t = 0;
    double best = -1;
    for (int t = 0; t < 256; ++t) {
        std::uint64_t n0 = 0, n1 = 0, s0 = 0, s1 = 0;
        for (auto v : px) {
            if (v <= t) {
                ++n0;
                s0 += v;
            } else {
                ++n1;
                s1 += v;
            }
        }
        double var = 0;
        if (n0 && n1) {
            const double weight = static_cast<double>(n0) * static_cast<double>(n1);
            const double diff = static_cast<double>(s0) / static_cast<double>(n0) -
                                static_cast<double>(s1) / static_cast<double>(n1);
            var = weight * diff * diff;
        }
        if (var > best) {
            best = var;
            best_t = t;
        }
    }
    return best_t;
}

/// Raw moment by a double loop with explicit repeated multiplication.
inline long long moment_oracle(const BinaryRaster& r, int p, int q) {
    long long sum = 0;
    for (int y = 0; y < r.height(); ++y) {
        for (int x = 0; x < r.width(); ++x) {
            if (!r.at(x, y)) continue;
            long long term = 1;
            for (int k = 0; k < p; ++k) term *= x;
            for (int k = 0; k < q; ++k) term *= y;
            sum += term;
        }
    }
    return sum;
}

/// Number of "01" substrings in the ring p2..p9 written out as text, with p2
/// repeated at the end to close the cycle.
inline int transition_oracle(const std::array<int, 8>& ring) {
    std::string s;
    for (int v : ring) s += static_cast<char>('0' + v);
    s += s[0];
    int count = 0;
    for (std::size_t pos = s.find("01"); pos != std::string::npos; pos = s.find("01", pos + 1)) ++count;
    return count;
}

/// Copies the ink of `src` onto `dst` with src's origin at (ox, oy).
inline void blit(BinaryRaster& dst, const BinaryRaster& src, int ox, int oy) {
    for (int y = 0; y < src.height(); ++y) {
        for (int x = 0; x < src.width(); ++x) {
            if (src.at(x, y)) dst.set(ox + x, oy + y, true);
        }
    }
}

}  // namespace glyphocr::testing
