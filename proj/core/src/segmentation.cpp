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

#include "glyphocr/segmentation.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

#include "glyphocr/errors.hpp"

namespace glyphocr {

namespace {

void check_band(const BinaryRaster& raster, const Band& band) {
    if (band.start < 0 || band.start >= band.end || band.end > raster.height()) {
        throw PreconditionError("band [" + std::to_string(band.start) + ", " + std::to_string(band.end) +
                                ") is not inside a raster of height " + std::to_string(raster.height()));
    }
}

int count_at(const std::vector<int>& counts, int i) {
    return (i >= 0 && i < static_cast<int>(counts.size())) ? counts[static_cast<std::size_t>(i)] : 0;
}

}  // namespace

Profile horizontal_profile(const BinaryRaster& raster) {
    Profile profile{Axis::horizontal, std::vector<int>(static_cast<std::size_t>(raster.height()), 0)};
    for (int y = 0; y < raster.height(); ++y) {
        int n = 0;
        for (int x = 0; x < raster.width(); ++x) n += raster.at(x, y);
        profile.counts[static_cast<std::size_t>(y)] = n;
    }
    return profile;
}

Profile vertical_profile(const BinaryRaster& raster, const Band& band) {
    check_band(raster, band);
    Profile profile{Axis::vertical, std::vector<int>(static_cast<std::size_t>(raster.width()), 0)};
    for (int y = band.start; y < band.end; ++y) {
        for (int x = 0; x < raster.width(); ++x) profile.counts[static_cast<std::size_t>(x)] += raster.at(x, y);
    }
    return profile;
}

std::vector<Band> find_line_bands(const Profile& profile, int min_height) {
    std::vector<Band> bands;
    const int n = static_cast<int>(profile.counts.size());
    int y = 0;
    while (y < n) {
        if (profile.counts[static_cast<std::size_t>(y)] == 0) {
            ++y;
            continue;
        }
        const int start = y;
        while (y < n && profile.counts[static_cast<std::size_t>(y)] != 0) ++y;
        if (y - start >= min_height) bands.push_back({start, y});
    }
    return bands;
}

std::pair<int, int> find_baselines(const Profile& profile, const Band& band) {
    if (band.start < 0 || band.start >= band.end || band.end > static_cast<int>(profile.counts.size())) {
        throw PreconditionError("band is not inside the profile");
    }
    const auto& c = profile.counts;
    const int h = band.height();
    // Doubled coordinates keep the center exact for even heights.
    const int center2 = band.start + band.end - 1;

    const int top_end = band.start + (h + 1) / 2;
    int upper = band.start;
    int best_rise = std::numeric_limits<int>::min();
    for (int y = band.start; y < top_end; ++y) {
        const int rise = count_at(c, y) - count_at(c, y - 1);
        if (rise > best_rise || (rise == best_rise && std::abs(2 * y - center2) < std::abs(2 * upper - center2))) {
            best_rise = rise;
            upper = y;
        }
    }

    const int bottom_start = band.start + h / 2;
    int lower = band.end - 1;
    int best_fall = std::numeric_limits<int>::max();
    for (int y = band.end - 1; y >= bottom_start; --y) {
        const int fall = count_at(c, y + 1) - count_at(c, y);
        if (fall < best_fall || (fall == best_fall && std::abs(2 * y - center2) < std::abs(2 * lower - center2))) {
            best_fall = fall;
            lower = y;
        }
    }
    return {upper, lower};
}

TextLine make_text_line(const Profile& profile, const Band& band) {
    const auto [upper, lower] = find_baselines(profile, band);
    return {band, upper, lower};
}

std::vector<CharBox> segment_characters(const BinaryRaster& raster, const Band& band, int line_index) {
    const Profile columns = vertical_profile(raster, band);
    std::vector<CharBox> boxes;
    const int n = static_cast<int>(columns.counts.size());
    int x = 0;
    while (x < n) {
        if (columns.counts[static_cast<std::size_t>(x)] == 0) {
            ++x;
            continue;
        }
        const int start = x;
        while (x < n && columns.counts[static_cast<std::size_t>(x)] != 0) ++x;
        CharBox box{start, band.start, x, band.end, line_index, 0};
        boxes.push_back(tight_bounding_box(raster, box));
    }
    return boxes;
}

std::vector<CharBox> group_words(std::vector<CharBox> boxes, double gap_factor) {
    if (!(gap_factor > 0.0)) throw PreconditionError("gap factor must be positive");
    if (boxes.empty()) return boxes;

    std::vector<int> gaps;
    gaps.reserve(boxes.size() - 1);
    for (std::size_t i = 0; i + 1 < boxes.size(); ++i) gaps.push_back(boxes[i + 1].x0 - boxes[i].x1);

    double median = 0.0;
    if (!gaps.empty()) {
        std::vector<int> sorted = gaps;
        std::sort(sorted.begin(), sorted.end());
        const std::size_t mid = sorted.size() / 2;
        median = sorted.size() % 2 == 1 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
    }
    const double break_gap = gap_factor * median;

    int word = 0;
    boxes[0].word_index = 0;
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        if (static_cast<double>(gaps[i]) >= break_gap) ++word;
        boxes[i + 1].word_index = word;
    }
    return boxes;
}

CharBox tight_bounding_box(const BinaryRaster& raster, const CharBox& box) {
    if (box.x0 < 0 || box.y0 < 0 || box.x1 > raster.width() || box.y1 > raster.height() || box.x0 >= box.x1 ||
        box.y0 >= box.y1) {
        throw PreconditionError("box is empty or outside the raster");
    }
    int x0 = box.x1, y0 = box.y1, x1 = box.x0, y1 = box.y0;
    for (int y = box.y0; y < box.y1; ++y) {
        for (int x = box.x0; x < box.x1; ++x) {
            if (!raster.at(x, y)) continue;
            x0 = std::min(x0, x);
            y0 = std::min(y0, y);
            x1 = std::max(x1, x + 1);
            y1 = std::max(y1, y + 1);
        }
    }
    if (x0 >= x1) throw PreconditionError("box holds no foreground; segmentation produced an empty box");
    return {x0, y0, x1, y1, box.line_index, box.word_index};
}

}  // namespace glyphocr
