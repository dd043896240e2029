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

// Projection-profile page layout: text line bands, baselines, and character
// boxes separated by blank columns.

#include <utility>
#include <vector>

#include "glyphocr/raster.hpp"

namespace glyphocr {

enum class Axis { horizontal, vertical };

/// Foreground counts per row (horizontal) or per column (vertical).
struct Profile {
    Axis axis = Axis::horizontal;
    std::vector<int> counts;
};

/// Half-open row range [start, end).
struct Band {
    int start = 0;
    int end = 0;

    int height() const noexcept { return end - start; }
    friend bool operator==(const Band&, const Band&) = default;
};

struct TextLine {
    Band band;
    int upper_baseline = 0;
    int lower_baseline = 0;
};

/// Half-open pixel rectangle [x0, x1) x [y0, y1) plus its place in reading order.
struct CharBox {
    int x0 = 0;
    int y0 = 0;
    int x1 = 0;
    int y1 = 0;
    int line_index = 0;
    int word_index = 0;

    int width() const noexcept { return x1 - x0; }
    int height() const noexcept { return y1 - y0; }
    friend bool operator==(const CharBox&, const CharBox&) = default;
};

inline constexpr int kDefaultMinLineHeight = 2;
inline constexpr double kDefaultGapFactor = 2.0;

Profile horizontal_profile(const BinaryRaster& raster);

/// Column counts restricted to the rows of `band`. Throws PreconditionError
/// when the band is empty or outside the raster.
Profile vertical_profile(const BinaryRaster& raster, const Band& band);

/// Maximal runs of nonzero counts, top to bottom, keeping runs of at least
/// `min_height` rows.
std::vector<Band> find_line_bands(const Profile& profile, int min_height = kDefaultMinLineHeight);

/// Upper baseline: row in the top half of the band with the largest rise
/// counts[y] - counts[y-1]. Lower baseline: row in the bottom half with the
/// largest fall counts[y+1] - counts[y]. Rows outside the profile count as 0.
/// Ties go to the row nearest the band center.
std::pair<int, int> find_baselines(const Profile& profile, const Band& band);

TextLine make_text_line(const Profile& profile, const Band& band);

/// One box per maximal run of nonempty columns inside the band, tightened
/// vertically, left to right. Touching characters stay merged.
std::vector<CharBox> segment_characters(const BinaryRaster& raster, const Band& band, int line_index = 0);

/// Assigns word indices: a new word starts after any gap that is at least
/// `gap_factor` times the median gap of the line.
std::vector<CharBox> group_words(std::vector<CharBox> boxes, double gap_factor = kDefaultGapFactor);

/// Smallest sub-box holding all foreground pixels of `box`. Throws
/// PreconditionError when the box is empty or out of bounds.
CharBox tight_bounding_box(const BinaryRaster& raster, const CharBox& box);

}  // namespace glyphocr
