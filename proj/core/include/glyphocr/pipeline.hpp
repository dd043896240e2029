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

// Page-level orchestration: binarize -> lines -> characters -> glyphs ->
// features -> labels.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "glyphocr/classifier.hpp"
#include "glyphocr/features.hpp"
#include "glyphocr/glyphnorm.hpp"
#include "glyphocr/raster.hpp"
#include "glyphocr/segmentation.hpp"
#include "glyphocr/thinning.hpp"

namespace glyphocr {

struct PipelineConfig {
    ThresholdPolicy threshold = OtsuThreshold{};
    bool invert = false;
    int min_line_height = kDefaultMinLineHeight;
    double gap_factor = kDefaultGapFactor;
    int glyph_size = kDefaultGlyphSize;
    int rings = kDefaultRings;
    int k = 1;
    /// Matches farther than this are transcribed as "?".
    std::optional<double> reject_distance;
    std::optional<std::string> debug_dir;

    /// Throws PreconditionError when a field is out of range.
    void validate() const;
    FeatureConfig features() const { return {glyph_size, rings}; }
};

inline constexpr std::string_view kRejectLabel = "?";

/// Graymaps go through `binarize`; bitmaps pass through, flipped when `invert` is set.
BinaryRaster to_binary(const PnmImage& image, const ThresholdPolicy& policy, bool invert);

struct LineLayout {
    TextLine line;
    /// Left to right, word indices assigned, line_index set.
    std::vector<CharBox> boxes;
};

std::vector<LineLayout> segment_page(const BinaryRaster& page, int min_line_height = kDefaultMinLineHeight,
                                     double gap_factor = kDefaultGapFactor);

/// tight box -> crop -> normalize -> thin. The returned glyph carries the
/// tightened page box as its source.
Glyph prepare_glyph(const BinaryRaster& page, const CharBox& box, int size = kDefaultGlyphSize);

/// Same as prepare_glyph on the whole raster, for single-glyph images.
Glyph prepare_glyph(const BinaryRaster& glyph_image, int size = kDefaultGlyphSize);

struct RecognizedChar {
    CharBox box;
    Glyph glyph;
    Match match;
    /// match.label, or "?" when rejected.
    std::string text;
};

struct RecognizedLine {
    LineLayout layout;
    std::vector<RecognizedChar> chars;
};

struct PageResult {
    std::vector<RecognizedLine> lines;
};

/// Throws ConfigMismatchError when the config's glyph size or ring count
/// differs from the store's.
PageResult recognize_page(const BinaryRaster& page, const TemplateStore& store, const PipelineConfig& config);

/// One line per text line; words joined by a space, characters within a word
/// joined by `char_separator`.
std::string format_transcript(const PageResult& page, std::string_view char_separator = "");

/// {"line":i,"band":[s,e],"baselines":[u,l],"boxes":[[x0,y0,x1,y1,word],...]}
std::string layout_json(int line_index, const LineLayout& layout);

/// "line<i>_word<j>_char<k>.pbm", k counted within the word.
std::string glyph_dump_name(int line, int word, int char_in_word);

}  // namespace glyphocr
