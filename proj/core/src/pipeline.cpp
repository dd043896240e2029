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

#include "glyphocr/pipeline.hpp"

#include <json.hpp>

#include "glyphocr/errors.hpp"

namespace glyphocr {

void PipelineConfig::validate() const {
    if (const auto* fixed = std::get_if<FixedThreshold>(&threshold)) {
        if (fixed->level < 0 || fixed->level > 255) throw PreconditionError("threshold must be in 0..255");
    }
    if (min_line_height < 1) throw PreconditionError("min line height must be at least 1");
    if (!(gap_factor > 0)) throw PreconditionError("gap factor must be positive");
    if (glyph_size < kMinGlyphSize) throw PreconditionError("glyph size must be at least 4");
    if (rings < 1) throw PreconditionError("ring count must be at least 1");
    if (k < 1) throw PreconditionError("k must be at least 1");
    if (reject_distance && !(*reject_distance >= 0)) throw PreconditionError("reject distance must be non-negative");
}

BinaryRaster to_binary(const PnmImage& image, const ThresholdPolicy& policy, bool invert) {
    if (const auto* gray = std::get_if<GrayRaster>(&image)) return binarize(*gray, policy, invert);
    const auto& bits = std::get<BinaryRaster>(image);
    if (!invert) return bits;
    std::vector<std::uint8_t> flipped(bits.data().begin(), bits.data().end());
    for (auto& v : flipped) v ^= 1u;
    return BinaryRaster(bits.width(), bits.height(), std::move(flipped));
}

std::vector<LineLayout> segment_page(const BinaryRaster& page, int min_line_height, double gap_factor) {
    const Profile rows = horizontal_profile(page);
    std::vector<LineLayout> lines;
    for (const Band& band : find_line_bands(rows, min_line_height)) {
        const int index = static_cast<int>(lines.size());
        auto boxes = group_words(segment_characters(page, band, index), gap_factor);
        lines.push_back({make_text_line(rows, band), std::move(boxes)});
    }
    return lines;
}

Glyph prepare_glyph(const BinaryRaster& page, const CharBox& box, int size) {
    const CharBox tight = tight_bounding_box(page, box);
    Glyph glyph = normalize(crop(page, tight), size);
    glyph.raster = hilditch_thin(glyph.raster);
    glyph.source_box = tight;
    return glyph;
}

Glyph prepare_glyph(const BinaryRaster& glyph_image, int size) {
    if (glyph_image.width() == 0 || glyph_image.height() == 0) {
        throw PreconditionError("glyph image has no pixels");
    }
    return prepare_glyph(glyph_image, CharBox{0, 0, glyph_image.width(), glyph_image.height(), 0, 0}, size);
}

PageResult recognize_page(const BinaryRaster& page, const TemplateStore& store, const PipelineConfig& config) {
    config.validate();
    if (config.features() != store.config()) {
        throw ConfigMismatchError("pipeline uses size " + std::to_string(config.glyph_size) + " rings " +
                                  std::to_string(config.rings) + " but the store was built with size " +
                                  std::to_string(store.config().size) + " rings " +
                                  std::to_string(store.config().rings));
    }
    PageResult result;
    for (auto& layout : segment_page(page, config.min_line_height, config.gap_factor)) {
        RecognizedLine line{layout, {}};
        for (const CharBox& box : layout.boxes) {
            Glyph glyph = prepare_glyph(page, box, config.glyph_size);
            Match match = classify(store, glyph, config.k);
            std::string text = (config.reject_distance && match.distance > *config.reject_distance)
                                   ? std::string(kRejectLabel)
                                   : match.label;
            line.chars.push_back({box, std::move(glyph), std::move(match), std::move(text)});
        }
        result.lines.push_back(std::move(line));
    }
    return result;
}

std::string format_transcript(const PageResult& page, std::string_view char_separator) {
    std::string out;
    for (const auto& line : page.lines) {
        for (std::size_t i = 0; i < line.chars.size(); ++i) {
            if (i > 0) {
                out += line.chars[i].box.word_index != line.chars[i - 1].box.word_index ? std::string_view(" ")
                                                                                         : char_separator;
            }
            out += line.chars[i].text;
        }
        out += '\n';
    }
    return out;
}

std::string layout_json(int line_index, const LineLayout& layout) {
    nlohmann::ordered_json boxes = nlohmann::ordered_json::array();
    for (const auto& b : layout.boxes) boxes.push_back({b.x0, b.y0, b.x1, b.y1, b.word_index});
    nlohmann::ordered_json record = {
        {"line", line_index},
        {"band", {layout.line.band.start, layout.line.band.end}},
        {"baselines", {layout.line.upper_baseline, layout.line.lower_baseline}},
        {"boxes", std::move(boxes)},
    };
    return record.dump();
}

std::string glyph_dump_name(int line, int word, int char_in_word) {
    return "line" + std::to_string(line) + "_word" + std::to_string(word) + "_char" + std::to_string(char_in_word) +
           ".pbm";
}

}  // namespace glyphocr
