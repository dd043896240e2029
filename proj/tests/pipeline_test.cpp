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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "glyphocr/errors.hpp"
#include "glyphocr/pipeline.hpp"
#include "support.hpp"

using namespace glyphocr;

namespace {

constexpr int kExtent = 40;

BinaryRaster template_image(std::size_t id) { return testing::render_shape(id, kExtent, 64, 12, 12); }

TemplateStore shape_store(std::size_t count) {
    std::vector<LabeledGlyph> samples;
    for (std::size_t id = 0; id < count; ++id) {
        samples.push_back({std::string(1, static_cast<char>('a' + id)), prepare_glyph(template_image(id)), ""});
    }
    return train(samples, {kDefaultGlyphSize, kDefaultRings});
}

// Places shapes left to right on one line; gaps[i] separates shape i and i+1.
BinaryRaster compose_line(const std::vector<std::size_t>& ids, const std::vector<int>& gaps, int dx, int dy) {
    BinaryRaster page(600, 120);
    int x = 10 + dx;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        testing::blit(page, testing::render_shape(ids[i], kExtent, kExtent + 12, 6, 6), x - 5, 15 + dy);
        if (i < gaps.size()) x += kExtent + 2 + gaps[i];
    }
    return page;
}

}  // namespace

TEST_CASE("config validation") {
    PipelineConfig c;
    CHECK_NOTHROW(c.validate());
    auto bad = c;
    bad.glyph_size = 3;
    CHECK_THROWS_AS(bad.validate(), PreconditionError);
    bad = c;
    bad.rings = 0;
    CHECK_THROWS_AS(bad.validate(), PreconditionError);
    bad = c;
    bad.k = 0;
    CHECK_THROWS_AS(bad.validate(), PreconditionError);
    bad = c;
    bad.gap_factor = 0;
    CHECK_THROWS_AS(bad.validate(), PreconditionError);
    bad = c;
    bad.threshold = FixedThreshold{300};
    CHECK_THROWS_AS(bad.validate(), PreconditionError);
    CHECK(c.features() == FeatureConfig{32, 8});
}

TEST_CASE("to_binary") {
    const PnmImage gray = GrayRaster(2, 1, std::vector<std::uint8_t>{10, 250});
    CHECK(testing::to_art(to_binary(gray, FixedThreshold{128}, false)) == std::vector<std::string>{"#."});
    CHECK(testing::to_art(to_binary(gray, FixedThreshold{128}, true)) == std::vector<std::string>{".#"});
    const PnmImage bits = testing::from_art({"#.."});
    CHECK(testing::to_art(to_binary(bits, OtsuThreshold{}, false)) == std::vector<std::string>{"#.."});
    CHECK(testing::to_art(to_binary(bits, OtsuThreshold{}, true)) == std::vector<std::string>{".##"});
}

TEST_CASE("segment_page on a blank page") { CHECK(segment_page(BinaryRaster(50, 30)).empty()); }

TEST_CASE("segment_page finds lines, boxes and words") {
    const auto page = compose_line({0, 1, 2, 3, 4}, {6, 6, 40, 6}, 0, 0);
    const auto lines = segment_page(page);
    REQUIRE(lines.size() == 1);
    const auto& boxes = lines[0].boxes;
    REQUIRE(boxes.size() == 5);
    CHECK(boxes[0].word_index == 0);
    CHECK(boxes[2].word_index == 0);
    CHECK(boxes[3].word_index == 1);
    CHECK(boxes[4].word_index == 1);
    for (const auto& b : boxes) CHECK(b.line_index == 0);
}

TEST_CASE("prepare_glyph") {
    const auto g = prepare_glyph(template_image(3));
    CHECK(g.size() == 32);
    CHECK_FALSE(g.raster.empty_foreground());
    // thinned: nothing left to delete
    CHECK(hilditch_thin(g.raster) == g.raster);
    CHECK(g.source_box.x0 >= 12 - 3);
    CHECK(g.source_box.x1 <= 12 + kExtent + 3 + 1);
    CHECK_THROWS_AS(prepare_glyph(BinaryRaster(10, 10)), PreconditionError);
}

TEST_CASE("recognize a page composed from three templates") {
    const auto store = shape_store(3);
    PipelineConfig config;
    const auto page = compose_line({0, 1, 2}, {30, 30}, 0, 0);
    const auto result = recognize_page(page, store, config);
    CHECK(format_transcript(result) == "abc\n");
    CHECK(format_transcript(result, "|") == "a|b|c\n");

    // translated 5 px down and right
    const auto shifted = compose_line({0, 1, 2}, {30, 30}, 5, 5);
    CHECK(format_transcript(recognize_page(shifted, store, config)) == "abc\n");
}

TEST_CASE("recognize splits words and lines") {
    const auto store = shape_store(6);
    BinaryRaster page(600, 200);
    testing::blit(page, compose_line({0, 1, 2, 3}, {6, 6, 50}, 0, 0), 0, 0);
    testing::blit(page, compose_line({5, 4}, {8}, 0, 0), 0, 90);
    const auto result = recognize_page(page, store, PipelineConfig{});
    CHECK(format_transcript(result) == "abc d\nfe\n");
}

TEST_CASE("blank page gives an empty transcript") {
    const auto store = shape_store(2);
    CHECK(format_transcript(recognize_page(BinaryRaster(100, 100), store, PipelineConfig{})).empty());
}

TEST_CASE("reject distance") {
    const auto store = shape_store(3);
    PipelineConfig config;
    config.reject_distance = 0.0;
    const auto page = compose_line({0, 1, 2}, {30, 30}, 3, 0);
    const auto result = recognize_page(page, store, config);
    for (const auto& c : result.lines.at(0).chars) {
        CHECK(c.text == (c.match.distance > 0 ? "?" : c.match.label));
    }
}

TEST_CASE("recognize rejects a mismatched configuration") {
    const auto store = shape_store(2);
    PipelineConfig config;
    config.rings = 4;
    CHECK_THROWS_AS(recognize_page(BinaryRaster(10, 10), store, config), ConfigMismatchError);
}

TEST_CASE("layout json and dump names") {
    LineLayout layout;
    layout.line.band = {3, 9};
    layout.line.upper_baseline = 4;
    layout.line.lower_baseline = 7;
    layout.boxes = {{1, 3, 4, 9, 0, 0}, {8, 4, 10, 9, 0, 1}};
    const auto text = layout_json(2, layout);
    CHECK(text == R"({"line":2,"band":[3,9],"baselines":[4,7],"boxes":[[1,3,4,9,0],[8,4,10,9,1]]})");
    CHECK(nlohmann::json::parse(text)["boxes"].size() == 2);
    CHECK(glyph_dump_name(0, 1, 2) == "line0_word1_char2.pbm");
}
