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

#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>

#include "glyphocr/glyphocr.hpp"

namespace glyphocr::cli {

namespace fs = std::filesystem;

namespace {

struct Options {
    std::string threshold = "otsu";
    bool invert = false;
    int min_line_height = kDefaultMinLineHeight;
    double gap_factor = kDefaultGapFactor;
    std::optional<int> size;
    std::optional<int> rings;
    int k = 1;
    std::optional<double> reject_dist;
    std::string debug_dir;
    std::optional<int> max_passes;
    std::string separator;

    std::string input;
    std::string output;
    std::string store;
};

ThresholdPolicy parse_threshold(const std::string& text) {
    if (text == "otsu") return OtsuThreshold{};
    return FixedThreshold{std::stoi(text)};
}

std::string threshold_check(const std::string& text) {
    if (text == "otsu") return {};
    int value = -1;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value < 0 || value > 255) {
        return "threshold must be 'otsu' or an integer in 0..255";
    }
    return {};
}

void add_binarize_flags(CLI::App* sub, Options& o) {
    sub->add_option("--threshold", o.threshold, "otsu or a fixed level 0..255")
        ->check(CLI::Validator(threshold_check, "otsu|0..255"));
    sub->add_flag("--invert", o.invert, "treat light pixels as ink");
}

void add_layout_flags(CLI::App* sub, Options& o) {
    sub->add_option("--min-line-height", o.min_line_height, "drop text lines shorter than N rows")
        ->check(CLI::PositiveNumber);
    sub->add_option("--gap-factor", o.gap_factor, "word break at gaps >= F x median gap")
        ->check(CLI::PositiveNumber);
    sub->add_option("--debug-dir", o.debug_dir, "directory for intermediate dumps");
}

void add_feature_flags(CLI::App* sub, Options& o) {
    sub->add_option("--size", o.size, "glyph canvas side S")->check(CLI::Range(kMinGlyphSize, 4096));
    sub->add_option("--rings", o.rings, "radial histogram rings R")->check(CLI::Range(1, 4096));
}

BinaryRaster load_binary(const std::string& path, const Options& o) {
    return to_binary(read_pnm_file(path), parse_threshold(o.threshold), o.invert);
}

std::string read_text_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open " + path);
    return std::string((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
}

void write_text_file(const fs::path& path, const std::string& text) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot create " + path.string());
    file << text;
    if (!file) throw IoError("cannot write " + path.string());
}

fs::path prepare_debug_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create debug directory " + dir + ": " + ec.message());
    return fs::path(dir);
}

std::string layout_lines(const std::vector<LineLayout>& layout) {
    std::string text;
    for (std::size_t i = 0; i < layout.size(); ++i) text += layout_json(static_cast<int>(i), layout[i]) + "\n";
    return text;
}

int cmd_binarize(const Options& o, std::ostream&) {
    write_pbm_file(o.output, load_binary(o.input, o));
    return kOk;
}

int cmd_segment(const Options& o, std::ostream& out) {
    const BinaryRaster page = load_binary(o.input, o);
    const auto text = layout_lines(segment_page(page, o.min_line_height, o.gap_factor));
    out << text;
    if (!o.debug_dir.empty()) write_text_file(prepare_debug_dir(o.debug_dir) / "segments.jsonl", text);
    return kOk;
}

int cmd_thin(const Options& o, std::ostream&) {
    ThinningOptions options;
    options.max_passes = o.max_passes;
    write_pbm_file(o.output, hilditch_thin(load_binary(o.input, o), options));
    return kOk;
}

int cmd_features(const Options& o, std::ostream& out) {
    const BinaryRaster raster = load_binary(o.input, o);
    if (raster.width() != raster.height()) {
        throw PreconditionError("glyph must be square, got " + std::to_string(raster.width()) + "x" +
                                std::to_string(raster.height()));
    }
    if (o.size && *o.size != raster.width()) {
        throw PreconditionError("glyph is " + std::to_string(raster.width()) + " pixels wide but --size is " +
                                std::to_string(*o.size));
    }
    const FeatureConfig config{raster.width(), o.rings.value_or(kDefaultRings)};
    const auto values = feature_vector(Glyph{raster, CharBox{0, 0, raster.width(), raster.height(), 0, 0}}, config)
                            .flatten();
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? " " : "") << format_decimal(values[i]);
    out << '\n';
    return kOk;
}

int cmd_train(const Options& o, std::ostream& out) {
    const auto entries = parse_manifest(read_text_file(o.input));
    if (entries.empty()) throw PreconditionError("manifest " + o.input + " lists no glyphs");

    const FeatureConfig config{o.size.value_or(kDefaultGlyphSize), o.rings.value_or(kDefaultRings)};
    const fs::path base = fs::path(o.input).parent_path();
    std::vector<LabeledGlyph> samples;
    samples.reserve(entries.size());
    for (const auto& e : entries) {
        const std::string path = (base / e.path).string();
        const BinaryRaster image = load_binary(path, o);
        if (image.empty_foreground()) throw PreconditionError(path + ": glyph has no foreground");
        samples.push_back({e.label, prepare_glyph(image, config.size), path});
    }
    const TemplateStore store = train(samples, config);
    store.save(o.output);
    out << "trained " << store.records().size() << " records, dim " << store.dimension() << "\n";
    return kOk;
}

int cmd_recognize(const Options& o, std::ostream& out) {
    const TemplateStore store = TemplateStore::load(o.store);
    PipelineConfig config;
    config.threshold = parse_threshold(o.threshold);
    config.invert = o.invert;
    config.min_line_height = o.min_line_height;
    config.gap_factor = o.gap_factor;
    config.glyph_size = o.size.value_or(store.config().size);
    config.rings = o.rings.value_or(store.config().rings);
    config.k = o.k;
    config.reject_distance = o.reject_dist;
    if (!o.debug_dir.empty()) config.debug_dir = o.debug_dir;

    const BinaryRaster page = to_binary(read_pnm_file(o.input), config.threshold, config.invert);
    const PageResult result = recognize_page(page, store, config);

    if (config.debug_dir) {
        const fs::path dir = prepare_debug_dir(*config.debug_dir);
        write_pbm_file((dir / "page.pbm").string(), page);
        std::vector<LineLayout> layout;
        for (const auto& line : result.lines) layout.push_back(line.layout);
        write_text_file(dir / "segments.jsonl", layout_lines(layout));
        for (std::size_t li = 0; li < result.lines.size(); ++li) {
            int word = -1;
            int char_in_word = 0;
            for (const auto& c : result.lines[li].chars) {
                char_in_word = c.box.word_index == word ? char_in_word + 1 : 0;
                word = c.box.word_index;
                write_pbm_file((dir / glyph_dump_name(static_cast<int>(li), word, char_in_word)).string(),
                               c.glyph.raster);
            }
        }
    }
    out << format_transcript(result, o.separator);
    return kOk;
}

}  // namespace

std::vector<ManifestEntry> parse_manifest(const std::string& text) {
    std::vector<ManifestEntry> entries;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        std::string line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos || tab == 0 || tab + 1 == line.size()) {
            throw StoreFormatError(line_no, "manifest lines must be '<relative-path>\\t<label>'");
        }
        entries.push_back({line.substr(0, tab), line.substr(tab + 1)});
    }
    return entries;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"glyphocr: projection-profile segmentation, Hilditch thinning and moment-feature recognition"};
    app.require_subcommand(1);
    Options o;

    auto* binarize_cmd = app.add_subcommand("binarize", "grayscale PNM to PBM");
    binarize_cmd->add_option("input", o.input, "input PNM")->required();
    binarize_cmd->add_option("output", o.output, "output PBM")->required();
    add_binarize_flags(binarize_cmd, o);

    auto* segment_cmd = app.add_subcommand("segment", "print line bands, baselines and character boxes as JSON lines");
    segment_cmd->add_option("page", o.input, "page image")->required();
    add_binarize_flags(segment_cmd, o);
    add_layout_flags(segment_cmd, o);

    auto* thin_cmd = app.add_subcommand("thin", "Hilditch thinning of a bitmap");
    thin_cmd->add_option("input", o.input, "input PNM")->required();
    thin_cmd->add_option("output", o.output, "output PBM")->required();
    thin_cmd->add_option("--max-passes", o.max_passes, "stop after N passes")->check(CLI::PositiveNumber);
    add_binarize_flags(thin_cmd, o);

    auto* features_cmd = app.add_subcommand("features", "print the feature vector of a square glyph image");
    features_cmd->add_option("glyph", o.input, "glyph PNM")->required();
    add_binarize_flags(features_cmd, o);
    add_feature_flags(features_cmd, o);

    auto* train_cmd = app.add_subcommand("train", "build a template store from a manifest");
    train_cmd->add_option("manifest", o.input, "manifest of <path>\\t<label> lines")->required();
    train_cmd->add_option("store", o.output, "output store file")->required();
    add_binarize_flags(train_cmd, o);
    add_feature_flags(train_cmd, o);

    auto* recognize_cmd = app.add_subcommand("recognize", "transcribe a page with a template store");
    recognize_cmd->add_option("page", o.input, "page image")->required();
    recognize_cmd->add_option("store", o.store, "template store")->required();
    add_binarize_flags(recognize_cmd, o);
    add_layout_flags(recognize_cmd, o);
    add_feature_flags(recognize_cmd, o);
    recognize_cmd->add_option("--k", o.k, "neighbors consulted per character")->check(CLI::PositiveNumber);
    recognize_cmd->add_option("--reject-dist", o.reject_dist, "emit '?' for matches farther than F")
        ->check(CLI::NonNegativeNumber);
    recognize_cmd->add_option("--separator", o.separator, "text placed between characters of a word");

    std::vector<const char*> argv{"glyphocr"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*binarize_cmd) return cmd_binarize(o, out);
        if (*segment_cmd) return cmd_segment(o, out);
        if (*thin_cmd) return cmd_thin(o, out);
        if (*features_cmd) return cmd_features(o, out);
        if (*train_cmd) return cmd_train(o, out);
        if (*recognize_cmd) return cmd_recognize(o, out);
    } catch (const FormatError& e) {
        err << "glyphocr: " << e.what() << '\n';
        return kInputError;
    } catch (const IoError& e) {
        err << "glyphocr: " << e.what() << '\n';
        return kInputError;
    } catch (const Error& e) {
        err << "glyphocr: " << e.what() << '\n';
        return kPreconditionError;
    }
    return kUsage;
}

}  // namespace glyphocr::cli
