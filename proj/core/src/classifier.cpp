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

#include "glyphocr/classifier.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <map>
#include <numeric>

#include "glyphocr/errors.hpp"

namespace glyphocr {

namespace {

constexpr std::string_view kMagic = "GLYPHSTORE v1";

std::vector<std::string_view> split_fields(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

double parse_decimal(std::string_view token, std::size_t line_no) {
    double value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(value)) {
        throw StoreFormatError(line_no, "bad decimal '" + std::string(token) + "'");
    }
    return value;
}

int parse_int(std::string_view token, std::size_t line_no) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw StoreFormatError(line_no, "bad integer '" + std::string(token) + "'");
    }
    return value;
}

std::vector<double> parse_decimals(std::string_view text, int expected, std::size_t line_no) {
    const auto tokens = split_fields(text, ' ');
    if (static_cast<int>(tokens.size()) != expected) {
        throw StoreFormatError(line_no, "expected " + std::to_string(expected) + " values, found " +
                                            std::to_string(tokens.size()));
    }
    std::vector<double> values;
    values.reserve(tokens.size());
    for (const auto t : tokens) values.push_back(parse_decimal(t, line_no));
    return values;
}

void append_decimals(std::string& out, const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ' ';
        out += format_decimal(values[i]);
    }
}

}  // namespace

std::string format_decimal(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

Normalization fit_normalization(std::span<const std::vector<double>> vectors) {
    if (vectors.empty()) throw PreconditionError("cannot fit normalization to an empty set");
    const std::size_t dim = vectors.front().size();
    for (const auto& v : vectors) {
        if (v.size() != dim) throw PreconditionError("vectors differ in dimension");
    }
    const double n = static_cast<double>(vectors.size());
    Normalization norm{std::vector<double>(dim, 0.0), std::vector<double>(dim, 0.0)};
    for (std::size_t d = 0; d < dim; ++d) {
        double sum = 0;
        for (const auto& v : vectors) sum += v[d];
        const double mean = sum / n;
        double sq = 0;
        for (const auto& v : vectors) sq += (v[d] - mean) * (v[d] - mean);
        const double sd = std::sqrt(sq / n);
        norm.mean[d] = mean;
        norm.stdev[d] = sd > 0 ? sd : 1.0;
    }
    return norm;
}

void validate_label(std::string_view label) {
    if (label.empty()) throw PreconditionError("labels must be nonempty");
    if (label.find_first_of("\t\r\n") != std::string_view::npos) {
        throw PreconditionError("label '" + std::string(label) + "' contains a tab or line break");
    }
}

TemplateStore::TemplateStore(FeatureConfig config, std::vector<TemplateRecord> records, Normalization norm)
    : config_(config), records_(std::move(records)), norm_(std::move(norm)) {
    if (config_.size < kMinGlyphSize || config_.rings < 1) throw PreconditionError("invalid feature configuration");
    if (records_.empty()) throw PreconditionError("a template store needs at least one record");
    const auto dim = static_cast<std::size_t>(dimension());
    if (norm_.mean.size() != dim || norm_.stdev.size() != dim) {
        throw PreconditionError("normalization statistics do not match the feature dimension");
    }
    if (std::any_of(norm_.stdev.begin(), norm_.stdev.end(), [](double s) { return !(s > 0); })) {
        throw PreconditionError("standard deviations must be positive");
    }
    standardized_.reserve(records_.size());
    for (const auto& r : records_) {
        validate_label(r.label);
        if (r.vector.size() != dim) {
            throw PreconditionError("record '" + r.label + "' has " + std::to_string(r.vector.size()) +
                                    " values, expected " + std::to_string(dim));
        }
        standardized_.push_back(standardize(r.vector));
    }
}

std::vector<double> TemplateStore::standardize(std::span<const double> raw) const {
    std::vector<double> z(raw.size());
    for (std::size_t d = 0; d < raw.size(); ++d) z[d] = (raw[d] - norm_.mean[d]) / norm_.stdev[d];
    return z;
}

std::string TemplateStore::serialize() const {
    std::string out;
    out += kMagic;
    out += '\n';
    out += "dim " + std::to_string(dimension()) + " size " + std::to_string(config_.size) + " rings " +
           std::to_string(config_.rings) + "\n";
    out += "mean ";
    append_decimals(out, norm_.mean);
    out += "\nstd ";
    append_decimals(out, norm_.stdev);
    out += '\n';
    for (const auto& r : records_) {
        out += r.label;
        out += '\t';
        append_decimals(out, r.vector);
        out += '\n';
    }
    return out;
}

TemplateStore TemplateStore::parse(std::string_view text) {
    auto lines = split_fields(text, '\n');
    if (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.empty() || lines[0] != kMagic) {
        if (!lines.empty() && lines[0].starts_with("GLYPHSTORE ")) {
            throw StoreFormatError(1, "unsupported store version '" + std::string(lines[0].substr(11)) + "'");
        }
        throw StoreFormatError(1, "missing GLYPHSTORE v1 header");
    }
    if (lines.size() < 5) throw StoreFormatError(lines.size() + 1, "store is truncated");

    const auto header = split_fields(lines[1], ' ');
    if (header.size() != 6 || header[0] != "dim" || header[2] != "size" || header[4] != "rings") {
        throw StoreFormatError(2, "expected 'dim <D> size <S> rings <R>'");
    }
    const int dim = parse_int(header[1], 2);
    const FeatureConfig config{parse_int(header[3], 2), parse_int(header[5], 2)};
    if (config.size < kMinGlyphSize || config.rings < 1 || dim != config.dimension()) {
        throw StoreFormatError(2, "inconsistent dimension, size and rings");
    }

    auto stats_line = [&](std::size_t index, std::string_view key) {
        const auto line = lines[index];
        if (!line.starts_with(key) || line.size() <= key.size() || line[key.size()] != ' ') {
            throw StoreFormatError(index + 1, "expected '" + std::string(key) + "' line");
        }
        return parse_decimals(line.substr(key.size() + 1), dim, index + 1);
    };
    Normalization norm{stats_line(2, "mean"), stats_line(3, "std")};

    std::vector<TemplateRecord> records;
    for (std::size_t i = 4; i < lines.size(); ++i) {
        const auto tab = lines[i].find('\t');
        if (tab == std::string_view::npos || tab == 0) throw StoreFormatError(i + 1, "expected '<label>\\t<values>'");
        records.push_back({std::string(lines[i].substr(0, tab)), parse_decimals(lines[i].substr(tab + 1), dim, i + 1)});
    }
    try {
        return TemplateStore(config, std::move(records), std::move(norm));
    } catch (const PreconditionError& e) {
        throw StoreFormatError(lines.size(), e.what());
    }
}

void TemplateStore::save(const std::string& path) const {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot create " + path);
    file << serialize();
    if (!file) throw IoError("cannot write " + path);
}

TemplateStore TemplateStore::load(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open " + path);
    const std::string text((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
    try {
        return parse(text);
    } catch (const StoreFormatError& e) {
        throw StoreFormatError(e.line(), path + ": " + e.what());
    }
}

TemplateStore train(std::span<const LabeledGlyph> samples, const FeatureConfig& config) {
    if (samples.empty()) throw PreconditionError("training set is empty");
    std::vector<TemplateRecord> records;
    records.reserve(samples.size());
    for (const auto& s : samples) {
        try {
            validate_label(s.label);
            if (s.glyph.raster.empty_foreground()) throw PreconditionError("glyph has no foreground");
            records.push_back({s.label, feature_vector(s.glyph, config).flatten()});
        } catch (const PreconditionError& e) {
            throw PreconditionError("training sample " + (s.source.empty() ? "'" + s.label + "'" : s.source) + ": " +
                                    e.what());
        }
    }
    std::vector<std::vector<double>> vectors;
    vectors.reserve(records.size());
    for (const auto& r : records) vectors.push_back(r.vector);
    auto norm = fit_normalization(vectors);
    return TemplateStore(config, std::move(records), std::move(norm));
}

Match classify_vector(const TemplateStore& store, std::span<const double> features, int k) {
    if (k < 1) throw PreconditionError("k must be at least 1");
    if (static_cast<int>(features.size()) != store.dimension()) {
        throw ConfigMismatchError("query has " + std::to_string(features.size()) + " features, store expects " +
                                  std::to_string(store.dimension()));
    }
    const auto query = store.standardize(features);
    const std::size_t n = store.records().size();

    std::vector<double> distances(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& ref = store.standardized(i);
        double sq = 0;
        for (std::size_t d = 0; d < query.size(); ++d) sq += (query[d] - ref[d]) * (query[d] - ref[d]);
        distances[i] = std::sqrt(sq);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    const std::size_t take = std::min<std::size_t>(static_cast<std::size_t>(k), n);
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(take), order.end(),
                      [&](std::size_t a, std::size_t b) {
                          return distances[a] != distances[b] ? distances[a] < distances[b] : a < b;
                      });

    Match match;
    for (std::size_t i = 0; i < take; ++i) {
        const auto r = order[i];
        match.ranked.push_back({store.records()[r].label, distances[r], r});
    }

    struct Vote {
        int count = 0;
        double summed = 0;
        double nearest = 0;
    };
    std::map<std::string, Vote> votes;
    for (const auto& nb : match.ranked) {
        auto& v = votes[nb.label];
        if (v.count == 0) v.nearest = nb.distance;
        ++v.count;
        v.summed += nb.distance;
    }
    // std::map iterates labels in lexicographic order, so strict comparisons
    // leave the smallest label in front on a full tie.
    auto best = votes.begin();
    for (auto it = votes.begin(); it != votes.end(); ++it) {
        if (it->second.count > best->second.count ||
            (it->second.count == best->second.count && it->second.summed < best->second.summed)) {
            best = it;
        }
    }
    match.label = best->first;
    match.distance = best->second.nearest;
    return match;
}

Match classify(const TemplateStore& store, const Glyph& glyph, int k) {
    if (glyph.size() != store.config().size || glyph.raster.height() != store.config().size) {
        throw ConfigMismatchError("glyph canvas " + std::to_string(glyph.raster.width()) + "x" +
                                  std::to_string(glyph.raster.height()) + " does not match store size " +
                                  std::to_string(store.config().size));
    }
    return classify_vector(store, feature_vector(glyph, store.config()).flatten(), k);
}

}  // namespace glyphocr
