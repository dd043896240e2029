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

// Nearest-neighbor recognition over z-scored feature vectors.
//
// Store file layout (UTF-8, LF):
//   GLYPHSTORE v1
//   dim <D> size <S> rings <R>
//   mean <D decimals>
//   std <D decimals>
//   <label>\t<D decimals>          one line per record

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "glyphocr/features.hpp"

namespace glyphocr {

struct TemplateRecord {
    std::string label;
    std::vector<double> vector;
};

struct Normalization {
    std::vector<double> mean;
    /// Population standard deviation; zero-variance dimensions hold 1.
    std::vector<double> stdev;
};

/// Throws PreconditionError on an empty set or ragged vectors.
Normalization fit_normalization(std::span<const std::vector<double>> vectors);

class TemplateStore {
public:
    /// Validates every invariant of the store; throws PreconditionError.
    TemplateStore(FeatureConfig config, std::vector<TemplateRecord> records, Normalization norm);

    const FeatureConfig& config() const noexcept { return config_; }
    int dimension() const noexcept { return config_.dimension(); }
    const std::vector<TemplateRecord>& records() const noexcept { return records_; }
    const Normalization& normalization() const noexcept { return norm_; }

    /// (v - mean) / std per dimension.
    std::vector<double> standardize(std::span<const double> raw) const;
    const std::vector<double>& standardized(std::size_t record) const { return standardized_[record]; }

    std::string serialize() const;
    /// Throws StoreFormatError naming the offending line.
    static TemplateStore parse(std::string_view text);

    void save(const std::string& path) const;
    static TemplateStore load(const std::string& path);

private:
    FeatureConfig config_;
    std::vector<TemplateRecord> records_;
    Normalization norm_;
    std::vector<std::vector<double>> standardized_;
};

struct LabeledGlyph {
    std::string label;
    Glyph glyph;
    /// Free-form origin (file path, index) quoted in error messages.
    std::string source;
};

/// Labels must be nonempty and free of tab, CR and LF.
void validate_label(std::string_view label);

/// Throws PreconditionError on an empty set, a bad label, or an empty glyph;
/// the message names the sample's source.
TemplateStore train(std::span<const LabeledGlyph> samples, const FeatureConfig& config);

struct Neighbor {
    std::string label;
    double distance = 0;
    std::size_t record = 0;
};

struct Match {
    std::string label;
    /// Distance to the nearest record carrying `label`.
    double distance = 0;
    /// The k nearest records, ascending by distance, record order on ties.
    std::vector<Neighbor> ranked;
};

/// k = 1 returns the nearest record. k > 1 takes a majority vote among the
/// k nearest; vote ties go to the smaller summed distance, then to the
/// lexicographically smaller label.
Match classify_vector(const TemplateStore& store, std::span<const double> features, int k = 1);

/// Throws ConfigMismatchError when the glyph canvas differs from the store's.
Match classify(const TemplateStore& store, const Glyph& glyph, int k = 1);

/// Shortest decimal text that parses back to the identical double.
std::string format_decimal(double value);

}  // namespace glyphocr
