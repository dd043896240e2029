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

#include "glyphocr/errors.hpp"

namespace glyphocr {

const char* to_string(PnmErrorKind kind) noexcept {
    switch (kind) {
    case PnmErrorKind::malformed_header: return "malformed header";
    case PnmErrorKind::truncated_data: return "truncated pixel data";
    case PnmErrorKind::unsupported_magic: return "unsupported magic number";
    case PnmErrorKind::invalid_sample: return "invalid sample value";
    }
    return "unknown";
}

PnmParseError::PnmParseError(PnmErrorKind kind, std::size_t offset, const std::string& detail)
    : FormatError(std::string("pnm: ") + to_string(kind) + " at byte " + std::to_string(offset) +
                  (detail.empty() ? "" : ": " + detail)),
      kind_(kind), offset_(offset) {}

StoreFormatError::StoreFormatError(std::size_t line, const std::string& detail)
    : FormatError("line " + std::to_string(line) + ": " + detail), line_(line) {}

}  // namespace glyphocr
