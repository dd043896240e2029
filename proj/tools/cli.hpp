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

#include <ostream>
#include <string>
#include <vector>

namespace glyphocr::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kInputError = 2,
    kPreconditionError = 3,
};

/// Runs one glyphocr invocation. `args` excludes the program name. Results go
/// to `out`, one-line diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct ManifestEntry {
    std::string path;
    std::string label;
};

/// `<relative-path>\t<label>` per line; blank lines are skipped. Throws
/// StoreFormatError on a line without a tab or with an empty field.
std::vector<ManifestEntry> parse_manifest(const std::string& text);

}  // namespace glyphocr::cli
