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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace glyphocr {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input bytes could not be decoded (image files, stores, manifests).
class FormatError : public Error {
public:
    using Error::Error;
};

enum class PnmErrorKind {
    malformed_header,
    truncated_data,
    unsupported_magic,
    invalid_sample,
};

const char* to_string(PnmErrorKind kind) noexcept;

/// PNM decoding failure. `offset` is the byte position where decoding stopped.
class PnmParseError : public FormatError {
public:
    PnmParseError(PnmErrorKind kind, std::size_t offset, const std::string& detail);

    PnmErrorKind kind() const noexcept { return kind_; }
    std::size_t offset() const noexcept { return offset_; }

private:
    PnmErrorKind kind_;
    std::size_t offset_;
};

/// Template store or manifest text that does not follow its line format.
class StoreFormatError : public FormatError {
public:
    StoreFormatError(std::size_t line, const std::string& detail);

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An operation was called with arguments outside its contract
/// (empty glyph, band out of range, bad size...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Query features were extracted with a configuration the store was not built with.
class ConfigMismatchError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// File system failure while reading or writing.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace glyphocr
