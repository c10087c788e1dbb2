// SPDX-License-Identifier: Apache-2.0
//
// macrodiv: macro-diversity and signal-strength variability simulator
// Copyright (C) 2026 The macrodiv authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
#pragma once

#include <stdexcept>
#include <string>

namespace macrodiv {

// Error categories map one-to-one onto the C API status codes and CLI exit codes.
enum class ErrorKind {
    Config,   // invalid input or configuration
    Numeric,  // a computation produced a non-finite or degenerate value
    Io,       // file system or stream failure
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void throw_config(const std::string& message) {
    throw Error(ErrorKind::Config, message);
}

[[noreturn]] inline void throw_numeric(const std::string& message) {
    throw Error(ErrorKind::Numeric, message);
}

[[noreturn]] inline void throw_io(const std::string& message) {
    throw Error(ErrorKind::Io, message);
}

}  // namespace macrodiv
