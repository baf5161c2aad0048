// Copyright 2026 The qmax Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QMAX_ERRORS_HPP
#define QMAX_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

// Argument errors are reported as std::invalid_argument throughout.

namespace qmax {

/// A requested register or state exceeds the configured qubit cap.
class CapacityError : public std::runtime_error {
   public:
    CapacityError(const std::string &what, unsigned requested, unsigned cap)
        : std::runtime_error(what), requested_(requested), cap_(cap) {
    }
    unsigned requested() const noexcept {
        return requested_;
    }
    unsigned cap() const noexcept {
        return cap_;
    }

   private:
    unsigned requested_;
    unsigned cap_;
};

/// A numerical invariant of the simulation was violated (norm drift, dirty ancillas).
class IntegrityError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Malformed instance file. line() is 1-based; 0 means the error is not tied to a line.
class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string &what, std::size_t line)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {
    }
    std::size_t line() const noexcept {
        return line_;
    }

   private:
    std::size_t line_;
};

}  // namespace qmax

#endif
