/*
   Copyright 2026 The sigpairs Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SIGPAIRS_ERROR_HPP
#define SIGPAIRS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sigpairs {

enum class ErrorCode {
    DivisionByZero,
    NotReal,
    PrecisionExceeded,
    IncompatibleOrder,
    NotUnitary,
    CapExceeded,
    NotHermitian,
    EmptySpectrum,
    NonIntegerCoefficient,
    IndexOutOfRange,
    Parse,
    Io,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

// Raised by closure/conjugate; index is the offending generator position.
class NotUnitaryError : public Error {
   public:
    explicit NotUnitaryError(std::size_t index)
        : Error(ErrorCode::NotUnitary, "matrix " + std::to_string(index) + " is not unitary"),
          index_(index) {}
    std::size_t index() const noexcept { return index_; }

   private:
    std::size_t index_;
};

}  // namespace sigpairs

#endif
