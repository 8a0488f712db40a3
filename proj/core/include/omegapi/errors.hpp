/*
   Copyright 2026 The omegapi Authors

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

#ifndef OMEGAPI_ERRORS_HPP
#define OMEGAPI_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace omegapi {

class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// Shapes of matrices or vectors do not fit together.
class DimensionError : public Error {
   public:
    using Error::Error;
};

// dom/cod of terms or polynomials do not fit together.
class ArityError : public Error {
   public:
    using Error::Error;
};

// Unknown generator, reserved name, duplicate name, or a structure map missing.
class SignatureError : public Error {
   public:
    using Error::Error;
};

class ParseError : public Error {
   public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

   private:
    std::size_t position_;
};

// A computation would exceed a configured memory cap.
class ResourceLimitError : public Error {
   public:
    using Error::Error;
};

}  // namespace omegapi

#endif
