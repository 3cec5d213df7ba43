// Copyright 2026 The hyparr Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HYPARR_ERRORS_HPP_
#define HYPARR_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace hyparr {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arithmetic misuse: division by zero, mixing values of different fields.
class FieldError : public Error {
 public:
  using Error::Error;
};

// Malformed text or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Shapes or counts that do not fit an operation's precondition.
class DimensionError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

// A geometric object that violates its general-position invariants.
class InvalidObjectError : public Error {
 public:
  using Error::Error;
};

// Raised by exhaustive routines when asked to run beyond their size guard.
class SizeGuardError : public Error {
 public:
  using Error::Error;
};

}  // namespace hyparr

#endif  // HYPARR_ERRORS_HPP_
