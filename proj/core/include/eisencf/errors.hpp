// Copyright 2026 The eisencf Authors
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

#ifndef EISENCF_ERRORS_HPP_
#define EISENCF_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace eisencf {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept = 0;
};

// A certified computation could not separate its candidates at the working
// precision. Retrying with more bits may succeed.
class PrecisionInsufficient : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "PrecisionInsufficient"; }
};

class ZeroDenominator : public Error {
 public:
  ZeroDenominator() : Error("denominator is zero") {}
  const char* kind() const noexcept override { return "ZeroDenominator"; }
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "IndexOutOfRange"; }
};

class EnumerationTooLarge : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "EnumerationTooLarge"; }
};

class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "DomainError"; }
};

class ParseError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "ParseError"; }
};

}  // namespace eisencf

#endif  // EISENCF_ERRORS_HPP_
