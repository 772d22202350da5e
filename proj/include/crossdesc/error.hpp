// Copyright 2026 The crossdesc Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace crossdesc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: unresolved identifiers, duplicate ids, object-set
// mismatches, bad JSON shape.
class LoadError : public Error {
 public:
  using Error::Error;
};

// An argument has the wrong sort or lives at the wrong object.
class DomainError : public Error {
 public:
  using Error::Error;
};

class CompositionError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A configured size bound would be exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// An operation was invoked on input that does not meet its precondition
// (for example, lifting along a morphism that is not a weak equivalence).
// `report` carries a JSON-serializable explanation when available.
class PreconditionError : public Error {
 public:
  PreconditionError(const std::string& what, std::string report = {})
      : Error(what), report_(std::move(report)) {}
  const std::string& report() const { return report_; }

 private:
  std::string report_;
};

// A constructive search failed or a computed value did not re-verify. Either
// the input violates an assumed invariant or the library is wrong.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace crossdesc
