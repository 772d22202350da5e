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

#include <cstddef>
#include <string>
#include <vector>

namespace crossdesc {

struct Violation {
  std::string clause;  // stable tag, e.g. "peiffer" or "g1.associativity"
  std::string detail;
  std::vector<std::string> witnesses;
};

/// Collected axiom failures. Empty means the checked structure is valid.
class ValidationReport {
 public:
  static constexpr std::size_t kMaxViolations = 256;

  bool ok() const { return violations_.empty() && truncated_ == 0; }
  const std::vector<Violation>& violations() const { return violations_; }
  std::size_t truncated() const { return truncated_; }

  // "exhaustive", "structural" or "sampled"; the weakest coverage of any
  // merged sub-report wins.
  const std::string& coverage() const { return coverage_; }
  void set_coverage(std::string c);

  void add(std::string clause, std::string detail,
           std::vector<std::string> witnesses = {});
  void merge(const std::string& prefix, const ValidationReport& other);

  bool has_clause(const std::string& clause) const;

 private:
  std::vector<Violation> violations_;
  std::size_t truncated_ = 0;
  std::string coverage_ = "exhaustive";
};

}  // namespace crossdesc
