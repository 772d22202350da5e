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

#include "crossdesc/report.hpp"

#include <algorithm>

namespace crossdesc {

namespace {

int coverage_rank(const std::string& c) {
  if (c == "exhaustive") return 0;
  if (c == "structural") return 1;
  return 2;
}

}  // namespace

void ValidationReport::set_coverage(std::string c) {
  if (coverage_rank(c) > coverage_rank(coverage_)) coverage_ = std::move(c);
}

void ValidationReport::add(std::string clause, std::string detail,
                           std::vector<std::string> witnesses) {
  if (violations_.size() >= kMaxViolations) {
    ++truncated_;
    return;
  }
  violations_.push_back(
      {std::move(clause), std::move(detail), std::move(witnesses)});
}

void ValidationReport::merge(const std::string& prefix,
                             const ValidationReport& other) {
  for (const auto& v : other.violations_) {
    add(prefix.empty() ? v.clause : prefix + "." + v.clause, v.detail,
        v.witnesses);
  }
  truncated_ += other.truncated_;
  set_coverage(other.coverage_);
}

bool ValidationReport::has_clause(const std::string& clause) const {
  return std::any_of(violations_.begin(), violations_.end(),
                     [&](const Violation& v) {
                       return v.clause == clause ||
                              (v.clause.size() > clause.size() &&
                               v.clause.ends_with("." + clause));
                     });
}

}  // namespace crossdesc
