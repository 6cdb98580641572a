/*
   Copyright 2026 The bczlab Authors

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


#pragma once

// Acceptance suite: one verdict per criterion, tolerances fixed here.

#include <functional>
#include <string>
#include <vector>

namespace bcz::verify {

struct Verdict {
  int id = 0;
  std::string title;
  bool pass = false;
  /// Semicolon-separated sub-checks, each "name=value ok" or "name=value FAIL".
  std::string detail;
  double seconds = 0.0;
};

struct Criterion {
  int id;
  std::string title;
  std::function<Verdict()> run;
};

/// Wall-clock budget for the whole suite, charged to the last criterion.
inline constexpr double kSuiteBudgetSeconds = 600.0;

const std::vector<Criterion>& acceptance_criteria();

/// Runs one criterion. Exceptions become failing verdicts.
Verdict run_criterion(int id);

/// Runs every criterion in order and appends the suite runtime check to the
/// last verdict.
std::vector<Verdict> run_suite(const std::function<void(const Verdict&)>& on_verdict = {});

}  // namespace bcz::verify
