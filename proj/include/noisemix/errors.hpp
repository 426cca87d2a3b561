// Copyright 2026 The Noisemix Authors
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

#ifndef NOISEMIX_ERRORS_HPP_
#define NOISEMIX_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <utility>

namespace noisemix {

// All recoverable failures are thrown as Error.  The category is a stable
// kebab-case token ("degenerate-signal", "unsupported-encoding", ...) that
// the CLI prints as `error: <category>: <detail>` and tests match against.
class Error : public std::runtime_error {
 public:
  Error(std::string category, const std::string& detail)
      : std::runtime_error(category + ": " + detail),
        category_(std::move(category)) {}

  const std::string& category() const { return category_; }

 private:
  std::string category_;
};

[[noreturn]] inline void fail(std::string category, const std::string& detail) {
  throw Error(std::move(category), detail);
}

}  // namespace noisemix

#endif  // NOISEMIX_ERRORS_HPP_
