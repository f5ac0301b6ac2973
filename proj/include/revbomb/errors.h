// Copyright 2026 The Revbomb Authors.
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

#ifndef REVBOMB_ERRORS_H_
#define REVBOMB_ERRORS_H_

#include <stdexcept>
#include <string>

namespace revbomb {

// Bad configuration: missing files, out-of-range parameters, unknown keys.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input data: malformed records, unknown ids, inconsistent corpora.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Optimistic-concurrency failure in the curation service.
class VersionConflict : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace revbomb

#endif  // REVBOMB_ERRORS_H_
