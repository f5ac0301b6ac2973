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

#ifndef REVBOMB_DATA_H_
#define REVBOMB_DATA_H_

#include <string>
#include <string_view>
#include <vector>

namespace revbomb {

// Files under data/ are compiled into the library. Names are paths relative
// to data/, e.g. "vocab/politics_P.txt". Throws ConfigError if unknown.
std::string_view EmbeddedData(std::string_view name);

std::vector<std::string> EmbeddedDataNames();

// Reads a whole file; throws ConfigError naming the path on failure.
std::string ReadFile(const std::string &path);

// Writes via a temporary sibling and rename.
void WriteFileAtomic(const std::string &path, std::string_view contents);

}  // namespace revbomb

#endif  // REVBOMB_DATA_H_
