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

#include "revbomb/data.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "revbomb/errors.h"

namespace revbomb {

namespace internal {
struct EmbeddedFile {
  const char *name;
  const char *data;
};
extern const EmbeddedFile kEmbeddedFiles[];
extern const std::size_t kEmbeddedFileCount;
}  // namespace internal

std::string_view EmbeddedData(std::string_view name) {
  for (std::size_t i = 0; i < internal::kEmbeddedFileCount; ++i) {
    if (name == internal::kEmbeddedFiles[i].name) {
      return internal::kEmbeddedFiles[i].data;
    }
  }
  throw ConfigError("no embedded data file named '" + std::string(name) +
                    "'");
}

std::vector<std::string> EmbeddedDataNames() {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < internal::kEmbeddedFileCount; ++i) {
    names.emplace_back(internal::kEmbeddedFiles[i].name);
  }
  return names;
}

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw ConfigError("cannot read '" + path + "'");
  return ss.str();
}

void WriteFileAtomic(const std::string &path, std::string_view contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write '" + tmp + "'");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw ConfigError("cannot write '" + tmp + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw ConfigError("cannot replace '" + path + "'");
  }
}

}  // namespace revbomb
