// Copyright 2026 The dpminimax Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DPMINIMAX_CSV_H_
#define DPMINIMAX_CSV_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "absl/strings/str_format.h"

namespace dpminimax {

// 17 significant digits round-trip any double.
inline std::string Num(double x) { return absl::StrFormat("%.17g", x); }
inline std::string Num(int64_t x) { return absl::StrFormat("%d", x); }
inline std::string Num(uint64_t x) { return absl::StrFormat("%d", x); }
inline std::string Num(int x) { return absl::StrFormat("%d", x); }

// First line of every CSV file written by this library.
inline void WriteSchemaLine(std::ostream& out, std::string_view name,
                            int version) {
  out << "# schema=" << name << "@" << version << "\n";
}

}  // namespace dpminimax

#endif  // DPMINIMAX_CSV_H_
