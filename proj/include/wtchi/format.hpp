// Copyright 2026 The wtchi Authors.
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

// Locale-independent number formatting shared by reports and CSV output.

#ifndef WTCHI_FORMAT_HPP_
#define WTCHI_FORMAT_HPP_

#include <string>

namespace wtchi {

/// Shortest-general form with `significant` digits, '.' as the decimal
/// separator regardless of the global locale.
std::string format_number(double x, int significant = 12);

}  // namespace wtchi

#endif  // WTCHI_FORMAT_HPP_
