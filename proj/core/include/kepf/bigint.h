// Copyright 2026 The kepf Authors.
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

#ifndef KEPF_BIGINT_H_
#define KEPF_BIGINT_H_

#include <boost/multiprecision/cpp_int.hpp>

namespace kepf {

// Exact integer used for determinants and permanents.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace kepf

#endif  // KEPF_BIGINT_H_
