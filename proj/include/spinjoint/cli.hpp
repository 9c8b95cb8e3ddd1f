// Copyright 2026 The spinjoint Authors
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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace spinjoint::cli {

/// Parsed command line. Vectors, sharpness factors and the state stay as
/// text until a subcommand needs them, so each subcommand decides what is
/// required.
struct RunConfig {
  std::string subcommand;
  std::string a = "0,0,1";
  std::string a_prime;
  std::optional<double> theta_deg;
  std::string alpha;
  std::string alpha_prime;
  std::string b;
  std::string b_prime;
  std::optional<std::uint64_t> n;
  std::uint64_t seed = 1;
  std::string out;
  std::string format;
  std::size_t points = 181;
  std::size_t samples = 1000;
  std::string state = "0,0,0";
  std::string povm = "joint";
  double eta = 2.0 / 3.0;
  unsigned workers = 1;
};

/// Exit codes: 0 success, 1 domain violation, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spinjoint::cli
