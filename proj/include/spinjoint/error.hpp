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

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace spinjoint {

enum class Errc {
  BlochOutOfBall,
  NotHermitian,
  NotUnit,
  InvalidState,
  InvalidPovm,
  InvalidSpec,
  NotSaturating,
  BoundViolated,
  DegenerateDirection,
  ZeroAlpha,
  CollinearDirections,
  EtaOutOfRange,
  InvalidArgument,
};

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::BlochOutOfBall: return "BlochOutOfBall";
    case Errc::NotHermitian: return "NotHermitian";
    case Errc::NotUnit: return "NotUnit";
    case Errc::InvalidState: return "InvalidState";
    case Errc::InvalidPovm: return "InvalidPovm";
    case Errc::InvalidSpec: return "InvalidSpec";
    case Errc::NotSaturating: return "NotSaturating";
    case Errc::BoundViolated: return "BoundViolated";
    case Errc::DegenerateDirection: return "DegenerateDirection";
    case Errc::ZeroAlpha: return "ZeroAlpha";
    case Errc::CollinearDirections: return "CollinearDirections";
    case Errc::EtaOutOfRange: return "EtaOutOfRange";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library. `what()` is prefixed with the error
/// name so CLI output can be grepped for it. Some errors carry the offending
/// number (e.g. the most negative eigenvalue for BoundViolated).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail, std::optional<double> value = std::nullopt)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code),
        value_(value) {}

  Errc code() const noexcept { return code_; }
  std::optional<double> value() const noexcept { return value_; }

 private:
  Errc code_;
  std::optional<double> value_;
};

}  // namespace spinjoint
