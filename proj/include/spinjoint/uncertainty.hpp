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

// Uncertainty relations for jointly and separately measured spin components,
// each evaluated exactly from the state and measurement parameters.
// Every report satisfies slack = lhs - rhs ≥ 0 on its valid domain.

#include <optional>
#include <string_view>

#include "spinjoint/joint.hpp"

namespace spinjoint {

enum class Relation {
  ProductForm,
  Robertson,
  TotalJoint,
  ArthursGoodman,
  Schroedinger,
  CirelsonProduct,
};

std::string_view to_string(Relation r);

struct UncertaintyReport {
  Relation relation = Relation::ProductForm;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  /// Unit normal (a × a')/|a × a'| for relations that use it.
  std::optional<Vector3> a_perp;
  /// A competing right-hand side at the same inputs, for comparison:
  /// arthurs_goodman stores the spin-specific total_joint bound, schroedinger
  /// stores the robertson bound.
  std::optional<double> reference_rhs;
};

/// (a × a')/|a × a'|; throws CollinearDirections when a ∥ a'.
UnitVector3 perpendicular_direction(const UnitVector3& a, const UnitVector3& a_prime);

/// (1-α²)(1-α'²)/(α²α'²) ≥ sin²θ. Throws ZeroAlpha.
UncertaintyReport product_form(const JointSpec& spec);

/// (1-⟨A⟩²)(1-⟨A'⟩²) ≥ sin²θ⟨a⊥·σ⟩².
UncertaintyReport robertson(const QubitState& state, const UnitVector3& a, const UnitVector3& a_prime);

/// Δ²A_J Δ²A'_J/(α²α'²) ≥ sin²θ(1 + |⟨a⊥·σ⟩|)². Requires an admissible spec.
UncertaintyReport total_joint(const JointSpec& spec, const QubitState& state);

/// Δ²A_J Δ²A'_J/(α²α'²) ≥ |⟨[A,A']⟩|² = 4sin²θ⟨a⊥·σ⟩².
UncertaintyReport arthurs_goodman(const JointSpec& spec, const QubitState& state);

/// Bare variance product against the commutator plus covariance bound,
/// computed by matrix algebra rather than from Bloch components.
UncertaintyReport schroedinger(const QubitState& state, const UnitVector3& a,
                               const UnitVector3& a_prime);

/// (2-α²)(2-α'²)/(α²α'²) ≥ sin²θ. Throws ZeroAlpha.
UncertaintyReport cirelson_product(const JointSpec& spec);

}  // namespace spinjoint
