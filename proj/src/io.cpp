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

#include "spinjoint/io.hpp"

#include <array>
#include <charconv>
#include <system_error>

namespace spinjoint::io {

std::string format_double(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::general, 17);
  if (res.ec != std::errc()) throw Error(Errc::InvalidArgument, "failed to format number");
  return std::string(buf.data(), res.ptr);
}

json vector_to_json(const Vector3& v) { return json::array({v.x(), v.y(), v.z()}); }

Vector3 vector_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) {
    throw Error(Errc::InvalidArgument, "expected a 3-element array");
  }
  return Vector3(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
}

json to_json(const Povm& povm) {
  json effects = json::array();
  for (const auto& e : povm) {
    json entries = json::array();
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) entries.push_back({e.op(r, c).real(), e.op(r, c).imag()});
    effects.push_back({{"label", e.label}, {"op", std::move(entries)}});
  }
  return {{"effects", std::move(effects)}};
}

Povm povm_from_json(const json& j) {
  std::vector<Effect> effects;
  for (const auto& e : j.at("effects")) {
    const auto& entries = e.at("op");
    if (!entries.is_array() || entries.size() != 4) {
      throw Error(Errc::InvalidArgument, "effect needs four [re, im] entries");
    }
    ComplexMatrix2 op;
    for (int k = 0; k < 4; ++k) {
      const auto& z = entries[k];
      if (!z.is_array() || z.size() != 2) throw Error(Errc::InvalidArgument, "entry is not [re, im]");
      op(k / 2, k % 2) = {z[0].get<double>(), z[1].get<double>()};
    }
    effects.push_back({e.at("label").get<std::string>(), op});
  }
  return Povm(std::move(effects));
}

json to_json(const JointSpec& spec) {
  return {{"a", vector_to_json(spec.a())},
          {"a_prime", vector_to_json(spec.a_prime())},
          {"alpha", spec.alpha()},
          {"alpha_prime", spec.alpha_prime()}};
}

JointSpec joint_spec_from_json(const json& j) {
  return JointSpec(UnitVector3(vector_from_json(j.at("a"))),
                   UnitVector3(vector_from_json(j.at("a_prime"))), j.at("alpha").get<double>(),
                   j.at("alpha_prime").get<double>());
}

json to_json(const SwitchRealization& sw) {
  return {{"p", sw.p}, {"c", vector_to_json(sw.c)}, {"c_prime", vector_to_json(sw.c_prime)}};
}

SwitchRealization switch_from_json(const json& j) {
  return {j.at("p").get<double>(), UnitVector3(vector_from_json(j.at("c"))),
          UnitVector3(vector_from_json(j.at("c_prime")))};
}

json to_json(const ValidationReport& report) {
  json effects = json::array();
  for (const auto& e : report.effects) {
    effects.push_back({{"label", e.label},
                       {"min_eigenvalue", e.min_eigenvalue},
                       {"max_eigenvalue", e.max_eigenvalue},
                       {"hermiticity_defect", e.hermiticity_defect}});
  }
  return {{"passed", report.passed},
          {"min_eigenvalue", report.min_eigenvalue},
          {"completeness_defect", report.completeness_defect},
          {"effects", std::move(effects)},
          {"failures", report.failures}};
}

json to_json(const Settings& s) {
  return {{"b", vector_to_json(s.b)}, {"b_prime", vector_to_json(s.b_prime)}};
}

json to_json(const CorrelationSet& c) {
  return {{"e_ab", c.e_ab}, {"e_apb", c.e_apb}, {"e_abp", c.e_abp}, {"e_apbp", c.e_apbp}};
}

json to_json(const NoSignallingProbe& p) {
  return {{"p_equal_b", p.p_equal_b},
          {"p_equal_b_prime", p.p_equal_b_prime},
          {"difference", p.difference()}};
}

json to_json(const SampleStats& s) {
  json counts = json::array();
  for (const auto& c : s.counts) counts.push_back({{"label", c.label}, {"count", c.count}});
  return {{"n", s.n},
          {"counts", std::move(counts)},
          {"mean", s.mean},
          {"variance", s.variance},
          {"std_error", s.std_error}};
}

json to_json(const SignallingResult& r) {
  return {{"p_equal_b", r.under_b.mean},
          {"p_equal_b_prime", r.under_b_prime.mean},
          {"under_b", to_json(r.under_b)},
          {"under_b_prime", to_json(r.under_b_prime)},
          {"z", r.z}};
}

json to_json(const UncertaintyReport& r) {
  json j = {{"relation_id", std::string(to_string(r.relation))},
            {"lhs", r.lhs},
            {"rhs", r.rhs},
            {"slack", r.slack}};
  j["a_perp"] = r.a_perp ? vector_to_json(*r.a_perp) : json(nullptr);
  if (r.reference_rhs) j["reference_rhs"] = *r.reference_rhs;
  return j;
}

json to_json(const CloningScenario& s) {
  return {{"eta", s.eta},
          {"theta", s.theta},
          {"alpha_clone", s.alpha_clone},
          {"alpha_optimal", s.alpha_optimal},
          {"gap", s.gap}};
}

json stream_metadata(const SeededStream& stream, std::uint64_t n) {
  return {{"seed", stream.seed},
          {"stream_id", stream.stream_id},
          {"n", n},
          {"generator", std::string(kGeneratorName)}};
}

json to_json(const Bb84EveReport& r) {
  return {{"theta", r.theta},
          {"alpha", r.alpha},
          {"guess_success_prob_after_announcement", r.guess_success_prob_after_announcement},
          {"empirical_success", r.empirical_success},
          {"std_error", r.std_error},
          {"trials", r.trials},
          {"values", "derived"},
          {"metadata", stream_metadata(r.stream, r.trials)}};
}

std::string tally_csv(const SampleStats& stats, const json& metadata) {
  std::string out = "# " + metadata.dump() + "\n";
  out += "label,count,frequency\n";
  for (const auto& c : stats.counts) {
    out += c.label + "," + std::to_string(c.count) + "," + format_double(stats.frequency(c.label)) + "\n";
  }
  return out;
}

std::string uncertainty_csv_header() { return "relation_id,lhs,rhs,slack"; }

std::string uncertainty_csv_row(const UncertaintyReport& r) {
  return std::string(to_string(r.relation)) + "," + format_double(r.lhs) + "," +
         format_double(r.rhs) + "," + format_double(r.slack);
}

}  // namespace spinjoint::io
