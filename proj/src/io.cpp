// Copyright 2026 The auxsim Authors.
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

#include "auxsim/io.hpp"

#include <bit>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "auxsim/error.hpp"
#include "json.hpp"

namespace auxsim::io {

using Json = nlohmann::ordered_json;

namespace {

Json ParseDocument(std::string_view text, const char* what) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    Fail(ErrorCode::kParseError, std::string(what) + ": " + e.what());
  }
}

const Json& Field(const Json& obj, const char* key, const char* what) {
  if (!obj.is_object() || !obj.contains(key)) {
    Fail(ErrorCode::kParseError,
         std::string(what) + ": missing field \"" + key + "\"");
  }
  return obj.at(key);
}

template <typename T>
T Get(const Json& value, const char* key, const char* what) {
  try {
    return value.get<T>();
  } catch (const Json::exception& e) {
    Fail(ErrorCode::kParseError,
         std::string(what) + ": field \"" + key + "\" has the wrong type");
  }
}

// Rows of a [x][z] table, flattened. Checks a rectangular shape.
std::vector<double> FlattenTable(const Json& rows, const char* key,
                                 const char* what, std::size_t* num_rows,
                                 std::size_t* width) {
  if (!rows.is_array() || rows.empty()) {
    Fail(ErrorCode::kParseError,
         std::string(what) + ": \"" + key + "\" must be a non-empty array");
  }
  *num_rows = rows.size();
  *width = 0;
  std::vector<double> flat;
  for (std::size_t x = 0; x < rows.size(); ++x) {
    const auto& row = rows[x];
    if (!row.is_array()) {
      Fail(ErrorCode::kParseError,
           std::string(what) + ": \"" + key + "\" rows must be arrays");
    }
    if (x == 0) *width = row.size();
    if (row.size() != *width || *width == 0) {
      Fail(ErrorCode::kParseError,
           std::string(what) + ": \"" + key + "\" rows differ in length");
    }
    for (const auto& v : row) {
      if (!v.is_number()) {
        Fail(ErrorCode::kParseError,
             std::string(what) + ": \"" + key + "\" entries must be numbers");
      }
      flat.push_back(v.get<double>());
    }
  }
  return flat;
}

int AuxBitsForWidth(std::size_t width, const char* what) {
  if (!std::has_single_bit(width)) {
    Fail(ErrorCode::kParseError,
         std::string(what) + ": row length " + std::to_string(width) +
             " is not a power of two");
  }
  return std::countr_zero(width);
}

Json TableRows(const Shape& shape, std::span<const double> data) {
  Json rows = Json::array();
  const std::size_t width = shape.aux_size();
  for (std::size_t x = 0; x < shape.domain_size; ++x) {
    Json row = Json::array();
    for (std::size_t z = 0; z < width; ++z) row.push_back(data[x * width + z]);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::uint32_t> ReadMap(const Json& obj, const char* key,
                                   const char* what) {
  const Json& arr = Field(obj, key, what);
  if (!arr.is_array()) {
    Fail(ErrorCode::kParseError,
         std::string(what) + ": \"" + key + "\" must be an array");
  }
  std::vector<std::uint32_t> out;
  out.reserve(arr.size());
  for (const auto& v : arr) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
      Fail(ErrorCode::kParseError,
           std::string(what) + ": \"" + key + "\" entries must be z values");
    }
    out.push_back(v.get<std::uint32_t>());
  }
  return out;
}

Simulator ParseTwoPoint(const Json& obj, const Shape& shape) {
  const char* what = "two_point component";
  TwoPointMix mix;
  mix.h_minus = ReadMap(obj, "h_minus", what);
  mix.h_plus = ReadMap(obj, "h_plus", what);
  mix.gamma = Get<double>(Field(obj, "gamma", what), "gamma", what);
  return Simulator::TwoPoint(shape, std::move(mix));
}

Simulator ParseSimulatorNode(const Json& obj, const Shape& shape);

std::vector<Simulator> ParseComponents(const Json& obj, const Shape& shape,
                                       std::vector<std::uint64_t>* counts) {
  const char* what = "simulator";
  const Json& comps = Field(obj, "components", what);
  if (!comps.is_array() || comps.empty()) {
    Fail(ErrorCode::kParseError,
         "simulator: \"components\" must be a non-empty array");
  }
  std::vector<Simulator> out;
  for (const auto& c : comps) {
    out.push_back(ParseSimulatorNode(c, shape));
    if (counts) {
      counts->push_back(c.contains("count")
                            ? Get<std::uint64_t>(c.at("count"), "count", what)
                            : 1);
    }
  }
  return out;
}

Simulator ParseSimulatorNode(const Json& obj, const Shape& shape) {
  const char* what = "simulator";
  const std::string kind = Get<std::string>(Field(obj, "kind", what), "kind", what);
  if (kind == "two_point") return ParseTwoPoint(obj, shape);
  if (kind == "true_channel") {
    std::size_t rows = 0;
    std::size_t width = 0;
    auto flat = FlattenTable(Field(obj, "channel", what), "channel", what,
                             &rows, &width);
    return Simulator::FromChannel(
        Channel::Create(Shape{rows, AuxBitsForWidth(width, what)}, std::move(flat)));
  }
  if (kind == "sample_list") {
    std::vector<std::uint64_t> counts;
    auto comps = ParseComponents(obj, shape, &counts);
    return Simulator::SampleList(std::move(comps), std::move(counts));
  }
  if (kind == "weighted_mixture") {
    auto comps = ParseComponents(obj, shape, nullptr);
    auto weights =
        Get<std::vector<double>>(Field(obj, "weights", what), "weights", what);
    return Simulator::WeightedMixture(std::move(comps), std::move(weights));
  }
  Fail(ErrorCode::kParseError, "simulator: unknown kind \"" + kind + "\"");
}

Json SimulatorNode(const Simulator& sim, bool top_level) {
  Json j;
  j["kind"] = SimulatorKindName(sim.kind());
  if (top_level) {
    j["domain_size"] = sim.shape().domain_size;
    j["aux_bits"] = sim.shape().aux_bits;
  }
  switch (sim.kind()) {
    case SimulatorKind::kTrueChannel:
      j["channel"] = TableRows(sim.shape(), sim.channel()->data());
      return j;
    case SimulatorKind::kTwoPointMix:
      j["h_minus"] = sim.two_point()->h_minus;
      j["h_plus"] = sim.two_point()->h_plus;
      j["gamma"] = sim.two_point()->gamma;
      break;
    case SimulatorKind::kWeightedMixture:
      j["components"] = Json::array();
      for (const auto& c : sim.components()) {
        j["components"].push_back(SimulatorNode(c, false));
      }
      j["weights"] = std::vector<double>(sim.weights().begin(), sim.weights().end());
      break;
    case SimulatorKind::kSampleList:
      j["components"] = Json::array();
      for (std::size_t i = 0; i < sim.components().size(); ++i) {
        Json c = SimulatorNode(sim.components()[i], false);
        c["count"] = sim.counts()[i];
        j["components"].push_back(std::move(c));
      }
      break;
  }
  if (top_level) j["channel"] = TableRows(sim.shape(), sim.Lower().data());
  return j;
}

}  // namespace

JointDistribution ParseInstance(std::string_view text) {
  const char* what = "instance";
  const Json doc = ParseDocument(text, what);
  const auto n = Get<std::size_t>(Field(doc, "domain_size", what), "domain_size", what);
  const auto m = Get<int>(Field(doc, "aux_bits", what), "aux_bits", what);
  const Shape shape{n, m};
  ValidateShape(shape);
  std::size_t rows = 0;
  std::size_t width = 0;
  auto prob = FlattenTable(Field(doc, "prob", what), "prob", what, &rows, &width);
  if (rows != n || width != shape.aux_size()) {
    Fail(ErrorCode::kDimensionMismatch,
         "instance: prob is " + std::to_string(rows) + " x " +
             std::to_string(width) + ", expected " + std::to_string(n) +
             " x " + std::to_string(shape.aux_size()));
  }
  for (double v : prob) {
    if (!(v >= 0.0)) {
      Fail(ErrorCode::kInvalidArgument, "instance: negative probability");
    }
  }
  const double mass = StableSum(prob);
  if (std::abs(mass - 1.0) > kFileMassTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "instance: total mass " << mass << " differs from 1 by more than "
        << kFileMassTolerance;
    Fail(ErrorCode::kInvalidArgument, msg.str());
  }
  if (mass != 1.0) {
    for (double& v : prob) v /= mass;
  }
  return JointDistribution::Create(shape, std::move(prob));
}

std::string InstanceToJson(const JointDistribution& dist) {
  Json j;
  j["domain_size"] = dist.domain_size();
  j["aux_bits"] = dist.aux_bits();
  j["prob"] = TableRows(dist.shape(), dist.data());
  return j.dump() + "\n";
}

DistinguisherClass ParseClass(std::string_view text) {
  const char* what = "class";
  const Json doc = ParseDocument(text, what);
  const Json& members = Field(doc, "members", what);
  if (!members.is_array() || members.empty()) {
    Fail(ErrorCode::kParseError, "class: \"members\" must be a non-empty array");
  }
  std::vector<Distinguisher> out;
  for (const auto& member : members) {
    const std::string kind =
        Get<std::string>(Field(member, "kind", what), "kind", what);
    std::size_t rows = 0;
    std::size_t width = 0;
    auto table = FlattenTable(Field(member, "table", what), "table", what,
                              &rows, &width);
    const Shape shape{rows, AuxBitsForWidth(width, what)};
    const std::uint64_t cost =
        member.contains("cost_s")
            ? Get<std::uint64_t>(member.at("cost_s"), "cost_s", what)
            : 1;
    if (kind == "boolean_table") {
      out.push_back(Distinguisher::BooleanTable(shape, std::move(table), cost));
    } else if (kind == "real_table") {
      out.push_back(Distinguisher::RealTable(shape, std::move(table), cost));
    } else {
      Fail(ErrorCode::kParseError, "class: unknown member kind \"" + kind + "\"");
    }
  }
  const bool close =
      doc.contains("close_under_complement")
          ? Get<bool>(doc.at("close_under_complement"), "close_under_complement", what)
          : false;
  return DistinguisherClass::Create(std::move(out), close);
}

std::string ClassToJson(const DistinguisherClass& cls) {
  Json j;
  j["members"] = Json::array();
  for (const auto& d : cls.members()) {
    j["members"].push_back(
        {{"kind", d.IsBoolean() ? "boolean_table" : "real_table"},
         {"table", TableRows(d.shape(), d.Table())},
         {"cost_s", d.cost_s()}});
  }
  j["close_under_complement"] = cls.closed_under_complement();
  return j.dump() + "\n";
}

Simulator ParseSimulator(std::string_view text) {
  const char* what = "simulator";
  const Json doc = ParseDocument(text, what);
  std::optional<Channel> stored;
  if (doc.is_object() && doc.contains("channel")) {
    std::size_t rows = 0;
    std::size_t width = 0;
    auto flat = FlattenTable(doc.at("channel"), "channel", what, &rows, &width);
    stored = Channel::Create(Shape{rows, AuxBitsForWidth(width, what)},
                             std::move(flat));
  }
  Shape shape;
  if (doc.is_object() && doc.contains("domain_size") && doc.contains("aux_bits")) {
    shape.domain_size = Get<std::size_t>(doc.at("domain_size"), "domain_size", what);
    shape.aux_bits = Get<int>(doc.at("aux_bits"), "aux_bits", what);
  } else if (stored) {
    shape = stored->shape();
  } else {
    Fail(ErrorCode::kParseError,
         "simulator: need domain_size/aux_bits or a channel block");
  }
  ValidateShape(shape);
  Simulator sim = ParseSimulatorNode(doc, shape);
  if (sim.shape() != shape) {
    Fail(ErrorCode::kDimensionMismatch, "simulator: declared shape mismatch");
  }
  if (stored && sim.kind() != SimulatorKind::kTrueChannel) {
    if (stored->shape() != shape) {
      Fail(ErrorCode::kDimensionMismatch, "simulator: channel block shape mismatch");
    }
    const Channel lowered = sim.Lower();
    for (std::size_t c = 0; c < shape.cells(); ++c) {
      if (std::abs(lowered.data()[c] - stored->data()[c]) > 1e-9) {
        Fail(ErrorCode::kInvalidArgument,
             "simulator: channel block disagrees with its components");
      }
    }
  }
  return sim;
}

std::string SimulatorToJson(const Simulator& sim) {
  return SimulatorNode(sim, true).dump() + "\n";
}

std::string SimulationToJson(const SimulationResult& r) {
  Json j = SimulatorNode(r.simulator, true);
  const ComplexityReport& c = r.complexity;
  j["complexity"] = {{"base_cost_s", c.base_cost_s},
                     {"idealized_calls", c.idealized_calls},
                     {"actual_calls", c.actual_calls},
                     {"idealized_size", c.idealized_size},
                     {"budget_bound", c.budget_bound},
                     {"budget_constant", 16},
                     {"t_used", c.t_used},
                     {"rho_used", c.rho_used},
                     {"within_budget", c.within_budget}};
  j["game"] = {{"rounds", r.game.rounds},
               {"round_budget", r.game.round_budget},
               {"eps_achieved", r.game.eps_achieved},
               {"mixture_components", r.game.mixture.components().size()},
               {"weight_history_digest", r.game.weight_history_digest}};
  j["verification"] = {{"max_advantage", r.max_advantage},
                       {"witness", r.witness},
                       {"sparsify_retries", r.retries_used}};
  return j.dump() + "\n";
}

std::string SecurityReportToJson(const security::SecurityReport& report) {
  Json j;
  j["method"] = security::MethodName(report.method);
  j["lambda_bits"] = report.lambda_bits;
  if (report.eps_prime_floor_log2) {
    j["eps_prime_floor_log2"] = *report.eps_prime_floor_log2;
  } else {
    j["eps_prime_floor_log2"] = nullptr;
  }
  j["notes"] = report.notes;
  return j.dump(2) + "\n";
}

std::string SecurityReportToMarkdown(const security::SecurityReport& report) {
  std::ostringstream out;
  out.precision(10);
  out << "| method | lambda_bits | eps_prime_floor_log2 |\n|---|---|---|\n"
      << "| " << security::MethodName(report.method) << " | "
      << report.lambda_bits << " | ";
  if (report.eps_prime_floor_log2) out << *report.eps_prime_floor_log2;
  out << " |\n";
  for (const auto& note : report.notes) out << "\n- " << note;
  if (!report.notes.empty()) out << "\n";
  return out.str();
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorCode::kIoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) Fail(ErrorCode::kIoError, "cannot write " + path);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) Fail(ErrorCode::kIoError, "short write to " + path);
}

}  // namespace auxsim::io
