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

#include "auxsim/security.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "auxsim/error.hpp"
#include "json.hpp"

namespace auxsim::security {

namespace {

double Log2(double v) { return std::log2(v); }

// theta * log2(theta), extended continuously to 0.
double ThetaLogTheta(double theta) {
  return theta > 0.0 ? theta * Log2(theta) : 0.0;
}

void CheckSpec(const CipherSecuritySpec& spec) {
  if (!(spec.k >= 1) || !(spec.ell >= 0) || !(spec.q >= 1) ||
      spec.beta < 1 || spec.beta > 3 || !(spec.theta >= 0) ||
      !(spec.c1 > 0) || !(spec.c2 > 0)) {
    std::ostringstream msg;
    msg << "invalid cipher parameters: k=" << spec.k << " ell=" << spec.ell
        << " q=" << spec.q << " beta=" << spec.beta << " theta=" << spec.theta
        << " c1=" << spec.c1 << " c2=" << spec.c2;
    Fail(ErrorCode::kInvalidArgument, msg.str());
  }
}

// log2(2^a + 2^b).
double Log2SumExp2(double a, double b) {
  const double hi = std::max(a, b);
  const double lo = std::min(a, b);
  return hi + std::log2(1.0 + std::exp2(lo - hi));
}

std::string FormatNumber(double v) {
  char buf[64];
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == std::floor(v) && std::abs(v) < 1e15) {
    std::snprintf(buf, sizeof(buf), "%.0f", v);
  } else {
    std::snprintf(buf, sizeof(buf), "%.4f", v);
  }
  return buf;
}

}  // namespace

const char* MethodName(Method method) {
  switch (method) {
    case Method::kPJ14:
      return "pj14";
    case Method::kVZ13:
      return "vz13";
    case Method::kOurs:
      return "ours";
    case Method::kDream:
      return "dream";
  }
  return "unknown";
}

Method ParseMethod(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "pj14") return Method::kPJ14;
  if (lower == "vz13") return Method::kVZ13;
  if (lower == "ours") return Method::kOurs;
  if (lower == "dream") return Method::kDream;
  Fail(ErrorCode::kUnsupportedMethod, "unknown method '" + lower + "'");
}

std::optional<int> MethodBeta(Method method) {
  switch (method) {
    case Method::kPJ14:
      return 3;
    case Method::kOurs:
      return 2;
    case Method::kDream:
      return 1;
    case Method::kVZ13:
      return std::nullopt;
  }
  return std::nullopt;
}

double LambertW2FromLog2(double log2_u) {
  if (!std::isfinite(log2_u)) {
    Fail(ErrorCode::kDomainError, "LambertW2 argument must be finite");
  }
  // w + log2(w) is increasing on (0, inf); bracket the root, then bisect to
  // machine precision.
  auto f = [&](double w) { return w + std::log2(w) - log2_u; };
  double lo = 0.5;
  double hi = 2.0;
  while (f(lo) > 0.0) lo *= 0.5;
  while (f(hi) < 0.0) hi *= 2.0;
  for (int iter = 0; iter < 2000; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (f(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::abs(f(lo)) <= std::abs(f(hi)) ? lo : hi;
}

double LambertW2(double u) {
  if (!(u > 0.0) || !std::isfinite(u)) {
    std::ostringstream msg;
    msg << "LambertW2 needs u > 0, got " << u;
    Fail(ErrorCode::kDomainError, msg.str());
  }
  return LambertW2FromLog2(std::log2(u));
}

double EffectiveKeyBits(const CipherSecuritySpec& spec) {
  CheckSpec(spec);
  const double a = spec.k - (spec.beta + 1) * spec.ell - 2.0 * Log2(spec.q) -
                   2.0 * Log2(spec.c1) - Log2(spec.c2);
  if (!(a > 0.0)) {
    std::ostringstream msg;
    msg << "infeasible parameters: k - (beta+1) ell - 2 log q - 2 log c1 - "
           "log c2 = "
        << a << " <= 0";
    Fail(ErrorCode::kInfeasibleParameters, msg.str());
  }
  return a;
}

double SecurityBits(const CipherSecuritySpec& spec) {
  const double a = EffectiveKeyBits(spec);
  const double theta = spec.theta;
  if (theta == 0.0) return a / 4.0;
  const double inner = a + 2.0 * theta - ThetaLogTheta(theta);
  if (!(inner > 0.0)) {
    Fail(ErrorCode::kInfeasibleParameters, "log-factor argument is not positive");
  }
  return a / 4.0 + (Log2(3.0) - 1.5) * theta - (theta / 4.0) * Log2(inner);
}

double SecurityBitsExact(const CipherSecuritySpec& spec) {
  const double a = EffectiveKeyBits(spec);
  const double theta = spec.theta;
  if (theta == 0.0) return a / 4.0;
  const double log2_u = 2.0 - Log2(theta) + a / theta;
  const double w = LambertW2FromLog2(log2_u);
  return theta * Log2(3.0) - 1.5 * theta - (theta / 4.0) * Log2(theta) +
         a / 4.0 - (theta / 4.0) * Log2(w);
}

double EpsPrimeFloorLog2(double k, double ell, double q, Method method) {
  if (!(k >= 1) || !(ell >= 0) || !(q >= 1)) {
    Fail(ErrorCode::kInvalidArgument, "need k >= 1, ell >= 0, q >= 1");
  }
  const double lq = Log2(q);
  switch (method) {
    case Method::kPJ14:
      return 2.0 + lq / 2.0 + ell - k / 4.0;
    case Method::kVZ13:
      return 2.0 + lq / 3.0 + ell / 2.0 - k / 6.0;
    case Method::kOurs:
      return 2.0 + lq / 2.0 + 0.75 * ell - k / 4.0;
    case Method::kDream:
      break;
  }
  Fail(ErrorCode::kUnsupportedMethod,
       "no eps' floor is stated for the dream simulator");
}

double VzSecurityCap(double k, double ell) {
  if (!(k >= 1)) Fail(ErrorCode::kInvalidArgument, "need k >= 1");
  return k / 6.0 - ell / 2.0;
}

int MaxLeakage(double k, double q, double lambda_target, int beta,
               double theta, double c1, double c2) {
  CipherSecuritySpec spec{k, 0.0, q, beta, theta, c1, c2};
  CheckSpec(spec);
  const double headroom = k - 2.0 * Log2(q) - 2.0 * Log2(c1) - Log2(c2);
  const int top = headroom > 0.0
                      ? static_cast<int>(std::floor(headroom / (beta + 1)))
                      : -1;
  for (int ell = top; ell >= 0; --ell) {
    spec.ell = ell;
    double bits;
    try {
      bits = SecurityBits(spec);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kInfeasibleParameters) continue;
      throw;
    }
    if (bits >= lambda_target) return ell;
  }
  std::ostringstream msg;
  msg << "no leakage length reaches " << lambda_target << " bits (k=" << k
      << ", q=" << q << ", beta=" << beta << ")";
  Fail(ErrorCode::kInfeasibleParameters, msg.str());
}

double SimulatorCostLog2(Method method, double log2_s, double ell,
                         double log2_eps) {
  if (!(log2_s >= 0) || !(log2_eps < 0) || !(ell >= 0)) {
    Fail(ErrorCode::kInvalidArgument, "need s >= 1, 0 < eps < 1, ell >= 0");
  }
  const double inv_eps2 = -2.0 * log2_eps;
  switch (method) {
    case Method::kPJ14:
      return log2_s + 3.0 * ell + inv_eps2;
    case Method::kVZ13:
      return Log2SumExp2(log2_s + ell + inv_eps2, ell - 4.0 * log2_eps);
    case Method::kOurs:
      return log2_s + 2.0 * ell + inv_eps2;
    case Method::kDream:
      return log2_s + ell + inv_eps2;
  }
  return 0.0;
}

std::string SimulatorCostFormula(Method method) {
  switch (method) {
    case Method::kPJ14:
      return "s*2^(3l)/eps^2";
    case Method::kVZ13:
      return "s*2^l/eps^2 + 2^l/eps^4";
    case Method::kOurs:
      return "s*2^(2l)/eps^2";
    case Method::kDream:
      return "s*2^l/eps^2";
  }
  return "";
}

CipherParams StreamCipherParams(double log2_eps_F, double log2_s_F, double q,
                                double ell, Method method) {
  if (!(log2_eps_F < 0) || !(log2_s_F >= 0) || !(q >= 1) || !(ell >= 0)) {
    Fail(ErrorCode::kInvalidArgument,
         "need 0 < eps_F < 1, s_F >= 1, q >= 1, ell >= 0");
  }
  CipherParams out;
  double e = 2.0 + Log2(q) + (log2_eps_F + ell) / 2.0;
  if (e >= 0.0) {
    out.notes.push_back("vacuous: eps' >= 1, clamped to 1");
    e = 0.0;
  }
  out.eps_prime_log2 = e;
  switch (method) {
    case Method::kPJ14:
      out.s_prime_log2 = log2_s_F + 2.0 * e - 3.0 * ell;
      break;
    case Method::kOurs:
      out.s_prime_log2 = log2_s_F + 2.0 * e - 2.0 * ell;
      break;
    case Method::kDream:
      out.s_prime_log2 = log2_s_F + 2.0 * e - ell;
      out.notes.push_back("unproven: dream simulator bound is conjectural");
      break;
    case Method::kVZ13: {
      // s' 2^l / eps'^2 + 2^l / eps'^4 = s_F.
      const double additive = ell - 4.0 * e;
      if (log2_s_F <= additive) {
        out.s_prime_log2 = -std::numeric_limits<double>::infinity();
        out.notes.push_back(
            "vacuous: the additive 2^l/eps'^4 term exceeds s_F, no s' > 0");
        return out;
      }
      const double rest =
          log2_s_F + std::log2(1.0 - std::exp2(additive - log2_s_F));
      out.s_prime_log2 = rest + 2.0 * e - ell;
      break;
    }
  }
  out.notes.push_back("unit constants in s'");
  if (out.s_prime_log2 < 0.0) out.notes.push_back("vacuous: s' < 1");
  return out;
}

double OptimalEpsFLog2(const CipherSecuritySpec& spec) {
  CheckSpec(spec);
  return ((spec.beta - 1) * spec.ell - spec.k - 2.0 * Log2(spec.c1) -
          2.0 * Log2(spec.q) + Log2(spec.c2)) /
         2.0;
}

SecurityReport MakeSecurityReport(Method method, const CipherSecuritySpec& spec) {
  SecurityReport report;
  report.method = method;
  if (method == Method::kVZ13) {
    CheckSpec(CipherSecuritySpec{spec.k, spec.ell, spec.q, 2, spec.theta,
                                 spec.c1, spec.c2});
    report.lambda_bits = VzSecurityCap(spec.k, spec.ell);
    report.eps_prime_floor_log2 = EpsPrimeFloorLog2(spec.k, spec.ell, spec.q, method);
    report.notes.push_back(
        "lambda_bits is the upper bound k/6 - ell/2; the additive 2^l/eps^4 "
        "simulator term rules out more");
    return report;
  }
  CipherSecuritySpec s = spec;
  s.beta = *MethodBeta(method);
  report.lambda_bits = SecurityBits(s);
  if (method == Method::kDream) {
    report.notes.push_back("unproven: dream simulator bound is conjectural");
    report.notes.push_back("no eps' floor is stated for the dream simulator");
  } else {
    report.eps_prime_floor_log2 =
        EpsPrimeFloorLog2(spec.k, spec.ell, spec.q, method);
  }
  if (spec.theta > 0.0) {
    report.notes.push_back("closed form is accurate to one bit for theta > 0");
  }
  return report;
}

Tables MakeTables() {
  Tables t;
  for (Method m : {Method::kPJ14, Method::kVZ13, Method::kOurs, Method::kDream}) {
    t.cost_rows.push_back(CostRow{
        m, "eps", "s", SimulatorCostFormula(m),
        SimulatorCostLog2(m, t.example_log2_s, t.example_ell,
                          t.example_log2_eps)});
  }
  for (Method m : {Method::kPJ14, Method::kVZ13, Method::kOurs, Method::kDream}) {
    CipherRow row;
    row.method = m;
    row.q = t.q;
    if (m == Method::kVZ13) {
      row.ell = 1;
      row.lambda = "<80";
      row.computed_cap = VzSecurityCap(t.k, row.ell);
      row.computed_eps_floor_log2 = EpsPrimeFloorLog2(t.k, row.ell, t.q, m);
      row.footnote =
          "reported as ell=1, lambda<80; the closed forms give cap k/6-l/2 = " +
          FormatNumber(*row.computed_cap) + " and eps' floor 2^" +
          FormatNumber(*row.computed_eps_floor_log2);
    } else {
      const int beta = *MethodBeta(m);
      row.ell = MaxLeakage(t.k, t.q, t.lambda_target, beta);
      row.lambda = FormatNumber(
          SecurityBits(CipherSecuritySpec{t.k, static_cast<double>(row.ell),
                                          t.q, beta, 0, 4, 1}));
      if (m == Method::kDream) row.footnote = "unproven";
    }
    t.cipher_rows.push_back(std::move(row));
  }
  return t;
}

namespace {

std::string Optional(const std::optional<double>& v) {
  return v ? FormatNumber(*v) : "";
}

}  // namespace

std::string RenderTablesMarkdown(const Tables& t) {
  std::ostringstream out;
  out << "### Simulator cost\n\n"
      << "| Method | Advantage | Size | Cost of simulating | log2 cost at s=2^"
      << FormatNumber(t.example_log2_s) << ", l=" << FormatNumber(t.example_ell)
      << ", eps=2^" << FormatNumber(t.example_log2_eps) << " |\n"
      << "|---|---|---|---|---|\n";
  for (const auto& r : t.cost_rows) {
    out << "| " << MethodName(r.method) << " | " << r.advantage << " | "
        << r.size << " | " << r.cost_formula << " | "
        << FormatNumber(r.example_cost_log2) << " |\n";
  }
  out << "\n### Stream cipher parameters (k=" << FormatNumber(t.k)
      << ", target lambda=" << FormatNumber(t.lambda_target) << ")\n\n"
      << "| Simulator | Blocks q | Leakage l | Security lambda | Cap | "
         "eps' floor log2 | Note |\n"
      << "|---|---|---|---|---|---|---|\n";
  for (const auto& r : t.cipher_rows) {
    out << "| " << MethodName(r.method) << " | " << FormatNumber(r.q) << " | "
        << r.ell << " | " << r.lambda << " | " << Optional(r.computed_cap)
        << " | " << Optional(r.computed_eps_floor_log2) << " | " << r.footnote
        << " |\n";
  }
  return out.str();
}

namespace {

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string RenderTablesCsv(const Tables& t) {
  std::ostringstream out;
  out << "method,advantage,size,cost_formula,example_cost_log2\n";
  for (const auto& r : t.cost_rows) {
    out << MethodName(r.method) << "," << r.advantage << "," << r.size << ","
        << CsvField(r.cost_formula) << "," << FormatNumber(r.example_cost_log2)
        << "\n";
  }
  out << "\nmethod,q,ell,lambda,cap,eps_floor_log2,note\n";
  for (const auto& r : t.cipher_rows) {
    out << MethodName(r.method) << "," << FormatNumber(r.q) << "," << r.ell
        << "," << CsvField(r.lambda) << "," << Optional(r.computed_cap) << ","
        << Optional(r.computed_eps_floor_log2) << "," << CsvField(r.footnote)
        << "\n";
  }
  return out.str();
}

std::string RenderTablesJson(const Tables& t) {
  nlohmann::ordered_json j;
  j["simulator_cost"]["example"] = {{"log2_s", t.example_log2_s},
                            {"ell", t.example_ell},
                            {"log2_eps", t.example_log2_eps}};
  j["simulator_cost"]["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : t.cost_rows) {
    j["simulator_cost"]["rows"].push_back({{"method", MethodName(r.method)},
                                   {"advantage", r.advantage},
                                   {"size", r.size},
                                   {"cost_formula", r.cost_formula},
                                   {"example_cost_log2", r.example_cost_log2}});
  }
  j["stream_cipher"]["k"] = t.k;
  j["stream_cipher"]["lambda_target"] = t.lambda_target;
  j["stream_cipher"]["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : t.cipher_rows) {
    nlohmann::ordered_json row = {{"method", MethodName(r.method)},
                                  {"q", r.q},
                                  {"ell", r.ell},
                                  {"lambda", r.lambda}};
    if (r.computed_cap) row["cap"] = *r.computed_cap;
    if (r.computed_eps_floor_log2) row["eps_floor_log2"] = *r.computed_eps_floor_log2;
    if (!r.footnote.empty()) row["note"] = r.footnote;
    j["stream_cipher"]["rows"].push_back(std::move(row));
  }
  return j.dump(2) + "\n";
}

}  // namespace auxsim::security
