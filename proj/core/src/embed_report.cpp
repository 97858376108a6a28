// Copyright 2026 The mqanneal authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cstdio>

#include "json.hpp"
#include "mqanneal/embed.hpp"

namespace mqanneal {

std::int64_t reduction_ancilla_bound(std::uint32_t s) {
  if (s <= 2) return 0;
  if (s > 122) throw ValidationError("block size too large for the bound");
  if (s % 2 == 0)
    return (std::int64_t{1} << ((s + 2) / 2)) - 2 - s;
  return 3 * (std::int64_t{1} << ((s - 1) / 2)) - 2 - s;
}

std::int64_t estimate_direct_qubits(std::uint32_t n) {
  if (n < 2) throw ValidationError("direct estimate needs n >= 2");
  if (n > 122) throw ValidationError("direct estimate overflows above n=122");
  return static_cast<std::int64_t>(n) + reduction_ancilla_bound(n);
}

Rational truncated_qubit_formula(std::uint32_t n,
                                 std::span<const Rational> term_counts,
                                 std::uint32_t k) {
  if (k < 3) throw ValidationError("truncation length k must be at least 3");
  const Rational a_k(reduction_ancilla_bound(k));
  Rational total(0);
  for (const Rational& ni : term_counts) {
    total += (ni - 2) / Rational(k - 2) * a_k;
    total += (ni - k) / Rational(k - 2);
  }
  total += Rational(static_cast<std::int64_t>(n) * (n - 1), 2);
  total += n;
  return total;
}

Rational truncated_k4_formula(std::uint32_t n, std::uint32_t m,
                              std::span<const Rational> term_counts) {
  if (term_counts.size() != m)
    throw ValidationError("term count list does not match m");
  Rational sum(0);
  for (const Rational& ni : term_counts) sum += ni;
  const auto nn = static_cast<std::int64_t>(n);
  return Rational(nn * nn, 2) + Rational(nn, 2) - Rational(4) * m +
         Rational(3, 2) * sum;
}

std::int64_t truncated_builder_prediction(
    std::uint32_t n, std::span<const std::int64_t> term_counts,
    std::uint32_t k) {
  std::int64_t total = static_cast<std::int64_t>(n) +
                       static_cast<std::int64_t>(n) * (n - 1) / 2;
  for (std::int64_t t : term_counts) {
    if (t <= 0) continue;
    const ChunkPlan plan =
        plan_chunks(static_cast<std::uint32_t>(t), k);
    total += plan.chain_count();
    for (std::uint32_t size : plan.sizes)
      total += reduction_ancilla_bound(size);
  }
  return total;
}

TruncatedEstimate estimate_truncated_qubits(const MQSystem& s,
                                            std::uint32_t k) {
  s.validate();
  std::vector<Rational> counts;
  std::vector<std::int64_t> int_counts;
  counts.reserve(s.polys.size());
  for (const auto& p : s.polys) {
    counts.emplace_back(static_cast<std::int64_t>(p.term_count()));
    int_counts.push_back(static_cast<std::int64_t>(p.term_count()));
  }
  TruncatedEstimate out;
  out.formula = truncated_qubit_formula(s.n_vars, counts, k);
  out.prediction = truncated_builder_prediction(s.n_vars, int_counts, k);
  return out;
}

AverageScaling average_scaling(std::uint32_t n) {
  const Rational nn(static_cast<std::int64_t>(n));
  AverageScaling out;
  out.exact = Rational(3, 8) * nn * nn * nn + Rational(7, 8) * nn * nn -
              Rational(7, 2) * nn;
  out.nominal = Rational(3, 8) * nn * nn * nn + Rational(7, 8) * nn * nn -
                Rational(7, 8) * nn;
  out.nominal_matches_exact = out.exact == out.nominal;
  return out;
}

ScalingReport scaling_report(std::uint32_t n_min, std::uint32_t n_max,
                             std::uint32_t k_min, std::uint32_t k_max) {
  if (n_min < 2 || n_min > n_max)
    throw ValidationError("need 2 <= n_min <= n_max");
  if (k_min < 3 || k_min > k_max)
    throw ValidationError("need 3 <= k_min <= k_max");

  ScalingReport report;
  for (std::uint32_t n = n_min; n <= n_max; ++n) {
    ScalingEntry direct;
    direct.n = n;
    direct.method = EmbedMethod::kDirect;
    direct.qubits = Rational(estimate_direct_qubits(n));
    report.entries.push_back(direct);

    // Average case: m = n equations of (n + n^2)/4 terms each.
    const Rational ni =
        (Rational(static_cast<std::int64_t>(n)) +
         Rational(static_cast<std::int64_t>(n) * n)) /
        4;
    const std::vector<Rational> counts(n, ni);

    std::uint32_t best = 0;
    Rational best_value;
    for (std::uint32_t k = k_min; k <= k_max; ++k) {
      ScalingEntry entry;
      entry.n = n;
      entry.method = EmbedMethod::kTruncated;
      entry.k = k;
      entry.qubits = truncated_qubit_formula(n, counts, k);
      if (best == 0 || entry.qubits < best_value) {
        best = k;
        best_value = entry.qubits;
      }
      report.entries.push_back(std::move(entry));
    }
    report.best_k[n] = best;
  }

  const AverageScaling avg = average_scaling(n_max);
  report.note =
      "average-case cubic: exact substitution gives (3/8)n^3 + (7/8)n^2 - "
      "(7/2)n; the commonly quoted form uses -(7/8)n for the linear term"
      " and does not match (" +
      to_string(avg.exact) + " vs " + to_string(avg.nominal) + " at n = " +
      std::to_string(n_max) + ")";
  return report;
}

std::string scaling_report_tsv(const ScalingReport& report) {
  std::string out = "n\tmethod\tk\tqubits\tqubits_decimal\n";
  for (const auto& e : report.entries) {
    out += std::to_string(e.n) + "\t" + to_string(e.method) + "\t";
    out += e.method == EmbedMethod::kTruncated ? std::to_string(e.k) : "-";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", to_double(e.qubits));
    out += "\t" + to_string(e.qubits) + "\t" + buf + "\n";
  }
  out += "# note: " + report.note + "\n";
  for (const auto& [n, k] : report.best_k)
    out += "# best_k " + std::to_string(n) + " " + std::to_string(k) + "\n";
  return out;
}

std::string scaling_report_json(const ScalingReport& report) {
  nlohmann::json j;
  j["entries"] = nlohmann::json::array();
  for (const auto& e : report.entries) {
    nlohmann::json row;
    row["n"] = e.n;
    row["method"] = to_string(e.method);
    if (e.method == EmbedMethod::kTruncated) row["k"] = e.k;
    row["qubits"] = to_string(e.qubits);
    row["qubits_decimal"] = to_double(e.qubits);
    j["entries"].push_back(row);
  }
  j["best_k"] = nlohmann::json::object();
  for (const auto& [n, k] : report.best_k)
    j["best_k"][std::to_string(n)] = k;
  j["note"] = report.note;
  return j.dump(2);
}

}  // namespace mqanneal
