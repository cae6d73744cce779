// Copyright 2026 The dks1d Authors
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

#include "dks1d/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include <json.hpp>

#include "dks1d/errors.hpp"

namespace dks1d {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// Exact values are written as strings so no precision is lost.
template <Scalar T>
nlohmann::json json_scalar(const T& v) {
  if constexpr (is_exact_v<T>) {
    return format_scalar(v);
  } else {
    return v;
  }
}

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
  if (name == "text") return OutputFormat::kText;
  if (name == "json") return OutputFormat::kJson;
  throw InvalidArgument("unknown format '" + std::string(name) + "'");
}

template <Scalar T>
PointSet<T> parse_points(std::istream& in) {
  PointSet<T> points;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    try {
      points.push_back(parse_scalar<T>(view));
    } catch (const InvalidArgument& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (points.size() < 2) throw ParseError(line_no, "need at least 2 points");
  return points;
}

template <Scalar T>
PointSet<T> parse_points_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  return parse_points<T>(in);
}

template <Scalar T>
void write_points(std::ostream& out, const PointSet<T>& points) {
  for (const T& p : points) out << format_scalar(p) << '\n';
}

template <Scalar T>
void emit_result(std::ostream& out, const SolveResult<T>& res, OutputFormat fmt) {
  const KKTCertificate<T>& cert = res.certificate;
  if (fmt == OutputFormat::kJson) {
    nlohmann::json weights = nlohmann::json::array();
    for (const T& w : res.weights) weights.push_back(json_scalar(w));
    nlohmann::json doc;
    doc["backend"] = std::string(backend_name(res.backend));
    doc["weights"] = std::move(weights);
    doc["q"] = json_scalar(res.q_value);
    doc["certificate"] = {
        {"valid", res.certificate_valid},
        {"stationarity_residual", json_scalar(cert.stationarity_residual)},
        {"min_multiplier", json_scalar(cert.min_multiplier)},
        {"max_complementarity_violation", json_scalar(cert.max_complementarity_violation)},
        {"gradient_norm", json_scalar(cert.gradient_norm)},
    };
    if (res.max_pieces) doc["max_pieces"] = *res.max_pieces;
    out << doc.dump(2) << '\n';
    return;
  }
  for (std::size_t i = 0; i < res.weights.size(); ++i) {
    out << "w[" << i + 1 << "] = " << format_scalar(res.weights[i]) << '\n';
  }
  out << "Q = " << format_scalar(res.q_value) << '\n';
  out << "certificate: " << (res.certificate_valid ? "VALID" : "INVALID")
      << " (stationarity residual " << format_scalar(cert.stationarity_residual)
      << ", min multiplier " << format_scalar(cert.min_multiplier) << ", complementarity "
      << format_scalar(cert.max_complementarity_violation) << ")\n";
}

template PointSet<double> parse_points<double>(std::istream&);
template PointSet<Rational> parse_points<Rational>(std::istream&);
template PointSet<double> parse_points_file<double>(const std::string&);
template PointSet<Rational> parse_points_file<Rational>(const std::string&);
template void write_points<double>(std::ostream&, const PointSet<double>&);
template void write_points<Rational>(std::ostream&, const PointSet<Rational>&);
template void emit_result<double>(std::ostream&, const SolveResult<double>&, OutputFormat);
template void emit_result<Rational>(std::ostream&, const SolveResult<Rational>&, OutputFormat);

}  // namespace dks1d
