//
// Copyright 2026 the quboflow authors
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
//

#include "quboflow/qubo.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include "quboflow/errors.hpp"
#include "quboflow/text.hpp"

namespace quboflow {

namespace {
constexpr double kCouplingPruneThreshold = 1e-15;
}

std::optional<double> Qubo::coupling(int j, int k) const {
  if (j > k) std::swap(j, k);
  const auto it = std::lower_bound(
      couplings.begin(), couplings.end(), std::pair<int, int>{j, k},
      [](const QuboTerm& t, const std::pair<int, int>& key) {
        return std::pair<int, int>{t.j, t.k} < key;
      });
  if (it != couplings.end() && it->j == j && it->k == k) return it->weight;
  return std::nullopt;
}

double Qubo::max_abs_coefficient() const {
  double m = 0.0;
  for (double v : linear) m = std::max(m, std::abs(v));
  for (const QuboTerm& t : couplings) m = std::max(m, std::abs(t.weight));
  return m;
}

Qubo build_qubo(const Matrix& ad, const std::vector<double>& b) {
  if (ad.rows() != b.size())
    throw DimensionError("build_qubo: matrix has " + std::to_string(ad.rows()) +
                         " rows but b has " + std::to_string(b.size()) + " entries");
  const std::size_t m = ad.cols();

  Qubo qubo;
  qubo.num_vars = static_cast<int>(m);
  qubo.linear.assign(m, 0.0);
  for (std::size_t j = 0; j < m; ++j) {
    double v = 0.0;
    for (std::size_t i = 0; i < ad.rows(); ++i) v += ad(i, j) * (ad(i, j) - 2.0 * b[i]);
    qubo.linear[j] = v;
  }
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = j + 1; k < m; ++k) {
      double w = 0.0;
      for (std::size_t i = 0; i < ad.rows(); ++i) w += ad(i, j) * ad(i, k);
      w *= 2.0;
      if (std::abs(w) >= kCouplingPruneThreshold)
        qubo.couplings.push_back({static_cast<int>(j), static_cast<int>(k), w});
    }

  double offset = 0.0;
  for (double bi : b) offset += bi * bi;
  qubo.constant_offset = offset;
  return qubo;
}

double eval_energy(const Qubo& qubo, const BitVector& q) {
  if (q.size() != static_cast<std::size_t>(qubo.num_vars))
    throw DimensionError("eval_energy: state has " + std::to_string(q.size()) +
                         " bits, expected " + std::to_string(qubo.num_vars));
  // Canonical arithmetic: masked fma in term order. Backends replicate this.
  double e = 0.0;
  for (int j = 0; j < qubo.num_vars; ++j) {
    const double m = q[static_cast<std::size_t>(j)] ? 1.0 : 0.0;
    e = std::fma(qubo.linear[static_cast<std::size_t>(j)], m, e);
  }
  for (const QuboTerm& t : qubo.couplings) {
    const double m =
        (q[static_cast<std::size_t>(t.j)] && q[static_cast<std::size_t>(t.k)]) ? 1.0 : 0.0;
    e = std::fma(t.weight, m, e);
  }
  return e;
}

int logical_problem_size(int grid_points, int precision) {
  if (grid_points < 3)
    throw ConfigError("logical_problem_size: grid_points must be >= 3");
  if (precision < 1) throw ConfigError("logical_problem_size: precision must be >= 1");
  return (grid_points - 2) * precision;
}

bool embeddable_hint(int size, int budget) {
  if (budget <= 0) throw ConfigError("embeddable_hint: budget must be positive");
  return size <= budget;
}

void write_qubo(std::ostream& os, const Qubo& qubo) {
  os << qubo.num_vars << ' ' << format_double(qubo.constant_offset) << '\n';
  for (int j = 0; j < qubo.num_vars; ++j)
    os << (j + 1) << ' ' << (j + 1) << ' '
       << format_double(qubo.linear[static_cast<std::size_t>(j)]) << '\n';
  for (const QuboTerm& t : qubo.couplings)
    os << (t.j + 1) << ' ' << (t.k + 1) << ' ' << format_double(t.weight) << '\n';
}

void write_qubo_file(const std::string& path, const Qubo& qubo) {
  std::ofstream os(path);
  if (!os) throw ConfigError("write_qubo_file: cannot open " + path);
  write_qubo(os, qubo);
}

Qubo read_qubo(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw ParseError("read_qubo: empty input");
  {
    std::istringstream header(line);
    std::string m_str, off_str;
    if (!(header >> m_str >> off_str)) throw ParseError("read_qubo: malformed header");
    Qubo qubo;
    qubo.num_vars = static_cast<int>(parse_int(m_str));
    if (qubo.num_vars < 0) throw ParseError("read_qubo: negative variable count");
    qubo.constant_offset = parse_double(off_str);
    qubo.linear.assign(static_cast<std::size_t>(qubo.num_vars), 0.0);

    while (std::getline(is, line)) {
      const std::string_view sv = trim(line);
      if (sv.empty()) continue;
      std::istringstream row{std::string(sv)};
      std::string j_str, k_str, w_str;
      if (!(row >> j_str >> k_str >> w_str))
        throw ParseError("read_qubo: malformed line '" + line + "'");
      const int j = static_cast<int>(parse_int(j_str)) - 1;
      const int k = static_cast<int>(parse_int(k_str)) - 1;
      const double w = parse_double(w_str);
      if (j < 0 || k < 0 || j >= qubo.num_vars || k >= qubo.num_vars)
        throw ParseError("read_qubo: index out of range in '" + line + "'");
      if (j == k) {
        qubo.linear[static_cast<std::size_t>(j)] = w;
      } else {
        qubo.couplings.push_back({std::min(j, k), std::max(j, k), w});
      }
    }
    std::sort(qubo.couplings.begin(), qubo.couplings.end(),
              [](const QuboTerm& a, const QuboTerm& b) {
                return std::pair{a.j, a.k} < std::pair{b.j, b.k};
              });
    return qubo;
  }
}

Qubo read_qubo_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("read_qubo_file: cannot open " + path);
  return read_qubo(is);
}

}  // namespace quboflow
