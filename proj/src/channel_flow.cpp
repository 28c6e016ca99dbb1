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

#include "quboflow/channel_flow.hpp"

#include <cmath>
#include <cstddef>
#include <string>

#include "quboflow/errors.hpp"

namespace quboflow {

void FlowParams::validate() const {
  if (grid_points < 3)
    throw ConfigError("FlowParams: grid_points must be >= 3, got " + std::to_string(grid_points));
  if (!(channel_height > 0.0)) throw ConfigError("FlowParams: channel_height must be positive");
  if (!(density > 0.0)) throw ConfigError("FlowParams: density must be positive");
  if (!(dynamic_viscosity > 0.0))
    throw ConfigError("FlowParams: dynamic_viscosity must be positive");
  if (!(alpha > 0.0)) throw ConfigError("FlowParams: alpha must be positive");
  if (n_steps < 0) throw ConfigError("FlowParams: n_steps must be non-negative");
  if (!std::isfinite(pressure_gradient))
    throw ConfigError("FlowParams: pressure_gradient must be finite");
}

Matrix LinearSystem::to_dense() const {
  const std::size_t n = dim();
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = diag[i];
    if (i + 1 < n) {
      a(i, i + 1) = sup[i];
      a(i + 1, i) = sub[i];
    }
  }
  return a;
}

SolutionProfile initial_profile(const FlowParams& params, double interior_value) {
  params.validate();
  SolutionProfile p;
  p.values.assign(static_cast<std::size_t>(params.grid_points), interior_value);
  p.values.front() = 0.0;
  p.values.back() = 0.0;
  p.time_index = 0;
  return p;
}

LinearSystem assemble_system(const FlowParams& params, const SolutionProfile& prev) {
  params.validate();
  if (prev.values.size() != static_cast<std::size_t>(params.grid_points))
    throw DimensionError("assemble_system: profile has " + std::to_string(prev.values.size()) +
                         " entries, expected " + std::to_string(params.grid_points));

  const std::size_t n = static_cast<std::size_t>(params.interior_points());
  const double a = params.alpha;
  const double forcing = -(params.dt() / params.density) * params.pressure_gradient;

  LinearSystem sys;
  sys.sub.assign(n - 1, -a);
  sys.sup.assign(n - 1, -a);
  sys.diag.assign(n, 1.0 + 2.0 * a);
  sys.rhs.resize(n);
  for (std::size_t i = 0; i < n; ++i) sys.rhs[i] = prev.values[i + 1] + forcing;
  return sys;
}

std::vector<double> classical_solve(const LinearSystem& sys) {
  const std::size_t n = sys.dim();
  if (n == 0) throw DimensionError("classical_solve: empty system");
  if (sys.sub.size() != n - 1 || sys.sup.size() != n - 1 || sys.rhs.size() != n)
    throw DimensionError("classical_solve: inconsistent band sizes");

  // Thomas algorithm.
  std::vector<double> c(n - 1 > 0 ? n - 1 : 0), d(n);
  double pivot = sys.diag[0];
  if (pivot == 0.0) throw SingularSystemError("classical_solve: zero pivot at row 0");
  if (n > 1) c[0] = sys.sup[0] / pivot;
  d[0] = sys.rhs[0] / pivot;
  for (std::size_t i = 1; i < n; ++i) {
    pivot = sys.diag[i] - sys.sub[i - 1] * c[i - 1];
    if (pivot == 0.0)
      throw SingularSystemError("classical_solve: zero pivot at row " + std::to_string(i));
    if (i + 1 < n) c[i] = sys.sup[i] / pivot;
    d[i] = (sys.rhs[i] - sys.sub[i - 1] * d[i - 1]) / pivot;
  }
  std::vector<double> u(n);
  u[n - 1] = d[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) u[i] = d[i] - c[i] * u[i + 1];
  return u;
}

SolutionProfile step_classical(const FlowParams& params, const SolutionProfile& prev) {
  const LinearSystem sys = assemble_system(params, prev);
  const std::vector<double> interior = classical_solve(sys);

  SolutionProfile next;
  next.values.resize(prev.values.size());
  next.values.front() = 0.0;
  next.values.back() = 0.0;
  for (std::size_t i = 0; i < interior.size(); ++i) next.values[i + 1] = interior[i];
  next.time_index = prev.time_index + 1;
  return next;
}

double analytic_steady_profile(const FlowParams& params, double y) {
  const double h = params.channel_height;
  if (y < 0.0 || y > h)
    throw RangeError("analytic_steady_profile: y = " + std::to_string(y) +
                     " outside [0, " + std::to_string(h) + "]");
  return (-params.pressure_gradient / (2.0 * params.dynamic_viscosity)) * y * (h - y);
}

}  // namespace quboflow
