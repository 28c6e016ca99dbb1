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

#pragma once

#include <vector>

#include "quboflow/matrix.hpp"

namespace quboflow {

/// Physical and numerical parameters of the transient 1D channel-flow problem:
/// pressure-driven flow between no-slip walls at y=0 and y=channel_height,
/// discretized with central differences in space and implicit Euler in time.
///
/// alpha = nu*dt/dy^2 is the prescribed quantity; the time step is derived
/// from it, so refining the grid shrinks dt. body_force is carried for
/// completeness but never enters the equations (the flow is driven by the
/// pressure gradient alone).
struct FlowParams {
  double channel_height = 1.0;     // domain is [0, channel_height]
  double density = 0.5;            // rho
  double dynamic_viscosity = 0.6;  // mu
  double pressure_gradient = -2.0; // dp/dx, constant
  double body_force = 0.4;         // stored, unused
  double alpha = 0.4;              // nu*dt/dy^2
  int n_steps = 10;
  int grid_points = 5;             // includes both boundary points, >= 3

  double kinematic_viscosity() const { return dynamic_viscosity / density; }
  double dy() const { return channel_height / (grid_points - 1); }
  double dt() const { return alpha * dy() * dy() / kinematic_viscosity(); }
  int interior_points() const { return grid_points - 2; }

  /// Throws ConfigError on any invariant violation.
  void validate() const;
};

/// Tridiagonal system A*u = b over the interior grid points (boundary values
/// are eliminated; u = 0 at both walls). For the implicit-Euler stencil the
/// matrix is symmetric with diagonal 1+2*alpha and off-diagonals -alpha.
struct LinearSystem {
  std::vector<double> sub;   // size dim-1
  std::vector<double> diag;  // size dim
  std::vector<double> sup;   // size dim-1
  std::vector<double> rhs;   // size dim

  std::size_t dim() const { return diag.size(); }
  Matrix to_dense() const;
};

/// Velocity profile over all grid points at one time level. The first and
/// last entries are exactly zero (no-slip walls).
struct SolutionProfile {
  std::vector<double> values;
  int time_index = 0;
};

/// Zero profile at time 0, or a constant interior value for non-default
/// initial conditions (boundaries stay zero).
SolutionProfile initial_profile(const FlowParams& params, double interior_value = 0.0);

/// Implicit-Euler system for one step starting from `prev`:
/// row i has the -alpha, 1+2*alpha, -alpha pattern and
/// rhs_i = prev_i - (dt/rho)*dp/dx. `prev` must span all grid points with
/// zero boundary values.
LinearSystem assemble_system(const FlowParams& params, const SolutionProfile& prev);

/// Direct tridiagonal elimination (Thomas algorithm). Requires a diagonally
/// dominant system; throws SingularSystemError on a vanishing pivot.
std::vector<double> classical_solve(const LinearSystem& sys);

/// One implicit-Euler step: assemble, solve, reattach zero boundaries,
/// advance the time index.
SolutionProfile step_classical(const FlowParams& params, const SolutionProfile& prev);

/// Steady-state solution of the continuous problem:
/// u(y) = (-dp/dx / (2*mu)) * y * (h - y).
double analytic_steady_profile(const FlowParams& params, double y);

}  // namespace quboflow
