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

#include "quboflow/kernels/kernels.hpp"

namespace quboflow::kernels::impl {

void batch_energy_scalar(const TermList& terms, const std::uint64_t* states,
                         std::size_t count, double* out);
void run_reads_scalar(const SaProblem& problem, std::uint64_t seed,
                      std::uint64_t first_read, std::uint64_t count,
                      std::uint64_t* out_states);

#ifdef QUBOFLOW_HAVE_AVX2_TU
void batch_energy_avx2(const TermList& terms, const std::uint64_t* states,
                       std::size_t count, double* out);
void run_reads_avx2(const SaProblem& problem, std::uint64_t seed,
                    std::uint64_t first_read, std::uint64_t count,
                    std::uint64_t* out_states);
#endif

}  // namespace quboflow::kernels::impl
