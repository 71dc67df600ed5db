// Copyright 2026 The choiscope Authors
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

#include <atomic>
#include <cstdlib>
#include <string>

#include "choiscope/core/errors.hpp"
#include "choiscope/kernels/kernels.hpp"

namespace choiscope::kernels {
namespace {

constexpr KernelTable kScalarTable{Backend::kScalar, &scalar::dotc, &scalar::dotu, &scalar::axpy,
                                   &scalar::scale};

#if defined(CHOISCOPE_HAVE_AVX2_TU)
constexpr KernelTable kAvx2Table{Backend::kAvx2, &avx2::dotc, &avx2::dotu, &avx2::axpy,
                                 &avx2::scale};
#endif

const KernelTable* initial_table() {
  if (const char* forced = std::getenv("CHOISCOPE_KERNELS")) {
    if (std::string(forced) == "scalar") return &kScalarTable;
  }
  if (avx2_supported()) return avx2_table();
  return &kScalarTable;
}

std::atomic<const KernelTable*>& slot() {
  static std::atomic<const KernelTable*> table{initial_table()};
  return table;
}

}  // namespace

const KernelTable& scalar_table() { return kScalarTable; }

const KernelTable* avx2_table() {
#if defined(CHOISCOPE_HAVE_AVX2_TU)
  return &kAvx2Table;
#else
  return nullptr;
#endif
}

bool avx2_supported() {
#if defined(CHOISCOPE_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported;
#else
  return false;
#endif
}

const KernelTable& active() { return *slot().load(std::memory_order_acquire); }

Backend active_backend() { return active().backend; }

void select(Backend backend) {
  if (backend == Backend::kScalar) {
    slot().store(&kScalarTable, std::memory_order_release);
    return;
  }
  if (!avx2_supported()) {
    throw ArgumentError("AVX2 kernels are not available on this machine");
  }
  slot().store(avx2_table(), std::memory_order_release);
}

std::string_view backend_name(Backend backend) {
  switch (backend) {
    case Backend::kScalar:
      return "scalar";
    case Backend::kAvx2:
      return "avx2";
  }
  return "unknown";
}

ScopedBackend::ScopedBackend(Backend backend) : previous_(active_backend()) { select(backend); }

ScopedBackend::~ScopedBackend() { select(previous_); }

}  // namespace choiscope::kernels
