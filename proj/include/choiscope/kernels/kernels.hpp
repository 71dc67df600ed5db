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

#pragma once

// Complex BLAS-1 style kernels used by the contraction loops (HS inner
// products, Kronecker products, Choi contractions, see-saw reductions).
//
// Every kernel exists as a portable scalar reference and, on x86-64, as an
// AVX2+FMA variant. The active table is chosen once at first use from the
// CPU features; CHOISCOPE_KERNELS=scalar in the environment forces the
// reference path. This header deliberately avoids Eigen so that the AVX2
// translation unit never instantiates Eigen templates under different ISA
// flags than the rest of the library.

#include <complex>
#include <cstddef>
#include <string_view>

namespace choiscope::kernels {

using Complex = std::complex<double>;

enum class Backend { kScalar, kAvx2 };

struct KernelTable {
  Backend backend;
  // sum_k conj(x[k]) * y[k]
  Complex (*dotc)(const Complex* x, const Complex* y, std::size_t n);
  // sum_k x[k] * y[k]
  Complex (*dotu)(const Complex* x, const Complex* y, std::size_t n);
  // y[k] += alpha * x[k]
  void (*axpy)(Complex alpha, const Complex* x, Complex* y, std::size_t n);
  // y[k] = alpha * x[k]
  void (*scale)(Complex alpha, const Complex* x, Complex* y, std::size_t n);
};

const KernelTable& scalar_table();
// nullptr when the AVX2 path was not compiled in.
const KernelTable* avx2_table();

bool avx2_supported();

// The table used by the library. Thread-safe.
const KernelTable& active();
Backend active_backend();

// Switch the process-wide backend. Throws ArgumentError if unavailable.
void select(Backend backend);

std::string_view backend_name(Backend backend);

// RAII override used by equivalence tests.
class ScopedBackend {
 public:
  explicit ScopedBackend(Backend backend);
  ~ScopedBackend();
  ScopedBackend(const ScopedBackend&) = delete;
  ScopedBackend& operator=(const ScopedBackend&) = delete;

 private:
  Backend previous_;
};

namespace scalar {
Complex dotc(const Complex* x, const Complex* y, std::size_t n);
Complex dotu(const Complex* x, const Complex* y, std::size_t n);
void axpy(Complex alpha, const Complex* x, Complex* y, std::size_t n);
void scale(Complex alpha, const Complex* x, Complex* y, std::size_t n);
}  // namespace scalar

namespace avx2 {
Complex dotc(const Complex* x, const Complex* y, std::size_t n);
Complex dotu(const Complex* x, const Complex* y, std::size_t n);
void axpy(Complex alpha, const Complex* x, Complex* y, std::size_t n);
void scale(Complex alpha, const Complex* x, Complex* y, std::size_t n);
}  // namespace avx2

}  // namespace choiscope::kernels
