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

#include "choiscope/kernels/kernels.hpp"

namespace choiscope::kernels::scalar {

// Plain loops with the real/imaginary arithmetic spelled out, so the
// reference does not depend on the library's complex multiply (which may
// take the slow NaN-checking path).

Complex dotc(const Complex* x, const Complex* y, std::size_t n) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double xr = x[k].real(), xi = x[k].imag();
    const double yr = y[k].real(), yi = y[k].imag();
    re += xr * yr + xi * yi;
    im += xr * yi - xi * yr;
  }
  return {re, im};
}

Complex dotu(const Complex* x, const Complex* y, std::size_t n) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double xr = x[k].real(), xi = x[k].imag();
    const double yr = y[k].real(), yi = y[k].imag();
    re += xr * yr - xi * yi;
    im += xr * yi + xi * yr;
  }
  return {re, im};
}

void axpy(Complex alpha, const Complex* x, Complex* y, std::size_t n) {
  const double ar = alpha.real(), ai = alpha.imag();
  for (std::size_t k = 0; k < n; ++k) {
    const double xr = x[k].real(), xi = x[k].imag();
    y[k] = Complex(y[k].real() + ar * xr - ai * xi, y[k].imag() + ar * xi + ai * xr);
  }
}

void scale(Complex alpha, const Complex* x, Complex* y, std::size_t n) {
  const double ar = alpha.real(), ai = alpha.imag();
  for (std::size_t k = 0; k < n; ++k) {
    const double xr = x[k].real(), xi = x[k].imag();
    y[k] = Complex(ar * xr - ai * xi, ar * xi + ai * xr);
  }
}

}  // namespace choiscope::kernels::scalar
