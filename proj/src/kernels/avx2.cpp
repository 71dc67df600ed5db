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

// Compiled with -mavx2 -mfma. Nothing here may be called before
// avx2_supported() has returned true.

#include <immintrin.h>

#include "choiscope/kernels/kernels.hpp"

namespace choiscope::kernels::avx2 {
namespace {

// Complex values are stored [re, im], two per 256-bit register.
inline __m256d load2(const Complex* p) {
  return _mm256_loadu_pd(reinterpret_cast<const double*>(p));
}

inline void store2(Complex* p, __m256d v) {
  _mm256_storeu_pd(reinterpret_cast<double*>(p), v);
}

// (a, b, c, d) -> (b, a, d, c)
inline __m256d swap_re_im(__m256d v) { return _mm256_permute_pd(v, 0b0101); }

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// Sum of even lanes minus sum of odd lanes.
inline double alt_sum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_sub_sd(s, _mm_unpackhi_pd(s, s)));
}

// Accumulates the two products every complex dot needs:
//   straight = (xr*yr, xi*yi, ...), crossed = (xr*yi, xi*yr, ...)
struct DotAccum {
  __m256d straight = _mm256_setzero_pd();
  __m256d crossed = _mm256_setzero_pd();
};

inline void dot_block(DotAccum& acc, __m256d x, __m256d y) {
  acc.straight = _mm256_fmadd_pd(x, y, acc.straight);
  acc.crossed = _mm256_fmadd_pd(x, swap_re_im(y), acc.crossed);
}

DotAccum dot_accumulate(const Complex* x, const Complex* y, std::size_t n, std::size_t& done) {
  DotAccum a0, a1;
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    dot_block(a0, load2(x + k), load2(y + k));
    dot_block(a1, load2(x + k + 2), load2(y + k + 2));
  }
  for (; k + 2 <= n; k += 2) {
    dot_block(a0, load2(x + k), load2(y + k));
  }
  done = k;
  return {_mm256_add_pd(a0.straight, a1.straight), _mm256_add_pd(a0.crossed, a1.crossed)};
}

}  // namespace

Complex dotc(const Complex* x, const Complex* y, std::size_t n) {
  std::size_t done = 0;
  const DotAccum acc = dot_accumulate(x, y, n, done);
  double re = hsum(acc.straight);
  // conj(x) y: im = xr*yi - xi*yr
  double im = alt_sum(acc.crossed);
  for (std::size_t k = done; k < n; ++k) {
    re += x[k].real() * y[k].real() + x[k].imag() * y[k].imag();
    im += x[k].real() * y[k].imag() - x[k].imag() * y[k].real();
  }
  return {re, im};
}

Complex dotu(const Complex* x, const Complex* y, std::size_t n) {
  std::size_t done = 0;
  const DotAccum acc = dot_accumulate(x, y, n, done);
  double re = alt_sum(acc.straight);
  double im = hsum(acc.crossed);
  for (std::size_t k = done; k < n; ++k) {
    re += x[k].real() * y[k].real() - x[k].imag() * y[k].imag();
    im += x[k].real() * y[k].imag() + x[k].imag() * y[k].real();
  }
  return {re, im};
}

namespace {

// alpha * x for two packed complex values: fmaddsub gives
// (ar*xr - ai*xi, ar*xi + ai*xr) per pair.
inline __m256d cmul(__m256d ar, __m256d ai, __m256d x) {
  return _mm256_fmaddsub_pd(ar, x, _mm256_mul_pd(ai, swap_re_im(x)));
}

}  // namespace

void axpy(Complex alpha, const Complex* x, Complex* y, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    store2(y + k, _mm256_add_pd(load2(y + k), cmul(ar, ai, load2(x + k))));
  }
  for (; k < n; ++k) {
    const double xr = x[k].real(), xi = x[k].imag();
    y[k] = Complex(y[k].real() + alpha.real() * xr - alpha.imag() * xi,
                   y[k].imag() + alpha.real() * xi + alpha.imag() * xr);
  }
}

void scale(Complex alpha, const Complex* x, Complex* y, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    store2(y + k, cmul(ar, ai, load2(x + k)));
  }
  for (; k < n; ++k) {
    const double xr = x[k].real(), xi = x[k].imag();
    y[k] = Complex(alpha.real() * xr - alpha.imag() * xi, alpha.real() * xi + alpha.imag() * xr);
  }
}

}  // namespace choiscope::kernels::avx2
