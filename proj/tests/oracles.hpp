// Copyright 2026 The robgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Reference implementations that share no code with the library.

#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace robgate::oracle {

using Mat2 = Eigen::Matrix<std::complex<double>, 2, 2>;

// exp(a) by scaling and squaring with a 4th-order Taylor core.
inline Mat2 expm(const Mat2& a) {
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  double scale = 1.0;
  while (norm * scale > 1e-3) {
    scale *= 0.5;
    ++squarings;
  }
  const Mat2 b = a * scale;
  const Mat2 id = Mat2::Identity();
  const Mat2 b2 = b * b;
  Mat2 r = id + b + b2 / 2.0 + b2 * b / 6.0 + b2 * b2 / 24.0;
  for (int i = 0; i < squarings; ++i) r = r * r;
  return r;
}

inline Mat2 pauli_x() {
  Mat2 m;
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

inline Mat2 pauli_z() {
  Mat2 m;
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

// exp(-i (t/2) (omega X - delta Z)) through the series exponential.
inline Mat2 segment(double omega, double delta, double t) {
  const std::complex<double> i(0, 1);
  return expm(-i * (t / 2.0) * (omega * pauli_x() - delta * pauli_z()));
}

struct Seg {
  double omega, delta, t;
};

inline Mat2 product(const std::vector<Seg>& segs, double eps) {
  Mat2 u = Mat2::Identity();
  for (const auto& s : segs) u = segment(s.omega, s.delta + eps, s.t) * u;
  return u;
}

// dU/d(eps) at eps = 0 from the first-order Dyson integral, per segment
// integrated with composite Simpson on `panels` panels:
//   d/d eps exp(-i t H/2) = int_0^t exp(-i (t-s) H/2) (i Z/2) exp(-i s H/2) ds.
inline Mat2 dyson_first_order(const std::vector<Seg>& segs, int panels = 2000) {
  const std::complex<double> i(0, 1);
  const Mat2 dz = i * pauli_z() / 2.0;
  std::vector<Mat2> us;
  for (const auto& s : segs) us.push_back(segment(s.omega, s.delta, s.t));
  Mat2 total = Mat2::Zero();
  for (std::size_t k = 0; k < segs.size(); ++k) {
    const auto& s = segs[k];
    Mat2 integral = Mat2::Zero();
    const double h = s.t / panels;
    for (int j = 0; j <= panels; ++j) {
      const double x = j * h;
      const double w = (j == 0 || j == panels) ? 1.0 : (j % 2 ? 4.0 : 2.0);
      integral += w * segment(s.omega, s.delta, s.t - x) * dz * segment(s.omega, s.delta, x);
    }
    integral *= h / 3.0;
    Mat2 after = Mat2::Identity();
    for (std::size_t j = k + 1; j < segs.size(); ++j) after = us[j] * after;
    Mat2 before = Mat2::Identity();
    for (std::size_t j = 0; j < k; ++j) before = us[j] * before;
    total += after * integral * before;
  }
  return total;
}

}  // namespace robgate::oracle
