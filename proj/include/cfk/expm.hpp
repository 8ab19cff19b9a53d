#pragma once

// Matrix exponential for small dense complex matrices by scaling-and-squaring
// with a fixed-order Taylor evaluation. Intended for matrices of modest norm
// (the angular-operator blocks have norm O(k)).

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace cfk {

inline Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a, int order = 12) {
  if (a.rows() != a.cols()) throw std::invalid_argument("expm: matrix must be square");
  const double nrm = a.cwiseAbs().rowwise().sum().maxCoeff();  // infinity norm
  int s = 0;
  double scaled = nrm;
  while (scaled > 0.25) {
    scaled *= 0.5;
    ++s;
    if (s > 60) throw std::domain_error("expm: norm too large");
  }
  Eigen::MatrixXcd b = a / std::pow(2.0, s);
  Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(a.rows(), a.cols());
  Eigen::MatrixXcd sum = term;
  for (int j = 1; j <= order; ++j) {
    term = (term * b) / double(j);
    sum += term;
  }
  for (int j = 0; j < s; ++j) sum = sum * sum;
  return sum;
}

}  // namespace cfk
