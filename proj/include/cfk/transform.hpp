#pragma once

// Applies the kernel transform to sampled multichannel functions by tensor
// Gauss-Hermite quadrature, with the e^{-|x|^2} weight factored out
// analytically, plus the Gaussian-invariance diagnostic.

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include "cfk/clifford.hpp"
#include "cfk/kernel.hpp"
#include "cfk/quadrature.hpp"

namespace cfk {

struct SampledFunction {
  int m = 2;
  int order = 0;
  std::vector<double> axis_nodes;
  std::vector<double> axis_weights;  // quadrature weight times e^{x^2}
  std::vector<Multivector<cplx>> values;  // lexicographic over axes

  std::size_t node_count() const {
    std::size_t n = 1;
    for (int a = 0; a < m; ++a) n *= axis_nodes.size();
    return n;
  }

  template <class F>
  static SampledFunction sample(int m, int order, F&& fn) {
    if (m < 2 || m > 4) throw std::invalid_argument("SampledFunction: dim must be 2..4");
    if (m == 4 && order > 24)
      throw std::invalid_argument("SampledFunction: order capped at 24 per axis for dim 4");
    SampledFunction f;
    f.m = m;
    f.order = order;
    auto rule = gauss_hermite(order);
    f.axis_nodes = rule.nodes;
    f.axis_weights.resize(order);
    for (int i = 0; i < order; ++i)
      f.axis_weights[i] = rule.weights[i] * std::exp(rule.nodes[i] * rule.nodes[i]);
    f.values.reserve(f.node_count());
    std::vector<int> idx(m, 0);
    std::vector<double> x(m);
    for (std::size_t flat = 0; flat < f.node_count(); ++flat) {
      for (int a = 0; a < m; ++a) x[a] = f.axis_nodes[idx[a]];
      f.values.push_back(fn(x));
      for (int a = m - 1; a >= 0; --a) {
        if (++idx[a] < order) break;
        idx[a] = 0;
      }
    }
    return f;
  }

  static SampledFunction gaussian(int m, int order) {
    return sample(m, order, [m](const std::vector<double>& x) {
      double r2 = 0;
      for (double c : x) r2 += c * c;
      return Multivector<cplx>::scalar(m, std::exp(-0.5 * r2));
    });
  }
};

// (2 pi)^{-m/2} sum_nodes w_node K(x_node, y) f(x_node), kernel on the left.
inline std::vector<Mv> cft_apply(const SampledFunction& f, double p,
                                 const std::vector<std::vector<double>>& targets) {
  int m = f.m;
  if (f.values.size() != f.node_count())
    throw std::invalid_argument("cft_apply: grid and value list disagree");
  std::size_t total = f.node_count();
  int n = f.order;

  // skip nodes whose weighted contribution is below roundoff
  std::vector<double> wnorm(total);
  std::vector<char> scalar_only(total);
  {
    std::vector<int> idx(m, 0);
    for (std::size_t flat = 0; flat < total; ++flat) {
      double w = 1.0;
      for (int a = 0; a < m; ++a) w *= f.axis_weights[idx[a]];
      wnorm[flat] = w * f.values[flat].norm();
      bool s = true;
      for (std::size_t b = 1; b < f.values[flat].size(); ++b)
        if (f.values[flat][b] != cplx(0.0)) s = false;
      scalar_only[flat] = s;
      for (int a = m - 1; a >= 0; --a) {
        if (++idx[a] < n) break;
        idx[a] = 0;
      }
    }
  }

  double norm_const = std::pow(2.0 * M_PI, -0.5 * m);
  std::vector<Mv> out;
  out.reserve(targets.size());
  std::vector<int> idx(m);
  std::vector<double> x(m);
  for (const auto& y : targets) {
    if (static_cast<int>(y.size()) != m)
      throw std::invalid_argument("cft_apply: target arity mismatch");
    Mv acc(m);
    std::fill(idx.begin(), idx.end(), 0);
    for (std::size_t flat = 0; flat < total; ++flat) {
      if (wnorm[flat] > 1e-15) {
        double w = 1.0;
        for (int a = 0; a < m; ++a) {
          x[a] = f.axis_nodes[idx[a]];
          w *= f.axis_weights[idx[a]];
        }
        KernelRequest req;
        req.m = m;
        req.p = p;
        req.frame = frame_of(x, y);
        Mv K = embed(kernel(req).value, x, y);
        if (scalar_only[flat]) {
          acc += K * (w * f.values[flat][0]);
        } else {
          Mv term = K * f.values[flat];
          acc += term * cplx(w);
        }
      }
      for (int a = m - 1; a >= 0; --a) {
        if (++idx[a] < n) break;
        idx[a] = 0;
      }
    }
    acc *= cplx(norm_const);
    out.push_back(acc);
  }
  return out;
}

struct InvarianceReport {
  double max_rel = 0.0;
  double mean_rel = 0.0;
  int targets = 0;
};

// Pushes the standard Gaussian through the transform and reports deviation
// from e^{-|y|^2/2} over shells of a deterministic direction set.
inline InvarianceReport gaussian_invariance_report(int m, double p, int grid_order,
                                                   double target_radius) {
  auto f = SampledFunction::gaussian(m, grid_order);
  std::mt19937 rng(2026);
  std::normal_distribution<double> gauss;
  int ndir = m == 2 ? 16 : 12, nshell = 4;
  std::vector<std::vector<double>> targets;
  for (int d = 0; d < ndir; ++d) {
    std::vector<double> dir(m);
    double nrm = 0;
    do {
      nrm = 0;
      for (auto& c : dir) {
        c = gauss(rng);
        nrm += c * c;
      }
    } while (nrm < 1e-3);
    nrm = std::sqrt(nrm);
    for (int k = 1; k <= nshell; ++k) {
      std::vector<double> y(m);
      double r = target_radius * k / nshell;
      for (int a = 0; a < m; ++a) y[a] = dir[a] / nrm * r;
      targets.push_back(y);
    }
  }
  auto out = cft_apply(f, p, targets);
  InvarianceReport rep;
  rep.targets = static_cast<int>(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) {
    double r2 = 0;
    for (double c : targets[i]) r2 += c * c;
    double expect = std::exp(-0.5 * r2);
    Mv diff = out[i];
    diff[0] -= expect;
    double rel = diff.norm() / expect;
    rep.max_rel = std::max(rep.max_rel, rel);
    rep.mean_rel += rel;
  }
  rep.mean_rel /= rep.targets;
  return rep;
}

}  // namespace cfk
