// SPDX-License-Identifier: Apache-2.0
#include "ftrsec/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

namespace ftrsec {

namespace {

using Rule = boost::math::quadrature::gauss_kronrod<double, 31>;

struct Segment {
  double a;
  double b;
  double value;
  double error;
  double l1;
  unsigned depth;
  bool operator<(const Segment& o) const { return error < o.error; }
};

// Global adaptive bisection: the segment with the largest error estimate is
// split until the summed error drops below rel_tol times the summed L1 norm.
// Panels carrying negligible mass therefore stop early instead of chasing
// their own relative tolerance.
QuadratureResult adaptive(const std::function<double(double)>& f,
                          const std::vector<std::pair<double, double>>& panels,
                          const QuadratureOptions& opts) {
  auto eval = [&](double a, double b, unsigned depth) {
    Segment s{a, b, 0.0, 0.0, 0.0, depth};
    s.value = Rule::integrate(f, a, b, 0, 0.0, &s.error, &s.l1);
    if (!std::isfinite(s.value)) s.error = std::numeric_limits<double>::infinity();
    return s;
  };
  std::priority_queue<Segment> queue;
  std::vector<Segment> done;
  for (const auto& [a, b] : panels) {
    if (b > a) queue.push(eval(a, b, 0));
  }
  const std::size_t max_segments = std::size_t{1} << std::min(opts.max_depth, 16u);
  auto totals = [&] {
    double value = 0.0, error = 0.0, l1 = 0.0;
    auto add = [&](const Segment& s) {
      value += s.value;
      error += s.error;
      l1 += s.l1;
    };
    for (const auto& s : done) add(s);
    auto copy = queue;
    while (!copy.empty()) {
      add(copy.top());
      copy.pop();
    }
    return std::array<double, 3>{value, error, l1};
  };
  // Running sums are updated incrementally; totals() recomputes them exactly.
  auto [value0, error, l1] = totals();
  (void)value0;
  while (!queue.empty() && error > opts.rel_tol * l1 && queue.size() + done.size() < max_segments) {
    const Segment s = queue.top();
    queue.pop();
    if (s.depth >= opts.max_depth || !(s.b - s.a > 4.0 * std::numeric_limits<double>::epsilon() *
                                                       std::max(std::abs(s.a), std::abs(s.b)))) {
      done.push_back(s);
      continue;
    }
    const double mid = 0.5 * (s.a + s.b);
    const Segment left = eval(s.a, mid, s.depth + 1);
    const Segment right = eval(mid, s.b, s.depth + 1);
    error += left.error + right.error - s.error;
    l1 += left.l1 + right.l1 - s.l1;
    queue.push(left);
    queue.push(right);
  }
  const auto t = totals();
  QuadratureResult r;
  r.value = t[0];
  r.abs_error = t[1];
  r.converged = std::isfinite(r.value) && t[1] <= std::max(opts.rel_tol * t[2], 1e-300) * 10.0;
  return r;
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& opts) {
  if (!(b > a)) {
    if (a == b) return {};
    throw std::invalid_argument("integrate: expected a <= b");
  }
  if (std::isinf(b)) {
    const double scale = std::max(1.0, std::abs(a));
    return adaptive(
        [&](double t) {
          const double s = 1.0 - t;
          return f(a + scale * t / s) * scale / (s * s);
        },
        {{0.0, 1.0}}, opts);
  }
  return adaptive(f, {{a, b}}, opts);
}

QuadratureResult integrate_half_line(const std::function<double(double)>& f, double scale,
                                     const QuadratureOptions& opts) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw std::invalid_argument("integrate_half_line: scale must be positive and finite");
  }
  // Panels at scale * {0, 1, 4, 16, 64}, then the tail mapped by
  // g = 64 scale + scale t / (1 - t), all driven by one error budget.
  constexpr std::array<double, 5> edges{0.0, 1.0, 4.0, 16.0, 64.0};
  const double tail_start = edges.back() * scale;
  std::vector<std::pair<double, double>> panels;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) panels.emplace_back(edges[i], edges[i + 1]);
  panels.emplace_back(edges.back(), edges.back() + 1.0);
  // Variable u: u < 64 is g = u * scale; u in [64, 65) is the mapped tail.
  return adaptive(
      [&](double u) {
        if (u < edges.back()) return f(u * scale) * scale;
        const double t = u - edges.back();
        const double s = 1.0 - t;
        if (!(s > 0.0)) return 0.0;
        return f(tail_start + scale * t / s) * scale / (s * s);
      },
      panels, opts);
}

}  // namespace ftrsec
