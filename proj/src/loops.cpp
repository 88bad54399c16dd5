#include "holocert/holonomy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "holocert/errors.hpp"

namespace holocert {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const cd kI{0.0, 1.0};

double distance_to_line(cd a, cd b, cd p) {
  const cd ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(p - a);
  const double t = std::clamp(((p - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

}  // namespace

Segment Segment::line(cd a, cd b) {
  Segment s;
  s.kind = Kind::Line;
  s.from = a;
  s.to = b;
  return s;
}

Segment Segment::arc(cd center, double radius, double theta0, double sweep) {
  Segment s;
  s.kind = Kind::Arc;
  s.center = center;
  s.radius = radius;
  s.theta0 = theta0;
  s.sweep = sweep;
  return s;
}

double Segment::length() const {
  return kind == Kind::Line ? std::abs(to - from) : std::abs(sweep) * radius;
}

cd Segment::point(double s) const {
  if (kind == Kind::Line) {
    const double len = length();
    return len == 0.0 ? from : from + (to - from) * (s / len);
  }
  const double dir = sweep < 0 ? -1.0 : 1.0;
  return center + radius * std::exp(kI * (theta0 + dir * s / radius));
}

cd Segment::tangent(double s) const {
  if (kind == Kind::Line) {
    const double len = length();
    return len == 0.0 ? cd{} : (to - from) / len;
  }
  const double dir = sweep < 0 ? -1.0 : 1.0;
  return dir * kI * std::exp(kI * (theta0 + dir * s / radius));
}

Segment Segment::reversed() const {
  if (kind == Kind::Line) return line(to, from);
  return arc(center, radius, theta0 + sweep, -sweep);
}

Loop Loop::reversed() const {
  Loop out;
  out.basepoint = basepoint;
  out.label = label + "^-1";
  for (auto it = segments.rbegin(); it != segments.rend(); ++it) out.segments.push_back(it->reversed());
  return out;
}

Loop Loop::then(const Loop& next) const {
  Loop out = *this;
  out.label = label + "." + next.label;
  out.segments.insert(out.segments.end(), next.segments.begin(), next.segments.end());
  return out;
}

int Loop::winding_number(cd pt, int samples_per_segment) const {
  double total = 0.0;
  for (const auto& seg : segments) {
    const double len = seg.length();
    if (len == 0.0) continue;
    double prev = std::arg(seg.point(0.0) - pt);
    for (int k = 1; k <= samples_per_segment; ++k) {
      const double cur = std::arg(seg.point(len * k / samples_per_segment) - pt);
      double step = cur - prev;
      if (step > std::numbers::pi) step -= kTwoPi;
      if (step < -std::numbers::pi) step += kTwoPi;
      total += step;
      prev = cur;
    }
  }
  return static_cast<int>(std::lround(total / kTwoPi));
}

double Loop::distance_to(cd pt) const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& seg : segments) {
    if (seg.kind == Segment::Kind::Line) {
      best = std::min(best, distance_to_line(seg.from, seg.to, pt));
    } else if (std::abs(seg.sweep) >= kTwoPi) {
      best = std::min(best, std::abs(std::abs(pt - seg.center) - seg.radius));
    } else {
      const int n = 1024;
      for (int k = 0; k <= n; ++k) best = std::min(best, std::abs(seg.point(seg.length() * k / n) - pt));
    }
  }
  return best;
}

double Loop::length() const {
  double total = 0.0;
  for (const auto& seg : segments) total += seg.length();
  return total;
}

LoopSet build_loops(double radius) {
  if (!(radius > 0.0 && radius < 1.0)) throw Error("loop radius must lie in (0, 1)");
  LoopSet out;
  const cd left{-1.0 + radius, 0.0};
  const cd right{1.0 - radius, 0.0};
  out.mu1.label = "mu1";
  out.mu1.segments = {Segment::line(0.0, left), Segment::arc(-1.0, radius, 0.0, kTwoPi), Segment::line(left, 0.0)};
  out.mu2.label = "mu2";
  out.mu2.segments = {Segment::line(0.0, right), Segment::arc(1.0, radius, std::numbers::pi, kTwoPi),
                      Segment::line(right, 0.0)};
  const Loop mu1i = out.mu1.reversed();
  const Loop mu2i = out.mu2.reversed();
  out.gamma1 = out.mu2.then(out.mu1).then(mu2i).then(mu1i);
  out.gamma1.label = "gamma1";
  out.gamma2 = out.mu2.then(out.mu1).then(out.mu1).then(mu2i).then(mu1i).then(mu1i);
  out.gamma2.label = "gamma2";
  return out;
}

}  // namespace holocert
