#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <string_view>

#include "svdgp/errors.hpp"

namespace svdgp {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Wraps an angle into [0, 2*pi).
inline double normalize_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

// Planar position plus heading, heading stored normalized to [0, 2*pi).
struct Pose {
  double x = 0.0;
  double y = 0.0;
  double heading = 0.0;

  Pose() = default;
  Pose(double px, double py, double h) : x(px), y(py), heading(normalize_angle(h)) {
    if (!std::isfinite(px) || !std::isfinite(py) || !std::isfinite(h)) {
      throw ValidationError("Pose: coordinates must be finite");
    }
  }

  friend bool operator==(const Pose&, const Pose&) = default;
};

inline double euclidean(const Pose& a, const Pose& b) {
  return std::hypot(b.x - a.x, b.y - a.y);
}

// Minimum turn radius of the vehicle, strictly positive.
struct TurnRadius {
  double r;
  explicit TurnRadius(double radius) : r(radius) {
    if (!(radius > 0.0) || !std::isfinite(radius)) {
      throw ValidationError("TurnRadius: radius must be strictly positive");
    }
  }
  friend bool operator==(const TurnRadius&, const TurnRadius&) = default;
};

enum class DubinsWord { LSL, RSR, LSR, RSL, RLR, LRL };

inline std::string_view to_string(DubinsWord w) {
  switch (w) {
    case DubinsWord::LSL: return "LSL";
    case DubinsWord::RSR: return "RSR";
    case DubinsWord::LSR: return "LSR";
    case DubinsWord::RSL: return "RSL";
    case DubinsWord::RLR: return "RLR";
    case DubinsWord::LRL: return "LRL";
  }
  return "???";
}

// A shortest curvature-bounded path: three segments, each an arc or a straight
// line, selected from the six admissible word families.
struct DubinsPath {
  DubinsWord word = DubinsWord::LSL;
  std::array<double, 3> segment_lengths{0.0, 0.0, 0.0};
  double total = 0.0;
};

namespace detail {

// Segment lengths below this are floating-point noise from the word formulas
// and are clamped to zero so degenerate families are not rejected.
inline constexpr double kDegenerateSegment = 1e-12;

struct CanonicalForm {
  double d;      // center distance in turn-radius units
  double alpha;  // start heading relative to the center line
  double beta;   // end heading relative to the center line
  double sa, ca, sb, cb, c_ab;
};

inline CanonicalForm canonicalize(const Pose& a, const Pose& b, double r) {
  CanonicalForm f{};
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double dist = std::hypot(dx, dy);
  f.d = dist / r;
  const double theta = dist > 0.0 ? std::atan2(dy, dx) : 0.0;
  f.alpha = normalize_angle(a.heading - theta);
  f.beta = normalize_angle(b.heading - theta);
  f.sa = std::sin(f.alpha);
  f.ca = std::cos(f.alpha);
  f.sb = std::sin(f.beta);
  f.cb = std::cos(f.beta);
  f.c_ab = std::cos(f.alpha - f.beta);
  return f;
}

// Each word routine returns segment lengths (t, p, q) in turn-radius units,
// or false when the tangent construction does not exist for this geometry.
inline bool word_lsl(const CanonicalForm& f, std::array<double, 3>& out) {
  const double p_sq = 2.0 + f.d * f.d - 2.0 * f.c_ab + 2.0 * f.d * (f.sa - f.sb);
  if (p_sq < 0.0) return false;
  const double tmp = std::atan2(f.cb - f.ca, f.d + f.sa - f.sb);
  out = {normalize_angle(tmp - f.alpha), std::sqrt(p_sq), normalize_angle(f.beta - tmp)};
  return true;
}

inline bool word_rsr(const CanonicalForm& f, std::array<double, 3>& out) {
  const double p_sq = 2.0 + f.d * f.d - 2.0 * f.c_ab + 2.0 * f.d * (f.sb - f.sa);
  if (p_sq < 0.0) return false;
  const double tmp = std::atan2(f.ca - f.cb, f.d - f.sa + f.sb);
  out = {normalize_angle(f.alpha - tmp), std::sqrt(p_sq), normalize_angle(tmp - f.beta)};
  return true;
}

inline bool word_lsr(const CanonicalForm& f, std::array<double, 3>& out) {
  const double p_sq = -2.0 + f.d * f.d + 2.0 * f.c_ab + 2.0 * f.d * (f.sa + f.sb);
  if (p_sq < 0.0) return false;
  const double p = std::sqrt(p_sq);
  const double tmp = std::atan2(-f.ca - f.cb, f.d + f.sa + f.sb) - std::atan2(-2.0, p);
  out = {normalize_angle(tmp - f.alpha), p, normalize_angle(tmp - f.beta)};
  return true;
}

inline bool word_rsl(const CanonicalForm& f, std::array<double, 3>& out) {
  const double p_sq = -2.0 + f.d * f.d + 2.0 * f.c_ab - 2.0 * f.d * (f.sa + f.sb);
  if (p_sq < 0.0) return false;
  const double p = std::sqrt(p_sq);
  const double tmp = std::atan2(f.ca + f.cb, f.d - f.sa - f.sb) - std::atan2(2.0, p);
  out = {normalize_angle(f.alpha - tmp), p, normalize_angle(f.beta - tmp)};
  return true;
}

inline bool word_rlr(const CanonicalForm& f, std::array<double, 3>& out) {
  const double tmp = (6.0 - f.d * f.d + 2.0 * f.c_ab + 2.0 * f.d * (f.sa - f.sb)) / 8.0;
  if (std::fabs(tmp) > 1.0) return false;
  const double phi = std::atan2(f.ca - f.cb, f.d - f.sa + f.sb);
  const double p = normalize_angle(kTwoPi - std::acos(tmp));
  const double t = normalize_angle(f.alpha - phi + normalize_angle(p / 2.0));
  out = {t, p, normalize_angle(f.alpha - f.beta - t + normalize_angle(p))};
  return true;
}

inline bool word_lrl(const CanonicalForm& f, std::array<double, 3>& out) {
  const double tmp = (6.0 - f.d * f.d + 2.0 * f.c_ab + 2.0 * f.d * (f.sb - f.sa)) / 8.0;
  if (std::fabs(tmp) > 1.0) return false;
  const double phi = std::atan2(f.ca - f.cb, f.d + f.sa - f.sb);
  const double p = normalize_angle(kTwoPi - std::acos(tmp));
  const double t = normalize_angle(-f.alpha - phi + p / 2.0);
  out = {t, p, normalize_angle(normalize_angle(f.beta) - f.alpha - t + normalize_angle(p))};
  return true;
}

}  // namespace detail

// Shortest Dubins path from pose a to pose b with minimum turn radius r.
// Evaluates all six word families and keeps the minimum; families whose
// construction is infeasible for this pose pair are skipped.
inline DubinsPath dubins_shortest_path(const Pose& a, const Pose& b, TurnRadius r) {
  using WordFn = bool (*)(const detail::CanonicalForm&, std::array<double, 3>&);
  static constexpr std::array<std::pair<DubinsWord, WordFn>, 6> kWords{{
      {DubinsWord::LSL, detail::word_lsl},
      {DubinsWord::RSR, detail::word_rsr},
      {DubinsWord::LSR, detail::word_lsr},
      {DubinsWord::RSL, detail::word_rsl},
      {DubinsWord::RLR, detail::word_rlr},
      {DubinsWord::LRL, detail::word_lrl},
  }};

  const detail::CanonicalForm form = detail::canonicalize(a, b, r.r);
  DubinsPath best;
  best.total = std::numeric_limits<double>::infinity();
  for (const auto& [word, fn] : kWords) {
    std::array<double, 3> seg{};
    if (!fn(form, seg)) continue;
    double total = 0.0;
    for (double& s : seg) {
      s *= r.r;
      if (s < detail::kDegenerateSegment) s = 0.0;
      total += s;
    }
    if (total < best.total) {
      best.word = word;
      best.segment_lengths = seg;
      best.total = total;
    }
  }
  return best;
}

// Directed travel cost between oriented poses; asymmetric in general.
inline double cost(const Pose& a, const Pose& b, TurnRadius r) {
  return dubins_shortest_path(a, b, r).total;
}

}  // namespace svdgp
