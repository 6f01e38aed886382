#pragma once

// Littelmann paths with exact rational data, and the root operators.
//
// A path is a list of segments (direction, duration) starting at 0; the
// durations sum to 1. Directions are rational vectors in the
// fundamental-weight basis. Paths compare by their normalized form: no
// zero-duration segments and no two adjacent segments with equal direction.
//
// Root operators, with h(t) = <alpha_i^vee, p(t)> and m = min h (an integer
// for LS paths):
//   f_i: defined iff h(1) - m >= 1. Let t0 be the LAST time h(t0) = m and t1
//        the FIRST time after t0 with h(t1) = m + 1. Reflect the piece on
//        [t0, t1] by s_i; the tail is translated by -alpha_i.
//   e_i: defined iff m <= -1. Let t1 be the FIRST time h(t1) = m and t0 the
//        LAST time before t1 with h(t0) = m + 1. Reflect the piece on [t0, t1].
// Hence phi_i(p) = h(1) - m and eps_i(p) = -m.

#include "crystals/cartan.hpp"
#include "crystals/error.hpp"
#include "crystals/rational.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace crystals {

struct Segment {
  RationalVector direction;
  Rational duration;
};

class LSPath {
 public:
  LSPath() = default;
  explicit LSPath(std::vector<Segment> segments) : segs_(std::move(segments)) { normalize(); }

  /// t -> t * lambda.
  static LSPath straight(const Weight& lambda) {
    if (!lambda.is_dominant()) throw InputError("straight path needs a dominant weight, got " + lambda.str());
    RationalVector dir(lambda.size());
    for (std::size_t k = 0; k < lambda.size(); ++k) dir[k] = lambda[k];
    return LSPath({Segment{std::move(dir), Rational(1)}});
  }

  const std::vector<Segment>& segments() const { return segs_; }

  RationalVector endpoint() const {
    RationalVector p(segs_.empty() ? 0 : segs_.front().direction.size(), Rational(0));
    for (const auto& s : segs_) {
      for (std::size_t k = 0; k < p.size(); ++k) p[k] += s.direction[k] * s.duration;
    }
    return p;
  }

  Weight integral_endpoint() const {
    const auto p = endpoint();
    Weight w(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) w[k] = to_long(p[k]);
    return w;
  }

  /// This path then the other one, each traversed at double speed.
  LSPath concatenate(const LSPath& other) const {
    std::vector<Segment> out;
    for (const auto* part : {this, &other}) {
      for (const auto& s : part->segs_) {
        Segment t = s;
        for (auto& x : t.direction) x *= 2;
        t.duration /= 2;
        out.push_back(std::move(t));
      }
    }
    return LSPath(std::move(out));
  }

  std::string str() const {
    std::string out;
    for (const auto& s : segs_) {
      out += '(';
      for (std::size_t k = 0; k < s.direction.size(); ++k) {
        if (k) out += ',';
        out += s.direction[k].str();
      }
      out += ")x" + s.duration.str() + ' ';
    }
    if (!out.empty()) out.pop_back();
    return out;
  }

  friend int compare(const LSPath& a, const LSPath& b) {
    if (a.segs_.size() != b.segs_.size()) return a.segs_.size() < b.segs_.size() ? -1 : 1;
    for (std::size_t s = 0; s < a.segs_.size(); ++s) {
      const auto& x = a.segs_[s];
      const auto& y = b.segs_[s];
      for (std::size_t k = 0; k < x.direction.size(); ++k) {
        if (x.direction[k] != y.direction[k]) return x.direction[k] < y.direction[k] ? -1 : 1;
      }
      if (x.duration != y.duration) return x.duration < y.duration ? -1 : 1;
    }
    return 0;
  }
  friend bool operator==(const LSPath& a, const LSPath& b) { return compare(a, b) == 0; }
  friend bool operator<(const LSPath& a, const LSPath& b) { return compare(a, b) < 0; }

 private:
  void normalize() {
    std::vector<Segment> out;
    for (auto& s : segs_) {
      if (s.duration == 0) continue;
      if (!out.empty() && out.back().direction == s.direction) {
        out.back().duration += s.duration;
      } else {
        out.push_back(std::move(s));
      }
    }
    segs_ = std::move(out);
  }

  std::vector<Segment> segs_;
};

namespace detail {

struct HeightProfile {
  std::vector<Rational> times;    // breakpoints, times.front() = 0, times.back() = 1
  std::vector<Rational> heights;  // h at each breakpoint
  Rational minimum;
};

inline HeightProfile height_profile(const LSPath& p, std::size_t i) {
  HeightProfile hp;
  hp.times.push_back(0);
  hp.heights.push_back(0);
  for (const auto& s : p.segments()) {
    hp.times.push_back(hp.times.back() + s.duration);
    hp.heights.push_back(hp.heights.back() + s.direction[i] * s.duration);
  }
  hp.minimum = *std::min_element(hp.heights.begin(), hp.heights.end());
  if (!is_integral(hp.minimum)) throw InvariantError("non-integral minimum of height function: not an LS path");
  return hp;
}

// Time at which the linear piece on segment k reaches value target.
inline Rational crossing(const LSPath& p, const HeightProfile& hp, std::size_t k, std::size_t i, const Rational& target) {
  const Rational slope = p.segments()[k].direction[i];
  return hp.times[k] + (target - hp.heights[k]) / slope;
}

// Splits p at t0 and t1 and reflects the middle piece by s_i.
inline LSPath reflect_between(const RootDatum& d, std::size_t i, const LSPath& p, const Rational& t0, const Rational& t1) {
  std::vector<Segment> out;
  Rational start = 0;
  for (const auto& s : p.segments()) {
    const Rational end = start + s.duration;
    const Rational cuts[4] = {start, std::max(start, std::min(end, t0)), std::max(start, std::min(end, t1)), end};
    for (int piece = 0; piece < 3; ++piece) {
      const Rational len = cuts[piece + 1] - cuts[piece];
      if (len <= 0) continue;
      out.push_back(Segment{piece == 1 ? d.reflect(i, s.direction) : s.direction, len});
    }
    start = end;
  }
  return LSPath(std::move(out));
}

}  // namespace detail

inline long path_eps(const LSPath& p, std::size_t i) {
  if (p.segments().empty()) return 0;
  return -to_long(detail::height_profile(p, i).minimum);
}

inline long path_phi(const LSPath& p, std::size_t i) {
  if (p.segments().empty()) return 0;
  const auto hp = detail::height_profile(p, i);
  return to_long(hp.heights.back() - hp.minimum);
}

inline std::optional<LSPath> root_f(const RootDatum& d, std::size_t i, const LSPath& p) {
  if (p.segments().empty()) return std::nullopt;
  const auto hp = detail::height_profile(p, i);
  const Rational& m = hp.minimum;
  if (hp.heights.back() - m < 1) return std::nullopt;
  std::size_t k0 = 0;
  for (std::size_t k = 0; k < hp.heights.size(); ++k) {
    if (hp.heights[k] == m) k0 = k;
  }
  const Rational target = m + 1;
  for (std::size_t k = k0; k + 1 < hp.heights.size(); ++k) {
    if (hp.heights[k + 1] >= target) {
      return detail::reflect_between(d, i, p, hp.times[k0], detail::crossing(p, hp, k, i, target));
    }
  }
  throw InvariantError("root_f: height never reaches min + 1");
}

inline std::optional<LSPath> root_e(const RootDatum& d, std::size_t i, const LSPath& p) {
  if (p.segments().empty()) return std::nullopt;
  const auto hp = detail::height_profile(p, i);
  const Rational& m = hp.minimum;
  if (m > -1) return std::nullopt;
  std::size_t k1 = 0;
  while (hp.heights[k1] != m) ++k1;
  const Rational target = m + 1;
  for (std::size_t k = k1; k-- > 0;) {
    if (hp.heights[k] >= target) {
      return detail::reflect_between(d, i, p, detail::crossing(p, hp, k, i, target), hp.times[k1]);
    }
  }
  throw InvariantError("root_e: height never reaches min + 1 before the minimum");
}

}  // namespace crystals
