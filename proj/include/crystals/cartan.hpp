#pragma once

// Finite-type root data: Cartan matrices, weights and coweights, Weyl group
// words, the Dynkin involution and the Weyl dimension formula.
//
// Node indices are 0-based in code. Everything user-facing (CLI, JSON,
// reduced words in reports) prints them 1-based.
//
// Conventions (Bourbaki):
//   cartan(i, j) = <alpha_i^vee, alpha_j>
//   simple root alpha_j in the fundamental-weight basis = column j
//   simple coroot alpha_i^vee in the fundamental-coweight basis = row i
//   B_n: alpha_n short, so <alpha_n^vee, alpha_{n-1}> = -2 and <alpha_{n-1}^vee, alpha_n> = -1
//   C_n: transpose of B_n (alpha_n long)
//   D_n: nodes n-1 and n both attached to n-2
//   G_2: alpha_1 short, <alpha_1^vee, alpha_2> = -3 and <alpha_2^vee, alpha_1> = -1

#include "crystals/error.hpp"
#include "crystals/rational.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace crystals {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', G = 'G' };

struct CartanType {
  Family family = Family::A;
  int rank = 1;

  /// Parses "A2", "b3", "G2", ... and validates the rank for the family.
  static CartanType parse(std::string_view text);

  std::string name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

  auto operator<=>(const CartanType&) const = default;
};

inline void validate(const CartanType& t) {
  const int r = t.rank;
  bool ok = false;
  switch (t.family) {
    case Family::A: ok = r >= 1; break;
    case Family::B:
    case Family::C: ok = r >= 2; break;
    case Family::D: ok = r >= 3; break;
    case Family::G: ok = r == 2; break;
  }
  if (!ok) throw InputError("invalid rank " + std::to_string(r) + " for type " + std::string(1, static_cast<char>(t.family)));
}

inline CartanType CartanType::parse(std::string_view text) {
  if (text.size() < 2) throw InputError("bad Cartan type '" + std::string(text) + "'");
  CartanType t;
  switch (std::toupper(static_cast<unsigned char>(text.front()))) {
    case 'A': t.family = Family::A; break;
    case 'B': t.family = Family::B; break;
    case 'C': t.family = Family::C; break;
    case 'D': t.family = Family::D; break;
    case 'G': t.family = Family::G; break;
    default: throw InputError("unknown Cartan family in '" + std::string(text) + "'");
  }
  const auto digits = text.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), t.rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw InputError("bad rank in Cartan type '" + std::string(text) + "'");
  }
  validate(t);
  return t;
}

/// Integer vector in a fixed basis; the tag keeps weights and coweights apart.
template <class Tag>
class Lattice {
 public:
  Lattice() = default;
  explicit Lattice(std::size_t n) : c_(n, 0) {}
  explicit Lattice(std::vector<long> c) : c_(std::move(c)) {}
  Lattice(std::initializer_list<long> c) : c_(c) {}

  static Lattice unit(std::size_t n, std::size_t i) {
    Lattice v(n);
    v.c_[i] = 1;
    return v;
  }

  /// Parses a comma-separated coefficient list such as "1,0,2".
  static Lattice parse(std::string_view text, std::size_t rank) {
    std::vector<long> c;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto next = std::min(text.find(',', pos), text.size());
      auto field = text.substr(pos, next - pos);
      while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
      while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
      long value = 0;
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
        throw InputError("bad coefficient list '" + std::string(text) + "'");
      }
      c.push_back(value);
      pos = next + 1;
    }
    if (c.size() != rank) {
      throw InputError("expected " + std::to_string(rank) + " coefficients in '" + std::string(text) + "'");
    }
    return Lattice(std::move(c));
  }

  std::size_t size() const { return c_.size(); }
  long operator[](std::size_t i) const { return c_[i]; }
  long& operator[](std::size_t i) { return c_[i]; }
  const std::vector<long>& coefficients() const { return c_; }
  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](long x) { return x == 0; });
  }
  bool is_dominant() const {
    return std::all_of(c_.begin(), c_.end(), [](long x) { return x >= 0; });
  }

  Lattice& operator+=(const Lattice& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Lattice& operator-=(const Lattice& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend Lattice operator+(Lattice a, const Lattice& b) { return a += b; }
  friend Lattice operator-(Lattice a, const Lattice& b) { return a -= b; }
  friend Lattice operator-(Lattice a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Lattice operator*(long k, Lattice a) {
    for (auto& x : a.c_) x *= k;
    return a;
  }

  friend bool operator==(const Lattice&, const Lattice&) = default;
  friend auto operator<=>(const Lattice&, const Lattice&) = default;

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(c_[i]);
    }
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Lattice& v) { return os << '(' << v.str() << ')'; }

 private:
  std::vector<long> c_;
};

struct WeightTag {};
struct CoweightTag {};
/// Weight in the fundamental-weight basis; coefficient i is the pairing with alpha_i^vee.
using Weight = Lattice<WeightTag>;
/// Coweight in the fundamental-coweight basis; coefficient i is the pairing with alpha_i.
using Coweight = Lattice<CoweightTag>;

/// Coefficient-wise comparison a <= b (the order used for dominant weights).
template <class Tag>
bool coefficientwise_le(const Lattice<Tag>& a, const Lattice<Tag>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

/// All dominant weights with every coefficient in [lo_i, hi_i], in lexicographic order.
inline std::vector<Weight> weight_box(const Weight& lo, const Weight& hi) {
  std::vector<Weight> out;
  if (!coefficientwise_le(lo, hi)) return out;
  Weight cur = lo;
  while (true) {
    out.push_back(cur);
    bool advanced = false;
    for (std::size_t i = cur.size(); i-- > 0;) {
      if (cur[i] < hi[i]) {
        ++cur[i];
        for (std::size_t j = i + 1; j < cur.size(); ++j) cur[j] = lo[j];
        advanced = true;
        break;
      }
    }
    if (!advanced) return out;
  }
}

/// Dominant weights with all coefficients <= max_coeff.
inline std::vector<Weight> dominant_box(std::size_t rank, long max_coeff) {
  Weight lo(rank);
  Weight hi(std::vector<long>(rank, max_coeff));
  return weight_box(lo, hi);
}

struct ReducedWord {
  std::vector<int> letters;

  ReducedWord() = default;
  explicit ReducedWord(std::vector<int> l) : letters(std::move(l)) {}
  ReducedWord(std::initializer_list<int> l) : letters(l) {}

  std::size_t size() const { return letters.size(); }
  int operator[](std::size_t k) const { return letters[k]; }

  ReducedWord prefix(std::size_t k) const {
    return ReducedWord(std::vector<int>(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(k)));
  }
  ReducedWord reversed() const { return ReducedWord(std::vector<int>(letters.rbegin(), letters.rend())); }

  /// 1-based, comma separated.
  std::string str() const {
    std::string s;
    for (std::size_t k = 0; k < letters.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(letters[k] + 1);
    }
    return s;
  }

  /// Parses a 1-based comma-separated list.
  static ReducedWord parse(std::string_view text) {
    ReducedWord w;
    if (text.empty()) return w;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto next = std::min(text.find(',', pos), text.size());
      const auto field = text.substr(pos, next - pos);
      int v = 0;
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
      if (field.empty() || ec != std::errc() || ptr != field.data() + field.size() || v < 1) {
        throw InputError("bad word '" + std::string(text) + "'");
      }
      w.letters.push_back(v - 1);
      pos = next + 1;
    }
    return w;
  }

  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
  friend auto operator<=>(const ReducedWord&, const ReducedWord&) = default;
};

class RootDatum {
 public:
  explicit RootDatum(CartanType type) : type_(type) {
    validate(type_);
    const int n = type_.rank;
    a_.assign(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) a_[i][i] = 2;
    auto link = [&](int i, int j, long aij, long aji) {
      a_[i][j] = aij;
      a_[j][i] = aji;
    };
    switch (type_.family) {
      case Family::A:
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1, -1);
        break;
      case Family::B:
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
        link(n - 2, n - 1, -1, -2);
        break;
      case Family::C:
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
        link(n - 2, n - 1, -2, -1);
        break;
      case Family::D:
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
        link(n - 3, n - 1, -1, -1);
        break;
      case Family::G:
        link(0, 1, -3, -1);
        break;
    }
    build_inverse();
    build_symmetrizer();
    positive_roots_ = positive_root_coordinates(false);
    positive_coroots_ = positive_root_coordinates(true);
    longest_ = greedy_longest_word();
    build_theta();
  }

  const CartanType& type() const { return type_; }
  std::size_t rank() const { return a_.size(); }
  long cartan(std::size_t i, std::size_t j) const { return a_[i][j]; }

  Weight zero_weight() const { return Weight(rank()); }
  Weight fundamental_weight(std::size_t i) const { return Weight::unit(rank(), i); }
  Coweight fundamental_coweight(std::size_t i) const { return Coweight::unit(rank(), i); }

  Weight simple_root(std::size_t j) const {
    Weight v(rank());
    for (std::size_t k = 0; k < rank(); ++k) v[k] = a_[k][j];
    return v;
  }
  Coweight simple_coroot(std::size_t i) const {
    Coweight v(rank());
    for (std::size_t k = 0; k < rank(); ++k) v[k] = a_[i][k];
    return v;
  }
  Weight rho() const { return Weight(std::vector<long>(rank(), 1)); }

  Weight reflect(std::size_t i, Weight w) const {
    const long c = w[i];
    for (std::size_t k = 0; k < rank(); ++k) w[k] -= c * a_[k][i];
    return w;
  }
  Coweight reflect(std::size_t i, Coweight x) const {
    const long c = x[i];
    for (std::size_t k = 0; k < rank(); ++k) x[k] -= c * a_[i][k];
    return x;
  }
  /// Rational vectors in the weight basis (LS-path directions).
  RationalVector reflect(std::size_t i, RationalVector v) const {
    const Rational c = v[i];
    if (c == 0) return v;
    for (std::size_t k = 0; k < rank(); ++k) v[k] -= c * a_[k][i];
    return v;
  }

  /// s_{i_1} ... s_{i_k} applied to v (rightmost letter acts first).
  template <class V>
  V act(const ReducedWord& w, V v) const {
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) v = reflect(static_cast<std::size_t>(*it), std::move(v));
    return v;
  }
  /// (s_{i_1} ... s_{i_k})^{-1} applied to v.
  template <class V>
  V act_inverse(const ReducedWord& w, V v) const {
    for (int letter : w.letters) v = reflect(static_cast<std::size_t>(letter), std::move(v));
    return v;
  }

  /// <w . alpha_i^vee, lambda> = <alpha_i^vee, w^{-1} lambda>.
  long coroot_pairing(const ReducedWord& w, std::size_t i, const Weight& lambda) const {
    return act_inverse(w, lambda)[i];
  }

  /// <x, lambda> for a coweight x and weight lambda, using <Lambda_i^vee, Lambda_j> = (A^{-1})_{ij}.
  Rational pair(const Coweight& x, const Weight& lambda) const {
    Rational s = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < rank(); ++j) {
        if (lambda[j] != 0) s += Rational(x[i] * lambda[j]) * inverse_[i][j];
      }
    }
    return s;
  }

  /// True iff every prefix s_{i_1}...s_{i_k} has length k.
  bool is_reduced(const ReducedWord& w) const {
    Weight y = rho();
    for (int letter : w.letters) {
      if (letter < 0 || static_cast<std::size_t>(letter) >= rank()) return false;
      if (y[static_cast<std::size_t>(letter)] <= 0) return false;
      y = reflect(static_cast<std::size_t>(letter), y);
    }
    return true;
  }
  bool is_reduced_longest(const ReducedWord& w) const {
    return w.size() == positive_roots_.size() && is_reduced(w);
  }
  void require_longest(const ReducedWord& w) const {
    if (!is_reduced_longest(w)) throw InputError("'" + w.str() + "' is not a reduced word for w0 in " + type_.name());
  }

  /// Lexicographically least reduced word for w0.
  const ReducedWord& longest_word() const { return longest_; }

  /// Every reduced word of w0, in lexicographic order.
  const std::vector<ReducedWord>& all_reduced_words() const {
    std::call_once(words_once_, [this] {
      std::vector<int> stack;
      enumerate_words(rho(), stack, words_);
    });
    return words_;
  }

  std::size_t theta(std::size_t i) const { return theta_[i]; }
  /// theta(i^rev) = (theta(i_m), ..., theta(i_1)).
  ReducedWord theta_reverse(const ReducedWord& w) const {
    ReducedWord out;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back(static_cast<int>(theta_[static_cast<std::size_t>(*it)]));
    return out;
  }

  Weight w0_act(const Weight& w) const { return act(longest_, w); }

  /// Positive roots in simple-root coordinates.
  const std::vector<std::vector<long>>& positive_roots() const { return positive_roots_; }
  /// Positive coroots in simple-coroot coordinates.
  const std::vector<std::vector<long>>& positive_coroots() const { return positive_coroots_; }
  std::size_t num_positive_roots() const { return positive_roots_.size(); }

  /// d_i with d_i a_ij = d_j a_ji, smallest positive integers; d_i = (alpha_i, alpha_i)/2 up to scale.
  const std::vector<long>& symmetrizer() const { return d_; }

  /// Root-lattice element given in simple-root coordinates, converted to the weight basis.
  Weight from_root_coordinates(const std::vector<long>& c) const {
    Weight v(rank());
    for (std::size_t j = 0; j < rank(); ++j) {
      if (c[j] == 0) continue;
      for (std::size_t k = 0; k < rank(); ++k) v[k] += c[j] * a_[k][j];
    }
    return v;
  }

  /// Simple-root coordinates of a weight (rational in general).
  RationalVector to_root_coordinates(const Weight& w) const {
    RationalVector c(rank(), Rational(0));
    for (std::size_t k = 0; k < rank(); ++k) {
      for (std::size_t j = 0; j < rank(); ++j) c[k] += inverse_[k][j] * w[j];
    }
    return c;
  }

  /// Weyl dimension formula.
  Integer weyl_dim(const Weight& lambda) const {
    if (!lambda.is_dominant()) throw InputError("weyl_dim needs a dominant weight, got " + lambda.str());
    Rational d = 1;
    for (const auto& c : positive_coroots_) {
      long num = 0;
      long den = 0;
      for (std::size_t i = 0; i < rank(); ++i) {
        num += c[i] * (lambda[i] + 1);
        den += c[i];
      }
      d *= Rational(num, den);
    }
    if (!is_integral(d)) throw InvariantError("non-integral Weyl dimension");
    return boost::multiprecision::numerator(d);
  }

 private:
  void build_inverse() {
    const std::size_t n = rank();
    std::vector<RationalVector> m(n, RationalVector(2 * n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m[i][j] = a_[i][j];
      m[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (m[piv][col] == 0) ++piv;
      std::swap(m[piv], m[col]);
      const Rational p = m[col][col];
      for (auto& x : m[col]) x /= p;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == col || m[r][col] == 0) continue;
        const Rational f = m[r][col];
        for (std::size_t k = 0; k < 2 * n; ++k) m[r][k] -= f * m[col][k];
      }
    }
    inverse_.assign(n, RationalVector(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) inverse_[i][j] = m[i][n + j];
    }
  }

  void build_symmetrizer() {
    const std::size_t n = rank();
    RationalVector d(n, Rational(0));
    d[0] = 1;
    std::vector<std::size_t> queue{0};
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const std::size_t i = queue[h];
      for (std::size_t j = 0; j < n; ++j) {
        if (a_[i][j] != 0 && i != j && d[j] == 0) {
          d[j] = d[i] * a_[i][j] / a_[j][i];
          queue.push_back(j);
        }
      }
    }
    Integer lcm = 1;
    for (const auto& x : d) lcm = boost::multiprecision::lcm(lcm, Integer(boost::multiprecision::denominator(x)));
    d_.resize(n);
    for (std::size_t i = 0; i < n; ++i) d_[i] = to_long(d[i] * Rational(lcm));
    long g = 0;
    for (long x : d_) g = std::gcd(g, x);
    for (long& x : d_) x /= g;
  }

  // Reflection closure of the simple roots; transpose=true gives the coroot system.
  std::vector<std::vector<long>> positive_root_coordinates(bool transpose) const {
    const std::size_t n = rank();
    std::set<std::vector<long>> seen;
    std::vector<std::vector<long>> queue;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<long> e(n, 0);
      e[i] = 1;
      seen.insert(e);
      queue.push_back(e);
    }
    for (std::size_t h = 0; h < queue.size(); ++h) {
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<long> beta = queue[h];
        long pairing = 0;
        for (std::size_t j = 0; j < n; ++j) pairing += (transpose ? a_[j][i] : a_[i][j]) * beta[j];
        beta[i] -= pairing;
        const bool positive = std::all_of(beta.begin(), beta.end(), [](long x) { return x >= 0; });
        if (positive && seen.insert(beta).second) queue.push_back(beta);
      }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
  }

  // Walks from rho to -rho applying the least s_i that lengthens the element;
  // the recorded letters form the lexicographically least reduced word.
  ReducedWord greedy_longest_word() const {
    ReducedWord w;
    Weight y = rho();
    const Weight target = -rho();
    while (y != target) {
      std::size_t i = 0;
      while (y[i] <= 0) ++i;
      w.letters.push_back(static_cast<int>(i));
      y = reflect(i, y);
    }
    return w;
  }

  void enumerate_words(const Weight& y, std::vector<int>& stack, std::vector<ReducedWord>& out) const {
    bool any = false;
    for (std::size_t i = 0; i < rank(); ++i) {
      if (y[i] <= 0) continue;
      any = true;
      stack.push_back(static_cast<int>(i));
      enumerate_words(reflect(i, y), stack, out);
      stack.pop_back();
    }
    if (!any) out.emplace_back(stack);
  }

  void build_theta() {
    theta_.resize(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
      const Weight image = -w0_act(simple_root(i));
      std::optional<std::size_t> match;
      for (std::size_t j = 0; j < rank(); ++j) {
        if (simple_root(j) == image) match = j;
      }
      if (!match) throw InvariantError("-w0 alpha_" + std::to_string(i + 1) + " is not a simple root");
      theta_[i] = *match;
    }
  }

  CartanType type_;
  std::vector<std::vector<long>> a_;
  std::vector<RationalVector> inverse_;
  std::vector<long> d_;
  std::vector<std::vector<long>> positive_roots_;
  std::vector<std::vector<long>> positive_coroots_;
  ReducedWord longest_;
  std::vector<std::size_t> theta_;
  mutable std::once_flag words_once_;
  mutable std::vector<ReducedWord> words_;
};

}  // namespace crystals
