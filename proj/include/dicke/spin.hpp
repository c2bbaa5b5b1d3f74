// Copyright 2026 The Dicke Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DICKE_SPIN_HPP
#define DICKE_SPIN_HPP

#include <compare>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dicke {

/// Raised for inputs outside the physical domain (|M| > sN, bad spin, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Formats a half-integer stored as twice its value ("3/2", "-1", "0").
inline std::string format_half_integer(int twice) {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

/// Parses "3", "-7/2", "+1/2" into twice the value. Denominators other than
/// 1 or 2 are rejected.
inline int parse_half_integer(std::string_view text) {
  auto parse_int = [](std::string_view s) {
    if (s.empty()) throw DomainError("empty number");
    std::size_t i = 0;
    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
      negative = s[0] == '-';
      i = 1;
    }
    if (i == s.size()) throw DomainError("malformed number");
    long value = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9')
        throw DomainError("malformed number '" + std::string(s) + "'");
      value = value * 10 + (s[i] - '0');
      if (value > 1'000'000) throw DomainError("number too large");
    }
    return static_cast<int>(negative ? -value : value);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return 2 * parse_int(text);
  const int numerator = parse_int(text.substr(0, slash));
  const int denominator = parse_int(text.substr(slash + 1));
  if (denominator == 1) return 2 * numerator;
  if (denominator == 2) return numerator;
  throw DomainError("denominator must be 1 or 2");
}

/// Single-particle spin s, stored as the integer 2s.
class SpinSpecies {
 public:
  static constexpr int kMaxTwiceSpin = 4;

  explicit SpinSpecies(int twice_spin) : twice_spin_(twice_spin) {
    if (twice_spin < 1 || twice_spin > kMaxTwiceSpin)
      throw DomainError("spin must be one of 1/2, 1, 3/2, 2");
  }

  static SpinSpecies parse(std::string_view text) {
    return SpinSpecies(parse_half_integer(text));
  }

  int twice_spin() const { return twice_spin_; }
  int levels() const { return twice_spin_ + 1; }

  /// 2m of level index `i`; index 0 is m = +s, the last index is m = -s.
  int twice_m(int level_index) const { return twice_spin_ - 2 * level_index; }

  /// Inverse of twice_m; throws if `twice_m` is not a level of this spin.
  int level_index(int twice_m) const {
    const int twice_shift = twice_spin_ - twice_m;
    if (twice_shift < 0 || twice_shift > 2 * twice_spin_ || twice_shift % 2)
      throw DomainError("m = " + format_half_integer(twice_m) +
                        " is not a level of spin " + name());
    return twice_shift / 2;
  }

  std::string name() const { return format_half_integer(twice_spin_); }

  /// CSV column labels "n_+1,n_0,n_-1" style, ordered from m = +s down.
  std::vector<std::string> level_labels() const {
    std::vector<std::string> labels;
    for (int i = 0; i < levels(); ++i) {
      const int tm = twice_m(i);
      labels.push_back(std::string("n_") + (tm > 0 ? "+" : "") +
                       format_half_integer(tm));
    }
    return labels;
  }

  friend bool operator==(SpinSpecies, SpinSpecies) = default;

 private:
  int twice_spin_;
};

/// Total magnetization M, stored as the integer 2M.
class Magnetization {
 public:
  constexpr Magnetization() = default;
  static constexpr Magnetization from_twice(int twice) {
    Magnetization m;
    m.twice_ = twice;
    return m;
  }
  static Magnetization parse(std::string_view text) {
    return from_twice(parse_half_integer(text));
  }

  constexpr int twice() const { return twice_; }
  constexpr Magnetization operator-() const { return from_twice(-twice_); }
  double value() const { return twice_ / 2.0; }
  std::string str() const { return format_half_integer(twice_); }

  friend constexpr auto operator<=>(Magnetization, Magnetization) = default;

 private:
  int twice_ = 0;
};

/// Occupancies of the 2s+1 levels, ordered from m = +s down to m = -s.
class OccupationVector {
 public:
  OccupationVector() = default;
  explicit OccupationVector(std::vector<int> counts) : counts_(std::move(counts)) {
    for (int c : counts_)
      if (c < 0) throw DomainError("occupation counts must be non-negative");
  }
  OccupationVector(std::initializer_list<int> counts)
      : OccupationVector(std::vector<int>(counts)) {}

  const std::vector<int>& counts() const { return counts_; }
  std::size_t size() const { return counts_.size(); }
  int operator[](std::size_t i) const { return counts_[i]; }

  int total() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

  int twice_magnetization(SpinSpecies species) const {
    int twice_m = 0;
    for (std::size_t i = 0; i < counts_.size(); ++i)
      twice_m += species.twice_m(static_cast<int>(i)) * counts_[i];
    return twice_m;
  }

  /// Copy with one particle moved from level `from` to level `to`; the
  /// caller guarantees counts_[from] > 0.
  OccupationVector moved(std::size_t from, std::size_t to) const {
    OccupationVector out = *this;
    --out.counts_[from];
    ++out.counts_[to];
    return out;
  }

  std::string str(char sep = ',') const {
    std::string s;
    for (std::size_t i = 0; i < counts_.size(); ++i) {
      if (i) s += sep;
      s += std::to_string(counts_[i]);
    }
    return s;
  }

  friend auto operator<=>(const OccupationVector&, const OccupationVector&) = default;
  friend bool operator==(const OccupationVector&, const OccupationVector&) = default;

 private:
  std::vector<int> counts_;
};

/// Counts reversed end to end, i.e. m -> -m.
inline OccupationVector mirror(const OccupationVector& occ) {
  return OccupationVector(std::vector<int>(occ.counts().rbegin(), occ.counts().rend()));
}

/// Canonical term order: descending lexicographic on the counts tuple.
struct CanonicalOrder {
  bool operator()(const OccupationVector& a, const OccupationVector& b) const {
    return a > b;
  }
};

/// Throws unless N >= 1 and |2M| <= 2s N with matching parity.
inline void check_sector(SpinSpecies species, int n_particles, Magnetization m) {
  if (n_particles < 1) throw DomainError("particle count must be at least 1");
  const int twice_j = species.twice_spin() * n_particles;
  if (std::abs(m.twice()) > twice_j)
    throw DomainError("magnetization out of range: |M| = " +
                      format_half_integer(std::abs(m.twice())) + " > J = " +
                      format_half_integer(twice_j));
  if ((twice_j - m.twice()) % 2 != 0)
    throw DomainError("magnetization " + m.str() + " has the wrong parity for J = " +
                      format_half_integer(twice_j));
}

}  // namespace dicke

#endif  // DICKE_SPIN_HPP
