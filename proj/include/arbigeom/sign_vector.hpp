#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace arbigeom {

// Element of {+1,-1}^m naming an orthant; coordinatewise multiplication
// gives the group structure used by the reflection arguments.
class SignVector {
 public:
  explicit SignVector(std::size_t m) : signs_(m, +1) {
    if (m == 0) throw std::invalid_argument("SignVector: empty");
  }

  static SignVector all_plus(std::size_t m) { return SignVector(m); }

  /// bit i set in mask means coordinate i is negative
  static SignVector from_mask(std::size_t m, std::uint64_t mask) {
    SignVector s(m);
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1u) s.signs_[i] = -1;
    return s;
  }

  static SignVector parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("SignVector: empty");
    SignVector s(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '+')
        s.signs_[i] = +1;
      else if (text[i] == '-')
        s.signs_[i] = -1;
      else
        throw std::invalid_argument("SignVector: expected only '+'/'-'");
    }
    return s;
  }

  std::size_t size() const { return signs_.size(); }
  int operator[](std::size_t i) const { return signs_[i]; }

  void flip(std::size_t i) { signs_[i] = -signs_[i]; }

  SignVector negated() const {
    SignVector s = *this;
    for (auto& v : s.signs_) v = -v;
    return s;
  }

  /// coordinatewise product
  friend SignVector operator*(const SignVector& a, const SignVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("SignVector: size mismatch");
    SignVector s = a;
    for (std::size_t i = 0; i < s.size(); ++i) s.signs_[i] *= b.signs_[i];
    return s;
  }

  std::uint64_t to_mask() const {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < size(); ++i)
      if (signs_[i] < 0) mask |= std::uint64_t(1) << i;
    return mask;
  }

  std::string to_string() const {
    std::string s(size(), '+');
    for (std::size_t i = 0; i < size(); ++i)
      if (signs_[i] < 0) s[i] = '-';
    return s;
  }

  friend bool operator==(const SignVector& a, const SignVector& b) {
    return a.signs_ == b.signs_;
  }

 private:
  std::vector<std::int8_t> signs_;
};

}  // namespace arbigeom
