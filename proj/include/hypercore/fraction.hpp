#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hypercore {

// Exact rational in [0, 1]. Survival thresholds and fraction sweeps compare
// these by integer cross-multiplication, never through doubles, so ties
// resolve exactly. A single out-of-range value (-1) is reserved as the
// "not in any core" sentinel.
class Fraction {
 public:
  constexpr Fraction() = default;

  Fraction(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ <= 0) throw std::invalid_argument("fraction: nonpositive denominator");
    if (num_ == -1 && den_ == 1) return;  // sentinel
    if (num_ < 0 || num_ > den_)
      throw std::invalid_argument("fraction: value outside [0, 1]");
    std::int64_t g = std::gcd(num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
  }

  static Fraction sentinel() {
    Fraction f;
    f.num_ = -1;
    f.den_ = 1;
    return f;
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_sentinel() const { return num_ < 0; }
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  std::string str() const {
    if (is_sentinel()) return "-1";
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Fraction& a, const Fraction& b) { return !(a == b); }
  friend bool operator<(const Fraction& a, const Fraction& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator<=(const Fraction& a, const Fraction& b) { return !(b < a); }
  friend bool operator>(const Fraction& a, const Fraction& b) { return b < a; }
  friend bool operator>=(const Fraction& a, const Fraction& b) { return !(a < b); }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// True when an edge currently holding `size` of its `original` nodes still
// meets the fractional requirement, i.e. size >= t * original, exactly.
inline bool meets_fraction(std::int64_t size, std::int64_t original, const Fraction& t) {
  return size * t.den() >= t.num() * original;
}

// ceil(t * m) in exact integer arithmetic.
inline std::int64_t ceil_mul(const Fraction& t, std::int64_t m) {
  return (t.num() * m + t.den() - 1) / t.den();
}

// Accepts "p/q", a bare integer ("0", "1"), or a decimal. Decimals are
// converted to a rational over 10^6; *converted_decimal is set so callers
// can warn about the silent conversion. "-1" yields the sentinel.
inline Fraction parse_fraction(const std::string& text, bool* converted_decimal = nullptr) {
  if (converted_decimal) *converted_decimal = false;
  if (text.empty()) throw std::invalid_argument("fraction: empty string");
  if (text == "-1") return Fraction::sentinel();
  auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      std::size_t pos1 = 0, pos2 = 0;
      std::int64_t num = std::stoll(text.substr(0, slash), &pos1);
      std::int64_t den = std::stoll(text.substr(slash + 1), &pos2);
      if (pos1 != slash || pos2 != text.size() - slash - 1)
        throw std::invalid_argument("fraction: trailing characters");
      return Fraction(num, den);
    }
    if (text.find('.') == std::string::npos && text.find('e') == std::string::npos &&
        text.find('E') == std::string::npos) {
      std::size_t pos = 0;
      std::int64_t num = std::stoll(text, &pos);
      if (pos != text.size()) throw std::invalid_argument("fraction: trailing characters");
      return Fraction(num, 1);
    }
    std::size_t pos = 0;
    double v = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("fraction: trailing characters");
    if (converted_decimal) *converted_decimal = true;
    const std::int64_t kDen = 1000000;
    auto num = static_cast<std::int64_t>(v * kDen + (v >= 0 ? 0.5 : -0.5));
    return Fraction(num, kDen);
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("fraction: cannot parse '" + text + "'");
  }
}

}  // namespace hypercore
