#ifndef WNBUILD_RATIONAL_HPP
#define WNBUILD_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace wnbuild {

// Exact rational over int64. Path costs are sums of 1/depth terms, so
// numerators and denominators stay tiny relative to the int64 range.
struct Rat {
  std::int64_t num = 0;
  std::int64_t den = 1; // always > 0

  constexpr Rat() = default;

  Rat(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  static Rat whole(std::int64_t n) { return Rat(n, 1); }
  static Rat inverse(std::int64_t n) { return Rat(1, n); }

  Rat operator+(const Rat& o) const { return Rat(num * o.den + o.num * den, den * o.den); }
  Rat operator-(const Rat& o) const { return Rat(num * o.den - o.num * den, den * o.den); }
  Rat operator*(const Rat& o) const { return Rat(num * o.num, den * o.den); }

  bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rat& o) const { return !(*this == o); }
  bool operator<(const Rat& o) const { return num * o.den < o.num * den; }
  bool operator>(const Rat& o) const { return o < *this; }
  bool operator<=(const Rat& o) const { return !(o < *this); }
  bool operator>=(const Rat& o) const { return !(*this < o); }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  // Fixed-point decimal rendering, round half up. Used wherever output
  // files must be byte-stable across runs.
  std::string to_decimal(int places) const {
    std::int64_t scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    std::int64_t n = num < 0 ? -num : num;
    std::int64_t scaled = (n * scale + den / 2) / den;
    std::string digits = std::to_string(scaled);
    if (static_cast<int>(digits.size()) <= places)
      digits.insert(0, places + 1 - digits.size(), '0');
    digits.insert(digits.size() - places, ".");
    if (num < 0 && scaled != 0) digits.insert(0, "-");
    return digits;
  }

  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

} // namespace wnbuild

#endif
