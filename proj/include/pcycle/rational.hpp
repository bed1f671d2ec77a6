// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace pcycle {

/// Exact rational over long long, always normalized (gcd 1, positive
/// denominator). Link costs and redundancy ratios use this type because the
/// aggregation acceptance rule compares redundancy values, and those
/// comparisons must not flip on floating-point noise.
///
/// Intermediate products run in 128-bit arithmetic; results that do not fit
/// back into long long throw std::overflow_error.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(long long n) : num_(n) {}  // NOLINT: implicit like an integer
  Rational(long long n, long long d) { *this = make(n, d); }

  long long numerator() const { return num_; }
  long long denominator() const { return den_; }

  Rational operator-() const { return make(-static_cast<I128>(num_), den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(static_cast<I128>(a.num_) * b.den_ +
                    static_cast<I128>(b.num_) * a.den_,
                static_cast<I128>(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make(static_cast<I128>(a.num_) * b.den_ -
                    static_cast<I128>(b.num_) * a.den_,
                static_cast<I128>(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(static_cast<I128>(a.num_) * b.num_,
                static_cast<I128>(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return make(static_cast<I128>(a.num_) * b.den_,
                static_cast<I128>(a.den_) * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  // Normal form is unique, so equality is componentwise.
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<I128>(a.num_) * b.den_ <
           static_cast<I128>(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return !(a < b);
  }

 private:
  using I128 = __int128;

  static Rational make(I128 n, I128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    I128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr I128 kMax = INT64_MAX;
    if (n > kMax || n < -kMax || d > kMax)
      throw std::overflow_error("rational overflow");
    Rational r;
    r.num_ = static_cast<long long>(n);
    r.den_ = static_cast<long long>(d);
    return r;
  }

  static I128 gcd128(I128 a, I128 b) {
    while (b != 0) {
      I128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  long long num_ = 0;
  long long den_ = 1;
};

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) /
         static_cast<double>(r.denominator());
}

/// Parses "4", "2.5" or "7/4" into an exact rational.
/// Throws std::invalid_argument on malformed text.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  auto parse_int = [](const std::string& s) -> long long {
    if (s.empty()) throw std::invalid_argument("empty number");
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size())
      throw std::invalid_argument("trailing characters in number '" + s + "'");
    return v;
  };
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    long long num = parse_int(text.substr(0, slash));
    long long den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rational(num, den);
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string ip = text.substr(0, dot);
    std::string fp = text.substr(dot + 1);
    if (fp.empty() || fp.size() > 9)
      throw std::invalid_argument("bad decimal '" + text + "'");
    for (char c : fp)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("bad decimal '" + text + "'");
    bool neg = !ip.empty() && ip[0] == '-';
    long long whole = parse_int(ip.empty() || ip == "-" || ip == "+" ? ip + "0" : ip);
    long long scale = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
    long long frac = parse_int(fp);
    long long num = whole * scale + (neg ? -frac : frac);
    return Rational(num, scale);
  }
  return Rational(parse_int(text));
}

/// "p/q", or just "p" when the denominator is 1. Round-trips through
/// parse_rational.
inline std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Fixed-point decimal with `places` digits, exact rounding half away
/// from zero. Used for CSV output.
inline std::string format_decimal(const Rational& r, int places) {
  using I128 = __int128;
  I128 scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  I128 num = static_cast<I128>(r.numerator()) * scale;
  I128 den = r.denominator();
  I128 q = num / den;
  I128 rem = num % den;
  if (rem < 0) rem = -rem;
  if (2 * rem >= den) q += (num < 0 ? -1 : 1);
  bool neg = q < 0;
  if (neg) q = -q;
  I128 whole = q / scale;
  I128 frac = q % scale;
  std::string fs;
  for (int i = 0; i < places; ++i) {
    fs.insert(fs.begin(), static_cast<char>('0' + static_cast<int>(frac % 10)));
    frac /= 10;
  }
  std::string ws;
  if (whole == 0) ws = "0";
  while (whole > 0) {
    ws.insert(ws.begin(), static_cast<char>('0' + static_cast<int>(whole % 10)));
    whole /= 10;
  }
  std::string out = neg ? "-" : "";
  out += ws;
  if (places > 0) out += "." + fs;
  return out;
}

}  // namespace pcycle
