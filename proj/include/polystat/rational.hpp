#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace polystat {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar. Always held in canonical form: gcd(num, den) == 1
// and den > 0. All geometry in this library is computed over Rat; nothing is
// ever rounded to floating point.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}
  Rat(long long n) : v_(n) {}
  Rat(const Int& n) : v_(n) {}
  Rat(const Int& num, const Int& den) {
    if (den == 0) fail(Errc::degenerate_input, "rational with zero denominator");
    if (den < 0)
      v_ = Backend(-num, -den);
    else
      v_ = Backend(num, den);
  }

  Int num() const { return boost::multiprecision::numerator(v_); }
  Int den() const { return boost::multiprecision::denominator(v_); }

  int sign() const { return v_.sign(); }
  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const { return den() == 1; }

  // 2^e for any integer e (negative exponents give dyadic fractions).
  static Rat pow2(int e) {
    Int p = Int(1) << (e < 0 ? -e : e);
    return e < 0 ? Rat(Int(1), p) : Rat(p);
  }

  // Accepts an optionally signed integer "p" or fraction "p/q". Any other
  // shape (including whitespace or an empty part) is rejected.
  static Rat parse(std::string_view text) {
    auto bad = [&] {
      fail(Errc::schema_error, "malformed rational literal '" + std::string(text) + "'");
    };
    auto parse_int = [&](std::string_view part) -> Int {
      if (part.empty()) bad();
      std::size_t i = 0;
      if (part[0] == '-' || part[0] == '+') i = 1;
      if (i == part.size()) bad();
      for (std::size_t k = i; k < part.size(); ++k)
        if (part[k] < '0' || part[k] > '9') bad();
      return Int(std::string(part));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(text));
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0) bad();
    return Rat(num, den);
  }

  // "p" when integral, "p/q" otherwise, with q > 0.
  std::string str() const {
    std::string s = num().str();
    if (!is_integer()) {
      s += '/';
      s += den().str();
    }
    return s;
  }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) fail(Errc::degenerate_input, "rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
  friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
  friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
  friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }
  friend Rat operator-(const Rat& a) { Rat r; r.v_ = -a.v_; return r; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

 private:
  using Backend = boost::multiprecision::cpp_rational;
  Backend v_;
};

inline Rat abs(const Rat& a) { return a.sign() < 0 ? -a : a; }

inline int sign(const Rat& a) { return a.sign(); }
inline int sign(const Int& a) { return a.sign(); }

}  // namespace polystat
