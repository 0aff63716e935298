#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace so41kit {

// All coefficients in the library are exact rationals. mpq_class keeps values
// canonical (lowest terms, positive denominator) after every operation.
using Q = mpq_class;

inline std::string q_str(const Q& q) { return q.get_str(); }

inline Q q_parse(const std::string& s) {
  Q q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return q;
}

// Element of Q(i), needed only for the 5x5 matrix realization of the basis.
struct GQ {
  Q re, im;

  GQ() : re(0), im(0) {}
  GQ(Q r) : re(std::move(r)), im(0) {}
  GQ(Q r, Q i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }

  GQ operator+(const GQ& o) const { return {re + o.re, im + o.im}; }
  GQ operator-(const GQ& o) const { return {re - o.re, im - o.im}; }
  GQ operator-() const { return {-re, -im}; }
  GQ operator*(const GQ& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  bool operator==(const GQ& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GQ& o) const { return !(*this == o); }
};

inline GQ gq_i() { return GQ(Q(0), Q(1)); }

inline std::string gq_str(const GQ& g) {
  if (g.im == 0) return g.re.get_str();
  return g.re.get_str() + "+" + g.im.get_str() + "i";
}

}  // namespace so41kit
