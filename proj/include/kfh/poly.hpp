#pragma once
// Laurent polynomials in t^(1/2) with arbitrary-precision integer coefficients.

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace kfh {

using Int = boost::multiprecision::cpp_int;

struct PolyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exponents are stored in halves: key e means t^(e/2).
class HalfLaurent {
 public:
  HalfLaurent() = default;
  HalfLaurent(int c);
  explicit HalfLaurent(const Int& c);

  static HalfLaurent monomial(const Int& c, int halves);
  static HalfLaurent from_terms(const std::map<int, Int>& terms);
  // t^(1/2) - t^(-1/2)
  static HalfLaurent z();

  const std::map<int, Int>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int low() const;
  int high() const;
  Int coeff(int halves) const;
  bool has_half_exponents() const;
  Int at_one() const;

  HalfLaurent shifted(int halves) const;
  HalfLaurent operator-() const;
  HalfLaurent& operator+=(const HalfLaurent& o);
  HalfLaurent& operator-=(const HalfLaurent& o);
  HalfLaurent& operator*=(const HalfLaurent& o);

  friend HalfLaurent operator+(HalfLaurent a, const HalfLaurent& b) { return a += b; }
  friend HalfLaurent operator-(HalfLaurent a, const HalfLaurent& b) { return a -= b; }
  friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b);
  friend bool operator==(const HalfLaurent& a, const HalfLaurent& b) { return a.c_ == b.c_; }
  friend bool operator!=(const HalfLaurent& a, const HalfLaurent& b) { return !(a == b); }

  // descending powers, e.g. "t - 1 + t^{-1}", "t^{3/2} - 2t^{1/2}"
  std::string str() const;

 private:
  void add_term(int e, const Int& c);
  std::map<int, Int> c_;
};

HalfLaurent multiply(const HalfLaurent& a, const HalfLaurent& b);
HalfLaurent conjugate(const HalfLaurent& a);
HalfLaurent power(const HalfLaurent& a, unsigned k);

// a(-1); throws PolyError on half-integer exponents.
Int evaluate_at_minus_one(const HalfLaurent& a);

// Quotient q with a = q*b, or nullopt when b does not divide a.
std::optional<HalfLaurent> divide_exact(const HalfLaurent& a, const HalfLaurent& b);

// u * t^(m/2) * a with conjugate(r) = (-1)^(components-1) r; knots get r(1) = 1,
// links get a positive leading coefficient.
HalfLaurent normalize_symmetric(const HalfLaurent& a, int components);

// True if a == b or a == -b.
bool equal_up_to_sign(const HalfLaurent& a, const HalfLaurent& b);

}  // namespace kfh
