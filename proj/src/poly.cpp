#include "kfh/poly.hpp"

#include <sstream>
#include <vector>

namespace kfh {

HalfLaurent::HalfLaurent(int c) {
  if (c != 0) c_[0] = c;
}

HalfLaurent::HalfLaurent(const Int& c) {
  if (c != 0) c_[0] = c;
}

HalfLaurent HalfLaurent::monomial(const Int& c, int halves) {
  HalfLaurent r;
  if (c != 0) r.c_[halves] = c;
  return r;
}

HalfLaurent HalfLaurent::from_terms(const std::map<int, Int>& terms) {
  HalfLaurent r;
  for (auto& [e, c] : terms) r.add_term(e, c);
  return r;
}

HalfLaurent HalfLaurent::z() { return monomial(1, 1) - monomial(1, -1); }

int HalfLaurent::low() const {
  if (c_.empty()) throw PolyError("low() of zero polynomial");
  return c_.begin()->first;
}

int HalfLaurent::high() const {
  if (c_.empty()) throw PolyError("high() of zero polynomial");
  return c_.rbegin()->first;
}

Int HalfLaurent::coeff(int halves) const {
  auto it = c_.find(halves);
  return it == c_.end() ? Int(0) : it->second;
}

bool HalfLaurent::has_half_exponents() const {
  for (auto& kv : c_)
    if (kv.first % 2 != 0) return true;
  return false;
}

Int HalfLaurent::at_one() const {
  Int s = 0;
  for (auto& kv : c_) s += kv.second;
  return s;
}

void HalfLaurent::add_term(int e, const Int& c) {
  if (c == 0) return;
  auto [it, fresh] = c_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) c_.erase(it);
  }
}

HalfLaurent HalfLaurent::shifted(int halves) const {
  HalfLaurent r;
  for (auto& [e, c] : c_) r.c_.emplace_hint(r.c_.end(), e + halves, c);
  return r;
}

HalfLaurent HalfLaurent::operator-() const {
  HalfLaurent r = *this;
  for (auto& kv : r.c_) kv.second = -kv.second;
  return r;
}

HalfLaurent& HalfLaurent::operator+=(const HalfLaurent& o) {
  for (auto& [e, c] : o.c_) add_term(e, c);
  return *this;
}

HalfLaurent& HalfLaurent::operator-=(const HalfLaurent& o) {
  for (auto& [e, c] : o.c_) add_term(e, -c);
  return *this;
}

HalfLaurent& HalfLaurent::operator*=(const HalfLaurent& o) {
  *this = *this * o;
  return *this;
}

HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
  if (a.is_zero() || b.is_zero()) return {};
  int la = a.low(), lb = b.low();
  std::vector<Int> acc(size_t(a.high() - la + b.high() - lb + 1));
  for (auto& [ea, ca] : a.terms())
    for (auto& [eb, cb] : b.terms()) acc[size_t(ea - la + eb - lb)] += ca * cb;
  HalfLaurent r;
  for (size_t i = 0; i < acc.size(); ++i)
    if (acc[i] != 0) r.c_.emplace_hint(r.c_.end(), int(i) + la + lb, acc[i]);
  return r;
}

static std::string exponent_str(int halves) {
  if (halves % 2 == 0) {
    int e = halves / 2;
    if (e == 1) return "t";
    return "t^{" + std::to_string(e) + "}";
  }
  return "t^{" + std::to_string(halves) + "/2}";
}

std::string HalfLaurent::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    Int c = it->second;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (it->first == 0) {
      os << c;
    } else {
      if (c != 1) os << c;
      os << exponent_str(it->first);
    }
  }
  return os.str();
}

HalfLaurent multiply(const HalfLaurent& a, const HalfLaurent& b) { return a * b; }

HalfLaurent conjugate(const HalfLaurent& a) {
  std::map<int, Int> m;
  for (auto& [e, c] : a.terms()) m.emplace(-e, c);
  return HalfLaurent::from_terms(m);
}

HalfLaurent power(const HalfLaurent& a, unsigned k) {
  HalfLaurent r(1), b = a;
  while (k) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return r;
}

Int evaluate_at_minus_one(const HalfLaurent& a) {
  Int s = 0;
  for (auto& [e, c] : a.terms()) {
    if (e % 2 != 0)
      throw PolyError("evaluate_at_minus_one: half-integer exponent in " + a.str());
    int k = e / 2;
    s += (k % 2 == 0) ? c : Int(-c);
  }
  return s;
}

std::optional<HalfLaurent> divide_exact(const HalfLaurent& a, const HalfLaurent& b) {
  if (b.is_zero()) throw PolyError("division by zero polynomial");
  if (a.is_zero()) return HalfLaurent{};
  int la = a.low(), lb = b.low();
  int da = a.high() - la, db = b.high() - lb;
  if (da < db) return std::nullopt;
  std::vector<Int> rem(size_t(da + 1)), den(size_t(db + 1));
  for (auto& [e, c] : a.terms()) rem[size_t(e - la)] = c;
  for (auto& [e, c] : b.terms()) den[size_t(e - lb)] = c;
  const Int& lead = den[size_t(db)];
  std::vector<Int> q(size_t(da - db + 1));
  for (int d = da; d >= db; --d) {
    Int& top = rem[size_t(d)];
    if (top == 0) continue;
    Int qr;
    Int qq;
    divide_qr(top, lead, qq, qr);
    if (qr != 0) return std::nullopt;
    int shift = d - db;
    q[size_t(shift)] = qq;
    for (int j = 0; j <= db; ++j)
      if (den[size_t(j)] != 0) rem[size_t(j + shift)] -= qq * den[size_t(j)];
  }
  for (auto& r : rem)
    if (r != 0) return std::nullopt;
  std::map<int, Int> m;
  for (size_t i = 0; i < q.size(); ++i)
    if (q[i] != 0) m.emplace(int(i) + la - lb, q[i]);
  return HalfLaurent::from_terms(m);
}

HalfLaurent normalize_symmetric(const HalfLaurent& a, int components) {
  if (components < 1) throw PolyError("normalize_symmetric: components must be positive");
  if (a.is_zero()) {
    if (components > 1) return {};
    throw PolyError("normalize_symmetric: zero polynomial for a knot");
  }
  // shifting by m halves moves high+low by 2m
  int span = a.high() + a.low();
  if (span % 2 != 0) throw PolyError("normalize_symmetric: cannot centre " + a.str());
  HalfLaurent r = a.shifted(-span / 2);
  HalfLaurent c = conjugate(r);
  bool want_plus = (components - 1) % 2 == 0;
  if (c != (want_plus ? r : -r))
    throw PolyError("normalize_symmetric: not symmetrizable: " + a.str());
  if (components == 1) {
    Int v = r.at_one();
    if (v == -1) return -r;
    if (v != 1) throw PolyError("normalize_symmetric: knot polynomial with |r(1)| != 1: " + a.str());
    return r;
  }
  if (r.terms().rbegin()->second < 0) return -r;
  return r;
}

bool equal_up_to_sign(const HalfLaurent& a, const HalfLaurent& b) {
  return a == b || a == -b;
}

}  // namespace kfh
