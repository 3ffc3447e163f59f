#include "lqk/poly.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace lqk {

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(Int c) {
  IntPoly p;
  if (c != 0) p.coeffs_.push_back(std::move(c));
  return p;
}

IntPoly IntPoly::monomial(Int c, unsigned k) {
  IntPoly p;
  if (c != 0) {
    p.coeffs_.assign(k + 1, Int(0));
    p.coeffs_[k] = std::move(c);
  }
  return p;
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Int& IntPoly::coeff(unsigned i) const {
  static const Int zero(0);
  return i < coeffs_.size() ? coeffs_[i] : zero;
}

const Int& IntPoly::leading() const {
  if (is_zero()) throw std::invalid_argument("leading(): zero polynomial");
  return coeffs_.back();
}

IntPoly IntPoly::operator-() const {
  IntPoly r(*this);
  for (Int& c : r.coeffs_) c = -c;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Int> prod(coeffs_.size() + rhs.coeffs_.size() - 1, Int(0));
  Int tmp;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      tmp = coeffs_[i] * rhs.coeffs_[j];
      prod[i + j] += tmp;
    }
  }
  coeffs_ = std::move(prod);
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const Int& s) {
  if (s == 0) {
    coeffs_.clear();
    return *this;
  }
  for (Int& c : coeffs_) c *= s;
  return *this;
}

IntPoly IntPoly::derivative() const {
  if (degree() < 1) return IntPoly();
  std::vector<Int> d(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = Int(i) * coeffs_[i];
  return IntPoly(std::move(d));
}

Rat IntPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (size_t i = coeffs_.size(); i-- > 0;) {
    acc *= x;
    acc += coeffs_[i];
  }
  return acc;
}

Int IntPoly::eval(const Int& x) const {
  Int acc(0);
  for (size_t i = coeffs_.size(); i-- > 0;) {
    acc *= x;
    acc += coeffs_[i];
  }
  return acc;
}

int IntPoly::sign_at(const Rat& x) const {
  if (is_zero()) return 0;
  // sign(p(u/v)) = sign(sum a_i u^i v^(d-i)), v > 0 for canonical mpq.
  const Int& u = x.get_num();
  const Int& v = x.get_den();
  if (v == 1) return sign_at_int(u);
  Int acc = coeffs_.back();
  Int vp(1);
  for (size_t i = coeffs_.size() - 1; i-- > 0;) {
    vp *= v;
    acc *= u;
    acc += coeffs_[i] * vp;
  }
  return sgn(acc);
}

int IntPoly::sign_at_int(const Int& x) const {
  if (is_zero()) return 0;
  return sgn(eval(x));
}

IntPoly IntPoly::compose_affine(const Int& alpha, const Int& beta) const {
  IntPoly inner({});
  inner.coeffs_ = {beta, alpha};
  inner.normalize();
  IntPoly acc;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    acc *= inner;
    acc += IntPoly::constant(coeffs_[i]);
  }
  return acc;
}

IntPoly IntPoly::reversed() const {
  if (is_zero()) return IntPoly();
  if (coeffs_.front() == 0)
    throw std::invalid_argument("reversed(): zero constant term");
  std::vector<Int> r(coeffs_.rbegin(), coeffs_.rend());
  return IntPoly(std::move(r));
}

Int IntPoly::content() const {
  Int g(0);
  for (const Int& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return IntPoly();
  Int g = content();
  if (g == 1) return *this;
  IntPoly r(*this);
  for (Int& c : r.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return r;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Int& c = coeffs_[i];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    Int a = abs(c);
    if (i == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

IntPoly pos_pseudo_rem(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("pos_pseudo_rem: zero divisor");
  IntPoly r = a;
  const int db = b.degree();
  const Int d = abs(b.leading());
  const int lsign = sgn(b.leading());
  while (!r.is_zero() && r.degree() >= db) {
    // d*r - sgn(lc(b))*lc(r)*t^(dr-db)*b cancels the leading term and
    // multiplies the remainder by the positive constant d.
    Int lr = r.leading();
    if (lsign < 0) lr = -lr;
    IntPoly shift = IntPoly::monomial(lr, static_cast<unsigned>(r.degree() - db));
    r *= d;
    r -= shift * b;
  }
  return r;
}

bool try_divide(const IntPoly& p, const IntPoly& d, IntPoly& quotient) {
  if (d.is_zero()) return false;
  if (p.is_zero()) {
    quotient = IntPoly();
    return true;
  }
  if (p.degree() < d.degree()) return false;
  std::vector<Int> rem = p.coeffs();
  std::vector<Int> q(p.degree() - d.degree() + 1, Int(0));
  const Int& lead = d.leading();
  for (int k = p.degree() - d.degree(); k >= 0; --k) {
    Int& top = rem[k + d.degree()];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return false;
    Int c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    q[k] = c;
    for (int i = 0; i <= d.degree(); ++i) rem[k + i] -= c * d.coeff(i);
  }
  for (const Int& c : rem)
    if (c != 0) return false;
  quotient = IntPoly(std::move(q));
  return true;
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly u = a.primitive_part();
  IntPoly v = b.primitive_part();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    IntPoly r = pos_pseudo_rem(u, v).primitive_part();
    u = std::move(v);
    v = std::move(r);
  }
  if (!u.is_zero() && u.leading() < 0) u = -u;
  return u;
}

bool is_square_free(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("is_square_free: zero polynomial");
  if (p.degree() < 1) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

}  // namespace lqk
