#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "minuscule/errors.hpp"
#include "minuscule/poset.hpp"

namespace minuscule {

using BigInt = boost::multiprecision::cpp_int;

// Dense integer polynomial in q.  Coefficients are arbitrary precision: the
// intermediate numerator products of the box formulas overflow 64 bits long
// before the quotients do.
class QPolynomial {
 public:
  QPolynomial() = default;
  QPolynomial(long v) { *this = QPolynomial(BigInt(v)); }  // NOLINT(runtime/explicit)
  QPolynomial(BigInt v) {                                  // NOLINT(runtime/explicit)
    if (v != 0) c_.push_back(std::move(v));
  }

  static QPolynomial monomial(BigInt coeff, int exp) {
    QPolynomial f;
    if (coeff == 0) return f;
    if (exp < 0) throw DomainError("negative exponent");
    f.c_.assign(static_cast<std::size_t>(exp) + 1, BigInt(0));
    f.c_.back() = std::move(coeff);
    return f;
  }

  static QPolynomial from_coeffs(std::vector<BigInt> c) {
    QPolynomial f;
    f.c_ = std::move(c);
    f.trim();
    return f;
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero

  const BigInt& coeff(int e) const {
    static const BigInt zero = 0;
    if (e < 0 || e >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<std::size_t>(e)];
  }
  const std::vector<BigInt>& coeffs() const { return c_; }

  BigInt at_one() const {
    BigInt s = 0;
    for (const auto& c : c_) s += c;
    return s;
  }

  bool operator==(const QPolynomial&) const = default;

  QPolynomial& operator+=(const QPolynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), BigInt(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  QPolynomial& operator-=(const QPolynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), BigInt(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }

  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    QPolynomial r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
  }
  QPolynomial& operator*=(const QPolynomial& o) { return *this = *this * o; }

  // Long division over Z.  Returns false when some leading coefficient is not
  // divisible or the remainder is nonzero.
  static bool divide(const QPolynomial& num, const QPolynomial& den, QPolynomial& quot) {
    if (den.is_zero()) throw DomainError("division by the zero polynomial");
    QPolynomial r = num;
    std::vector<BigInt> q;
    if (num.degree() >= den.degree())
      q.assign(static_cast<std::size_t>(num.degree() - den.degree()) + 1, BigInt(0));
    const BigInt& lead = den.c_.back();
    while (!r.is_zero() && r.degree() >= den.degree()) {
      const BigInt& top = r.c_.back();
      if (top % lead != 0) return false;
      BigInt f = top / lead;
      int shift = r.degree() - den.degree();
      q[static_cast<std::size_t>(shift)] = f;
      for (std::size_t i = 0; i < den.c_.size(); ++i)
        r.c_[i + static_cast<std::size_t>(shift)] -= f * den.c_[i];
      r.trim();
    }
    if (!r.is_zero()) return false;
    quot = from_coeffs(std::move(q));
    return true;
  }

  QPolynomial exact_div(const QPolynomial& den) const {
    QPolynomial q;
    if (!divide(*this, den, q))
      throw InexactDivisionError("polynomial division left a remainder");
    return q;
  }

  // Ascending sparse form: "1 + q + 2*q^2 - q^4".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int e = 0; e <= degree(); ++e) {
      const BigInt& c = c_[static_cast<std::size_t>(e)];
      if (c == 0) continue;
      BigInt a = c < 0 ? BigInt(-c) : c;
      if (s.empty())
        s += c < 0 ? "-" : "";
      else
        s += c < 0 ? " - " : " + ";
      if (e == 0)
        s += a.str();
      else {
        if (a != 1) s += a.str() + "*";
        s += e == 1 ? "q" : "q^" + std::to_string(e);
      }
    }
    return s;
  }

  std::vector<std::string> coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(c.str());
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigInt> c_;  // c_[e] = coefficient of q^e; trailing entry nonzero
};

inline BigInt binomial(long a, long b) {
  if (b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  BigInt r = 1;
  for (long i = 1; i <= b; ++i) {
    r *= a - b + i;
    r /= i;  // exact: r is a running binomial
  }
  return r;
}

// [m]_q = 1 + q + ... + q^{m-1}
inline QPolynomial qint(int m) {
  if (m < 0) throw DomainError("q-integer of a negative integer");
  return QPolynomial::from_coeffs(std::vector<BigInt>(static_cast<std::size_t>(m), BigInt(1)));
}

inline QPolynomial qfactorial(int m) {
  if (m < 0) throw DomainError("q-factorial of a negative integer");
  QPolynomial r{1};
  for (int i = 1; i <= m; ++i) r *= qint(i);
  return r;
}

inline QPolynomial qbinomial(int a, int b) {
  if (b < 0 || b > a) throw DomainError("q-binomial requires 0 <= b <= a");
  QPolynomial num{1}, den{1};
  for (int i = 1; i <= b; ++i) {
    num *= qint(a - b + i);
    den *= qint(i);
  }
  return num.exact_div(den);
}

// Rank-generating function of J([k] x [n] x [m]) by the box product formula.
inline QPolynomial macmahon(int k, int n, int m) {
  if (k < 1 || n < 1 || m < 1) throw DomainError("macmahon requires positive box sides");
  QPolynomial num{1}, den{1};
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= n; ++j)
      for (int l = 1; l <= m; ++l) {
        num *= qint(i + j + l - 1);
        den *= qint(i + j + l - 2);
      }
  return num.exact_div(den);
}

// Symmetric plane partitions inside an n x n x m box, counted by the number
// of fundamental-domain cells: one product factor per shifted cell i <= j.
// This is the rank-generating function of J(([n] x [n])/S_2 x [m]).
inline QPolynomial bender_knuth(int n, int m) {
  if (n < 1 || m < 1) throw DomainError("bender_knuth requires positive arguments");
  QPolynomial num{1}, den{1};
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      num *= qint(m + i + j - 1);
      den *= qint(i + j - 1);
    }
  return num.exact_div(den);
}

// prod_p (1 - q^{m+r(p)+1}) / (1 - q^{r(p)+1}) with r the rank function.  The
// division is exact precisely when P is Gaussian; otherwise this throws, which
// is the intended detector.
inline QPolynomial gaussian_product(const Poset& p, int m) {
  if (m < 1) throw DomainError("gaussian_product requires m >= 1");
  auto rf = rank_function(p);
  if (!rf) throw NotRankedError("gaussian_product requires a ranked poset");
  QPolynomial num{1}, den{1};
  for (int x = 0; x < p.size(); ++x) {
    int r = rf->rank[static_cast<std::size_t>(x)];
    num *= qint(m + r + 1);
    den *= qint(r + 1);
  }
  return num.exact_div(den);
}

// Coefficient of q^k counts the ideals of cardinality k.
inline QPolynomial rank_generating_function(const Poset& p,
                                            std::uint64_t bound = kDefaultIdealBound) {
  std::vector<BigInt> c(static_cast<std::size_t>(p.size()) + 1, BigInt(0));
  for_each_ideal(p, bound, [&](const Bits& ideal) { c[ideal.count()] += 1; });
  return QPolynomial::from_coeffs(std::move(c));
}

// e-th cyclotomic polynomial, via (q^e - 1) / prod of the proper-divisor ones.
inline QPolynomial cyclotomic(int e) {
  if (e < 1) throw DomainError("cyclotomic index must be positive");
  std::vector<QPolynomial> phi(static_cast<std::size_t>(e) + 1);
  for (int d = 1; d <= e; ++d) {
    if (e % d != 0) continue;
    QPolynomial num = QPolynomial::monomial(1, d) - QPolynomial{1};
    QPolynomial den{1};
    for (int t = 1; t < d; ++t)
      if (d % t == 0) den *= phi[static_cast<std::size_t>(t)];
    phi[static_cast<std::size_t>(d)] = num.exact_div(den);
  }
  return phi[static_cast<std::size_t>(e)];
}

// Exact value of f at zeta^d for zeta any primitive n-th root of unity.
// zeta^d is a primitive e-th root with e = n/gcd(n,d); the value is the same
// integer for every primitive e-th root iff the residue of f mod Phi_e is
// constant.  Otherwise the value is irrational (or depends on the root) and
// the reduced residue is reported instead.
struct RootOfUnityValue {
  std::uint64_t order_n = 1;
  std::int64_t power_d = 0;
  std::uint64_t primitive_order = 1;  // e above
  QPolynomial residue;                // f folded and reduced mod Phi_e

  bool is_integer() const { return residue.degree() <= 0; }
  BigInt value() const {
    if (!is_integer()) throw DomainError("evaluation is not a rational integer");
    return residue.coeff(0);
  }
};

inline RootOfUnityValue eval_at_root(const QPolynomial& f, std::uint64_t n, std::int64_t d) {
  if (n < 1) throw DomainError("root order must be positive");
  std::uint64_t dd = static_cast<std::uint64_t>(((d % static_cast<std::int64_t>(n)) +
                                                 static_cast<std::int64_t>(n)) %
                                                static_cast<std::int64_t>(n));
  std::uint64_t e = n / std::gcd(n, dd == 0 ? n : dd);
  std::vector<BigInt> folded(static_cast<std::size_t>(e), BigInt(0));
  for (int j = 0; j <= f.degree(); ++j)
    folded[static_cast<std::size_t>(j) % static_cast<std::size_t>(e)] += f.coeff(j);

  QPolynomial g = QPolynomial::from_coeffs(std::move(folded));
  QPolynomial phi = cyclotomic(static_cast<int>(e));
  // Remainder mod the monic Phi_e.
  while (!g.is_zero() && g.degree() >= phi.degree()) {
    BigInt lead = g.coeff(g.degree());
    g -= QPolynomial::monomial(lead, g.degree() - phi.degree()) * phi;
  }
  RootOfUnityValue out;
  out.order_n = n;
  out.power_d = d;
  out.primitive_order = e;
  out.residue = std::move(g);
  return out;
}

// Factorization of a q-binomial at a primitive d-th root of unity: with
// a = a'd + r and b = b'd + s (0 <= r,s < d), the value is C(a',b') times the
// residual q-binomial [r s]_q evaluated at the same root (zero when s > r).
struct GuoZengFactors {
  BigInt binomial_part;
  QPolynomial residual;

  RootOfUnityValue residual_at_root(int d) const {
    RootOfUnityValue v = eval_at_root(residual, static_cast<std::uint64_t>(d), 1);
    v.residue = QPolynomial{binomial_part} * v.residue;
    return v;
  }
};

inline GuoZengFactors guo_zeng(int a, int b, int d) {
  if (b < 0 || b > a) throw DomainError("guo_zeng requires 0 <= b <= a");
  if (d < 1) throw DomainError("guo_zeng requires d >= 1");
  int aq = a / d, r = a % d;
  int bq = b / d, s = b % d;
  GuoZengFactors out;
  out.binomial_part = binomial(aq, bq);
  out.residual = s <= r ? qbinomial(r, s) : QPolynomial{};
  return out;
}

}  // namespace minuscule
