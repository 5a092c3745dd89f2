#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "turan/hypergraph.hpp"

// f_r(x) = prod_{i=1}^{r-1} (x+i-2) / (x+r-3)^r and its rightmost maximizer
// M_r on [2, inf). Root isolation runs in exact rational arithmetic.

namespace turan {

using BigRational = boost::multiprecision::cpp_rational;

/// Dense univariate polynomial, coefficients from degree 0 upward.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigRational> c) : c_(std::move(c)) { trim(); }

  static Polynomial linear(const BigRational& a0, const BigRational& a1) {
    return Polynomial({a0, a1});
  }

  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] const std::vector<BigRational>& coefficients() const { return c_; }
  [[nodiscard]] const BigRational& leading() const { return c_.back(); }

  [[nodiscard]] BigRational operator()(const BigRational& x) const {
    BigRational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  [[nodiscard]] Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<BigRational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<int>(i);
    return Polynomial(std::move(d));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRational> out(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(out));
  }

  friend Polynomial operator*(const BigRational& s, const Polynomial& a) {
    std::vector<BigRational> out = a.c_;
    for (auto& x : out) x *= s;
    return Polynomial(std::move(out));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<BigRational> out(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
    return Polynomial(std::move(out));
  }

  /// Remainder of polynomial long division.
  friend Polynomial operator%(Polynomial a, const Polynomial& b) {
    if (b.is_zero()) throw InvalidArgument("polynomial: division by zero");
    while (!a.is_zero() && a.degree() >= b.degree()) {
      const BigRational q = a.leading() / b.leading();
      const int shift = a.degree() - b.degree();
      for (int i = 0; i <= b.degree(); ++i) a.c_[i + shift] -= q * b.c_[i];
      a.c_.back() = 0;
      a.trim();
    }
    return a;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<BigRational> c_;
};

namespace detail {

inline int sign(const BigRational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

/// Sign of p immediately to the right of x (first nonvanishing derivative).
inline int sign_right_of(const Polynomial& p, const BigRational& x) {
  Polynomial d = p;
  while (!d.is_zero()) {
    if (int s = sign(d(x))) return s;
    d = d.derivative();
  }
  return 0;
}

class SturmChain {
 public:
  explicit SturmChain(const Polynomial& p) {
    chain_.push_back(p);
    chain_.push_back(p.derivative());
    while (!chain_.back().is_zero()) {
      Polynomial rem = chain_[chain_.size() - 2] % chain_.back();
      chain_.push_back(BigRational(-1) * rem);
    }
    chain_.pop_back();
  }

  /// Number of distinct real roots in (a, b].
  [[nodiscard]] int roots_in(const BigRational& a, const BigRational& b) const {
    return variations(a) - variations(b);
  }

 private:
  [[nodiscard]] int variations(const BigRational& x) const {
    int count = 0, last = 0;
    for (const auto& p : chain_) {
      const int s = sign(p(x));
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  std::vector<Polynomial> chain_;
};

/// Numerator of P(x) = prod_{i=1}^{r-1} (x+i-2).
inline Polynomial fr_numerator(unsigned r) {
  Polynomial p({BigRational(1)});
  for (unsigned i = 1; i + 1 <= r; ++i)
    p = p * Polynomial::linear(BigRational(static_cast<int>(i) - 2), 1);
  return p;
}

/// Numerator of f_r'(x) once the common (x+r-3)^(r+1) denominator is cleared:
/// P'(x)(x+r-3) - r P(x).
inline Polynomial fr_derivative_numerator(unsigned r) {
  const Polynomial p = fr_numerator(r);
  const Polynomial shift = Polynomial::linear(BigRational(static_cast<int>(r) - 3), 1);
  return p.derivative() * shift - BigRational(static_cast<int>(r)) * p;
}

}  // namespace detail

/// f_r(x) in exact rational arithmetic.
inline BigRational f_r_exact(unsigned r, const BigRational& x) {
  if (r < 2) throw InvalidArgument("f_r: requires r >= 2");
  if (x < 0) throw InvalidArgument("f_r: requires x >= 0");
  const BigRational base = x + static_cast<int>(r) - 3;
  if (base <= 0) throw InvalidArgument("f_r: pole at x + r - 3 = 0");
  BigRational den = 1;
  for (unsigned i = 0; i < r; ++i) den *= base;
  return detail::fr_numerator(r)(x) / den;
}

inline double f_r_eval(unsigned r, double x) {
  if (r < 2) throw InvalidArgument("f_r: requires r >= 2");
  if (x < 0) throw InvalidArgument("f_r: requires x >= 0");
  const double base = x + static_cast<double>(r) - 3.0;
  if (base <= 0) throw InvalidArgument("f_r: pole at x + r - 3 = 0");
  double num = 1.0;
  for (unsigned i = 1; i + 1 <= r; ++i) num *= x + static_cast<double>(i) - 2.0;
  return num / std::pow(base, static_cast<double>(r));
}

/// [m]_r / m^r as an exact rational.
inline BigRational falling_ratio(std::int64_t m, std::int64_t r) {
  BigRational v = 1;
  for (std::int64_t i = 0; i < r; ++i) v *= BigRational(m - i, m);
  return v;
}

/// M_r: rightmost local maximizer of f_r on [2, inf); M_1 = 2 by convention,
/// and 2 whenever f_r has no interior local maximum there.
inline double compute_Mr(unsigned r) {
  if (r <= 1) return 2.0;
  const Polynomial num = detail::fr_derivative_numerator(r);
  if (num.is_zero()) return 2.0;

  // Cauchy bound on root magnitudes.
  BigRational bound = 0;
  for (int i = 0; i < num.degree(); ++i) {
    BigRational q = num.coefficients()[i] / num.leading();
    if (q < 0) q = -q;
    if (q > bound) bound = q;
  }
  const BigRational lo0 = 2, hi0 = std::max(BigRational(3), BigRational(bound + 1));
  const detail::SturmChain sturm(num);

  // Isolate every distinct root in (2, hi0] into its own interval.
  std::vector<std::pair<BigRational, BigRational>> work{{lo0, hi0}}, isolated;
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    const int k = sturm.roots_in(a, b);
    if (k == 0) continue;
    if (k == 1) { isolated.emplace_back(a, b); continue; }
    const BigRational mid = (a + b) / 2;
    work.emplace_back(a, mid);
    work.emplace_back(mid, b);
  }

  const BigRational width(1, 1000000000000000LL);
  std::optional<BigRational> best;
  for (auto [a, b] : isolated) {
    while (b - a > width) {
      const BigRational mid = (a + b) / 2;
      if (sturm.roots_in(a, mid) == 1) b = mid;
      else a = mid;
    }
    // The root lies in (a, b]; no other root in the interval.
    const int left = detail::sign_right_of(num, a);
    const int right = num(b) == 0 ? detail::sign_right_of(num, b) : detail::sign(num(b));
    if (left > 0 && right < 0 && (!best || b > *best)) best = b;
  }
  if (!best) return 2.0;
  return static_cast<double>(*best);
}

}  // namespace turan
