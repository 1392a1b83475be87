#pragma once

#include <string>
#include <vector>

#include "padic_euler/euler.hpp"
#include "padic_euler/padic.hpp"
#include "padic_euler/projection.hpp"

namespace padic_euler {

inline constexpr long kDefaultReductionCap = 4;
inline constexpr long long kDefaultTermBudget = 1'000'000;

/*
 * omega = (omega_1, ..., omega_N) with the cached norm ||omega||_p. Over Q_p
 * the Z_p-span Lambda of the omegas is p^(min v(omega_i)) Z_p, so membership
 * is decided exactly.
 */
class ParameterVector {
 public:
  ParameterVector() = default;
  // Throws ZeroParameter for a zero component.
  ParameterVector(std::vector<Rational> omegas, long p);

  const std::vector<Rational>& omegas() const { return omegas_; }
  long size() const { return static_cast<long>(omegas_.size()); }
  long prime() const { return p_; }
  // min v_p(omega_i); kInfiniteValuation when N = 0.
  long min_valuation() const { return min_val_; }
  // ||omega||_p = p^(-min_valuation); 0 when N = 0.
  Rational norm() const;
  Rational total() const;  // |omega| = sum omega_i

 private:
  std::vector<Rational> omegas_;
  long p_ = 0;
  long min_val_ = kInfiniteValuation;
};

bool in_lattice(const Rational& x, const ParameterVector& omega);
// |x|_p > ||omega||_p, the regime of the large-x series.
bool series_applicable(const Rational& x, const ParameterVector& omega);

struct Strategy {
  enum class Kind { automatic, series, reduce };
  Kind kind = Kind::automatic;
  long k = 0;

  static Strategy automatic() { return {}; }
  static Strategy series() { return {Kind::series, 0}; }
  static Strategy reduce(long k) { return {Kind::reduce, k}; }
  // "auto", "series" or "reduce(k)"; throws DomainError otherwise.
  static Strategy parse(const std::string& text);
  std::string name() const;
};

struct ZetaRequest {
  long p = 5;
  long prec = 20;
  Rational s = 0;
  Rational x = 0;
  std::vector<Rational> omega;
  Strategy strategy;
  long guard = kDefaultGuard;
  long kcap = kDefaultReductionCap;
  long long budget = kDefaultTermBudget;
  long kmax_cap = kDefaultKmaxCap;
};

struct ZetaValue {
  PAdicNumber value;
  std::string strategy;
  long terms = 0;
  long guaranteed_prec = 0;
};

// C(a, j) over Q.
Rational binomial_rational(const Rational& a, long j);

// <x> for rational x, carrying `prec` digits.
OneUnit angle_of(const Rational& x, long p, long prec);

// Exponent s must lie in Z_p; throws ExponentNotIntegral otherwise.
void require_integral_exponent(const Rational& s, long p);

// Large-x series <x>^(1-s) sum_j C(1-s, j) E_{N,j}(0) x^-j.
ZetaValue zeta_series(const ZetaRequest& req);

// Series when |x|_p > ||omega||_p, else the smallest admissible
// p^k-distribution reduction.
ZetaValue zeta(const ZetaRequest& req);

// (<x>/x)^k E_{N,k}(x; omega) for |x|_p > ||omega||_p.
ZetaValue zeta_neg_int(long k, const Rational& x, const std::vector<Rational>& omega, long p, long prec);

// Signed sum over j with |x + j.omega|_p = ||omega||_p of zeta at (x + j.omega)/p.
ZetaValue zeta_star(const ZetaRequest& req);

// m-th x-derivative of the large-x series, differentiated termwise.
PAdicNumber zeta_series_dx(const ZetaRequest& req, long m);

// <m>^(1-s) sum_{j in [0,m)^N} (-1)^|j| zeta(s, (x + j.omega)/m) for odd m >= 1.
PAdicNumber zeta_distribution(const ZetaRequest& req, long m);

namespace detail {

// Calls f(j, sign) for every j in [0, m)^N.
template <class F>
void for_each_shift(long n, long m, F&& f) {
  std::vector<long> j(static_cast<size_t>(n), 0);
  while (true) {
    long parity = 0;
    for (long v : j) parity += v;
    f(j, parity % 2 == 0 ? 1 : -1);
    long i = n - 1;
    while (i >= 0 && ++j[static_cast<size_t>(i)] == m) {
      j[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) return;
  }
}

Rational shifted(const Rational& x, const std::vector<long>& j, const std::vector<Rational>& omega);

// Truncates v to `prec`, raising PrecisionLoss if fewer digits are known.
PAdicNumber certify(const PAdicNumber& v, long prec, const char* what);

long long shift_count(long p, long k, long n);

}  // namespace detail

}  // namespace padic_euler
