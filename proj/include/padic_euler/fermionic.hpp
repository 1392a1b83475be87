#pragma once

#include <functional>
#include <span>
#include <vector>

#include "padic_euler/euler.hpp"
#include "padic_euler/padic.hpp"
#include "padic_euler/report.hpp"

namespace padic_euler {

// Refuse numeric integrals with more than this many integrand evaluations.
inline constexpr long long kDefaultNumericBudget = 100'000'000;

enum class IntegrandKind { polynomial, log_shift, xlogx_shift, angle_power, custom };

/*
 * Integrand f(t) on Z_p^N for the numeric fermionic backend. For the
 * built-in kinds f depends on t only through y = x + omega . t:
 *   polynomial   y^n
 *   log_shift    log_p y
 *   xlogx_shift  y (log_p y - 1)
 *   angle_power  <y>^(1-s)
 * With `starred` set, f is replaced by 0 wherever |y|_p < ||omega||_p.
 */
struct IntegrandSpec {
  using Callback = std::function<PAdicNumber(std::span<const long> t, long p, long prec)>;

  IntegrandKind kind = IntegrandKind::polynomial;
  Rational x = 0;
  std::vector<Rational> omega;
  long n = 0;
  Rational s = 0;
  bool starred = false;
  Callback custom;
  long custom_variables = 0;

  long variables() const;

  static IntegrandSpec polynomial(long n, Rational x, std::vector<Rational> omega);
  static IntegrandSpec log_shift(Rational x, std::vector<Rational> omega);
  static IntegrandSpec xlogx_shift(Rational x, std::vector<Rational> omega);
  static IntegrandSpec angle_power(Rational x, std::vector<Rational> omega, Rational s);
  static IntegrandSpec callback(long variables, Callback f);
};

// f(y) for a built-in kind at the exact point y: zero where the starred
// truncation applies, DomainError where log_p / <.> would be evaluated at 0.
PAdicNumber evaluate_integrand(const IntegrandSpec& spec, const Rational& y, long p, long prec);

struct NumericIntegral {
  PAdicNumber value;     // S_L
  PAdicNumber previous;  // S_{L-1}
  long level = 0;
  // Largest M' <= M with S_L == S_{L-1} mod p^M'.
  long stabilized = 0;
  long long terms = 0;
};

// S_L = sum_{a < p^L} (-1)^a f(a).
PAdicNumber fermionic_sum_1d(const std::function<PAdicNumber(long)>& f, long p, long level);

// Iterated truncated sums over [0, p^L)^N with empirical stabilization.
NumericIntegral fermionic_integral_numeric(const IntegrandSpec& spec, long p, long level, long prec,
                                           long long budget = kDefaultNumericBudget, long guard = kDefaultGuard);

// int (x + omega . t)^n dmu_{-1} = E_{N,n}(x; omega), reduced into Q_p.
PAdicNumber fermionic_integral_exact_poly(long n, const Rational& x, const std::vector<Rational>& omega, long p,
                                          long prec);

// One integration step raises the order: integrating E_{k-1,n}(x + omega_k t; omega_1..omega_{k-1})
// over t numerically is compared with E_{k,n}(x; omega_1..omega_k).
IdentityReport check_step_lemma(long k, long n, const Rational& x, const std::vector<Rational>& omega, long p,
                                long level, long prec = 20);

}  // namespace padic_euler
