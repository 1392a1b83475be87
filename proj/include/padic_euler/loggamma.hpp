#pragma once

#include <map>
#include <string>
#include <vector>

#include "padic_euler/fermionic.hpp"
#include "padic_euler/zeta.hpp"

namespace padic_euler {

struct GammaStrategy {
  enum class Kind { automatic, stirling, integral_oracle, reduce };
  Kind kind = Kind::automatic;
  long k = 0;

  static GammaStrategy automatic() { return {}; }
  static GammaStrategy stirling() { return {Kind::stirling, 0}; }
  static GammaStrategy integral_oracle() { return {Kind::integral_oracle, 0}; }
  static GammaStrategy reduce(long k) { return {Kind::reduce, k}; }
  // "auto", "stirling", "integral_oracle" or "reduce(k)".
  static GammaStrategy parse(const std::string& text);
  std::string name() const;
};

struct LogGammaRequest {
  long p = 5;
  long prec = 20;
  Rational x = 0;
  std::vector<Rational> omega;
  GammaStrategy strategy;
  long level = 3;  // for integral_oracle
  long guard = kDefaultGuard;
  long kcap = kDefaultReductionCap;
  long long budget = kDefaultTermBudget;
  long kmax_cap = kDefaultKmaxCap;
};

using LogGammaValue = ZetaValue;

// x(log_p x - 1) + E_1 log_p x + sum_{j>=2} (-1)^j E_j x^(1-j) / (j(j-1)),
// E_j = E_{N,j}(0; omega).
LogGammaValue log_gamma_stirling(const LogGammaRequest& req);

// Stirling series, or p^k LogGamma-reduction, or the numeric integral.
LogGammaValue log_gamma(const LogGammaRequest& req);

// int (y log_p y - y) dmu_{-1}, y = x + omega.t, numerically at req.level.
NumericIntegral log_gamma_integral_oracle(const LogGammaRequest& req, long level);

// k-th x-derivative of LogGamma. k = 1 from the log series; k >= 2 from
// (-1)^k (k-2)! (<x>/x)^(k-1) zeta(k, x).
PAdicNumber psi(long k, const LogGammaRequest& req);

// The Laurent series of the k-th derivative: k = 1 as in psi, k >= 2 as
// (k-2)! sum_j (-1)^j C(-j-1, k-2) x^(1-k-j) E_j.
PAdicNumber psi_series(long k, const LogGammaRequest& req);

// Signed sum over j with |x + j.omega|_p = ||omega||_p of LogGamma at (x + j.omega)/p.
LogGammaValue log_gamma_star(const LogGammaRequest& req);

// m sum_{j in [0,m)^N} (-1)^|j| LogGamma((x + j.omega)/m) + E_{N,1}(x) log_p m for odd m.
PAdicNumber log_gamma_distribution(const LogGammaRequest& req, long m);

/*
 * Formal expansion a x log x + b log x + sum_i c_i x^i over Q, used to
 * compare the Stirling series with the psi series coefficient by
 * coefficient.
 */
struct LogLaurent {
  Rational xlogx = 0;
  Rational logx = 0;
  std::map<long, Rational> coeffs;

  // d/dx, with d(x log x) = log x + 1 and d(log x) = x^-1.
  LogLaurent derivative() const;
  bool operator==(const LogLaurent& other) const;
};

// Stirling series with the x^i terms down to i = -max_degree.
LogLaurent stirling_laurent(const std::vector<Rational>& omega, long max_degree);
// Series of the k-th derivative (k >= 1), x^i terms down to i = -max_degree.
LogLaurent psi_laurent(const std::vector<Rational>& omega, long k, long max_degree);
// Drops x^i terms with i < -max_degree.
LogLaurent truncate_laurent(const LogLaurent& f, long max_degree);

}  // namespace padic_euler
