#pragma once

#include <string>
#include <vector>

#include "padic_euler/padic.hpp"

namespace padic_euler {

// Hard cap on the degree of an Euler table.
inline constexpr long kDefaultKmaxCap = 512;

// E_n(0) for the classical Euler polynomials, from
// 2 E_n(0) = -sum_{k<n} C(n,k) E_k(0), E_0(0) = 1.
Rational euler_number_poly_at_zero(long n);

/*
 * Exact coefficients c_k = E_{N,k}(0; omega) of
 *   2^N e^{xt} / prod_j (e^{omega_j t} + 1) = sum_n E_{N,n}(x; omega) t^n / n!
 * for 0 <= k <= kmax. N = omega.size(); N = 0 gives c = (1, 0, 0, ...).
 */
class EulerTable {
 public:
  // Throws ZeroParameter for a zero omega_j and KmaxExceeded past kmax_cap.
  static EulerTable build(std::vector<Rational> omega, long kmax, long kmax_cap = kDefaultKmaxCap);

  long order() const { return static_cast<long>(omega_.size()); }
  long kmax() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& omega() const { return omega_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& coeff(long k) const;

 private:
  EulerTable(std::vector<Rational> omega, std::vector<Rational> coeffs)
      : omega_(std::move(omega)), coeffs_(std::move(coeffs)) {}

  std::vector<Rational> omega_;
  std::vector<Rational> coeffs_;
};

EulerTable build_table(const std::vector<Rational>& omega, long kmax, long kmax_cap = kDefaultKmaxCap);

// E_{N,n}(x; omega) = sum_k C(n,k) c_k x^(n-k). Throws DegreeOutOfRange for n > kmax.
Rational euler_poly(const EulerTable& table, long n, const Rational& x);

// Value of the complex multiple Euler zeta function at s = -k:
// 2^-N E_{N,k}(x; omega).
Rational classical_zeta_special_value(const EulerTable& table, long k, const Rational& x);

// Convenience: E_{N,n}(x; omega) with a table sized for n.
Rational euler_poly(const std::vector<Rational>& omega, long n, const Rational& x);

BigInt binomial(long n, long k);

// JSON array [{"k":..,"num":"..","den":".."}, ...].
std::string table_to_json(const EulerTable& table);

}  // namespace padic_euler
