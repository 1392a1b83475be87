#include "padic_euler/euler.hpp"

#include <mutex>
#include <json.hpp>

namespace padic_euler {

namespace {

std::mutex euler_cache_mutex;
std::vector<Rational> euler_cache{Rational(1)};

bool is_two_smooth(BigInt d) {
  while (d % 2 == 0) d /= 2;
  return d == 1;
}

}  // namespace

BigInt binomial(long n, long k) {
  BigInt r;
  if (k < 0 || k > n) return BigInt(0);
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rational euler_number_poly_at_zero(long n) {
  std::lock_guard<std::mutex> lock(euler_cache_mutex);
  while (static_cast<long>(euler_cache.size()) <= n) {
    const long m = static_cast<long>(euler_cache.size());
    Rational acc = 0;
    for (long k = 0; k < m; ++k) acc += Rational(binomial(m, k)) * euler_cache[static_cast<size_t>(k)];
    Rational next = -acc / 2;
    next.canonicalize();
    euler_cache.push_back(next);
  }
  return euler_cache[static_cast<size_t>(n)];
}

const Rational& EulerTable::coeff(long k) const {
  if (k < 0 || k > kmax()) {
    throw DegreeOutOfRange("degree " + std::to_string(k) + " outside table of kmax " + std::to_string(kmax()));
  }
  return coeffs_[static_cast<size_t>(k)];
}

EulerTable EulerTable::build(std::vector<Rational> omega, long kmax, long kmax_cap) {
  if (kmax < 0) throw DegreeOutOfRange("kmax must be nonnegative");
  if (kmax > kmax_cap) {
    throw KmaxExceeded("Euler table degree " + std::to_string(kmax) + " exceeds cap " + std::to_string(kmax_cap));
  }
  for (const Rational& w : omega) {
    if (w == 0) throw ZeroParameter("omega components must be nonzero");
  }
  const size_t len = static_cast<size_t>(kmax) + 1;
  std::vector<Rational> classical(len);
  for (size_t k = 0; k < len; ++k) classical[k] = euler_number_poly_at_zero(static_cast<long>(k));

  // EGF product: multiply in one factor 2/(e^{w t}+1) = sum_k E_k(0) w^k t^k/k! at a time.
  std::vector<Rational> acc(len, Rational(0));
  acc[0] = 1;
  for (const Rational& w : omega) {
    std::vector<Rational> factor(len);
    Rational wk = 1;
    for (size_t k = 0; k < len; ++k) {
      factor[k] = classical[k] * wk;
      wk *= w;
    }
    std::vector<Rational> next(len, Rational(0));
    for (size_t n = 0; n < len; ++n) {
      for (size_t k = 0; k <= n; ++k) {
        if (acc[k] == 0 || factor[n - k] == 0) continue;
        next[n] += Rational(binomial(static_cast<long>(n), static_cast<long>(k))) * acc[k] * factor[n - k];
      }
    }
    acc = std::move(next);
  }

  bool integral = true;
  for (const Rational& w : omega) integral = integral && w.get_den() == 1;
  if (integral) {
    for (const Rational& c : acc) {
      if (!is_two_smooth(BigInt(c.get_den()))) {
        throw Error("internal: Euler coefficient with non-2-smooth denominator for integral omega");
      }
    }
  }
  return EulerTable(std::move(omega), std::move(acc));
}

EulerTable build_table(const std::vector<Rational>& omega, long kmax, long kmax_cap) {
  return EulerTable::build(omega, kmax, kmax_cap);
}

Rational euler_poly(const EulerTable& table, long n, const Rational& x) {
  if (n < 0 || n > table.kmax()) {
    throw DegreeOutOfRange("degree " + std::to_string(n) + " outside table of kmax " + std::to_string(table.kmax()));
  }
  // Horner in x over the binomially weighted coefficients.
  Rational acc = 0;
  for (long k = 0; k <= n; ++k) {
    acc = acc * x + Rational(binomial(n, k)) * table.coeff(k);
  }
  return acc;
}

Rational euler_poly(const std::vector<Rational>& omega, long n, const Rational& x) {
  return euler_poly(build_table(omega, n), n, x);
}

Rational classical_zeta_special_value(const EulerTable& table, long k, const Rational& x) {
  Rational v = euler_poly(table, k, x);
  v /= Rational(BigInt(1) << static_cast<unsigned long>(table.order()));
  v.canonicalize();
  return v;
}

std::string table_to_json(const EulerTable& table) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (long k = 0; k <= table.kmax(); ++k) {
    const Rational& c = table.coeff(k);
    arr.push_back({{"k", k}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  }
  return arr.dump();
}

}  // namespace padic_euler
