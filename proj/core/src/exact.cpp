#include "shamrock/exact.hpp"

#include <cmath>
#include <mutex>
#include <unordered_map>
#include <vector>

namespace shamrock {

std::string HalfInt::to_string() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

SqrtPiScaled& SqrtPiScaled::operator*=(const SqrtPiScaled& o) {
  q *= o.q;
  k += o.k;
  normalize();
  return *this;
}

SqrtPiScaled& SqrtPiScaled::operator/=(const SqrtPiScaled& o) {
  if (o.is_zero()) throw ArithmeticError("division by zero");
  q /= o.q;
  k -= o.k;
  normalize();
  return *this;
}

SqrtPiScaled& SqrtPiScaled::operator+=(const SqrtPiScaled& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (k != o.k) throw ArithmeticError("sum of values with different powers of sqrt(pi)");
  q += o.q;
  normalize();
  return *this;
}

std::string SqrtPiScaled::to_string() const {
  std::string s = q.get_str(10);
  if (k != 0) s += "*sqrt(pi)^" + std::to_string(k);
  return s;
}

BigInt factorial(std::int64_t n) {
  if (n < 0) throw ArithmeticError("factorial of a negative number");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

namespace {

std::mutex g_memo_mutex;
std::unordered_map<std::int64_t, SqrtPiScaled> g_memo;

SqrtPiScaled compute_hyperfactorial(HalfInt n) {
  if (n.is_integer()) {
    BigInt r = 1;
    for (std::int64_t k = 0; k < n.floor(); ++k) r *= factorial(k);
    return {BigRational(r), 0};
  }
  // Gamma(k + 1/2) = (2k)! / (4^k k!) * sqrt(pi)
  BigInt num = 1, den = 1;
  const std::int64_t last = n.floor();
  for (std::int64_t k = 0; k <= last; ++k) {
    num *= factorial(2 * k);
    den *= factorial(k);
    den <<= static_cast<mp_bitcnt_t>(2 * k);
  }
  return {BigRational(num, den), last + 1};
}

// Smallest prime factor for every integer up to n.
std::vector<std::int64_t> sieve(std::int64_t n) {
  std::vector<std::int64_t> spf(static_cast<std::size_t>(std::max<std::int64_t>(n, 1) + 1), 0);
  for (std::int64_t i = 2; i <= n; ++i) {
    if (spf[i] != 0) continue;
    for (std::int64_t j = i; j <= n; j += i) {
      if (spf[j] == 0) spf[j] = i;
    }
  }
  return spf;
}

}  // namespace

SqrtPiScaled hyperfactorial(HalfInt n) {
  if (n < 0) throw ArithmeticError("hyperfactorial of negative argument " + n.to_string());
  {
    std::lock_guard lock(g_memo_mutex);
    if (auto it = g_memo.find(n.twice()); it != g_memo.end()) return it->second;
  }
  auto value = compute_hyperfactorial(n);
  std::lock_guard lock(g_memo_mutex);
  return g_memo.emplace(n.twice(), std::move(value)).first->second;
}

SqrtPiScaled gamma_value(HalfInt n) {
  if (n <= 0) throw ArithmeticError("gamma at nonpositive argument " + n.to_string());
  if (n.is_integer()) return {BigRational(factorial(n.floor() - 1)), 0};
  const std::int64_t k = n.floor();
  BigInt den = factorial(k);
  den <<= static_cast<mp_bitcnt_t>(2 * k);
  return {BigRational(factorial(2 * k), den), 1};
}

HyperProduct& HyperProduct::mul(HalfInt n, int exponent) {
  if (exponent == 0) return *this;
  auto& e = factors_[n];
  e += exponent;
  if (e == 0) factors_.erase(n);
  return *this;
}

HyperProduct& HyperProduct::operator*=(const HyperProduct& o) {
  for (const auto& [n, e] : o.factors_) mul(n, e);
  return *this;
}

HyperProduct& HyperProduct::operator/=(const HyperProduct& o) {
  for (const auto& [n, e] : o.factors_) mul(n, -e);
  return *this;
}

HalfInt HyperProduct::min_argument() const {
  return factors_.empty() ? HalfInt(0) : factors_.begin()->first;
}

SqrtPiScaled HyperProduct::evaluate() const {
  if (!factors_.empty() && min_argument() < 0) {
    throw ArithmeticError("hyperfactorial of negative argument " + min_argument().to_string());
  }
  // Exponent of k! in the product, of 2, and of sqrt(pi).
  std::int64_t top = 0;
  for (const auto& [n, e] : factors_) top = std::max(top, n.is_integer() ? n.floor() : 2 * n.floor());
  std::vector<std::int64_t> fact_exp(static_cast<std::size_t>(top + 1), 0);
  std::int64_t two_exp = 0, pi_exp = 0;
  for (const auto& [n, e] : factors_) {
    if (n.is_integer()) {
      for (std::int64_t k = 0; k < n.floor(); ++k) fact_exp[k] += e;
    } else {
      const std::int64_t last = n.floor();
      for (std::int64_t k = 0; k <= last; ++k) {
        fact_exp[2 * k] += e;
        fact_exp[k] -= e;
        two_exp -= 2 * k * e;
      }
      pi_exp += (last + 1) * e;
    }
  }
  // Exponent of the integer j is the total exponent of all k! with k >= j.
  const auto spf = sieve(top);
  std::vector<std::int64_t> prime_exp(static_cast<std::size_t>(top + 1), 0);
  std::int64_t suffix = 0;
  for (std::int64_t j = top; j >= 2; --j) {
    suffix += fact_exp[j];
    if (suffix == 0) continue;
    for (std::int64_t r = j; r > 1; r /= spf[r]) prime_exp[spf[r]] += suffix;
  }
  if (top >= 2) prime_exp[2] += two_exp;
  else if (two_exp != 0) throw ArithmeticError("unexpected power of two");

  BigInt num = 1, den = 1, pw;
  for (std::int64_t p = 2; p <= top; ++p) {
    const std::int64_t e = prime_exp[p];
    if (e == 0) continue;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(e > 0 ? e : -e));
    (e > 0 ? num : den) *= pw;
  }
  return {BigRational(num, den), pi_exp};
}

SqrtPiScaled HyperProduct::evaluate_direct() const {
  SqrtPiScaled r;
  for (const auto& [n, e] : factors_) {
    const auto h = hyperfactorial(n);
    for (int k = 0; k < std::abs(e); ++k) {
      if (e > 0) r *= h;
      else r /= h;
    }
  }
  return r;
}

double HyperProduct::log_value() const {
  if (!factors_.empty() && min_argument() < 0) {
    throw ArithmeticError("hyperfactorial of negative argument " + min_argument().to_string());
  }
  // log H(n) = sum_{k<n} lgamma(k+1) for integer n, and
  // sum_{k<=n-1/2} lgamma(k+1/2) for half-integer n. The multiplicity of
  // every log-gamma term is accumulated first, so equal terms cancel exactly.
  std::int64_t top = 0;
  for (const auto& [n, e] : factors_) top = std::max(top, n.floor() + 1);
  std::vector<std::int64_t> whole(static_cast<std::size_t>(top + 1), 0);
  std::vector<std::int64_t> half(static_cast<std::size_t>(top + 1), 0);
  for (const auto& [n, e] : factors_) {
    if (n.is_integer()) whole[n.floor()] += e;
    else half[n.floor()] += e;
  }
  double total = 0;
  std::int64_t mw = 0, mh = 0;
  for (std::int64_t k = top; k >= 0; --k) {
    mh += half[k];
    if (mh != 0) total += static_cast<double>(mh) * std::lgamma(static_cast<double>(k) + 0.5);
    if (k + 1 <= top) mw += whole[k + 1];
    if (mw != 0) total += static_cast<double>(mw) * std::lgamma(static_cast<double>(k) + 1.0);
  }
  return total;
}

}  // namespace shamrock
