#include "ccgrowth/growth.hpp"

#include <cmath>

namespace ccgrowth {

Rational estimate_degree(const GrowthSeries& series) {
  const auto& c = series.counts;
  if (c.size() < 8)
    throw std::invalid_argument("series too short to estimate a degree");
  std::size_t n = c.size() - 1, half = n / 2;
  if (c[half] == 0)
    throw std::domain_error("degenerate series: zero count at half radius");
  if (c[n] < 2)
    throw std::invalid_argument("series too small to estimate a degree");
  double d_hat = std::log(static_cast<double>(c[n]) / static_cast<double>(c[half])) /
                 std::log(2.0);
  auto fixed = static_cast<long>(std::llround(d_hat * 1e6));
  return Rational(BigInt(fixed), BigInt(1000000));
}

BigInt zr_ball_count(int r, int n) {
  if (r < 1) throw std::invalid_argument("zr_ball_count requires r >= 1");
  if (n < 0) throw std::invalid_argument("zr_ball_count requires n >= 0");
  BigInt total = 0;
  for (int k = 0; k <= std::min(r, n); ++k) {
    BigInt a, b;
    mpz_bin_uiui(a.get_mpz_t(), static_cast<unsigned long>(r),
                 static_cast<unsigned long>(k));
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    BigInt term = a * b;
    mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
    total += term;
  }
  return total;
}

std::string series_to_csv(const std::vector<long long>& counts) {
  std::string out = "n,count\n";
  for (std::size_t i = 0; i < counts.size(); ++i)
    out += std::to_string(i) + "," + std::to_string(counts[i]) + "\n";
  return out;
}

} // namespace ccgrowth
