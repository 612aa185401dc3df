#include "fcgram/fft.hpp"

#include <cmath>
#include <cstdint>

namespace fcgram {

namespace {

using cd = std::complex<double>;

bool is_pow2(std::size_t n) { return n && (n & (n - 1)) == 0; }

// Twiddle table w[k] = e^{-2*pi*i*k/n}, k < n/2; each entry from one
// sincos call so the table error stays at rounding level.
std::vector<cd> twiddles(std::size_t n) {
  std::vector<cd> w(n / 2);
  for (std::size_t k = 0; k < n / 2; ++k) {
    const double ang = -2.0 * M_PI * (static_cast<double>(k) / static_cast<double>(n));
    w[k] = cd(std::cos(ang), std::sin(ang));
  }
  return w;
}

void fft_pow2(std::vector<cd>& a, bool inverse) {
  const std::size_t n = a.size();
  if (n < 2) return;
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  const auto w = twiddles(n);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        cd tw = w[k * stride];
        if (inverse) tw = std::conj(tw);
        const cd u = a[i + k];
        const cd v = a[i + k + len / 2] * tw;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
      }
    }
  }
}

// Bluestein: X_k = conj(c_k) * sum_j (x_j conj(c_j)) c_{k-j}, with the
// chirp c_m = e^{+pi*i*m^2/n}; k^2 is reduced mod 2n in integers so the
// phase stays accurate for large sizes.
void fft_bluestein(std::vector<cd>& a, bool inverse) {
  const std::size_t n = a.size();
  std::vector<cd> chirp(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::uint64_t q = (static_cast<std::uint64_t>(k) * k) % (2 * n);
    const double ang = M_PI * (static_cast<double>(q) / static_cast<double>(n));
    chirp[k] = inverse ? cd(std::cos(ang), std::sin(ang)) : cd(std::cos(ang), -std::sin(ang));
  }
  std::size_t m = 1;
  while (m < 2 * n - 1) m <<= 1;
  std::vector<cd> x(m, cd(0.0, 0.0)), y(m, cd(0.0, 0.0));
  for (std::size_t k = 0; k < n; ++k) x[k] = a[k] * chirp[k];
  y[0] = std::conj(chirp[0]);
  for (std::size_t k = 1; k < n; ++k) y[k] = y[m - k] = std::conj(chirp[k]);
  fft_pow2(x, false);
  fft_pow2(y, false);
  for (std::size_t k = 0; k < m; ++k) x[k] *= y[k];
  fft_pow2(x, true);
  const double scale = 1.0 / static_cast<double>(m);
  for (std::size_t k = 0; k < n; ++k) a[k] = x[k] * chirp[k] * scale;
}

}  // namespace

void fft(std::vector<std::complex<double>>& data, bool inverse) {
  if (data.empty()) return;
  if (is_pow2(data.size())) {
    fft_pow2(data, inverse);
  } else {
    fft_bluestein(data, inverse);
  }
  if (inverse) {
    const double scale = 1.0 / static_cast<double>(data.size());
    for (auto& v : data) v *= scale;
  }
}

std::vector<std::complex<double>> fft_forward(std::vector<std::complex<double>> data) {
  fft(data, false);
  return data;
}

std::vector<std::complex<double>> fft_inverse(std::vector<std::complex<double>> data) {
  fft(data, true);
  return data;
}

}  // namespace fcgram
