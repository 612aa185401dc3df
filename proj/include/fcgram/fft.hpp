#pragma once

#include <complex>
#include <vector>

namespace fcgram {

// Complex transforms of any length: iterative radix-2 for powers of two,
// Bluestein's chirp-z reduction otherwise.  Forward computes
// X_k = sum_j x_j e^{-2*pi*i*jk/N}; inverse includes the 1/N factor.
void fft(std::vector<std::complex<double>>& data, bool inverse);

std::vector<std::complex<double>> fft_forward(std::vector<std::complex<double>> data);
std::vector<std::complex<double>> fft_inverse(std::vector<std::complex<double>> data);

}  // namespace fcgram
