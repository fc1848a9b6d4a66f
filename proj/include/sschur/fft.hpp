#ifndef SSCHUR_FFT_HPP
#define SSCHUR_FFT_HPP

#include <complex>
#include <vector>

namespace sschur {

// In-place radix-2 Cooley-Tukey FFT. data.size() must be a power of two.
// Forward transform: X[k] = sum_j x[j] exp(-2*pi*i*j*k/N), no normalisation.
void fft_forward(std::vector<std::complex<double>>& data);

std::size_t next_pow2(std::size_t n);

} // namespace sschur

#endif
