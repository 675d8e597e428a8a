#pragma once

#include <complex>
#include <vector>

namespace nsmild {

// Mixed-radix (2/3/5) complex FFT for one line length, out-of-place.
// forward computes X[k] = sum_j x[j] e^{-2 pi i jk/n}, inverse the
// conjugate-kernel sum without the 1/n factor.
class Fft1d {
public:
    explicit Fft1d(int n);

    int length() const { return n_; }
    void forward(const std::complex<double>* in, std::complex<double>* out) const;
    void inverse(const std::complex<double>* in, std::complex<double>* out) const;

    static bool supported_length(int n);

private:
    void rec(const std::complex<double>* in, std::complex<double>* out, int n, int stride,
             bool inv) const;
    void pow2_transform(const std::complex<double>* in, std::complex<double>* out,
                        bool inv) const;

    int n_;
    bool pow2_ = false;
    std::vector<std::complex<double>> twiddle_;   // e^{-2 pi i j / n}
    std::vector<std::complex<double>> stage_tw_;  // radix-2 per-stage tables
    std::vector<int> bitrev_;
    std::vector<int> radices_;
};

// In-place 3D transforms on an n^3 row-major cube, one axis at a time,
// parallel over lines.  No normalization on either direction.
void fft3_forward(std::vector<std::complex<double>>& data, int n);
void fft3_inverse(std::vector<std::complex<double>>& data, int n);

} // namespace nsmild
