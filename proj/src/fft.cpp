#include "nsmild/fft.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "nsmild/errors.hpp"

namespace nsmild {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

using cd = std::complex<double>;

// plain schoolbook complex ops; std::complex operator* carries Annex-G
// branches that the hot loops do not want
inline cd cmul(cd a, cd b) {
    return cd(a.real() * b.real() - a.imag() * b.imag(),
              a.real() * b.imag() + a.imag() * b.real());
}
inline cd cmul_conj(cd a, cd b) {  // a * conj(b)
    return cd(a.real() * b.real() + a.imag() * b.imag(),
              a.imag() * b.real() - a.real() * b.imag());
}

std::vector<int> factorize(int n) {
    std::vector<int> radices;
    for (int p : {2, 3, 5}) {
        while (n % p == 0) {
            radices.push_back(p);
            n /= p;
        }
    }
    if (n != 1) radices.clear();
    return radices;
}

} // namespace

bool Fft1d::supported_length(int n) { return n >= 1 && !factorize(n).empty(); }

Fft1d::Fft1d(int n) : n_(n) {
    radices_ = factorize(n);
    if (radices_.empty()) throw DomainError("Fft1d: length must factor into 2, 3 and 5");
    twiddle_.resize(n_);
    for (int j = 0; j < n_; ++j) {
        const double a = -kTwoPi * j / n_;
        twiddle_[j] = {std::cos(a), std::sin(a)};
    }
    pow2_ = (n & (n - 1)) == 0;
    if (pow2_) {
        bitrev_.resize(n);
        int bits = 0;
        while ((1 << bits) < n) ++bits;
        for (int i = 0; i < n; ++i) {
            int r = 0;
            for (int b = 0; b < bits; ++b)
                if (i & (1 << b)) r |= 1 << (bits - 1 - b);
            bitrev_[i] = r;
        }
        // concatenated per-stage twiddles e^{-2 pi i j/len}, j < len/2
        stage_tw_.reserve(n - 1);
        for (int len = 2; len <= n; len <<= 1)
            for (int j = 0; j < len / 2; ++j) {
                const double a = -kTwoPi * j / len;
                stage_tw_.push_back({std::cos(a), std::sin(a)});
            }
    }
}

void Fft1d::pow2_transform(const cd* in, cd* out, bool inv) const {
    const int n = n_;
    for (int i = 0; i < n; ++i) out[bitrev_[i]] = in[i];
    const cd* tw = stage_tw_.data();
    for (int len = 2; len <= n; len <<= 1) {
        const int half = len / 2;
        for (int base = 0; base < n; base += len) {
            for (int j = 0; j < half; ++j) {
                const cd w = tw[j];
                const cd u = out[base + j];
                const cd t = inv ? cmul_conj(out[base + j + half], w)
                                 : cmul(out[base + j + half], w);
                out[base + j] = u + t;
                out[base + j + half] = u - t;
            }
        }
        tw += half;
    }
}

// out[k] = sum_j in[j*stride] w^{jk}; decimation in time by the smallest
// radix, column combine buffered so `out` doubles as workspace.
void Fft1d::rec(const cd* in, cd* out, int n, int stride, bool inv) const {
    if (n == 1) {
        out[0] = in[0];
        return;
    }
    int p = 2;
    if (n % 2 != 0) p = (n % 3 == 0) ? 3 : 5;
    const int m = n / p;
    for (int r = 0; r < p; ++r)
        rec(in + static_cast<std::ptrdiff_t>(r) * stride, out + static_cast<std::ptrdiff_t>(r) * m,
            m, stride * p, inv);

    const int scale = n_ / n;
    cd tmp[5];
    for (int k2 = 0; k2 < m; ++k2) {
        tmp[0] = out[k2];
        for (int r = 1; r < p; ++r) {
            // r*k2 < n, no reduction needed
            const cd w = twiddle_[static_cast<std::size_t>(r) * k2 * scale];
            const cd v = out[static_cast<std::ptrdiff_t>(r) * m + k2];
            tmp[r] = inv ? cmul_conj(v, w) : cmul(v, w);
        }
        for (int q = 0; q < p; ++q) {
            cd acc = tmp[0];
            for (int r = 1; r < p; ++r) {
                const cd w = twiddle_[static_cast<std::size_t>(r) * q * m % n * scale];
                acc += inv ? cmul_conj(tmp[r], w) : cmul(tmp[r], w);
            }
            out[static_cast<std::ptrdiff_t>(q) * m + k2] = acc;
        }
    }
}

void Fft1d::forward(const cd* in, cd* out) const {
    if (pow2_)
        pow2_transform(in, out, false);
    else
        rec(in, out, n_, 1, false);
}

void Fft1d::inverse(const cd* in, cd* out) const {
    if (pow2_)
        pow2_transform(in, out, true);
    else
        rec(in, out, n_, 1, true);
}

namespace {

void transform_axis(std::vector<cd>& data, int n, int axis, const Fft1d& plan, bool inv) {
    const long lines = static_cast<long>(n) * n;
#pragma omp parallel
    {
        std::vector<cd> buf_in(n), buf_out(n);
#pragma omp for schedule(static)
        for (long line = 0; line < lines; ++line) {
            const int a = static_cast<int>(line / n);
            const int b = static_cast<int>(line % n);
            std::size_t base;
            std::size_t stride;
            if (axis == 0) {
                base = static_cast<std::size_t>(a) * n + b;
                stride = static_cast<std::size_t>(n) * n;
            } else if (axis == 1) {
                base = static_cast<std::size_t>(a) * n * n + b;
                stride = n;
            } else {
                base = (static_cast<std::size_t>(a) * n + b) * n;
                stride = 1;
            }
            const cd* src = data.data() + base;
            if (stride == 1) {
                if (inv)
                    plan.inverse(src, buf_out.data());
                else
                    plan.forward(src, buf_out.data());
            } else {
                for (int j = 0; j < n; ++j) buf_in[j] = src[j * stride];
                if (inv)
                    plan.inverse(buf_in.data(), buf_out.data());
                else
                    plan.forward(buf_in.data(), buf_out.data());
            }
            cd* dst = data.data() + base;
            for (int j = 0; j < n; ++j) dst[j * stride] = buf_out[j];
        }
    }
}

} // namespace

namespace {

const Fft1d& cached_plan(int n) {
    static std::map<int, Fft1d> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, Fft1d(n)).first;
    return it->second;
}

} // namespace

void fft3_forward(std::vector<cd>& data, int n) {
    const Fft1d& plan = cached_plan(n);
    for (int axis = 0; axis < 3; ++axis) transform_axis(data, n, axis, plan, false);
}

void fft3_inverse(std::vector<cd>& data, int n) {
    const Fft1d& plan = cached_plan(n);
    for (int axis = 0; axis < 3; ++axis) transform_axis(data, n, axis, plan, true);
}

} // namespace nsmild
