#include "qsmi/kernels.hpp"

#include <bit>

namespace qsmi::kern {

namespace {

double dot_scalar(const double* a, const double* b, size_t n) {
    double s = 0.0;
    for (size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

double sqnorm_scalar(const double* a, size_t n) {
    double s = 0.0;
    for (size_t i = 0; i < n; ++i) s += a[i] * a[i];
    return s;
}

double sqdist_scalar(const double* a, const double* b, size_t n) {
    double s = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

void axpy_scalar(double* y, double alpha, const double* x, size_t n) {
    for (size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

uint64_t hamming_scalar(const uint64_t* a, const uint64_t* b, size_t words) {
    uint64_t d = 0;
    for (size_t i = 0; i < words; ++i) d += static_cast<uint64_t>(std::popcount(a[i] ^ b[i]));
    return d;
}

} // namespace

const Ops& scalar_ops() {
    static const Ops ops{"scalar", dot_scalar, sqnorm_scalar, sqdist_scalar,
                         axpy_scalar, hamming_scalar};
    return ops;
}

} // namespace qsmi::kern
