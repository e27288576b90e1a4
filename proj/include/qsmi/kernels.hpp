#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qsmi::kern {

// Hot inner loops used by the similarity matrices, the MLP, k-means and the
// Hamming scan. Every operation has a scalar reference implementation and,
// on x86-64 with AVX2, a vectorized variant selected at runtime. Variants
// are equivalence-tested against the reference (exact for popcounts, small
// relative tolerance for float reductions, whose summation order differs).
struct Ops {
    const char* name;
    double (*dot)(const double* a, const double* b, size_t n);
    double (*sqnorm)(const double* a, size_t n);
    double (*sqdist)(const double* a, const double* b, size_t n);
    // y += alpha * x
    void (*axpy)(double* y, double alpha, const double* x, size_t n);
    uint64_t (*hamming)(const uint64_t* a, const uint64_t* b, size_t words);
};

enum class Backend { Scalar, Avx2 };

const char* backend_name(Backend b);
std::vector<Backend> available_backends();

// Active backend. Picked at first use: QSMI_KERNELS=scalar|avx2 if set,
// else the widest one the CPU supports.
Backend backend();
bool set_backend(Backend b); // false if not available on this CPU/build

const Ops& ops();                 // active backend's ops
const Ops& ops_for(Backend b);    // must be available

} // namespace qsmi::kern
