#include "qsmi/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace qsmi::kern {

const Ops& scalar_ops();
#if QSMI_BUILD_AVX2
const Ops& avx2_ops();
#endif

namespace {

bool cpu_has_avx2() {
#if QSMI_BUILD_AVX2
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Backend pick_initial() {
    if (const char* env = std::getenv("QSMI_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) return Backend::Scalar;
        if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) return Backend::Avx2;
    }
    return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
}

Backend& current() {
    static Backend b = pick_initial();
    return b;
}

} // namespace

const char* backend_name(Backend b) {
    return b == Backend::Avx2 ? "avx2" : "scalar";
}

std::vector<Backend> available_backends() {
    std::vector<Backend> v{Backend::Scalar};
    if (cpu_has_avx2()) v.push_back(Backend::Avx2);
    return v;
}

Backend backend() { return current(); }

bool set_backend(Backend b) {
    if (b == Backend::Avx2 && !cpu_has_avx2()) return false;
    current() = b;
    return true;
}

const Ops& ops_for(Backend b) {
#if QSMI_BUILD_AVX2
    if (b == Backend::Avx2) {
        if (!cpu_has_avx2()) throw std::runtime_error("avx2 backend not available");
        return avx2_ops();
    }
#else
    if (b == Backend::Avx2) throw std::runtime_error("avx2 backend not built");
#endif
    return scalar_ops();
}

const Ops& ops() { return ops_for(current()); }

} // namespace qsmi::kern
