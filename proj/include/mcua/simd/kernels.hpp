#pragma once

#include <cstddef>
#include <string>

namespace mcua::simd {

/// The dense double-precision kernels behind linear-model training and
/// prediction. Scalar reference implementations always exist; on x86 an
/// AVX2 variant is selected at runtime when the CPU supports it. The
/// MCUA_SIMD environment variable ("scalar", "avx2", "auto") pins the
/// choice, mainly for the equivalence tests.
struct Kernels {
    double (*dot)(const double* x, const double* y, std::size_t n);
    double (*sum)(const double* x, std::size_t n);
    double (*sumsq)(const double* x, std::size_t n);
    void (*axpy)(double a, const double* x, double* y, std::size_t n);
    void (*scale)(double* x, double a, std::size_t n);
    const char* name;
};

/// The kernel set active for this process (selected once, stable afterwards).
const Kernels& active();

/// Named kernel sets for equivalence testing; null when unavailable.
const Kernels* by_name(const std::string& name);

const Kernels& scalar_kernels();
bool avx2_available();

inline double dot(const double* x, const double* y, std::size_t n) {
    return active().dot(x, y, n);
}
inline double sum(const double* x, std::size_t n) { return active().sum(x, n); }
inline double sumsq(const double* x, std::size_t n) {
    return active().sumsq(x, n);
}
inline void axpy(double a, const double* x, double* y, std::size_t n) {
    active().axpy(a, x, y, n);
}
inline void scale(double* x, double a, std::size_t n) {
    active().scale(x, a, n);
}

}  // namespace mcua::simd
