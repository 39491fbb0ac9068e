#include <cstdlib>
#include <string>

#include "mcua/simd/kernels.hpp"

namespace mcua::simd {

const Kernels* avx2_kernels_impl();  // kernels_avx2.cpp

bool avx2_available() {
#if defined(__x86_64__) && defined(__GNUC__)
    return avx2_kernels_impl() != nullptr && __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const Kernels* by_name(const std::string& name) {
    if (name == "scalar") return &scalar_kernels();
    if (name == "avx2") return avx2_available() ? avx2_kernels_impl() : nullptr;
    return nullptr;
}

namespace {

const Kernels& select() {
    const char* env = std::getenv("MCUA_SIMD");
    if (env != nullptr && std::string(env) != "auto") {
        if (const Kernels* k = by_name(env)) return *k;
        return scalar_kernels();  // unknown/unavailable request: safe default
    }
    if (avx2_available()) return *avx2_kernels_impl();
    return scalar_kernels();
}

}  // namespace

const Kernels& active() {
    static const Kernels& k = select();
    return k;
}

}  // namespace mcua::simd
