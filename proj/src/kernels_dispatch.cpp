#include <cstdlib>
#include <string_view>

#include "circleroots/kernels.hpp"

namespace circleroots::kernels {

std::string_view isa_name(Isa isa) noexcept {
    switch (isa) {
        case Isa::Avx2: return "avx2";
        case Isa::Scalar: break;
    }
    return "scalar";
}

Isa detected_isa() noexcept {
#if defined(CIRCLEROOTS_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
        return Isa::Avx2;
#endif
    return Isa::Scalar;
}

Isa active_isa() noexcept {
    static const Isa isa = [] {
        if (const char* env = std::getenv("CIRCLEROOTS_ISA"); env && std::string_view(env) == "scalar")
            return Isa::Scalar;
        return detected_isa();
    }();
    return isa;
}

void evaluate_batch(std::span<const Coeff> coeffs, std::span<const Coeff> z, std::span<Coeff> out) {
#if defined(CIRCLEROOTS_HAVE_AVX2)
    if (active_isa() == Isa::Avx2)
        return evaluate_batch_avx2(coeffs, z, out);
#endif
    evaluate_batch_scalar(coeffs, z, out);
}

void evaluate_with_derivative(std::span<const Coeff> coeffs, std::span<const Coeff> z,
                              std::span<Coeff> value, std::span<Coeff> deriv,
                              std::span<double> bound) {
#if defined(CIRCLEROOTS_HAVE_AVX2)
    if (active_isa() == Isa::Avx2)
        return evaluate_with_derivative_avx2(coeffs, z, value, deriv, bound);
#endif
    evaluate_with_derivative_scalar(coeffs, z, value, deriv, bound);
}

}  // namespace circleroots::kernels
