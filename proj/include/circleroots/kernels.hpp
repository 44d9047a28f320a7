#pragma once

#include <span>
#include <string_view>

#include "circleroots/polynomial.hpp"

// Batched Horner kernels. Each entry point evaluates one polynomial at many
// points; the scalar variants are the reference, the AVX2 variants process
// four points per vector and must agree with them to rounding.
namespace circleroots::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa) noexcept;

// Best variant the running CPU supports (and this build contains).
Isa detected_isa() noexcept;

// Variant used by the dispatching entry points. Resolved once; the
// environment variable CIRCLEROOTS_ISA=scalar forces the reference path.
Isa active_isa() noexcept;

// out[i] = p(z[i]). out.size() must equal z.size().
void evaluate_batch_scalar(std::span<const Coeff> coeffs, std::span<const Coeff> z, std::span<Coeff> out);

// value[i] = p(z[i]), deriv[i] = p'(z[i]), bound[i] = sum_k |a_k||z[i]|^k.
void evaluate_with_derivative_scalar(std::span<const Coeff> coeffs, std::span<const Coeff> z,
                                     std::span<Coeff> value, std::span<Coeff> deriv,
                                     std::span<double> bound);

#if defined(CIRCLEROOTS_HAVE_AVX2)
void evaluate_batch_avx2(std::span<const Coeff> coeffs, std::span<const Coeff> z, std::span<Coeff> out);
void evaluate_with_derivative_avx2(std::span<const Coeff> coeffs, std::span<const Coeff> z,
                                   std::span<Coeff> value, std::span<Coeff> deriv,
                                   std::span<double> bound);
#endif

// Dispatch on active_isa().
void evaluate_batch(std::span<const Coeff> coeffs, std::span<const Coeff> z, std::span<Coeff> out);
void evaluate_with_derivative(std::span<const Coeff> coeffs, std::span<const Coeff> z,
                              std::span<Coeff> value, std::span<Coeff> deriv,
                              std::span<double> bound);

}  // namespace circleroots::kernels
