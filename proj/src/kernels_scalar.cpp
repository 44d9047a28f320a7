#include <cassert>
#include <cmath>
#include <vector>

#include "circleroots/kernels.hpp"

namespace circleroots::kernels {

void evaluate_batch_scalar(std::span<const Coeff> coeffs, std::span<const Coeff> z, std::span<Coeff> out) {
    assert(!coeffs.empty() && out.size() == z.size());
    const std::size_t n = coeffs.size() - 1;
    for (std::size_t i = 0; i < z.size(); ++i) {
        const double zr = z[i].real(), zi = z[i].imag();
        double yr = coeffs[n].real(), yi = coeffs[n].imag();
        for (std::size_t k = n; k-- > 0;) {
            const double tr = yr * zr - yi * zi + coeffs[k].real();
            yi = yr * zi + yi * zr + coeffs[k].imag();
            yr = tr;
        }
        out[i] = Coeff{yr, yi};
    }
}

void evaluate_with_derivative_scalar(std::span<const Coeff> coeffs, std::span<const Coeff> z,
                                     std::span<Coeff> value, std::span<Coeff> deriv,
                                     std::span<double> bound) {
    assert(!coeffs.empty());
    assert(value.size() == z.size() && deriv.size() == z.size() && bound.size() == z.size());
    const std::size_t n = coeffs.size() - 1;

    std::vector<double> mag(coeffs.size());
    for (std::size_t k = 0; k <= n; ++k)
        mag[k] = std::abs(coeffs[k]);

    for (std::size_t i = 0; i < z.size(); ++i) {
        const double zr = z[i].real(), zi = z[i].imag();
        const double az = std::sqrt(zr * zr + zi * zi);
        double yr = coeffs[n].real(), yi = coeffs[n].imag();
        double dr = 0.0, di = 0.0;
        double b = mag[n];
        for (std::size_t k = n; k-- > 0;) {
            const double ur = dr * zr - di * zi + yr;
            di = dr * zi + di * zr + yi;
            dr = ur;
            const double tr = yr * zr - yi * zi + coeffs[k].real();
            yi = yr * zi + yi * zr + coeffs[k].imag();
            yr = tr;
            b = b * az + mag[k];
        }
        value[i] = Coeff{yr, yi};
        deriv[i] = Coeff{dr, di};
        bound[i] = b;
    }
}

}  // namespace circleroots::kernels
