#pragma once

// Data-parallel inner loops shared by the objective and keyword modules.
// Each kernel has a scalar reference implementation and optional SIMD
// variants; the active table is chosen once at runtime from CPU features.
// Setting ENTRAIN_KERNELS=scalar forces the reference path.

#include <cstddef>
#include <span>
#include <string_view>

namespace entrain::kernels {

struct KernelTable {
    std::string_view name;
    double (*max)(std::span<const double> x);
    double (*sum)(std::span<const double> x);
    // y[i] += x[i]
    void (*accumulate)(std::span<double> y, std::span<const double> x);
    // x[i] *= a
    void (*scale)(std::span<double> x, double a);
    // out[i] = exp(x[i] - shift); returns the sum of out.
    double (*exp_shift_sum)(std::span<const double> x, double shift, std::span<double> out);
};

const KernelTable& scalar();
// nullptr when the variant is not compiled in or the CPU lacks the features.
const KernelTable* avx2();
const KernelTable* neon();

const KernelTable& active();

} // namespace entrain::kernels
