#include "entrain/kernels.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)

#include <arm_neon.h>

#include <cmath>
#include <limits>

namespace entrain::kernels {

namespace {

double max_neon(std::span<const double> x) {
    const std::size_t n = x.size();
    std::size_t i = 0;
    double m = -std::numeric_limits<double>::infinity();
    if (n >= 2) {
        float64x2_t acc = vld1q_f64(x.data());
        for (i = 2; i + 2 <= n; i += 2) acc = vmaxq_f64(acc, vld1q_f64(x.data() + i));
        m = vmaxvq_f64(acc);
    }
    for (; i < n; ++i) m = x[i] > m ? x[i] : m;
    return m;
}

double sum_neon(std::span<const double> x) {
    const std::size_t n = x.size();
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) acc = vaddq_f64(acc, vld1q_f64(x.data() + i));
    double s = vaddvq_f64(acc);
    for (; i < n; ++i) s += x[i];
    return s;
}

void accumulate_neon(std::span<double> y, std::span<const double> x) {
    const std::size_t n = y.size();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_f64(y.data() + i, vaddq_f64(vld1q_f64(y.data() + i), vld1q_f64(x.data() + i)));
    for (; i < n; ++i) y[i] += x[i];
}

void scale_neon(std::span<double> x, double a) {
    const std::size_t n = x.size();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_f64(x.data() + i, vmulq_n_f64(vld1q_f64(x.data() + i), a));
    for (; i < n; ++i) x[i] *= a;
}

double exp_shift_sum_neon(std::span<const double> x, double shift, std::span<double> out) {
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::exp(x[i] - shift);
    return sum_neon(out);
}

} // namespace

const KernelTable* neon() {
    static const KernelTable table{"neon", max_neon, sum_neon, accumulate_neon, scale_neon, exp_shift_sum_neon};
    return &table;
}

} // namespace entrain::kernels

#else

namespace entrain::kernels {
const KernelTable* neon() { return nullptr; }
} // namespace entrain::kernels

#endif
