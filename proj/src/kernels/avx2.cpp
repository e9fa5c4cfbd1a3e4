#include "entrain/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>
#include <limits>

#define ENTRAIN_AVX2 __attribute__((target("avx2,fma")))

namespace entrain::kernels {

namespace {

ENTRAIN_AVX2 double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d swapped = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}

ENTRAIN_AVX2 double max_avx2(std::span<const double> x) {
    const std::size_t n = x.size();
    std::size_t i = 0;
    double m = -std::numeric_limits<double>::infinity();
    if (n >= 4) {
        __m256d acc = _mm256_loadu_pd(x.data());
        for (i = 4; i + 4 <= n; i += 4) acc = _mm256_max_pd(acc, _mm256_loadu_pd(x.data() + i));
        alignas(32) double lanes[4];
        _mm256_store_pd(lanes, acc);
        for (double v : lanes) m = v > m ? v : m;
    }
    for (; i < n; ++i) m = x[i] > m ? x[i] : m;
    return m;
}

ENTRAIN_AVX2 double sum_avx2(std::span<const double> x) {
    const std::size_t n = x.size();
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x.data() + i));
    double s = hsum(acc);
    for (; i < n; ++i) s += x[i];
    return s;
}

ENTRAIN_AVX2 void accumulate_avx2(std::span<double> y, std::span<const double> x) {
    const std::size_t n = y.size();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d a = _mm256_loadu_pd(y.data() + i);
        _mm256_storeu_pd(y.data() + i, _mm256_add_pd(a, _mm256_loadu_pd(x.data() + i)));
    }
    for (; i < n; ++i) y[i] += x[i];
}

ENTRAIN_AVX2 void scale_avx2(std::span<double> x, double a) {
    const std::size_t n = x.size();
    const __m256d k = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) _mm256_storeu_pd(x.data() + i, _mm256_mul_pd(_mm256_loadu_pd(x.data() + i), k));
    for (; i < n; ++i) x[i] *= a;
}

// exp stays scalar (libm accuracy); the reduction is vectorized.
ENTRAIN_AVX2 double exp_shift_sum_avx2(std::span<const double> x, double shift, std::span<double> out) {
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::exp(x[i] - shift);
    return sum_avx2(out);
}

} // namespace

const KernelTable* avx2() {
    static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    static const KernelTable table{"avx2", max_avx2, sum_avx2, accumulate_avx2, scale_avx2,
                                   exp_shift_sum_avx2};
    return supported ? &table : nullptr;
}

} // namespace entrain::kernels

#else

namespace entrain::kernels {
const KernelTable* avx2() { return nullptr; }
} // namespace entrain::kernels

#endif
