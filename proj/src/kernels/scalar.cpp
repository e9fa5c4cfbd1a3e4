#include <cmath>
#include <limits>

#include "entrain/kernels.hpp"

namespace entrain::kernels {

namespace {

double max_scalar(std::span<const double> x) {
    double m = -std::numeric_limits<double>::infinity();
    for (double v : x) m = v > m ? v : m;
    return m;
}

double sum_scalar(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v;
    return s;
}

void accumulate_scalar(std::span<double> y, std::span<const double> x) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += x[i];
}

void scale_scalar(std::span<double> x, double a) {
    for (double& v : x) v *= a;
}

double exp_shift_sum_scalar(std::span<const double> x, double shift, std::span<double> out) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        out[i] = std::exp(x[i] - shift);
        s += out[i];
    }
    return s;
}

} // namespace

const KernelTable& scalar() {
    static const KernelTable table{"scalar", max_scalar, sum_scalar, accumulate_scalar, scale_scalar,
                                   exp_shift_sum_scalar};
    return table;
}

} // namespace entrain::kernels
