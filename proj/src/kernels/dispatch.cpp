#include <cstdlib>
#include <string_view>

#include "entrain/kernels.hpp"

namespace entrain::kernels {

const KernelTable& active() {
    static const KernelTable& table = []() -> const KernelTable& {
        const char* forced = std::getenv("ENTRAIN_KERNELS");
        if (forced && std::string_view(forced) == "scalar") return scalar();
        if (const auto* t = avx2()) return *t;
        if (const auto* t = neon()) return *t;
        return scalar();
    }();
    return table;
}

} // namespace entrain::kernels
