#include "z2cat/gf2/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace z2cat::gf2::kernels {

namespace {

const Ops& pick() {
    const char* req = std::getenv("Z2CAT_KERNEL");
    if (req != nullptr && std::strcmp(req, "scalar") == 0) return scalar_ops();
    const Ops* avx2 = avx2_ops();
    if (avx2 != nullptr) return *avx2;
    return scalar_ops();
}

} // namespace

const Ops& active_ops() {
    static const Ops& ops = pick();
    return ops;
}

} // namespace z2cat::gf2::kernels
