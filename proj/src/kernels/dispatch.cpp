#include "discordlab/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace discordlab::kernels {
namespace {

const Ops* pick() {
    const char* forced = std::getenv("DISCORD_LAB_KERNEL");
    if (forced != nullptr) {
        if (std::strcmp(forced, "scalar") == 0) return &scalar_ops();
#if defined(DISCORDLAB_HAVE_AVX2_KERNELS)
        if (std::strcmp(forced, "avx2") == 0 &&
            __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
            return &avx2_ops();
        }
#endif
#if defined(DISCORDLAB_HAVE_NEON_KERNELS)
        if (std::strcmp(forced, "neon") == 0) return &neon_ops();
#endif
        return &scalar_ops(); // unknown or unsupported request
    }
#if defined(DISCORDLAB_HAVE_AVX2_KERNELS)
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
        return &avx2_ops();
    }
#endif
#if defined(DISCORDLAB_HAVE_NEON_KERNELS)
    return &neon_ops();
#else
    return &scalar_ops();
#endif
}

} // namespace

const Ops& active() {
    static const Ops* ops = pick();
    return *ops;
}

const char* active_name() { return active().name; }

} // namespace discordlab::kernels
