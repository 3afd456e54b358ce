// Lane selection. Runs once during static initialization (main() has not
// started, no threads yet); select_lane() lets tests flip lanes explicitly.

#include "symlab/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace symlab::kernels {

DotFn dot = scalar::dot;
AxpyFn axpy = scalar::axpy;
MatvecFn matvec = scalar::matvec;
MatvecTAccFn matvec_t_acc = scalar::matvec_t_acc;
GerAccFn ger_acc = scalar::ger_acc;

namespace {

const char* g_lane = "scalar";

void use_scalar() {
    dot = scalar::dot;
    axpy = scalar::axpy;
    matvec = scalar::matvec;
    matvec_t_acc = scalar::matvec_t_acc;
    ger_acc = scalar::ger_acc;
    g_lane = "scalar";
}

#if defined(__x86_64__) || defined(_M_X64)
bool use_avx2() {
    if (!avx2::supported()) return false;
    dot = avx2::dot;
    axpy = avx2::axpy;
    matvec = avx2::matvec;
    matvec_t_acc = avx2::matvec_t_acc;
    ger_acc = avx2::ger_acc;
    g_lane = "avx2";
    return true;
}
#endif

bool apply_lane(const char* name) {
    if (name == nullptr) {
#if defined(__x86_64__) || defined(_M_X64)
        if (use_avx2()) return true;
#endif
        use_scalar();
        return true;
    }
    if (std::strcmp(name, "scalar") == 0) {
        use_scalar();
        return true;
    }
#if defined(__x86_64__) || defined(_M_X64)
    if (std::strcmp(name, "avx2") == 0) return use_avx2();
#endif
    return false;
}

struct Init {
    Init() {
        const char* forced = std::getenv("SYMLAB_KERNEL");
        if (forced == nullptr || !apply_lane(forced)) apply_lane(nullptr);
    }
};

const Init g_init;

} // namespace

const char* active_lane() { return g_lane; }

bool select_lane(const char* name) { return apply_lane(name); }

} // namespace symlab::kernels
