#include "superpose/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string_view>

namespace superpose::kernels {

#if defined(SUPERPOSE_HAVE_AVX2_BUILD)
const Ops* avx2_ops_impl();
#endif

const Ops* avx2_ops() {
#if defined(SUPERPOSE_HAVE_AVX2_BUILD)
  if (__builtin_cpu_supports("avx2")) {
    return avx2_ops_impl();
  }
#endif
  return nullptr;
}

namespace {

const Ops* resolve_from_env() {
  if (const char* env = std::getenv("SUPERPOSE_KERNELS")) {
    std::string_view want(env);
    if (want == "scalar") return &scalar_ops();
    if (want == "avx2" && avx2_ops()) return avx2_ops();
    // unknown or unavailable request falls through to auto
  }
  if (const Ops* v = avx2_ops()) return v;
  return &scalar_ops();
}

std::atomic<const Ops*>& current() {
  static std::atomic<const Ops*> cur{resolve_from_env()};
  return cur;
}

}  // namespace

const Ops& active() { return *current().load(std::memory_order_relaxed); }

bool select(std::string_view name) {
  if (name == "scalar") {
    current().store(&scalar_ops(), std::memory_order_relaxed);
    return true;
  }
  if (name == "avx2") {
    if (const Ops* v = avx2_ops()) {
      current().store(v, std::memory_order_relaxed);
      return true;
    }
    return false;
  }
  if (name == "auto") {
    current().store(avx2_ops() ? avx2_ops() : &scalar_ops(), std::memory_order_relaxed);
    return true;
  }
  return false;
}

}  // namespace superpose::kernels
