#pragma once

#if defined(__SSE__) || defined(__x86_64__)
#include <xmmintrin.h>
#define VENLANE_HAVE_MXCSR 1
#endif

namespace venlane {

/// Flushes subnormal floats to zero on the calling thread while in scope.
class FlushSubnormals {
 public:
  FlushSubnormals() {
#ifdef VENLANE_HAVE_MXCSR
    saved_ = _mm_getcsr();
    _mm_setcsr(saved_ | 0x8040u);  // FTZ | DAZ
#endif
  }
  ~FlushSubnormals() {
#ifdef VENLANE_HAVE_MXCSR
    _mm_setcsr(saved_);
#endif
  }
  FlushSubnormals(const FlushSubnormals&) = delete;
  FlushSubnormals& operator=(const FlushSubnormals&) = delete;

 private:
  unsigned saved_ = 0;
};

}  // namespace venlane
