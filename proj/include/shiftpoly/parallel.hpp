#pragma once

#include <cstddef>

namespace shiftpoly::par {

enum class Mode { serial, openmp };

/// Process-wide execution mode.  Defaults to openmp when compiled in,
/// serial otherwise.  Tests flip this to compare the two paths.
Mode& mode();

bool openmp_compiled();

/// Calls f(i) for i in [0, n).  Each index must write only its own slots so
/// results are identical (bit for bit) regardless of mode or thread count.
template <class F>
void for_each_index(std::size_t n, F&& f) {
#ifdef SHIFTPOLY_OPENMP
  if (mode() == Mode::openmp) {
#pragma omp parallel for schedule(dynamic, 8)
    for (long long i = 0; i < static_cast<long long>(n); ++i) f(static_cast<std::size_t>(i));
    return;
  }
#endif
  for (std::size_t i = 0; i < n; ++i) f(i);
}

}  // namespace shiftpoly::par
