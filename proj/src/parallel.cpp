#include "shiftpoly/parallel.hpp"

namespace shiftpoly::par {

Mode& mode() {
#ifdef SHIFTPOLY_OPENMP
  static Mode m = Mode::openmp;
#else
  static Mode m = Mode::serial;
#endif
  return m;
}

bool openmp_compiled() {
#ifdef SHIFTPOLY_OPENMP
  return true;
#else
  return false;
#endif
}

}  // namespace shiftpoly::par
