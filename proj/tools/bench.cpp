// Times the parallel kernels against the serial reference path and checks
// that both produce identical results.  Not a test: numbers go to stdout.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>

#include "shiftpoly/dimension_one.hpp"
#include "shiftpoly/invariance.hpp"
#include "shiftpoly/parallel.hpp"
#include "shiftpoly/serialize.hpp"
#include "shiftpoly/sft.hpp"

using namespace shiftpoly;
using Clock = std::chrono::steady_clock;

namespace {

double run_ms(par::Mode mode, const std::function<std::string()>& f, std::string& digest) {
  par::mode() = mode;
  const auto t0 = Clock::now();
  digest = f();
  const auto t1 = Clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void bench(const std::string& name, const std::function<std::string()>& f) {
  std::string serial_digest, openmp_digest;
  const double serial_ms = run_ms(par::Mode::serial, f, serial_digest);
  const double openmp_ms = run_ms(par::Mode::openmp, f, openmp_digest);
  const bool same = serial_digest == openmp_digest;
  std::cout << std::left << std::setw(34) << name << std::right << std::fixed
            << std::setprecision(1) << std::setw(10) << serial_ms << " ms" << std::setw(10)
            << openmp_ms << " ms   speedup " << std::setprecision(2)
            << (openmp_ms > 0 ? serial_ms / openmp_ms : 0.0) << (same ? "" : "  MISMATCH")
            << "\n";
  if (!same) std::exit(1);
}

}  // namespace

int main() {
  std::cout << "openmp compiled: " << (par::openmp_compiled() ? "yes" : "no") << "\n";
  std::cout << std::left << std::setw(34) << "kernel" << std::right << std::setw(13) << "serial"
            << std::setw(13) << "openmp" << "\n";

  const Alphabet binary = Alphabet::parse("0,1");
  const Alphabet ternary = Alphabet::parse("0,1,2");

  bench("vertices d=1 |S|=3 n=1", [&] {
    const PatternIndex ix = PatternIndex::make(1, 1, ternary);
    return dump_json(vpolytope_json(vertex_enumeration(build_Iloc(ix))));
  });

  bench("vertices d=1 |S|=2 n=2", [&] {
    const PatternIndex ix = PatternIndex::make(1, 2, binary);
    return dump_json(vpolytope_json(vertex_enumeration(build_Iloc(ix))));
  });

  bench("classify d=1 |S|=2 n=2", [&] {
    const ClassifyReport rep = classify_extreme_points(binary, 2);
    return dump_json(classify_json(rep, binary));
  });

  bench("hard-squares face d=2 n=1", [&] {
    const PatternIndex ix = PatternIndex::make(2, 1, binary);
    ForbiddenSet L{2, {}};
    {
      Pattern horiz;
      horiz.shape = Shape::of(2, {{0, 0}, {1, 0}});
      horiz.values = {1, 1};
      Pattern vert;
      vert.shape = Shape::of(2, {{0, 0}, {0, 1}});
      vert.values = {1, 1};
      L.patterns = {horiz, vert};
    }
    const FaceDescription face = face_of_forbidden(L, ix);
    const FeasibilityCertificate cert = face_feasible(face);
    Json j;
    j["feasible"] = cert.feasible;
    j["zeroed"] = face.zeroed;
    return dump_json(j);
  });

  return 0;
}
