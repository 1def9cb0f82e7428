#include <atomic>
#include <functional>
#include <string>
#include <vector>

#include "doctest.h"
#include "shiftpoly/dimension_one.hpp"
#include "shiftpoly/invariance.hpp"
#include "shiftpoly/parallel.hpp"
#include "shiftpoly/patterns.hpp"
#include "shiftpoly/serialize.hpp"
#include "shiftpoly/sft.hpp"

using namespace shiftpoly;

namespace {

// Restores the process-wide mode even when a CHECK throws.
struct ModeGuard {
  par::Mode saved = par::mode();
  ~ModeGuard() { par::mode() = saved; }
};

std::string digest_with(par::Mode m, const std::function<Json()>& f) {
  ModeGuard g;
  par::mode() = m;
  return dump_json(f());
}

void check_modes_agree(const std::function<Json()>& f) {
  const std::string serial = digest_with(par::Mode::serial, f);
  const std::string openmp = digest_with(par::Mode::openmp, f);
  CHECK(serial == openmp);
}

}  // namespace

TEST_CASE("parallel: mode flag is sane for this build") {
#ifdef SHIFTPOLY_OPENMP
  CHECK(par::openmp_compiled());
#else
  CHECK_FALSE(par::openmp_compiled());
#endif
  const par::Mode m = par::mode();
  CHECK((m == par::Mode::serial || m == par::Mode::openmp));
}

TEST_CASE("parallel: for_each_index touches every index exactly once") {
  ModeGuard g;
  for (par::Mode m : {par::Mode::serial, par::Mode::openmp}) {
    par::mode() = m;
    const std::size_t n = 4096;
    std::vector<std::atomic<int>> hits(n);
    par::for_each_index(n, [&](std::size_t i) { hits[i].fetch_add(1); });
    for (std::size_t i = 0; i < n; ++i) CHECK(hits[i].load() == 1);
    std::atomic<int> calls{0};
    par::for_each_index(0, [&](std::size_t) { calls.fetch_add(1); });
    CHECK(calls.load() == 0);
  }
}

TEST_CASE("parallel: vertex enumeration is bit-identical across modes") {
  check_modes_agree([] {
    const Alphabet ab = Alphabet::parse("0,1,2");
    return vpolytope_json(vertex_enumeration(build_Iloc(PatternIndex::make(1, 1, ab))));
  });
}

TEST_CASE("parallel: classification is bit-identical across modes") {
  check_modes_agree([] {
    const Alphabet ab = Alphabet::parse("0,1");
    return classify_json(classify_extreme_points(ab, 2), ab);
  });
}

TEST_CASE("parallel: SFT face feasibility is bit-identical across modes") {
  check_modes_agree([] {
    const Alphabet ab = Alphabet::parse("0,1");
    Pattern horiz;
    horiz.shape = Shape::of(2, {{0, 0}, {1, 0}});
    horiz.values = {1, 1};
    Pattern vert;
    vert.shape = Shape::of(2, {{0, 0}, {0, 1}});
    vert.values = {1, 1};
    const ForbiddenSet L{2, {horiz, vert}};
    const PatternIndex ix = PatternIndex::make(2, 1, ab);
    const FaceDescription face = face_of_forbidden(L, ix);
    const FeasibilityCertificate cert = face_feasible(face);
    Json j;
    j["feasible"] = cert.feasible;
    j["zeroed"] = face.zeroed;
    return j;
  });
}
