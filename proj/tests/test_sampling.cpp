#include "doctest.h"

#include <cstdlib>

#include "bcz/sampling.hpp"

namespace {

struct Sum {
  double value = 0.0;
  std::uint64_t count = 0;
  void merge(const Sum& o) {
    value += o.value;
    count += o.count;
  }
};

Sum harmonic(std::uint64_t total, std::uint64_t chunk, unsigned workers) {
  auto parts = bcz::map_chunks<Sum>(total, chunk, workers, [](std::uint64_t lo, std::uint64_t hi) {
    Sum s;
    for (std::uint64_t i = lo; i < hi; ++i) {
      s.value += 1.0 / static_cast<double>(i + 1);
      ++s.count;
    }
    return s;
  });
  return bcz::reduce_pairwise(std::move(parts));
}

}  // namespace

TEST_CASE("uniform01 is a pure function of its counters") {
  CHECK(bcz::uniform01(1, 2, 3) == bcz::uniform01(1, 2, 3));
  CHECK(bcz::uniform01(1, 2, 3) != bcz::uniform01(1, 2, 4));
  CHECK(bcz::uniform01(1, 2, 3) != bcz::uniform01(2, 2, 3));
  double lo = 1.0, hi = 0.0, mean = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = bcz::uniform01(9, static_cast<std::uint64_t>(i), 0);
    lo = std::min(lo, u);
    hi = std::max(hi, u);
    mean += u / n;
  }
  CHECK(lo > 0.0);
  CHECK(hi <= 1.0);
  CHECK(mean == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("chunked reductions do not depend on the worker count") {
  const Sum one = harmonic(1000003, 4096, 1);
  for (unsigned w : {2u, 3u, 8u}) {
    const Sum many = harmonic(1000003, 4096, w);
    CHECK(many.count == one.count);
    CHECK(many.value == one.value);  // bitwise, not approximate
  }
  CHECK(harmonic(0, 16, 4).count == 0);
}

TEST_CASE("exceptions in workers propagate") {
  auto run = [] {
    return bcz::map_chunks<Sum>(100, 10, 4u, [](std::uint64_t lo, std::uint64_t) -> Sum {
      if (lo == 50) throw std::runtime_error("chunk failed");
      return Sum{};
    });
  };
  CHECK_THROWS_AS(run(), std::runtime_error);
}

TEST_CASE("BCZ_LAB_THREADS caps the worker count") {
  setenv("BCZ_LAB_THREADS", "1", 1);
  CHECK(bcz::worker_count() == 1);
  setenv("BCZ_LAB_THREADS", "junk", 1);
  CHECK(bcz::worker_count() >= 1);
  unsetenv("BCZ_LAB_THREADS");
}
