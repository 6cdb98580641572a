// Runs every acceptance criterion and prints one line per criterion.
// Exit status is 0 only when all criteria pass.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "bcz/verification.hpp"

namespace {

void print(const bcz::verify::Verdict& v) {
  std::printf("%s %2d %s (%.1f s): %s\n", v.pass ? "PASS" : "FAIL", v.id, v.title.c_str(), v.seconds,
              v.detail.c_str());
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc == 3 && std::string(argv[1]) == "--only") {
    const auto v = bcz::verify::run_criterion(std::atoi(argv[2]));
    print(v);
    return v.pass ? 0 : 1;
  }
  int failed = 0;
  const auto verdicts = bcz::verify::run_suite(print);
  for (const auto& v : verdicts) failed += v.pass ? 0 : 1;
  std::printf("%zu criteria, %d failed\n", verdicts.size(), failed);
  return failed == 0 ? 0 : 1;
}
