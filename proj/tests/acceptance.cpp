// Runs every verification suite and prints one line per criterion.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "hcp/acceptance.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 0;
  bool all = true;
  for (const auto& run : hcp::all_criteria()) {
    const auto r = run(seed);
    std::printf("%s\n", hcp::format_result(r).c_str());
    std::fflush(stdout);
    all = all && r.passed;
  }
  std::printf("%s\n", all ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED");
  return all ? 0 : 1;
}
