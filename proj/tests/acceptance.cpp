// Runs every acceptance criterion and prints one line per criterion.

#include <cstdio>

#include "skein/verify.hpp"

int main() {
  bool all = true;
  for (const auto& c : skein::acceptance_checks()) {
    std::printf("%s %-4s %s | computed: %s | expected: %s | %.3fs\n", c.pass ? "PASS" : "FAIL", c.id.c_str(),
                c.name.c_str(), c.computed.c_str(), c.expected.c_str(), c.seconds);
    all = all && c.pass;
  }
  return all ? 0 : 1;
}
