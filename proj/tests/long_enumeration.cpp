// Order-9 enumeration count; slow, labelled "long".

#include <chrono>
#include <cstdio>

#include "fullgraph/enumerate.hpp"

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t got = fullgraph::count_graphs(9);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool ok = got == 274668;
  std::printf("order 9 enumeration: %s (%zu graphs, expected 274668, %.1f s)\n", ok ? "PASS" : "FAIL", got, secs);
  return ok ? 0 : 1;
}
