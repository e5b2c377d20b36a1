// Times the serial table-scan kernels against the OpenMP ones on realistic
// axiom-filter workloads and verifies the outputs are identical. Exits
// nonzero on any mismatch; timings go to stdout.

#include <chrono>
#include <cstdio>
#include <string>
#include <thread>
#include <vector>

#include "wdl/algebra.hpp"
#include "wdl/lattice.hpp"
#include "wdl/scan.hpp"

using namespace wdl;

namespace {

Lattice chain(int n) {
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i + 1 < n; ++i) covers.push_back({i, i + 1});
  return build_lattice(n, covers);
}

Lattice boolean_cube(int k) {
  const int n = 1 << k;
  std::vector<std::pair<int, int>> covers;
  for (int x = 0; x < n; ++x)
    for (int b = 0; b < k; ++b)
      if (!(x & (1 << b))) covers.push_back({x, x | (1 << b)});
  return build_lattice(n, covers);
}

template <class F>
double timed_ms(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

int failures = 0;

void bench_filter(const std::string& name, const Lattice& L,
                  const std::vector<int>& workers) {
  auto pred = [&](const int* img) {
    return check_axiom_raw(L, img, nullptr, AxiomId::A1).pass &&
           check_axiom_raw(L, img, nullptr, AxiomId::A2).pass;
  };
  std::vector<TableId> ref;
  const double serial = timed_ms([&] { ref = filter_tables_serial(L.n, pred); });
  std::printf("%-28s %10llu %6zu hits %9.1f ms serial",
              name.c_str(),
              static_cast<unsigned long long>(table_space_size(L.n)),
              ref.size(), serial);
  for (int w : workers) {
    std::vector<TableId> got;
    const double ms = timed_ms([&] { got = filter_tables(L.n, pred, w); });
    const bool ok = got == ref;
    if (!ok) ++failures;
    std::printf(" | w=%d %9.1f ms x%.2f%s", w, ms, serial / ms,
                ok ? "" : " MISMATCH");
  }
  std::printf("\n");
}

void bench_first(const std::string& name, const Lattice& L,
                 const std::vector<int>& workers) {
  auto pred = [&](const int* img) {
    return check_axiom_raw(L, img, nullptr, AxiomId::A1).pass &&
           check_axiom_raw(L, img, nullptr, AxiomId::A2).pass &&
           check_axiom_raw(L, img, nullptr, AxiomId::A3).pass;
  };
  std::optional<TableId> ref;
  const double serial = timed_ms([&] { ref = first_table_serial(L.n, pred); });
  std::printf("%-28s %10llu %6s      %9.1f ms serial",
              name.c_str(),
              static_cast<unsigned long long>(table_space_size(L.n)),
              ref ? std::to_string(*ref).c_str() : "none", serial);
  for (int w : workers) {
    std::optional<TableId> got;
    const double ms = timed_ms([&] { got = first_table(L.n, pred, w); });
    const bool ok = got == ref;
    if (!ok) ++failures;
    std::printf(" | w=%d %9.1f ms x%.2f%s", w, ms, serial / ms,
                ok ? "" : " MISMATCH");
  }
  std::printf("\n");
}

}  // namespace

int main() {
  const int hw = static_cast<int>(std::thread::hardware_concurrency());
  std::vector<int> workers{2, 4};
  if (hw > 4) workers.push_back(std::min(hw, 8));

  std::printf("table-scan kernels, serial vs parallel\n");
  std::printf("%-28s %10s %13s\n", "workload", "tables", "result");

  bench_filter("filter A1&A2, 7-chain", chain(7), workers);
  bench_filter("filter A1&A2, 8-chain", chain(8), workers);
  bench_filter("filter A1&A2, cube 2^3", boolean_cube(3), workers);
  bench_first("first A1&A2&A3, 8-chain", chain(8), workers);
  bench_first("first A1&A2&A3, cube 2^3", boolean_cube(3), workers);

  if (failures) {
    std::printf("%d workload(s) diverged from the serial kernel\n", failures);
    return 1;
  }
  std::printf("all parallel results identical to serial\n");
  return 0;
}
