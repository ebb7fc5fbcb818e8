// Benchmark of the OpenMP table-scan kernels against their serial reference
// twins. Results are checked for agreement on every run; timings are wall
// clock and obviously machine-dependent.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "defk/kernels.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<int> cyclic_table(int n) {
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i * n + j] = (i + j) % n;
  return t;
}

std::vector<int> saturating_table(int n) {
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i * n + j] = std::min(i + j, n - 1);
  return t;
}

// direct product S3 x Z/k: a non-abelian group table of size 6k
std::vector<int> s3_times_cyclic_table(int k, int& n_out) {
  const int s3[6][6] = {
      {0, 1, 2, 3, 4, 5}, {1, 0, 4, 5, 2, 3}, {2, 3, 0, 1, 5, 4},
      {3, 2, 5, 4, 0, 1}, {4, 5, 1, 0, 3, 2}, {5, 4, 3, 2, 1, 0},
  };
  const int n = 6 * k;
  n_out = n;
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int gi = i / k, ci = i % k;
      int gj = j / k, cj = j % k;
      t[i * n + j] = s3[gi][gj] * k + (ci + cj) % k;
    }
  return t;
}

struct Row {
  const char* kernel;
  int n;
  double serial_s;
  double parallel_s;
  bool agree;
};

void print_row(const Row& row) {
  std::printf("%-22s n=%-5d serial %8.4fs   openmp %8.4fs   speedup %5.2fx   %s\n",
              row.kernel, row.n, row.serial_s, row.parallel_s,
              row.parallel_s > 0 ? row.serial_s / row.parallel_s : 0.0,
              row.agree ? "agree" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  int scale = 1;
  if (argc > 1) scale = std::max(1, std::atoi(argv[1]));

  bool all_agree = true;
  auto record = [&](Row row) {
    all_agree = all_agree && row.agree;
    print_row(row);
  };

  for (int n : {128 * scale, 256 * scale, 384 * scale}) {
    std::vector<int> table = cyclic_table(n);
    auto t0 = Clock::now();
    long long serial = defk::reference::first_associativity_violation(table, n);
    double ts = seconds_since(t0);
    t0 = Clock::now();
    long long parallel = defk::kernels::first_associativity_violation(table, n);
    record({"associativity", n, ts, seconds_since(t0), serial == parallel});
  }

  for (int n : {512 * scale, 1024 * scale, 2048 * scale}) {
    std::vector<int> table = saturating_table(n);
    std::vector<char> member(n, 0);
    member[n - 1] = 1;  // hits land in the last column: full row scans
    auto t0 = Clock::now();
    bool serial = defk::reference::is_cofinal(table, n, member);
    double ts = seconds_since(t0);
    t0 = Clock::now();
    bool parallel = defk::kernels::is_cofinal(table, n, member);
    record({"cofinality", n, ts, seconds_since(t0), serial == parallel});
  }

  for (int k : {32 * scale, 64 * scale, 96 * scale}) {
    int n = 0;
    std::vector<int> table = s3_times_cyclic_table(k, n);
    std::vector<int> inv(n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (table[x * n + y] == 0 && table[y * n + x] == 0) {
          inv[x] = y;
          break;
        }
    auto t0 = Clock::now();
    std::vector<int> serial = defk::reference::conjugacy_labels(table, n, inv);
    double ts = seconds_since(t0);
    t0 = Clock::now();
    std::vector<int> parallel = defk::kernels::conjugacy_labels(table, n, inv);
    record({"conjugacy_labels", n, ts, seconds_since(t0), serial == parallel});
  }

  for (int n : {16 * scale, 24 * scale, 32 * scale}) {
    std::vector<int> table = saturating_table(n);
    auto t0 = Clock::now();
    std::vector<int> serial = defk::reference::pair_class_labels(table, n);
    double ts = seconds_since(t0);
    t0 = Clock::now();
    std::vector<int> parallel = defk::kernels::pair_class_labels(table, n);
    record({"pair_class_labels", n, ts, seconds_since(t0), serial == parallel});
  }

  if (!all_agree) {
    std::fprintf(stderr, "kernel outputs disagree\n");
    return 1;
  }
  return 0;
}
