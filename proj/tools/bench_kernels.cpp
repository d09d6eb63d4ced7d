#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <utility>
#include <vector>

#include "unitsig/arith.hpp"
#include "unitsig/sweeps.hpp"

using namespace unitsig;

namespace {

double seconds(const std::function<void()>& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
  return dt.count();
}

void row(const char* name, std::size_t inputs, double s, double p) {
  std::printf("%-18s %8zu %10.3fs %10.3fs %9.2fx\n", name, inputs, s, p,
              p > 0 ? s / p : 0.0);
}

std::vector<Int> squarefree_upto(long hi) {
  std::vector<Int> out;
  for (long d = 2; d <= hi; ++d)
    if (squarefree_part(Int(d)).cofactor == 1) out.push_back(Int(d));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  int threads = 0;
  long scale = 1;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc)
      threads = std::atoi(argv[++i]);
    else if (std::strcmp(argv[i], "--scale") == 0 && i + 1 < argc)
      scale = std::atol(argv[++i]);
    else {
      std::fprintf(stderr, "usage: %s [--threads n] [--scale k]\n", argv[0]);
      return 2;
    }
  }

  std::printf("serial vs parallel batch kernels (threads = %s)\n",
              threads > 0 ? std::to_string(threads).c_str() : "default");
  std::printf("%-18s %8s %11s %11s %10s\n", "kernel", "inputs", "serial",
              "parallel", "speedup");

  {
    auto ds = squarefree_upto(3000 * scale);
    std::vector<NormRow> a, b;
    double s = seconds([&] { a = serial::unit_norms(ds); });
    double p = seconds([&] { b = parallel::unit_norms(ds, threads); });
    row("unit_norms", ds.size(), s, p);
  }
  {
    auto ds = squarefree_upto(2000 * scale);
    std::vector<MRow> a, b;
    double s = seconds([&] { a = serial::m_values(ds); });
    double p = seconds([&] { b = parallel::m_values(ds, threads); });
    row("m_values", ds.size(), s, p);
  }
  {
    std::vector<std::pair<Int, Int>> pairs;
    for (std::uint64_t q1 : prime_sieve(60 * scale))
      for (std::uint64_t q2 : prime_sieve(60 * scale))
        if (q1 < q2 && q1 % 4 == 3 && q2 % 4 == 3)
          pairs.emplace_back(Int(static_cast<unsigned long>(q1)),
                             Int(static_cast<unsigned long>(q2)));
    std::vector<PairClassRow> a, b;
    double s = seconds([&] { a = serial::classify_pairs(pairs); });
    double p = seconds([&] { b = parallel::classify_pairs(pairs, threads); });
    row("classify_pairs", pairs.size(), s, p);
  }
  {
    std::vector<std::array<Int, 3>> triples;
    auto ps = prime_sieve(40 * scale);
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = i + 1; j < ps.size(); ++j)
        for (std::size_t k = j + 1; k < ps.size(); ++k)
          triples.push_back({Int(static_cast<unsigned long>(ps[i])),
                             Int(static_cast<unsigned long>(ps[j])),
                             Int(static_cast<unsigned long>(ps[k]))});
    std::vector<TriquadRankRow> a, b;
    double s = seconds([&] { a = serial::triquad_ranks(triples); });
    double p = seconds([&] { b = parallel::triquad_ranks(triples, threads); });
    row("triquad_ranks", triples.size(), s, p);
  }
  {
    ConfigEnumeration a, b;
    double s = seconds([&] { a = serial::residue_configs(); });
    double p = seconds([&] { b = parallel::residue_configs(threads); });
    row("residue_configs", a.total, s, p);
  }
  {
    std::uint64_t bound = 200000 * static_cast<std::uint64_t>(scale);
    DensityInterval a, b;
    double s = seconds([&] { a = serial::density(bound); });
    double p = seconds([&] { b = parallel::density(bound, threads); });
    row("density", a.primes_used, s, p);
  }
  std::printf("speedups near 1.0 are expected on a single-core host\n");
  return 0;
}
