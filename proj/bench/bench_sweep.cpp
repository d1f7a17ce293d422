// Serial reference sweep vs the OpenMP kernel on the default 50x50 grid.

#include <omp.h>

#include <chrono>
#include <cstdio>

#include "qdspin/sweep.hpp"

using h_clock = std::chrono::steady_clock;

template <class Fn>
double time_it(Fn&& fn) {
  const auto t0 = h_clock::now();
  fn();
  return std::chrono::duration<double>(h_clock::now() - t0).count();
}

int main(int argc, char** argv) {
  const int steps = argc > 1 ? std::atoi(argv[1]) : 50;
  const qdspin::AxisRange xb{0.5, 3.0, steps};
  const qdspin::AxisRange xc{0.0, 6.0, steps};

  std::printf("grid %dx%d, %d OpenMP threads\n", steps, steps, omp_get_max_threads());
  std::vector<qdspin::SweepRow3> s3, p3;
  std::vector<qdspin::SweepRow4> s4, p4;
  const double ts3 = time_it([&] { s3 = qdspin::sweep_three_serial(xb, xc); });
  const double tp3 = time_it([&] { p3 = qdspin::sweep_three_parallel(xb, xc); });
  const double ts4 = time_it([&] { s4 = qdspin::sweep_four_serial(xb, xc); });
  const double tp4 = time_it([&] { p4 = qdspin::sweep_four_parallel(xb, xc); });

  std::printf("n=3  serial %8.3f s  parallel %8.3f s  speedup %.2f\n", ts3, tp3, ts3 / tp3);
  std::printf("n=4  serial %8.3f s  parallel %8.3f s  speedup %.2f\n", ts4, tp4, ts4 / tp4);

  bool same = s3.size() == p3.size() && s4.size() == p4.size();
  for (std::size_t i = 0; same && i < s3.size(); ++i) same = s3[i].J == p3[i].J;
  for (std::size_t i = 0; same && i < s4.size(); ++i) same = s4[i].Jprime == p4[i].Jprime;
  std::printf("serial and parallel results %s\n", same ? "identical" : "DIFFER");
  return same ? 0 : 1;
}
