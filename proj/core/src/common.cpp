#include "pairspan/common.hpp"

#include <bit>
#include <cmath>

namespace pairspan {

void internal_error(const std::string& what) { throw InternalError(what); }

namespace {

long double npow_l(int n, double e) {
  return powl(static_cast<long double>(n), static_cast<long double>(e));
}

// Snap values like 2.9999999999 / 3.0000000001 back to 3 before taking
// ceil/floor, so that integral powers round the same way on every platform.
long double snap(long double x) {
  long double r = roundl(x);
  if (fabsl(x - r) < 1e-9L) return r;
  return x;
}

}  // namespace

double real_npow(int n, double e) {
  if (n <= 0) return 0.0;
  if (e == 0.0) return 1.0;
  if (e == 1.0) return static_cast<double>(n);
  return static_cast<double>(npow_l(n, e));
}

int ceil_npow(int n, double e) {
  if (n <= 0) return 0;
  if (e == 0.0) return 1;
  if (e == 1.0) return n;
  return static_cast<int>(ceill(snap(npow_l(n, e))));
}

int floor_npow(int n, double e) {
  if (n <= 0) return 0;
  if (e == 0.0) return 1;
  if (e == 1.0) return n;
  return static_cast<int>(floorl(snap(npow_l(n, e))));
}

int ceil_log2(int n) {
  if (n <= 1) return 0;
  return std::bit_width(static_cast<unsigned>(n - 1));
}

}  // namespace pairspan
