#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pairspan {

/// Dense node id in [0, n). External labels, if any, are resolved at the
/// I/O layer; everything below works on plain array indices.
using Node = int;

/// Thrown when a construction detects that one of its own postconditions
/// does not hold. These are hard failures, never silenced.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

[[noreturn]] void internal_error(const std::string& what);

/// n^e evaluated in long double, with e = 0 and e = 1 handled exactly and
/// near-integral results snapped before rounding.
double real_npow(int n, double e);
int ceil_npow(int n, double e);
int floor_npow(int n, double e);

/// ceil(log2(n)) for n >= 1, computed exactly on integers.
int ceil_log2(int n);

}  // namespace pairspan

#define PAIRSPAN_CHECK(cond, msg) \
  do {                            \
    if (!(cond)) ::pairspan::internal_error(msg); \
  } while (0)
