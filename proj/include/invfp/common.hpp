#pragma once

#include <stdexcept>
#include <string>

namespace invfp {

enum class Parity { Even, Odd };

inline Parity parity_of(long long v) { return (v % 2 == 0) ? Parity::Even : Parity::Odd; }
inline bool matches_parity(long long v, Parity p) { return parity_of(v) == p; }
inline const char* parity_name(Parity p) { return p == Parity::Even ? "even" : "odd"; }

// The two length-3 avoidance classes that share a generating function:
// Class321 = {321, 132, 213}, Class231 = {231, 312}.
enum class SigmaClass { Class321, Class231 };

inline const char* sigma_class_name(SigmaClass c) {
  return c == SigmaClass::Class321 ? "c321" : "c231";
}

enum class Direction { Increasing, Decreasing };
enum class BoundMode { MaxColumns, MaxRows };

}  // namespace invfp
