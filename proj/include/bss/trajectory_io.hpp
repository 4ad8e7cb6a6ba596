#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bss/hybrid.hpp"

namespace bss {

/// CSV trajectory: optional '#'-prefixed comment lines, then the header
/// "t,value" and one row per grid point.
void write_trajectory_csv(std::ostream& out, const Trajectory& path, std::string_view comment = {});

/// Raw trajectory, all fields little-endian:
///   8 bytes   magic "BSSTRAJ1"
///   uint64    number of values
///   float64   horizon T = t0 + (count - 1) dt
///   uint64    seed
///   uint32    label (0 = BSS, 1 = TBSS, 2 = Exact)
///   uint32    reserved, 0
///   float64   t0
///   float64[] values
void write_trajectory_raw(std::ostream& out, const Trajectory& path);
Trajectory read_trajectory_raw(std::istream& in);

/// Values column of a CSV written by write_trajectory_csv (or any CSV whose
/// last column holds the values). Comment lines and a non-numeric header row
/// are skipped.
std::vector<double> read_values_csv(std::istream& in);

/// Error raised for malformed trajectory files.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bss
