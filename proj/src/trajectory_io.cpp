#include "bss/trajectory_io.hpp"

#include <array>
#include <cstdlib>
#include <string>
#include <bit>
#include <cstring>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "bss/csv.hpp"

namespace bss {

namespace {

constexpr std::array<char, 8> kMagic = {'B', 'S', 'S', 'T', 'R', 'A', 'J', '1'};

static_assert(std::endian::native == std::endian::little, "raw trajectory I/O assumes a little-endian host");

template <class T>
void put(std::ostream& out, T value) {
  char bytes[sizeof(T)];
  std::memcpy(bytes, &value, sizeof(T));
  out.write(bytes, sizeof(T));
}

template <class T>
T get(std::istream& in) {
  char bytes[sizeof(T)];
  if (!in.read(bytes, sizeof(T))) throw FormatError("raw trajectory: truncated file");
  T value;
  std::memcpy(&value, bytes, sizeof(T));
  return value;
}

}  // namespace

void write_trajectory_csv(std::ostream& out, const Trajectory& path, std::string_view comment) {
  write_comment(out, comment);
  out << "t,value\n";
  for (std::size_t i = 0; i < path.values.size(); ++i) {
    out << format_double(path.t0 + static_cast<double>(i) * path.dt) << ',' << format_double(path.values[i]) << '\n';
  }
}

void write_trajectory_raw(std::ostream& out, const Trajectory& path) {
  out.write(kMagic.data(), kMagic.size());
  const auto count = static_cast<std::uint64_t>(path.values.size());
  put<std::uint64_t>(out, count);
  put<double>(out, path.t0 + static_cast<double>(count == 0 ? 0 : count - 1) * path.dt);
  put<std::uint64_t>(out, path.seed);
  put<std::uint32_t>(out, static_cast<std::uint32_t>(path.label));
  put<std::uint32_t>(out, 0);
  put<double>(out, path.t0);
  out.write(reinterpret_cast<const char*>(path.values.data()),
            static_cast<std::streamsize>(path.values.size() * sizeof(double)));
}

Trajectory read_trajectory_raw(std::istream& in) {
  std::array<char, 8> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kMagic) throw FormatError("raw trajectory: bad magic");
  const auto count = get<std::uint64_t>(in);
  const auto horizon = get<double>(in);
  Trajectory path;
  path.seed = get<std::uint64_t>(in);
  const auto label = get<std::uint32_t>(in);
  if (label > 2) throw FormatError("raw trajectory: unknown label");
  path.label = static_cast<TrajectoryLabel>(label);
  get<std::uint32_t>(in);
  path.t0 = get<double>(in);
  if (count > (std::uint64_t{1} << 32)) throw FormatError("raw trajectory: implausible length");
  path.values.resize(count);
  if (!in.read(reinterpret_cast<char*>(path.values.data()), static_cast<std::streamsize>(count * sizeof(double)))) {
    throw FormatError("raw trajectory: truncated values");
  }
  path.dt = count > 1 ? (horizon - path.t0) / static_cast<double>(count - 1) : 0.0;
  return path;
}

std::vector<double> read_values_csv(std::istream& in) {
  std::vector<double> values;
  std::string line;
  bool header_seen = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto comma = line.rfind(',');
    const std::string field = comma == std::string::npos ? line : line.substr(comma + 1);
    char* end = nullptr;
    const double v = std::strtod(field.c_str(), &end);
    if (end == field.c_str() || *end != '\0') {
      if (!header_seen && values.empty()) {
        header_seen = true;
        continue;
      }
      throw FormatError("csv: non-numeric value on line " + std::to_string(line_no));
    }
    values.push_back(v);
  }
  return values;
}

}  // namespace bss
