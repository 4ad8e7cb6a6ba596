#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bss::cli {

enum class Command { Simulate, Covmat, Jtable, Mse, Estimate, Smile };
enum class OutputFormat { Csv, Raw };

std::string_view to_string(Command command);
Command parse_command(std::string_view name);

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitIo = 4;

inline constexpr std::uint64_t kDefaultSeed = 20151006;

/// Thrown for unreadable config files and unwritable outputs.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Everything a run depends on. List-valued settings are kept in their
/// textual form ("0,1,2" or "start:stop:step") so the key=value file shows
/// exactly what was asked for.
struct RunConfig {
  Command command = Command::Simulate;

  // kernel
  std::string kernel = "gamma";
  double alpha = -0.43;
  double lambda = 1.0;
  double beta = -1.0;
  double scale = 1.0;

  // discretisation
  std::size_t n = 50;
  double horizon = 1.0;
  std::string kappa = "1";
  std::string rule = "optimal";
  double gamma = 0.5;
  std::string process = "bss";  ///< bss, tbss or exact

  // tables and experiments
  std::string alpha_grid;  ///< empty means just `alpha`
  std::size_t j_terms = 1'000'000;
  std::string resolutions = "256,512,1024,2048,4096";
  bool truncated = false;
  std::size_t m = 500;
  std::string subsample = "1";
  std::size_t reps = 1000;
  std::string source = "exact";  ///< exact or hybrid

  // rough Bergomi
  double s0 = 1.0;
  double xi = 0.235 * 0.235;
  double eta = 1.9;
  double rho = -0.9;
  std::size_t paths = 100000;
  std::string scheme = "hybrid1";
  std::string k_grid;  ///< empty means the maturity-dependent default
  bool antithetic = false;

  std::uint64_t seed = kDefaultSeed;
  std::string out;  ///< empty writes to standard output
  OutputFormat format = OutputFormat::Csv;
};

/// key=value lines, one per setting, in a fixed order.
std::string to_key_value(const RunConfig& config);

/// Applies key=value lines on top of `base`. Blank lines and lines starting
/// with '#' are ignored. Throws std::invalid_argument on unknown keys or
/// unparsable values.
RunConfig parse_key_value(std::string_view text, RunConfig base = {});

/// Names of all settings, in file order.
std::vector<std::string> setting_names();

/// "start:stop:step" (inclusive of stop within half a step) or a comma list.
std::vector<double> parse_grid(std::string_view text);
std::vector<std::size_t> parse_index_list(std::string_view text);

/// Executes a validated config; data goes to config.out or `data`, the
/// one-line summary to `log`. Throws on failure.
void execute(const RunConfig& config, std::ostream& data, std::ostream& log);

/// Full command line handling: flags, --config, exit-code mapping.
int run(const std::vector<std::string>& args, std::ostream& data, std::ostream& log);
int run(int argc, char** argv);

}  // namespace bss::cli
