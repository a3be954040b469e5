#pragma once

// The run/sweep/check commands behind the command-line tool, exposed as
// functions so they are testable without spawning processes. Each returns a
// process exit status and writes diagnostics to `diag`.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>

namespace dcsim::cli {

struct RunOverrides {
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> shots;
};

int run_command(const std::filesystem::path& config_path, const std::filesystem::path& out_dir,
                const RunOverrides& overrides, std::ostream& diag);

int sweep_command(const std::filesystem::path& config_path, const std::filesystem::path& out_dir,
                  std::ostream& diag);

int check_command(const std::filesystem::path& config_path, std::ostream& diag);

} // namespace dcsim::cli
