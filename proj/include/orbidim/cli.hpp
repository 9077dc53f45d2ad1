#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace orbidim::cli {

/// Exit codes: 0 success, 1 verification or I/O failure, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

struct RegenResult {
    std::vector<std::string> files;      // written, in order
    std::vector<std::string> mismatches; // "file: first differing line N" or "file: missing golden"
};

/// Writes the five reproduction tables plus manifest.json into out_dir and compares each
/// table with golden_dir; throws std::runtime_error on I/O failure.
RegenResult regen_tables(const std::filesystem::path& out_dir, const std::filesystem::path& golden_dir,
                         const std::filesystem::path& data_dir);

} // namespace orbidim::cli
