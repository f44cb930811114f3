#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fareylt/elliptic.hpp"

namespace fareylt::cli {

enum class Subcommand {
    FareyHist,
    Discrepancy,
    MCount,
    Traces,
    LtAvg,
    LtField,
    Chebotarev,
    LemmaPoly,
    Classnum,
    Envelope,
};

enum class OutputFormat { Csv, Json };

struct CliConfig {
    Subcommand subcommand = Subcommand::FareyHist;
    std::optional<CurveFamily> family;
    std::uint32_t t = 0;
    std::vector<std::uint32_t> t_list;
    std::uint64_t p = 0;
    std::uint64_t ell = 0;
    std::int64_t a = 0;
    std::int64_t d = 0;
    std::uint32_t x = 0;
    std::uint32_t hw = 0;
    std::int64_t dmax = 0;
    std::uint64_t w = 0;
    std::uint64_t divisor = 1;
    std::optional<std::uint64_t> v;
    int part = 1;
    OutputFormat format = OutputFormat::Csv;
    std::optional<std::filesystem::path> cache_dir;
    unsigned threads = 1;
};

/// Bad command line; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// --help was given; carries the help text (exit code 0).
struct HelpRequested {
    std::string text;
};

/// argv without the program name. Validates every flag; the FAREY_LT_CACHE
/// environment variable overrides --cache-dir. Throws UsageError or HelpRequested.
[[nodiscard]] CliConfig parse_args(std::span<const std::string> args);

/// Executes a validated config. Returns 0 on success, 1 on computation or I/O failure.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run with exit codes 0, 1, 2.
int main_entry(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// Path of the cache file for (family, p) inside dir.
[[nodiscard]] std::filesystem::path trace_cache_path(const std::filesystem::path& dir, const CurveFamily& family,
                                                     std::uint64_t p);

} // namespace fareylt::cli
