#ifndef SPLITCENSUS_RUNNER_HPP
#define SPLITCENSUS_RUNNER_HPP

// Command runner behind the CLI: configuration, result cache, CSV/JSON
// emission, and exit-code mapping.

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "splitcensus/census.hpp"
#include "splitcensus/verify.hpp"

namespace splitcensus {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kCacheEnvVar = "SPLITCENSUS_CACHE_DIR";

enum class Command { census, verify_lemmas, zero_bound, domination, bound_compare };
enum class OutputFormat { csv, json };

std::optional<Command> parse_command(const std::string& name);
const char* command_name(Command c);

/// "7" -> (7, 7); "2..12" -> (2, 12). nullopt on malformed input.
std::optional<std::pair<u64, u64>> parse_t_spec(const std::string& spec);

struct RunConfig {
    Command command = Command::census;
    u64 p = 0;
    unsigned k = 0;
    std::string t_spec;  // empty = not given
    std::optional<u64> d;
    unsigned jobs = 1;
    std::string out;  // empty = stdout
    OutputFormat format = OutputFormat::csv;
    u64 budget = 100'000'000;
    bool strict_pattern = true;
};

/// Store of finished run outputs keyed by the run parameters; a hit is
/// byte-identical to a fresh run. Writes go to a temp file then rename.
class ResultCache {
  public:
    explicit ResultCache(std::filesystem::path dir);
    /// Directory from SPLITCENSUS_CACHE_DIR, else ~/.cache/splitcensus,
    /// else ./.splitcensus-cache.
    static ResultCache from_environment();

    std::optional<std::string> lookup(const std::string& key) const;
    void store(const std::string& key, const std::string& bytes) const;
    const std::filesystem::path& dir() const { return dir_; }

  private:
    std::filesystem::path dir_;
};

std::string cache_key(const RunConfig& cfg);

/// Shortest round-trip decimal rendering, locale-independent.
std::string format_double(double v);

struct Rendered {
    std::string bytes;
    u64 violations = 0;  // nonzero only for verification suites that found one
};

/// Computes the full output artifact for a validated config; deterministic
/// for any jobs value. Throws on invalid configs and budget exhaustion.
Rendered render_output(const RunConfig& cfg);

/// Validates, consults the cache, renders, writes the artifact (file or
/// stdout), and maps failures to exit codes:
/// 0 ok, 1 bad config, 2 invariant violation, 3 budget exhausted, 4 internal.
int run(const RunConfig& cfg, std::ostream& err);

}  // namespace splitcensus

#endif
