#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "leibhom/errors.hpp"

namespace leibhom {

inline constexpr const char *kToolVersion = "1.0.0";

enum class Command { Validate, Hl, Li, Conjecture1, Conjecture2, Wigner, Export };
enum class OutputFormat { Text, Json, Csv };

struct RunConfig {
    Command command = Command::Validate;
    /// A file path, or "builtin:<name>".
    std::string input;
    std::size_t degree = 3;
    unsigned weight = 4;
    std::size_t generators = 2;
    /// "signed", "unsigned" or "both"
    std::string action = "both";
    std::uint64_t seed = 0;
    std::size_t trials = 50;
    OutputFormat format = OutputFormat::Text;
    Limits limits;
    bool representatives = false;
    bool timing = false;
    /// Replaces e_n^(1) by a corrupted element before certification; used
    /// to exercise the abort path.
    bool corrupt_idempotent = false;
};

/// Exit statuses shared by every command.
enum ExitCode : int { kSuccess = 0, kCheckFailed = 1, kInputError = 2, kResourceCap = 3 };

/// Result of one command. `results` is an array of flat records (string,
/// number or boolean values only), each tagged with a "kind".
struct Report {
    nlohmann::ordered_json config;
    nlohmann::ordered_json results = nlohmann::ordered_json::array();
    int exit_code = kSuccess;
    /// Set only when RunConfig::timing is on.
    std::optional<double> elapsed_ms;
    /// Document emitted verbatim instead of a report (the export command).
    std::optional<nlohmann::ordered_json> payload;

    [[nodiscard]] nlohmann::ordered_json to_json() const;
};

Command parse_command(const std::string &name);
std::string to_string(Command c);
OutputFormat parse_format(const std::string &name);

/// Runs one command. Input problems surface as InputError, size problems
/// as ResourceLimitError; failed mathematical checks set exit_code.
Report run(const RunConfig &config);

/// Deterministic rendering; text and CSV are derived from to_json().
std::string render(const Report &report, OutputFormat format);

/// (1/w) Σ_{e|w} μ(e) g^{w/e}
std::size_t witt_number(std::size_t generators, std::size_t weight);

} // namespace leibhom
