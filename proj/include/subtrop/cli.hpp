#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace subtrop::cli {

enum class Command { Decide, Witness, Verify, Explain };
enum class Format { Text, Json };

enum ExitCode : int {
    kOk = 0,
    kUnsat = 1,
    kUsage = 2,
    kOracleDisagreement = 3,
    kWitnessFailure = 4,
};

struct CliConfig {
    Command command = Command::Decide;
    std::string input_path;
    std::optional<std::string> coeff_path;
    Format format = Format::Text;
    bool check = false;
    std::optional<std::size_t> max_bits;
    std::optional<std::uint64_t> seed;
    bool use_uniform_bound = false;
    bool shrink = false;
};

// Number of random coefficient instantiations verified by `decide --check`.
inline constexpr int kCheckSamples = 10;

int cmd_decide(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_witness(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_explain(const CliConfig& cfg, std::ostream& out, std::ostream& err);

// Dispatches on cfg.command and maps library errors to exit codes.
int run(const CliConfig& cfg, std::ostream& out, std::ostream& err);

// Full command line, program name first.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace subtrop::cli
