#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace matsos::cli {

/// Exit codes shared by every command.
namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kRefuted = 1;       // NotPSD, failed verification of a certificate file
inline constexpr int kInput = 2;         // unreadable or malformed input, wrong dimension
inline constexpr int kNoScalarCert = 3;  // ScalarSOSUnavailable
inline constexpr int kInternal = 4;      // self-verification failed
inline constexpr int kHypothesis = 5;    // not diagonalizable, lemma form violated, b not invertible
inline constexpr int kUsage = 64;
}  // namespace exit_code

struct RunConfig {
    std::string command;
    std::string input_path;
    std::string cert_path;
    std::optional<std::string> store_path;
    std::string output_path;
    int samples = 100;
    std::uint64_t seed = 0;
    std::string value;  // four-squares operand
};

int cmd_certify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_minpoly(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_minors(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_check_psd(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_four_squares(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Dispatches on config.command; unknown commands give kUsage.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace matsos::cli
