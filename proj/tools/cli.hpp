#pragma once

// heckectl: batch driver for the qhecke library.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qhecke/perm.hpp"

namespace qhecke::cli {

enum class Command { EvalEpsilon, ExpandHecke, Sigma, RPoly, PPoly, Straighten, ListTableaux, Verify };
enum class MethodChoice { Tableaux, Immanant, Chartable, All };

struct JobSpec {
  Command command = Command::EvalEpsilon;
  int n = 0;
  std::optional<GeneratorWord> word;
  std::optional<Partition> lambda;
  MethodChoice method = MethodChoice::Tableaux;
  std::optional<Permutation> u, v, t, w;
  std::string monomial;
  bool specialize = false;  // --q1
  bool json = false;
  std::uint64_t seed = 1;
  int max_n = 5;
  int max_m = 16;
  std::string out;  // optional report file
};

/// Malformed or out-of-range input, tagged with the offending flag.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct RunResult {
  int exit_code = 0;  // 0 ok, 1 disagreement, 2 invalid input
  nlohmann::json report;
  std::string text;
};

std::string command_name(Command c);
Command parse_command(const std::string& name);
std::string method_choice_name(MethodChoice m);
MethodChoice parse_method_choice(const std::string& name);

/// Checks sizes and per-command required fields; throws ValidationError.
void validate(const JobSpec& job);

/// Runs a validated job. Validation failures are reported, not thrown.
RunResult run(const JobSpec& job);

/// Full command line entry point; returns the process exit status.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace qhecke::cli
