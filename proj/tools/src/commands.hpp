#ifndef UAKIT_TOOLS_COMMANDS_HPP
#define UAKIT_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace uakit::cli {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2 };

/// Raised for bad flag combinations found after parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ValidateArgs {
  std::string file;
  bool json = false;
};

struct EvalArgs {
  std::string file;
  std::string state;
  std::string formula;
  bool show_event = false;
};

struct TransformArgs {
  std::string file;
  std::string to;
  std::string mode = "copy";
  std::string trace;
  std::string output;
  bool pretty = false;
};

struct VerifyArgs {
  std::string file;
  std::string suite = "all";
  std::optional<int> depth;
  std::string mode = "copy";
  int jobs = 1;
  bool json = false;
};

struct RandomArgs {
  int atoms = 2;
  int worlds = 3;
  int agents = 1;
  std::uint64_t seed = 0;
  int count = 1;
  std::string strategy = "via-transform";
  std::string kind = "hms";
  std::string output_dir;
  bool verify = false;
  int jobs = 1;
  bool pretty = false;
};

struct ProofArgs {
  std::string file;
  bool json = false;
};

struct CountermodelArgs {
  std::string formula;
  std::string atoms;
  int max_worlds = 3;
  int max_atoms = 2;
  int agents = 1;
  bool pretty = false;
};

int run_validate(const ValidateArgs& a);
int run_eval(const EvalArgs& a);
int run_transform(const TransformArgs& a);
int run_verify(const VerifyArgs& a);
int run_random(const RandomArgs& a);
int run_check_proof(const ProofArgs& a);
int run_countermodel(const CountermodelArgs& a);

}  // namespace uakit::cli

#endif
