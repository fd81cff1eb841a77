#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "newtonleaf/io.hpp"

namespace newtonleaf::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kInvalid = 1;
inline constexpr int kInconsistent = 2;
inline constexpr int kBudget = 3;

struct JobSpec {
  std::string command;
  Json group = "GL2";
  std::string sigma = "trivial";
  std::vector<std::string> elements;
  std::optional<Json> isocrystal;  // adlv: explicit monomial datum instead of an element
  std::optional<IntVector> mu;
  std::string level = "iwahori";
  long long p = 2;
  int depth = 1;
  int witt_length = 3;
  int coefficient_precision = 5;
  std::size_t pairs = 500;
  std::uint64_t seed = 20240601;
  int length_cap = -1;  // classes: 1, crosscheck: 2
  int conj_cap = -1;
  int slack = 1;
  long long kappa_lo = -1;
  long long kappa_hi = 1;
  std::size_t max_candidates = 2000000;
  std::string output;          // empty: stdout
  std::string format = "csv";  // csv | json
};

// Unknown keys and malformed values raise ConfigurationError.
JobSpec job_from_json(const Json& j);
Json job_to_json(const JobSpec& job);

struct Result {
  CsvTable table;
  Json document;  // structured-text rendering
};

Result execute(const JobSpec& job);
std::string render(const JobSpec& job, const Result& r);

// Runs the job, writes its artifact and returns the exit status.
// Diagnostics go to `err`; stdout output to `out`.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

// argv front end shared by the executable and the tests.
int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace newtonleaf::cli
