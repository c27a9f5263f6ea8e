#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace edlab {

// One verified statement from the source material. expected and computed are
// rendered strings so golden reports diff cleanly; a claim passes iff they
// are equal. skipped-budget marks claims that could not be decided within the
// configured budgets (or that belong to the full scope only) and never fails
// a run by itself.
struct Claim {
  std::string id;
  std::string statement;
  std::string expected;
  std::string computed;
  enum class Status { pass, fail, skipped_budget };
  Status status = Status::pass;
  double seconds = 0;
};

const char* claim_status_name(Claim::Status s);

enum class Scope { quick, full };

struct VerifyOptions {
  Scope scope = Scope::quick;
  int workers = 1;
  std::uint64_t node_budget = 100'000'000;   // per search
  std::uint64_t state_budget = 50'000'000;   // per game solve
  double time_budget_seconds = 0;  // wall clock; remaining claims are skipped once spent
  bool progress = false;           // one line per finished claim on stderr
  bool inject_failure = false;     // appends a deliberately failing claim (self-test)
};

struct Report {
  std::vector<Claim> claims;  // ordered by claim id
  int failures() const;
  int skips() const;
  bool all_passed() const { return failures() == 0; }
  nlohmann::ordered_json to_json() const;
  std::string to_csv() const;
};

// Runs every registered claim (quick scope omits the long-running searches)
// and returns the report. Claims execute independently, so worker count
// changes scheduling but never content.
Report verify_paper(const VerifyOptions& opts = {});

// Registered claim ids for the given scope, in report order.
std::vector<std::string> claim_ids(Scope scope);

}  // namespace edlab
