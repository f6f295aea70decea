#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ospec {

// Thrown when a computation contradicts a claim the toolkit is built to
// confirm. Distinct from precondition errors so callers can map it to a
// hard failure.
class FalsifiedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class CheckStatus {
  Verified,    // computed and confirmed
  Falsified,   // computed and contradicted
  Unverified,  // could not be computed within the effort budget
};

const char* to_string(CheckStatus s);

struct Check {
  std::string name;
  CheckStatus status;
  std::string detail;
};

struct Report {
  std::vector<Check> checks;

  void add(std::string name, CheckStatus status, std::string detail = {});
  void add(std::string name, bool verified, std::string detail = {});
  void merge(const Report& other);

  bool all_verified() const;
  bool any_falsified() const;
  bool any_unverified() const;
};

}  // namespace ospec
