#include "ospec/report.hpp"

#include <algorithm>

namespace ospec {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Verified: return "VERIFIED";
    case CheckStatus::Falsified: return "FALSIFIED";
    case CheckStatus::Unverified: return "UNVERIFIED";
  }
  return "?";
}

void Report::add(std::string name, CheckStatus status, std::string detail) {
  checks.push_back({std::move(name), status, std::move(detail)});
}

void Report::add(std::string name, bool verified, std::string detail) {
  add(std::move(name),
      verified ? CheckStatus::Verified : CheckStatus::Falsified,
      std::move(detail));
}

void Report::merge(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

bool Report::all_verified() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) {
    return c.status == CheckStatus::Verified;
  });
}

bool Report::any_falsified() const {
  return std::any_of(checks.begin(), checks.end(), [](const Check& c) {
    return c.status == CheckStatus::Falsified;
  });
}

bool Report::any_unverified() const {
  return std::any_of(checks.begin(), checks.end(), [](const Check& c) {
    return c.status == CheckStatus::Unverified;
  });
}

}  // namespace ospec
