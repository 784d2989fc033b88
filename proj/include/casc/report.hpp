#pragma once

#include <string>
#include <vector>

namespace casc {

enum class Status { pass, fail, skipped };

inline const char* status_str(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    default: return "skipped";
  }
}

struct Check {
  std::string id;
  Status status = Status::pass;
  std::string detail;                  // one-line summary, deterministic
  std::vector<std::string> witnesses;  // inputs demonstrating a failure
  double seconds = 0.0;                // shown in text output only

  void fail_with(std::string w) {
    status = Status::fail;
    witnesses.push_back(std::move(w));
  }
};

struct Report {
  std::string type;
  unsigned long seed = 0;
  int max_degree = 0;
  std::vector<Check> checks;  // sorted by id

  bool all_pass() const {
    for (const auto& c : checks)
      if (c.status == Status::fail) return false;
    return true;
  }
};

}  // namespace casc
