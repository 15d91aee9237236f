#pragma once

#include <string>
#include <vector>

namespace fole {

struct CheckReport {
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  void fail_with(std::string why) { failures.push_back(std::move(why)); }
  void merge(const CheckReport& other, const std::string& prefix = "") {
    for (const auto& f : other.failures) failures.push_back(prefix + f);
  }
};

}  // namespace fole
