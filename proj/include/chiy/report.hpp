#pragma once

#include <string>
#include <utility>
#include <vector>

namespace chiy {

/// Outcome of one exact identity check. `pass` holds exactly when the two
/// rendered sides denote the same value; both sides are kept for diagnosis.
struct VerifyReport {
  std::string identity;
  std::vector<std::pair<std::string, std::string>> params;
  std::string left;
  std::string right;
  bool pass = false;

  std::string params_string() const {
    std::string out;
    for (const auto& [k, v] : params) {
      if (!out.empty()) out += ", ";
      out += k + "=" + v;
    }
    return out;
  }
};

template <class T>
VerifyReport make_report(std::string identity, std::vector<std::pair<std::string, std::string>> params,
                         const T& left, const T& right) {
  return VerifyReport{std::move(identity), std::move(params), left.to_string(), right.to_string(),
                      left == right};
}

}  // namespace chiy
