#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace itrails {

inline constexpr const char* kLibraryVersion = "0.1.0";

// one acceptance criterion outcome
struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string details;
  long long millis = 0;
};

// runs the full acceptance suite; progress lines are written per criterion when
// a stream is supplied
std::vector<CriterionResult> run_acceptance(std::ostream* progress = nullptr);

// executes a JSON request document {"command": ...} and returns the JSON response;
// throws InputError / ComputeError on bad requests and failed computations
std::string execute_request(const std::string& request_json);

}  // namespace itrails
