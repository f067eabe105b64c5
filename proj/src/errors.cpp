#include "stellar/errors.hpp"

#include "stellar/simplex.hpp"

namespace stellar {

InvalidEdge::InvalidEdge(const std::string& what, std::vector<Simplex> blocking)
    : Error(what), blocking_(std::move(blocking)) {}

ScriptError::ScriptError(std::size_t step, const std::string& what)
    : Error("step " + std::to_string(step) + ": " + what), step_(step) {}

ExitCode exit_code_for(const std::exception& e) {
  if (dynamic_cast<const MalformedInput*>(&e)) return ExitCode::malformed;
  if (dynamic_cast<const ResourceLimit*>(&e)) return ExitCode::resource;
  if (dynamic_cast<const Error*>(&e)) return ExitCode::domain;
  return ExitCode::malformed;
}

}  // namespace stellar
