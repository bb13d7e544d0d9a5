#ifndef RELLOC_IO_HPP
#define RELLOC_IO_HPP

// JSON forms of states, transformations and hyperplanes.
//   state:      {"m", "S", "c", "x": [3], "p": [3], "s_hat": [3]}  (s_hat omitted for S = 0)
//   transform:  {"lambda": [[4] x 4], "a": [4]}
//   hyperplane: {"u": [4], "tau": t}

#include <optional>
#include <string>
#include <utility>

#include "json.hpp"
#include "relloc/elementary.hpp"
#include "relloc/localisation.hpp"
#include "relloc/poincare.hpp"

namespace relloc {

inline constexpr const char* kSchema = "relloc/1";

struct SystemState {
  ElementarySystem system;
  State state;
};

/// Throws std::invalid_argument on missing or malformed fields. A non-empty
/// c_override replaces the file's c.
SystemState system_state_from_json(const nlohmann::json& j, std::optional<double> c_override = std::nullopt);
nlohmann::json to_json(const ElementarySystem& sys, const State& state);

PoincareTransform poincare_from_json(const nlohmann::json& j);
nlohmann::json to_json(const PoincareTransform& g);

Hyperplane hyperplane_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Hyperplane& sigma);

nlohmann::json to_json(const FourVector& v);
nlohmann::json to_json(const MomentumValue& mv);
nlohmann::json to_json(const MollerDisc& disc);

/// Reads and parses a JSON file; throws std::runtime_error with the path on
/// failure.
nlohmann::json read_json_file(const std::string& path);

/// Shortest round-trip decimal form.
std::string format_double(double v);

}  // namespace relloc

#endif  // RELLOC_IO_HPP
