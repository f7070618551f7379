#ifndef DTG_IO_HPP
#define DTG_IO_HPP

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "dtg/topgroup.hpp"

namespace dtg {

// Malformed input; the message names the violated schema field.
struct SchemaError : std::runtime_error {
  explicit SchemaError(const std::string& field, const std::string& what)
      : std::runtime_error(field + ": " + what), field(field) {}
  std::string field;
};

// A syntactically valid file whose claimed verification level fails to
// re-verify.
struct ClaimError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

nlohmann::ordered_json image_to_json(const DigitalImage& image);
DigitalImage image_from_json(const nlohmann::json& j,
                             const std::string& field = "image");

nlohmann::ordered_json group_to_json(const FiniteGroup& group);
FiniteGroup group_from_json(const nlohmann::json& j,
                            const std::string& field = "group");

// Emits {"image":..., "group":..., "claimed_level": "NP1"|"NP2"|null} with
// the claimed level taken from the verified level of the value.
nlohmann::ordered_json dtg_to_json(const DTG& d);

// Re-verifies any claimed level and throws ClaimError on a mismatch. The
// returned value carries the freshly computed level.
DTG dtg_from_json(const nlohmann::json& j);

std::vector<int> map_from_json(const nlohmann::json& j, int source_size,
                               int target_size);
nlohmann::ordered_json map_to_json(const std::vector<int>& map);

std::string to_dot(const DigitalImage& image);

// Normalized serialization used by every emitter: 2-space indent plus a
// trailing newline, so emitted files are byte-stable.
std::string dump_normalized(const nlohmann::ordered_json& j);

}  // namespace dtg

#endif
