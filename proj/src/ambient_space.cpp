#include "bircalc/ambient_space.hpp"

#include "bircalc/error.hpp"

namespace bircalc {

AmbientSpace AmbientSpace::parse(std::string_view name) {
  if (name == "p3") return projective_space();
  if (name == "cubic") return cubic_threefold();
  throw ParseError("unknown ambient space '" + std::string(name) + "' (expected p3 or cubic)");
}

std::string AmbientSpace::name() const {
  return kind_ == AmbientKind::ProjectiveThreeSpace ? "p3" : "cubic";
}

}  // namespace bircalc
