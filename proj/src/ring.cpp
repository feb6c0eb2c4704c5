#include "sepvar/ring.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace sepvar {

Ring::Ring(std::size_t nvars, Field field, std::vector<std::string> names, bool boolean)
    : field_(field), boolean_(boolean), names_(std::move(names)) {
  if (nvars == 0) throw std::invalid_argument("a ring needs at least one indeterminate");
  if (boolean_ && field_ != Field::F2)
    throw std::invalid_argument("boolean mode requires field F2");
  if (names_.empty()) {
    names_.reserve(nvars);
    for (std::size_t i = 1; i <= nvars; ++i) names_.push_back("x" + std::to_string(i));
  }
  if (names_.size() != nvars) throw std::invalid_argument("wrong number of variable names");
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name " + n);
  }
}

RingPtr Ring::make(std::size_t nvars, Field field, std::vector<std::string> names,
                   bool boolean) {
  return std::make_shared<const Ring>(nvars, field, std::move(names), boolean);
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

RingPtr with_boolean_mode(const RingPtr& ring, bool boolean) {
  if (ring->boolean() == boolean) return ring;
  return Ring::make(ring->size(), ring->field(), ring->names(), boolean);
}

}  // namespace sepvar
