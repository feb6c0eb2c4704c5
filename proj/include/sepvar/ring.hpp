#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sepvar/scalar.hpp"

namespace sepvar {

/// K[x1,...,xn] with K in {Q, F2}, or the Boolean ring B_n when boolean-mode
/// is set (F2 only). Rings are shared immutably between polynomials.
class Ring {
 public:
  /// Names default to x1..xn. Throws std::invalid_argument for n == 0,
  /// duplicate names, or boolean-mode over Q.
  Ring(std::size_t nvars, Field field, std::vector<std::string> names = {},
       bool boolean = false);

  static std::shared_ptr<const Ring> make(std::size_t nvars, Field field,
                                          std::vector<std::string> names = {},
                                          bool boolean = false);

  std::size_t size() const { return names_.size(); }
  Field field() const { return field_; }
  bool boolean() const { return boolean_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(const std::string& name) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.field_ == b.field_ && a.boolean_ == b.boolean_ && a.names_ == b.names_;
  }

 private:
  Field field_;
  bool boolean_;
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

/// The same indeterminates with boolean-mode switched on or off.
RingPtr with_boolean_mode(const RingPtr& ring, bool boolean);

}  // namespace sepvar
