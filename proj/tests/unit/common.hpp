#pragma once

#include <doctest.h>

#include "sepvar/io.hpp"
#include "testkit.hpp"

namespace sepvar::testkit {

inline PolySystem fixture(const std::string& name) { return parse_system(read_file(data_path(name))); }

inline Polynomial P(const std::string& expr, const RingPtr& ring) { return parse_polynomial(expr, ring); }

}  // namespace sepvar::testkit
