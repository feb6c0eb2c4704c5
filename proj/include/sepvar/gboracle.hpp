#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sepvar/ordering.hpp"
#include "sepvar/system.hpp"

namespace sepvar {

/// Raised when a resource guard trips; callers treat it as "unknown".
class OracleOverloaded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleLimits {
  std::size_t max_pairs = 20000;
  std::uint64_t max_degree = 40;
  std::size_t max_basis = 2000;
};

/// Reduced, monic, sorted by descending leading term. Boolean-mode input is
/// handled in the non-boolean F2 ring together with the field equations;
/// `ring` is that ring.
struct GroebnerBasis {
  RingPtr ring;
  TermOrdering ordering;
  std::vector<Polynomial> polys;

  bool is_unit() const;
};

GroebnerBasis buchberger(const PolySystem& sys, const TermOrdering& ord,
                         const OracleLimits& limits = {});

/// Fully reduced remainder. Boolean-mode input comes back square-free.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

/// Block ordering: lex on the Z block (z1 > z2 > ...) above degrevlex on
/// the remaining indeterminates.
TermOrdering elimination_ordering(std::size_t nvars, const IndexTuple& z);

/// True iff every z_i is the leading term of some element of the reduced
/// basis under elimination_ordering.
bool oracle_is_separating(const PolySystem& sys, const IndexTuple& z,
                          const OracleLimits& limits = {});

}  // namespace sepvar
