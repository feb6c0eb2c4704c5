#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sepvar/ordering.hpp"
#include "sepvar/sepcheck.hpp"
#include "sepvar/system.hpp"

namespace sepvar {

class NoRowWithLeadingTerm : public std::runtime_error {
 public:
  explicit NoRowWithLeadingTerm(std::size_t variable);
  std::size_t variable() const { return variable_; }

 private:
  std::size_t variable_;
};

class OptimizedCheckFailed : public std::runtime_error {
 public:
  OptimizedCheckFailed() : std::runtime_error("optimized check failed") {}
};

struct SeparatingEntry {
  std::size_t variable;
  Polynomial f;
};

/// LT_sigma(f) = z with coefficient 1 for every entry; one entry per z in Z
/// (in the order of Z).
struct SeparatingTuple {
  std::vector<SeparatingEntry> entries;
  TermOrdering ordering;
};

/// Entries f = z - h with no term of h divisible by any z; ordered so that
/// the z are ascending in the certifying ordering.
struct CoherentTuple {
  std::vector<SeparatingEntry> entries;
};

/// W-weight first, then degree in the indeterminates outside Z, then
/// reverse lex (-e_n, ..., -e_1).
TermOrdering compatible_ordering(const WeightVector& w, const IndexTuple& z);

/// Row reduces the generators over their support sorted sigma-descending and
/// picks the row whose leading term is z_i. Throws NoRowWithLeadingTerm.
SeparatingTuple find_separating_tuple(const PolySystem& sys, const IndexTuple& z,
                                      const TermOrdering& sigma);

/// Runs the optimized check with companion tracking. Throws
/// OptimizedCheckFailed.
SeparatingTuple find_separating_tuple_tracked(const PolySystem& sys, const IndexTuple& z,
                                              const OptimizedOptions& options = {});

/// Substitutes z_j -> h'_j into the later entries, in ascending sigma order.
CoherentTuple coherent_tuple(const SeparatingTuple& sep, const IndexTuple& z);

struct EliminatedSystem {
  PolySystem system;
  /// kept[k] is the index in the original ring of variable k of the new ring.
  std::vector<std::size_t> kept;
};

/// Substitutes z_i -> h_i in every generator and moves the results to the
/// ring over the remaining indeterminates. Zero results are kept.
EliminatedSystem eliminate(const PolySystem& sys, const CoherentTuple& coh);

}  // namespace sepvar
