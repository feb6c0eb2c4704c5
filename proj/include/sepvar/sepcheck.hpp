#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "sepvar/ordering.hpp"
#include "sepvar/reduce.hpp"
#include "sepvar/system.hpp"

namespace sepvar {

struct TraceEntry {
  std::size_t variable;
  mpz_class weight;
  /// 1-based loop iteration.
  std::size_t iteration;
};

struct CheckOutcome {
  bool success = false;
  /// All zero on Fail.
  WeightVector weights;
  std::vector<TraceEntry> trace;

  explicit operator bool() const { return success; }
};

/// Plain check: interreduce, collect the z_i found exactly, delete, repeat.
/// Weights follow d <- delta*d + 1.
CheckOutcome check_separating(const PolySystem& sys, const IndexTuple& z);

/// Where the degree bound of the optimized check is applied.
enum class DegreeBound {
  /// To x_i * G_j, where G_j is the working polynomial g_j before any
  /// monomial deletion (the generators pushed through the same row
  /// operations). The new elements join the working set after deletion.
  Tracked,
  /// To x_i * g_j for the working polynomials themselves.
  Working,
};

struct OptimizedOptions {
  ExtensionMethod method = ExtensionMethod::KernelOfHighTerms;
  DegreeBound bound = DegreeBound::Tracked;
};

/// Same loop, but each pass first adds a basis of the degree <= delta part
/// of the span of the products x_i * g_j with x_i not in Z (see DegreeBound).
/// Weights follow d <- 2*delta*d + 1.
CheckOutcome check_separating_optimized(const PolySystem& sys, const IndexTuple& z,
                                        const OptimizedOptions& options = {});

/// Result of a check that also carried companion polynomials: the original
/// generators pushed through every linear operation applied to the working
/// set. separating[i] belongs to z[i] and is set on success.
struct TrackedCheck {
  CheckOutcome outcome;
  std::vector<std::optional<Polynomial>> separating;
};

TrackedCheck check_separating_tracked(const PolySystem& sys, const IndexTuple& z,
                                      bool optimized, const OptimizedOptions& options = {});

enum class ScanMode { Plain, Optimized };

struct ScanEntry {
  IndexTuple z;
  CheckOutcome outcome;
};

/// Every subset of `pool` of size 1..max_size, ordered by size, then
/// lexicographically by position in the pool.
std::vector<IndexTuple> enumerate_subsets(const std::vector<std::size_t>& pool,
                                          std::size_t max_size, std::size_t nvars);

/// Runs `check` on every subset; `jobs` > 1 uses worker threads. The result
/// order does not depend on `jobs`.
std::vector<ScanEntry> scan_subsets(const std::vector<std::size_t>& pool, std::size_t max_size,
                                    std::size_t nvars,
                                    const std::function<CheckOutcome(const IndexTuple&)>& check,
                                    unsigned jobs = 1);

std::vector<ScanEntry> scan_subsets(const PolySystem& sys, const std::vector<std::size_t>& pool,
                                    std::size_t max_size, ScanMode mode, unsigned jobs = 1,
                                    const OptimizedOptions& options = {});

}  // namespace sepvar
