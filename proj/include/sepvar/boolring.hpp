#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sepvar/ordering.hpp"
#include "sepvar/sepcheck.hpp"
#include "sepvar/sepextract.hpp"
#include "sepvar/system.hpp"

namespace sepvar {

/// The boolean-mode ring over the same indeterminates (F2 only).
RingPtr boolean_ring_of(const RingPtr& ring);

/// Canonical square-free representative, as an element of the boolean-mode
/// ring. Throws std::invalid_argument outside F2.
Polynomial squarefree_normalize(const Polynomial& f);

/// X_k^2 + X_k (= X_k^2 - X_k) for every k, in the non-boolean F2 ring.
std::vector<Polynomial> field_ideal_generators(const RingPtr& ambient);

/// Division algorithm remainder: the first divisor (in the given order)
/// whose leading term divides the current leading term is used.
Polynomial normal_remainder(const Polynomial& f, std::span<const Polynomial> divisors,
                            const TermOrdering& ord);

/// Remainder of f modulo (G_1, ..., G_r, X_1^2 - X_1, ..., X_n^2 - X_n)
/// computed in the non-boolean ring, returned square-free.
Polynomial bool_normal_remainder(const Polynomial& f, std::span<const Polynomial> g,
                                 const TermOrdering& ord);

enum class BoolCheckMode { Plain, Optimized, OptimizedWithFieldIdeal };

/// The system the checkers actually see: the representatives themselves for
/// Plain, the representatives in the non-boolean ring for the optimized
/// modes, plus the field equations for OptimizedWithFieldIdeal.
PolySystem bool_working_system(const PolySystem& sys, BoolCheckMode mode);

CheckOutcome bool_check_separating(const PolySystem& sys, const IndexTuple& z,
                                   BoolCheckMode mode, const OptimizedOptions& options = {});

/// Extracts with the method matching `mode` and maps the result back to
/// square-free representatives. `outcome` must be a success of
/// bool_check_separating with the same mode.
SeparatingTuple bool_find_separating_tuple(const PolySystem& sys, const IndexTuple& z,
                                           BoolCheckMode mode, const CheckOutcome& outcome,
                                           const OptimizedOptions& options = {});

/// Appends z_i * g_j (square-free) for every g_j with zero constant term
/// whose support contains z_i.
PolySystem augment_with_indeterminate_products(const PolySystem& sys, const IndexTuple& z);

/// f_i = z_i + h_i with h_i replaced by its Boolean normal remainder modulo
/// (f_1, ..., f_s).
CoherentTuple bool_coherent_tuple(const SeparatingTuple& sep);

/// Distinct points of F2^m.
class PointSet {
 public:
  /// Throws std::invalid_argument on ragged or repeated points.
  explicit PointSet(std::vector<std::vector<bool>> points);
  /// One bit string per line; '#' comments.
  static PointSet parse(const std::string& text);

  std::size_t dimension() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<std::vector<bool>>& points() const { return points_; }

 private:
  std::size_t dim_ = 0;
  std::vector<std::vector<bool>> points_;
};

/// Basis of the Boolean polynomials of degree <= dmax vanishing on every
/// point, over the boolean-mode ring x1..xm (or `ring` when given). Leading
/// terms under degrevlex are pairwise distinct.
std::vector<Polynomial> vanishing_ideal_degree_bounded(const PointSet& pts, std::size_t dmax,
                                                       RingPtr ring = nullptr);

bool evaluate_boolean(const Polynomial& f, const std::vector<bool>& point);

/// 256 hex entries, whitespace separated; '#' comments.
std::vector<std::uint8_t> parse_sbox_table(const std::string& text);

/// Points (a, s(a)) in F2^16, each byte written most significant bit first.
PointSet sbox_graph_points(const std::vector<std::uint8_t>& table);

}  // namespace sepvar
