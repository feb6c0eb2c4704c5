#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sepvar/matrix.hpp"
#include "sepvar/polynomial.hpp"
#include "sepvar/system.hpp"

namespace sepvar {

/// Raised when the input of linear_interreduce violates its hypotheses.
class HypothesisError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct InterreductionResult {
  /// heads[i] = z_i - h_i with every term of h_i of degree >= 2.
  std::vector<Polynomial> heads;
  /// Degree >= 2, pairwise distinct lex leading terms.
  std::vector<Polynomial> tails;
  /// Row k expresses output k (heads, then tails) in the inputs.
  Matrix transform;

  std::vector<Polynomial> all() const;
};

/// Linear interreduction. Requires that the linear parts of gs span a space
/// of dimension #Z and that every support term is divisible by some z_i;
/// throws HypothesisError otherwise.
InterreductionResult linear_interreduce(std::span<const Polynomial> gs, const IndexTuple& z);

enum class ExtensionMethod { KernelOfHighTerms, EchelonScan };

struct Extension {
  /// Distinct nonzero products x_i * g_j with x_i outside Z.
  std::vector<Polynomial> products;
  /// (i, j) for each product.
  std::vector<std::pair<std::size_t, std::size_t>> origins;
  /// basis[k] = sum_p coefficients(k, p) * products[p].
  Matrix coefficients;
  /// A basis of span(products) intersected with polynomials of degree <= delta.
  std::vector<Polynomial> basis;
};

Extension degree_bounded_extension(std::span<const Polynomial> gs, const IndexTuple& z,
                                   std::uint64_t delta,
                                   ExtensionMethod method = ExtensionMethod::KernelOfHighTerms);

}  // namespace sepvar
