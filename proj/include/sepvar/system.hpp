#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sepvar/polynomial.hpp"
#include "sepvar/ring.hpp"

namespace sepvar {

/// Ordered tuple Z of distinct indeterminates, stored as 0-based indices.
class IndexTuple {
 public:
  IndexTuple() = default;
  /// Throws std::invalid_argument for an index >= nvars or a repeated index.
  IndexTuple(std::vector<std::size_t> indices, std::size_t nvars);

  /// Resolves comma-separated variable names, e.g. "x4,x5,x7".
  static IndexTuple parse(const std::string& list, const Ring& ring);
  static IndexTuple all(std::size_t nvars);

  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  std::size_t operator[](std::size_t i) const { return indices_[i]; }
  const std::vector<std::size_t>& indices() const { return indices_; }
  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }
  bool contains(std::size_t index) const;

  std::string to_string(const Ring& ring) const;

  friend bool operator==(const IndexTuple&, const IndexTuple&) = default;

 private:
  std::vector<std::size_t> indices_;
};

/// Generators g1..gr of an ideal, all in one ring.
class PolySystem {
 public:
  explicit PolySystem(RingPtr ring) : ring_(std::move(ring)) {}
  /// Throws std::invalid_argument if a generator lives in another ring.
  PolySystem(RingPtr ring, std::vector<Polynomial> generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  void add(Polynomial g);
  /// Maximal degree of a generator (0 if there are none).
  std::uint64_t max_degree() const;
  /// Drops zero generators.
  PolySystem normalized() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> generators_;
};

}  // namespace sepvar
