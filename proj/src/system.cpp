#include "sepvar/system.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sepvar {

IndexTuple::IndexTuple(std::vector<std::size_t> indices, std::size_t nvars)
    : indices_(std::move(indices)) {
  std::vector<bool> seen(nvars, false);
  for (std::size_t i : indices_) {
    if (i >= nvars) throw std::invalid_argument("indeterminate index out of range");
    if (seen[i]) throw std::invalid_argument("indeterminate listed twice");
    seen[i] = true;
  }
}

IndexTuple IndexTuple::parse(const std::string& list, const Ring& ring) {
  std::vector<std::size_t> idx;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    std::string name = item.substr(b, e - b + 1);
    auto i = ring.index_of(name);
    if (!i) throw std::invalid_argument("unknown variable '" + name + "'");
    idx.push_back(*i);
  }
  return IndexTuple(std::move(idx), ring.size());
}

IndexTuple IndexTuple::all(std::size_t nvars) {
  std::vector<std::size_t> idx(nvars);
  for (std::size_t i = 0; i < nvars; ++i) idx[i] = i;
  return IndexTuple(std::move(idx), nvars);
}

bool IndexTuple::contains(std::size_t index) const {
  return std::find(indices_.begin(), indices_.end(), index) != indices_.end();
}

std::string IndexTuple::to_string(const Ring& ring) const {
  std::string s = "(";
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (i) s += ", ";
    s += ring.name(indices_[i]);
  }
  return s + ")";
}

PolySystem::PolySystem(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) add(std::move(g));
}

void PolySystem::add(Polynomial g) {
  if (g.ring() != ring_ && !(*g.ring() == *ring_))
    throw std::invalid_argument("generator from a different ring");
  generators_.push_back(std::move(g));
}

std::uint64_t PolySystem::max_degree() const {
  std::uint64_t d = 0;
  for (const auto& g : generators_) d = std::max(d, g.degree());
  return d;
}

PolySystem PolySystem::normalized() const {
  PolySystem s(ring_);
  for (const auto& g : generators_)
    if (!g.is_zero()) s.generators_.push_back(g);
  return s;
}

}  // namespace sepvar
