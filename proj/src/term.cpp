#include "sepvar/term.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sepvar {

Term::Term(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

Term Term::variable(std::size_t nvars, std::size_t index, Exponent power) {
  if (index >= nvars) throw std::out_of_range("variable index out of range");
  Term t(nvars);
  t.exps_[index] = power;
  t.degree_ = power;
  return t;
}

std::size_t Term::variable_index() const {
  if (degree_ != 1) throw std::logic_error("term is not an indeterminate");
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0) return i;
  return exps_.size();
}

bool Term::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

Term Term::squarefree() const {
  Term t(*this);
  t.degree_ = 0;
  for (auto& e : t.exps_) {
    e = e ? 1 : 0;
    t.degree_ += e;
  }
  return t;
}

bool Term::divides(const Term& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Term Term::quotient_of(const Term& other) const {
  Term t(other);
  for (std::size_t i = 0; i < exps_.size(); ++i) t.exps_[i] -= exps_[i];
  t.degree_ = other.degree_ - degree_;
  return t;
}

Term Term::lcm(const Term& other) const {
  Term t(*this);
  t.degree_ = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    t.exps_[i] = std::max(exps_[i], other.exps_[i]);
    t.degree_ += t.exps_[i];
  }
  return t;
}

bool Term::coprime(const Term& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

bool Term::divisible_by_any(std::span<const std::size_t> indices) const {
  return std::any_of(indices.begin(), indices.end(),
                     [this](std::size_t i) { return exps_[i] != 0; });
}

Term Term::operator*(const Term& other) const {
  Term t(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) t.exps_[i] += other.exps_[i];
  t.degree_ += other.degree_;
  return t;
}

Term Term::times_variable(std::size_t index) const {
  Term t(*this);
  ++t.exps_[index];
  ++t.degree_;
  return t;
}

std::strong_ordering lex_compare(const Term& a, const Term& b) {
  for (std::size_t i = 0; i < a.exps_.size(); ++i) {
    if (a.exps_[i] != b.exps_[i]) return a.exps_[i] <=> b.exps_[i];
  }
  return std::strong_ordering::equal;
}

std::size_t Term::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (Exponent e : exps_) {
    h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace sepvar
