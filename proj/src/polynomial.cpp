#include "sepvar/polynomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace sepvar {

Polynomial Polynomial::from_monomials(RingPtr ring, std::vector<Monomial> monomials) {
  Polynomial p(std::move(ring));
  const std::size_t n = p.nvars();
  const bool boolean = p.ring_->boolean();
  for (auto& m : monomials) {
    if (m.term.size() != n) throw std::invalid_argument("term has wrong number of variables");
    if (m.coeff.field() != p.field()) throw std::invalid_argument("coefficient from wrong field");
    if (boolean && !m.term.is_squarefree()) m.term = m.term.squarefree();
  }
  std::sort(monomials.begin(), monomials.end(),
            [](const Monomial& a, const Monomial& b) { return lex_compare(a.term, b.term) > 0; });
  for (auto& m : monomials) {
    if (!p.terms_.empty() && p.terms_.back().term == m.term) {
      p.terms_.back().coeff += m.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
      p.terms_.push_back(std::move(m));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({Term::one(p.nvars()), c});
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, long c) {
  Field f = ring->field();
  return constant(std::move(ring), Scalar(f, c));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  Polynomial p(std::move(ring));
  p.terms_.push_back({Term::variable(p.nvars(), index), Scalar::one(p.field())});
  return p;
}

Polynomial Polynomial::monomial(RingPtr ring, Term term, Scalar coeff) {
  std::vector<Monomial> ms;
  ms.push_back({std::move(term), std::move(coeff)});
  return from_monomials(std::move(ring), std::move(ms));
}

std::uint64_t Polynomial::degree() const {
  std::uint64_t d = 0;
  for (const auto& m : terms_) d = std::max(d, m.term.degree());
  return d;
}

Scalar Polynomial::coefficient(const Term& t) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), t, [](const Monomial& m, const Term& u) {
    return lex_compare(m.term, u) > 0;
  });
  if (it != terms_.end() && it->term == t) return it->coeff;
  return Scalar::zero(field());
}

Scalar Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().term.is_one()) return terms_.back().coeff;
  return Scalar::zero(field());
}

bool Polynomial::is_variable(std::size_t index) const {
  return terms_.size() == 1 && terms_[0].term.is_variable(index) && terms_[0].coeff.is_one();
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (ring_ != other.ring_ && !(*ring_ == *other.ring_))
    throw std::invalid_argument("polynomials from different rings");
}

Polynomial Polynomial::operator-() const {
  Polynomial p(*this);
  for (auto& m : p.terms_) m.coeff = -m.coeff;
  return p;
}

Polynomial Polynomial::combine(const Polynomial& other, bool subtract) const {
  check_ring(other);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    int c;
    if (a == terms_.end()) {
      c = -1;
    } else if (b == other.terms_.end()) {
      c = 1;
    } else {
      auto o = lex_compare(a->term, b->term);
      c = o > 0 ? 1 : (o < 0 ? -1 : 0);
    }
    if (c > 0) {
      r.terms_.push_back(*a++);
    } else if (c < 0) {
      r.terms_.push_back({b->term, subtract ? -b->coeff : b->coeff});
      ++b;
    } else {
      Scalar s = subtract ? a->coeff - b->coeff : a->coeff + b->coeff;
      if (!s.is_zero()) r.terms_.push_back({a->term, std::move(s)});
      ++a;
      ++b;
    }
  }
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  *this = combine(other, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  *this = combine(other, true);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  if (b.terms_.size() == 1) return a.times_term(b.terms_[0].term, b.terms_[0].coeff);
  if (a.terms_.size() == 1) return b.times_term(a.terms_[0].term, a.terms_[0].coeff);
  const bool boolean = a.ring_->boolean();
  std::unordered_map<Term, Scalar, TermHash> acc;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      Term t = x.term * y.term;
      if (boolean) t = t.squarefree();
      auto [it, inserted] = acc.try_emplace(std::move(t), x.coeff * y.coeff);
      if (!inserted) it->second += x.coeff * y.coeff;
    }
  }
  std::vector<Monomial> ms;
  ms.reserve(acc.size());
  for (auto& [t, c] : acc)
    if (!c.is_zero()) ms.push_back({t, c});
  return Polynomial::from_monomials(a.ring_, std::move(ms));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial p(*this);
  for (auto& m : p.terms_) m.coeff *= c;
  return p;
}

Polynomial Polynomial::times_term(const Term& t, const Scalar& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  std::vector<Monomial> ms;
  ms.reserve(terms_.size());
  for (const auto& m : terms_) ms.push_back({m.term * t, m.coeff * c});
  if (ring_->boolean()) return from_monomials(ring_, std::move(ms));
  // lex is multiplicative, so the order is preserved
  Polynomial p(ring_);
  p.terms_ = std::move(ms);
  return p;
}

Polynomial Polynomial::times_variable(std::size_t index) const {
  return times_term(Term::variable(nvars(), index), Scalar::one(field()));
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(ring_, 1L);
  Polynomial base = *this;
  while (exponent) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

void Polynomial::add_multiple(const Polynomial& other, const Term& t, const Scalar& c) {
  *this += other.times_term(t, c);
}

Polynomial Polynomial::substitute(const std::vector<std::optional<Polynomial>>& images) const {
  const std::size_t n = nvars();
  if (images.size() != n) throw std::invalid_argument("substitution needs one slot per variable");
  for (const auto& img : images)
    if (img) check_ring(*img);
  // powers[k][e] = images[k]^e, filled on demand
  std::vector<std::map<unsigned, Polynomial>> powers(n);
  auto power_of = [&](std::size_t k, unsigned e) -> const Polynomial& {
    auto it = powers[k].find(e);
    if (it == powers[k].end()) it = powers[k].emplace(e, images[k]->pow(e)).first;
    return it->second;
  };
  Polynomial result(ring_);
  std::vector<Monomial> untouched;
  for (const auto& m : terms_) {
    std::vector<Term::Exponent> kept(m.term.exponents().begin(), m.term.exponents().end());
    bool hit = false;
    for (std::size_t k = 0; k < n; ++k) {
      if (kept[k] != 0 && images[k]) {
        hit = true;
        break;
      }
    }
    if (!hit) {
      untouched.push_back(m);
      continue;
    }
    Polynomial piece = monomial(ring_, Term::one(n), m.coeff);
    for (std::size_t k = 0; k < n; ++k) {
      if (kept[k] != 0 && images[k]) {
        piece = piece * power_of(k, kept[k]);
        kept[k] = 0;
      }
    }
    result += piece.times_term(Term(std::move(kept)), Scalar::one(field()));
  }
  result += from_monomials(ring_, std::move(untouched));
  return result;
}

Polynomial Polynomial::in_ring(const RingPtr& target) const {
  if (target->size() != nvars() || target->field() != field())
    throw std::invalid_argument("incompatible target ring");
  if (target->boolean()) return from_monomials(target, terms_);
  Polynomial p(target);
  p.terms_ = terms_;
  return p;
}

std::string term_to_string(const Term& t, const Ring& ring) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += ring.name(i);
    if (t[i] > 1) s += "^" + std::to_string(t[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& m : terms_) {
    Scalar c = m.coeff;
    bool negative = c.is_negative();
    if (negative) c = -c;
    if (first) {
      if (negative) s += '-';
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    if (m.term.is_one()) {
      s += c.to_string();
    } else if (c.is_one()) {
      s += term_to_string(m.term, *ring_);
    } else {
      s += c.to_string() + "*" + term_to_string(m.term, *ring_);
    }
  }
  return s;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.ring_ != b.ring_ && !(*a.ring_ == *b.ring_)) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].term == b.terms_[i].term) || !(a.terms_[i].coeff == b.terms_[i].coeff))
      return false;
  }
  return true;
}

Polynomial linear_part(const Polynomial& f) {
  std::vector<Monomial> ms;
  for (const auto& m : f.monomials())
    if (m.term.degree() == 1) ms.push_back(m);
  return Polynomial::from_monomials(f.ring(), std::move(ms));
}

Polynomial restrict_to_multiples(const Polynomial& f, std::span<const std::size_t> indices) {
  std::vector<Monomial> ms;
  for (const auto& m : f.monomials())
    if (m.term.divisible_by_any(indices)) ms.push_back(m);
  return Polynomial::from_monomials(f.ring(), std::move(ms));
}

}  // namespace sepvar
