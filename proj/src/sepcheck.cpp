#include "sepvar/sepcheck.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <stdexcept>
#include <thread>

namespace sepvar {

namespace {

std::size_t linear_rank(const std::vector<Polynomial>& gs, const RingPtr& ring) {
  const std::size_t n = ring->size();
  Matrix m(ring->field(), gs.size(), n);
  for (std::size_t r = 0; r < gs.size(); ++r)
    for (const auto& mono : gs[r].monomials())
      if (mono.term.degree() == 1) m.set(r, mono.term.variable_index(), mono.coeff);
  return rank(m);
}

void restrict_all(std::vector<Polynomial>& gs, const std::vector<std::size_t>& z) {
  for (auto& g : gs) g = restrict_to_multiples(g, z);
}

TrackedCheck run(const PolySystem& sys, const IndexTuple& z, bool optimized,
                 const OptimizedOptions& options, bool track) {
  const ExtensionMethod method = options.method;
  const DegreeBound bound = options.bound;
  const RingPtr& ring = sys.ring();
  const std::size_t n = ring->size();
  for (std::size_t zi : z)
    if (zi >= n) throw std::invalid_argument("indeterminate index out of range");

  TrackedCheck res;
  res.outcome.weights.assign(n, mpz_class(0));
  res.separating.assign(z.size(), std::nullopt);
  if (z.empty()) {
    res.outcome.success = true;
    return res;
  }

  std::vector<Polynomial> gs = sys.generators();
  std::vector<Polynomial> companions;
  // companions start as the original generators and never lose monomials
  const bool companions_needed = track || (optimized && bound == DegreeBound::Tracked);
  if (companions_needed) companions = gs;
  const mpz_class delta = static_cast<unsigned long>(sys.max_degree());
  mpz_class d = 1;

  std::vector<std::size_t> remaining = z.indices();
  restrict_all(gs, remaining);
  if (linear_rank(gs, ring) < remaining.size()) return res;

  WeightVector weights(n, mpz_class(0));
  std::size_t iteration = 0;
  while (!remaining.empty()) {
    ++iteration;
    IndexTuple current(remaining, n);
    if (optimized && bound == DegreeBound::Tracked) {
      Extension ext = degree_bounded_extension(companions, current, sys.max_degree(), method);
      for (auto& q : ext.basis) {
        gs.push_back(restrict_to_multiples(q, remaining));
        companions.push_back(std::move(q));
      }
    } else if (optimized) {
      Extension ext = degree_bounded_extension(gs, current, sys.max_degree(), method);
      if (track && !ext.basis.empty()) {
        std::vector<Polynomial> lifted;
        lifted.reserve(ext.origins.size());
        for (const auto& [i, j] : ext.origins) lifted.push_back(companions[j].times_variable(i));
        std::vector<Polynomial> qc = combine(ext.coefficients, lifted, ring);
        companions.insert(companions.end(), qc.begin(), qc.end());
      }
      gs.insert(gs.end(), ext.basis.begin(), ext.basis.end());
    }
    InterreductionResult ir = linear_interreduce(gs, current);
    if (companions_needed) companions = combine(ir.transform, companions, ring);

    std::vector<std::size_t> found;  // positions in `remaining`
    for (std::size_t i = 0; i < ir.heads.size(); ++i)
      if (ir.heads[i].is_variable(remaining[i])) found.push_back(i);
    if (found.empty()) return res;

    std::sort(found.begin(), found.end(),
              [&](std::size_t a, std::size_t b) { return remaining[a] < remaining[b]; });
    for (std::size_t i : found) {
      const std::size_t var = remaining[i];
      weights[var] = d;
      res.outcome.trace.push_back({var, d, iteration});
      if (track) {
        auto pos = std::find(z.begin(), z.end(), var) - z.begin();
        res.separating[pos] = companions[i];
      }
    }
    std::vector<std::size_t> next;
    for (std::size_t i = 0; i < remaining.size(); ++i)
      if (std::find(found.begin(), found.end(), i) == found.end()) next.push_back(remaining[i]);
    remaining = std::move(next);

    gs = ir.all();
    restrict_all(gs, remaining);
    d = optimized ? mpz_class(2 * delta * d + 1) : mpz_class(delta * d + 1);
  }
  res.outcome.success = true;
  res.outcome.weights = std::move(weights);
  return res;
}

}  // namespace

CheckOutcome check_separating(const PolySystem& sys, const IndexTuple& z) {
  return run(sys, z, false, {}, false).outcome;
}

CheckOutcome check_separating_optimized(const PolySystem& sys, const IndexTuple& z,
                                        const OptimizedOptions& options) {
  return run(sys, z, true, options, false).outcome;
}

TrackedCheck check_separating_tracked(const PolySystem& sys, const IndexTuple& z,
                                      bool optimized, const OptimizedOptions& options) {
  return run(sys, z, optimized, options, true);
}

std::vector<IndexTuple> enumerate_subsets(const std::vector<std::size_t>& pool,
                                          std::size_t max_size, std::size_t nvars) {
  std::vector<IndexTuple> out;
  const std::size_t m = pool.size();
  for (std::size_t k = 1; k <= std::min(max_size, m); ++k) {
    std::vector<std::size_t> pos(k);
    for (std::size_t i = 0; i < k; ++i) pos[i] = i;
    while (true) {
      std::vector<std::size_t> idx(k);
      for (std::size_t i = 0; i < k; ++i) idx[i] = pool[pos[i]];
      out.emplace_back(std::move(idx), nvars);
      std::size_t i = k;
      while (i > 0 && pos[i - 1] == m - k + i - 1) --i;
      if (i == 0) break;
      ++pos[i - 1];
      for (std::size_t j = i; j < k; ++j) pos[j] = pos[j - 1] + 1;
    }
  }
  return out;
}

std::vector<ScanEntry> scan_subsets(const std::vector<std::size_t>& pool, std::size_t max_size,
                                    std::size_t nvars,
                                    const std::function<CheckOutcome(const IndexTuple&)>& check,
                                    unsigned jobs) {
  std::vector<IndexTuple> subsets = enumerate_subsets(pool, max_size, nvars);
  std::vector<ScanEntry> out(subsets.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(subsets.size());
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < subsets.size();) {
      try {
        out[i] = {subsets[i], check(subsets[i])};
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> threads;
  for (unsigned t = 0; t < std::max(jobs, 1u); ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::vector<ScanEntry> scan_subsets(const PolySystem& sys, const std::vector<std::size_t>& pool,
                                    std::size_t max_size, ScanMode mode, unsigned jobs,
                                    const OptimizedOptions& options) {
  return scan_subsets(
      pool, max_size, sys.ring()->size(),
      [&](const IndexTuple& z) {
        return mode == ScanMode::Plain ? check_separating(sys, z)
                                       : check_separating_optimized(sys, z, options);
      },
      jobs);
}

}  // namespace sepvar
