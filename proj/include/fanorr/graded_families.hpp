#pragma once

// Weighted hypersurfaces and codimension-2 complete intersections: Hilbert
// series, well-formedness, and the invariant-matching family search.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "fanorr/error.hpp"
#include "fanorr/orbifold_rr.hpp"
#include "fanorr/rational.hpp"

namespace fanorr {

// Ambient weights of P(a_0, ..., a_k), stored ascending.
class WeightSystem {
 public:
  WeightSystem() = default;
  WeightSystem(std::initializer_list<int> w) : WeightSystem(std::vector<int>(w)) {}
  explicit WeightSystem(std::vector<int> w) : weights_(std::move(w)) {
    if (weights_.size() != 5 && weights_.size() != 6)
      throw DomainError("weight system needs 5 or 6 weights, got " + std::to_string(weights_.size()));
    for (int x : weights_)
      if (x <= 0) throw DomainError("weights must be positive, got " + std::to_string(x));
    std::sort(weights_.begin(), weights_.end());
    int g = 0;
    for (int x : weights_) g = std::gcd(g, x);
    if (g != 1) throw DomainError("weights " + to_string() + " share the common factor " + std::to_string(g));
  }

  const std::vector<int>& weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return weights_.size(); }
  std::int64_t sum() const { return std::accumulate(weights_.begin(), weights_.end(), std::int64_t{0}); }
  std::int64_t product() const {
    return std::accumulate(weights_.begin(), weights_.end(), std::int64_t{1}, std::multiplies<>());
  }

  // "1,1,1,1,2"
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < weights_.size(); ++i) s += (i ? "," : "") + std::to_string(weights_[i]);
    return s;
  }

  friend bool operator==(const WeightSystem&, const WeightSystem&) = default;
  friend auto operator<=>(const WeightSystem&, const WeightSystem&) = default;

 private:
  std::vector<int> weights_;
};

// Every choice of all-but-one weights is coprime.
inline bool is_well_formed(const WeightSystem& w) {
  const auto& ws = w.weights();
  for (std::size_t skip = 0; skip < ws.size(); ++skip) {
    int g = 0;
    for (std::size_t i = 0; i < ws.size(); ++i)
      if (i != skip) g = std::gcd(g, ws[i]);
    if (g != 1) return false;
  }
  return true;
}

// A 3-fold complete intersection: 5 weights with one equation or 6 weights
// with two.
class Family {
 public:
  Family(WeightSystem ambient, std::vector<int> degrees) : ambient_(std::move(ambient)), degrees_(std::move(degrees)) {
    if (degrees_.size() + 4 != ambient_.size())
      throw DomainError("family in P(" + ambient_.to_string() + ") needs " + std::to_string(ambient_.size() - 4) +
                        " equation degree(s), got " + std::to_string(degrees_.size()));
    for (int d : degrees_)
      if (d <= 0) throw DomainError("equation degrees must be positive, got " + std::to_string(d));
    std::sort(degrees_.begin(), degrees_.end());
  }

  const WeightSystem& ambient() const noexcept { return ambient_; }
  const std::vector<int>& weights() const noexcept { return ambient_.weights(); }
  const std::vector<int>& degrees() const noexcept { return degrees_; }
  int codimension() const noexcept { return int(degrees_.size()); }

  std::int64_t degree_sum() const { return std::accumulate(degrees_.begin(), degrees_.end(), std::int64_t{0}); }
  std::int64_t degree_product() const {
    return std::accumulate(degrees_.begin(), degrees_.end(), std::int64_t{1}, std::multiplies<>());
  }

  // "(1,1,1,1,2,2); 3,4"
  std::string to_string() const {
    std::string s = "(" + ambient_.to_string() + "); ";
    for (std::size_t i = 0; i < degrees_.size(); ++i) s += (i ? "," : "") + std::to_string(degrees_[i]);
    return s;
  }

  friend bool operator==(const Family&, const Family&) = default;
  friend auto operator<=>(const Family&, const Family&) = default;

 private:
  WeightSystem ambient_;
  std::vector<int> degrees_;
};

inline std::int64_t fano_index(const Family& f) { return f.ambient().sum() - f.degree_sum(); }

// (-K)^3 = prod d / prod w, defined for index-1 families (-K = O(1)).
inline Rational family_anticanonical_cube(const Family& f) {
  if (const auto i = fano_index(f); i != 1)
    throw DomainError("family " + f.to_string() + " has Fano index " + std::to_string(i) + ", expected 1");
  return Rational(f.degree_product(), f.ambient().product());
}

namespace detail {

// Coefficients of prod_j (1 - t^d_j) / prod_i (1 - t^w_i) up to t^depth.
// May be negative for inputs that are not graded rings.
inline std::vector<std::int64_t> series_coefficients(const std::vector<int>& weights, const std::vector<int>& degrees,
                                                     int depth) {
  std::vector<std::int64_t> c(std::size_t(depth) + 1, 0);
  c[0] = 1;
  for (int w : weights)
    for (int n = w; n <= depth; ++n) c[std::size_t(n)] += c[std::size_t(n - w)];
  for (int d : degrees)
    for (int n = depth; n >= d; --n) c[std::size_t(n)] -= c[std::size_t(n - d)];
  return c;
}

}  // namespace detail

using HilbertSequence = std::vector<std::int64_t>;

inline HilbertSequence family_hilbert_series(const Family& f, int depth) {
  if (depth < 0) throw DomainError("series depth must be >= 0, got " + std::to_string(depth));
  auto c = detail::series_coefficients(f.weights(), f.degrees(), depth);
  for (std::size_t n = 0; n < c.size(); ++n)
    if (c[n] < 0)
      throw DomainError("family " + f.to_string() + " has negative Hilbert coefficient " + std::to_string(c[n]) +
                        " in degree " + std::to_string(n));
  return c;
}

struct SearchOptions {
  // Match depth; unset means max(10, 2 * sum of weights) per candidate.
  std::optional<int> depth;
  int fano_index = 1;
  unsigned jobs = 1;
};

struct SearchHit {
  Family family;
  int depth;

  friend bool operator==(const SearchHit&, const SearchHit&) = default;
};

inline int default_match_depth(const WeightSystem& w) { return std::max<int>(10, int(2 * w.sum())); }

namespace detail {

// All nondecreasing tuples of length k with entries in [1, max_weight].
inline std::vector<std::vector<int>> weight_tuples(int k, int max_weight) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(std::size_t(k), 1);
  if (max_weight < 1) return out;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[std::size_t(i)] == max_weight) --i;
    if (i < 0) break;
    ++cur[std::size_t(i)];
    for (int j = i + 1; j < k; ++j) cur[std::size_t(j)] = cur[std::size_t(i)];
  }
  return out;
}

inline bool degree_is_weight(const std::vector<int>& weights, const std::vector<int>& degrees) {
  for (int d : degrees)
    if (std::find(weights.begin(), weights.end(), d) != weights.end()) return true;
  return false;
}

// All hits for one weight tuple.
inline void match_weights(const std::vector<int>& w, const FanoNumerics& target, const SearchOptions& opt,
                          int codim, std::vector<SearchHit>& hits) {
  int g = 0;
  for (int x : w) g = std::gcd(g, x);
  if (g != 1) return;
  const WeightSystem ambient(w);
  if (!is_well_formed(ambient)) return;

  const std::int64_t iota = opt.fano_index;
  const std::int64_t total = ambient.sum() - iota;
  std::vector<std::vector<int>> degree_sets;
  if (codim == 1) {
    if (total >= 1) degree_sets.push_back({int(total)});
  } else {
    for (std::int64_t d1 = 1; 2 * d1 <= total; ++d1) degree_sets.push_back({int(d1), int(total - d1)});
  }

  const int depth = opt.depth.value_or(default_match_depth(ambient));
  std::optional<RRSequence> rr;
  for (const auto& d : degree_sets) {
    if (degree_is_weight(w, d)) continue;
    // (-K)^3 = iota^3 * prod d / prod w
    std::int64_t dprod = 1;
    for (int x : d) dprod *= x;
    const Rational cube = Rational(iota * iota * iota * dprod, ambient.product());
    if (cube != target.kcube()) continue;
    if (!rr) rr = rr_hilbert_sequence(target, depth);
    const auto series = series_coefficients(w, d, int(depth * iota));
    bool match = true;
    for (int n = 0; n <= depth && match; ++n)
      match = rr->values[std::size_t(n)] == Rational(series[std::size_t(n * iota)]);
    if (match) hits.push_back({Family(ambient, d), depth});
  }
}

}  // namespace detail

// Families in codimension 1 or 2 with weights <= max_weight whose
// anticanonical cube and Hilbert function (to the match depth) equal the
// target's. The result is sorted by (weights, degrees) and independent of
// opt.jobs.
inline std::vector<SearchHit> search_candidates(const FanoNumerics& target, int codim, int max_weight,
                                                const SearchOptions& opt = {}) {
  if (codim != 1 && codim != 2) throw DomainError("search codimension must be 1 or 2, got " + std::to_string(codim));
  if (max_weight < 1) throw DomainError("max weight must be >= 1, got " + std::to_string(max_weight));
  if (opt.depth && *opt.depth < 2) throw DomainError("match depth must be >= 2, got " + std::to_string(*opt.depth));
  if (opt.fano_index < 1) throw DomainError("Fano index must be >= 1, got " + std::to_string(opt.fano_index));

  const auto tuples = detail::weight_tuples(4 + codim, max_weight);
  const unsigned jobs = std::max(1u, std::min<unsigned>(opt.jobs, unsigned(tuples.size())));
  std::vector<std::vector<SearchHit>> partial(jobs);
  std::vector<std::exception_ptr> failures(jobs);
  const auto work = [&](unsigned job) {
    try {
      for (std::size_t i = job; i < tuples.size(); i += jobs)
        detail::match_weights(tuples[i], target, opt, codim, partial[job]);
    } catch (...) {
      failures[job] = std::current_exception();
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(work, j);
    for (auto& t : threads) t.join();
  }
  for (const auto& e : failures)
    if (e) std::rethrow_exception(e);

  std::vector<SearchHit> hits;
  for (auto& p : partial) hits.insert(hits.end(), p.begin(), p.end());
  std::sort(hits.begin(), hits.end(), [](const SearchHit& a, const SearchHit& b) { return a.family < b.family; });
  hits.erase(std::unique(hits.begin(), hits.end(),
                         [](const SearchHit& a, const SearchHit& b) { return a.family == b.family; }),
             hits.end());
  return hits;
}

}  // namespace fanorr
