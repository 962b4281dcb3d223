#pragma once

#include "regsynth/omega/dpa.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace rs {

// Index appearance record for the disjunction of two max-parity conditions. Each
// condition with priorities in [lo, hi] becomes the Rabin pairs (p > k finitely often,
// p = k infinitely often) for even k in range; the record is a permutation of all pairs.
// The emitted stream satisfies max-parity iff at least one input stream does.
class IarCombiner {
 public:
  IarCombiner(int min_a, int max_a, int min_b, int max_b);

  int initial() const { return 0; }
  // Successor record and emitted priority after one step with priorities (pa, pb).
  std::pair<int, int> step(int record, int pa, int pb) const;
  int min_priority() const { return 1; }
  int max_priority() const { return 2 * static_cast<int>(pairs_.size()) + 1; }
  std::size_t num_records() const;
  std::string record_label(int record) const;

 private:
  struct RabinPair {
    int component;
    int k;
  };
  int intern(const std::vector<std::int8_t>& perm) const;

  std::vector<RabinPair> pairs_;
  mutable std::mutex mu_;
  mutable std::vector<std::vector<std::int8_t>> records_;
  mutable std::map<std::vector<std::int8_t>, int> ids_;
  mutable std::map<std::tuple<int, int, int>, std::pair<int, int>> cache_;
};

// Accepts L(a) union L(b).
class DisjunctionDpa : public LazyDpa {
 public:
  DisjunctionDpa(DpaPtr a, DpaPtr b);
  int min_priority() const override { return iar_.min_priority(); }
  int max_priority() const override { return iar_.max_priority(); }
  std::string state_label(int state) const override;

 protected:
  std::pair<Key, int> compute(const Key& from, const Constraint& letter) const override;

 private:
  DpaPtr a_, b_;
  IarCombiner iar_;
};

DpaPtr disjunction_to_parity(DpaPtr a, DpaPtr b);
// Conjunction through complements: not(not a or not b).
DpaPtr product_dpa(DpaPtr a, DpaPtr b);

}  // namespace rs
