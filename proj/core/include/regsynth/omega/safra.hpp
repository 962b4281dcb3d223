#pragma once

#include "regsynth/omega/dpa.hpp"

namespace rs {

// Piterman-style compact Safra trees: node names are dense and ordered by age, and the
// priority of a step comes from the smallest marked and smallest removed node name.
class SafraDpa : public LazyDpa {
 public:
  explicit SafraDpa(Nba nba);
  int min_priority() const override { return 1; }
  int max_priority() const override { return 2 * nba_.num_states + 1; }
  std::string state_label(int state) const override;
  const Nba& source() const { return nba_; }

 protected:
  std::pair<Key, int> compute(const Key& from, const Constraint& letter) const override;

 private:
  Nba nba_;
};

DpaPtr determinize(const Nba& a);

}  // namespace rs
