#pragma once

#include "regsynth/omega/nba.hpp"

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace rs {

struct DpaEdge {
  int target = 0;
  int priority = 0;
};

// Deterministic, total parity automaton over constraint letters with transition
// priorities; a run is accepting when the largest priority seen infinitely often is even.
// States are discovered on demand, so num_states() counts the states explored so far.
class Dpa {
 public:
  explicit Dpa(int num_registers) : num_registers_(num_registers) {}
  virtual ~Dpa() = default;

  int num_registers() const { return num_registers_; }
  virtual int initial() const = 0;
  virtual DpaEdge step(int state, const Constraint& letter) const = 0;
  virtual int min_priority() const = 0;
  virtual int max_priority() const = 0;
  virtual std::size_t num_states() const = 0;
  virtual std::string state_label(int state) const { return std::to_string(state); }

 private:
  int num_registers_;
};

using DpaPtr = std::shared_ptr<const Dpa>;

// Memoizing base class: subclasses map state keys to successor keys; keys are interned
// into dense ids. The cache is guarded by a mutex so shared reads are safe.
class LazyDpa : public Dpa {
 public:
  using Key = std::vector<std::int64_t>;

  int initial() const override { return 0; }
  DpaEdge step(int state, const Constraint& letter) const override;
  std::size_t num_states() const override;
  Key key(int state) const;

 protected:
  explicit LazyDpa(int num_registers) : Dpa(num_registers) {}
  // Must be called once by the subclass constructor.
  void set_initial(const Key& k);
  virtual std::pair<Key, int> compute(const Key& from, const Constraint& letter) const = 0;

 private:
  struct EdgeKey {
    int state;
    Constraint letter;
    bool operator==(const EdgeKey&) const = default;
  };
  struct EdgeKeyHash {
    std::size_t operator()(const EdgeKey& k) const noexcept {
      return std::hash<Constraint>{}(k.letter) * 31U + static_cast<std::size_t>(k.state);
    }
  };
  int intern(const Key& k) const;

  mutable std::mutex mu_;
  mutable std::deque<Key> keys_;
  mutable std::map<Key, int> ids_;
  mutable std::unordered_map<EdgeKey, DpaEdge, EdgeKeyHash> edges_;
};

// A DPA given by an explicit transition function over a fixed set of states.
class FunctionDpa : public Dpa {
 public:
  using Fn = std::function<DpaEdge(int, const Constraint&)>;
  FunctionDpa(int num_registers, int num_states, int initial, int min_priority, int max_priority, Fn fn);
  int initial() const override { return initial_; }
  DpaEdge step(int state, const Constraint& letter) const override { return fn_(state, letter); }
  int min_priority() const override { return min_; }
  int max_priority() const override { return max_; }
  std::size_t num_states() const override { return static_cast<std::size_t>(states_); }

 private:
  int states_, initial_, min_, max_;
  Fn fn_;
};

// Same states and transitions with every priority raised by one.
class ComplementDpa : public Dpa {
 public:
  explicit ComplementDpa(DpaPtr inner);
  int initial() const override { return inner_->initial(); }
  DpaEdge step(int state, const Constraint& letter) const override;
  int min_priority() const override { return inner_->min_priority() + 1; }
  int max_priority() const override { return inner_->max_priority() + 1; }
  std::size_t num_states() const override { return inner_->num_states(); }
  std::string state_label(int state) const override { return inner_->state_label(state); }

 private:
  DpaPtr inner_;
};

DpaPtr complement_dpa(DpaPtr a);

// Runs the unique path and checks the largest priority on the eventual cycle.
bool dpa_lasso_member(const Dpa& a, const LassoWord& w);

// HOA-like dump with the explicit alphabet of all constraints; only for at most two
// registers. Explores at most max_states states.
std::string dump_hoa(const Dpa& a, std::size_t max_states = 200);

}  // namespace rs
