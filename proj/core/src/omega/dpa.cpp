#include "regsynth/omega/dpa.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace rs {

int LazyDpa::intern(const Key& k) const {
  auto it = ids_.find(k);
  if (it != ids_.end()) return it->second;
  int id = static_cast<int>(keys_.size());
  keys_.push_back(k);
  ids_.emplace(k, id);
  return id;
}

void LazyDpa::set_initial(const Key& k) {
  std::lock_guard<std::mutex> lock(mu_);
  if (!keys_.empty()) throw std::logic_error("LazyDpa: initial state set twice");
  intern(k);
}

DpaEdge LazyDpa::step(int state, const Constraint& letter) const {
  std::lock_guard<std::mutex> lock(mu_);
  EdgeKey ek{state, letter};
  auto it = edges_.find(ek);
  if (it != edges_.end()) return it->second;
  if (state < 0 || state >= static_cast<int>(keys_.size())) throw std::out_of_range("LazyDpa: unknown state");
  auto [next, priority] = compute(keys_[static_cast<std::size_t>(state)], letter);
  DpaEdge e{intern(next), priority};
  edges_.emplace(ek, e);
  return e;
}

std::size_t LazyDpa::num_states() const {
  std::lock_guard<std::mutex> lock(mu_);
  return keys_.size();
}

LazyDpa::Key LazyDpa::key(int state) const {
  std::lock_guard<std::mutex> lock(mu_);
  return keys_.at(static_cast<std::size_t>(state));
}

FunctionDpa::FunctionDpa(int num_registers, int num_states, int initial, int min_priority, int max_priority, Fn fn)
    : Dpa(num_registers), states_(num_states), initial_(initial), min_(min_priority), max_(max_priority),
      fn_(std::move(fn)) {}

ComplementDpa::ComplementDpa(DpaPtr inner) : Dpa(inner->num_registers()), inner_(std::move(inner)) {}

DpaEdge ComplementDpa::step(int state, const Constraint& letter) const {
  DpaEdge e = inner_->step(state, letter);
  ++e.priority;
  return e;
}

DpaPtr complement_dpa(DpaPtr a) { return std::make_shared<ComplementDpa>(std::move(a)); }

bool dpa_lasso_member(const Dpa& a, const LassoWord& w) {
  if (w.loop.empty()) throw std::invalid_argument("dpa_lasso_member: empty loop");
  int q = a.initial();
  for (const auto& c : w.prefix) q = a.step(q, c).target;
  // (state at loop start) determines the rest; iterate whole loops until a repeat.
  std::map<int, std::size_t> seen;
  std::vector<int> loop_max;
  while (seen.find(q) == seen.end()) {
    seen.emplace(q, loop_max.size());
    int best = INT32_MIN;
    for (const auto& c : w.loop) {
      DpaEdge e = a.step(q, c);
      best = std::max(best, e.priority);
      q = e.target;
    }
    loop_max.push_back(best);
  }
  int best = INT32_MIN;
  for (std::size_t i = seen[q]; i < loop_max.size(); ++i) best = std::max(best, loop_max[i]);
  return best % 2 == 0;
}

std::string dump_hoa(const Dpa& a, std::size_t max_states) {
  const int n = a.num_registers();
  if (n > 2) throw std::invalid_argument("dump_hoa: explicit alphabet only for at most two registers");
  std::vector<Constraint> letters;
  for (const auto& o : all_orders(2 * n)) letters.emplace_back(n, o);
  std::ostringstream out;
  out << "HOA: v1\n";
  out << "Start: " << a.initial() << "\n";
  out << "Acceptance: max-even, priorities " << a.min_priority() << ".." << a.max_priority() << "\n";
  out << "Alphabet: " << letters.size() << " constraints over " << n << " registers\n";
  RegisterSet regs;
  for (int i = 0; i < n; ++i) regs.add("r" + std::to_string(i + 1));
  for (std::size_t i = 0; i < letters.size(); ++i) out << "AP " << i << " " << format_constraint(letters[i], regs) << "\n";
  out << "--BODY--\n";
  std::queue<int> work;
  std::vector<bool> done;
  auto mark = [&](int q) {
    if (static_cast<std::size_t>(q) >= done.size()) done.resize(static_cast<std::size_t>(q) + 1, false);
    if (done[static_cast<std::size_t>(q)]) return;
    done[static_cast<std::size_t>(q)] = true;
    work.push(q);
  };
  mark(a.initial());
  std::size_t emitted = 0;
  while (!work.empty() && emitted < max_states) {
    int q = work.front();
    work.pop();
    ++emitted;
    out << "State: " << q << " \"" << a.state_label(q) << "\"\n";
    for (std::size_t i = 0; i < letters.size(); ++i) {
      DpaEdge e = a.step(q, letters[i]);
      out << "  [" << i << "] " << e.target << " {" << e.priority << "}\n";
      mark(e.target);
    }
  }
  if (!work.empty()) out << "# truncated after " << max_states << " states\n";
  out << "--END--\n";
  return out.str();
}

}  // namespace rs
