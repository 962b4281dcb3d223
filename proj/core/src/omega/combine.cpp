#include "regsynth/omega/combine.hpp"

#include <sstream>
#include <stdexcept>

namespace rs {

IarCombiner::IarCombiner(int min_a, int max_a, int min_b, int max_b) {
  auto add = [&](int comp, int lo, int hi) {
    for (int k = lo + (lo % 2 != 0 ? 1 : 0); k <= hi; k += 2) pairs_.push_back({comp, k});
  };
  add(0, min_a, max_a);
  add(1, min_b, max_b);
  std::vector<std::int8_t> perm;
  for (std::size_t i = 0; i < pairs_.size(); ++i) perm.push_back(static_cast<std::int8_t>(i));
  intern(perm);
}

int IarCombiner::intern(const std::vector<std::int8_t>& perm) const {
  auto it = ids_.find(perm);
  if (it != ids_.end()) return it->second;
  int id = static_cast<int>(records_.size());
  records_.push_back(perm);
  ids_.emplace(perm, id);
  return id;
}

std::pair<int, int> IarCombiner::step(int record, int pa, int pb) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto key = std::make_tuple(record, pa, pb);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  const auto perm = records_.at(static_cast<std::size_t>(record));
  int e = 0, f = 0;
  std::vector<std::int8_t> moved, stay;
  for (std::size_t pos = 0; pos < perm.size(); ++pos) {
    const auto& pr = pairs_[static_cast<std::size_t>(perm[pos])];
    int p = pr.component == 0 ? pa : pb;
    bool hit_e = p > pr.k;
    bool hit_f = p == pr.k;
    if (hit_e) e = static_cast<int>(pos) + 1;
    if (hit_f) f = static_cast<int>(pos) + 1;
    (hit_e ? moved : stay).push_back(perm[pos]);
  }
  int priority = f > e ? 2 * f : (e > 0 ? 2 * e + 1 : 1);
  moved.insert(moved.end(), stay.begin(), stay.end());
  auto out = std::make_pair(intern(moved), priority);
  cache_.emplace(key, out);
  return out;
}

std::size_t IarCombiner::num_records() const {
  std::lock_guard<std::mutex> lock(mu_);
  return records_.size();
}

std::string IarCombiner::record_label(int record) const {
  std::lock_guard<std::mutex> lock(mu_);
  std::ostringstream out;
  out << "[";
  for (auto i : records_.at(static_cast<std::size_t>(record))) {
    const auto& pr = pairs_[static_cast<std::size_t>(i)];
    out << " " << (pr.component == 0 ? 'a' : 'b') << pr.k;
  }
  out << " ]";
  return out.str();
}

DisjunctionDpa::DisjunctionDpa(DpaPtr a, DpaPtr b)
    : LazyDpa(a->num_registers()), a_(std::move(a)), b_(std::move(b)),
      iar_(a_->min_priority(), a_->max_priority(), b_->min_priority(), b_->max_priority()) {
  if (a_->num_registers() != b_->num_registers()) throw std::invalid_argument("disjunction: register count mismatch");
  set_initial({a_->initial(), b_->initial(), iar_.initial()});
}

std::pair<LazyDpa::Key, int> DisjunctionDpa::compute(const Key& from, const Constraint& letter) const {
  DpaEdge ea = a_->step(static_cast<int>(from[0]), letter);
  DpaEdge eb = b_->step(static_cast<int>(from[1]), letter);
  auto [rec, priority] = iar_.step(static_cast<int>(from[2]), ea.priority, eb.priority);
  return {Key{ea.target, eb.target, rec}, priority};
}

std::string DisjunctionDpa::state_label(int state) const {
  Key k = key(state);
  return "(" + a_->state_label(static_cast<int>(k[0])) + ", " + b_->state_label(static_cast<int>(k[1])) + ", " +
         iar_.record_label(static_cast<int>(k[2])) + ")";
}

DpaPtr disjunction_to_parity(DpaPtr a, DpaPtr b) { return std::make_shared<DisjunctionDpa>(std::move(a), std::move(b)); }

DpaPtr product_dpa(DpaPtr a, DpaPtr b) {
  return complement_dpa(disjunction_to_parity(complement_dpa(std::move(a)), complement_dpa(std::move(b))));
}

}  // namespace rs
