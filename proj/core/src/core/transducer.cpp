#include "regsynth/core/transducer.hpp"

#include "regsynth/core/spec.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace rs {

void RegisterTransducer::validate() const {
  if (initial < 0 || initial >= num_states()) throw std::invalid_argument("transducer initial state out of range");
  if (labels.empty()) throw std::invalid_argument("transducer has no labels");
  if (state_names.size() != step.size()) throw std::invalid_argument("transducer state names mismatch");
  const auto nt = num_tests(registers.size());
  for (const auto& row : step) {
    if (row.size() != nt) throw std::invalid_argument("transducer step is not total over tests");
    for (const auto& mv : row) {
      if (mv.target < 0 || mv.target >= num_states()) throw std::invalid_argument("transducer target out of range");
      if (mv.label < 0 || mv.label >= static_cast<int>(labels.size()))
        throw std::invalid_argument("transducer label out of range");
    }
  }
}

TransducerRun::TransducerRun(const RegisterTransducer& t)
    : t_(&t), state_(t.initial), valuation_(zero_valuation(t.registers.size())) {}

TransducerRun::Output TransducerRun::feed(const Value& datum) {
  Test test = test_of(valuation_, datum);
  const auto& mv = t_->step[static_cast<std::size_t>(state_)][test.code()];
  valuation_ = update_valuation(valuation_, datum, mv.asgn);
  state_ = mv.target;
  return {test, mv.asgn, mv.label, state_};
}

std::string dump_transducer(const RegisterTransducer& t) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["format"] = "regsynth-transducer/1";
  j["registers"] = t.registers.names();
  j["labels"] = t.labels;
  j["initial"] = t.initial;
  ordered_json states = ordered_json::array();
  for (int q = 0; q < t.num_states(); ++q) {
    ordered_json js;
    js["id"] = q;
    js["name"] = t.state_names[static_cast<std::size_t>(q)];
    ordered_json moves = ordered_json::array();
    const auto& row = t.step[static_cast<std::size_t>(q)];
    for (std::uint32_t c = 0; c < row.size(); ++c) {
      ordered_json m;
      m["test"] = format_test(Test::decode(c, t.registers.size()), t.registers);
      m["asgn"] = format_assignment(row[c].asgn, t.registers);
      m["label"] = t.labels[static_cast<std::size_t>(row[c].label)];
      m["target"] = row[c].target;
      m["live"] = row[c].live;
      moves.push_back(m);
    }
    js["moves"] = moves;
    states.push_back(js);
  }
  j["states"] = states;
  return j.dump(2) + "\n";
}

RegisterTransducer load_transducer(const std::string& text) {
  using nlohmann::json;
  RegisterTransducer t;
  try {
    json j = json::parse(text);
    if (j.at("format") != "regsynth-transducer/1") throw std::invalid_argument("unknown transducer format");
    t.registers = RegisterSet(j.at("registers").get<std::vector<std::string>>());
    t.labels = j.at("labels").get<std::vector<std::string>>();
    t.initial = j.at("initial").get<int>();
    const auto nt = num_tests(t.registers.size());
    for (const auto& js : j.at("states")) {
      t.state_names.push_back(js.at("name").get<std::string>());
      std::vector<TransducerMove> row;
      for (const auto& m : js.at("moves")) {
        TransducerMove mv;
        std::string asgn = m.at("asgn").get<std::string>();
        if (asgn.size() < 2 || asgn.front() != '{' || asgn.back() != '}')
          throw std::invalid_argument("malformed assignment '" + asgn + "'");
        std::string body = asgn.substr(1, asgn.size() - 2);
        std::stringstream ss(body);
        std::string name;
        while (std::getline(ss, name, ',')) {
          auto idx = t.registers.find(name);
          if (!idx) throw std::invalid_argument("unknown register '" + name + "'");
          mv.asgn.insert(*idx);
        }
        std::string lbl = m.at("label").get<std::string>();
        mv.label = -1;
        for (std::size_t l = 0; l < t.labels.size(); ++l)
          if (t.labels[l] == lbl) mv.label = static_cast<int>(l);
        if (mv.label < 0) throw std::invalid_argument("unknown label '" + lbl + "'");
        mv.target = m.at("target").get<int>();
        mv.live = m.value("live", true);
        row.push_back(mv);
      }
      if (row.size() != nt) throw std::invalid_argument("state is not total over tests");
      t.step.push_back(std::move(row));
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed transducer: ") + e.what());
  }
  t.validate();
  return t;
}

std::string export_dot(const RegisterTransducer& t) {
  std::ostringstream out;
  out << "digraph transducer {\n  rankdir=LR;\n";
  for (int q = 0; q < t.num_states(); ++q)
    out << "  t" << q << " [label=\"" << dot_escape(t.state_names[static_cast<std::size_t>(q)])
        << "\", shape=circle, color=green" << (q == t.initial ? ", peripheries=2" : "") << "];\n";
  for (int q = 0; q < t.num_states(); ++q) {
    const auto& row = t.step[static_cast<std::size_t>(q)];
    for (std::uint32_t c = 0; c < row.size(); ++c) {
      std::string lbl = format_test(Test::decode(c, t.registers.size()), t.registers);
      if (!row[c].asgn.empty()) lbl += " / " + format_assignment(row[c].asgn, t.registers);
      lbl += " : " + t.labels[static_cast<std::size_t>(row[c].label)];
      out << "  t" << q << " -> t" << row[c].target << " [label=\"" << dot_escape(lbl) << "\""
          << (row[c].live ? "" : ", style=dotted") << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace rs
