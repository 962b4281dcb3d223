#include "regsynth/core/spec.hpp"

#include <json.hpp>

#include <map>
#include <sstream>

namespace rs {

int OneSidedSpec::find_state(const std::string& name) const {
  for (int i = 0; i < num_states(); ++i)
    if (states[static_cast<std::size_t>(i)].name == name) return i;
  return -1;
}

int OneSidedSpec::find_label(const std::string& name) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == name) return static_cast<int>(i);
  return -1;
}

int OneSidedSpec::max_priority() const {
  int m = 0;
  for (const auto& s : states) m = std::max(m, s.priority);
  return m;
}

namespace {

void validate_adam_rows(const std::vector<SpecState>& states, int initial, int nregs,
                        const std::vector<std::vector<AdamMove>>& adam_delta) {
  const int n = static_cast<int>(states.size());
  if (initial < 0 || initial >= n) throw SpecError("initial state out of range");
  if (states[static_cast<std::size_t>(initial)].owner != Player::Adam)
    throw SpecError("the initial state must belong to Adam");
  if (static_cast<int>(adam_delta.size()) != n) throw SpecError("Adam transition table has wrong size");
  const auto ntests = num_tests(nregs);
  for (int q = 0; q < n; ++q) {
    const auto& row = adam_delta[static_cast<std::size_t>(q)];
    if (states[static_cast<std::size_t>(q)].owner != Player::Adam) {
      if (!row.empty()) throw SpecError("Eve state '" + states[static_cast<std::size_t>(q)].name + "' has Adam moves");
      continue;
    }
    if (row.size() != ntests)
      throw SpecError("Adam state '" + states[static_cast<std::size_t>(q)].name + "' is not total over tests");
    for (const auto& mv : row) {
      if (mv.target < 0 || mv.target >= n || states[static_cast<std::size_t>(mv.target)].owner != Player::Eve)
        throw SpecError("Adam state '" + states[static_cast<std::size_t>(q)].name + "' has an invalid target");
      if (nregs < 32 && (mv.asgn.mask >> nregs) != 0) throw SpecError("assignment names an unknown register");
    }
  }
}

}  // namespace

void OneSidedSpec::validate() const {
  validate_adam_rows(states, initial, registers.size(), adam_delta);
  const int n = num_states();
  if (static_cast<int>(eve_delta.size()) != n) throw SpecError("Eve transition table has wrong size");
  for (int q = 0; q < n; ++q) {
    const auto& row = eve_delta[static_cast<std::size_t>(q)];
    const auto& st = states[static_cast<std::size_t>(q)];
    if (st.owner == Player::Adam) {
      if (!row.empty()) throw SpecError("Adam state '" + st.name + "' has label moves");
      continue;
    }
    if (labels.empty()) throw SpecError("Eve state '" + st.name + "' needs at least one label");
    if (row.size() != labels.size()) throw SpecError("Eve state '" + st.name + "' is not total over labels");
    for (std::size_t l = 0; l < row.size(); ++l) {
      int t = row[l];
      if (t < 0) throw SpecError("incomplete Eve state '" + st.name + "': no edge for label '" + labels[l] + "'");
      if (t >= n || states[static_cast<std::size_t>(t)].owner != Player::Adam)
        throw SpecError("Eve state '" + st.name + "' has an invalid target");
    }
  }
}

void IdoSpec::validate() const {
  validate_adam_rows(states, initial, registers.size(), adam_delta);
  const int n = num_states();
  if (registers.size() == 0) throw SpecError("ido specifications need at least one register");
  if (static_cast<int>(output_delta.size()) != n) throw SpecError("output table has wrong size");
  for (int q = 0; q < n; ++q) {
    const auto& row = output_delta[static_cast<std::size_t>(q)];
    const auto& st = states[static_cast<std::size_t>(q)];
    if (st.owner == Player::Adam) {
      if (!row.empty()) throw SpecError("Adam state '" + st.name + "' has output moves");
      continue;
    }
    if (static_cast<int>(row.size()) != registers.size())
      throw SpecError("Eve state '" + st.name + "' is not total over output registers");
    for (int r = 0; r < registers.size(); ++r) {
      int t = row[static_cast<std::size_t>(r)];
      if (t < 0)
        throw SpecError("incomplete Eve state '" + st.name + "': no output edge for register '" + registers.name(r) +
                        "'");
      if (t >= n || states[static_cast<std::size_t>(t)].owner != Player::Adam)
        throw SpecError("Eve state '" + st.name + "' has an invalid target");
    }
  }
}

namespace {

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i];
  }
  return out;
}

// Guard text for a set of test codes: TOP when it covers everything.
std::string guard_text(const std::vector<std::uint32_t>& codes, const RegisterSet& regs) {
  if (codes.size() == num_tests(regs.size())) return "TOP";
  std::vector<std::string> parts;
  for (auto c : codes) parts.push_back("(" + format_test(Test::decode(c, regs.size()), regs) + ")");
  return join(parts, " | ");
}

void print_header_states(std::ostringstream& out, const std::vector<SpecState>& states, int initial) {
  for (std::size_t q = 0; q < states.size(); ++q) {
    const auto& s = states[q];
    out << "state " << s.name << ' ' << (s.owner == Player::Adam ? "adam" : "eve") << " priority " << s.priority;
    if (static_cast<int>(q) == initial) out << " initial";
    out << '\n';
  }
}

void print_adam_edges(std::ostringstream& out, const std::vector<SpecState>& states, const RegisterSet& regs,
                      const std::vector<std::vector<AdamMove>>& delta) {
  for (std::size_t q = 0; q < states.size(); ++q) {
    if (states[q].owner != Player::Adam) continue;
    std::map<std::pair<int, std::uint32_t>, std::vector<std::uint32_t>> groups;
    for (std::uint32_t c = 0; c < delta[q].size(); ++c) {
      const auto& mv = delta[q][c];
      groups[{mv.target, mv.asgn.mask}].push_back(c);
    }
    for (const auto& [key, codes] : groups) {
      out << "on " << states[q].name << " guard \"" << guard_text(codes, regs) << '"';
      Assignment a{key.second};
      if (!a.empty()) out << " asgn " << format_assignment(a, regs);
      out << " -> " << states[static_cast<std::size_t>(key.first)].name << '\n';
    }
  }
}

}  // namespace

std::string pretty_print(const OneSidedSpec& spec) {
  std::ostringstream out;
  out << "kind one-sided\n";
  out << "registers " << join(spec.registers.names(), " ") << '\n';
  out << "labels " << join(spec.labels, " ") << '\n';
  print_header_states(out, spec.states, spec.initial);
  print_adam_edges(out, spec.states, spec.registers, spec.adam_delta);
  for (std::size_t q = 0; q < spec.states.size(); ++q) {
    if (spec.states[q].owner != Player::Eve) continue;
    std::map<int, std::vector<std::string>> by_target;
    for (std::size_t l = 0; l < spec.labels.size(); ++l) by_target[spec.eve_delta[q][l]].push_back(spec.labels[l]);
    for (const auto& [t, ls] : by_target)
      out << "on " << spec.states[q].name << " label " << join(ls, ",") << " -> "
          << spec.states[static_cast<std::size_t>(t)].name << '\n';
  }
  return out.str();
}

std::string pretty_print(const IdoSpec& spec) {
  std::ostringstream out;
  out << "kind ido\n";
  out << "registers " << join(spec.registers.names(), " ") << '\n';
  print_header_states(out, spec.states, spec.initial);
  print_adam_edges(out, spec.states, spec.registers, spec.adam_delta);
  for (std::size_t q = 0; q < spec.states.size(); ++q) {
    if (spec.states[q].owner != Player::Eve) continue;
    std::map<int, std::vector<std::string>> by_target;
    for (int r = 0; r < spec.registers.size(); ++r)
      by_target[spec.output_delta[q][static_cast<std::size_t>(r)]].push_back(spec.registers.name(r));
    for (const auto& [t, rs] : by_target)
      out << "on " << spec.states[q].name << " output " << join(rs, ",") << " -> "
          << spec.states[static_cast<std::size_t>(t)].name << '\n';
  }
  return out.str();
}

std::string dump_spec(const OneSidedSpec& spec) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["format"] = "regsynth-spec/1";
  j["registers"] = spec.registers.names();
  j["labels"] = spec.labels;
  j["initial"] = spec.states[static_cast<std::size_t>(spec.initial)].name;
  ordered_json states = ordered_json::array();
  for (std::size_t q = 0; q < spec.states.size(); ++q) {
    const auto& s = spec.states[q];
    ordered_json js;
    js["name"] = s.name;
    js["owner"] = s.owner == Player::Adam ? "adam" : "eve";
    js["priority"] = s.priority;
    if (s.owner == Player::Adam) {
      ordered_json moves = ordered_json::array();
      for (std::uint32_t c = 0; c < spec.adam_delta[q].size(); ++c) {
        const auto& mv = spec.adam_delta[q][c];
        ordered_json m;
        m["test"] = format_test(Test::decode(c, spec.registers.size()), spec.registers);
        m["asgn"] = format_assignment(mv.asgn, spec.registers);
        m["target"] = spec.states[static_cast<std::size_t>(mv.target)].name;
        moves.push_back(m);
      }
      js["moves"] = moves;
    } else {
      ordered_json moves = ordered_json::array();
      for (std::size_t l = 0; l < spec.labels.size(); ++l) {
        ordered_json m;
        m["label"] = spec.labels[l];
        m["target"] = spec.states[static_cast<std::size_t>(spec.eve_delta[q][l])].name;
        moves.push_back(m);
      }
      js["moves"] = moves;
    }
    states.push_back(js);
  }
  j["states"] = states;
  return j.dump(2) + "\n";
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string export_dot(const OneSidedSpec& spec) {
  std::ostringstream out;
  out << "digraph spec {\n  rankdir=LR;\n";
  for (std::size_t q = 0; q < spec.states.size(); ++q) {
    const auto& s = spec.states[q];
    const bool adam = s.owner == Player::Adam;
    out << "  q" << q << " [label=\"" << dot_escape(s.name) << "\\np=" << s.priority << "\", shape="
        << (adam ? "square" : "circle") << ", color=" << (adam ? "red" : "green") << ", class=\""
        << (adam ? "adam" : "eve") << "\"" << (static_cast<int>(q) == spec.initial ? ", peripheries=2" : "")
        << "];\n";
  }
  for (std::size_t q = 0; q < spec.states.size(); ++q) {
    if (spec.states[q].owner == Player::Adam) {
      std::map<std::pair<int, std::uint32_t>, std::vector<std::uint32_t>> groups;
      for (std::uint32_t c = 0; c < spec.adam_delta[q].size(); ++c)
        groups[{spec.adam_delta[q][c].target, spec.adam_delta[q][c].asgn.mask}].push_back(c);
      for (const auto& [key, codes] : groups) {
        std::string lbl = guard_text(codes, spec.registers);
        Assignment a{key.second};
        if (!a.empty()) lbl += " / " + format_assignment(a, spec.registers);
        out << "  q" << q << " -> q" << key.first << " [label=\"" << dot_escape(lbl) << "\"];\n";
      }
    } else {
      std::map<int, std::vector<std::string>> by_target;
      for (std::size_t l = 0; l < spec.labels.size(); ++l) by_target[spec.eve_delta[q][l]].push_back(spec.labels[l]);
      for (const auto& [t, ls] : by_target)
        out << "  q" << q << " -> q" << t << " [label=\"" << dot_escape(join(ls, ",")) << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace rs
