#include "regsynth/core/spec.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>

namespace rs {

SpecError::SpecError(const std::string& msg, int line, int column)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg
                                  : msg),
      line_(line),
      column_(column) {}

namespace {

// ---------------------------------------------------------------- guards

struct GuardNode;
using GuardPtr = std::unique_ptr<GuardNode>;

enum class CmpOp { Lt, Le, Eq, Ne, Gt, Ge };

struct GuardNode {
  enum Kind { Top, Atom, And, Or, Not } kind = Top;
  int reg = -1;          // Atom: relation "* op reg"
  CmpOp op = CmpOp::Eq;  // Atom
  GuardPtr lhs, rhs;

  bool eval(const Test& t) const {
    switch (kind) {
      case Top: return true;
      case And: return lhs->eval(t) && rhs->eval(t);
      case Or: return lhs->eval(t) || rhs->eval(t);
      case Not: return !lhs->eval(t);
      case Atom: {
        Rel r = t.rel[static_cast<std::size_t>(reg)];
        switch (op) {
          case CmpOp::Lt: return r == Rel::Below;
          case CmpOp::Le: return r != Rel::Above;
          case CmpOp::Eq: return r == Rel::Equal;
          case CmpOp::Ne: return r != Rel::Equal;
          case CmpOp::Gt: return r == Rel::Above;
          case CmpOp::Ge: return r != Rel::Below;
        }
      }
    }
    return false;
  }
};

CmpOp flip(CmpOp op) {
  switch (op) {
    case CmpOp::Lt: return CmpOp::Gt;
    case CmpOp::Le: return CmpOp::Ge;
    case CmpOp::Gt: return CmpOp::Lt;
    case CmpOp::Ge: return CmpOp::Le;
    default: return op;
  }
}

struct GuardToken {
  enum Kind { Ident, Star, Op, AndT, OrT, NotT, LParen, RParen, End } kind;
  std::string text;
  int col;
};

class GuardParser {
 public:
  GuardParser(const std::string& src, const RegisterSet& regs, int line, int col0)
      : regs_(regs), line_(line), col0_(col0) {
    tokenize(src);
  }

  GuardPtr parse() {
    auto g = parse_or();
    if (peek().kind != GuardToken::End) fail("unexpected '" + peek().text + "' in guard", peek().col);
    return g;
  }

 private:
  const RegisterSet& regs_;
  int line_, col0_;
  std::vector<GuardToken> toks_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg, int col) const { throw SpecError(msg, line_, col0_ + col); }

  void tokenize(const std::string& s) {
    std::size_t i = 0;
    while (i < s.size()) {
      char c = s[i];
      int col = static_cast<int>(i);
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i;
        while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
        std::string w = s.substr(i, j - i);
        if (w == "and") toks_.push_back({GuardToken::AndT, w, col});
        else if (w == "or") toks_.push_back({GuardToken::OrT, w, col});
        else if (w == "not") toks_.push_back({GuardToken::NotT, w, col});
        else toks_.push_back({GuardToken::Ident, w, col});
        i = j;
      } else if (c == '*') {
        toks_.push_back({GuardToken::Star, "*", col});
        ++i;
      } else if (c == '(') {
        toks_.push_back({GuardToken::LParen, "(", col});
        ++i;
      } else if (c == ')') {
        toks_.push_back({GuardToken::RParen, ")", col});
        ++i;
      } else if (c == '&') {
        i += (i + 1 < s.size() && s[i + 1] == '&') ? 2 : 1;
        toks_.push_back({GuardToken::AndT, "&", col});
      } else if (c == '|') {
        i += (i + 1 < s.size() && s[i + 1] == '|') ? 2 : 1;
        toks_.push_back({GuardToken::OrT, "|", col});
      } else if (c == '!' && !(i + 1 < s.size() && s[i + 1] == '=')) {
        toks_.push_back({GuardToken::NotT, "!", col});
        ++i;
      } else if (c == '<' || c == '>' || c == '=' || c == '!') {
        std::string op(1, c);
        if (i + 1 < s.size() && s[i + 1] == '=') op += '=';
        if (op == "==") op = "=";
        toks_.push_back({GuardToken::Op, op, col});
        i += (op.size() == 2 || (c == '=' && i + 1 < s.size() && s[i + 1] == '=')) ? 2 : 1;
      } else {
        fail(std::string("unexpected character '") + c + "' in guard", col);
      }
    }
    toks_.push_back({GuardToken::End, "<end>", static_cast<int>(s.size())});
  }

  const GuardToken& peek() const { return toks_[pos_]; }
  GuardToken next() { return toks_[pos_++]; }

  GuardPtr parse_or() {
    auto l = parse_and();
    while (peek().kind == GuardToken::OrT) {
      next();
      auto n = std::make_unique<GuardNode>();
      n->kind = GuardNode::Or;
      n->lhs = std::move(l);
      n->rhs = parse_and();
      l = std::move(n);
    }
    return l;
  }

  GuardPtr parse_and() {
    auto l = parse_unary();
    while (peek().kind == GuardToken::AndT) {
      next();
      auto n = std::make_unique<GuardNode>();
      n->kind = GuardNode::And;
      n->lhs = std::move(l);
      n->rhs = parse_unary();
      l = std::move(n);
    }
    return l;
  }

  GuardPtr parse_unary() {
    const auto& t = peek();
    if (t.kind == GuardToken::NotT) {
      next();
      auto n = std::make_unique<GuardNode>();
      n->kind = GuardNode::Not;
      n->lhs = parse_unary();
      return n;
    }
    if (t.kind == GuardToken::LParen) {
      next();
      auto g = parse_or();
      if (peek().kind != GuardToken::RParen) fail("expected ')' in guard", peek().col);
      next();
      return g;
    }
    if (t.kind == GuardToken::Ident && (t.text == "TOP" || t.text == "true")) {
      next();
      return std::make_unique<GuardNode>();
    }
    return parse_chain();
  }

  CmpOp op_of(const GuardToken& t) const {
    if (t.text == "<") return CmpOp::Lt;
    if (t.text == "<=") return CmpOp::Le;
    if (t.text == "=") return CmpOp::Eq;
    if (t.text == "!=") return CmpOp::Ne;
    if (t.text == ">") return CmpOp::Gt;
    if (t.text == ">=") return CmpOp::Ge;
    fail("unknown operator '" + t.text + "'", t.col);
  }

  // operand (op operand)+ ; every adjacent pair must involve '*'.
  GuardPtr parse_chain() {
    struct Operand {
      bool star;
      int reg;
      int col;
    };
    auto operand = [&]() -> Operand {
      auto t = next();
      if (t.kind == GuardToken::Star) return {true, -1, t.col};
      if (t.kind == GuardToken::Ident) {
        if (t.text == "ELSE") fail("ELSE must be the whole guard", t.col);
        auto idx = regs_.find(t.text);
        if (!idx) fail("unknown register '" + t.text + "'", t.col);
        return {false, *idx, t.col};
      }
      fail("expected '*' or a register, found '" + t.text + "'", t.col);
    };
    std::vector<Operand> ops{operand()};
    std::vector<CmpOp> rels;
    while (peek().kind == GuardToken::Op) {
      rels.push_back(op_of(next()));
      ops.push_back(operand());
    }
    if (rels.empty()) fail("incomplete comparison in guard", ops.front().col);
    GuardPtr acc;
    for (std::size_t k = 0; k < rels.size(); ++k) {
      const auto& a = ops[k];
      const auto& b = ops[k + 1];
      if (a.star == b.star) fail("each comparison must relate '*' to a register", b.col);
      auto atom = std::make_unique<GuardNode>();
      atom->kind = GuardNode::Atom;
      if (a.star) {
        atom->reg = b.reg;
        atom->op = rels[k];
      } else {
        atom->reg = a.reg;
        atom->op = flip(rels[k]);
      }
      if (!acc) {
        acc = std::move(atom);
      } else {
        auto n = std::make_unique<GuardNode>();
        n->kind = GuardNode::And;
        n->lhs = std::move(acc);
        n->rhs = std::move(atom);
        acc = std::move(n);
      }
    }
    return acc;
  }
};

std::vector<std::uint32_t> expand(const GuardNode& g, int nregs) {
  std::vector<std::uint32_t> out;
  const auto n = num_tests(nregs);
  for (std::uint32_t c = 0; c < n; ++c)
    if (g.eval(Test::decode(c, nregs))) out.push_back(c);
  return out;
}

// ---------------------------------------------------------------- lines

struct Tok {
  std::string text;
  int col;
  bool quoted = false;
};

std::vector<Tok> split_line(const std::string& line, int lineno) {
  std::vector<Tok> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '#') break;
    int col = static_cast<int>(i) + 1;
    if (c == '"') {
      std::size_t j = line.find('"', i + 1);
      if (j == std::string::npos) throw SpecError("unterminated string", lineno, col);
      out.push_back({line.substr(i + 1, j - i - 1), col + 1, true});
      i = j + 1;
      continue;
    }
    if (c == '{') {
      std::size_t j = line.find('}', i + 1);
      if (j == std::string::npos) throw SpecError("unterminated '{'", lineno, col);
      out.push_back({line.substr(i, j - i + 1), col});
      i = j + 1;
      continue;
    }
    if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      out.push_back({"->", col});
      i += 2;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != '#' &&
           line[j] != '"' && line[j] != '{' && !(line[j] == '-' && j + 1 < line.size() && line[j + 1] == '>'))
      ++j;
    out.push_back({line.substr(i, j - i), col});
    i = j;
  }
  return out;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

struct StateDecl {
  SpecState st;
  bool initial = false;
  int line = 0;
};

struct GuardEdge {
  std::string src, dst;
  std::string guard;  // empty when ELSE
  bool is_else = false;
  std::vector<std::string> asgn;
  int line = 0, col = 0, guard_col = 0, asgn_col = 0, dst_col = 0;
};

struct LabelEdge {
  std::string src, dst;
  std::vector<std::string> items;  // labels or output registers
  bool output = false;
  int line = 0, col = 0, dst_col = 0;
};

struct Document {
  bool ido = false;
  std::vector<std::string> registers;
  int registers_line = 0;
  std::vector<std::string> labels;
  std::vector<StateDecl> states;
  std::vector<GuardEdge> guards;
  std::vector<LabelEdge> label_edges;
};

bool valid_ident(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.')) return false;
  return true;
}

Document read_document(const std::string& text) {
  Document doc;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = split_line(line, lineno);
    if (toks.empty()) continue;
    const std::string& kw = toks[0].text;
    auto need = [&](std::size_t k, const std::string& what) -> const Tok& {
      if (k >= toks.size()) throw SpecError("expected " + what, lineno, static_cast<int>(line.size()) + 1);
      return toks[k];
    };
    if (kw == "kind") {
      const auto& t = need(1, "'one-sided' or 'ido'");
      if (t.text == "ido") doc.ido = true;
      else if (t.text != "one-sided") throw SpecError("unknown kind '" + t.text + "'", lineno, t.col);
    } else if (kw == "registers") {
      for (std::size_t k = 1; k < toks.size(); ++k)
        for (auto& r : split_list(toks[k].text)) {
          if (!valid_ident(r)) throw SpecError("invalid register name '" + r + "'", lineno, toks[k].col);
          if (r == kDataRegister || r == kZeroRegister)
            throw SpecError("register name '" + r + "' is reserved", lineno, toks[k].col);
          doc.registers.push_back(r);
        }
      doc.registers_line = lineno;
    } else if (kw == "labels") {
      for (std::size_t k = 1; k < toks.size(); ++k)
        for (auto& l : split_list(toks[k].text)) {
          if (!valid_ident(l)) throw SpecError("invalid label '" + l + "'", lineno, toks[k].col);
          doc.labels.push_back(l);
        }
    } else if (kw == "state") {
      StateDecl d;
      d.line = lineno;
      const auto& nm = need(1, "state name");
      if (!valid_ident(nm.text)) throw SpecError("invalid state name '" + nm.text + "'", lineno, nm.col);
      d.st.name = nm.text;
      const auto& who = need(2, "'adam' or 'eve'");
      if (who.text == "adam") d.st.owner = Player::Adam;
      else if (who.text == "eve") d.st.owner = Player::Eve;
      else throw SpecError("expected 'adam' or 'eve', found '" + who.text + "'", lineno, who.col);
      const auto& pk = need(3, "'priority'");
      if (pk.text != "priority") throw SpecError("expected 'priority'", lineno, pk.col);
      const auto& pv = need(4, "priority value");
      try {
        std::size_t used = 0;
        d.st.priority = std::stoi(pv.text, &used);
        if (used != pv.text.size() || d.st.priority < 0) throw std::invalid_argument("");
      } catch (...) {
        throw SpecError("priority must be a nonnegative integer", lineno, pv.col);
      }
      for (std::size_t k = 5; k < toks.size(); ++k) {
        if (toks[k].text == "initial") d.initial = true;
        else throw SpecError("unexpected '" + toks[k].text + "'", lineno, toks[k].col);
      }
      doc.states.push_back(d);
    } else if (kw == "on") {
      const auto& src = need(1, "source state");
      const auto& what = need(2, "'guard', 'label' or 'output'");
      if (what.text == "guard") {
        GuardEdge e;
        e.src = src.text;
        e.line = lineno;
        e.col = src.col;
        const auto& g = need(3, "quoted guard");
        if (!g.quoted) throw SpecError("guard must be quoted", lineno, g.col);
        e.guard_col = g.col;
        std::string gt = g.text;
        std::size_t s = gt.find_first_not_of(" \t");
        std::size_t t = gt.find_last_not_of(" \t");
        gt = s == std::string::npos ? "" : gt.substr(s, t - s + 1);
        if (gt == "ELSE" || gt == "else") e.is_else = true;
        else e.guard = g.text;
        std::size_t k = 4;
        if (k < toks.size() && toks[k].text == "asgn") {
          const auto& a = need(k + 1, "assignment set");
          if (a.text.size() < 2 || a.text.front() != '{')
            throw SpecError("assignment must be written {r1,r2}", lineno, a.col);
          e.asgn = split_list(a.text.substr(1, a.text.size() - 2));
          e.asgn_col = a.col;
          k += 2;
        }
        const auto& arrow = need(k, "'->'");
        if (arrow.text != "->") throw SpecError("expected '->'", lineno, arrow.col);
        const auto& dst = need(k + 1, "target state");
        e.dst = dst.text;
        e.dst_col = dst.col;
        if (k + 2 < toks.size()) throw SpecError("trailing input", lineno, toks[k + 2].col);
        doc.guards.push_back(e);
      } else if (what.text == "label" || what.text == "output") {
        LabelEdge e;
        e.src = src.text;
        e.line = lineno;
        e.col = src.col;
        e.output = what.text == "output";
        std::size_t k = 3;
        while (k < toks.size() && toks[k].text != "->") {
          for (auto& l : split_list(toks[k].text)) e.items.push_back(l);
          ++k;
        }
        if (e.items.empty()) throw SpecError("expected at least one " + what.text, lineno, what.col);
        const auto& arrow = need(k, "'->'");
        (void)arrow;
        const auto& dst = need(k + 1, "target state");
        e.dst = dst.text;
        e.dst_col = dst.col;
        if (k + 2 < toks.size()) throw SpecError("trailing input", lineno, toks[k + 2].col);
        doc.label_edges.push_back(e);
      } else {
        throw SpecError("expected 'guard', 'label' or 'output', found '" + what.text + "'", lineno, what.col);
      }
    } else {
      throw SpecError("unknown keyword '" + kw + "'", lineno, toks[0].col);
    }
  }
  return doc;
}

struct Common {
  RegisterSet regs;
  std::vector<SpecState> states;
  std::map<std::string, int> state_index;
  int initial = -1;
  std::vector<std::vector<AdamMove>> adam_delta;
};

Common build_common(const Document& doc) {
  Common c;
  try {
    c.regs = RegisterSet(doc.registers);
  } catch (const std::invalid_argument& e) {
    throw SpecError(e.what(), doc.registers_line, 1);
  }
  for (const auto& d : doc.states) {
    if (c.state_index.count(d.st.name)) throw SpecError("duplicate state '" + d.st.name + "'", d.line, 1);
    c.state_index[d.st.name] = static_cast<int>(c.states.size());
    c.states.push_back(d.st);
    if (d.initial) {
      if (c.initial >= 0) throw SpecError("more than one initial state", d.line, 1);
      if (d.st.owner != Player::Adam) throw SpecError("the initial state must belong to Adam", d.line, 1);
      c.initial = c.state_index[d.st.name];
    }
  }
  if (c.states.empty()) throw SpecError("no states declared");
  if (c.initial < 0) throw SpecError("no initial state declared");

  const auto ntests = num_tests(c.regs.size());
  c.adam_delta.assign(c.states.size(), {});
  std::vector<std::vector<int>> owner_line(c.states.size());
  std::map<int, const GuardEdge*> else_edge;
  for (std::size_t q = 0; q < c.states.size(); ++q)
    if (c.states[q].owner == Player::Adam) {
      c.adam_delta[q].assign(ntests, AdamMove{});
      owner_line[q].assign(ntests, 0);
    }

  auto lookup = [&](const std::string& name, int line, int col) {
    auto it = c.state_index.find(name);
    if (it == c.state_index.end()) throw SpecError("unknown state '" + name + "'", line, col);
    return it->second;
  };

  for (const auto& e : doc.guards) {
    int q = lookup(e.src, e.line, e.col);
    int t = lookup(e.dst, e.line, e.dst_col);
    if (c.states[static_cast<std::size_t>(q)].owner != Player::Adam)
      throw SpecError("Eve state '" + e.src + "' cannot carry guards or assignments", e.line, e.col);
    if (c.states[static_cast<std::size_t>(t)].owner != Player::Eve)
      throw SpecError("Adam transitions must lead to an Eve state", e.line, e.dst_col);
    Assignment a;
    for (const auto& r : e.asgn) {
      auto idx = c.regs.find(r);
      if (!idx) throw SpecError("unknown register '" + r + "' in assignment", e.line, e.asgn_col);
      a.insert(*idx);
    }
    if (e.is_else) {
      if (else_edge.count(q)) throw SpecError("state '" + e.src + "' has two ELSE guards", e.line, e.guard_col);
      else_edge[q] = &e;
      continue;
    }
    GuardParser parser(e.guard, c.regs, e.line, e.guard_col);
    auto g = parser.parse();
    for (auto code : expand(*g, c.regs.size())) {
      auto& slot = c.adam_delta[static_cast<std::size_t>(q)][code];
      int& ln = owner_line[static_cast<std::size_t>(q)][code];
      if (ln != 0)
        throw SpecError("nondeterministic guards on state '" + e.src + "': test [" +
                            format_test(Test::decode(code, c.regs.size()), c.regs) + "] is also covered at line " +
                            std::to_string(ln),
                        e.line, e.guard_col);
      slot = AdamMove{a, t};
      ln = e.line;
    }
  }
  for (auto& [q, e] : else_edge) {
    int t = c.state_index.at(e->dst);
    Assignment a;
    for (const auto& r : e->asgn) a.insert(*c.regs.find(r));
    for (std::uint32_t code = 0; code < ntests; ++code) {
      int& ln = owner_line[static_cast<std::size_t>(q)][code];
      if (ln == 0) {
        c.adam_delta[static_cast<std::size_t>(q)][code] = AdamMove{a, t};
        ln = e->line;
      }
    }
  }
  for (std::size_t q = 0; q < c.states.size(); ++q) {
    if (c.states[q].owner != Player::Adam) continue;
    for (std::uint32_t code = 0; code < ntests; ++code)
      if (owner_line[q][code] == 0)
        throw SpecError("incomplete Adam state '" + c.states[q].name + "': no guard covers test [" +
                        format_test(Test::decode(code, c.regs.size()), c.regs) + "] and there is no ELSE");
  }
  return c;
}

}  // namespace

std::vector<std::uint32_t> expand_guard(const std::string& guard, const RegisterSet& regs) {
  GuardParser parser(guard, regs, 0, 0);
  return expand(*parser.parse(), regs.size());
}

SpecDocument parse_spec_document(const std::string& text) {
  Document doc = read_document(text);
  Common c = build_common(doc);
  auto lookup = [&](const std::string& name, int line, int col) {
    auto it = c.state_index.find(name);
    if (it == c.state_index.end()) throw SpecError("unknown state '" + name + "'", line, col);
    return it->second;
  };

  if (doc.ido) {
    if (!doc.labels.empty()) throw SpecError("ido specifications take no labels; Eve outputs registers");
    IdoSpec s;
    s.registers = c.regs;
    s.states = c.states;
    s.initial = c.initial;
    s.adam_delta = c.adam_delta;
    s.output_delta.assign(c.states.size(), {});
    for (std::size_t q = 0; q < c.states.size(); ++q)
      if (c.states[q].owner == Player::Eve) s.output_delta[q].assign(static_cast<std::size_t>(c.regs.size()), -1);
    for (const auto& e : doc.label_edges) {
      if (!e.output) throw SpecError("ido specifications use 'output', not 'label'", e.line, e.col);
      int q = lookup(e.src, e.line, e.col);
      int t = lookup(e.dst, e.line, e.dst_col);
      if (c.states[static_cast<std::size_t>(q)].owner != Player::Eve)
        throw SpecError("output edges must leave an Eve state", e.line, e.col);
      if (c.states[static_cast<std::size_t>(t)].owner != Player::Adam)
        throw SpecError("output edges must lead to an Adam state", e.line, e.dst_col);
      for (const auto& r : e.items) {
        auto idx = c.regs.find(r);
        if (!idx) throw SpecError("unknown register '" + r + "'", e.line, e.col);
        int& slot = s.output_delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(*idx)];
        if (slot >= 0) throw SpecError("output '" + r + "' given twice on state '" + e.src + "'", e.line, e.col);
        slot = t;
      }
    }
    s.validate();
    return s;
  }

  OneSidedSpec s;
  s.registers = c.regs;
  s.states = c.states;
  s.initial = c.initial;
  s.adam_delta = c.adam_delta;
  std::map<std::string, int> label_index;
  for (const auto& l : doc.labels) {
    if (label_index.count(l)) throw SpecError("duplicate label '" + l + "'");
    label_index[l] = static_cast<int>(s.labels.size());
    s.labels.push_back(l);
  }
  s.eve_delta.assign(c.states.size(), {});
  for (std::size_t q = 0; q < c.states.size(); ++q)
    if (c.states[q].owner == Player::Eve) s.eve_delta[q].assign(s.labels.size(), -1);
  for (const auto& e : doc.label_edges) {
    if (e.output) throw SpecError("'output' edges require 'kind ido'", e.line, e.col);
    int q = lookup(e.src, e.line, e.col);
    int t = lookup(e.dst, e.line, e.dst_col);
    if (c.states[static_cast<std::size_t>(q)].owner != Player::Eve)
      throw SpecError("label edges must leave an Eve state", e.line, e.col);
    if (c.states[static_cast<std::size_t>(t)].owner != Player::Adam)
      throw SpecError("label edges must lead to an Adam state", e.line, e.dst_col);
    for (const auto& l : e.items) {
      auto it = label_index.find(l);
      if (it == label_index.end()) throw SpecError("unknown label '" + l + "'", e.line, e.col);
      int& slot = s.eve_delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(it->second)];
      if (slot >= 0) throw SpecError("label '" + l + "' given twice on state '" + e.src + "'", e.line, e.col);
      slot = t;
    }
  }
  s.validate();
  return s;
}

OneSidedSpec parse_spec(const std::string& text) {
  auto doc = parse_spec_document(text);
  if (auto* s = std::get_if<OneSidedSpec>(&doc)) return std::move(*s);
  throw SpecError("expected a one-sided specification, found an ido specification");
}

IdoSpec parse_ido_spec(const std::string& text) {
  auto doc = parse_spec_document(text);
  if (auto* s = std::get_if<IdoSpec>(&doc)) return std::move(*s);
  throw SpecError("expected an ido specification ('kind ido')");
}

}  // namespace rs
