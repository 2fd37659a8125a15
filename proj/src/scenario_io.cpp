#include "vinfer/scenario_io.hpp"

#include <cctype>
#include <sstream>

namespace vinfer {

namespace {

std::string position_msg(int line, int column, const std::string& msg) {
  std::ostringstream out;
  out << "line " << line << ", col " << column << ": " << msg;
  return out.str();
}

}  // namespace

ParseError::ParseError(int line_, int column_, const std::string& msg)
    : std::runtime_error(position_msg(line_, column_, msg)), line(line_), column(column_) {}

namespace {

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

// One physical line of input with token helpers. Columns are 1-based.
class LineCursor {
 public:
  LineCursor(std::string_view text, int line_no) : text_(text), line_(line_no) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line_, static_cast<int>(pos_) + 1, msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  bool try_consume(char c) {
    skip_ws();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c, const std::string& what) {
    skip_ws();
    if (peek() != c) fail("expected '" + std::string(1, c) + "' " + what);
    ++pos_;
  }

  // Literal token; no boundary check (used for '->' and '=>').
  bool try_consume_word(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  // Keyword: like try_consume_word, but must not be a prefix of a longer
  // identifier ('observer' never matches keyword 'obs').
  bool try_keyword(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) return false;
    std::size_t after = pos_ + word.size();
    if (after < text_.size() && ident_char(text_[after])) return false;
    pos_ += word.size();
    return true;
  }

  std::string ident(const std::string& what) {
    skip_ws();
    if (pos_ >= text_.size() || !ident_start(text_[pos_])) {
      fail("expected " + what);
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  int integer(const std::string& what) {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) {
      ++pos_;
    }
    if (pos_ == start || pos_ - start > 9) fail("expected " + what);
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  Literal literal() {
    skip_ws();
    bool positive = !try_consume('~');
    return Literal(ident("atom name"), positive);
  }

  // Remainder of the line, trimmed; must be a single token.
  std::string rest_token(const std::string& what) {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ' ' && text_[pos_] != '\t') ++pos_;
    if (pos_ == start) fail("expected " + what);
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing characters");
  }

  int line_no() const { return line_; }

 private:
  std::string_view text_;
  int line_;
  std::size_t pos_ = 0;
};

struct ParserState {
  Scenario sc;
  bool have_agents = false;
  bool have_atoms = false;
  bool have_actions = false;
  bool have_observer = false;
  bool have_expresser = false;
  // agent -> explicitly given accessibility pairs
  std::map<std::string, std::set<std::pair<std::string, std::string>>> epi;
  // value lines before '*' expansion: (agent, state-or-*) -> literals
  std::vector<std::pair<std::pair<std::string, std::string>, std::set<Literal>>> vals;
};

void parse_name_list(LineCursor& cur, const std::string& what,
                     std::set<std::string>& out) {
  cur.expect(':', "after section name");
  if (cur.at_end()) return;  // empty list
  while (true) {
    out.insert(cur.ident(what));
    if (!cur.try_consume(',')) break;
  }
  cur.expect_end();
}

EmotionKind parse_kind_name(LineCursor& cur) {
  if (cur.try_keyword("joy")) return EmotionKind::Joy;
  if (cur.try_keyword("distress")) return EmotionKind::Distress;
  cur.fail("expected emotion kind ('joy' or 'distress')");
}

ScriptedExpression parse_expression(LineCursor& cur) {
  if (cur.try_keyword("none")) {
    cur.expect('(', "after 'none'");
    EmotionKind kind = parse_kind_name(cur);
    cur.expect(')', "after emotion kind");
    return Expression::absent(kind);
  }
  if (cur.try_keyword("auto")) {
    if (cur.try_consume('(')) {
      EmotionKind kind = parse_kind_name(cur);
      cur.expect(')', "after emotion kind");
      return AutoExpression{kind};
    }
    return AutoExpression{std::nullopt};
  }
  EmotionKind kind = parse_kind_name(cur);
  if (cur.try_consume('?')) return Expression::incomplete(kind);
  if (cur.try_consume('(')) {
    Literal value = cur.literal();
    cur.expect(')', "after value literal");
    return Expression::complete(kind, std::move(value));
  }
  cur.fail("expected '?' or '(value)' after emotion kind");
}

void parse_line(LineCursor& cur, ParserState& st) {
  if (cur.try_keyword("agents")) {
    st.have_agents = true;
    parse_name_list(cur, "agent name", st.sc.model.agents);
  } else if (cur.try_keyword("atoms")) {
    st.have_atoms = true;
    parse_name_list(cur, "atom name", st.sc.model.atoms);
  } else if (cur.try_keyword("actions")) {
    st.have_actions = true;
    parse_name_list(cur, "action name", st.sc.model.actions);
  } else if (cur.try_keyword("state")) {
    State s;
    s.id = cur.ident("state id");
    cur.expect(':', "after state id");
    if (!cur.at_end()) {
      while (true) {
        std::string atom = cur.ident("atom name");
        cur.expect('=', "after atom name");
        bool value = false;
        if (cur.try_consume('1')) {
          value = true;
        } else if (!cur.try_consume('0')) {
          cur.fail("expected '0' or '1' as atom value");
        }
        s.valuation[atom] = value;
        if (!cur.try_consume(',')) break;
      }
    }
    cur.expect_end();
    st.sc.model.states.push_back(std::move(s));
  } else if (cur.try_keyword("trans")) {
    cur.expect(':', "after 'trans'");
    Transition t;
    t.source = cur.ident("source state id");
    cur.expect('-', "before action name");
    t.action = cur.ident("action name");
    if (!cur.try_consume_word("->")) cur.fail("expected '->' after action name");
    t.target = cur.ident("target state id");
    cur.expect_end();
    st.sc.model.transitions.insert(std::move(t));
  } else if (cur.try_keyword("epi")) {
    std::string agent = cur.ident("agent name");
    cur.expect(':', "after agent name");
    auto& pairs = st.epi[agent];
    while (true) {
      std::string from = cur.ident("state id");
      if (!cur.try_consume_word("->")) cur.fail("expected '->' between state ids");
      std::string to = cur.ident("state id");
      pairs.insert({std::move(from), std::move(to)});
      if (!cur.try_consume(',')) break;
    }
    cur.expect_end();
  } else if (cur.try_keyword("val")) {
    std::string agent = cur.ident("agent name");
    cur.expect('@', "after agent name");
    std::string state;
    cur.skip_ws();
    if (cur.try_consume('*')) {
      state = "*";
    } else {
      state = cur.ident("state id or '*'");
    }
    cur.expect(':', "after state id");
    std::set<Literal> literals;
    while (true) {
      literals.insert(cur.literal());
      if (!cur.try_consume(',')) break;
    }
    cur.expect_end();
    st.vals.push_back({{std::move(agent), std::move(state)}, std::move(literals)});
  } else if (cur.try_keyword("observer")) {
    if (st.have_observer) cur.fail("duplicate section: observer");
    st.have_observer = true;
    cur.expect(':', "after 'observer'");
    st.sc.observer = cur.ident("agent name");
    cur.expect_end();
  } else if (cur.try_keyword("expresser")) {
    if (st.have_expresser) cur.fail("duplicate section: expresser");
    st.have_expresser = true;
    cur.expect(':', "after 'expresser'");
    st.sc.expresser = cur.ident("agent name");
    cur.expect_end();
  } else if (cur.try_keyword("rule")) {
    cur.expect(':', "after 'rule'");
    BackgroundRule rule;
    rule.action = cur.ident("action name");
    if (!cur.try_consume_word("=>")) cur.fail("expected '=>' after action name");
    rule.consequence = cur.literal();
    cur.expect_end();
    st.sc.rules.insert(std::move(rule));
  } else if (cur.try_keyword("option")) {
    std::string key = cur.ident("option key");
    cur.expect(':', "after option key");
    std::string value = cur.rest_token("option value");
    cur.expect_end();
    st.sc.options[key] = std::move(value);
  } else if (cur.try_keyword("obs")) {
    ScriptedEvent ev;
    ev.index = cur.integer("observation index");
    if (ev.index <= 0) cur.fail("observation index must be positive");
    if (!st.sc.script.empty()) {
      int last = st.sc.script.back().index;
      if (ev.index == last) {
        cur.fail("duplicate observation index " + std::to_string(ev.index));
      }
      if (ev.index < last) {
        cur.fail("observation indices must be strictly increasing (" +
                 std::to_string(ev.index) + " after " + std::to_string(last) + ")");
      }
    }
    cur.expect(':', "after observation index");
    if (!cur.try_keyword("state")) cur.fail("expected 'state='");
    cur.expect('=', "after 'state'");
    ev.state = cur.ident("state id");
    if (!cur.try_keyword("action")) cur.fail("expected 'action='");
    cur.expect('=', "after 'action'");
    ev.action = cur.ident("action name");
    if (!cur.try_keyword("express")) cur.fail("expected 'express='");
    cur.expect('=', "after 'express'");
    ev.expression = parse_expression(cur);
    cur.expect_end();
    st.sc.script.push_back(std::move(ev));
  } else {
    cur.fail(
        "expected section keyword (agents, atoms, actions, state, trans, epi, val, "
        "observer, expresser, rule, option, obs)");
  }
}

}  // namespace

Scenario parse_scenario(std::string_view text) {
  ParserState st;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        eol == std::string_view::npos ? text.substr(pos) : text.substr(pos, eol - pos);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    LineCursor cur(line, line_no);
    if (!cur.at_end() && cur.peek() != '#') parse_line(cur, st);

    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }

  auto missing = [line_no](const char* section) {
    throw ParseError(line_no, 1, std::string("missing required section: ") + section);
  };
  if (!st.have_agents) missing("agents");
  if (!st.have_atoms) missing("atoms");
  if (!st.have_actions) missing("actions");
  if (!st.have_observer) missing("observer");
  if (!st.have_expresser) missing("expresser");

  // Agents without epi lines get the identity relation.
  for (const auto& agent : st.sc.model.agents) {
    auto it = st.epi.find(agent);
    if (it != st.epi.end()) {
      st.sc.model.epistemic[agent] = it->second;
      st.epi.erase(it);
      continue;
    }
    auto& pairs = st.sc.model.epistemic[agent];
    for (const auto& s : st.sc.model.states) pairs.insert({s.id, s.id});
  }
  // Epi lines for undeclared agents are kept for validate to flag.
  for (auto& [agent, pairs] : st.epi) {
    st.sc.model.epistemic[agent] = std::move(pairs);
  }

  for (auto& [key, literals] : st.vals) {
    auto& [agent, state] = key;
    if (state == "*") {
      for (const auto& s : st.sc.model.states) {
        st.sc.model.values[{agent, s.id}].insert(literals.begin(), literals.end());
      }
    } else {
      st.sc.model.values[{agent, state}].insert(literals.begin(), literals.end());
    }
  }

  return st.sc;
}

namespace {

template <typename Range, typename Render>
std::string join(const Range& range, const char* sep, Render render) {
  std::string out;
  bool first = true;
  for (const auto& item : range) {
    if (!first) out += sep;
    first = false;
    out += render(item);
  }
  return out;
}

std::string plain(const std::string& s) { return s; }

}  // namespace

std::string serialize_scenario(const Scenario& sc) {
  std::ostringstream out;
  const WorldModel& m = sc.model;

  out << "agents: " << join(m.agents, ", ", plain) << "\n";
  out << "atoms: " << join(m.atoms, ", ", plain) << "\n";
  out << "actions: " << join(m.actions, ", ", plain) << "\n";

  // State order is part of the structure (it fixes the identity-epistemic
  // expansion order), so it is preserved rather than sorted.
  for (const auto& s : m.states) {
    out << "state " << s.id << ":";
    if (!s.valuation.empty()) {
      out << " "
          << join(s.valuation, ", ", [](const auto& kv) {
               return kv.first + "=" + (kv.second ? "1" : "0");
             });
    }
    out << "\n";
  }

  for (const auto& t : m.transitions) {
    out << "trans: " << t.source << " -" << t.action << "-> " << t.target << "\n";
  }

  for (const auto& [agent, pairs] : m.epistemic) {
    if (pairs.empty()) continue;
    out << "epi " << agent << ": "
        << join(pairs, ", ",
                [](const auto& p) { return p.first + "->" + p.second; })
        << "\n";
  }

  for (const auto& [key, literals] : m.values) {
    if (literals.empty()) continue;
    out << "val " << key.first << " @ " << key.second << ": "
        << join(literals, ", ", [](const Literal& v) { return v.str(); }) << "\n";
  }

  out << "observer: " << sc.observer << "\n";
  out << "expresser: " << sc.expresser << "\n";

  for (const auto& rule : sc.rules) {
    out << "rule: " << rule.action << " => " << rule.consequence.str() << "\n";
  }

  for (const auto& [key, value] : sc.options) {
    out << "option " << key << ": " << value << "\n";
  }

  for (const auto& ev : sc.script) {
    out << "obs " << ev.index << ": state=" << ev.state << " action=" << ev.action
        << " express=" << to_string(ev.expression) << "\n";
  }

  return out.str();
}

}  // namespace vinfer
