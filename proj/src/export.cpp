#include "cocoa/export.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

namespace cocoa {

using nlohmann::json;

namespace {

json letters_json(const Alphabet& alphabet) {
  json out = json::array();
  for (Letter x : alphabet.letters()) out.push_back(alphabet.letter_name(x));
  return out;
}

std::string join(const std::vector<std::uint32_t>& ids, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(ids[i]);
  }
  return out;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

// ---------------------------------------------------------------------------
// JSON

json label_to_json(const Label& l) { return l.unions; }

json sltm_to_json(const Sltm& m) {
  json states = json::array();
  for (SltmStateId q = 0; q < m.size(); ++q) {
    states.push_back({{"id", q},
                      {"label", label_to_json(m.label(q))},
                      {"vertices_neg", m.vertex_set_neg(q)},
                      {"vertices_pos", m.vertex_set_pos(q)},
                      {"next", m.transitions()[q]}});
  }
  return {{"initial", m.initial()},
          {"letters", letters_json(m.alphabet())},
          {"states", std::move(states)},
          {"graph_neg_vertices", m.graph_neg().size()},
          {"graph_pos_vertices", m.graph_pos().size()},
          {"naive_states", m.naive_size()}};
}

json dfw_to_json(const Dfw& d) {
  json states = json::array();
  for (FloatId q = 0; q < d.size(); ++q) {
    json next = json::array();
    for (FloatId t : d.delta[q]) next.push_back(t == kUndefined ? json(nullptr) : json(t));
    const auto& s = d.states[q];
    states.push_back({{"id", q},
                      {"sltm_state", s.label},
                      {"pred", s.pred == kUndefined ? json(nullptr) : json(s.pred)},
                      {"vertices", s.vertices},
                      {"next", std::move(next)}});
  }
  return {{"states", std::move(states)}};
}

json ncw_to_json(const HdNcw& c) {
  json transitions = json::array();
  for (const auto& t : c.transitions) {
    transitions.push_back({t.from, t.letter, t.to, t.accepting});
  }
  return {{"aps", c.alphabet.aps()},
          {"letters", c.alphabet.letters()},
          {"sltm_states", c.sltm_states},
          {"dfw_states", c.dfw_states},
          {"initial", c.initial},
          {"transitions", std::move(transitions)}};
}

HdNcw ncw_from_json(const json& j) {
  HdNcw c;
  c.alphabet = Alphabet(j.at("aps").get<std::vector<std::string>>(),
                        j.at("letters").get<std::vector<Letter>>());
  c.sltm_states = j.at("sltm_states").get<std::size_t>();
  c.dfw_states = j.at("dfw_states").get<std::size_t>();
  c.initial = j.at("initial").get<std::uint32_t>();
  for (const auto& t : j.at("transitions")) {
    c.transitions.push_back({t.at(0).get<std::uint32_t>(), t.at(1).get<std::size_t>(),
                             t.at(2).get<std::uint32_t>(), t.at(3).get<bool>()});
  }
  std::sort(c.transitions.begin(), c.transitions.end());
  return c;
}

json chain_to_json(const Cocoa& chain) {
  json levels = json::array();
  for (std::size_t l = 0; l < chain.k(); ++l) {
    const auto& lv = chain.levels[l];
    levels.push_back({{"level", l + 1},
                      {"nfw_states", lv.nfw_states},
                      {"determinized_states", lv.determinized_states},
                      {"dfw", dfw_to_json(lv.dfw)},
                      {"hd_ncw", ncw_to_json(lv.ncw)}});
  }
  return {{"formula", chain.formula.to_string()},
          {"aps", chain.alphabet().aps()},
          {"k", chain.k()},
          {"sltm", sltm_to_json(*chain.sltm)},
          {"universal", dfw_to_json(chain.universal)},
          {"levels", std::move(levels)}};
}

// ---------------------------------------------------------------------------
// DOT

std::string awa_to_dot(const Awa& a) {
  std::ostringstream out;
  out << "digraph awa {\n  rankdir=LR;\n  init [shape=point];\n";
  for (StateId q = 0; q < a.size(); ++q) {
    out << "  q" << q << " [label=" << quote(a.name(q))
        << (a.accepting(q) ? ", shape=doublecircle" : ", shape=circle") << "];\n";
  }
  out << "  init -> q" << a.initial() << ";\n";
  const auto& al = a.alphabet();
  for (StateId q = 0; q < a.size(); ++q) {
    for (std::size_t x = 0; x < al.size(); ++x) {
      const auto& clauses = a.delta(q, x).clauses();
      for (std::size_t c = 0; c < clauses.size(); ++c) {
        // One diamond per clause: the conjunction sits on the edge fan-out.
        const std::string node = "c" + std::to_string(q) + "_" + std::to_string(x) + "_" + std::to_string(c);
        out << "  " << node << " [shape=diamond, label=\"\", width=0.15, height=0.15];\n";
        out << "  q" << q << " -> " << node << " [label=" << quote(al.letter_name(al.letter(x))) << "];\n";
        for (StateId t : clauses[c]) out << "  " << node << " -> q" << t << ";\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

std::string obligation_to_dot(const ObligationGraph& g, const Awa& a) {
  std::ostringstream out;
  out << "digraph obligation {\n  rankdir=LR;\n  init [shape=point];\n";
  auto names = [&](const StateSet& s) {
    std::string r = "{";
    for (std::size_t i = 0; i < s.size(); ++i) r += (i ? "," : "") + a.name(s[i]);
    return r + "}";
  };
  for (VertexId v = 0; v < g.size(); ++v) {
    const auto& vx = g.vertex(v);
    out << "  v" << v << " [label=" << quote(names(vx.states) + " | " + names(vx.obligations))
        << (g.accepting(v) ? ", shape=doublecircle" : ", shape=circle") << "];\n";
  }
  out << "  init -> v" << g.initial() << ";\n";
  const auto& al = g.alphabet();
  for (VertexId v = 0; v < g.size(); ++v) {
    for (std::size_t x = 0; x < al.size(); ++x) {
      for (VertexId t : g.successors(v, x)) {
        out << "  v" << v << " -> v" << t << " [label=" << quote(al.letter_name(al.letter(x))) << "];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

namespace {

void sltm_body(std::ostringstream& out, const Sltm& m, const std::string& prefix) {
  const auto& al = m.alphabet();
  for (SltmStateId q = 0; q < m.size(); ++q) {
    out << "    " << prefix << q << " [label=" << quote("s" + std::to_string(q) + "\\n" + m.label(q).to_string())
        << "];\n";
  }
  for (SltmStateId q = 0; q < m.size(); ++q) {
    for (std::size_t x = 0; x < al.size(); ++x) {
      out << "    " << prefix << q << " -> " << prefix << m.successor(q, x)
          << " [label=" << quote(al.letter_name(al.letter(x))) << "];\n";
    }
  }
}

void dfw_body(std::ostringstream& out, const Dfw& d, const Sltm& m, const std::string& prefix) {
  const auto& al = m.alphabet();
  for (FloatId q = 0; q < d.size(); ++q) {
    const auto& s = d.states[q];
    std::string label = std::to_string(q) + "\\nf=s" + std::to_string(s.label);
    if (s.pred != kUndefined) label += " pred=" + std::to_string(s.pred) + " V={" + join(s.vertices) + "}";
    out << "    " << prefix << q << " [label=" << quote(label) << "];\n";
  }
  for (FloatId q = 0; q < d.size(); ++q) {
    for (std::size_t x = 0; x < al.size(); ++x) {
      if (d.delta[q][x] == kUndefined) continue;
      out << "    " << prefix << q << " -> " << prefix << d.delta[q][x]
          << " [label=" << quote(al.letter_name(al.letter(x))) << "];\n";
    }
  }
}

}  // namespace

std::string sltm_to_dot(const Sltm& m) {
  std::ostringstream out;
  out << "digraph sltm {\n  rankdir=LR;\n  init [shape=point];\n  init -> s" << m.initial() << ";\n";
  sltm_body(out, m, "s");
  out << "}\n";
  return out.str();
}

std::string dfw_to_dot(const Dfw& d, const Sltm& m, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << quote(name) << " {\n  rankdir=LR;\n";
  dfw_body(out, d, m, "d");
  out << "}\n";
  return out.str();
}

std::string chain_to_dot(const Cocoa& chain) {
  std::ostringstream out;
  out << "digraph cocoa {\n  rankdir=LR;\n";
  out << "  subgraph cluster_sltm {\n    label=\"SLTM\";\n";
  sltm_body(out, *chain.sltm, "s");
  out << "  }\n";
  for (std::size_t l = 0; l < chain.k(); ++l) {
    const std::string prefix = "l" + std::to_string(l + 1) + "_";
    out << "  subgraph cluster_level" << l + 1 << " {\n    label=\"level " << l + 1 << "\";\n";
    dfw_body(out, chain.levels[l].dfw, *chain.sltm, prefix);
    out << "  }\n";
  }
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// HOA

namespace {

std::string cube(Letter x, std::size_t aps) {
  if (aps == 0) return "t";
  std::string out;
  for (std::size_t i = 0; i < aps; ++i) {
    if (i) out += "&";
    if (!(x >> i & 1U)) out += "!";
    out += std::to_string(i);
  }
  return out;
}

}  // namespace

std::string ncw_to_hoa(const HdNcw& c, const std::string& name) {
  const auto& al = c.alphabet;
  std::ostringstream out;
  out << "HOA: v1\n";
  out << "name: " << quote(name) << "\n";
  out << "States: " << c.size() << "\n";
  out << "Start: " << c.initial << "\n";
  out << "AP: " << al.aps().size();
  for (const auto& ap : al.aps()) out << " " << quote(ap);
  out << "\n";
  out << "acc-name: co-Buchi\n";
  out << "Acceptance: 1 Fin(0)\n";
  out << "properties: trans-labels explicit-labels trans-acc\n";
  out << "sltm-states: " << c.sltm_states << "\n";
  out << "letters:";
  for (Letter x : al.letters()) out << " " << x;
  out << "\n--BODY--\n";
  std::size_t next = 0;
  for (std::uint32_t q = 0; q < c.size(); ++q) {
    out << "State: " << q << "\n";
    for (; next < c.transitions.size() && c.transitions[next].from == q; ++next) {
      const auto& t = c.transitions[next];
      out << "[" << cube(al.letter(t.letter), al.aps().size()) << "] " << t.to
          << (t.accepting ? "" : " {0}") << "\n";
    }
  }
  out << "--END--\n";
  return out.str();
}

namespace {

class HoaReader {
public:
  explicit HoaReader(const std::string& text) : text_(text) {}

  HdNcw read() {
    HdNcw c;
    std::vector<std::string> aps;
    std::optional<std::vector<Letter>> letters;
    std::size_t states = 0;
    bool saw_acceptance = false;
    expect_word("HOA:");
    expect_word("v1");
    while (true) {
      const std::string key = word();
      if (key == "--BODY--") break;
      if (key == "name:") {
        string_literal();
      } else if (key == "States:") {
        states = number();
      } else if (key == "Start:") {
        c.initial = static_cast<std::uint32_t>(number());
      } else if (key == "AP:") {
        const std::size_t n = number();
        for (std::size_t i = 0; i < n; ++i) aps.push_back(string_literal());
      } else if (key == "acc-name:") {
        if (word() != "co-Buchi") fail("only co-Buchi acceptance is supported");
      } else if (key == "Acceptance:") {
        if (word() != "1" || word() != "Fin(0)") fail("expected 'Acceptance: 1 Fin(0)'");
        saw_acceptance = true;
      } else if (key == "properties:") {
        rest_of_line();
      } else if (key == "sltm-states:") {
        c.sltm_states = number();
      } else if (key == "letters:") {
        letters.emplace();
        std::istringstream in(rest_of_line());
        for (Letter x; in >> x;) letters->push_back(x);
      } else {
        fail("unknown header '" + key + "'");
      }
    }
    if (!saw_acceptance) fail("missing Acceptance header");
    c.alphabet = letters ? Alphabet(aps, *letters) : Alphabet(aps);
    if (c.sltm_states > states) fail("sltm-states exceeds States");
    c.dfw_states = states - c.sltm_states;

    std::uint32_t current = 0;
    bool in_state = false;
    while (true) {
      skip_space();
      if (at_end()) fail("missing --END--");
      if (peek() == '[') {
        if (!in_state) fail("edge before State:");
        ++pos_;
        const std::size_t close = text_.find(']', pos_);
        if (close == std::string::npos) fail("unterminated label");
        const Letter x = parse_cube(text_.substr(pos_, close - pos_), aps.size());
        pos_ = close + 1;
        const auto to = static_cast<std::uint32_t>(number());
        if (to >= states) fail("edge target out of range");
        bool accepting = true;
        skip_inline_space();
        if (!at_end() && peek() == '{') {
          const std::size_t end = text_.find('}', pos_);
          if (end == std::string::npos || text_.substr(pos_, end - pos_ + 1) != "{0}") fail("bad acceptance mark");
          pos_ = end + 1;
          accepting = false;
        }
        const auto idx = c.alphabet.index_of(x);
        if (!idx) fail("edge label is not a letter of the alphabet");
        c.transitions.push_back({current, *idx, to, accepting});
        continue;
      }
      const std::string key = word();
      if (key == "--END--") break;
      if (key != "State:") fail("expected State:");
      current = static_cast<std::uint32_t>(number());
      if (current >= states) fail("state out of range");
      in_state = true;
    }
    std::sort(c.transitions.begin(), c.transitions.end());
    return c;
  }

private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  void skip_inline_space() {
    while (!at_end() && (peek() == ' ' || peek() == '\t')) ++pos_;
  }
  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && !std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("unexpected end of input");
    return text_.substr(start, pos_ - start);
  }
  void expect_word(const std::string& w) {
    if (word() != w) fail("expected '" + w + "'");
  }
  std::size_t number() {
    const std::string w = word();
    if (w.empty() || !std::all_of(w.begin(), w.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
      fail("expected a number");
    }
    return std::stoul(w);
  }
  std::string string_literal() {
    skip_space();
    if (at_end() || peek() != '"') fail("expected a string");
    ++pos_;
    std::string out;
    while (!at_end() && peek() != '"') {
      if (peek() == '\\') ++pos_;
      if (at_end()) break;
      out += text_[pos_++];
    }
    if (at_end()) fail("unterminated string");
    ++pos_;
    return out;
  }
  std::string rest_of_line() {
    const std::size_t end = text_.find('\n', pos_);
    std::string out = text_.substr(pos_, end == std::string::npos ? std::string::npos : end - pos_);
    pos_ = end == std::string::npos ? text_.size() : end;
    return out;
  }
  Letter parse_cube(const std::string& label, std::size_t aps) {
    if (label == "t") {
      if (aps != 0) fail("'t' label needs an empty AP list");
      return 0;
    }
    Letter x = 0;
    std::vector<bool> seen(aps, false);
    std::istringstream in(label);
    for (std::string lit; std::getline(in, lit, '&');) {
      const bool neg = !lit.empty() && lit[0] == '!';
      const std::string digits = neg ? lit.substr(1) : lit;
      if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
        fail("labels must be full cubes");
      }
      const std::size_t i = std::stoul(digits);
      if (i >= aps || seen[i]) fail("bad AP index in label");
      seen[i] = true;
      if (!neg) x |= Letter{1} << i;
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) fail("labels must be full cubes");
    return x;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

HdNcw ncw_from_hoa(const std::string& text) { return HoaReader(text).read(); }

}  // namespace cocoa
