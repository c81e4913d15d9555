#include "cocoa/formula.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>
#include <unordered_set>

namespace cocoa {

Formula Formula::make(Op op, std::vector<Formula> children) {
  auto node = std::make_shared<Node>();
  node->op = op;
  node->children = std::move(children);
  return Formula(std::move(node));
}

Formula Formula::tt() { return make(Op::True, {}); }
Formula Formula::ff() { return make(Op::False, {}); }

Formula Formula::atom(std::size_t ap, std::string name) {
  auto node = std::make_shared<Node>();
  node->op = Op::Atom;
  node->ap = ap;
  node->name = std::move(name);
  return Formula(std::move(node));
}

Formula Formula::not_atom(std::size_t ap, std::string name) {
  auto node = std::make_shared<Node>();
  node->op = Op::NotAtom;
  node->ap = ap;
  node->name = std::move(name);
  return Formula(std::move(node));
}

Formula Formula::negate(Formula f) { return make(Op::Not, {std::move(f)}); }
Formula Formula::conj(Formula l, Formula r) { return make(Op::And, {std::move(l), std::move(r)}); }
Formula Formula::disj(Formula l, Formula r) { return make(Op::Or, {std::move(l), std::move(r)}); }
Formula Formula::implies(Formula l, Formula r) {
  return make(Op::Implies, {std::move(l), std::move(r)});
}
Formula Formula::next(Formula f) { return make(Op::Next, {std::move(f)}); }
Formula Formula::until(Formula l, Formula r) { return make(Op::Until, {std::move(l), std::move(r)}); }
Formula Formula::release(Formula l, Formula r) {
  return make(Op::Release, {std::move(l), std::move(r)});
}
Formula Formula::globally(Formula f) { return make(Op::Globally, {std::move(f)}); }
Formula Formula::finally(Formula f) { return make(Op::Finally, {std::move(f)}); }

Formula Formula::conj_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return tt();
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = conj(acc, fs[i]);
  return acc;
}

Formula Formula::disj_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return ff();
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = disj(acc, fs[i]);
  return acc;
}

std::size_t Formula::size() const {
  std::size_t n = 1;
  for (const auto& c : children()) n += c.size();
  return n;
}

std::string Formula::to_string() const {
  switch (op()) {
    case Op::True: return "true";
    case Op::False: return "false";
    case Op::Atom: return name();
    case Op::NotAtom: return "!" + name();
    case Op::Not: return "!(" + child(0).to_string() + ")";
    case Op::And: return "(" + child(0).to_string() + " & " + child(1).to_string() + ")";
    case Op::Or: return "(" + child(0).to_string() + " | " + child(1).to_string() + ")";
    case Op::Implies: return "(" + child(0).to_string() + " -> " + child(1).to_string() + ")";
    case Op::Next: return "X(" + child(0).to_string() + ")";
    case Op::Until: return "(" + child(0).to_string() + " U " + child(1).to_string() + ")";
    case Op::Release: return "(" + child(0).to_string() + " R " + child(1).to_string() + ")";
    case Op::Globally: return "G(" + child(0).to_string() + ")";
    case Op::Finally: return "F(" + child(0).to_string() + ")";
  }
  return "?";
}

bool Formula::is_nnf() const {
  if (op() == Op::Not || op() == Op::Implies) return false;
  for (const auto& c : children()) {
    if (c.op() == Op::True || c.op() == Op::False) return false;
    if (!c.is_nnf()) return false;
  }
  return true;
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (op() != other.op() || ap() != other.ap() || name() != other.name()) return false;
  if (children().size() != other.children().size()) return false;
  for (std::size_t i = 0; i < children().size(); ++i) {
    if (!(children()[i] == other.children()[i])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '#' || c == '$';
}
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '#' || c == '$';
}

/// True for identifiers such as "GF" or "XXG" that spell a run of unary operators.
bool is_unary_run(const std::string& id) {
  return !id.empty() &&
         std::all_of(id.begin(), id.end(), [](char c) { return c == 'X' || c == 'F' || c == 'G'; });
}

enum class Tok { End, Ident, LParen, RParen, Not, And, Or, Implies };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '(') {
      out.push_back({Tok::LParen, "(", i++});
    } else if (c == ')') {
      out.push_back({Tok::RParen, ")", i++});
    } else if (c == '!') {
      out.push_back({Tok::Not, "!", i++});
    } else if (c == '&') {
      out.push_back({Tok::And, "&", i});
      i += (i + 1 < text.size() && text[i + 1] == '&') ? 2 : 1;
    } else if (c == '|') {
      out.push_back({Tok::Or, "|", i});
      i += (i + 1 < text.size() && text[i + 1] == '|') ? 2 : 1;
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      out.push_back({Tok::Implies, "->", i});
      i += 2;
    } else if (is_ident_start(c)) {
      std::size_t start = i;
      while (i < text.size() && is_ident_char(text[i])) ++i;
      out.push_back({Tok::Ident, text.substr(start, i - start), start});
    } else {
      throw ParseError(i, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", text.size()});
  return out;
}

class Parser {
public:
  Parser(const std::string& text, const std::vector<std::string>& aps)
    : tokens_(lex(text)), aps_(aps) {}

  Formula parse() {
    Formula f = implication();
    if (peek().kind != Tok::End) throw ParseError(peek().pos, "unexpected '" + peek().text + "'");
    return f;
  }

private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  bool at_binary_temporal(const char* op) const {
    return peek().kind == Tok::Ident && peek().text == op;
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (peek().kind == Tok::Implies) {
      take();
      return Formula::implies(lhs, implication());
    }
    return lhs;
  }

  Formula disjunction() {
    Formula acc = conjunction();
    while (peek().kind == Tok::Or) {
      take();
      acc = Formula::disj(acc, conjunction());
    }
    return acc;
  }

  Formula conjunction() {
    Formula acc = binary_temporal();
    while (peek().kind == Tok::And) {
      take();
      acc = Formula::conj(acc, binary_temporal());
    }
    return acc;
  }

  Formula binary_temporal() {
    Formula lhs = unary();
    if (at_binary_temporal("U")) {
      take();
      return Formula::until(lhs, binary_temporal());
    }
    if (at_binary_temporal("R")) {
      take();
      return Formula::release(lhs, binary_temporal());
    }
    return lhs;
  }

  Formula unary() {
    const Token& t = peek();
    if (t.kind == Tok::Not) {
      take();
      return Formula::negate(unary());
    }
    if (t.kind == Tok::Ident && is_unary_run(t.text) && !is_atom(t.text)) {
      std::string ops = take().text;
      Formula f = unary();
      for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        if (*it == 'X') f = Formula::next(f);
        else if (*it == 'F') f = Formula::finally(f);
        else f = Formula::globally(f);
      }
      return f;
    }
    return primary();
  }

  Formula primary() {
    const Token& t = take();
    switch (t.kind) {
      case Tok::LParen: {
        Formula f = implication();
        if (peek().kind != Tok::RParen) throw ParseError(peek().pos, "expected ')'");
        take();
        return f;
      }
      case Tok::Ident: {
        if (t.text == "true") return Formula::tt();
        if (t.text == "false") return Formula::ff();
        if (t.text == "U" || t.text == "R") {
          throw ParseError(t.pos, "binary operator '" + t.text + "' without left operand");
        }
        auto it = std::find(aps_.begin(), aps_.end(), t.text);
        if (it == aps_.end()) throw UnknownAtom(t.text);
        return Formula::atom(static_cast<std::size_t>(it - aps_.begin()), t.text);
      }
      case Tok::End: throw ParseError(t.pos, "unexpected end of input");
      default: throw ParseError(t.pos, "unexpected '" + t.text + "'");
    }
  }

  bool is_atom(const std::string& id) const {
    return std::find(aps_.begin(), aps_.end(), id) != aps_.end();
  }

  std::vector<Token> tokens_;
  const std::vector<std::string>& aps_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_ltl(const std::string& text, const std::vector<std::string>& aps) {
  if (aps.empty()) throw InvalidParameter("at least one atomic proposition is required");
  return Parser(text, aps).parse();
}

std::vector<std::string> collect_atoms(const std::string& text) {
  std::vector<std::string> out;
  for (const auto& t : lex(text)) {
    if (t.kind != Tok::Ident) continue;
    if (t.text == "true" || t.text == "false" || t.text == "U" || t.text == "R") continue;
    if (is_unary_run(t.text)) continue;
    if (std::find(out.begin(), out.end(), t.text) == out.end()) out.push_back(t.text);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Negation normal form

namespace {

bool is_const(const Formula& f, Op which) { return f.op() == which; }

Formula mk_and(Formula l, Formula r) {
  if (is_const(l, Op::False) || is_const(r, Op::False)) return Formula::ff();
  if (is_const(l, Op::True)) return r;
  if (is_const(r, Op::True)) return l;
  return Formula::conj(std::move(l), std::move(r));
}

Formula mk_or(Formula l, Formula r) {
  if (is_const(l, Op::True) || is_const(r, Op::True)) return Formula::tt();
  if (is_const(l, Op::False)) return r;
  if (is_const(r, Op::False)) return l;
  return Formula::disj(std::move(l), std::move(r));
}

Formula mk_next(Formula f) {
  if (is_const(f, Op::True) || is_const(f, Op::False)) return f;
  return Formula::next(std::move(f));
}

Formula mk_globally(Formula f) {
  if (is_const(f, Op::True) || is_const(f, Op::False)) return f;
  return Formula::globally(std::move(f));
}

Formula mk_finally(Formula f) {
  if (is_const(f, Op::True) || is_const(f, Op::False)) return f;
  return Formula::finally(std::move(f));
}

Formula mk_until(Formula l, Formula r) {
  if (is_const(r, Op::True) || is_const(r, Op::False)) return r;
  if (is_const(l, Op::False)) return r;
  if (is_const(l, Op::True)) return Formula::finally(std::move(r));
  return Formula::until(std::move(l), std::move(r));
}

Formula mk_release(Formula l, Formula r) {
  if (is_const(r, Op::True) || is_const(r, Op::False)) return r;
  if (is_const(l, Op::True)) return r;
  if (is_const(l, Op::False)) return Formula::globally(std::move(r));
  return Formula::release(std::move(l), std::move(r));
}

Formula nnf(const Formula& f, bool negated) {
  switch (f.op()) {
    case Op::True: return negated ? Formula::ff() : Formula::tt();
    case Op::False: return negated ? Formula::tt() : Formula::ff();
    case Op::Atom: return negated ? Formula::not_atom(f.ap(), f.name()) : f;
    case Op::NotAtom: return negated ? Formula::atom(f.ap(), f.name()) : f;
    case Op::Not: return nnf(f.child(0), !negated);
    case Op::And:
      return negated ? mk_or(nnf(f.child(0), true), nnf(f.child(1), true))
                     : mk_and(nnf(f.child(0), false), nnf(f.child(1), false));
    case Op::Or:
      return negated ? mk_and(nnf(f.child(0), true), nnf(f.child(1), true))
                     : mk_or(nnf(f.child(0), false), nnf(f.child(1), false));
    case Op::Implies:
      return negated ? mk_and(nnf(f.child(0), false), nnf(f.child(1), true))
                     : mk_or(nnf(f.child(0), true), nnf(f.child(1), false));
    case Op::Next: return mk_next(nnf(f.child(0), negated));
    case Op::Until:
      return negated ? mk_release(nnf(f.child(0), true), nnf(f.child(1), true))
                     : mk_until(nnf(f.child(0), false), nnf(f.child(1), false));
    case Op::Release:
      return negated ? mk_until(nnf(f.child(0), true), nnf(f.child(1), true))
                     : mk_release(nnf(f.child(0), false), nnf(f.child(1), false));
    case Op::Globally:
      return negated ? mk_finally(nnf(f.child(0), true)) : mk_globally(nnf(f.child(0), false));
    case Op::Finally:
      return negated ? mk_globally(nnf(f.child(0), true)) : mk_finally(nnf(f.child(0), false));
  }
  throw InternalError("unknown operator");
}

void collect_closure(const Formula& f, std::unordered_set<std::string>& seen,
                     std::vector<Formula>& out) {
  if (!seen.insert(f.to_string()).second) return;
  out.push_back(f);
  for (const auto& c : f.children()) collect_closure(c, seen, out);
}

using Values = std::vector<bool>;

Values evaluate(const Formula& f, const LassoWord& w) {
  const std::size_t n = w.length();
  Values out(n, false);
  auto fixpoint = [&](Values init, auto step) {
    Values cur = std::move(init);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t k = n; k-- > 0;) {
        bool v = step(k, cur);
        if (v != cur[k]) {
          cur[k] = v;
          changed = true;
        }
      }
    }
    return cur;
  };
  switch (f.op()) {
    case Op::True: out.assign(n, true); break;
    case Op::False: break;
    case Op::Atom:
    case Op::NotAtom:
      for (std::size_t i = 0; i < n; ++i) {
        bool holds = (w.at(i) >> f.ap()) & 1U;
        out[i] = f.op() == Op::Atom ? holds : !holds;
      }
      break;
    case Op::Not: {
      Values c = evaluate(f.child(0), w);
      for (std::size_t i = 0; i < n; ++i) out[i] = !c[i];
      break;
    }
    case Op::And:
    case Op::Or:
    case Op::Implies: {
      Values l = evaluate(f.child(0), w);
      Values r = evaluate(f.child(1), w);
      for (std::size_t i = 0; i < n; ++i) {
        out[i] = f.op() == Op::And ? (l[i] && r[i]) : f.op() == Op::Or ? (l[i] || r[i]) : (!l[i] || r[i]);
      }
      break;
    }
    case Op::Next: {
      Values c = evaluate(f.child(0), w);
      for (std::size_t i = 0; i < n; ++i) out[i] = c[w.next(i)];
      break;
    }
    case Op::Until: {
      Values l = evaluate(f.child(0), w);
      Values r = evaluate(f.child(1), w);
      out = fixpoint(Values(n, false), [&](std::size_t k, const Values& cur) {
        return r[k] || (l[k] && cur[w.next(k)]);
      });
      break;
    }
    case Op::Release: {
      Values l = evaluate(f.child(0), w);
      Values r = evaluate(f.child(1), w);
      out = fixpoint(Values(n, true), [&](std::size_t k, const Values& cur) {
        return r[k] && (l[k] || cur[w.next(k)]);
      });
      break;
    }
    case Op::Globally: {
      Values c = evaluate(f.child(0), w);
      out = fixpoint(Values(n, true),
                     [&](std::size_t k, const Values& cur) { return c[k] && cur[w.next(k)]; });
      break;
    }
    case Op::Finally: {
      Values c = evaluate(f.child(0), w);
      out = fixpoint(Values(n, false),
                     [&](std::size_t k, const Values& cur) { return c[k] || cur[w.next(k)]; });
      break;
    }
  }
  return out;
}

}  // namespace

Formula to_nnf(const Formula& f) { return nnf(f, false); }

std::vector<Formula> closure(const Formula& f) {
  std::unordered_set<std::string> seen;
  std::vector<Formula> out;
  collect_closure(f, seen, out);
  return out;
}

bool eval_lasso(const Formula& f, const LassoWord& w) {
  if (w.period.empty()) throw InvalidParameter("lasso period must be non-empty");
  return evaluate(f, w)[0];
}

// ---------------------------------------------------------------------------
// Lower-bound family

std::vector<std::string> lower_bound_aps(int n) {
  if (n < 1) throw InvalidParameter("lower-bound family needs n >= 1");
  std::vector<std::string> aps;
  for (int i = 1; i <= n; ++i) aps.push_back("a" + std::to_string(i));
  for (int i = 1; i <= n; ++i) aps.push_back("b" + std::to_string(i));
  aps.push_back("#");
  aps.push_back("$");
  return aps;
}

Formula lower_bound_family(int n) {
  const auto aps = lower_bound_aps(n);
  const auto N = static_cast<std::size_t>(n);
  auto ap = [&](std::size_t idx) { return Formula::atom(idx, aps[idx]); };
  auto nap = [&](std::size_t idx) { return Formula::not_atom(idx, aps[idx]); };
  auto a = [&](std::size_t i) { return ap(i - 1); };
  auto b = [&](std::size_t i) { return ap(N + i - 1); };
  auto na = [&](std::size_t i) { return nap(i - 1); };
  auto nb = [&](std::size_t i) { return nap(N + i - 1); };
  auto slot = [&](std::size_t i) { return Formula::disj(a(i), b(i)); };
  const Formula hash = ap(2 * N);
  const Formula dollar = ap(2 * N + 1);
  using F = Formula;

  std::vector<Formula> psi;
  // Starts with # (a1|b1).
  psi.push_back(F::conj(hash, F::next(slot(1))));
  // (ai|bi) is followed by (ai+1|bi+1).
  for (std::size_t i = 1; i < N; ++i) {
    psi.push_back(F::globally(F::implies(slot(i), F::next(slot(i + 1)))));
  }
  // (an|bn) is followed by # (a1|b1), by $, or by #^ω.
  psi.push_back(F::globally(F::implies(
      slot(N), F::next(F::disj(F::disj(F::conj(hash, F::next(slot(1))), dollar), F::globally(hash))))));
  // $ occurs exactly once, followed by one block body and then #^ω.
  psi.push_back(F::finally(dollar));
  psi.push_back(F::globally(F::implies(dollar, F::next(F::globally(F::negate(dollar))))));
  Formula tail = F::globally(hash);
  for (std::size_t i = 0; i < N; ++i) tail = F::next(tail);
  psi.push_back(F::globally(F::implies(dollar, F::next(F::conj(slot(1), tail)))));
  // Some block before $ equals the block after $.
  std::vector<Formula> matches;
  for (std::size_t i = 1; i <= N; ++i) {
    matches.push_back(F::implies(a(i), F::finally(F::conj(dollar, F::finally(a(i))))));
    matches.push_back(F::implies(b(i), F::finally(F::conj(dollar, F::finally(b(i))))));
  }
  psi.push_back(F::finally(F::conj(
      F::conj(hash, F::finally(dollar)),
      F::next(F::until(F::conj_all(matches), F::disj(hash, dollar))))));
  // Mutual exclusion of the propositions, in size linear in n.
  std::vector<Formula> not_ab;
  for (std::size_t i = 1; i <= N; ++i) {
    psi.push_back(F::globally(F::negate(F::conj(a(i), b(i)))));
    not_ab.push_back(na(i));
    not_ab.push_back(nb(i));
  }
  psi.push_back(F::globally(F::implies(hash, F::conj(F::negate(dollar), F::conj_all(not_ab)))));
  psi.push_back(F::globally(F::implies(dollar, F::conj_all(not_ab))));
  std::vector<Formula> some;
  some.push_back(hash);
  some.push_back(dollar);
  for (std::size_t i = 1; i <= N; ++i) some.push_back(slot(i));
  psi.push_back(F::globally(F::disj_all(some)));

  return F::negate(F::conj_all(psi));
}

}  // namespace cocoa
