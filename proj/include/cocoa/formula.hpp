// LTL formulas: syntax tree, parser, negation normal form and lasso semantics.
#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "cocoa/base.hpp"

namespace cocoa {

enum class Op {
  True,
  False,
  Atom,
  NotAtom,
  Not,      // only before normalization
  And,
  Or,
  Implies,  // only before normalization
  Next,
  Until,
  Release,
  Globally,
  Finally,
};

/// Immutable LTL syntax tree; nodes are shared between copies.
class Formula {
public:
  static Formula tt();
  static Formula ff();
  static Formula atom(std::size_t ap, std::string name);
  static Formula not_atom(std::size_t ap, std::string name);
  static Formula negate(Formula f);
  static Formula conj(Formula l, Formula r);
  static Formula disj(Formula l, Formula r);
  static Formula implies(Formula l, Formula r);
  static Formula next(Formula f);
  static Formula until(Formula l, Formula r);
  static Formula release(Formula l, Formula r);
  static Formula globally(Formula f);
  static Formula finally(Formula f);

  /// Left fold with conj/disj; the empty list gives tt()/ff().
  static Formula conj_all(const std::vector<Formula>& fs);
  static Formula disj_all(const std::vector<Formula>& fs);

  Op op() const noexcept { return node_->op; }
  std::size_t ap() const noexcept { return node_->ap; }
  const std::string& name() const noexcept { return node_->name; }
  const std::vector<Formula>& children() const noexcept { return node_->children; }
  const Formula& child(std::size_t i) const { return node_->children.at(i); }

  /// Number of nodes in the tree.
  std::size_t size() const;
  /// Fully parenthesized rendering in the parser's ASCII syntax; doubles as a structural key.
  std::string to_string() const;
  bool is_nnf() const;

  bool operator==(const Formula& other) const;

private:
  struct Node {
    Op op;
    std::size_t ap = 0;
    std::string name;
    std::vector<Formula> children;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Op op, std::vector<Formula> children);

  std::shared_ptr<const Node> node_;
};

/// Grammar: atoms are identifiers from aps; `!`, `&`, `|`, `->`, `X`, `F`, `G`, `U`, `R`,
/// parentheses, `true`, `false`.  Precedence: unary > U,R (right assoc) > & > | > -> (right assoc).
Formula parse_ltl(const std::string& text, const std::vector<std::string>& aps);

/// Identifiers used in text that are not operators or literals, in order of first use.
std::vector<std::string> collect_atoms(const std::string& text);

Formula to_nnf(const Formula& f);

/// Distinct subformulas of f.
std::vector<Formula> closure(const Formula& f);

/// w |= f, by fixpoint evaluation on the folded lasso positions.
bool eval_lasso(const Formula& f, const LassoWord& w);

/// Negation of the block formula over a1..an, b1..bn, #, $ whose co-Büchi language
/// has doubly exponentially many suffix languages.
Formula lower_bound_family(int n);
std::vector<std::string> lower_bound_aps(int n);

}  // namespace cocoa
