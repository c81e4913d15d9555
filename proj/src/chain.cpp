#include "cocoa/chain.hpp"

#include <algorithm>
#include <chrono>

#include "cocoa/scc.hpp"

namespace cocoa {

std::size_t HdNcw::accepting_count() const {
  return static_cast<std::size_t>(std::count_if(
      transitions.begin(), transitions.end(), [](const NcwTransition& t) { return t.accepting; }));
}

HdNcw dfw_to_hd_ncw(const Dfw& d, const Sltm& m) {
  HdNcw c;
  c.alphabet = m.alphabet();
  c.sltm_states = m.size();
  c.dfw_states = d.size();
  c.initial = m.initial();
  const auto shift = static_cast<std::uint32_t>(m.size());
  std::vector<std::vector<FloatId>> by_label(m.size());
  for (FloatId q = 0; q < d.size(); ++q) by_label[d.states[q].label].push_back(q);

  for (SltmStateId s = 0; s < m.size(); ++s) {
    for (std::size_t x = 0; x < c.alphabet.size(); ++x) {
      const SltmStateId t = m.successor(s, x);
      c.transitions.push_back({s, x, t, false});
      for (FloatId q : by_label[t]) c.transitions.push_back({s, x, shift + q, false});
    }
  }
  for (FloatId q = 0; q < d.size(); ++q) {
    for (std::size_t x = 0; x < c.alphabet.size(); ++x) {
      const SltmStateId t = m.successor(d.states[q].label, x);
      for (FloatId r : by_label[t]) c.transitions.push_back({shift + q, x, shift + r, false});
      if (d.delta[q][x] != kUndefined) c.transitions.push_back({shift + q, x, shift + d.delta[q][x], true});
    }
  }
  std::sort(c.transitions.begin(), c.transitions.end());
  return c;
}

bool ncw_accepts_lasso(const HdNcw& c, const LassoWord& w) {
  w.validate(c.alphabet);
  const std::size_t positions = w.length();
  std::vector<std::size_t> letter(positions);
  for (std::size_t i = 0; i < positions; ++i) letter[i] = c.alphabet.require_index(w.at(i));
  std::vector<std::vector<const NcwTransition*>> out(c.size());
  for (const auto& t : c.transitions) out[t.from].push_back(&t);

  auto node = [&](std::uint32_t q, std::size_t pos) {
    return static_cast<std::uint32_t>(q * positions + pos);
  };
  const std::size_t nodes = c.size() * positions;
  Adjacency accepting(nodes);
  std::vector<bool> reached(nodes, false);
  std::vector<std::uint32_t> stack{node(c.initial, 0)};
  reached[stack.back()] = true;
  while (!stack.empty()) {
    const auto n = stack.back();
    stack.pop_back();
    const std::uint32_t q = n / static_cast<std::uint32_t>(positions);
    const std::size_t pos = n % positions;
    for (const auto* t : out[q]) {
      if (t->letter != letter[pos]) continue;
      const auto to = node(t->to, w.next(pos));
      if (t->accepting) accepting[n].push_back(to);
      if (!reached[to]) {
        reached[to] = true;
        stack.push_back(to);
      }
    }
  }
  const auto scc = tarjan_scc(accepting);
  for (std::size_t n = 0; n < nodes; ++n) {
    if (reached[n] && scc.nontrivial[scc.component[n]]) return true;
  }
  return false;
}

Cocoa build_chain(const Formula& f, const Alphabet& alphabet, const Budget& budget) {
  Cocoa chain;
  chain.formula = to_nnf(f);
  const Awa a = from_ltl(chain.formula, alphabet);
  chain.sltm = std::make_shared<const Sltm>(build_canonical_sltm(a, budget));
  const Sltm& m = *chain.sltm;
  chain.universal = universal_dfw(m);
  const Dfw* prev = &chain.universal;
  for (int level = 1;; ++level) {
    budget.check_time("chain construction");
    const Nfw n = level_product(*prev, m, level, budget);
    const Dfw det = determinize(n, *prev, m, level, budget);
    Dfw d = minimize_dfw(det, m);
    if (is_empty_dfw(d)) break;
    Level l;
    l.nfw_states = n.size();
    l.determinized_states = det.size();
    l.ncw = dfw_to_hd_ncw(d, m);
    l.dfw = std::move(d);
    chain.levels.push_back(std::move(l));
    prev = &chain.levels.back().dfw;
  }
  return chain;
}

std::vector<bool> level_memberships(const Cocoa& chain, const LassoWord& w) {
  std::vector<bool> out;
  out.reserve(chain.k());
  for (const auto& l : chain.levels) out.push_back(dfw_accepts_lasso(l.dfw, *chain.sltm, w));
  return out;
}

int natural_color(const Cocoa& chain, const LassoWord& w) {
  const auto member = level_memberships(chain, w);
  for (std::size_t l = member.size(); l > 0; --l) {
    if (member[l - 1]) return static_cast<int>(l);
  }
  return 0;
}

VerifyReport verify_chain(const Cocoa& chain, const Formula& f, std::size_t prefix_bound,
                          std::size_t period_bound) {
  if (period_bound < 1) throw InvalidParameter("period bound must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  report.color_histogram.assign(chain.k() + 1, 0);
  for (const auto& w : enumerate_lassos(chain.alphabet(), prefix_bound, period_bound)) {
    ++report.lassos;
    const auto member = level_memberships(chain, w);
    int color = 0;
    bool monotone = true;
    for (std::size_t l = 0; l < member.size(); ++l) {
      if (member[l]) color = static_cast<int>(l + 1);
      if (l > 0 && member[l] && !member[l - 1]) monotone = false;
    }
    ++report.color_histogram[static_cast<std::size_t>(color)];
    const bool expected = eval_lasso(f, w);
    const bool wrong = (color % 2 == 0) != expected;
    if (wrong) ++report.counterexamples;
    if (!monotone) ++report.monotonicity_violations;
    if ((wrong || !monotone) && !report.first) report.first = Counterexample{w, color, expected, !monotone};
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Cocoa drop_accepting_transition(const Cocoa& chain, std::uint64_t seed) {
  std::vector<std::tuple<std::size_t, FloatId, std::size_t>> candidates;
  for (std::size_t l = 0; l < chain.k(); ++l) {
    const auto& d = chain.levels[l].dfw;
    for (FloatId q = 0; q < d.size(); ++q) {
      for (std::size_t x = 0; x < d.delta[q].size(); ++x) {
        if (d.delta[q][x] != kUndefined) candidates.emplace_back(l, q, x);
      }
    }
  }
  if (candidates.empty()) throw InvalidParameter("chain has no accepting transition to drop");
  const auto [l, q, x] = candidates[seed % candidates.size()];
  Cocoa out = chain;
  out.levels[l].dfw.delta[q][x] = kUndefined;
  out.levels[l].ncw = dfw_to_hd_ncw(out.levels[l].dfw, *out.sltm);
  return out;
}

}  // namespace cocoa
