#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"

using namespace cocoa;
using namespace cocoa::testing;

namespace {

const std::vector<std::string> kAb{"a", "b"};

Awa awa_of(const std::string& text, const std::vector<std::string>& aps = kAb) {
  const auto in = parse(text, aps);
  return from_ltl(to_nnf(in.formula), in.alphabet);
}

bool subset(const StateSet& small, const StateSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

TEST_CASE("initial vertex and basic shape", "[obligation]") {
  const auto a = awa_of("G a");
  const auto g = miyano_hayashi(a);
  const auto& v0 = g.vertex(g.initial());
  CHECK(v0.states == StateSet{a.initial()});
  // G a is accepting, so nothing is owed initially.
  CHECK(v0.obligations.empty());
  for (const auto& v : g.vertices()) {
    CHECK(subset(v.obligations, v.states));
    for (auto q : v.obligations) CHECK_FALSE(a.accepting(q));
  }
  CHECK(g.size() <= static_cast<std::size_t>(std::pow(3.0, static_cast<double>(a.size()))));
}

TEST_CASE("complement of a tautology has no accepting cycle", "[obligation]") {
  const auto a = awa_of("a | !a");
  const auto g = miyano_hayashi(dualize(a));
  for (const auto& w : enumerate_lassos(g.alphabet(), 2, 3)) CHECK_FALSE(nbw_accepts_lasso(g, w));
  CHECK(is_empty(dualize(a)));
}

TEST_CASE("FG a obligation graph matches the evaluator", "[obligation]") {
  const auto in = parse("FG a", {"a"});
  const auto g = miyano_hayashi(from_ltl(in.formula, in.alphabet));
  for (const auto& w : enumerate_lassos(in.alphabet, 2, 3)) {
    CHECK(nbw_accepts_lasso(g, w) == eval_lasso(in.formula, w));
  }
  CHECK(nbw_accepts_lasso(g, parse_lasso(";{a}", in.alphabet)));
  CHECK_FALSE(nbw_accepts_lasso(g, parse_lasso(";{a}{}", in.alphabet)));
}

TEST_CASE("nondeterministic automata yield singleton state sets", "[obligation]") {
  const auto a = awa_of("F a", {"a"});
  for (const auto& row : a.transitions())
    for (const auto& p : row) REQUIRE(p.clauses().size() == 1);
  const auto g = miyano_hayashi(a);
  for (const auto& v : g.vertices()) CHECK(v.states.size() == 1);
}

TEST_CASE("breakpoint successors", "[obligation]") {
  const auto ref = reference_awa();
  const ObligationVertex v0{{ref.iota}, {ref.iota}};
  // iota picks f0 or g0; the accepting g0 owes nothing.
  const auto succ = breakpoint_successors(ref.awa, v0, 0);
  REQUIRE(succ.size() == 2);
  CHECK(succ[0] == ObligationVertex{{ref.f0}, {ref.f0}});
  CHECK(succ[1] == ObligationVertex{{ref.g0}, {}});
  // g0 branches universally into g0 and g1; only the rejecting g1 is owed.
  const auto from_g0 = breakpoint_successors(ref.awa, ObligationVertex{{ref.g0}, {}}, 0);
  REQUIRE(from_g0.size() == 1);
  CHECK(from_g0[0] == ObligationVertex{{ref.g0, ref.g1}, {ref.g1}});
}

TEST_CASE("language preservation on the corpus and its complements", "[obligation]") {
  const Alphabet al(kAb);
  const auto lassos = enumerate_lassos(al, 2, 3);
  std::vector<Awa> automata{reference_awa().awa, dualize(reference_awa().awa)};
  for (const auto& f : random_corpus(40, 17)) {
    automata.push_back(from_ltl(f, al));
    automata.push_back(dualize(automata.back()));
  }
  for (const auto& a : automata) {
    const auto g = miyano_hayashi(a);
    CHECK(g.size() <= static_cast<std::size_t>(std::pow(3.0, static_cast<double>(a.size()))));
    for (const auto& w : lassos) CHECK(nbw_accepts_lasso(g, w) == accepts_lasso(a, w));
  }
}

TEST_CASE("nested next under globally", "[obligation]") {
  // Regression: obligations must be tracked through the X layer.
  const auto in = parse("G X FG b", kAb);
  const auto f = to_nnf(in.formula);
  const auto g = miyano_hayashi(from_ltl(f, in.alphabet));
  for (const auto& w : enumerate_lassos(in.alphabet, 2, 3)) CHECK(nbw_accepts_lasso(g, w) == eval_lasso(f, w));
}

TEST_CASE("post images", "[obligation]") {
  const auto g = miyano_hayashi(reference_awa().awa);
  const VertexSet all = [&] {
    VertexSet s;
    for (VertexId v = 0; v < g.size(); ++v) s.push_back(v);
    return s;
  }();
  for (std::size_t x = 0; x < g.alphabet().size(); ++x) {
    VertexSet expected;
    for (auto v : all) {
      const auto& s = g.successors(v, x);
      expected.insert(expected.end(), s.begin(), s.end());
    }
    std::sort(expected.begin(), expected.end());
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    CHECK(g.post(all, x) == expected);
    CHECK(g.post({}, x).empty());
  }
}
