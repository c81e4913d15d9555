#include <catch_amalgamated.hpp>

#include <cmath>
#include <map>

#include "oracles.hpp"

using namespace cocoa;
using namespace cocoa::testing;

namespace {

const std::vector<std::string> kAb{"a", "b"};

std::shared_ptr<const Sltm> sltm_of(const std::string& text, const std::vector<std::string>& aps) {
  const auto in = parse(text, aps);
  return std::make_shared<const Sltm>(build_canonical_sltm(from_ltl(to_nnf(in.formula), in.alphabet)));
}

const std::vector<std::pair<std::string, std::vector<std::string>>> kFixtures{
    {"G a", {"a"}},
    {"FG a", {"a"}},
    {"GF a -> GF b", {"a", "b"}},
    {"a U b", {"a", "b"}},
    {"FG a | GF b", {"a", "b"}},
    {"GF a -> (GF b & FG c)", {"a", "b", "c"}},
};

}  // namespace

TEST_CASE("universal floating automaton", "[floating]") {
  const auto fg = sltm_of("FG a", {"a"});
  const auto u = universal_dfw(*fg);
  CHECK(u.size() == 1);
  CHECK(u.delta[0] == std::vector<FloatId>{0, 0});
  CHECK(minimize_dfw(u, *fg).size() == 1);
  CHECK_FALSE(is_empty_dfw(u));

  for (const auto& [text, aps] : kFixtures) {
    const auto m = sltm_of(text, aps);
    const auto d = universal_dfw(*m);
    CHECK_NOTHROW(check_label_consistency(d, *m));
    CHECK(d.size() <= m->size());
    for (const auto& w : enumerate_lassos(m->alphabet(), 1, 2)) CHECK(dfw_accepts_lasso(d, *m, w));
  }
}

TEST_CASE("level products of the first examples", "[floating]") {
  const auto ga = sltm_of("G a", {"a"});
  const auto stages = staged_levels(*ga);
  REQUIRE(stages.size() == 2);  // one level, then the empty one
  const auto& l1 = stages[0].minimized;
  for (const auto& w : enumerate_lassos(ga->alphabet(), 2, 3)) {
    CHECK(dfw_accepts_lasso(l1, *ga, w) == eval_lasso(parse_ltl("F !a", {"a"}), w));
  }
  CHECK(stages[1].nfw.size() == 0);

  const auto fg = sltm_of("FG a", {"a"});
  const auto fstages = staged_levels(*fg);
  REQUIRE(fstages.size() == 3);
  for (const auto& w : enumerate_lassos(fg->alphabet(), 2, 3)) {
    CHECK(dfw_accepts_lasso(fstages[0].minimized, *fg, w));
    CHECK(dfw_accepts_lasso(fstages[1].minimized, *fg, w) == eval_lasso(parse_ltl("FG a", {"a"}), w));
  }
  CHECK(dfw_accepts_lasso(fstages[1].minimized, *fg, parse_lasso(";{a}", fg->alphabet())));
  CHECK_FALSE(dfw_accepts_lasso(fstages[1].minimized, *fg, parse_lasso(";{a}{}", fg->alphabet())));

  const auto taut = sltm_of("a | !a", {"a"});
  CHECK(level_product(universal_dfw(*taut), *taut, 1).size() == 0);
}

TEST_CASE("level product states come from the level's vertex sets", "[floating]") {
  for (const auto& [text, aps] : kFixtures) {
    const auto m = sltm_of(text, aps);
    Dfw prev = universal_dfw(*m);
    int level = 1;
    for (const auto& s : staged_levels(*m)) {
      for (const auto& st : s.nfw.states) {
        const auto& set = level % 2 ? m->vertex_set_neg(st.label) : m->vertex_set_pos(st.label);
        CHECK(std::binary_search(set.begin(), set.end(), st.vertex));
        REQUIRE(st.pred < prev.size());
        CHECK(prev.states[st.pred].label == st.label);
      }
      prev = s.minimized;
      ++level;
    }
  }
}

TEST_CASE("determinization, minimization and the oracle NFW agree", "[floating]") {
  for (const auto& [text, aps] : kFixtures) {
    const auto m = sltm_of(text, aps);
    const auto lassos = enumerate_lassos(m->alphabet(), 2, aps.size() > 2 ? 2 : 3);
    for (const auto& s : staged_levels(*m)) {
      CHECK(s.minimized.size() <= s.determinized.size());
      for (const auto& w : lassos) {
        const bool expected = nfw_accepts_lasso(s.nfw, *m, w);
        CHECK(dfw_accepts_lasso(s.determinized, *m, w) == expected);
        CHECK(dfw_accepts_lasso(s.minimized, *m, w) == expected);
      }
    }
  }
}

TEST_CASE("determinizing a deterministic NFW keeps its shape", "[floating]") {
  const auto fg = sltm_of("FG a", {"a"});
  const auto stages = staged_levels(*fg);
  const auto& s = stages[1];
  bool deterministic = true;
  for (const auto& row : s.nfw.succ)
    for (const auto& t : row) deterministic = deterministic && t.size() <= 1;
  REQUIRE(deterministic);
  CHECK(s.determinized.size() == s.nfw.size());
  CHECK(s.determinized.transition_count() == s.nfw.transition_count());

  const Dfw prev = universal_dfw(*fg);
  const auto empty = determinize(Nfw{}, prev, *fg, 1);
  CHECK(empty.empty());
  CHECK(is_empty_dfw(empty));
  for (const auto& w : enumerate_lassos(fg->alphabet(), 1, 2)) CHECK_FALSE(dfw_accepts_lasso(empty, *fg, w));
}

TEST_CASE("minimization is idempotent", "[floating]") {
  for (const auto& [text, aps] : kFixtures) {
    const auto m = sltm_of(text, aps);
    for (const auto& s : staged_levels(*m)) {
      const auto again = minimize_dfw(s.minimized, *m);
      CHECK(again.size() == s.minimized.size());
      CHECK(again.transition_count() == s.minimized.transition_count());
    }
  }
}

TEST_CASE("structural invariants at every level", "[floating]") {
  for (const auto& [text, aps] : kFixtures) {
    const auto m = sltm_of(text, aps);
    const std::size_t letters = m->alphabet().size();
    for (const auto& s : staged_levels(*m)) {
      CHECK_NOTHROW(check_label_consistency(s.nfw, *m));
      CHECK_NOTHROW(check_label_consistency(s.determinized, *m));
      CHECK_NOTHROW(check_label_consistency(s.minimized, *m));
      CHECK(transient_free(s.nfw, letters));
      CHECK(transient_free(s.minimized, letters));
      // |prev|^2 * 2^|V| * |V| with V the larger of the two obligation graphs.
      const std::size_t v = std::max(m->graph_neg().size(), m->graph_pos().size());
      CHECK(std::log2(static_cast<double>(std::max<std::size_t>(s.determinized.size(), 1))) <=
            fl_size_bound_log2(s.prev_size, v));
    }
  }
}

TEST_CASE("label consistency violations are reported", "[floating]") {
  const auto ga = sltm_of("G a", {"a"});
  auto d = universal_dfw(*ga);
  REQUIRE(d.size() == 2);
  const FloatId from = d.states[0].label == ga->initial() ? 0 : 1;
  // On {a} the initial state stays put; redirect it to the other state.
  d.delta[from][1] = 1 - from;
  CHECK_THROWS_AS(check_label_consistency(d, *ga), InternalError);
}

TEST_CASE("the size bound", "[floating]") {
  CHECK(fl_size_bound_log2(1, 1) == Catch::Approx(1.0));
  CHECK(fl_size_bound_log2(2, 3) == Catch::Approx(2.0 + 3.0 + std::log2(3.0)));
}

TEST_CASE("jump-in transitions depend only on the SLTM state", "[floating]") {
  for (const auto& [text, aps] : kFixtures) {
    if (aps.size() > 2) continue;
    const auto m = sltm_of(text, aps);
    const auto lassos = enumerate_lassos(m->alphabet(), 1, 2);
    for (const auto& s : staged_levels(*m)) {
      std::map<SltmStateId, std::vector<std::set<std::tuple<FloatId, std::size_t, FloatId>>>> seen;
      for (const auto& p : words_up_to(m->alphabet(), 3)) {
        std::vector<std::set<std::tuple<FloatId, std::size_t, FloatId>>> sets;
        for (const auto& w : lassos) sets.push_back(jump_in_transitions(s.minimized, *m, p, w));
        auto [it, fresh] = seen.emplace(sltm_state_after(*m, p), sets);
        if (!fresh) CHECK(it->second == sets);
      }
    }
  }
}

TEST_CASE("jump-in transitions are real transitions", "[floating]") {
  const auto fg = sltm_of("FG a", {"a"});
  const auto l2 = staged_levels(*fg)[1].minimized;
  const auto w = parse_lasso(";{a}", fg->alphabet());
  const auto used = jump_in_transitions(l2, *fg, {0}, w);
  CHECK_FALSE(used.empty());
  for (const auto& [q, x, t] : used) CHECK(l2.delta[q][x] == t);
  CHECK(jump_in_transitions(l2, *fg, {}, parse_lasso(";{}", fg->alphabet())).empty());
}
