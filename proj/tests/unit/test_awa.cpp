#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace cocoa;
using namespace cocoa::testing;

namespace {

const std::vector<std::string> kAb{"a", "b"};

bool accepts(const Awa& a, const std::string& word) {
  return accepts_lasso(a, parse_lasso(word, a.alphabet()));
}

}  // namespace

TEST_CASE("Pcnf canonical form and minimal models", "[awa]") {
  const Pcnf p({{3, 2}, {2}, {4, 5}});
  CHECK(p.clauses() == std::vector<Clause>{{2}, {4, 5}});
  CHECK(p.minimal_models() == std::vector<StateSet>{{2, 4}, {2, 5}});
  CHECK(p.dual().clauses() == std::vector<Clause>{{2, 4}, {2, 5}});
  CHECK(p.satisfied_by({2, 5, 7}));
  CHECK_FALSE(p.satisfied_by({4, 5}));
  CHECK_THROWS_AS(Pcnf(std::vector<Clause>{Clause{}}), InvalidParameter);
  CHECK_THROWS_AS(Pcnf(std::vector<Clause>{}), InvalidParameter);
}

TEST_CASE("hand-built automaton semantics", "[awa]") {
  const auto ref = reference_awa();
  CHECK(accepts(ref.awa, ";{a}"));
  CHECK_FALSE(accepts(ref.awa, ";{}"));
  CHECK(accepts(ref.awa, ";{b}{}"));
  // Per-state languages: f1 is G a, f2 is empty, g2 is universal.
  CHECK(accepts(ref.awa.with_initial(ref.f1), ";{a}"));
  CHECK_FALSE(accepts(ref.awa.with_initial(ref.f1), "{a}{};{a}"));
  for (const auto& w : enumerate_lassos(ref.awa.alphabet(), 1, 2)) {
    CHECK_FALSE(accepts_lasso(ref.awa.with_initial(ref.f2), w));
    CHECK(accepts_lasso(ref.awa.with_initial(ref.g2), w));
  }
}

TEST_CASE("hand-built automaton agrees with its formula", "[awa]") {
  const auto ref = reference_awa();
  const auto in = parse("FG a | GF b", kAb);
  const auto f = to_nnf(in.formula);
  const auto built = from_ltl(f, in.alphabet);
  for (const auto& w : enumerate_lassos(in.alphabet, 2, 3)) {
    const bool expected = eval_lasso(f, w);
    CHECK(accepts_lasso(ref.awa, w) == expected);
    CHECK(accepts_lasso(built, w) == expected);
  }
}

TEST_CASE("from_ltl structure", "[awa]") {
  const auto in = parse("a", {"a"});
  const auto a = from_ltl(in.formula, in.alphabet);
  CHECK(a.size() == 3);  // the literal plus both sinks
  CHECK(accepts(a, "{a};{}"));
  CHECK_FALSE(accepts(a, ";{}"));
  CHECK(a.accepting(a.top()));
  CHECK_FALSE(a.accepting(a.bottom()));

  const auto fg = parse("FG a | GF b", kAb);
  CHECK(from_ltl(to_nnf(fg.formula), fg.alphabet).size() <= to_nnf(fg.formula).size() + 2);
  CHECK_THROWS_AS(from_ltl(parse("!(G a)", {"a"}).formula, Alphabet({"a"})), NotNnf);
}

TEST_CASE("dualize complements and is an involution", "[awa]") {
  for (const char* text : {"G a", "FG a | GF b", "a U (b R a)", "X !b"}) {
    const auto in = parse(text, kAb);
    const auto a = from_ltl(to_nnf(in.formula), in.alphabet);
    const auto d = dualize(a);
    const auto dd = dualize(d);
    CHECK(d.top() == a.bottom());
    CHECK(dd.transitions() == a.transitions());
    CHECK(dd.accepting_states() == a.accepting_states());
    for (const auto& w : enumerate_lassos(in.alphabet, 2, 3)) {
      CHECK(accepts_lasso(d, w) == !accepts_lasso(a, w));
    }
  }
}

TEST_CASE("weakness check", "[awa]") {
  for (const auto& f : random_corpus(40, 11)) {
    CHECK_NOTHROW(check_weak(from_ltl(f, Alphabet(kAb))));
  }
  // Two states on a cycle, one accepting and one not.
  std::vector<std::vector<Pcnf>> delta(4, std::vector<Pcnf>(1));
  delta[0][0] = Pcnf::single(0);
  delta[1][0] = Pcnf::single(1);
  delta[2][0] = Pcnf::single(3);
  delta[3][0] = Pcnf::single(2);
  std::vector<bool> acc{true, false, true, false};
  try {
    check_weak(delta, acc);
    FAIL("expected NotWeak");
  } catch (const NotWeak& e) {
    CHECK(e.scc() == std::vector<std::uint32_t>{2, 3});
  }
  acc[3] = true;
  const auto ranks = check_weak(delta, acc);
  CHECK(ranks[2] == ranks[3]);
  CHECK(ranks[0] != ranks[2]);
}

TEST_CASE("builder rejects partial automata", "[awa]") {
  AwaBuilder b(Alphabet({"a"}));
  const auto q = b.add_state("q", true);
  b.set_initial(q);
  b.set_transition(q, 0, Pcnf::single(q));
  CHECK_THROWS_AS(b.build(), InvalidParameter);
  b.set_transition(q, 1, Pcnf::single(b.top()));
  CHECK_NOTHROW(b.build());
}

TEST_CASE("emptiness", "[awa]") {
  const Alphabet al(kAb);
  const auto contra = from_ltl(Formula::conj(Formula::atom(0, "a"), Formula::not_atom(0, "a")), al);
  CHECK(is_empty(contra));
  CHECK_FALSE(emptiness_witness(contra));
  CHECK_FALSE(is_empty(reference_awa().awa));

  const auto gfa = to_nnf(parse("G a & F !a", kAb).formula);
  for (const auto& w : enumerate_lassos(al, 2, 2)) REQUIRE_FALSE(eval_lasso(gfa, w));
  CHECK(is_empty(from_ltl(gfa, al)));
}

TEST_CASE("emptiness witnesses are accepted words", "[awa]") {
  const Alphabet al(kAb);
  for (const auto& f : random_corpus(80, 5)) {
    const auto a = from_ltl(f, al);
    const auto witness = emptiness_witness(a);
    bool sampled = false;
    for (const auto& w : enumerate_lassos(al, 2, 3)) sampled = sampled || eval_lasso(f, w);
    CHECK(is_empty(a) == !witness.has_value());
    if (witness) {
      CHECK(eval_lasso(f, *witness));
    } else {
      CHECK_FALSE(sampled);
    }
  }
}

TEST_CASE("word-checking game agrees with the evaluator on the random corpus", "[awa]") {
  const Alphabet al(kAb);
  const auto lassos = enumerate_lassos(al, 2, 3);
  for (const auto& f : random_corpus(60, 3)) {
    const auto a = from_ltl(f, al);
    for (const auto& w : lassos) CHECK(accepts_lasso(a, w) == eval_lasso(f, w));
  }
}
