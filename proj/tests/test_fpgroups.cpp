#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "rlab/groups/coset_table.hpp"
#include "rlab/groups/invariants.hpp"
#include "rlab/groups/low_index.hpp"
#include "rlab/groups/perm.hpp"
#include "rlab/groups/presentation.hpp"
#include "rlab/groups/rewriting.hpp"

using namespace rlab;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

std::vector<Perm> table_perms(const CosetTable& t) {
  std::vector<Perm> out;
  for (std::size_t g = 0; g < t.rank(); ++g) out.push_back(t.permutation(g));
  return out;
}

// Brute-force closure of a permutation group; returns all elements.
std::vector<Perm> close_group(const std::vector<Perm>& gens, std::size_t limit) {
  std::size_t n = gens.front().size();
  std::set<Perm> seen{perm_identity(n)};
  std::vector<Perm> elems{perm_identity(n)};
  for (std::size_t i = 0; i < elems.size() && elems.size() <= limit; ++i)
    for (const auto& g : gens) {
      Perm h = perm_mul(elems[i], g);
      if (seen.insert(h).second) elems.push_back(h);
    }
  return elems;
}

int perm_order(const Perm& g) {
  Perm h = g;
  int k = 1;
  while (!perm_is_identity(h)) {
    h = perm_mul(h, g);
    ++k;
  }
  return k;
}

// Size of the orbit of coset 0 of `inner` under the generators of the subgroup of `outer`.
std::size_t relative_index(const Presentation& p, const CosetTable& outer, const CosetTable& inner) {
  auto words = make_subgroup_record(p, outer).generators;
  std::vector<std::vector<int>> letters;
  for (const auto& w : words) {
    letters.push_back(p.encode(w));
    letters.push_back(p.encode(w.inverse()));
  }
  std::set<int> orbit{0};
  std::vector<int> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& l : letters) {
      int d = inner.trace(queue[i], l);
      if (orbit.insert(d).second) queue.push_back(d);
    }
  return orbit.size();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Presentation, ParseErrorsCarryPosition) {
  try {
    parse_presentation("group g a,b\nrel a b c\n");
    FAIL() << "unknown generator accepted";
  } catch (const PresentationParseError& e) {
    EXPECT_EQ(e.line, 2u);
  }
  try {
    parse_presentation("# comment\n\ngrp g a,b\n");
    FAIL();
  } catch (const PresentationParseError& e) {
    EXPECT_EQ(e.line, 3u);
    EXPECT_EQ(e.column, 1u);
  }
  EXPECT_THROW(parse_presentation("group g a,a\n"), PresentationParseError);
  EXPECT_THROW(parse_presentation("group g a,b\nrel a^\n"), PresentationParseError);
  EXPECT_THROW(parse_presentation("rel a\n"), PresentationParseError);
}

TEST(Presentation, RelatorsAreCyclicallyReduced) {
  auto p = parse_presentation("group g a,b\nrel b a b^-1 b a^2 b^-1\nrel a a^-1\n");
  ASSERT_EQ(p.relators().size(), 1u);
  EXPECT_EQ(p.relators()[0].to_string(), "a^3");
  EXPECT_EQ(parse_presentation("group g a,b\nrel A b\n").relators()[0].to_string(), "a^-1 b");
}

TEST(Presentation, TextRoundTrip) {
  for (const auto& name : fixture_names()) {
    auto p = fixture(name);
    auto q = parse_presentation(p.to_text());
    EXPECT_EQ(q.generators(), p.generators()) << name;
    EXPECT_EQ(q.relators(), p.relators()) << name;
  }
}

TEST(Presentation, FixtureFilesMatchBuilders) {
  const std::string dir = std::string(RLAB_SOURCE_DIR) + "/fixtures/";
  for (const char* name : {"figure8", "delta2", "delta4", "fib8", "gamma4", "gamma4-a2", "gamma4-a3", "gamma-empty",
                           "b1", "b2", "free2", "free3", "surface2"}) {
    auto file = load_presentation(dir + name + ".txt");
    auto built = fixture(name);
    EXPECT_EQ(file.name(), name);
    EXPECT_EQ(file.generators(), built.generators()) << name;
    EXPECT_EQ(file.relators(), built.relators()) << name;
  }
  EXPECT_FALSE(slurp(dir + "gamma4.txt").empty());
}

TEST(Abelianization, KnownValues) {
  EXPECT_EQ(abelianization(gamma4()), ints({3, 15}));
  EXPECT_EQ(abelianization(fibonacci(8)), ints({3, 15}));
  EXPECT_EQ(abelianization(delta(4)), ints({4}));
  EXPECT_EQ(abelianization(figure_eight()), ints({0}));
  EXPECT_EQ(abelianization(free_group(3)), ints({0, 0, 0}));
  EXPECT_EQ(abelianization(surface_group(2)), ints({0, 0, 0, 0}));
  EXPECT_EQ(abelianization(metacyclic25(6)), ints({5, 0}));
  // All six relators have even exponent sums in every generator.
  EXPECT_EQ(abelianization(gamma_empty()), ints({2, 2, 2}));
  EXPECT_EQ(betti_number(surface_group(3)), 6u);
}

TEST(Abelianization, InvariantUnderRelatorMoves) {
  std::mt19937 rng(7);
  for (const auto& name : {"gamma4", "fib8", "gamma-empty", "delta4", "b2"}) {
    auto p = fixture(name);
    auto expected = abelianization(p);
    for (int trial = 0; trial < 50; ++trial) {
      auto rels = p.relators();
      std::shuffle(rels.begin(), rels.end(), rng);
      for (auto& r : rels) {
        if (rng() % 2) r = r.inverse();
        r = r.rotated(static_cast<long>(rng() % (r.length() + 1)));
      }
      EXPECT_EQ(abelianization(Presentation("q", p.generators(), rels)), expected) << name;
    }
  }
}

TEST(CosetEnumeration, Delta2IsDihedralOfOrderTen) {
  auto t = coset_enumerate(delta(2), {});
  ASSERT_TRUE(t.complete());
  EXPECT_EQ(t.index(), 10u);
  auto perms = table_perms(t);
  EXPECT_EQ(perm_group_order(t.index(), perms), BigInt(10));
  // Independent check: brute-force closure and element orders.
  auto elems = close_group(perms, 1000);
  ASSERT_EQ(elems.size(), 10u);
  std::map<int, int> hist;
  for (const auto& g : elems) hist[perm_order(g)]++;
  EXPECT_EQ(hist, (std::map<int, int>{{1, 1}, {2, 5}, {5, 4}}));
  EXPECT_EQ(group_order(delta(2)), 10u);
}

TEST(CosetEnumeration, Gamma4FiniteQuotients) {
  EXPECT_EQ(group_order(fixture("gamma4-a2")), 3u);
  EXPECT_EQ(group_order(fixture("gamma4-a3")), 81u);
  CosetOptions felsch{CosetStrategy::Felsch};
  EXPECT_EQ(group_order(fixture("gamma4-a2"), felsch), 3u);
  EXPECT_EQ(group_order(fixture("gamma4-a3"), felsch), 81u);
}

TEST(CosetEnumeration, InfiniteIndexOverflows) {
  CosetOptions o;
  o.max_cosets = 1000;
  auto t = coset_enumerate(free_group(2), {parse_word("a")}, o);
  EXPECT_EQ(t.status(), CosetStatus::Overflowed);
  o.strategy = CosetStrategy::Felsch;
  EXPECT_EQ(coset_enumerate(free_group(2), {parse_word("a")}, o).status(), CosetStatus::Overflowed);
  EXPECT_EQ(coset_enumerate(delta(3), {}, o).status(), CosetStatus::Overflowed);
}

TEST(CosetEnumeration, SubgroupIndices) {
  CosetOptions o;
  o.max_cosets = 5000;
  EXPECT_EQ(coset_enumerate(delta(4), {parse_word("a")}, o).status(), CosetStatus::Overflowed);
  EXPECT_EQ(coset_enumerate(fixture("b1"), {parse_word("t")}).index(), 25u);
  EXPECT_EQ(coset_enumerate(free_group(2), {parse_word("a"), parse_word("b^3"), parse_word("b a b^-1"),
                                                     parse_word("b^2 a b^-2")})
                .index(),
            3u);
}

// Random small presentations: every complete table closes all relators, and
// both strategies agree on the index.
TEST(CosetEnumeration, RandomRelatorClosure) {
  std::mt19937 rng(2024);
  auto rand_word = [&](int len) {
    std::vector<Syllable> s;
    for (int i = 0; i < len; ++i) s.push_back({(rng() % 2) ? "a" : "b", (rng() % 2) ? 1L : -1L});
    return GroupWord(s);
  };
  int complete = 0;
  for (int trial = 0; trial < 1600; ++trial) {
    std::vector<GroupWord> rels{GroupWord::letter("a", 2 + rng() % 4), GroupWord::letter("b", 2 + rng() % 4),
                                parse_word("a b").pow(2 + rng() % 4)};
    if (rng() % 2) rels.push_back(rand_word(2 + rng() % 8));
    Presentation p("r", {"a", "b"}, rels);
    std::vector<GroupWord> sub;
    if (rng() % 2) sub.push_back(rand_word(1 + rng() % 4));
    CosetOptions o;
    o.max_cosets = 3000;
    auto t = coset_enumerate(p, sub, o);
    o.strategy = CosetStrategy::Felsch;
    auto f = coset_enumerate(p, sub, o);
    if (!t.complete()) continue;
    ++complete;
    EXPECT_TRUE(t.consistent());
    EXPECT_TRUE(t.relators_close(p));
    for (const auto& w : sub) EXPECT_EQ(t.trace(0, p.encode(w)), 0);
    if (f.complete()) {
      EXPECT_EQ(f.index(), t.index());
      EXPECT_EQ(f, t);
    }
  }
  EXPECT_GE(complete, 1000);
}

TEST(LowIndex, FreeGroupClassCounts) {
  std::vector<std::size_t> counts;
  for (std::size_t d = 1; d <= 6; ++d) {
    LowIndexOptions o;
    o.max_index = o.min_index = d;
    counts.push_back(low_index_tables(free_group(2), o).tables.size());
  }
  EXPECT_EQ(counts, (std::vector<std::size_t>{1, 3, 7, 26, 97, 624}));
}

TEST(LowIndex, FreeIndexTwo) {
  auto l = low_index_subgroups(free_group(2), 2, 2);
  ASSERT_EQ(l.records.size(), 3u);
  for (const auto& r : l.records) {
    EXPECT_EQ(r.invariants, ints({0, 0, 0}));
    EXPECT_TRUE(r.normal);
    EXPECT_EQ(r.generators.size(), 3u);
    EXPECT_EQ(r.core_index, BigInt(2));
  }
}

TEST(LowIndex, GammaEmptyIndexFour) {
  auto l = low_index_subgroups(gamma_empty(), 4, 4);
  EXPECT_TRUE(l.complete);
  EXPECT_EQ(l.records.size(), 11u);
  auto z4 = std::count_if(l.records.begin(), l.records.end(), [](const auto& r) { return r.invariants == ints({4}); });
  EXPECT_EQ(z4, 1);
}

TEST(LowIndex, GammaEmptyNormalIndexEight) {
  auto l = low_index_subgroups(gamma_empty(), 8, 8, true);
  bool found = false;
  for (const auto& r : l.records) {
    EXPECT_TRUE(r.normal);
    found |= r.invariants == ints({3, 6});
  }
  EXPECT_TRUE(found);
}

TEST(LowIndex, Delta4CommutatorSubgroup) {
  auto l = low_index_subgroups(delta(4), 4, 4);
  int matches = 0;
  for (const auto& r : l.records)
    if (r.invariants == ints({3, 15})) {
      ++matches;
      EXPECT_TRUE(r.normal);
      EXPECT_EQ(r.core_index, BigInt(4));
    }
  EXPECT_GE(matches, 1);
}

TEST(LowIndex, RecordsAreCanonicalAndSorted) {
  LowIndexOptions o;
  o.max_index = 6;
  auto res = low_index_tables(gamma_empty(), o);
  EXPECT_TRUE(std::is_sorted(res.tables.begin(), res.tables.end()));
  for (const auto& t : res.tables) {
    EXPECT_TRUE(is_canonical(t));
    EXPECT_TRUE(t.relators_close(gamma_empty()));
  }
}

// The normal-only search must agree with the full search filtered by normality.
TEST(LowIndex, NormalModeMatchesFilteredSearch) {
  for (const auto& [name, n] : std::vector<std::pair<std::string, std::size_t>>{
           {"free2", 6}, {"gamma-empty", 10}, {"delta4", 12}, {"gamma4", 9}, {"b1", 15}, {"surface2", 4}}) {
    auto p = fixture(name);
    LowIndexOptions all;
    all.max_index = n;
    auto full = low_index_tables(p, all);
    ASSERT_TRUE(full.complete) << name;
    std::vector<CosetTable> filtered;
    for (const auto& t : full.tables)
      if (is_normal(t)) filtered.push_back(t);
    LowIndexOptions normal = all;
    normal.normal_only = true;
    auto direct = low_index_tables(p, normal).tables;
    EXPECT_EQ(direct, filtered) << name;
  }
}

TEST(LowIndex, NodeBudgetGivesPartialResult) {
  LowIndexOptions o;
  o.max_index = 6;
  o.max_nodes = 50;
  auto res = low_index_tables(free_group(2), o);
  EXPECT_FALSE(res.complete);
}

TEST(Rewriting, KernelOfDelta4AbelianizationMap) {
  // Kernel of Delta4 -> Z/4 sending a, b to 1.
  auto t = quotient_table(delta(4), {parse_word("a b^-1")});
  ASSERT_EQ(t.index(), 4u);
  auto sp = reidemeister_schreier(delta(4), t);
  EXPECT_EQ(abelianization(sp.presentation), ints({3, 15}));
  // Generator words lie in the subgroup.
  for (const auto& w : sp.generator_words) EXPECT_EQ(t.trace(0, delta(4).encode(w)), 0);
}

TEST(Rewriting, IncompleteTableRejected) {
  CosetOptions o;
  o.max_cosets = 10;
  auto t = coset_enumerate(free_group(2), {parse_word("a")}, o);
  EXPECT_THROW(reidemeister_schreier(free_group(2), t), std::invalid_argument);
}

TEST(Rewriting, UnsimplifiedPresentationHasSameHomology) {
  LowIndexOptions o;
  o.max_index = 5;
  for (const auto& t : low_index_tables(gamma4(), o).tables) {
    auto raw = reidemeister_schreier(gamma4(), t, false);
    auto simple = reidemeister_schreier(gamma4(), t, true);
    EXPECT_EQ(abelianization(raw.presentation), abelianization(simple.presentation));
    EXPECT_EQ(raw.presentation.rank(), t.index() + 1);
  }
}

// Every index-d subgroup of F2 is free of rank d + 1.
TEST(Rewriting, NielsenSchreierRankTwo) {
  LowIndexOptions o;
  o.max_index = 6;
  auto res = low_index_tables(free_group(2), o);
  ASSERT_TRUE(res.complete);
  std::size_t checked = 0;
  for (const auto& t : res.tables) {
    auto sp = reidemeister_schreier(free_group(2), t);
    std::size_t d = t.index();
    EXPECT_EQ(sp.presentation.rank(), d + 1);
    EXPECT_TRUE(sp.presentation.relators().empty());
    EXPECT_EQ(abelianization(sp.presentation), std::vector<BigInt>(d + 1, BigInt(0)));
    ++checked;
  }
  EXPECT_EQ(checked, 1u + 3 + 7 + 26 + 97 + 624);
}

TEST(Rewriting, SurfaceSubgroupsHaveEulerCharacteristicRank) {
  LowIndexOptions o;
  o.max_index = 3;
  for (const auto& t : low_index_tables(surface_group(2), o).tables) {
    auto sp = reidemeister_schreier(surface_group(2), t);
    // Index-d subgroup of the genus-2 group has genus d + 1.
    EXPECT_EQ(betti_number(sp.presentation), 2 * (t.index() + 1));
  }
}

TEST(Chains, IndexMultiplicativity) {
  for (const auto& [name, n] :
       std::vector<std::pair<std::string, std::size_t>>{{"gamma-empty", 8}, {"free2", 4}, {"delta4", 12}}) {
    auto p = fixture(name);
    LowIndexOptions o;
    o.max_index = n;
    auto tables = low_index_tables(p, o).tables;
    int pairs = 0;
    for (const auto& h : tables)
      for (const auto& k : tables) {
        if (k.index() % h.index() != 0 || !table_contains(p, h, k)) continue;
        EXPECT_EQ(k.index(), h.index() * relative_index(p, h, k)) << name;
        ++pairs;
      }
    EXPECT_GT(pairs, static_cast<int>(tables.size()));
  }
}

TEST(Chains, FreeGroupLuckSequence) {
  auto p = free_group(2);
  std::vector<CosetTable> chain;
  for (int k = 1; k <= 5; ++k) chain.push_back(quotient_table(p, {GroupWord::letter("a", 1L << k), parse_word("b")}));
  auto seq = luck_sequence(p, chain);
  ASSERT_EQ(seq.size(), 5u);
  for (int k = 1; k <= 5; ++k) EXPECT_EQ(seq[k - 1], 1 + BigRational(1) / (1L << k));
}

TEST(Chains, SurfaceLuckSequence) {
  auto p = surface_group(2);
  std::vector<CosetTable> chain;
  for (int k = 1; k <= 3; ++k)
    chain.push_back(quotient_table(p, {GroupWord::letter("a1", 1L << k), parse_word("b1"), parse_word("a2"),
                                       parse_word("b2")}));
  auto seq = luck_sequence(p, chain);
  for (int k = 1; k <= 3; ++k) EXPECT_EQ(seq[k - 1], 2 + BigRational(2) / (1L << k));
}

TEST(Chains, Gamma4LuckSequenceVanishes) {
  auto p = gamma4();
  // Start from a kernel onto Z/3 and descend through nested normal subgroups.
  std::vector<CosetTable> chain{
      quotient_table(p, {parse_word("a^3"), parse_word("b")}),
  };
  LowIndexOptions o;
  o.max_index = 15;
  o.normal_only = true;
  for (const auto& t : low_index_tables(p, o).tables)
    if (t.index() > chain.back().index() && table_contains(p, chain.back(), t)) chain.push_back(t);
  ASSERT_GE(chain.size(), 2u);
  for (const auto& q : luck_sequence(p, chain)) EXPECT_EQ(q, BigRational(0));
}

TEST(Chains, NonNestedChainRejected) {
  auto p = free_group(2);
  auto h = quotient_table(p, {parse_word("a^2"), parse_word("b")});
  auto k = quotient_table(p, {parse_word("a^3"), parse_word("b")});
  EXPECT_THROW(luck_sequence(p, {h, k}), std::invalid_argument);
}
