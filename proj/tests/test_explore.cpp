#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <map>
#include <set>

#include "hyperfuzz/explore.hpp"
#include "hyperfuzz/format.hpp"

#include "helpers.hpp"
#include "oracle.hpp"

using namespace hyperfuzz;
using testutil::left_zero;
using testutil::make_table;
using testutil::right_zero;

namespace {

struct BudgetOverride {
  explicit BudgetOverride(const char* value) { setenv("HYPERFUZZ_BUDGET", value, 1); }
  ~BudgetOverride() { unsetenv("HYPERFUZZ_BUDGET"); }
};

std::vector<HyperGroupoid> all_tables(int n) {
  std::vector<HyperGroupoid> out;
  HypergroupoidEnumerator en(n);
  while (auto h = en.next()) out.push_back(std::move(*h));
  return out;
}

}  // namespace

TEST_CASE("table enumeration counts and order") {
  CHECK(all_tables(1).size() == 1);

  const std::vector<HyperGroupoid> tables = all_tables(2);
  REQUIRE(tables.size() == 81);
  std::set<std::string> keys;
  for (const HyperGroupoid& h : tables) keys.insert(table_key(h));
  CHECK(keys.size() == 81);

  // first table: every cell {a}; last: every cell {a, b}
  CHECK(table_key(tables.front()) == "1.1.1.1");
  CHECK(table_key(tables.back()) == "3.3.3.3");
  // lexicographic: the second table bumps only the last cell
  CHECK(table_key(tables[1]) == "1.1.1.2");
}

TEST_CASE("fuzzy enumeration counts and order") {
  const HyperGroupoid lz = left_zero(2);

  FuzzySubsetEnumerator en1(lz, 1);
  CHECK(en1.total() == 4);
  std::vector<FuzzySubset> k1;
  while (auto f = en1.next()) k1.push_back(std::move(*f));
  CHECK(k1.size() == 4);
  CHECK(k1.front() == FuzzySubset::constant(2, Grade::zero()));
  CHECK(k1.back() == FuzzySubset::constant(2, Grade::one()));

  FuzzySubsetEnumerator en2(lz, 2);
  std::vector<FuzzySubset> k2;
  while (auto f = en2.next()) k2.push_back(std::move(*f));
  CHECK(k2.size() == 9);
  CHECK(k2.front() == FuzzySubset::constant(2, Grade::zero()));
  CHECK(k2.back() == FuzzySubset::constant(2, Grade::one()));
}

TEST_CASE("the budget gates big enumerations") {
  unsetenv("HYPERFUZZ_BUDGET");
  CHECK_THROWS_AS(HypergroupoidEnumerator{3}, BudgetExceeded);  // 7^9 tables

  BudgetOverride raise("50000000");
  HypergroupoidEnumerator en(3);
  CHECK(en.total() == 40353607ull);
  auto first = en.next();
  REQUIRE(first.has_value());
  CHECK(table_key(*first) == "1.1.1.1.1.1.1.1.1");
}

TEST_CASE("bad budget values are rejected") {
  BudgetOverride bad("zero");
  CHECK_THROWS_AS(instance_budget(), Error);
}

TEST_CASE("random instances are deterministic per seed") {
  const auto [h1, f1] = random_instance(3, 2, 7);
  const auto [h2, f2] = random_instance(3, 2, 7);
  CHECK(h1 == h2);
  CHECK(f1 == f2);

  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto [h, f] = random_instance(4, 3, seed);
    for (Element x : h.elements()) {
      for (Element y : h.elements()) {
        CHECK_FALSE(h.cell(x, y).empty());
      }
    }
    CHECK(f.size() == 4);
  }
}

TEST_CASE("verify T4 exhaustively at n=2") {
  VerificationScope scope;
  scope.carrier_size = 2;
  scope.grid = 2;
  const VerificationReport report = verify_theorem(TheoremId::t4, scope);
  CHECK(report.instances_checked == 729);
  CHECK(report.tables_checked == 81);
  CHECK(report.disagreements == 0);
  CHECK_FALSE(report.first_disagreement.has_value());
}

TEST_CASE("theorems about hypersemigroups insist on the filter") {
  VerificationScope scope;
  scope.carrier_size = 2;
  scope.grid = 2;
  CHECK_THROWS_AS(verify_theorem(TheoremId::t11, scope), ScopeError);
  CHECK_THROWS_AS(verify_theorem(TheoremId::p9, scope), ScopeError);
  CHECK_THROWS_AS(verify_theorem(TheoremId::note, scope), ScopeError);
}

TEST_CASE("sampled scopes validate and reproduce") {
  VerificationScope scope;
  scope.carrier_size = 3;
  scope.grid = 2;
  scope.mode = Mode::sampled;
  scope.samples = 0;
  scope.seed = 5;
  CHECK_THROWS_AS(verify_theorem(TheoremId::t4, scope), ScopeError);

  scope.samples = 40;
  const VerificationReport a = verify_theorem(TheoremId::t4, scope);
  const VerificationReport b = verify_theorem(TheoremId::t4, scope);
  CHECK(a.instances_checked == 40);
  CHECK(a.disagreements == 0);
  CHECK(render_verification_report(a, false) == render_verification_report(b, false));
}

TEST_CASE("canonical keys are orbit invariants") {
  CHECK(canonical_key(make_table(1, {1})) == "1");

  const HyperGroupoid lz = left_zero(2);
  const HyperGroupoid rz = right_zero(2);
  CHECK(canonical_key(lz) != canonical_key(rz));
  CHECK(canonical_key(lz) == canonical_key(relabel(lz, {1, 0})));

  for (std::uint64_t trial = 0; trial < 30; ++trial) {
    auto [h, f] = random_instance(3, 1, split_seed(31, trial));
    const std::string key = canonical_key(h);
    CHECK(key == canonical_key(relabel(h, {0, 2, 1})));
    CHECK(key == canonical_key(relabel(h, {1, 0, 2})));
    CHECK(key == canonical_key(relabel(h, {2, 0, 1})));
    CHECK(key == canonical_key(relabel(h, {2, 1, 0})));
    CHECK(key == canonical_key(relabel(h, {1, 2, 0})));
  }
}

TEST_CASE("n=2 isomorphism classes partition the 81 tables") {
  std::map<std::string, int> classes;
  for (const HyperGroupoid& h : all_tables(2)) ++classes[canonical_key(h)];
  CHECK(classes.size() == 45);  // regression constant
  int total = 0;
  for (const auto& [key, count] : classes) total += count;
  CHECK(total == 81);
}

TEST_CASE("find_counterexample locates the first non-associative table") {
  VerificationScope scope;
  scope.carrier_size = 2;
  scope.grid = 1;
  const auto found = find_counterexample(PropertyId::non_associative_table, scope);
  REQUIRE(found.has_value());
  // enumeration order: tables 0..2 are associative, table 3 is not
  CHECK(table_key(found->table) == "1.1.2.1");
  CHECK_FALSE(is_hypersemigroup(found->table).pass);
  CHECK_FALSE(found->fuzzy.has_value());
}

TEST_CASE("no disagreement probe ever fires on a proved theorem") {
  VerificationScope scope;
  scope.carrier_size = 2;
  scope.grid = 2;
  CHECK_FALSE(find_counterexample(PropertyId::t4_disagreement, scope).has_value());
  CHECK_FALSE(find_counterexample(PropertyId::t6_disagreement, scope).has_value());
  CHECK_FALSE(find_counterexample(PropertyId::t8_disagreement, scope).has_value());
  CHECK_FALSE(find_counterexample(PropertyId::t11_disagreement, scope).has_value());
}

TEST_CASE("open experiments run deterministically") {
  VerificationScope scope;
  scope.carrier_size = 2;
  scope.grid = 2;

  const auto once = find_counterexample(PropertyId::bi_not_right_not_left, scope);
  const auto twice = find_counterexample(PropertyId::bi_not_right_not_left, scope);
  CHECK(once.has_value() == twice.has_value());
  if (once) {
    CHECK(table_key(once->table) == table_key(twice->table));
    CHECK(*once->fuzzy == *twice->fuzzy);
    // the find really is what it claims
    CHECK(check_bi_ideal(once->table, *once->fuzzy, Method::definition).pass);
    CHECK_FALSE(check_right_ideal(once->table, *once->fuzzy, Method::definition).pass);
    CHECK_FALSE(check_left_ideal(once->table, *once->fuzzy, Method::definition).pass);
  }

  const auto off1 = find_counterexample(PropertyId::t11_offslice_disagreement, scope);
  const auto off2 = find_counterexample(PropertyId::t11_offslice_disagreement, scope);
  CHECK(off1.has_value() == off2.has_value());
  if (off1) {
    CHECK(table_key(off1->table) == table_key(off2->table));
    CHECK_FALSE(is_hypersemigroup(off1->table).pass);
  }
}
