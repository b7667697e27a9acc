#include <doctest.h>

#include <set>

#include "ahsp/lattice_enum.hpp"
#include "ahsp/oracle.hpp"

using namespace ahsp;

TEST_CASE("hidden function structure") {
  GroupSpec g({4, 3});
  Subgroup k = Subgroup::span(g, {GroupElement(g, {2, 0})});
  HiddenOracle o = build_hidden_function(g, k, 42);

  std::set<std::vector<i64>> values;
  std::map<std::vector<i64>, int> counts;
  for (i64 x = 0; x < g.order(); ++x) {
    GroupElement v = o.query(GroupElement(g, g.coords_of(x)));
    values.insert(v.coords());
    counts[v.coords()]++;
  }
  CHECK(values.size() == 6);  // |G| / |K| cosets
  for (const auto& [v, c] : counts) CHECK(c == 2);
  CHECK(o.query_count() == 12);
}

TEST_CASE("constant and injective extremes") {
  GroupSpec g({2, 2});
  HiddenOracle constant = build_hidden_function(g, Subgroup::full(g), 1);
  GroupElement f0 = constant.query(GroupElement::zero(g));
  for (i64 x = 1; x < g.order(); ++x)
    CHECK(constant.query(GroupElement(g, g.coords_of(x))) == f0);

  HiddenOracle inj = build_hidden_function(g, Subgroup::trivial(g), 2);
  std::set<std::vector<i64>> values;
  for (i64 x = 0; x < g.order(); ++x)
    values.insert(inj.query(GroupElement(g, g.coords_of(x))).coords());
  CHECK(values.size() == static_cast<std::size_t>(g.order()));
}

TEST_CASE("query determinism and coset behavior") {
  GroupSpec g({4, 3});
  Subgroup k = Subgroup::span(g, {GroupElement(g, {2, 0})});
  HiddenOracle o = build_hidden_function(g, k, 5);

  GroupElement x(g, {1, 2});
  u64 before = o.query_count();
  GroupElement v1 = o.query(x);
  GroupElement v2 = o.query(x);
  CHECK(v1 == v2);
  CHECK(o.query_count() == before + 2);

  GroupElement same_coset = x + GroupElement(g, {2, 0});
  CHECK(o.query(same_coset) == v1);
  GroupElement other_coset = x + GroupElement(g, {1, 0});
  CHECK(o.query(other_coset) != v1);
}

TEST_CASE("verify_hiding accepts the instance and rejects wrong subgroups") {
  GroupSpec g({4, 3});
  Subgroup k = Subgroup::span(g, {GroupElement(g, {2, 0})});
  HiddenOracle o = build_hidden_function(g, k, 9);

  u64 queries_before = o.query_count();
  CHECK(verify_hiding(o, k));
  CHECK_FALSE(verify_hiding(o, Subgroup::trivial(g)));
  CHECK_FALSE(verify_hiding(o, Subgroup::full(g)));
  CHECK(o.query_count() == queries_before);  // meta channel only
  CHECK(o.meta_count() > 0);

  HiddenOracle constant = build_hidden_function(g, Subgroup::full(g), 3);
  CHECK(verify_hiding(constant, Subgroup::full(g)));
}

TEST_CASE("subfunctions hide the projected subgroups") {
  GroupSpec g({4, 3});
  auto comps = sylow_decompose(g);
  Subgroup k = Subgroup::span(g, {GroupElement(g, {2, 0})});
  HiddenOracle o = build_hidden_function(g, k, 21);

  HiddenOracle f1 = o.subfunction(comps, 0);
  CHECK(f1.domain().moduli() == std::vector<i64>{4});
  CHECK(f1.codomain() == g);
  CHECK(f1.query(GroupElement::zero(f1.domain())) ==
        o.query(GroupElement::zero(g)));
  CHECK(verify_hiding(f1, project_subgroup(k, comps[0])));
  CHECK(f1.query_count() == 1);  // independent counter

  HiddenOracle f2 = o.subfunction(comps, 1);
  CHECK(verify_hiding(f2, project_subgroup(k, comps[1])));

  CHECK_THROWS_AS(o.subfunction(comps, 2), std::invalid_argument);

  // m = 1: the single subfunction behaves like f itself
  GroupSpec p({2, 2});
  auto pcomps = sylow_decompose(p);
  Subgroup pk = Subgroup::span(p, {GroupElement(p, {1, 1})});
  HiddenOracle po = build_hidden_function(p, pk, 4);
  HiddenOracle pf = po.subfunction(pcomps, 0);
  for (i64 x = 0; x < p.order(); ++x)
    CHECK(pf.query(GroupElement(p, p.coords_of(x))) ==
          po.query(GroupElement(p, p.coords_of(x))));
}

TEST_CASE("subfunction hiding across an exhaustive corpus") {
  for (const auto& g : {GroupSpec({4, 3}), GroupSpec({2, 9, 5})}) {
    auto comps = sylow_decompose(g);
    for (const auto& k : all_subgroups(g)) {
      HiddenOracle o = build_hidden_function(g, k, 1234);
      CHECK(verify_hiding(o, k));
      for (std::size_t i = 0; i < comps.size(); ++i) {
        HiddenOracle oi = o.subfunction(comps, i);
        CHECK(verify_hiding(oi, project_subgroup(k, comps[i])));
      }
    }
  }
}

TEST_CASE("verify_hiding refuses oversized domains") {
  GroupSpec g({64, 64, 2});  // order 8192
  HiddenOracle o = build_hidden_function(g, Subgroup::trivial(g), 0);
  CHECK_THROWS_AS(verify_hiding(o, Subgroup::trivial(g)),
                  std::invalid_argument);
}
