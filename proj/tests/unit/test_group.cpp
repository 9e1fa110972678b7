#include <algorithm>

#include "doctest.h"
#include "jordanum/constructions.hpp"
#include "jordanum/error.hpp"
#include "jordanum/group.hpp"
#include "jordanum/matrix.hpp"
#include "jordanum/permutation.hpp"
#include "oracles.hpp"

using namespace jordanum;
using M = ExactMatrix;

namespace {

M T3() { return M{{0L, 1L, 0L}, {0L, 0L, 1L}, {1L, 0L, 0L}}; }
M S3() { return M::diagonal({CycElt(1L), CycElt::zeta(3), CycElt::zeta(3, 2)}); }

Index find(const ClosedGroup<Permutation>& g, const Permutation& p) {
  return static_cast<Index>(std::find(g.elements.begin(), g.elements.end(), p) - g.elements.begin());
}

}  // namespace

TEST_CASE("closure examples") {
  CHECK(close(std::vector<M>{T3()}).order() == 3);
  CHECK(close(std::vector<M>{S3(), T3()}).order() == 27);
  CHECK(close(std::vector<ProjMatrix>{ProjMatrix(S3()), ProjMatrix(T3())}).order() == 9);
  CHECK(hessian_tower()[2].generators.size() == 4);
  CHECK(recipe_group(hessian_tower()[2]).order() == 216);
}

TEST_CASE("closure respects the cap") {
  CHECK_THROWS_AS(close(std::vector<M>{M{{1L, 1L}, {0L, 1L}}}, 100), Error);
  CHECK_THROWS_AS(close(symmetric_generators(5), 100), Error);
}

TEST_CASE("closure is idempotent") {
  const auto g = close(symmetric_generators(4));
  const auto h = close(g.elements);
  CHECK(h.order() == g.order());
  CHECK(fingerprint(h.group) == fingerprint(g.group));
}

TEST_CASE("structure") {
  const auto a5 = close(alternating_generators(5));
  CHECK(a5.group.is_simple());
  CHECK(a5.group.center().size() == 1);
  const auto hess = recipe_group(hessian_tower()[2]);
  CHECK_FALSE(hess.is_simple());
  CHECK(hess.center().size() == 1);
  const auto c6 = close(cyclic_generators(6));
  CHECK(c6.group.is_abelian());
  CHECK(c6.group.center().size() == 6);
}

TEST_CASE("normal closure") {
  const auto s4 = close(symmetric_generators(4));
  CHECK(s4.group.normal_closure({0}).size() == 1);
  const auto v = s4.group.normal_closure({find(s4, Permutation::from_cycles(4, {{1, 2}, {3, 4}}))});
  CHECK(v.size() == 4);
  std::vector<Permutation> klein;
  for (Index x : v) klein.push_back(s4.elements[x]);
  for (const auto& p : klein) CHECK((p * p) == p.identity());
  const auto a5 = close(alternating_generators(5));
  for (Index x = 1; x < a5.order(); x += 7) CHECK(a5.group.normal_closure({x}).size() == 60);
}

TEST_CASE("normal subgroups") {
  CHECK(close(symmetric_generators(4)).group.normal_subgroups().size() == 4);
  CHECK(close(alternating_generators(4)).group.normal_subgroups().size() == 3);
  CHECK(close(cyclic_generators(6)).group.normal_subgroups().size() == 4);
}

TEST_CASE("brute-force Jordan constants") {
  CHECK(jordan_bruteforce(close(alternating_generators(4)).group) == 3);
  CHECK(jordan_bruteforce(close(symmetric_generators(4)).group) == 6);
  for (std::size_t n = 3; n <= 10; ++n) CHECK(jordan_bruteforce(close(dihedral_generators(n)).group) == 2);
  CHECK(jordan_bruteforce(recipe_group(hessian_tower()[2])) == 24);
}

TEST_CASE("normal subgroups are normal and satisfy Lagrange") {
  std::vector<FiniteGroup> groups = {close(symmetric_generators(4)).group, recipe_group(hessian_tower()[2]),
                                     recipe_group(pgl3_klein()), close(alternating_generators(5)).group};
  for (const auto& g : groups) {
    for (const auto& n : g.normal_subgroups()) {
      CHECK(g.order() % n.size() == 0);
      CHECK(g.is_subgroup(n));
      for (Index x = 0; x < g.order(); ++x)
        for (Index y : n) CHECK(std::binary_search(n.begin(), n.end(), g.conj(x, y)));
    }
  }
}

TEST_CASE("normal subgroup enumeration agrees with exhaustive search on small groups") {
  std::vector<FiniteGroup> groups = {close(symmetric_generators(4)).group, close(alternating_generators(4)).group,
                                     close(cyclic_generators(12)).group, recipe_group(dicyclic(6)),
                                     recipe_group(hessian_tower()[0])};
  for (std::size_t n = 3; n <= 8; ++n) groups.push_back(close(dihedral_generators(n)).group);
  for (const auto& g : groups) {
    auto a = g.normal_subgroups();
    auto b = oracle::normal_subgroups_exhaustive(g);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
    CHECK(jordan_bruteforce(g) == oracle::jordan_exhaustive(g));
  }
}

TEST_CASE("projection to PGL") {
  const CycElt w = CycElt::zeta(3);
  const auto scalars = close(std::vector<M>{M::scalar(3, w)});
  CHECK(scalars.order() == 3);
  CHECK(project_to_pgl(scalars).order() == 1);
  const auto st = close(std::vector<M>{S3(), T3()});
  const auto pst = project_to_pgl(st);
  CHECK(pst.order() == 9);
  CHECK(st.order() % pst.order() == 0);
  const auto r = pgl3_a5();
  const auto a5 = close(std::vector<M>{lift_to_unimodular(r.generators[0], 5), lift_to_unimodular(r.generators[1], 2)});
  CHECK(a5.order() == 60);
  CHECK(project_to_pgl(a5).order() == 60);
}

TEST_CASE("relations") {
  const auto r = pgl3_a5();
  const std::vector<ProjMatrix> xy{ProjMatrix(r.generators[0]), ProjMatrix(r.generators[1])};
  CHECK(satisfies_relations(xy, {"x^5", "y^2", "(xy)^3"}, "xy"));
  CHECK_FALSE(satisfies_relations(xy, {"x^2", "y^4"}, "xy"));
  const auto t = pgl2_platonic(CycElt::zeta(4), CycElt(0L));
  const std::vector<ProjMatrix> ba{ProjMatrix(t.B), ProjMatrix(t.A)};
  CHECK(satisfies_relations(ba, {"x^3", "y^2", "(xy)^3"}, "xy"));
  CHECK_THROWS_AS(parse_word("x^", "xy"), Error);
  CHECK_THROWS_AS(parse_word("z", "xy"), Error);
  CHECK(parse_word("(xy)^-1", "xy") == Word{-2, -1});
}

TEST_CASE("fingerprints identify the named groups") {
  CHECK(fingerprint(recipe_group(pgl3_a5())).simple);
  const auto k = fingerprint(recipe_group(pgl3_klein()));
  CHECK(k.order == 168);
  CHECK(k.simple);
  const auto a6 = fingerprint(recipe_group(pgl3_a6()));
  CHECK(a6.order == 360);
  CHECK(a6.simple);
}

TEST_CASE("permutation and matrix S4 agree") {
  const auto perm = close(symmetric_generators(4)).group;
  const auto mat = recipe_group(pgl3_s4_permutation_rep());
  CHECK(fingerprint(perm) == fingerprint(mat));
  CHECK(jordan_bruteforce(perm) == jordan_bruteforce(mat));
}

TEST_CASE("dump lists elements with their orders") {
  const auto g = close(cyclic_generators(3));
  const std::string d = dump(g);
  CHECK(std::count(d.begin(), d.end(), '\n') == 3);
  CHECK(d.rfind("1\t", 0) == 0);
}
