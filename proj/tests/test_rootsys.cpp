#include "doctest.h"

#include <algorithm>
#include <set>

#include "magical/rootsys.hpp"

using namespace magical;

namespace {

// Every type used in the property sweeps, classical ranks up to 8.
std::vector<AlgebraType> sweep_types() {
  std::vector<AlgebraType> ts;
  for (int n = 1; n <= 8; ++n) ts.push_back(AlgebraType::make(Family::A, n));
  for (int n = 2; n <= 8; ++n) ts.push_back(AlgebraType::make(Family::B, n));
  for (int n = 2; n <= 8; ++n) ts.push_back(AlgebraType::make(Family::C, n));
  for (int n = 3; n <= 8; ++n) ts.push_back(AlgebraType::make(Family::D, n));
  ts.push_back(AlgebraType::make(Family::G2, 2));
  ts.push_back(AlgebraType::make(Family::F4, 4));
  ts.push_back(AlgebraType::make(Family::E6, 6));
  ts.push_back(AlgebraType::make(Family::E7, 7));
  ts.push_back(AlgebraType::make(Family::E8, 8));
  return ts;
}

DynkinLabels all_labels(int rank, int value) {
  return DynkinLabels{std::vector<int>(rank, value)};
}

int weight_of(const RootCoords& a, const DynkinLabels& l) {
  int w = 0;
  for (size_t i = 0; i < a.size(); ++i) w += a[i] * l.labels[i];
  return w;
}

}  // namespace

TEST_CASE("positive root counts match the classical formulas") {
  for (const AlgebraType& t : sweep_types()) {
    RootSystem rs = build_root_system(t);
    CAPTURE(t.name());
    CHECK(static_cast<int>(rs.positive_roots.size()) == t.num_positive_roots());
  }
  CHECK(AlgebraType::make(Family::G2, 2).num_positive_roots() == 6);
  CHECK(AlgebraType::make(Family::F4, 4).num_positive_roots() == 24);
  CHECK(AlgebraType::make(Family::E6, 6).num_positive_roots() == 36);
  CHECK(AlgebraType::make(Family::E7, 7).num_positive_roots() == 63);
  CHECK(AlgebraType::make(Family::E8, 8).num_positive_roots() == 120);
}

TEST_CASE("invalid ranks are rejected") {
  CHECK_THROWS_AS(AlgebraType::make(Family::A, 0), std::invalid_argument);
  CHECK_THROWS_AS(AlgebraType::make(Family::B, 1), std::invalid_argument);
  CHECK_THROWS_AS(AlgebraType::make(Family::C, 1), std::invalid_argument);
  CHECK_THROWS_AS(AlgebraType::make(Family::D, 2), std::invalid_argument);
  CHECK_THROWS_AS(AlgebraType::make(Family::E6, 7), std::invalid_argument);
  CHECK(AlgebraType::make(Family::F4, 0).rank == 4);  // rank defaulted
}

TEST_CASE("A3 Cartan matrix") {
  RootSystem rs = build_root_system(AlgebraType::make(Family::A, 3));
  std::vector<std::vector<int>> expected = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  CHECK(rs.cartan == expected);
}

TEST_CASE("F4 has two long and two short simple roots, 24 positive roots") {
  RootSystem rs = build_root_system(AlgebraType::make(Family::F4, 4));
  CHECK(rs.positive_roots.size() == 24);
  CHECK(rs.norm2 == std::vector<int>{2, 2, 4, 4});
  // 12 short + 12 long positive roots.
  int short_count = 0, long_count = 0;
  for (const RootCoords& a : rs.positive_roots) {
    int n2 = rs.norm2_of(a);
    if (n2 == 2) ++short_count;
    if (n2 == 4) ++long_count;
  }
  CHECK(short_count == 12);
  CHECK(long_count == 12);
}

TEST_CASE("G2 roots and Cartan matrix") {
  RootSystem rs = build_root_system(AlgebraType::make(Family::G2, 2));
  std::vector<std::vector<int>> expected = {{2, -1}, {-3, 2}};
  CHECK(rs.cartan == expected);
  std::set<RootCoords> roots(rs.positive_roots.begin(), rs.positive_roots.end());
  std::set<RootCoords> expected_roots = {{1, 0}, {0, 1}, {1, 1},
                                         {2, 1}, {3, 1}, {3, 2}};
  CHECK(roots == expected_roots);
  CHECK(rs.highest_root() == RootCoords{3, 2});
}

TEST_CASE("deterministic order: by height then lexicographic") {
  for (const AlgebraType& t : sweep_types()) {
    RootSystem rs = build_root_system(t);
    CAPTURE(t.name());
    for (size_t k = 1; k < rs.positive_roots.size(); ++k) {
      const RootCoords& a = rs.positive_roots[k - 1];
      const RootCoords& b = rs.positive_roots[k];
      int ha = RootSystem::height(a), hb = RootSystem::height(b);
      CHECK((ha < hb || (ha == hb && a < b)));
    }
    // Simple roots come first.
    for (int i = 0; i < rs.rank(); ++i)
      CHECK(RootSystem::height(rs.positive_roots[i]) == 1);
  }
}

TEST_CASE("index_of and is_root") {
  RootSystem rs = build_root_system(AlgebraType::make(Family::B, 2));
  // B2 positive roots: a1, a2, a1+a2, a1+2a2.
  CHECK(rs.index_of({1, 0}) >= 0);
  CHECK(rs.index_of({1, 2}) >= 0);
  CHECK(rs.index_of({2, 1}) == -1);
  CHECK(rs.is_root({-1, -2}));
  CHECK_FALSE(rs.is_root({1, -1}));
}

TEST_CASE("inner products and coroot pairings are integral and consistent") {
  for (const AlgebraType& t : sweep_types()) {
    RootSystem rs = build_root_system(t);
    CAPTURE(t.name());
    // Symmetry of the bilinear form on all simple-root pairs.
    for (int i = 0; i < rs.rank(); ++i) {
      RootCoords ei(rs.rank(), 0);
      ei[i] = 1;
      for (int j = 0; j < rs.rank(); ++j) {
        RootCoords ej(rs.rank(), 0);
        ej[j] = 1;
        CHECK(rs.inner(ei, ej) == rs.inner(ej, ei));
        CHECK(rs.inner(ei, ej) == rs.cartan[i][j] * rs.norm2[j] / 2);
      }
      CHECK(rs.inner(ei, ei) == rs.norm2[i]);
    }
    // <a, a^vee> = 2 and root lengths take at most two values.
    std::set<int> lengths;
    for (const RootCoords& a : rs.positive_roots) {
      int n2 = rs.norm2_of(a);
      lengths.insert(n2);
      long long lhs = 2LL * rs.inner(a, a);
      CHECK(lhs == 2LL * n2);
      for (int i = 0; i < rs.rank(); ++i) {
        RootCoords ei(rs.rank(), 0);
        ei[i] = 1;
        // 2(a, alpha_i) = <a, alpha_i^vee> * norm2[i].
        CHECK(2 * rs.inner(a, ei) == rs.pair_with_coroot(a, i) * rs.norm2[i]);
      }
    }
    CHECK(lengths.size() <= 2);
  }
}

TEST_CASE("graded dimensions: E8 with the distinguished exceptional labels") {
  RootSystem rs = build_root_system(AlgebraType::make(Family::E8, 8));
  GradedDims gd = graded_dimensions(rs, DynkinLabels{{0, 0, 0, 0, 0, 0, 2, 2}});
  CHECK(gd.dim(0) == 80);
  CHECK(gd.dim(2) == 28);
  CHECK(gd.dim(4) == 27);
  CHECK(gd.dim(6) == 27);
  CHECK(gd.dim(8) == 1);
  CHECK(gd.dim(10) == 1);
  CHECK(gd.dim(12) == 0);
  CHECK(gd.total == 248);
}

TEST_CASE("graded dimensions: F4 (0,0,2,2) weight multiset") {
  RootSystem rs = build_root_system(AlgebraType::make(Family::F4, 4));
  DynkinLabels labels{{0, 0, 2, 2}};
  std::map<int, int> multiset;
  for (const RootCoords& a : rs.positive_roots) multiset[weight_of(a, labels)] += 1;
  std::map<int, int> expected = {{0, 3}, {2, 7}, {4, 6}, {6, 6}, {8, 1}, {10, 1}};
  CHECK(multiset == expected);
  GradedDims gd = graded_dimensions(rs, labels);
  CHECK(gd.dim(0) == 4 + 2 * 3);  // rank + 2 * #weight-0 roots
  CHECK(gd.dim(2) == 7);
  CHECK(gd.dim(-2) == 7);
}

TEST_CASE("graded dimensions: all-zero labels concentrate everything in g_0") {
  for (const AlgebraType& t : sweep_types()) {
    RootSystem rs = build_root_system(t);
    GradedDims gd = graded_dimensions(rs, all_labels(t.rank, 0));
    CAPTURE(t.name());
    CHECK(gd.dim(0) == t.dimension());
    CHECK(gd.dims.size() == 1);
  }
}

TEST_CASE("graded dimensions: symmetry and total, all sweep types x sample labels") {
  for (const AlgebraType& t : sweep_types()) {
    RootSystem rs = build_root_system(t);
    std::vector<DynkinLabels> samples = {all_labels(t.rank, 0), all_labels(t.rank, 1),
                                         all_labels(t.rank, 2)};
    DynkinLabels mixed{std::vector<int>(t.rank, 0)};
    for (int i = 0; i < t.rank; i += 2) mixed.labels[i] = 2;
    samples.push_back(mixed);
    for (const DynkinLabels& l : samples) {
      GradedDims gd = graded_dimensions(rs, l);
      CAPTURE(t.name());
      int sum = 0;
      for (const auto& [j, d] : gd.dims) {
        CHECK(gd.dim(j) == gd.dim(-j));
        sum += d;
      }
      CHECK(sum == t.dimension());
      CHECK(gd.total == t.dimension());
    }
  }
}

TEST_CASE("sl2 multiplicities: distinguished exceptional gradings") {
  SUBCASE("E8") {
    RootSystem rs = build_root_system(AlgebraType::make(Family::E8, 8));
    Sl2Data d = sl2_multiplicities(
        graded_dimensions(rs, DynkinLabels{{0, 0, 0, 0, 0, 0, 2, 2}}));
    CHECK(d.n0 == 52);
    CHECK(d.multiplicity(1) == 1);
    CHECK(d.multiplicity(2) == 0);
    CHECK(d.multiplicity(3) == 26);
    CHECK(d.multiplicity(4) == 0);
    CHECK(d.multiplicity(5) == 1);
    CHECK(d.m_values() == std::vector<int>{1, 3, 5});
  }
  SUBCASE("F4") {
    RootSystem rs = build_root_system(AlgebraType::make(Family::F4, 4));
    Sl2Data d = sl2_multiplicities(graded_dimensions(rs, DynkinLabels{{0, 0, 2, 2}}));
    CHECK(d.n0 == 3);
    CHECK(d.multiplicity(1) == 1);
    CHECK(d.multiplicity(3) == 5);
    CHECK(d.multiplicity(5) == 1);
    CHECK(d.m_values() == std::vector<int>{1, 3, 5});
  }
  SUBCASE("A2 principal") {
    RootSystem rs = build_root_system(AlgebraType::make(Family::A, 2));
    Sl2Data d = sl2_multiplicities(graded_dimensions(rs, DynkinLabels{{2, 2}}));
    CHECK(d.n0 == 0);
    CHECK(d.multiplicity(1) == 1);
    CHECK(d.multiplicity(2) == 1);
  }
}

TEST_CASE("sl2 multiplicities: dimension identity and reconstruction") {
  // Reconstruction: dim g_j = n_0 [j=0] + sum_{m_k >= j/2} n_{2 m_k} for even j.
  for (const AlgebraType& t : sweep_types()) {
    RootSystem rs = build_root_system(t);
    std::vector<DynkinLabels> samples = {all_labels(t.rank, 0), all_labels(t.rank, 2)};
    for (const DynkinLabels& l : samples) {
      GradedDims gd = graded_dimensions(rs, l);
      Sl2Data d = sl2_multiplicities(gd);
      CAPTURE(t.name());
      int dim_sum = d.n0;
      for (const auto& [m, n] : d.summands) dim_sum += n * (2 * m + 1);
      CHECK(dim_sum == t.dimension());
      int top = gd.dims.rbegin()->first;
      for (int j = 0; j <= top; j += 2) {
        int rebuilt = (j == 0) ? d.n0 : 0;
        for (const auto& [m, n] : d.summands)
          if (2 * m >= j) rebuilt += n;
        CHECK(rebuilt == gd.dim(j));
      }
    }
  }
}

TEST_CASE("sl2 multiplicities: rejection of gradings not from an sl2-triple") {
  RootSystem rs = build_root_system(AlgebraType::make(Family::A, 2));
  SUBCASE("odd weights") {
    GradedDims gd = graded_dimensions(rs, DynkinLabels{{1, 0}});
    CHECK(gd.dim(1) > 0);
    CHECK_THROWS_AS(sl2_multiplicities(gd), std::domain_error);
  }
  SUBCASE("negative n_j") {
    // Hand-built symmetric grading with dim g_0 < dim g_2.
    GradedDims gd;
    gd.dims = {{-2, 3}, {0, 2}, {2, 3}};
    gd.total = 8;
    CHECK_THROWS_AS(sl2_multiplicities(gd), std::domain_error);
  }
}

TEST_CASE("exponents: known values") {
  auto exps = [](Family f, int n) {
    return exponents(build_root_system(AlgebraType::make(f, n)));
  };
  CHECK(exps(Family::F4, 4) == std::vector<int>{1, 5, 7, 11});
  CHECK(exps(Family::G2, 2) == std::vector<int>{1, 5});
  CHECK(exps(Family::A, 3) == std::vector<int>{1, 2, 3});
  CHECK(exps(Family::B, 3) == std::vector<int>{1, 3, 5});
  CHECK(exps(Family::C, 4) == std::vector<int>{1, 3, 5, 7});
  CHECK(exps(Family::D, 4) == std::vector<int>{1, 3, 3, 5});
  CHECK(exps(Family::D, 5) == std::vector<int>{1, 3, 4, 5, 7});
  CHECK(exps(Family::E6, 6) == std::vector<int>{1, 4, 5, 7, 8, 11});
  CHECK(exps(Family::E7, 7) == std::vector<int>{1, 5, 7, 9, 11, 13, 17});
  CHECK(exps(Family::E8, 8) == std::vector<int>{1, 7, 11, 13, 17, 19, 23, 29});
}

TEST_CASE("exponents: length, dimension sum, largest = height of highest root") {
  for (const AlgebraType& t : sweep_types()) {
    RootSystem rs = build_root_system(t);
    std::vector<int> exps = exponents(rs);
    CAPTURE(t.name());
    CHECK(static_cast<int>(exps.size()) == t.rank);
    int dim_sum = 0;
    for (int m : exps) dim_sum += 2 * m + 1;
    CHECK(dim_sum == t.dimension());
    CHECK(exps.back() == RootSystem::height(rs.highest_root()));
    CHECK(std::is_sorted(exps.begin(), exps.end()));
  }
}

TEST_CASE("root poset: F4 top chain") {
  RootSystem rs = build_root_system(AlgebraType::make(Family::F4, 4));
  WeightedPoset p = root_poset(rs, DynkinLabels{{0, 0, 2, 2}});
  REQUIRE(p.nodes.size() == 24);
  int top = -1, w8 = -1, w8_count = 0;
  for (size_t k = 0; k < p.nodes.size(); ++k) {
    if (p.nodes[k].weight == 10) top = static_cast<int>(k);
    if (p.nodes[k].weight == 8) {
      w8 = static_cast<int>(k);
      ++w8_count;
    }
  }
  REQUIRE(top >= 0);
  REQUIRE(w8_count == 1);
  CHECK(p.nodes[top].root == rs.highest_root());
  // The unique weight-8 node reaches the top node along simple root a4.
  bool found = false;
  for (const auto& e : p.edges)
    if (e.from == w8 && e.to == top) {
      found = true;
      CHECK(e.simple == 3);
    }
  CHECK(found);
}

TEST_CASE("root poset: G2 principal weights") {
  RootSystem rs = build_root_system(AlgebraType::make(Family::G2, 2));
  WeightedPoset p = root_poset(rs, DynkinLabels{{2, 2}});
  REQUIRE(p.nodes.size() == 6);
  std::multiset<int> weights;
  for (const auto& n : p.nodes) weights.insert(n.weight);
  CHECK(weights == std::multiset<int>{2, 2, 4, 6, 8, 10});
}

TEST_CASE("root poset: A1 is a single node") {
  RootSystem rs = build_root_system(AlgebraType::make(Family::A, 1));
  WeightedPoset p = root_poset(rs, DynkinLabels{{2}});
  REQUIRE(p.nodes.size() == 1);
  CHECK(p.nodes[0].weight == 2);
  CHECK(p.edges.empty());
}

TEST_CASE("root poset: edges connect by simple-root steps, graded by height") {
  for (const AlgebraType& t : sweep_types()) {
    RootSystem rs = build_root_system(t);
    WeightedPoset p = root_poset(rs, all_labels(t.rank, 2));
    CAPTURE(t.name());
    CHECK(p.nodes.size() == rs.positive_roots.size());
    for (const auto& e : p.edges) {
      CHECK(p.nodes[e.to].height == p.nodes[e.from].height + 1);
      RootCoords stepped = p.nodes[e.from].root;
      stepped[e.simple] += 1;
      CHECK(stepped == p.nodes[e.to].root);
    }
    // Every non-simple positive root is reachable from below (poset is
    // connected downward).
    std::set<int> targets;
    for (const auto& e : p.edges) targets.insert(e.to);
    for (size_t k = 0; k < p.nodes.size(); ++k)
      if (p.nodes[k].height > 1) CHECK(targets.count(static_cast<int>(k)) == 1);
  }
}

TEST_CASE("distinguished even label vectors give even gradings") {
  // Representative weighted diagrams arising in the classification: the
  // all-2 (principal) diagram for every type, single-2 diagrams on the
  // nodes used by the hermitian family, the first-(p-1)-nodes-2 family for
  // B/D, and the four fixed exceptional diagrams.
  struct Sample {
    AlgebraType t;
    std::vector<int> labels;
  };
  std::vector<Sample> samples;
  for (const AlgebraType& t : sweep_types())
    samples.push_back({t, std::vector<int>(t.rank, 2)});
  samples.push_back({AlgebraType::make(Family::A, 3), {0, 2, 0}});
  samples.push_back({AlgebraType::make(Family::B, 3), {2, 0, 0}});
  samples.push_back({AlgebraType::make(Family::C, 3), {0, 0, 2}});
  samples.push_back({AlgebraType::make(Family::D, 4), {0, 0, 0, 2}});
  samples.push_back({AlgebraType::make(Family::D, 5), {2, 0, 0, 0, 0}});
  samples.push_back({AlgebraType::make(Family::E7, 7), {0, 0, 0, 0, 0, 0, 2}});
  samples.push_back({AlgebraType::make(Family::B, 4), {2, 2, 0, 0}});
  samples.push_back({AlgebraType::make(Family::D, 6), {2, 2, 2, 0, 0, 0}});
  samples.push_back({AlgebraType::make(Family::E6, 6), {0, 0, 2, 2, 0, 0}});
  samples.push_back({AlgebraType::make(Family::E7, 7), {2, 2, 0, 0, 0, 0, 0}});
  samples.push_back({AlgebraType::make(Family::E8, 8), {0, 0, 0, 0, 0, 0, 2, 2}});
  samples.push_back({AlgebraType::make(Family::F4, 4), {0, 0, 2, 2}});
  for (const Sample& s : samples) {
    RootSystem rs = build_root_system(s.t);
    GradedDims gd = graded_dimensions(rs, DynkinLabels{s.labels});
    CAPTURE(s.t.name());
    for (const auto& [j, d] : gd.dims) CHECK(j % 2 == 0);
    CHECK_NOTHROW(sl2_multiplicities(gd));
  }
}
