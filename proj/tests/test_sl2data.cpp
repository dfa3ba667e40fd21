#include "magical/sl2data.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "magical/classify.hpp"
#include "magical/partitions.hpp"
#include "magical/rootsys.hpp"

using namespace magical;

namespace {

AlgebraType ty(Family f, int rank) { return AlgebraType::make(f, rank); }

MagicalCaseId id1(Family f, int rank) {
  return {MagicalCase::case1, ty(f, rank), 0};
}
MagicalCaseId id2(Family f, int rank, bool fork = false) {
  return {MagicalCase::case2, ty(f, rank), 0, fork};
}
MagicalCaseId id3(Family f, int rank, int p) {
  return {MagicalCase::case3, ty(f, rank), p};
}
MagicalCaseId id4(Family f) { return {MagicalCase::case4, ty(f, 0), 0}; }

using Summands = std::vector<std::pair<int, int>>;

}  // namespace

TEST_CASE("record lookup and identifiers") {
  // The two even-orthogonal families of rank 4 are distinct records.
  const MagicalRecord first = magical_record(id2(Family::D, 4));
  const MagicalRecord fork = magical_record(id2(Family::D, 4, true));
  CHECK(first.case_id.to_string() == "Case 2 (D4)");
  CHECK(fork.case_id.to_string() == "Case 2 (D4, fork)");
  CHECK(first.c_type.name() == "so(5,C)");
  CHECK(fork.c_type.name() == "sp(4,C)");
  CHECK(first.diagram.labels == std::vector<int>{2, 0, 0, 0});
  CHECK(fork.diagram.labels != first.diagram.labels);

  // Ids that name no family are rejected.
  CHECK_THROWS_AS(magical_record(id2(Family::A, 4)), std::invalid_argument);
  CHECK_THROWS_AS(magical_record(id2(Family::C, 2)), std::invalid_argument);
  CHECK_THROWS_AS(magical_record(id3(Family::B, 4, 2)), std::invalid_argument);
  CHECK_THROWS_AS(magical_record(id3(Family::B, 4, 5)), std::invalid_argument);
  CHECK_THROWS_AS(magical_record(id3(Family::D, 5, 5)), std::invalid_argument);
  CHECK_THROWS_AS(magical_record({MagicalCase::case1, ty(Family::A, 2), 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(magical_record({MagicalCase::case1, ty(Family::A, 2), 0, true}),
                  std::invalid_argument);
  CHECK_THROWS_AS(magical_record(id4(Family::G2)), std::invalid_argument);
}

TEST_CASE("split principal records") {
  const MagicalRecord a3 = magical_record(id1(Family::A, 3));
  CHECK(a3.sl2_data.n0 == 0);
  CHECK(a3.sl2_data.summands == Summands{{1, 1}, {2, 1}, {3, 1}});
  CHECK(a3.c_type.dimension() == 0);
  CHECK(a3.g0_type.dimension() == 3);
  CHECK(a3.ge_type.name() == "sl(4,C)");
  CHECK(a3.m_c == 0);
  CHECK(a3.cayley_real_form.dimension() == 3);
  CHECK(real_rank(a3.canonical_real_form) == 3);
  CHECK(real_rank(a3.cayley_real_form) == 3);
  CHECK(a3.theta.description() == "Borel subgroup");

  // D4 repeats the middle exponent; the record matches the root system.
  const MagicalRecord d4 = magical_record(id1(Family::D, 4));
  CHECK(d4.sl2_data.summands == Summands{{1, 1}, {3, 2}, {5, 1}});
  CHECK(d4.ge_exponents == std::vector<int>{1, 3, 3, 5});

  // The stored exponent multisets agree with the root-system layer.
  for (const Family f : {Family::A, Family::B, Family::C, Family::D,
                         Family::G2, Family::F4, Family::E6, Family::E7,
                         Family::E8}) {
    const int rank = f == Family::A   ? 7
                     : f == Family::B ? 8
                     : f == Family::C ? 8
                     : f == Family::D ? 8
                                      : 0;
    const MagicalRecord rec = magical_record(id1(f, rank));
    const RootSystem rs = build_root_system(rec.case_id.type);
    const std::string name = rec.case_id.type.name();
    INFO("type ", name);
    CHECK(rec.ge_exponents == exponents(rs));
  }
}

TEST_CASE("hermitian records") {
  // Middle-node row of A5: 8 trivial summands, 9 adjoint-weight-2 ones.
  const MagicalRecord a5 = magical_record(id2(Family::A, 5));
  CHECK(a5.sl2_data.n0 == 8);
  CHECK(a5.sl2_data.summands == Summands{{1, 9}});
  CHECK(a5.c_type.name() == "sl(3,C)");
  CHECK(a5.c_real.compact());
  CHECK(a5.c_real.dimension() == 8);
  CHECK(a5.g0_type.dimension() == 17);
  CHECK(a5.cayley_real_form.name() == "gl(1,R) + sl(3,C)_R");
  CHECK(a5.cayley_real_form.dimension() == 17);
  CHECK(a5.m_c == 1);
  CHECK(a5.ge_type.dimension() == 3);
  CHECK(real_rank(a5.canonical_real_form) == 3);  // su(3,3)
  CHECK(real_rank(a5.cayley_real_form) == 3);     // R + sl(3,C)

  // B2: the centralizer is a line.
  const MagicalRecord b2 = magical_record(id2(Family::B, 2));
  CHECK(b2.sl2_data.n0 == 1);
  CHECK(b2.sl2_data.summands == Summands{{1, 3}});
  CHECK(b2.c_type.dimension() == 1);
  CHECK(b2.c_has_central_line);

  const MagicalRecord c3 = magical_record(id2(Family::C, 3));
  CHECK(c3.sl2_data.n0 == 3);
  CHECK(c3.sl2_data.summands == Summands{{1, 6}});
  CHECK(c3.c_type.name() == "so(3,C)");
  CHECK(c3.cayley_real_form.name() == "gl(1,R) + sl(3,R)");
  CHECK_FALSE(c3.c_has_central_line);

  const MagicalRecord d5 = magical_record(id2(Family::D, 5));
  CHECK(d5.sl2_data.n0 == 21);
  CHECK(d5.sl2_data.summands == Summands{{1, 8}});
  CHECK(d5.c_type.name() == "so(7,C)");

  const MagicalRecord d4f = magical_record(id2(Family::D, 4, true));
  CHECK(d4f.sl2_data.n0 == 10);
  CHECK(d4f.sl2_data.summands == Summands{{1, 6}});
  CHECK(d4f.c_real.name() == "sp(4,0)");
  CHECK(d4f.cayley_real_form.name() == "gl(1,R) + su*(4)");
  CHECK(d4f.canonical_real_form.name() == "so*(8)");

  const MagicalRecord e7 = magical_record(id2(Family::E7, 0));
  CHECK(e7.sl2_data.n0 == 52);
  CHECK(e7.sl2_data.summands == Summands{{1, 27}});
  CHECK(e7.c_type.name() == "f4(C)");
  CHECK(e7.c_real.name() == "f4^-52");
  CHECK(e7.c_real.compact());
  CHECK(e7.cayley_real_form.name() == "gl(1,R) + e6^-26");
  CHECK(real_rank(e7.canonical_real_form) == 3);  // e7^-25
  CHECK(real_rank(e7.cayley_real_form) == 3);     // R + e6^-26

  // In every hermitian record the weight-two multiplicity is half the
  // codimension of the zero block.
  for (const CatalogEntry& e : magical_catalog(8)) {
    if (e.id.which != MagicalCase::case2 || e.fork_twin) continue;
    const MagicalRecord rec = magical_record(e.id);
    const std::string name = e.id.to_string();
    INFO("row ", name);
    REQUIRE(rec.sl2_data.summands.size() == 1);
    CHECK(rec.sl2_data.summands[0].first == 1);
    CHECK(2 * rec.sl2_data.summands[0].second ==
          e.id.type.dimension() - rec.g0_type.dimension());
  }
}

TEST_CASE("orthogonal flag records") {
  // so(9) with a three-dimensional flag part.
  const MagicalRecord b43 = magical_record(id3(Family::B, 4, 3));
  CHECK(b43.sl2_data.n0 == 6);
  CHECK(b43.sl2_data.summands == Summands{{1, 1}, {2, 4}, {3, 1}});
  CHECK(b43.c_type.name() == "so(4,C)");
  CHECK(b43.m_c == 2);
  CHECK(b43.ge_type.name() == "so(5,C)");
  CHECK(b43.ge_exponents == std::vector<int>{1, 3});
  // dim so(9) = dim c + the module dimensions: 36 = 6 + 3 + 4*5 + 7.
  CHECK(ty(Family::B, 4).dimension() ==
        b43.c_type.dimension() + 3 + 4 * 5 + 7);
  CHECK(b43.theta.flag_dims == std::vector<int>{1, 2, 7, 8, 9});
  CHECK(b43.theta.description() ==
        "stabilizer of an isotropic flag of dimensions (1, 2, 7, 8, 9)");

  // Even p merges the repeated weight into the odd chain: so(9), p = 4.
  const MagicalRecord b44 = magical_record(id3(Family::B, 4, 4));
  CHECK(b44.sl2_data.n0 == 1);
  CHECK(b44.sl2_data.summands == Summands{{1, 1}, {3, 3}, {5, 1}});
  CHECK(b44.c_type.dimension() == 1);
  CHECK(b44.c_has_central_line);  // c = so(2,C)
  CHECK(b44.m_c == 3);

  const MagicalRecord d54 = magical_record(id3(Family::D, 5, 4));
  CHECK(d54.sl2_data.n0 == 3);
  CHECK(d54.sl2_data.summands == Summands{{1, 1}, {3, 4}, {5, 1}});
  CHECK(d54.c_type.name() == "so(3,C)");
  CHECK_FALSE(d54.c_has_central_line);
  CHECK(real_rank(d54.canonical_real_form) == 4);  // so(4,6)
  CHECK(real_rank(d54.cayley_real_form) == 4);     // R^3 + so(1,3)
}

TEST_CASE("quaternionic records") {
  const MagicalRecord f4 = magical_record(id4(Family::F4));
  CHECK(f4.sl2_data.n0 == 3);
  CHECK(f4.sl2_data.summands == Summands{{1, 1}, {3, 5}, {5, 1}});
  CHECK(f4.c_type.name() == "so(3,C)");
  CHECK(f4.ge_type.name() == "g2(C)");
  CHECK(f4.ge_type.dimension() == 14);
  CHECK(f4.ge_exponents == std::vector<int>{1, 5});
  CHECK(f4.m_c == 3);
  CHECK(f4.g0_type.dimension() == 10);
  CHECK(f4.cayley_real_form.name() == "gl(1,R) + gl(1,R) + sl(3,R)");
  CHECK(real_rank(f4.cayley_real_form) == 4);
  CHECK(real_rank(f4.canonical_real_form) == 4);  // the split form
  CHECK(f4.theta.description() ==
        "parabolic marking the two long simple roots of the restricted f4 "
        "system");

  const MagicalRecord e6 = magical_record(id4(Family::E6));
  CHECK(e6.sl2_data.n0 == 8);
  CHECK(e6.sl2_data.summands == Summands{{1, 1}, {3, 8}, {5, 1}});
  CHECK(e6.c_type.name() == "sl(3,C)");
  CHECK(e6.c_real.name() == "s(u(3,0))");
  CHECK(e6.g0_type.dimension() == 18);

  const MagicalRecord e7 = magical_record(id4(Family::E7));
  CHECK(e7.sl2_data.n0 == 21);
  CHECK(e7.sl2_data.summands == Summands{{1, 1}, {3, 14}, {5, 1}});
  CHECK(e7.c_type.name() == "sp(6,C)");
  CHECK(e7.cayley_real_form.name() == "gl(1,R) + gl(1,R) + su*(6)");

  const MagicalRecord e8 = magical_record(id4(Family::E8));
  CHECK(e8.sl2_data.n0 == 52);
  CHECK(e8.sl2_data.summands == Summands{{1, 1}, {3, 26}, {5, 1}});
  CHECK(e8.c_type.name() == "f4(C)");
  CHECK(e8.g0_type.dimension() == 80);
  CHECK(e8.cayley_real_form.name() == "gl(1,R) + gl(1,R) + e6^-26");
  CHECK(real_rank(e8.canonical_real_form) == 4);  // e8^-24
  CHECK(real_rank(e8.cayley_real_form) == 4);     // 2 + rank of e6^-26
}

TEST_CASE("real ranks") {
  CHECK(real_rank(RealFormId::sl_real(6)) == 5);
  CHECK(real_rank(RealFormId::su_quaternionic(3)) == 2);  // su*(6)
  CHECK(real_rank(RealFormId::su(2, 2)) == 2);
  CHECK(real_rank(RealFormId::so(3, 6)) == 3);
  CHECK(real_rank(RealFormId::so_quaternionic(4)) == 2);  // so*(8)
  CHECK(real_rank(RealFormId::sp_real(4)) == 4);
  CHECK(real_rank(RealFormId::sp(1, 2)) == 1);
  CHECK(real_rank(RealFormId::exceptional("g2^2")) == 2);
  CHECK(real_rank(RealFormId::exceptional("f4^-20")) == 1);
  CHECK(real_rank(RealFormId::exceptional("e6^-14")) == 2);
  CHECK(real_rank(RealFormId::exceptional("e6^-26")) == 2);
  CHECK(real_rank(RealFormId::exceptional("e7^-5")) == 4);
  CHECK(real_rank(RealFormId::exceptional("e8^-24")) == 4);

  using K = FactorKind;
  // R^2 + sl(3,R) has a four-dimensional split torus.
  const ReductiveType r2sl3 = ReductiveType::make(
      {{K::gl_R, 1}, {K::gl_R, 1}, {K::sl_R, 3}});
  CHECK(real_rank(r2sl3) == 4);
  CHECK(real_rank(ReductiveType::make({{K::su_star, 6}})) == 2);
  CHECK(real_rank(ReductiveType::make({{K::sl_CR, 3}})) == 2);
  CHECK(real_rank(ReductiveType::make({{K::so_star, 8}})) == 2);
  CHECK(real_rank(ReductiveType::make({{K::sp_pq, 2, 4}})) == 1);
  // A determinant-one wrapper removes one split direction, compact
  // directions count zero.
  CHECK(real_rank(ReductiveType::make({{K::gl_R, 3}}, true)) == 2);
  CHECK(real_rank(ReductiveType::make({{K::u_pq, 3, 0}}, true)) == 0);
  CHECK(real_rank(ReductiveType::make({}, false, 5)) == 0);
  CHECK(real_rank(ReductiveType::make({{K::exc_real, 4, -52}})) == 0);
  CHECK(real_rank(ReductiveType::make({{K::exc_real, 6, -26}})) == 2);
}

TEST_CASE("record cross-checks over the whole catalog") {
  int records = 0;
  for (const CatalogEntry& e : magical_catalog(8)) {
    if (e.fork_twin) continue;  // same record as the primary labeling
    const MagicalRecord rec = magical_record(e.id);
    CHECK(rec.diagram.labels == e.labels.labels);
    CHECK(rec.canonical_real_form == e.canonical_form);
    const RecordReport report = check_record(rec);
    const std::string row = e.id.to_string();
    const std::string failure = report.first_failure();
    INFO("row ", row, ": ", failure);
    CHECK(report.all_passed());
    CHECK(report.checks.size() == 10);
    records += 1;
  }
  CHECK(records >= 90);

  // Every identity also holds for the flag families beyond rank 8: the
  // closed forms stay consistent with the root-system layer up to so(17).
  for (int n = 3; n <= 8; ++n)
    for (int p = 3; p <= n; ++p) {
      const MagicalRecord rec = magical_record(id3(Family::B, n, p));
      const std::string row = rec.case_id.to_string();
      const std::string failure = check_record(rec).first_failure();
      INFO("row ", row, ": ", failure);
      CHECK(failure.empty());
    }
  for (int n = 4; n <= 8; ++n)
    for (int p = 3; p <= n - 1; ++p) {
      const MagicalRecord rec = magical_record(id3(Family::D, n, p));
      const std::string row = rec.case_id.to_string();
      const std::string failure = check_record(rec).first_failure();
      INFO("row ", row, ": ", failure);
      CHECK(failure.empty());
    }
}

TEST_CASE("record checks notice corrupted data") {
  MagicalRecord rec = magical_record(id3(Family::B, 4, 3));
  rec.sl2_data.n0 += 1;
  const RecordReport report = check_record(rec);
  CHECK_FALSE(report.all_passed());
  CHECK(report.first_failure().find("trivial multiplicity") == 0);

  MagicalRecord rec2 = magical_record(id2(Family::A, 5));
  rec2.m_c = 2;
  CHECK_FALSE(check_record(rec2).all_passed());

  MagicalRecord rec3 = magical_record(id1(Family::G2, 0));
  rec3.theta.which = MagicalCase::case2;
  CHECK_FALSE(check_record(rec3).all_passed());
}

TEST_CASE("parabolic descriptors") {
  CHECK(theta_structure(id1(Family::E8, 0)).description() == "Borel subgroup");
  CHECK(theta_structure(id2(Family::C, 4)).description() ==
        "maximal parabolic with abelian nilradical");
  const ThetaDescriptor so36 = theta_structure(id3(Family::B, 4, 3));
  CHECK(so36.flag_dims == std::vector<int>{1, 2, 7, 8, 9});
  const ThetaDescriptor so412 = theta_structure(id3(Family::D, 8, 4));
  CHECK(so412.flag_dims == std::vector<int>{1, 2, 3, 13, 14, 15, 16});
  const ThetaDescriptor quat = theta_structure(id4(Family::E7));
  CHECK(quat.which == MagicalCase::case4);
  CHECK(quat.flag_dims.empty());
  // The record stores the same descriptor.
  CHECK(magical_record(id4(Family::E7)).theta == quat);
}
