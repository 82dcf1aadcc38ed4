#include <catch2/catch_amalgamated.hpp>

#include "lrlc/coloring.hpp"

using namespace lrlc;

TEST_CASE("amalgam profile totals") {
  auto p = amalgam_profile(2, 4);
  CHECK(p.total_of(EdgeKind::AYZ) == 8);
  CHECK(p.total_of(EdgeKind::BXZ) == 8);
  CHECK(p.total_of(EdgeKind::GXY) == 8);
  CHECK(p.total_of(EdgeKind::ABZ) == 8);
  CHECK(p.total_of(EdgeKind::AGY) == 8);
  CHECK(p.total_of(EdgeKind::BGX) == 8);
  CHECK(p.total_of(EdgeKind::ABG) == 8);
  long long sum = 0;
  for (auto t : p.total) sum += t;
  CHECK(sum == 4 * 4 * 4 - 2 * 2 * 2);

  auto q = amalgam_profile(1, 2);
  CHECK(q.total_of(EdgeKind::AYZ) == 1);
  CHECK(q.total_of(EdgeKind::ABZ) == 1);
  CHECK(q.total_of(EdgeKind::ABG) == 1);
  sum = 0;
  for (auto t : q.total) sum += t;
  CHECK(sum == 7);
}

TEST_CASE("amalgam profile at n = 2m sums to 7m^3") {
  for (int m = 1; m <= 12; ++m) {
    auto p = amalgam_profile(m, 2 * m);
    long long sum = 0;
    for (auto t : p.total) sum += t;
    CHECK(sum == 7LL * m * m * m);
  }
}

TEST_CASE("amalgam profile rejects n < 2m") {
  CHECK_THROWS_AS(amalgam_profile(2, 3), InfeasibleOrder);
  CHECK_THROWS_AS(amalgam_profile(3, 5), InfeasibleOrder);
}

TEST_CASE("necessity check and witness") {
  auto w = necessity_check(2, 3);
  CHECK_FALSE(w.feasible);
  CHECK(w.lhs == 1);
  CHECK(w.rhs == 4);

  w = necessity_check(2, 4);
  CHECK(w.feasible);
  CHECK(w.lhs == 8);
  CHECK(w.rhs == 8);

  for (int m = 1; m <= 5; ++m) CHECK_FALSE(necessity_check(m, m).feasible);
}

TEST_CASE("coloring parameters") {
  ColoringParameters p24(2, 4);
  CHECK(p24.a == 1);
  CHECK(p24.j == 0);
  ColoringParameters p26(2, 6);
  CHECK(p26.a == 0);
  ColoringParameters p38(3, 8);
  CHECK(p38.a == 1);
  ColoringParameters p2_10(2, 10);
  CHECK(p2_10.a == -1);
  CHECK(p2_10.a_clamped == 0);
}

TEST_CASE("stage one rejects m = 1") {
  CHECK_THROWS_AS(coloring_stage_one(amalgam_profile(1, 4)), MalformedInput);
}

TEST_CASE("stage one (2,4): boundary case pattern") {
  // n = 4 = 2m, n = 1 mod 3: residue pattern with a = 1, values in {0,1},
  // per-color stage-one sum 3a-1 = 2 = 3m-n, and all column sums already 8.
  auto t = coloring_stage_one(amalgam_profile(2, 4));
  for (int i = 5; i <= 16; ++i) {
    const int r = i % 3;
    CHECK(t.get(i, EdgeKind::AYZ) == (r == 1 ? 0 : 1));
    CHECK(t.get(i, EdgeKind::BXZ) == (r == 2 ? 0 : 1));
    CHECK(t.get(i, EdgeKind::GXY) == (r == 0 ? 0 : 1));
    CHECK(t.get(i, EdgeKind::AYZ) + t.get(i, EdgeKind::BXZ) + t.get(i, EdgeKind::GXY) == 2);
    CHECK(t.get(i, EdgeKind::AYZ) + t.get(i, EdgeKind::BXZ) <= 2);
  }
  for (int i = 1; i <= 4; ++i) {
    CHECK(t.get(i, EdgeKind::AYZ) == 0);
    CHECK(t.get(i, EdgeKind::BXZ) == 0);
    CHECK(t.get(i, EdgeKind::GXY) == 0);
  }
  for (EdgeKind e : {EdgeKind::AYZ, EdgeKind::BXZ, EdgeKind::GXY}) {
    long long sum = 0;
    for (int i = 1; i <= 16; ++i) sum += t.get(i, e);
    CHECK(sum == 8);
  }
}

TEST_CASE("stage one (2,6): main case, entries in [0,1]") {
  auto t = coloring_stage_one(amalgam_profile(2, 6));
  for (int i = 5; i <= 36; ++i)
    for (EdgeKind e : {EdgeKind::AYZ, EdgeKind::BXZ, EdgeKind::GXY}) {
      CHECK(t.get(i, e) >= 0);
      CHECK(t.get(i, e) <= 1);
    }
  for (EdgeKind e : {EdgeKind::AYZ, EdgeKind::BXZ, EdgeKind::GXY}) {
    long long sum = 0;
    for (int i = 1; i <= 36; ++i) sum += t.get(i, e);
    CHECK(sum == 16);
  }
}

TEST_CASE("stage one (3,8): n = 2 mod 3 boundary case, values in {0,1}") {
  auto t = coloring_stage_one(amalgam_profile(3, 8));
  const int m = 3, n = 8;
  for (int i = 10; i <= 64; ++i) {
    int ayz = t.get(i, EdgeKind::AYZ), bxz = t.get(i, EdgeKind::BXZ),
        gxy = t.get(i, EdgeKind::GXY);
    CHECK((ayz == 0 || ayz == 1));
    CHECK((bxz == 0 || bxz == 1));
    CHECK((gxy == 0 || gxy == 1));
    CHECK(ayz + bxz + gxy >= 3 * m - n);
    CHECK(ayz + bxz <= m);
    CHECK(ayz + gxy <= m);
    CHECK(bxz + gxy <= m);
  }
}

TEST_CASE("stage two substitutions at (2,4)") {
  auto t = coloring_stage_two(coloring_stage_one(amalgam_profile(2, 4)));
  for (int i = 5; i <= 16; ++i) {
    const int ayz = t.get(i, EdgeKind::AYZ), bxz = t.get(i, EdgeKind::BXZ);
    CHECK(t.get(i, EdgeKind::ABZ) == 2 - ayz - bxz);
    if (ayz == 1 && bxz == 1) CHECK(t.get(i, EdgeKind::ABZ) == 0);
    if (ayz == 1 && bxz == 0) CHECK(t.get(i, EdgeKind::ABZ) == 1);
  }
  for (int i = 1; i <= 4; ++i) {
    CHECK(t.get(i, EdgeKind::ABZ) == 0);
    CHECK(t.get(i, EdgeKind::AGY) == 0);
    CHECK(t.get(i, EdgeKind::BGX) == 0);
  }
}

TEST_CASE("stage three at (2,4)") {
  auto t = build_color_table(2, 4);
  for (int i = 1; i <= 4; ++i) CHECK(t.get(i, EdgeKind::ABG) == 2);
  for (int i = 5; i <= 16; ++i) {
    // stage-one sum is 2 for every kappa_2 color here, so ABG = 4 - 6 + 2 = 0
    CHECK(t.get(i, EdgeKind::ABG) == 0);
  }
}

TEST_CASE("stage two and three reject condition-1 violations") {
  auto t = coloring_stage_one(amalgam_profile(2, 4));
  t.at(5, EdgeKind::AYZ) = 2;
  t.at(5, EdgeKind::BXZ) = 2;  // pairwise sum 4 > m = 2
  CHECK_THROWS_AS(coloring_stage_two(t), InternalInvariantError);
  CHECK_THROWS_AS(coloring_stage_three(t), InternalInvariantError);
}

TEST_CASE("validate_table passes full pipeline output") {
  CHECK(validate_table(build_color_table(2, 4)).valid);
  CHECK(validate_table(build_color_table(3, 6)).valid);
}

TEST_CASE("validate_table catches a perturbed ABG pair") {
  auto t = build_color_table(2, 4);
  t.at(1, EdgeKind::ABG) += 1;
  t.at(2, EdgeKind::ABG) -= 1;  // column sum preserved, alpha-degrees broken
  auto r = validate_table(t);
  CHECK_FALSE(r.valid);
  bool saw_degree = false;
  for (const auto& v : r.violations)
    if (v.find("deg(alpha)") != std::string::npos || v.find("ABG") != std::string::npos)
      saw_degree = true;
  CHECK(saw_degree);
}

TEST_CASE("pipeline identities over a small grid") {
  for (int m = 2; m <= 8; ++m)
    for (int n = 2 * m; n <= 24; ++n) {
      auto t = build_color_table(m, n);
      auto r = validate_table(t);
      INFO("m=" << m << " n=" << n);
      if (!r.valid) INFO(r.violations[0]);
      REQUIRE(r.valid);
    }
}

TEST_CASE("CSV dump golden at (2,4)") {
  const std::string expected =
      "color,AYZ,BXZ,GXY,ABZ,AGY,BGX,ABG\n"
      "1,0,0,0,0,0,0,2\n"
      "2,0,0,0,0,0,0,2\n"
      "3,0,0,0,0,0,0,2\n"
      "4,0,0,0,0,0,0,2\n"
      "5,1,0,1,1,0,1,0\n"
      "6,1,1,0,0,1,1,0\n"
      "7,0,1,1,1,1,0,0\n"
      "8,1,0,1,1,0,1,0\n"
      "9,1,1,0,0,1,1,0\n"
      "10,0,1,1,1,1,0,0\n"
      "11,1,0,1,1,0,1,0\n"
      "12,1,1,0,0,1,1,0\n"
      "13,0,1,1,1,1,0,0\n"
      "14,1,0,1,1,0,1,0\n"
      "15,1,1,0,0,1,1,0\n"
      "16,0,1,1,1,1,0,0\n";
  CHECK(table_to_csv(build_color_table(2, 4)) == expected);
}
