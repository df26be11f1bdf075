#include "doctest.h"
#include "residua/linalg.hpp"
#include "residua/errors.hpp"

#include <random>

using namespace residua;

TEST_CASE("rationals canonicalize and format") {
  CHECK(frac(2, 6) == frac(1, 3));
  CHECK(frac(-4, 6) == frac(-2, 3));
  CHECK(frac(3, -6) == frac(-1, 2));
  CHECK(rat_str(frac(-4, 6)) == "-2/3");
  CHECK(rat_str(frac(8, 4)) == "2");
  CHECK(rat_str(frac(0, 7)) == "0");
  CHECK(parse_rat("  -10/4 ") == frac(-5, 2));
  CHECK(parse_rat("7") == frac(7));
  CHECK_THROWS_AS(parse_rat("1/0"), ConfigError);
  CHECK_THROWS_AS(parse_rat("x"), ConfigError);
  CHECK_THROWS_AS(parse_rat(""), ConfigError);
  CHECK(hash_rat(frac(2, 6)) == hash_rat(frac(1, 3)));
}

TEST_CASE("qvec helpers") {
  QVec a{frac(1), frac(2), frac(3)};
  QVec b{frac(1), frac(1), frac(-1)};
  CHECK(dot(a, b) == frac(0));
  CHECK(norm_sq(b) == frac(3));
  CHECK(cmp_qvec(a, b) > 0);
  CHECK(cmp_qvec(a, a) == 0);
  CHECK(is_zero_vec(sub(a, a)));
  CHECK(hash_qvec(a) == hash_qvec(QVec{frac(1), frac(2), frac(3)}));
}

TEST_CASE("rref canonical form") {
  QMat m{{frac(2), frac(4), frac(6)}, {frac(1), frac(2), frac(4)}};
  rref(m);
  REQUIRE(m.size() == 2);
  CHECK(m[0] == QVec{frac(1), frac(2), frac(0)});
  CHECK(m[1] == QVec{frac(0), frac(0), frac(1)});

  // Row order and scaling do not change the RREF.
  QMat m2{{frac(3), frac(6), frac(12)}, {frac(-2), frac(-4), frac(-6)}};
  rref(m2);
  CHECK(cmp_qmat(m, m2) == 0);
}

TEST_CASE("kernel and solve") {
  QMat m{{frac(1), frac(1), frac(0)}};
  QMat k = kernel_basis(m, 3);
  REQUIRE(k.size() == 2);
  for (const QVec& v : k) CHECK(dot(m[0], v) == frac(0));

  auto x = solve(QMat{{frac(1), frac(1)}, {frac(1), frac(-1)}}, QVec{frac(3), frac(1)});
  REQUIRE(x.has_value());
  CHECK(*x == QVec{frac(2), frac(1)});
  CHECK_FALSE(solve(QMat{{frac(1), frac(1)}, {frac(2), frac(2)}}, QVec{frac(0), frac(1)}).has_value());
}

TEST_CASE("projection is idempotent and orthogonal") {
  std::mt19937 rng(7);
  auto rnd = [&] { return frac(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 6) + 1); };
  for (int trial = 0; trial < 20; ++trial) {
    QMat basis{{rnd(), rnd(), rnd(), rnd()}, {rnd(), rnd(), rnd(), rnd()}};
    if (rank(basis) != 2) continue;
    QVec v{rnd(), rnd(), rnd(), rnd()};
    QVec p = project_onto_span(basis, v);
    QVec resid = sub(v, p);
    for (const QVec& b : basis) CHECK(dot(b, resid) == frac(0));
    CHECK(project_onto_span(basis, p) == p);
  }
}

TEST_CASE("row space membership") {
  QMat m{{frac(1), frac(0), frac(1)}, {frac(0), frac(1), frac(1)}};
  CHECK(in_row_space(m, QVec{frac(2), frac(3), frac(5)}));
  CHECK_FALSE(in_row_space(m, QVec{frac(0), frac(0), frac(1)}));
}
