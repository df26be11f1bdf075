#include "doctest.h"
#include "residua/arrangement.hpp"
#include "residua/errors.hpp"

#include <random>

using namespace residua;

namespace {

QVec qv(std::initializer_list<long> entries) {
  QVec v;
  for (long e : entries) v.push_back(frac(e));
  return v;
}

}  // namespace

TEST_CASE("full space and points") {
  AffineFlat all = AffineFlat::full_space(2);
  CHECK(all.dim() == 2);
  CHECK(all.eqs.empty());
  CHECK(cmp_qvec(all.center, qv({0, 0})) == 0);

  AffineFlat p = AffineFlat::point_flat(qv({1, 1}));
  CHECK(p.dim() == 0);
  CHECK(cmp_qvec(p.center, qv({1, 1})) == 0);
  CHECK(p.contains(qv({1, 1})));
  CHECK_FALSE(p.contains(qv({1, 0})));
}

TEST_CASE("canonical form of a shifted line") {
  // {v : v1 - v2 = 1} in the plane
  QMat eqs{QVec{frac(1), frac(-1), frac(1)}};
  AffineFlat L = AffineFlat::from_equations(2, eqs);
  CHECK(L.dim() == 1);
  REQUIRE(L.direction.size() == 1);
  CHECK(cmp_qvec(L.direction[0], qv({1, 1})) == 0);
  CHECK(cmp_qvec(L.center, QVec{frac(1, 2), frac(-1, 2)}) == 0);
  CHECK(L.is_constant(qv({1, -1})));
  CHECK(L.value_of(qv({1, -1})) == frac(1));
  CHECK_FALSE(L.is_constant(qv({1, 0})));
}

TEST_CASE("presentation does not matter") {
  QMat a{QVec{frac(1), frac(1), frac(0), frac(2)}, QVec{frac(0), frac(0), frac(1), frac(1)}};
  QMat b{QVec{frac(2), frac(2), frac(2), frac(6)},  // sum of 2*first and 2*second
         QVec{frac(0), frac(0), frac(-3), frac(-3)}};
  AffineFlat fa = AffineFlat::from_equations(3, a);
  AffineFlat fb = AffineFlat::from_equations(3, b);
  CHECK(fa == fb);
  CHECK(fa.key() == fb.key());
  CHECK(fa.hash() == fb.hash());
}

TEST_CASE("point/direction round trip") {
  std::mt19937 rng(17);
  auto rnd = [&] { return frac(static_cast<long>(rng() % 13) - 6, static_cast<long>(rng() % 3) + 1); };
  for (int trial = 0; trial < 25; ++trial) {
    QVec p{rnd(), rnd(), rnd(), rnd()};
    QMat dir{QVec{rnd(), rnd(), rnd(), rnd()}, QVec{rnd(), rnd(), rnd(), rnd()}};
    AffineFlat f = AffineFlat::from_point_direction(p, dir);
    CHECK(f.dim() == rank(dir));
    CHECK(f.contains(p));
    for (const QVec& d : f.direction) CHECK(f.contains(add(p, d)));
    // Same flat from a different point and a scaled basis.
    if (f.dim() == 2) {
      QVec p2 = add(p, add(dir[0], scale(frac(-3, 2), dir[1])));
      QMat dir2{add(dir[0], dir[1]), scale(frac(2, 3), dir[1])};
      CHECK(AffineFlat::from_point_direction(p2, dir2) == f);
    }
  }
}

TEST_CASE("inconsistent systems are an error") {
  QMat eqs{QVec{frac(1), frac(1), frac(0)}, QVec{frac(2), frac(2), frac(1)}};
  CHECK_THROWS_AS(AffineFlat::from_equations(2, eqs), DomainError);
}

TEST_CASE("intersect: proper, contained, empty") {
  AffineFlat plane = AffineFlat::full_space(2);
  auto [r1, line] = intersect(plane, qv({1, -1}), frac(1));
  REQUIRE(r1 == CutResult::Proper);
  CHECK(line.dim() == 1);

  auto [r2, pt] = intersect(line, qv({1, 0}), frac(2));
  REQUIRE(r2 == CutResult::Proper);
  CHECK(pt.dim() == 0);
  CHECK(cmp_qvec(pt.center, qv({2, 1})) == 0);

  auto [r3, unused1] = intersect(line, qv({2, -2}), frac(2));
  CHECK(r3 == CutResult::Contains);
  (void)unused1;

  auto [r4, unused2] = intersect(line, qv({-1, 1}), frac(2));
  CHECK(r4 == CutResult::Empty);
  (void)unused2;
}

TEST_CASE("order of points") {
  RootSystem A1 = RootSystem::build("A1");
  ParameterFunction k1 = ParameterFunction::equal(A1, frac(1));
  IndexReport r = order_point(A1, k1, QVec{frac(1, 2), frac(-1, 2)});
  CHECK(r.hits == 1);
  CHECK(r.zeros == 0);
  CHECK(r.order == 0);

  // the origin misses every shifted hyperplane and lies on every unshifted one
  IndexReport r0 = order_point(A1, k1, qv({0, 0}));
  CHECK(r0.hits == 0);
  CHECK(r0.zeros == 2);
  CHECK(r0.order == -3);

  RootSystem A2 = RootSystem::build("A2");
  ParameterFunction k2 = ParameterFunction::equal(A2, frac(1));
  IndexReport r2 = order_point(A2, k2, qv({1, 0, -1}));
  CHECK(r2.hits == 2);
  CHECK(r2.zeros == 0);
  CHECK(r2.order == 0);

  CHECK_THROWS_AS(order_point(A2, k2, qv({1, 0, 0})), DomainError);
  CHECK_THROWS_AS(order_point(A2, k2, qv({1, 0})), DomainError);
}

TEST_CASE("order of flats") {
  RootSystem B2 = RootSystem::build("B2");
  ParameterFunction k = ParameterFunction::equal(B2, frac(1));

  SUBCASE("the whole space has order zero") {
    IndexReport r = order_flat(B2, k, AffineFlat::full_space(2));
    CHECK(r.hits == 0);
    CHECK(r.zeros == 0);
    CHECK(r.codim == 0);
    CHECK(r.order == 0);
  }
  SUBCASE("a shifted long wall is residual") {
    auto [res, L] = intersect(AffineFlat::full_space(2), qv({1, -1}), frac(1));
    REQUIRE(res == CutResult::Proper);
    IndexReport r = order_flat(B2, k, L);
    CHECK(r.hits == 1);
    CHECK(r.zeros == 0);
    CHECK(r.index == 1);
    CHECK(r.codim == 1);
    CHECK(r.order == 0);
  }
  SUBCASE("an unshifted short wall is not") {
    auto [res, L] = intersect(AffineFlat::full_space(2), qv({1, 0}), frac(0));
    REQUIRE(res == CutResult::Proper);
    IndexReport r = order_flat(B2, k, L);
    CHECK(r.hits == 0);
    CHECK(r.zeros == 2);
    CHECK(r.index == -2);
    CHECK(r.order == -3);
  }
  SUBCASE("points agree with order_point") {
    QVec p = qv({2, 1});
    IndexReport a = order_flat(B2, k, AffineFlat::point_flat(p));
    IndexReport b = order_point(B2, k, p);
    CHECK(a.hits == b.hits);
    CHECK(a.zeros == b.zeros);
    CHECK(a.order == b.order);
    CHECK(a.hit_roots == b.hit_roots);
  }
}

TEST_CASE("span_flat cuts out exactly the span of the roots") {
  for (const char* label : {"A1", "A2", "G2", "B2", "A1xA1"}) {
    CAPTURE(label);
    RootSystem R = RootSystem::build(label);
    AffineFlat V = span_flat(R);
    CHECK(V.dim() == R.span_dim);
    CHECK(is_zero_vec(V.center));
    for (const QVec& s : R.simple_roots) CHECK(V.contains(s));
    for (const QVec& d : V.direction) CHECK(R.in_span(d));
  }
}

TEST_CASE("order_flat rejects flats outside the span") {
  RootSystem A2 = RootSystem::build("A2");
  ParameterFunction k = ParameterFunction::equal(A2, frac(1));
  CHECK_THROWS_AS(order_flat(A2, k, AffineFlat::full_space(3)), DomainError);
  CHECK_THROWS_AS(order_flat(A2, k, AffineFlat::point_flat(qv({1, 1, 1}))), DomainError);
  CHECK_NOTHROW(order_flat(A2, k, span_flat(A2)));
}

TEST_CASE("order is Weyl equivariant") {
  std::mt19937 rng(29);
  for (const char* label : {"A2", "B2", "G2"}) {
    CAPTURE(label);
    RootSystem R = RootSystem::build(label);
    ParameterFunction k =
        R.num_classes() == 2
            ? ParameterFunction::from_named(R, {{"long", frac(1)}, {"short", frac(1, 2)}})
            : ParameterFunction::equal(R, frac(1));
    for (int trial = 0; trial < 12; ++trial) {
      QVec v = zero_vec(R.ambient_dim);
      for (const QVec& s : R.simple_roots)
        v = add(v, scale(frac(static_cast<long>(rng() % 9) - 4, 2), s));
      QVec w = v;
      for (int step = 0; step < 6; ++step) w = R.apply_simple(rng() % R.span_dim, w);
      IndexReport a = order_point(R, k, v);
      IndexReport b = order_point(R, k, w);
      CHECK(a.hits == b.hits);
      CHECK(a.zeros == b.zeros);
      CHECK(a.order == b.order);
    }
  }
}

TEST_CASE("flipping the sign of a class leaves the order unchanged") {
  std::mt19937 rng(37);
  RootSystem B2 = RootSystem::build("B2");
  ParameterFunction k = ParameterFunction::from_named(B2, {{"long", frac(1)}, {"short", frac(3, 2)}});
  ParameterFunction kf = ParameterFunction::from_named(B2, {{"long", frac(1)}, {"short", frac(-3, 2)}});
  for (int trial = 0; trial < 20; ++trial) {
    QVec v{frac(static_cast<long>(rng() % 13) - 6, 2), frac(static_cast<long>(rng() % 13) - 6, 2)};
    CHECK(order_point(B2, k, v).order == order_point(B2, kf, v).order);
  }
}

TEST_CASE("a class at zero contributes like a deleted class") {
  // Summing hits-minus-zeros over a class with k=0 gives 0 for any point off
  // its walls, and on walls the hit and zero cancel pairwise; the order
  // therefore equals the order computed from the other classes alone.
  std::mt19937 rng(41);
  RootSystem B2 = RootSystem::build("B2");
  ParameterFunction k = ParameterFunction::from_named(B2, {{"long", frac(1)}, {"short", frac(0)}});
  auto restricted_order = [&](const QVec& v) {
    long acc = 0;
    for (std::size_t i = 0; i < B2.num_roots(); ++i) {
      if (B2.class_names[B2.root_class[i]] != "long") continue;
      Rat val = dot(B2.roots[i], v);
      if (val == frac(1)) ++acc;
      if (sgn(val) == 0) --acc;
    }
    return acc - static_cast<long>(B2.span_dim);
  };
  for (int trial = 0; trial < 25; ++trial) {
    QVec v{frac(static_cast<long>(rng() % 9) - 4, 2), frac(static_cast<long>(rng() % 9) - 4, 2)};
    CHECK(order_point(B2, k, v).order == restricted_order(v));
  }
}

TEST_CASE("zero-count of a point is even") {
  std::mt19937 rng(53);
  RootSystem F4 = RootSystem::build("F4");
  ParameterFunction k = ParameterFunction::equal(F4, frac(1));
  for (int trial = 0; trial < 10; ++trial) {
    QVec v{frac(static_cast<long>(rng() % 7) - 3, 2), frac(static_cast<long>(rng() % 7) - 3, 2),
           frac(static_cast<long>(rng() % 7) - 3, 2), frac(static_cast<long>(rng() % 7) - 3, 2)};
    CHECK(order_point(F4, k, v).zeros % 2 == 0);
  }
}
