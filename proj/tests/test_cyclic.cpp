#include <doctest.h>

#include "drep/cyclic.hpp"

using namespace drep;

namespace {

// x even weight 1, y odd weight 1 (the Appendix's mixed alphabet).
GeneratorTable xy_table() {
  GeneratorTable t;
  t.add({"x", 0, 1});
  t.add({"y", 1, 1});
  t.sort_canonical();
  return t;
}

GeneratorTable odd_pair_table() {
  GeneratorTable t;
  t.add({"y1", 1, 1});
  t.add({"y2", 1, 1});
  t.sort_canonical();
  return t;
}

}  // namespace

TEST_CASE("rotate moves the last letter to the front with the Koszul sign") {
  GeneratorTable t = xy_table();
  GenId x = t.id("x"), y = t.id("y");
  auto [w1, s1] = rotate({x, y}, t);
  CHECK(w1 == Word{y, x});
  CHECK(s1 == Scalar(1));  // |y||x| = 0

  GeneratorTable o = odd_pair_table();
  GenId y1 = o.id("y1"), y2 = o.id("y2");
  auto [w2, s2] = rotate({y1, y2}, o);
  CHECK(w2 == Word{y2, y1});
  CHECK(s2 == Scalar(-1));

  CHECK_THROWS(rotate({}, t));
}

TEST_CASE("norm operator") {
  GeneratorTable t = xy_table();
  GenId x = t.id("x"), y = t.id("y");

  NCPoly n1 = norm_operator({x, x}, t);
  CHECK(n1.terms.at({x, x}) == Scalar(2));

  // A word that cancels against its own rotations: N(x^2 y x^2 y) = 0.
  NCPoly n2 = norm_operator({x, x, y, x, x, y}, t);
  CHECK(n2.is_zero());

  NCPoly n3 = norm_operator({x, y}, t);
  CHECK(n3.terms.at({x, y}) == Scalar(1));
  CHECK(n3.terms.at({y, x}) == Scalar(1));

  CHECK(norm_operator({}, t) == nc_one());
}

TEST_CASE("canonical cyclic representatives and badness") {
  GeneratorTable t = xy_table();
  GenId x = t.id("x"), y = t.id("y");

  CHECK_FALSE(canonical_cyclic({x, x, y, x, x, y}, t).has_value());

  auto c = canonical_cyclic({y, x}, t);
  REQUIRE(c.has_value());
  CHECK(c->first.rep == Word{x, y});
  CHECK(c->second == Scalar(1));

  GeneratorTable o = odd_pair_table();
  GenId y1 = o.id("y1"), y2 = o.id("y2");
  auto c2 = canonical_cyclic({y2, y1}, o);
  REQUIRE(c2.has_value());
  CHECK(c2->first.rep == Word{y1, y2});
  CHECK(c2->second == Scalar(-1));

  // Odd square is bad.
  CHECK_FALSE(canonical_cyclic({y1, y1}, o).has_value());
}

TEST_CASE("cyclic derivative") {
  GeneratorTable t = xy_table();
  GenId x = t.id("x"), y = t.id("y");

  NCPoly x3 = nc_word({x, x, x});
  NCPoly d = cyclic_derivative(x3, x, t);
  CHECK(d.terms.at({x, x}) == Scalar(3));

  NCPoly xy = nc_word({x, y});
  CHECK(cyclic_derivative(xy, x, t).terms.at({y}) == Scalar(1));

  // d/dg of a graded commutator vanishes (instance of the kernel theorem).
  DGAPresentation p = builtin_resolution("dual-numbers", 0, 4);
  GenId px = p.tab.id("x"), px1 = p.tab.id("x1");
  NCPoly comm = mul_nc(nc_gen(px), nc_gen(px1)) - mul_nc(nc_gen(px1), nc_gen(px));
  CHECK(cyclic_derivative(comm, px, p.tab).is_zero());
  CHECK(cyclic_derivative(comm, px1, p.tab).is_zero());
}

TEST_CASE("cyclic basis of the dual numbers resolution") {
  DGAPresentation p = builtin_resolution("dual-numbers", 0, 3);
  CyclicBasis b = cyclic_basis(p, 3);
  GenId x = p.tab.id("x"), x1 = p.tab.id("x1"), x2 = p.tab.id("x2");

  auto cell = [&](int h, int w) {
    auto it = b.cells.find({h, w});
    return it == b.cells.end() ? 0 : static_cast<int>(it->second.size());
  };
  CHECK(cell(0, 1) == 1);  // [x]
  CHECK(cell(0, 2) == 1);  // [x^2]
  CHECK(cell(0, 3) == 1);  // [x^3]
  CHECK(cell(1, 2) == 1);  // [x1]
  CHECK(cell(1, 3) == 1);  // [x x1]
  CHECK(cell(2, 3) == 1);  // [x2]
  CHECK(b.all.size() == 6);
  CHECK(b.index.count({x, x1}) == 1);
  CHECK(b.index.count({x1}) == 1);
  CHECK(b.index.count({x2}) == 1);
}

TEST_CASE("cyclic basis corner cases") {
  GeneratorTable even1;
  even1.add({"x", 0, 1});
  even1.sort_canonical();
  CyclicBasis be = cyclic_words(even1, 2);
  CHECK(be.all.size() == 2);  // x, x^2

  GeneratorTable odd1;
  odd1.add({"y", 1, 1});
  odd1.sort_canonical();
  CyclicBasis bo = cyclic_words(odd1, 2);
  CHECK(bo.all.size() == 1);  // y only; yy is bad
}

TEST_CASE("cyclic complex differential") {
  DGAPresentation p = builtin_resolution("dual-numbers", 0, 3);
  CyclicComplex cc = cyclic_complex(p, 3);
  GenId x = p.tab.id("x"), x1 = p.tab.id("x1"), x2 = p.tab.id("x2");

  // d[x2] = [x x1] - [x1 x] = 0 in C(R).
  {
    auto pos = cc.basis.index.at({x2});
    const QMatrix* d = cc.complex.get_diff(2, 3);
    REQUIRE(d);
    for (int r = 0; r < d->rows; ++r) CHECK(d->get(r, pos.second) == Scalar(0));
  }
  // d[x x1] = [x^3].
  {
    auto pos = cc.basis.index.at({x, x1});
    auto tgt = cc.basis.index.at({x, x, x});
    const QMatrix* d = cc.complex.get_diff(1, 3);
    REQUIRE(d);
    CHECK(d->get(tgt.second, pos.second) == Scalar(1));
  }
  // Commuting plane: d[t] = [xy] - [yx] = 0.
  DGAPresentation q = builtin_resolution("commuting-plane", 0, 2);
  CyclicComplex cq = cyclic_complex(q, 2);
  auto post = cq.basis.index.at({q.tab.id("t")});
  const QMatrix* dq = cq.complex.get_diff(1, 2);
  REQUIRE(dq);
  for (int r = 0; r < dq->rows; ++r) CHECK(dq->get(r, post.second) == Scalar(0));
}

TEST_CASE("homology of the dual-numbers cyclic complex through weight 5") {
  DGAPresentation p = builtin_resolution("dual-numbers", 0, 5);
  BettiTable b = betti(cyclic_complex(p, 5).complex);
  CHECK(b.dim(0, 1) == 1);
  CHECK(b.dim(2, 3) == 1);
  CHECK(b.dim(4, 5) == 1);
  long total = 0;
  for (const auto& [key, cell] : b.cells) total += cell.dim;
  CHECK(total == 3);
}

TEST_CASE("composed rotation signs around a full cycle") {
  // For w = x^2 y x^2 y: tau^3(w) = -w (which is why N(w) = 0 and the word
  // is bad), and the full cycle tau^6 returns (w, +1).
  GeneratorTable t = xy_table();
  GenId x = t.id("x"), y = t.id("y");
  Word w = {x, x, y, x, x, y};
  Word cur = w;
  Scalar sign(1);
  for (int k = 1; k <= 6; ++k) {
    auto [next, s] = rotate(cur, t);
    cur = next;
    sign *= s;
    if (k == 3) {
      CHECK(cur == w);
      CHECK(sign == Scalar(-1));
    }
  }
  CHECK(cur == w);
  CHECK(sign == Scalar(1));
}
