#include <doctest.h>

#include "drep/linalg.hpp"

using namespace drep;

TEST_CASE("rank_exact basics") {
  QMatrix id2(2, 2);
  id2.set(0, 0, Scalar(1));
  id2.set(1, 1, Scalar(1));
  CHECK(rank_exact(id2) == 2);

  QMatrix z(3, 4);
  CHECK(rank_exact(z) == 0);

  QMatrix m(2, 2);
  m.set(0, 0, Scalar(1));
  m.set(0, 1, Scalar(2));
  m.set(1, 0, Scalar(2));
  m.set(1, 1, Scalar(4));
  CHECK(rank_exact(m) == 1);
}

TEST_CASE("rank_exact agrees with the naive echelon oracle") {
  std::uint64_t s = 999;
  auto rnd = [&] {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  };
  for (int it = 0; it < 12; ++it) {
    QMatrix m(20, 20);
    for (int i = 0; i < 20; ++i)
      for (int j = 0; j < 20; ++j) {
        int pick = static_cast<int>(rnd() % 4);
        if (pick == 0)
          m.set(i, j, scalar(static_cast<long>(rnd() % 19) - 9,
                             1 + static_cast<long>(rnd() % 7)));
      }
    // plant some dependent rows
    for (int i = 15; i < 20; ++i) {
      int a = static_cast<int>(rnd() % 15), b = static_cast<int>(rnd() % 15);
      for (int j = 0; j < 20; ++j)
        m.set(i, j, Scalar(m.get(a, j) * 2 - m.get(b, j) * 3));
    }
    CHECK(rank_exact(m) == rank_echelon_naive(m));
  }
}

TEST_CASE("solve_in_row_span and nullspace") {
  std::vector<DenseRow> basis = {
      {Scalar(1), Scalar(0), Scalar(2)},
      {Scalar(0), Scalar(1), Scalar(-1)},
  };
  DenseRow v = {Scalar(3), Scalar(2), Scalar(4)};  // 3*b0 + 2*b1
  auto sol = solve_in_row_span(basis, v);
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] == Scalar(3));
  CHECK((*sol)[1] == Scalar(2));

  DenseRow out = {Scalar(0), Scalar(0), Scalar(1)};
  CHECK_FALSE(solve_in_row_span(basis, out).has_value());

  // kernel of [1 2 3]
  auto kern = nullspace({{Scalar(1), Scalar(2), Scalar(3)}}, 3);
  CHECK(kern.size() == 2);
  for (const auto& x : kern)
    CHECK(x[0] + 2 * x[1] + 3 * x[2] == 0);
}

TEST_CASE("independent_rows keeps a maximal independent subset") {
  std::vector<DenseRow> rows = {
      {Scalar(1), Scalar(1)},
      {Scalar(2), Scalar(2)},
      {Scalar(0), Scalar(1)},
      {Scalar(0), Scalar(0)},
      {Scalar(5), Scalar(0)},
  };
  auto chosen = independent_rows(rows);
  CHECK(chosen == std::vector<int>{0, 2});
}
