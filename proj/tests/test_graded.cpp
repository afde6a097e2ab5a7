#include <doctest.h>

#include "drep/grading.hpp"

using namespace drep;

namespace {

// x even, y1/y2 odd, all weight 1.
CommVarTable mixed_vars() {
  CommVarTable t;
  t.add({"x", 0, 1});
  t.add({"y1", 1, 1});
  t.add({"y2", 1, 1});
  return t;
}

}  // namespace

TEST_CASE("koszul_sign basics") {
  CHECK(koszul_sign({0, 1, 2}, {1, 1, 1}) == Scalar(1));
  CHECK(koszul_sign({1, 0}, {1, 1}) == Scalar(-1));
  CHECK(koszul_sign({1, 0}, {0, 1}) == Scalar(1));
  CHECK(koszul_sign({1, 0}, {1, 0}) == Scalar(1));
  CHECK(koszul_sign({2, 1, 0}, {1, 1, 1}) == Scalar(-1));  // 3 odd-odd swaps
  CHECK_THROWS(koszul_sign({0, 1}, {1}));
  CHECK_THROWS(koszul_sign({0, 0}, {1, 1}));
}

TEST_CASE("normalize_comm") {
  CommVarTable t = mixed_vars();
  VarId x = t.by_name["x"], y1 = t.by_name["y1"], y2 = t.by_name["y2"];

  auto r = normalize_comm({y2, y1}, t);
  REQUIRE(r.has_value());
  CHECK(r->first == CommMono{{y1, 1}, {y2, 1}});
  CHECK(r->second == Scalar(-1));

  r = normalize_comm({x, x}, t);
  REQUIRE(r.has_value());
  CHECK(r->first == CommMono{{x, 2}});
  CHECK(r->second == Scalar(1));

  CHECK_FALSE(normalize_comm({y1, y1}, t).has_value());

  // Idempotence: normalizing a canonical sequence gives sign +1.
  r = normalize_comm({x, y1, y2}, t);
  REQUIRE(r.has_value());
  CHECK(r->second == Scalar(1));
}

TEST_CASE("noncommutative product") {
  GeneratorTable tab;
  tab.add({"x", 0, 1});
  tab.add({"y", 1, 1});
  tab.sort_canonical();
  GenId x = tab.id("x"), y = tab.id("y");

  NCPoly p = mul_nc(nc_gen(x), nc_gen(y));
  CHECK(p.terms.size() == 1);
  CHECK(p.terms.count({x, y}) == 1);

  NCPoly q = mul_nc(nc_gen(x) + nc_gen(y), nc_gen(x));
  CHECK(q.terms.count({x, x}) == 1);
  CHECK(q.terms.count({y, x}) == 1);

  CHECK(mul_nc(NCPoly{}, q).is_zero());
  CHECK(word_hdeg({x, y}, tab) == 1);
  CHECK(word_weight({x, y}, tab) == 2);
}

TEST_CASE("graded-commutative product") {
  CommVarTable t = mixed_vars();
  VarId x = t.by_name["x"], y1 = t.by_name["y1"], y2 = t.by_name["y2"];

  CommPoly a = mul_comm(comm_var(y1), comm_var(y2), t);
  CommPoly b = mul_comm(comm_var(y2), comm_var(y1), t);
  CHECK(a == b * Scalar(-1));
  CHECK(mul_comm(comm_var(y1), comm_var(y1), t).is_zero());
  CommPoly x2 = mul_comm(comm_var(x), comm_var(x), t);
  CHECK(x2.terms.count(CommMono{{x, 2}}) == 1);
}

TEST_CASE("graded commutativity property on random polynomials") {
  CommVarTable t = mixed_vars();
  std::uint64_t s = 12345;
  auto rnd = [&] {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  };
  for (int it = 0; it < 100; ++it) {
    // random homogeneous monomial products
    std::vector<VarId> fa, fb;
    int la = 1 + rnd() % 3, lb = 1 + rnd() % 3;
    for (int i = 0; i < la; ++i) fa.push_back(static_cast<VarId>(rnd() % 3));
    for (int i = 0; i < lb; ++i) fb.push_back(static_cast<VarId>(rnd() % 3));
    auto na = normalize_comm(fa, t), nb = normalize_comm(fb, t);
    if (!na || !nb) continue;
    CommPoly pa, pb;
    pa.add_term(na->first, na->second);
    pb.add_term(nb->first, nb->second);
    int ha = mono_hdeg(na->first, t), hb = mono_hdeg(nb->first, t);
    CommPoly lhs = mul_comm(pa, pb, t);
    CommPoly rhs = mul_comm(pb, pa, t) * ((ha % 2 && hb % 2) ? Scalar(-1) : Scalar(1));
    CHECK(lhs == rhs);
    if (!lhs.is_zero()) {
      const auto& m = lhs.terms.begin()->first;
      CHECK(mono_hdeg(m, t) == ha + hb);
      CHECK(mono_weight(m, t) == mono_weight(na->first, t) + mono_weight(nb->first, t));
    }
  }
}

TEST_CASE("canonical text rendering") {
  GeneratorTable tab;
  tab.add({"x", 0, 1});
  tab.add({"y", 1, 1});
  tab.sort_canonical();
  GenId x = tab.id("x"), y = tab.id("y");
  NCPoly p;
  p.add_term({x, y}, Scalar(1));
  p.add_term({x}, scalar(-1, 2));
  CHECK(nc_str(p, tab) == "-1/2*x + x*y");
  CHECK(nc_str(NCPoly{}, tab) == "0");
}
