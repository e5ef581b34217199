#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "skein4/ring.hpp"

using namespace skein4;

static RingSpecPtr za4() {
  // Z[x][a]/(a^4-1), plus nothing else
  return RingSpec::create_with_power_rule({"a", "x"}, {}, "a", 4, 1);
}

TEST_CASE("normalization rewrites pure powers") {
  auto s = za4();
  auto a5 = RingElement::variable(s, "a", 5);
  CHECK(a5 == RingElement::variable(s, "a", 1));
  auto ainv = RingElement::variable(s, "a", -1);
  CHECK(ainv == RingElement::variable(s, "a", 3));
  CHECK((a5 * ainv) == RingElement::one(s));
}

TEST_CASE("cancellation") {
  auto s = RingSpec::create({"t"}, {});
  auto t = RingElement::variable(s, "t");
  auto v = t.scaled(3) - t.scaled(3);
  CHECK(v.is_zero());
  CHECK(v.str() == "0");
}

TEST_CASE("modulus 3 canonical form, (t+1)^2 == t^2-t+1") {
  auto s = RingSpec::create({"t"}, {}, 3);
  auto t = RingElement::variable(s, "t");
  auto one = RingElement::one(s);
  auto lhs = (t + one).pow(2);
  auto rhs = t * t - t + one;
  CHECK(lhs == rhs);
  CHECK(lhs.str() == "1 + 2*t + 1*t^2");
}

TEST_CASE("laurent arithmetic") {
  auto s = RingSpec::create({"s"}, {"s"});
  auto sp = RingElement::variable(s, "s", 1);
  auto sm = RingElement::variable(s, "s", -1);
  CHECK(((sp + sm) * (sp - sm)) == (sp.pow(2) - sm.pow(2)));
}

TEST_CASE("negative exponent on plain variable rejected") {
  auto s = RingSpec::create({"x"}, {});
  CHECK_THROWS_AS(RingElement::variable(s, "x", -1), RingError);
}

TEST_CASE("(-a^3)*(-a) == 1 in Z[a]/(a^4-1)") {
  auto s = za4();
  auto v = (-RingElement::variable(s, "a", 3)) * (-RingElement::variable(s, "a", 1));
  CHECK(v.is_one());
}

TEST_CASE("(b^2+b^-2)*b == b^3 + b^-1") {
  auto s = RingSpec::create({"b"}, {"b"});
  auto b = [&](int k) { return RingElement::variable(s, "b", k); };
  CHECK(((b(2) + b(-2)) * b(1)) == (b(3) + b(-1)));
}

TEST_CASE("substitution examples") {
  // x := -s^2 - s^-2 - 1 into x+1 gives -s^2 - s^-2
  auto xs = RingSpec::create({"x"}, {});
  auto ss = RingSpec::create({"s"}, {"s"});
  auto x = RingElement::variable(xs, "x");
  auto img = -RingElement::variable(ss, "s", 2) - RingElement::variable(ss, "s", -2) -
             RingElement::one(ss);
  auto out = (x + RingElement::one(xs)).substituted({{"x", img}}, ss);
  CHECK(out == (-RingElement::variable(ss, "s", 2) - RingElement::variable(ss, "s", -2)));

  // a := 1 into a^4 - 1 gives 0
  auto s4 = za4();
  auto zs = RingSpec::create({"u"}, {});
  auto a4m1 = RingElement::variable(s4, "a", 4) - RingElement::one(s4);
  CHECK(a4m1.is_zero());  // already 0 in the quotient
  auto a = RingElement::variable(s4, "a");
  auto av = (a.pow(4) - RingElement::one(s4))
                .substituted({{"a", RingElement::one(zs)}}, zs);
  CHECK(av.is_zero());

  // t := 1 into 49t - 48t^2 gives 1
  auto ts = RingSpec::create({"t"}, {});
  auto t = RingElement::variable(ts, "t");
  auto p = t.scaled(49) - t.pow(2).scaled(48);
  auto val = p.substituted({{"t", RingElement::one(ts)}}, ts);
  CHECK(val.is_one());
}

TEST_CASE("text format round trip") {
  auto s = RingSpec::create({"b", "t"}, {"b"});
  auto b = [&](int k) { return RingElement::variable(s, "b", k); };
  auto t = RingElement::variable(s, "t");
  auto p = b(11).scaled(3) * t - b(13) * t.pow(2);
  CHECK(p.str() == "3*b^11*t - 1*b^13*t^2");
  CHECK(RingElement::parse(s, p.str()) == p);
  CHECK(RingElement::parse(s, "(b + b^-1)^2") ==
        (b(2) + RingElement::integer(s, 2) + b(-2)));
}

TEST_CASE("distributivity on random elements and substitution homomorphism") {
  auto s = za4();
  std::mt19937 rng(7);
  auto rnd = [&]() {
    RingElement v = RingElement::zero(s);
    for (int i = 0; i < 4; ++i) {
      int ca = int(rng() % 7) - 3;
      if (ca == 0) continue;
      v += RingElement::monomial(s, ca, {{"a", int(rng() % 4)}, {"x", int(rng() % 3)}});
    }
    return v;
  };
  auto ts = RingSpec::create({"s"}, {"s"});
  auto aimg = -RingElement::one(ts);
  auto ximg = RingElement::variable(ts, "s", 2) + RingElement::variable(ts, "s", -1);
  std::map<std::string, RingElement> bind{{"a", aimg}, {"x", ximg}};
  for (int trial = 0; trial < 100; ++trial) {
    auto p = rnd(), q = rnd(), r = rnd();
    CHECK(((p + q) * r) == (p * r + q * r));
    CHECK((p * q) == (q * p));
    CHECK((p * q).substituted(bind, ts) ==
          (p.substituted(bind, ts) * q.substituted(bind, ts)));
  }
}

TEST_CASE("exact division") {
  auto s = RingSpec::create({"z", "a"}, {"z", "a"});
  auto z = RingElement::variable(s, "z");
  auto a = [&](int k) { return RingElement::variable(s, "a", k); };
  auto num = (RingElement::one(s) - a(2)) * (z - a(1) - a(-1));
  auto den = z * (a(2) - RingElement::one(s));
  auto q = RingElement::exact_div(num, den);
  REQUIRE(q.has_value());
  CHECK((*q * den) == num);
  // (a + a^-1 - z) / z
  auto mu = (a(1) + a(-1) - z) * RingElement::variable(s, "z", -1);
  CHECK(*q == mu);
  CHECK_FALSE(RingElement::exact_div(z + a(1), z + RingElement::one(s)).has_value());
}

TEST_CASE("idempotent normalization and pow") {
  auto s = za4();
  auto v = RingElement::parse(s, "2*a^7*x + a^3 - a^3 + x");
  CHECK(v == RingElement::parse(s, "2*a^3*x + x"));
  CHECK(RingElement::variable(s, "a").pow(-3) == RingElement::variable(s, "a", 1));
}
