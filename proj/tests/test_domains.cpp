#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>
#include <variant>
#include <vector>

#include "dcpo/domains.hpp"
#include "dcpo/separation.hpp"

using namespace dcpo;
using namespace dcpo::domains;

namespace {

seq s(const std::string& digits) {
  seq out;
  for (char c : digits) out.push_back(static_cast<symbol>(c - '0'));
  return out;
}

qpair qp(long a, long b, long c, long d) {
  return qpair{rational(a, b), rational(c, d)};
}

} // namespace

TEST_CASE("embedded sequences: membership and the strongmax split") {
  auto cantor = cantor_basis();
  element<seq> x = embed_seq(cantor, eventually_periodic({}, s("01")));

  auto m = member(x, s("0101"), 16);
  REQUIRE(m.has_value());
  CHECK(*m == 4);
  CHECK(x.negative->refute(s("0110"), 8).kind == membership::not_member);
  CHECK(x.negative->refute(s("0101"), 8).kind == membership::is_member);

  CHECK(std::holds_alternative<way_below_t>(strongmax_split(x, s("0"), s("01"))));
  auto sep = strongmax_split(x, s("1"), s("10"));
  REQUIRE(std::holds_alternative<hausdorff_witness<seq>>(sep));
  CHECK(std::get<hausdorff_witness<seq>>(sep).a == s("1"));
  CHECK(std::get<hausdorff_witness<seq>>(sep).b == s("0"));
}

TEST_CASE("images of sequences are strongly maximal, grid form") {
  auto cantor = cantor_basis();
  std::vector<sequence_generator> gens = {
      eventually_periodic({}, s("0")), eventually_periodic({}, s("01")),
      eventually_periodic(s("110"), s("10")), eventually_periodic(s("0011"), s("1"))};
  for (const auto& g : gens) {
    element<seq> x = embed_seq(cantor, g);
    for (std::size_t n = 0; n < 127; ++n) {  // all sigma with len <= 6
      seq sigma = cantor->enumerate(n);
      for (symbol a : {0u, 1u}) {
        seq ext = sigma;
        ext.push_back(a);
        auto v = strongmax_split(x, sigma, ext);
        bool waybelow = std::holds_alternative<way_below_t>(v);
        CHECK(waybelow == is_prefix(sigma, front(g, sigma.size())));
        if (!waybelow)
          CHECK(verify_strongmax_separation(
              x, ext, std::get<hausdorff_witness<seq>>(v), 8));
      }
    }
  }
}

TEST_CASE("apartness is preserved and reflected on sequences") {
  auto cantor = cantor_basis();
  for (std::size_t k : {0u, 2u, 5u, 12u, 31u}) {
    seq pre;
    for (std::size_t i = 0; i < k; ++i) pre.push_back(static_cast<symbol>(i % 2));
    seq a = pre, b = pre;
    a.push_back(0);
    b.push_back(1);
    element<seq> xa = embed_seq(cantor, eventually_periodic(a, s("0")));
    element<seq> xb = embed_seq(cantor, eventually_periodic(b, s("0")));
    auto w = apart(xa, xb, k + 2);
    REQUIRE(w.has_value());
    CHECK(verify_apartness(xa, xb, *w));
    CHECK(w->element.size() == k + 1);
  }

  // same values through different closures: no witness, agreeing deciders
  element<seq> u = embed_seq(cantor, eventually_periodic({}, s("10")));
  element<seq> v = embed_seq(cantor, eventually_periodic(s("1010"), s("10")));
  CHECK_FALSE(apart(u, v, 64).has_value());
  for (std::size_t n = 0; n < 127; ++n) {
    seq t = cantor->enumerate(n);
    CHECK(u.negative->refute(t, 4).kind == v.negative->refute(t, 4).kind);
  }
}

TEST_CASE("dedekind embeddings: members, sharp and strongmax splits") {
  auto dede = dedekind_basis();
  element<qpair> half3 = embed_rational(dede, rational(3, 2));
  CHECK(member(half3, qp(1, 1, 2, 1), 32).has_value());
  CHECK(half3.negative->refute(qp(2, 1, 3, 1), 8).kind == membership::not_member);

  element<qpair> root2 = embed_located(dede, locator_of_sqrt(2));
  CHECK(member(root2, qp(1, 1, 3, 2), 32).has_value());
  CHECK(root2.negative->refute(qp(3, 2, 2, 1), 8).kind == membership::not_member);

  // the membership example pinned by the canonical chain start
  element<qpair> zero = embed_rational(dede, rational(0));
  auto m = member(zero, qp(-2, 1, 2, 1), 1);
  REQUIRE(m.has_value());
  CHECK(*m == 0);

  CHECK_FALSE(apart(zero, embed_rational(dede, rational(0)), 64).has_value());
  CHECK(apart(embed_rational(dede, rational(1, 3)),
              embed_rational(dede, rational(1, 2)), 64)
            .has_value());

  // the canonical separating generators for 0 and 1 admit no refinement
  CHECK_FALSE(dede->refinable(qp(-1, 2, 1, 2), qp(1, 2, 3, 2)));
  element<qpair> one = embed_rational(dede, rational(1));
  CHECK(member(zero, qp(-1, 2, 1, 2), 32).has_value());
  CHECK(member(one, qp(1, 2, 3, 2), 32).has_value());

  // locatedness drives the strongmax split on a grid
  for (const auto& x : {half3, root2}) {
    for (long i = -6; i <= 6; ++i)
      for (long j = i + 1; j <= 7; ++j) {
        qpair u{rational(i, 2), rational(j, 2)};
        for (long di = 1; di <= 2; ++di) {
          qpair v{u.lo + rational(di, 4), u.hi - rational(di, 4)};
          if (!(v.lo < v.hi) || !dede->prec(u, v)) continue;
          auto verdict = strongmax_split(x, u, v);
          if (auto* hw = std::get_if<hausdorff_witness<qpair>>(&verdict))
            CHECK(verify_strongmax_separation(x, v, *hw, 64));
          else
            CHECK(member(x, u, 64).has_value());
        }
      }
  }
}

TEST_CASE("rounded-ideal way-below reduces to membership on principals") {
  auto dede = dedekind_basis();
  std::vector<qpair> pairs;
  for (long i = -4; i <= 4; ++i)
    for (long j = i + 1; j <= 4; ++j) pairs.push_back(qp(i, 1, j, 1));
  for (const qpair& b : pairs) {
    element<qpair> pb = principal(dede, b);
    for (const qpair& a : pairs)
      CHECK(way_below_principal(a, pb, 32).has_value() == dede->prec(a, b));
  }

  auto lower = lower_basis();
  for (long j = -4; j <= 4; ++j) {
    element<rational> pb = principal(lower, rational(j));
    for (long i = -4; i <= 4; ++i)
      CHECK(way_below_principal(rational(i), pb, 32).has_value() == (i < j));
  }
}

TEST_CASE("lower reals from locators: sharpness is locatedness") {
  auto lower = lower_basis();
  element<rational> two = lower_from_locator(lower, locator_of_rational(rational(2)));

  CHECK(std::holds_alternative<below_t>(two.sharp->split(rational(1), rational(3))));
  auto na = two.sharp->split(rational(2), rational(3));
  REQUIRE(std::holds_alternative<not_above<rational>>(na));
  rational refuting = std::get<not_above<rational>>(na).refuting;
  CHECK(rational(2) <= refuting);
  CHECK(refuting < rational(3));
  CHECK(two.negative->refute(refuting, 8).kind == membership::not_member);

  element<rational> root2 = lower_from_locator(lower, locator_of_sqrt(2));
  CHECK(std::holds_alternative<below_t>(root2.sharp->split(rational(1), rational(2))));

  // non-located lower reals exist but carry no sharp oracle
  element<rational> plain = principal(lower, rational(1));
  CHECK_FALSE(plain.sharp.has_value());
  CHECK_THROWS_AS(sharp_split(plain, rational(0), rational(1)), capability_error);
}

TEST_CASE("upper cut witnesses") {
  auto lower = lower_basis();
  element<rational> two = lower_rational(lower, rational(2));

  auto in_u = upper_complement(two, rational(3), 2000);
  REQUIRE(in_u.has_value());
  CHECK(rational(2) <= *in_u);
  CHECK(*in_u < rational(3));
  CHECK(two.negative->refute(*in_u, 8).kind == membership::not_member);

  CHECK_FALSE(upper_complement(two, rational(1), 2000).has_value());

  // transitivity sample: no member of the lower cut reaches past q
  for (long num = -8; num <= 8; ++num) {
    rational p(num, 2);
    if (two.negative->refute(p, 8).kind == membership::is_member)
      CHECK(p < rational(3));
  }

  element<rational> bare = principal(lower, rational(2));
  CHECK_THROWS_AS(upper_complement(bare, rational(3), 100), capability_error);
}

TEST_CASE("locator roundtrip on the standard grid") {
  auto lower = lower_basis();
  std::vector<std::pair<rational, rational>> grid;
  for (long i = -8; i <= 8; ++i)
    for (long step : {1L, 3L})
      grid.emplace_back(rational(i, 2), rational(i, 2) + rational(step, 4));
  grid.emplace_back(rational(2), rational(65, 32));

  for (auto r : {rational(0), rational(1), rational(3, 2), rational(2), rational(-7, 3)})
    CHECK(locator_roundtrip(lower, locator_of_rational(r), grid).empty());
  CHECK(locator_roundtrip(lower, locator_of_sqrt(2), grid).empty());

  // negative control: an upper cut corrupted off the validation grid
  rational_locator bad = locator_of_rational(rational(2));
  auto good_above = bad.above;
  bad.above = [good_above](const rational& q) {
    return good_above(q) && q != rational(65, 32);
  };
  CHECK_FALSE(locator_roundtrip(lower, bad, grid).empty());
}

TEST_CASE("locator validation rejects broken cuts") {
  auto dede = dedekind_basis();
  rational_locator closed = locator_of_rational(rational(2));
  closed.below = [](const rational& p) { return p <= 2; };  // not rounded
  CHECK_THROWS_AS(embed_located(dede, closed), validation_error);

  rational_locator gap = locator_of_rational(rational(0));
  gap.below = [](const rational& p) { return p < -1; };  // not located at (-1/2, 1/2)
  CHECK_THROWS_AS(embed_located(dede, gap), validation_error);
}

TEST_CASE("epsilon embedding into the exponential") {
  auto eb = eps_basis();
  element<eps_step> e01 = epsilon_embed(eb, eventually_periodic({}, s("01")));

  eps_step probe1{{{lnat::eta(1), ltwo::eta(1)}}};
  CHECK(e01.negative->refute(probe1, 8).kind == membership::is_member);
  eps_step at_bottom{{{lnat::bottom(), ltwo::eta(0)}}};
  CHECK(e01.negative->refute(at_bottom, 8).kind == membership::not_member);

  // apartness transfers through the embedding with the same fuel budget
  for (std::size_t k : {0u, 3u, 9u, 16u}) {
    seq pre;
    for (std::size_t i = 0; i < k; ++i) pre.push_back(static_cast<symbol>(i % 2));
    seq a = pre, b = pre;
    a.push_back(0);
    b.push_back(1);
    element<eps_step> xa = epsilon_embed(eb, eventually_periodic(a, s("0")));
    element<eps_step> xb = epsilon_embed(eb, eventually_periodic(b, s("0")));
    auto w = apart(xa, xb, k + 2);
    REQUIRE(w.has_value());
    CHECK(verify_apartness(xa, xb, *w));
    bool mentions = false;
    for (const auto& [src, tgt] : w->element.pairs)
      mentions = mentions || (!src.is_bottom() && *src.value == k);
    CHECK(mentions);
  }

  element<eps_step> f = epsilon_embed(eb, eventually_periodic({}, s("01")));
  CHECK_FALSE(apart(e01, f, 64).has_value());
}

TEST_CASE("the image of the embedding is not maximal") {
  auto eb = eps_basis();
  for (symbol i : {0u, 1u}) {
    nonmax_result r = nonmax_witness(eb, i);
    REQUIRE(r.down.has_value());
    CHECK(r.down->element == r.separating);
    CHECK(r.down->element == eps_step{{{lnat::bottom(), ltwo::eta(i)}}});
    CHECK(r.strict_constant.negative->refute(r.down->element, 8).kind ==
          membership::not_member);
    CHECK(r.chain_inclusion);
    CHECK_FALSE(not_below(r.strict_constant, r.nonstrict_constant, 128).has_value());
  }
}

TEST_CASE("chain validity to depth 100 for embedded elements") {
  auto dede = dedekind_basis();
  for (const auto& x : {embed_rational(dede, rational(1, 3)),
                        embed_located(dede, locator_of_sqrt(2))})
    for (std::size_t n = 0; n < 100; ++n) {
      qpair c = x.chain(n);
      CHECK(c.lo < c.hi);
      CHECK(dede->prec(c, x.chain(n + 1)));
      CHECK(x.negative->refute(c, 4).kind == membership::is_member);
    }

  auto lower = lower_basis();
  element<rational> r2 = lower_from_locator(lower, locator_of_sqrt(2));
  for (std::size_t n = 0; n < 100; ++n) CHECK(r2.chain(n) < r2.chain(n + 1));

  auto eb = eps_basis();
  element<eps_step> e = epsilon_embed(eb, eventually_periodic({}, seq{0, 1}));
  for (std::size_t n = 0; n < 60; ++n)
    CHECK(eb->prec(e.chain(n), e.chain(n + 1)));
}

TEST_CASE("baire embeddings carry multi-digit symbols") {
  auto baire = baire_basis();
  element<seq> x = embed_seq(baire, eventually_periodic({}, seq{3, 1, 4}));
  auto m = member(x, seq{3, 1}, 8);
  REQUIRE(m.has_value());
  CHECK(*m == 2);
  CHECK(x.negative->refute(seq{3, 2}, 8).kind == membership::not_member);

  element<seq> y = embed_seq(baire, eventually_periodic({}, seq{3, 1, 5}));
  auto w = apart(x, y, 8);
  REQUIRE(w.has_value());
  CHECK(w->element.size() == 3);
  CHECK(verify_apartness(x, y, *w));

  CHECK(std::holds_alternative<way_below_t>(strongmax_split(x, seq{3}, seq{3, 1})));
  auto sep = strongmax_split(x, seq{2}, seq{2, 9});
  REQUIRE(std::holds_alternative<hausdorff_witness<seq>>(sep));
  CHECK(std::get<hausdorff_witness<seq>>(sep).b == seq{3});
}

TEST_CASE("located embeddings: remaining pinned instances") {
  auto dede = dedekind_basis();

  // way-below of a principal interval against an embedded rational
  element<qpair> one = embed_rational(dede, rational(1));
  CHECK(way_below_principal(qp(0, 1, 2, 1), one, 64).has_value());
  CHECK_FALSE(way_below_principal(qp(2, 1, 3, 1), one, 64).has_value());

  // distinct located reals are found apart
  element<qpair> three_halves = embed_located(dede, locator_of_rational(rational(3, 2)));
  element<qpair> two = embed_located(dede, locator_of_rational(rational(2)));
  auto w = apart(three_halves, two, 64);
  REQUIRE(w.has_value());
  CHECK(verify_apartness(three_halves, two, *w));

  element<qpair> zero = embed_rational(dede, rational(0));
  CHECK(member(zero, qp(-1, 1, 1, 1), 64).has_value());
}

TEST_CASE("property: normalization is idempotent on decoded step functions") {
  auto nat = lift_nat_basis();
  auto two = lift_two_basis();
  auto eb = eps_basis();
  for (std::size_t n = 0; n < 300; ++n) {
    eps_step s = eb->enumerate(n);  // already canonical by construction
    auto again = step_normalize(*nat, *two, s.pairs);
    REQUIRE(std::holds_alternative<eps_step>(again));
    CHECK(std::get<eps_step>(again) == s);
  }
}

TEST_CASE("property: membership is downward closed on random dedekind data") {
  std::mt19937 rng(271828);
  std::uniform_int_distribution<long> num(-16, 16);
  std::uniform_int_distribution<long> den(1, 8);
  auto dede = dedekind_basis();
  auto rnd_rat = [&] { return rational(num(rng), den(rng)); };
  std::vector<element<qpair>> pool = {embed_rational(dede, rational(1, 3)),
                                      embed_located(dede, locator_of_sqrt(2)),
                                      embed_rational(dede, rational(-5, 2))};
  for (int t = 0; t < 400; ++t) {
    rational p = rnd_rat(), q = rnd_rat();
    if (!(p < q)) continue;
    qpair b{p, q};
    rational dl = rational(den(rng), 8), dr = rational(den(rng), 8);
    qpair a{p - dl, q + dr};  // strictly wider, hence below b
    REQUIRE(dede->prec(a, b));
    for (const auto& x : pool) {
      auto mb = member(x, b, 48);
      if (mb) CHECK(member(x, a, 48).has_value());
      // and the total decider agrees with any found membership
      if (mb) CHECK(x.negative->refute(b, 4).kind == membership::is_member);
    }
  }
}
