#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "mdsgrs/grs.hpp"
#include "mdsgrs/linalg.hpp"
#include "mdsgrs/numtheory.hpp"
#include "oracles.hpp"

using namespace mdsgrs;

namespace {

std::vector<Elem> ints(const Field& f, std::initializer_list<std::int64_t> xs) {
  std::vector<Elem> out;
  for (auto x : xs) out.push_back(f.from_int(x));
  return out;
}

// Integer representative of an element of a prime field.
std::vector<std::int64_t> as_ints(const Field& f, std::span<const Elem> xs) {
  std::vector<std::int64_t> out;
  for (Elem x : xs) {
    std::int64_t v = 0;
    while (f.from_int(v) != x) ++v;
    out.push_back(v);
  }
  return out;
}

using V = std::vector<std::int64_t>;

// Does some vector of nonzero squares w satisfy sum_j w_j a_j^s = 0 for s < k,
// plus the extra term at s = k-1 for the extended coordinate? Plain mod-p
// integers, no field tables.
bool brute_self_dual_exists(std::int64_t p, const V& a, bool extended) {
  std::vector<std::int64_t> squares;
  for (std::int64_t x = 1; x < p; ++x) {
    const auto s = x * x % p;
    if (std::find(squares.begin(), squares.end(), s) == squares.end()) squares.push_back(s);
  }
  const std::size_t n = a.size();
  const std::size_t k = (n + (extended ? 1 : 0)) / 2;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    bool ok = true;
    for (std::size_t s = 0; s + 1 < 2 * k && ok; ++s) {
      std::int64_t acc = (extended && s == 2 * k - 2) ? 1 : 0;
      for (std::size_t j = 0; j < n; ++j) {
        acc = (acc + squares[idx[j]] * static_cast<std::int64_t>(oracle::pow_mod(a[j], s, p))) % p;
      }
      ok = acc == 0;
    }
    if (ok) return true;
    std::size_t j = 0;
    while (j < n && ++idx[j] == squares.size()) idx[j++] = 0;
    if (j == n) return false;
  }
}

SelfDualCode example_4_2() {
  auto f = make_field(13, 1);
  return grs_self_dual(f, ints(*f, {0, 1, 2, 3}), {"manual", {}});
}

}  // namespace

TEST_CASE("lagrange_l: worked values in GF(13)") {
  auto f = make_field(13, 1);
  CHECK(as_ints(*f, lagrange_l(*f, ints(*f, {0, 1, 2, 3}))) == V{7, 2, 11, 6});
  CHECK(as_ints(*f, lagrange_l(*f, ints(*f, {0, 1}))) == V{12, 1});
  CHECK(as_ints(*f, lagrange_l(*f, ints(*f, {0, 1, 2}))) == V{2, 12, 2});
  CHECK(lagrange_l(*f, ints(*f, {5})) == std::vector<Elem>{f->one()});
  CHECK_THROWS_AS(lagrange_l(*f, ints(*f, {1, 2, 1})), Error);
}

TEST_CASE("lagrange_l: powers of a 6th root of unity give 6 beta^-i") {
  auto f = make_field(13, 1);
  const auto a = ints(*f, {4, 3, 12, 9, 10, 1});
  const auto l = lagrange_l(*f, a);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(l[i] == f->mul(f->from_int(6), f->inv(a[i])));
}

TEST_CASE("lemma1_multipliers: worked examples") {
  auto f = make_field(13, 1);
  auto m = lemma1_multipliers(*f, ints(*f, {0, 1, 2, 3}));
  REQUIRE(m);
  CHECK(m->lambda == f->from_int(2));
  CHECK(as_ints(*f, m->v) == V{1, 6, 4, 8});
  CHECK_FALSE(lemma1_multipliers(*f, ints(*f, {0, 1, 2, 4})));
  auto roots = lemma1_multipliers(*f, ints(*f, {4, 3, 12, 9, 10, 1}));
  REQUIRE(roots);
  const auto l = lagrange_l(*f, ints(*f, {4, 3, 12, 9, 10, 1}));
  for (std::size_t i = 0; i < l.size(); ++i) {
    CHECK(f->mul(f->mul(roots->v[i], roots->v[i]), f->mul(roots->lambda, l[i])) == f->one());
  }
  CHECK_THROWS_AS(lemma1_multipliers(*f, ints(*f, {0, 1, 2})), Error);
}

TEST_CASE("lemma2_multipliers: worked examples") {
  auto f = make_field(13, 1);
  const auto a = ints(*f, {0, 8, 12, 5, 1});
  const auto l = lagrange_l(*f, a);
  std::vector<Elem> neg;
  for (Elem x : l) neg.push_back(f->neg(x));
  CHECK(as_ints(*f, neg) == V{1, 9, 9, 9, 9});
  auto v = lemma2_multipliers(*f, a);
  REQUIRE(v);
  CHECK(as_ints(*f, *v) == V{1, 4, 4, 4, 4});
  CHECK_FALSE(lemma2_multipliers(*f, ints(*f, {0, 1, 2})));
  auto single = lemma2_multipliers(*f, ints(*f, {0}));
  REQUIRE(single);
  // L = 1 (empty product), so v^2 = (-1)^-1 and v = sqrt(-1) = 8.
  CHECK(as_ints(*f, *single) == V{8});
  CHECK_THROWS_AS(lemma2_multipliers(*f, ints(*f, {0, 1})), Error);
}

TEST_CASE("generator_matrix and oracles on the [4,2] code") {
  const auto code = example_4_2();
  const auto g = code.generator();
  const Field& f = code.field();
  CHECK(as_ints(f, g.row(0)) == V{1, 6, 4, 8});
  CHECK(as_ints(f, g.row(1)) == V{0, 6, 8, 11});
  CHECK(check_self_dual(g));
  CHECK(min_distance(g) == 3);
  for (auto mode : {MdsMode::exhaustive, MdsMode::minors, MdsMode::sampled}) CHECK(check_mds(g, mode));
  CHECK(generator_matrix(code.eval, 0).rows() == 0);

  auto unset = make_eval_set(code.eval.field, code.eval.points);
  CHECK_THROWS_AS(generator_matrix(unset, 2), Error);
}

TEST_CASE("extended [6,3] code over GF(13)") {
  auto f = make_field(13, 1);
  auto code = extended_grs_self_dual(f, ints(*f, {0, 8, 12, 5, 1}), {"manual", {}});
  const auto g = code.generator();
  CHECK(g.rows() == 3);
  CHECK(g.cols() == 6);
  CHECK(g.at(0, 5) == f->zero());
  CHECK(g.at(1, 5) == f->zero());
  CHECK(g.at(2, 5) == f->one());
  CHECK(check_self_dual(g));
  CHECK(min_distance(g) == 4);
}

TEST_CASE("check_self_dual, min_distance, check_mds: trivial matrices") {
  auto f = make_field(13, 1);
  GeneratorMatrix id(f, 2, 4);
  id.at(0, 0) = f->one();
  id.at(1, 1) = f->one();
  CHECK_FALSE(check_self_dual(id));
  CHECK_THROWS_AS(check_self_dual(GeneratorMatrix(f, 2, 5)), Error);

  auto f3 = make_field(3, 1);
  GeneratorMatrix rep(f3, 1, 2);
  rep.at(0, 0) = rep.at(0, 1) = f3->one();
  CHECK(min_distance(rep) == 2);

  GeneratorMatrix dup(f, 2, 3);
  for (std::size_t j = 0; j < 3; ++j) {
    dup.at(0, j) = f->one();
    dup.at(1, j) = f->from_int(j == 2 ? 1 : static_cast<std::int64_t>(j));
  }
  CHECK_FALSE(check_mds(dup, MdsMode::minors));
  CHECK_FALSE(check_mds(dup, MdsMode::exhaustive));

  GeneratorMatrix big(make_field(13, 2), 4, 8);
  CHECK_THROWS_AS(min_distance(big, 1000), Error);
}

TEST_CASE("every 4-subset of GF(13): criterion matches brute force, codes are self-dual MDS") {
  auto f = make_field(13, 1);
  int found = 0;
  for (const auto& sub : oracle::subsets(13, 4)) {
    V a(sub.begin(), sub.end());
    std::vector<Elem> pts;
    for (auto x : a) pts.push_back(f->from_int(x));
    const auto l = lagrange_l(*f, pts);
    const bool constant = std::all_of(l.begin(), l.end(), [&](Elem x) { return f->eta(x) == f->eta(l[0]); });
    auto m = lemma1_multipliers(*f, pts);
    CHECK(m.has_value() == constant);
    CHECK(m.has_value() == brute_self_dual_exists(13, a, false));
    if (m) {
      ++found;
      auto es = make_eval_set(f, pts);
      es.multipliers = m->v;
      const auto g = generator_matrix(es, 2);
      CHECK(check_self_dual(g));
      CHECK(min_distance(g) == 3);
    }
  }
  CHECK(found > 0);
}

TEST_CASE("every 3-subset of GF(13): extended criterion matches brute force") {
  auto f = make_field(13, 1);
  int found = 0;
  for (const auto& sub : oracle::subsets(13, 3)) {
    V a(sub.begin(), sub.end());
    std::vector<Elem> pts;
    for (auto x : a) pts.push_back(f->from_int(x));
    auto v = lemma2_multipliers(*f, pts);
    CHECK(v.has_value() == brute_self_dual_exists(13, a, true));
    if (v) {
      ++found;
      auto es = make_eval_set(f, pts, true);
      es.multipliers = *v;
      const auto g = generator_matrix(es, 2);
      CHECK(check_self_dual(g));
      CHECK(min_distance(g) == 3);
    }
  }
  CHECK(found > 0);
}

TEST_CASE("GRS codes are MDS for random points and multipliers") {
  std::mt19937_64 rng(7);
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{7, 1}, {11, 1}, {3, 2}, {5, 2}}) {
    auto f = make_field(p, m);
    std::uniform_int_distribution<std::uint32_t> nz(1, f->order() - 1);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<std::uint32_t> codes(f->order());
      std::iota(codes.begin(), codes.end(), 0u);
      std::shuffle(codes.begin(), codes.end(), rng);
      const std::size_t n = std::min<std::size_t>(f->order(), 6);
      std::vector<Elem> pts, v;
      for (std::size_t i = 0; i < n; ++i) {
        pts.push_back(Elem(codes[i]));
        v.push_back(Elem(nz(rng)));
      }
      auto es = make_eval_set(f, pts);
      es.multipliers = v;
      for (std::size_t k = 1; k <= 3; ++k) {
        const auto g = generator_matrix(es, k);
        CHECK(min_distance(g) == n - k + 1);
      }
    }
  }
}

TEST_CASE("disjoint union: L over S1 u S2 equals L over S1 times the vanishing polynomial of S2") {
  std::mt19937_64 rng(11);
  for (std::uint32_t q : {13u, 25u, 27u, 49u}) {
    auto f = make_field_of_order(q);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<std::uint32_t> codes(q);
      std::iota(codes.begin(), codes.end(), 0u);
      std::shuffle(codes.begin(), codes.end(), rng);
      const std::size_t n1 = 1 + rng() % 5, n2 = 1 + rng() % 5;
      std::vector<Elem> s1, s2, all;
      for (std::size_t i = 0; i < n1; ++i) s1.push_back(Elem(codes[i]));
      for (std::size_t i = 0; i < n2; ++i) s2.push_back(Elem(codes[n1 + i]));
      all = s1;
      all.insert(all.end(), s2.begin(), s2.end());
      const auto l1 = lagrange_l(*f, s1);
      const auto lu = lagrange_l(*f, all);
      for (std::size_t i = 0; i < n1; ++i) CHECK(lu[i] == f->mul(l1[i], vanishing_eval(*f, s2, s1[i])));
    }
  }
}

TEST_CASE("union of cosets of <theta^e>: vanishing polynomial factors through x^f") {
  for (std::uint32_t q : {13u, 25u, 31u, 81u}) {
    auto f = make_field_of_order(q);
    for (std::uint64_t e : nt::divisors(q - 1)) {
      const std::uint64_t fo = (q - 1) / e;
      if (e == 1) continue;
      // cosets theta^i H for i = 0, 2, 3 (mod e), as many as fit
      std::vector<std::uint64_t> reps;
      for (std::uint64_t i : {0ull, 2ull, 3ull}) {
        if (i < e) reps.push_back(i);
      }
      std::vector<Elem> s;
      for (auto i : reps) {
        for (std::uint64_t j = 0; j < fo; ++j) s.push_back(f->from_log(static_cast<std::int64_t>(i + j * e)));
      }
      for (std::uint32_t c = 0; c < q; ++c) {
        const Elem x(c);
        Elem g = f->one();
        for (auto i : reps) {
          const Elem xi = f->from_log(static_cast<std::int64_t>(i));
          g = f->mul(g, f->sub(f->pow(x, static_cast<std::int64_t>(fo)), f->pow(xi, static_cast<std::int64_t>(fo))));
        }
        CHECK(vanishing_eval(*f, s, x) == g);
      }
    }
  }
}

TEST_CASE("certify_code and wrappers reject bad input") {
  auto f = make_field(13, 1);
  CHECK_THROWS_AS(grs_self_dual(f, ints(*f, {0, 1, 2, 4}), {"manual", {}}), Error);
  CHECK_THROWS_AS(extended_grs_self_dual(f, ints(*f, {0, 1, 2}), {"manual", {}}), Error);
  CHECK_THROWS_AS(make_eval_set(f, ints(*f, {0, 1, 1})), Error);
  try {
    grs_self_dual(f, ints(*f, {0, 1, 2, 4}), {"manual", {}});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BaseNotSelfDual);
  }
  auto es = make_eval_set(f, ints(*f, {0, 1, 2, 3}));
  es.multipliers = ints(*f, {1, 1, 1, 1});
  CHECK_THROWS_AS(certify_code(es, {"manual", {}}), Error);
}

TEST_CASE("parse_mds_mode round trip") {
  for (auto mode : {MdsMode::exhaustive, MdsMode::minors, MdsMode::sampled}) {
    CHECK(parse_mds_mode(to_string(mode)) == mode);
  }
  CHECK_FALSE(parse_mds_mode("fast"));
}

TEST_CASE("structured_gram agrees with G G^T") {
  std::mt19937_64 rng(5);
  for (std::uint32_t q : {13u, 25u, 27u}) {
    auto f = make_field_of_order(q);
    for (bool extended : {false, true}) {
      std::vector<std::uint32_t> codes(q);
      std::iota(codes.begin(), codes.end(), 0u);
      std::shuffle(codes.begin(), codes.end(), rng);
      std::vector<Elem> pts, v;
      for (std::size_t i = 0; i < 9; ++i) {
        pts.push_back(Elem(codes[i]));
        v.push_back(Elem(1 + static_cast<std::uint32_t>(rng() % (q - 1))));
      }
      auto es = make_eval_set(f, pts, extended);
      es.multipliers = v;
      for (std::size_t k = 0; k <= 5; ++k) CHECK(structured_gram(es, k) == gram(generator_matrix(es, k)));
    }
  }
}
