#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "doctest.h"
#include "mdsgrs/numtheory.hpp"
#include "mdsgrs/search.hpp"

using namespace mdsgrs;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidArgument;
}

// Nonzero squares by squaring every element.
std::set<Elem> squares(const Field& f) {
  std::set<Elem> out;
  for (std::uint32_t c = 1; c < f.order(); ++c) out.insert(f.mul(Elem(c), Elem(c)));
  return out;
}

bool pairwise_square(const Field& f, const std::vector<Elem>& a) {
  const auto sq = squares(f);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (!sq.count(f.sub(a[j], a[i]))) return false;
  return true;
}

const CatalogEntry& entry_for(const std::vector<CatalogEntry>& es, std::uint64_t n) {
  auto it = std::find_if(es.begin(), es.end(), [n](const CatalogEntry& e) { return e.n == n; });
  REQUIRE(it != es.end());
  return *it;
}

bool has_theorem(const CatalogEntry& e, const std::string& th) {
  return std::any_of(e.provenance.begin(), e.provenance.end(), [&](const Provenance& p) { return p.theorem == th; });
}

}  // namespace

TEST_CASE("greedy clique: small cases") {
  auto f13 = make_field(13, 1);
  auto two = square_clique_greedy(*f13, 2);
  REQUIRE(two);
  CHECK(*two == std::vector<Elem>{f13->zero(), f13->one()});

  auto f49 = make_field(7, 2);
  auto four = square_clique_greedy(*f49, 4);
  REQUIRE(four);
  CHECK(four->size() == 4);
  CHECK(pairwise_square(*f49, *four));

  auto f5 = make_field(5, 1);
  if (auto five = square_clique_greedy(*f5, 5)) CHECK(pairwise_square(*f5, *five));
}

TEST_CASE("greedy clique: soundness on every field q <= 300, q = 1 mod 4") {
  for (std::uint64_t q = 5; q <= 300; q += 4) {
    if (!nt::prime_power(q)) continue;
    auto f = make_field_of_order(q);
    for (std::size_t n = 2; n <= 8; ++n)
      if (auto a = square_clique_greedy(*f, n)) CHECK(pairwise_square(*f, *a));
  }
}

TEST_CASE("large-q bound") {
  CHECK(large_q_bound(4) == doctest::Approx(45.86).epsilon(1e-4));
  CHECK(large_q_bound(4) == doctest::Approx(std::pow(2.5 + std::sqrt(18.25), 2)));
  // n = 2: t = -1/2 + 1/2 = 0 and the bound is (0 + 1)^2.
  CHECK(large_q_bound(2) == doctest::Approx(1.0));
  for (std::uint32_t n = 4; n <= 16; n += 2) CHECK(large_q_bound(n + 2) > large_q_bound(n));
}

TEST_CASE("clique count bound is non-negative above the threshold") {
  for (std::uint32_t n : {4u, 6u, 8u}) {
    const double b = large_q_bound(n);
    CHECK(clique_count_lower_bound(b, n) == doctest::Approx(0.0).epsilon(1e-6).scale(1.0));
    for (double q = std::floor(b) + 1; q < 50 * b; q *= 1.7) CHECK(clique_count_lower_bound(q, n) >= 0.0);
  }
}

TEST_CASE("th_large_q_code") {
  auto f49 = make_field(7, 2);
  auto code = th_large_q_code(f49, 4);
  CHECK(code.length() == 4);
  CHECK(code.provenance.theorem == "thq");
  CHECK(check_self_dual(code.generator()));
  CHECK(check_mds(code.generator(), MdsMode::exhaustive));

  auto f13 = make_field(13, 1);
  CHECK(kind_of([&] { th_large_q_code(f13, 4); }) == ErrorKind::HypothesisViolated);
  try {
    auto c13 = th_large_q_code(f13, 4, true);
    CHECK(check_self_dual(c13.generator()));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::GreedyFailed);
  }
  CHECK(kind_of([&] { th_large_q_code(make_field(7, 1), 4, true); }) == ErrorKind::HypothesisViolated);
  CHECK(kind_of([&] { th_large_q_code(make_field(47, 1), 4); }) == ErrorKind::HypothesisViolated);
}

TEST_CASE("catalog: q = 81 has 36 via th1") {
  const auto es = catalog(81, 100);
  CHECK(es.size() == 50);
  const auto& e = entry_for(es, 36);
  CHECK(e.status == CatalogStatus::constructed);
  const bool found = std::any_of(e.provenance.begin(), e.provenance.end(), [](const Provenance& p) {
    return p.theorem == "th1" && p.params["r"] == 9 && p.params["e"] == 1 && p.params["t"] == 2;
  });
  CHECK(found);
  CHECK(entry_for(es, 100).status == CatalogStatus::unknown);
}

TEST_CASE("catalog: q = 7 nonexistence") {
  const auto es = catalog(7, 10);
  CHECK(entry_for(es, 2).status == CatalogStatus::nonexistent);
  CHECK(entry_for(es, 6).status == CatalogStatus::nonexistent);
  CHECK(entry_for(es, 10).status == CatalogStatus::nonexistent);
  CHECK(entry_for(es, 4).status != CatalogStatus::nonexistent);
  CHECK(!entry_for(es, 6).certificate);
}

TEST_CASE("catalog: q = 169 has 52 via th2 and 40 via th3") {
  const auto es = catalog(169, 60);
  CHECK(has_theorem(entry_for(es, 52), "th2"));
  CHECK(has_theorem(entry_for(es, 40), "th3"));
}

TEST_CASE("catalog: q = 25 two-decomposition lengths") {
  const auto es = catalog(25, 12);
  const auto& four = entry_for(es, 4);
  CHECK(has_theorem(four, "th12"));
  CHECK(has_theorem(four, "th13"));
  CHECK(has_theorem(entry_for(es, 8), "th12"));
  CHECK(has_theorem(entry_for(es, 12), "th12"));
  CHECK(has_theorem(entry_for(es, 10), "th13"));
}

TEST_CASE("catalog: provenance order and certificates") {
  const auto& order = theorem_order();
  auto order_rank = [&](const std::string& th) { return std::find(order.begin(), order.end(), th) - order.begin(); };
  for (std::uint64_t q : {9u, 25u, 49u, 81u, 121u, 125u, 169u}) {
    for (const auto& e : catalog(q, q + 1)) {
      CHECK(e.n % 2 == 0);
      for (std::size_t i = 1; i < e.provenance.size(); ++i)
        CHECK(order_rank(e.provenance[i - 1].theorem) <= order_rank(e.provenance[i].theorem));
      if (e.status == CatalogStatus::constructed) {
        REQUIRE(e.certificate);
        CHECK(e.certificate->length() == e.n);
        CHECK(e.certificate->provenance.theorem == e.provenance.front().theorem);
        const auto g = e.certificate->generator();
        CHECK(check_self_dual(g));
        CHECK(rank(g) == e.n / 2);
      } else {
        CHECK(!e.certificate);
        CHECK(e.provenance.empty());
      }
    }
  }
}

TEST_CASE("catalog: first-hit mode keeps one witness") {
  CatalogOptions opt;
  opt.first_hit_only = true;
  const auto all = catalog(81, 82);
  const auto first = catalog(81, 82, opt);
  REQUIRE(all.size() == first.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(all[i].status == first[i].status);
    if (first[i].status == CatalogStatus::constructed) {
      CHECK(first[i].provenance.size() == 1);
      CHECK(first[i].provenance[0].flat() == all[i].provenance[0].flat());
    }
  }
}

TEST_CASE("catalog: no constructed entry at q = 3 mod 4, n = 2 mod 4 (q <= 200)") {
  CatalogOptions opt;
  opt.first_hit_only = true;
  std::size_t checked = 0;
  for (std::uint64_t q = 3; q <= 200; q += 2) {
    if (!nt::prime_power(q)) continue;
    for (const auto& e : catalog(q, q + 1, opt)) {
      CHECK(!(e.status == CatalogStatus::constructed && q % 4 == 3 && e.n % 4 == 2));
      if (q % 4 == 3 && e.n % 4 == 2) {
        CHECK(e.status == CatalogStatus::nonexistent);
        ++checked;
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("catalog: field beyond the table limit") {
  CatalogOptions opt;
  opt.table_limit = 1000;
  CHECK(kind_of([&] { catalog(1331, 10, opt); }) == ErrorKind::TableLimitExceeded);
}
