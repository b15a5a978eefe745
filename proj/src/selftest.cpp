#include "mdsgrs/selftest.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "mdsgrs/constructions.hpp"
#include "mdsgrs/coset_lifts.hpp"
#include "mdsgrs/grs.hpp"
#include "mdsgrs/numtheory.hpp"

namespace mdsgrs {

namespace {

constexpr std::size_t kMaxWitnesses = 5;

std::string str(std::uint64_t x) { return std::to_string(x); }

class Suite {
 public:
  explicit Suite(SuiteResult& r, const Field& f) : r_(r), f_(f) {}

  void check(bool ok, const std::function<std::string()>& witness) {
    ++r_.checks;
    if (ok) return;
    ++r_.failures;
    if (r_.witnesses.size() < kMaxWitnesses) r_.witnesses.push_back(f_.name() + ": " + witness());
  }

 private:
  SuiteResult& r_;
  const Field& f_;
};

Elem naive_product(const Field& f, std::span<const Elem> xs) {
  Elem acc = f.one();
  for (Elem x : xs) acc = f.mul(acc, x);
  return acc;
}

Elem naive_l(const Field& f, std::span<const Elem> a, std::size_t i) {
  Elem acc = f.one();
  for (std::size_t j = 0; j < a.size(); ++j)
    if (j != i) acc = f.mul(acc, f.sub(a[i], a[j]));
  return acc;
}

// theta^((q-1)/m), a primitive m-th root of unity.
Elem root_of_unity(const Field& f, std::uint64_t m) {
  return f.from_log(static_cast<std::int64_t>((f.order() - 1) / m));
}

// m | q-1, alpha primitive m-th root: prod_{j != i}(alpha^i - alpha^j) = m alpha^-i.
void roots_of_unity(const Field& f, SuiteResult& r) {
  Suite s(r, f);
  for (std::uint64_t m : nt::divisors(f.order() - 1)) {
    const Elem alpha = root_of_unity(f, m);
    std::vector<Elem> pts;
    for (std::uint64_t i = 0; i < m; ++i) pts.push_back(f.pow(alpha, static_cast<std::int64_t>(i)));
    const auto l = lagrange_l(f, pts);
    const Elem mm = f.from_int(static_cast<std::int64_t>(m));
    for (std::uint64_t i = 0; i < m; ++i) {
      const Elem expected = f.mul(mm, f.pow(alpha, -static_cast<std::int64_t>(i)));
      s.check(l[i] == expected && naive_l(f, pts, i) == expected, [&] { return "m = " + str(m) + ", i = " + str(i); });
    }
  }
}

// Cosets C = theta^i H with |H| = h: f_C(x) = x^h - theta^(ih), L_C(x) = h x^(h-1) on C.
void coset_derivative(const Field& f, SuiteResult& r) {
  Suite s(r, f);
  const std::uint64_t n = f.order() - 1;
  for (std::uint64_t h : nt::divisors(n)) {
    const Elem g = root_of_unity(f, h);
    const Elem hh = f.from_int(static_cast<std::int64_t>(h));
    for (std::uint64_t i = 0; i < n / h; ++i) {
      const Elem c = f.from_log(static_cast<std::int64_t>(i));
      std::vector<Elem> coset;
      for (std::uint64_t j = 0; j < h; ++j) coset.push_back(f.mul(c, f.pow(g, static_cast<std::int64_t>(j))));
      const Elem c_h = f.pow(c, static_cast<std::int64_t>(h));
      for (std::uint32_t x = 0; x < f.order(); ++x) {
        const Elem got = vanishing_eval(f, coset, Elem(x));
        s.check(got == f.sub(f.pow(Elem(x), static_cast<std::int64_t>(h)), c_h),
                [&] { return "f_C, |H| = " + str(h) + ", coset " + str(i) + ", x = " + str(x); });
      }
      const auto l = lagrange_l(f, coset);
      for (std::size_t j = 0; j < coset.size(); ++j) {
        s.check(l[j] == f.mul(hh, f.pow(coset[j], static_cast<std::int64_t>(h) - 1)),
                [&] { return "L_C, |H| = " + str(h) + ", coset " + str(i) + ", point " + str(j); });
      }
    }
  }
}

// Disjoint S1, S2: L_{S1 u S2}(b) = L_{S1}(b) f_{S2}(b) on S1.
void disjoint_union(const Field& f, SuiteResult& r, std::mt19937_64& rng, std::uint32_t trials) {
  Suite s(r, f);
  std::vector<Elem> all;
  for (std::uint32_t c = 0; c < f.order(); ++c) all.emplace_back(c);
  for (std::uint32_t trial = 0; trial < trials; ++trial) {
    std::shuffle(all.begin(), all.end(), rng);
    const std::size_t n1 = 1 + rng() % std::min<std::size_t>(8, all.size() - 1);
    const std::size_t n2 = 1 + rng() % std::min<std::size_t>(8, all.size() - n1);
    const std::vector<Elem> s1(all.begin(), all.begin() + n1);
    const std::vector<Elem> s2(all.begin() + n1, all.begin() + n1 + n2);
    std::vector<Elem> u = s1;
    u.insert(u.end(), s2.begin(), s2.end());
    const auto lu = lagrange_l(f, u);
    const auto l1 = lagrange_l(f, s1);
    for (std::size_t i = 0; i < n1; ++i)
      s.check(lu[i] == f.mul(l1[i], vanishing_eval(f, s2, s1[i])), [&] { return "trial " + str(trial); });
  }
}

// Union S of t distinct cosets theta^(i_k) H, |H| = h: f_S(x) = g(x^h) with
// g(y) = prod_k (y - theta^(i_k h)).
void coset_factorization(const Field& f, SuiteResult& r, std::mt19937_64& rng, std::uint32_t trials) {
  Suite s(r, f);
  const std::uint64_t n = f.order() - 1;
  const auto divs = nt::divisors(n);
  for (std::uint32_t trial = 0; trial < trials; ++trial) {
    const std::uint64_t h = divs[rng() % divs.size()];
    const std::uint64_t cosets = n / h;
    std::vector<std::uint64_t> idx(cosets);
    for (std::uint64_t i = 0; i < cosets; ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(1 + rng() % cosets);

    const Elem g = root_of_unity(f, h);
    std::vector<Elem> set, roots;
    for (std::uint64_t i : idx) {
      const Elem c = f.from_log(static_cast<std::int64_t>(i));
      roots.push_back(f.pow(c, static_cast<std::int64_t>(h)));
      for (std::uint64_t j = 0; j < h; ++j) set.push_back(f.mul(c, f.pow(g, static_cast<std::int64_t>(j))));
    }
    for (std::uint32_t x = 0; x < f.order(); ++x) {
      const Elem y = f.pow(Elem(x), static_cast<std::int64_t>(h));
      s.check(vanishing_eval(f, set, Elem(x)) == vanishing_eval(f, roots, y),
              [&] { return "|H| = " + str(h) + ", " + str(idx.size()) + " cosets, x = " + str(x); });
    }
  }
}

// Random GF(r)-subspace of dimension e, or empty when the draw is dependent.
std::vector<Elem> random_subspace(const Field& f, std::uint64_t r, std::uint32_t e, std::mt19937_64& rng) {
  std::vector<Elem> basis;
  for (std::uint32_t i = 0; i < e; ++i) basis.emplace_back(static_cast<std::uint32_t>(1 + rng() % (f.order() - 1)));
  try {
    return f.span_subspace(r, basis);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::DependentBasis) return {};
    throw;
  }
}

// eta(prod_{0 != v in V} v) = eta((-1)^((r^e - 1)/2)).
void subspace_product(const Field& f, SuiteResult& r, std::mt19937_64& rng, std::uint32_t trials) {
  Suite s(r, f);
  const std::uint64_t q = f.order();
  for (std::uint64_t sub : f.subfield_orders()) {
    const std::uint32_t dim = *nt::exact_log(sub, q);
    for (std::uint32_t trial = 0; trial < trials; ++trial) {
      const std::uint32_t e = 1 + static_cast<std::uint32_t>(rng() % dim);
      const auto v = random_subspace(f, sub, e, rng);
      if (v.empty()) continue;
      std::vector<Elem> nonzero;
      for (Elem x : v)
        if (!x.is_zero()) nonzero.push_back(x);
      const std::uint64_t size = v.size();
      const int expected = ((size - 1) / 2) % 2 == 0 ? 1 : f.eta(f.minus_one());
      s.check(f.eta(naive_product(f, nonzero)) == expected,
              [&] { return "r = " + str(sub) + ", dim " + str(e); });
    }
  }
}

// Random subspace lifts: L_a(beta_k zeta + v) = (prod v)(prod (zeta+v))^(t-1) L_b(beta_k),
// and eta(L_a) = eta(-1)^((r^e-1)/2) eta(prod (zeta+v))^(t-1) eta(L_b).
void lift_transfer(const Field& f, SuiteResult& r, std::mt19937_64& rng, std::uint32_t trials) {
  Suite s(r, f);
  const std::uint64_t q = f.order();
  for (std::uint64_t sub : f.subfield_orders()) {
    const std::uint32_t dim = *nt::exact_log(sub, q);
    if (dim < 2) continue;
    auto sub_elems = f.subfield_elements(sub);
    for (std::uint32_t trial = 0; trial < trials; ++trial) {
      const std::uint32_t e = 1 + static_cast<std::uint32_t>(rng() % (dim - 1));
      SubspaceLiftSpec spec;
      spec.r = sub;
      spec.subspace = random_subspace(f, sub, e, rng);
      if (spec.subspace.empty()) continue;
      const std::set<Elem> in_v(spec.subspace.begin(), spec.subspace.end());
      do {
        spec.shift = Elem(static_cast<std::uint32_t>(rng() % q));
      } while (in_v.count(spec.shift));
      std::shuffle(sub_elems.begin(), sub_elems.end(), rng);
      const std::size_t t = 1 + rng() % std::min<std::uint64_t>(sub, 5);
      spec.base.assign(sub_elems.begin(), sub_elems.begin() + t);

      std::vector<Elem> pts;
      try {
        pts = subspace_lift(f, spec);
      } catch (const Error& err) {
        s.check(false, [&] { return std::string("subspace_lift threw: ") + err.what(); });
        continue;
      }
      std::vector<Elem> nonzero, shifted;
      for (Elem v : spec.subspace) {
        if (!v.is_zero()) nonzero.push_back(v);
        shifted.push_back(f.add(spec.shift, v));
      }
      const Elem pz = naive_product(f, shifted);
      const Elem factor = f.mul(naive_product(f, nonzero), f.pow(pz, static_cast<std::int64_t>(t) - 1));
      const int sign = (((spec.subspace.size() - 1) / 2) % 2 == 0 ? 1 : f.eta(f.minus_one())) *
                       ((t - 1) % 2 == 0 ? 1 : f.eta(pz));
      const std::size_t w = spec.subspace.size();
      for (std::size_t k = 0; k < t; ++k) {
        const Elem lb = naive_l(f, spec.base, k);
        for (std::size_t j = 0; j < w; ++j) {
          const Elem la = naive_l(f, pts, k * w + j);
          s.check(la == f.mul(factor, lb) && f.eta(la) == sign * f.eta(lb),
                  [&] { return "r = " + str(sub) + ", dim " + str(e) + ", t = " + str(t) + ", point " + str(k * w + j); });
        }
      }
    }
  }
}

// beta^i H = beta^j H iff i = j mod D, D = f2 / gcd(f2, f1); exhaustive over
// e1, e2 | q-1 and all index differences.
void two_decomposition(const Field& f, SuiteResult& r) {
  Suite s(r, f);
  const std::uint64_t n = f.order() - 1;
  for (std::uint64_t e1 : nt::divisors(n)) {
    for (std::uint64_t e2 : nt::divisors(n)) {
      const auto td = make_two_decomposition(f, e1, e2, 1);
      const Elem beta = f.from_log(static_cast<std::int64_t>(e2));
      std::set<Elem> h;
      for (std::uint64_t j = 0; j < td.f1; ++j) h.insert(f.from_log(static_cast<std::int64_t>(e1 * j)));
      for (std::uint64_t d = 0; d < td.f2; ++d) {
        const Elem x = f.pow(beta, static_cast<std::int64_t>(d));
        const bool same = h.count(x) > 0;
        s.check(same == (d % td.D == 0) && same == in_subgroup(f, td, x),
                [&] { return "e1 = " + str(e1) + ", e2 = " + str(e2) + ", d = " + str(d); });
      }
    }
  }
}

// q = 1 mod 4: eta(e1) = +1 for every odd e1 | q-1.
void eta_e1(const Field& f, SuiteResult& r) {
  Suite s(r, f);
  const std::uint64_t q = f.order();
  if (q % 4 != 1) return;
  for (std::uint64_t e1 : nt::divisors(q - 1)) {
    if (e1 % 2 == 0) continue;
    s.check(f.eta(f.from_int(static_cast<std::int64_t>(e1))) == 1, [&] { return "e1 = " + str(e1); });
  }
}

}  // namespace

bool SelftestReport::ok() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.failures == 0; });
}

const std::vector<std::string>& selftest_suites() {
  static const std::vector<std::string> names = {
      "roots-of-unity product", "coset vanishing and derivative", "disjoint union product",
      "coset factorization",    "subspace product character",     "subspace lift transfer",
      "two-decomposition distinctness", "eta(e1) for odd e1"};
  return names;
}

SelftestReport run_selftest(const SelftestOptions& options) {
  SelftestReport report;
  for (const auto& name : selftest_suites()) report.suites.push_back({name, 0, 0, {}});
  auto& sr = report.suites;

  for (std::uint64_t q = 3; q <= options.max_q; q += 2) {
    if (!nt::prime_power(q)) continue;
    const FieldPtr f = options.provider ? options.provider(q) : make_field_of_order(q);
    ++report.fields;
    std::mt19937_64 rng(options.seed ^ (q * 0x9e3779b97f4a7c15ULL));
    const std::uint32_t n = options.random_trials;

    // A corrupted field can break invariants the suites lean on; report it
    // against the suite that was running.
    std::size_t current = 0;
    try {
      roots_of_unity(*f, sr[current = 0]);
      coset_derivative(*f, sr[current = 1]);
      disjoint_union(*f, sr[current = 2], rng, n);
      coset_factorization(*f, sr[current = 3], rng, n);
      subspace_product(*f, sr[current = 4], rng, n);
      lift_transfer(*f, sr[current = 5], rng, n);
      two_decomposition(*f, sr[current = 6]);
      eta_e1(*f, sr[current = 7]);
    } catch (const std::exception& e) {
      ++sr[current].checks;
      ++sr[current].failures;
      if (sr[current].witnesses.size() < kMaxWitnesses)
        sr[current].witnesses.push_back(f->name() + ": " + e.what());
    }
  }
  return report;
}

}  // namespace mdsgrs
