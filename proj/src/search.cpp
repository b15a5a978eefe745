#include "mdsgrs/search.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "hypothesis.hpp"
#include "mdsgrs/constructions.hpp"
#include "mdsgrs/coset_lifts.hpp"
#include "mdsgrs/numtheory.hpp"

namespace mdsgrs {

using detail::require;
using Json = nlohmann::ordered_json;

std::optional<std::vector<Elem>> square_clique_greedy(const Field& f, std::size_t n) {
  std::vector<Elem> out;
  if (n == 0) return out;
  out.push_back(f.zero());
  if (n == 1) return out;
  out.push_back(f.one());
  // A candidate rejected once stays rejected as the set grows, so one pass suffices.
  for (std::uint32_t c = 2; c < f.order() && out.size() < n; ++c) {
    const Elem x(c);
    bool ok = true;
    for (Elem a : out) {
      const Elem d = f.sub(x, a);
      if (d.is_zero() || f.eta(d) != 1) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  if (out.size() < n) return std::nullopt;
  return out;
}

double large_q_bound(std::uint32_t n) {
  const double nn = n;
  const double t = (nn - 3) * std::pow(2.0, nn - 3) + 0.5;
  const double root = std::sqrt(t * t + (nn - 1) * std::pow(2.0, nn - 2));
  return (t + root) * (t + root);
}

double clique_count_lower_bound(double q, std::uint32_t n) {
  const double nn = n;
  const double h = std::pow(2.0, nn - 1);
  return q / h - ((nn - 3) / 2 + 1 / h) * std::sqrt(q) - (nn - 1) / 2;
}

SelfDualCode th_large_q_code(FieldPtr f, std::uint32_t n, bool permissive) {
  const std::uint64_t q = f->order();
  require(n >= 2 && n % 2 == 0, "n even and >= 2 (n = " + std::to_string(n) + ")");
  require(q % 4 == 1, "q = 1 mod 4 (q = " + std::to_string(q) + ")");
  if (!permissive) {
    const double b = large_q_bound(n);
    require(static_cast<double>(q) > b,
            "q > " + std::to_string(b) + " for n = " + std::to_string(n) + " (q = " + std::to_string(q) + ")");
  }
  auto points = square_clique_greedy(*f, n);
  if (!points)
    throw Error(ErrorKind::GreedyFailed,
                "greedy square clique stopped before " + std::to_string(n) + " points in " + f->name());
  Provenance prov;
  prov.theorem = "thq";
  prov.params["n"] = n;
  return grs_self_dual(std::move(f), std::move(*points), std::move(prov));
}

std::string_view to_string(CatalogStatus s) {
  switch (s) {
    case CatalogStatus::constructed: return "constructed";
    case CatalogStatus::nonexistent: return "nonexistent";
    case CatalogStatus::unknown: return "unknown";
  }
  return "?";
}

const std::vector<std::string>& theorem_order() {
  static const std::vector<std::string> order = {"th1",  "th2",  "th3",  "th4",  "th8",  "th9",  "th10", "th11",
                                                 "cor1", "cor2", "cor3", "cor4", "th12", "th13", "thq"};
  return order;
}

namespace {

struct Candidate {
  std::size_t rank = 0;  // index in theorem_order()
  std::string label;
  std::uint64_t length = 0;
  std::function<SelfDualCode()> build;
};

std::size_t theorem_rank(std::string_view id) {
  const auto& order = theorem_order();
  return static_cast<std::size_t>(std::find(order.begin(), order.end(), id) - order.begin());
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t out = 1;
  while (e--) out *= b;
  return out;
}

std::string label_of(const std::string& theorem, const Json& params) {
  Provenance p{theorem, params};
  return p.flat().dump();
}

// Ordered factorizations of m into at least two odd factors >= 3.
void odd_factorizations(std::uint64_t m, std::vector<std::uint32_t>& prefix,
                        std::vector<std::vector<std::uint32_t>>& out) {
  if (m == 1) {
    if (prefix.size() >= 2) out.push_back(prefix);
    return;
  }
  for (std::uint64_t d : nt::divisors(m)) {
    if (d < 3 || d % 2 == 0) continue;
    prefix.push_back(static_cast<std::uint32_t>(d));
    odd_factorizations(m / d, prefix, out);
    prefix.pop_back();
  }
}


class CandidateList {
 public:
  CandidateList(std::uint64_t n_max) : n_max_(n_max) {}

  void add(const std::string& theorem, Json params, std::uint64_t length, std::function<SelfDualCode()> build) {
    if (length < 2 || length % 2 != 0 || length > n_max_) return;
    list_.push_back({theorem_rank(theorem), label_of(theorem, params), length, std::move(build)});
  }

  std::vector<Candidate> take() {
    std::stable_sort(list_.begin(), list_.end(),
                     [](const Candidate& a, const Candidate& b) { return a.rank < b.rank; });
    return std::move(list_);
  }

 private:
  std::uint64_t n_max_;
  std::vector<Candidate> list_;
};

void additive_candidates(const FieldPtr& f, CandidateList& out) {
  const std::uint64_t q = f->order();
  const std::uint64_t p = f->characteristic();
  const std::uint32_t m = f->degree();

  for (std::uint64_t r : f->subfield_orders()) {
    const std::uint32_t mm = *nt::exact_log(r, q);
    for (std::uint64_t t : nt::divisors((r - 1) / 2)) {
      if (t == (r - 1) / 2) continue;
      for (std::uint32_t e = 0; e < mm; ++e)
        out.add("th1", Json{{"r", r}, {"m", mm}, {"e", e}, {"t", t}}, 2 * t * ipow(r, e),
                [=] { return th1_code(f, r, mm, e, t); });
    }
  }
  for (std::uint64_t t = 3; t < p; t += 2)
    for (std::uint32_t e = 0; e < m; ++e)
      out.add("th2", Json{{"p", p}, {"m", m}, {"e", e}, {"t", t}}, (t + 1) * ipow(p, e),
              [=] { return th2_code(f, p, m, e, t); });
  for (std::uint64_t t = 2; t < p; t += 2)
    for (std::uint32_t e = 0; e < m; ++e)
      out.add("th3", Json{{"p", p}, {"m", m}, {"e", e}, {"t", t}}, (t + 1) * ipow(p, e) + 1,
              [=] { return th3_code(f, p, m, e, t); });
  for (std::uint64_t r : f->subfield_orders()) {
    const std::uint32_t mm = *nt::exact_log(r, q);
    for (std::uint64_t t : nt::divisors(r - 1)) {
      if (t % 2 != 0) continue;
      for (std::uint32_t e = 0; e < mm; ++e)
        out.add("th4", Json{{"r", r}, {"m", mm}, {"e", e}, {"t", t}}, (t + 1) * ipow(r, e) + 1,
                [=] { return th4_code(f, r, mm, e, t); });
    }
  }
}

void coset_candidates(const FieldPtr& f, CandidateList& out) {
  const std::uint64_t q = f->order();
  const CosetVariant variants[] = {CosetVariant::th8, CosetVariant::th9, CosetVariant::th10, CosetVariant::th11};
  const char* corollaries[] = {"cor1", "cor2", "cor3", "cor4"};

  for (int vi = 0; vi < 4; ++vi) {
    const CosetVariant variant = variants[vi];
    const bool plus_point = variant == CosetVariant::th9 || variant == CosetVariant::th11;
    for (std::uint64_t r : f->subfield_orders()) {
      const std::uint32_t mm = *nt::exact_log(r, q);
      for (std::uint64_t s64 : nt::divisors(mm)) {
        const auto s = static_cast<std::uint32_t>(s64);
        const std::uint64_t big_m = mm / s;
        if (big_m % 2 == 0) continue;
        // A single unit factor reproduces th1 / th4 exactly for th8 / th11.
        if (big_m == 1 && (variant == CosetVariant::th8 || variant == CosetVariant::th11)) continue;
        const std::uint64_t e1 = (q - 1) / (ipow(r, s) - 1);

        std::vector<std::vector<std::uint32_t>> factorizations = {{static_cast<std::uint32_t>(big_m)}};
        std::vector<std::uint32_t> prefix;
        odd_factorizations(big_m, prefix, factorizations);

        for (const auto& ms : factorizations) {
          const bool single = ms.size() == 1;
          const std::string theorem = single ? std::string(to_string(variant)) : corollaries[vi];
          for (std::uint64_t t : nt::divisors(r - 1)) {
            for (std::uint32_t e = 0; e < s; ++e) {
              const std::uint64_t base = (plus_point ? t + 1 : t) * ipow(r, e);
              const std::uint64_t len = base * e1 + (is_extended(variant) ? 1 : 0);
              Json params{{"r", r}, {"s", s}};
              if (single)
                params["m"] = ms[0];
              else
                params["ms"] = ms;
              params["e"] = e;
              params["t"] = t;
              out.add(theorem, std::move(params), len,
                      [=] { return iterated_lift(f, variant, r, s, ms, e, t); });
            }
          }
        }
      }
    }
  }
}

void two_decomposition_candidates(const FieldPtr& f, std::uint64_t n_max, CandidateList& out) {
  const std::uint64_t q = f->order();
  if (f->degree() % 2 != 0) return;
  const std::uint64_t r = ipow(f->characteristic(), f->degree() / 2);

  for (std::uint64_t e : nt::divisors(q - 1)) {
    const std::uint64_t fo = (q - 1) / e;
    for (std::uint64_t s : nt::divisors(nt::gcd(fo, r - 1))) {
      const std::uint64_t D = s * (r + 1) / nt::gcd(s * (r + 1), fo);
      for (std::uint64_t t = 1; t <= D && t * fo <= n_max; ++t) {
        for (Th12Variant v : {Th12Variant::tf, Th12Variant::tf_plus_2}) {
          const std::uint64_t len = t * fo + (v == Th12Variant::tf ? 0 : 2);
          out.add("th12",
                  Json{{"variant", std::string(to_string(v))}, {"r", r}, {"e", e}, {"f", fo}, {"s", s}, {"t", t}},
                  len, [=] { return th12_code(f, r, e, fo, s, t, v); });
        }
      }
    }
    for (std::uint64_t s : nt::divisors(nt::gcd(fo, r + 1))) {
      const std::uint64_t D = s * (r - 1) / nt::gcd(s * (r - 1), fo);
      for (std::uint64_t t = 1; t <= D && t * fo <= n_max; ++t) {
        if ((t * fo) % 2 == 0) continue;
        out.add("th13", Json{{"r", r}, {"e", e}, {"f", fo}, {"s", s}, {"t", t}}, t * fo + 1,
                [=] { return th13_code(f, r, e, fo, s, t); });
      }
    }
  }
}

void large_q_candidates(const FieldPtr& f, std::uint64_t n_max, CandidateList& out) {
  const std::uint64_t q = f->order();
  if (q % 4 != 1) return;
  for (std::uint64_t n = 2; n <= n_max && n <= q; n += 2) {
    if (static_cast<double>(q) <= large_q_bound(static_cast<std::uint32_t>(n))) break;
    out.add("thq", Json{{"n", n}}, n, [=] { return th_large_q_code(f, static_cast<std::uint32_t>(n)); });
  }
}

// Outcomes that only mean "this parameter point does not apply".
bool is_miss(ErrorKind k) {
  switch (k) {
    case ErrorKind::HypothesisViolated:
    case ErrorKind::BaseNotSelfDual:
    case ErrorKind::ParityCondition:
    case ErrorKind::E1NotOdd:
    case ErrorKind::CharacterCondition:
    case ErrorKind::TooManyCosets:
    case ErrorKind::ShiftInSubspace:
      return true;
    default:
      return false;
  }
}

}  // namespace

std::vector<CatalogEntry> catalog(std::uint64_t q, std::uint64_t n_max, const CatalogOptions& options) {
  FieldPtr f = make_field_of_order(q, options.table_limit);

  CandidateList list(n_max);
  additive_candidates(f, list);
  coset_candidates(f, list);
  two_decomposition_candidates(f, n_max, list);
  large_q_candidates(f, n_max, list);
  const std::vector<Candidate> candidates = list.take();

  std::vector<CatalogEntry> entries;
  for (std::uint64_t n = 2; n <= n_max; n += 2) {
    CatalogEntry entry;
    entry.q = q;
    entry.n = n;
    const bool nonexistent = q % 4 == 3 && n % 4 == 2;

    for (const Candidate& c : candidates) {
      if (c.length != n) continue;
      std::optional<SelfDualCode> code;
      try {
        code = c.build();
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::TableLimitExceeded || e.kind() == ErrorKind::EnumerationTooLarge) {
          entry.skipped.push_back(c.label + ": skipped: field too large");
          continue;
        }
        if (is_miss(e.kind())) continue;
        throw;
      }
      if (nonexistent)
        throw Error(ErrorKind::VerificationFailed, "constructed a self-dual MDS code of length " + std::to_string(n) +
                                                       " over GF(" + std::to_string(q) + "): " + c.label);
      if (code->length() != n)
        throw Error(ErrorKind::VerificationFailed, c.label + " produced length " + std::to_string(code->length()) +
                                                       ", expected " + std::to_string(n));
      entry.provenance.push_back(code->provenance);
      if (!entry.certificate) entry.certificate = std::move(code);
      if (options.first_hit_only) break;
    }

    if (nonexistent)
      entry.status = CatalogStatus::nonexistent;
    else if (entry.certificate)
      entry.status = CatalogStatus::constructed;
    entries.push_back(std::move(entry));
  }
  return entries;
}

}  // namespace mdsgrs
