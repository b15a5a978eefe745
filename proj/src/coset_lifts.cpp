#include "mdsgrs/coset_lifts.hpp"

#include <algorithm>

#include "hypothesis.hpp"
#include "mdsgrs/constructions.hpp"
#include "mdsgrs/numtheory.hpp"

namespace mdsgrs {

using detail::ensure;
using detail::eta_int;
using detail::require;

namespace {

std::string str(std::uint64_t x) { return std::to_string(x); }

void check_size(std::uint64_t n) {
  if (n > kMaxCodeLength) {
    throw Error(ErrorKind::EnumerationTooLarge,
                "construction would have " + str(n) + " points, limit " + str(kMaxCodeLength));
  }
}

void check_distinct(std::span<const Elem> xs) {
  std::vector<Elem> sorted(xs.begin(), xs.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorKind::DuplicatePoints, "base points must be distinct");
  }
}

std::int64_t as_signed(std::uint64_t x) { return static_cast<std::int64_t>(x); }

int parity_sign(std::uint64_t exponent_parity) { return exponent_parity % 2 == 0 ? 1 : -1; }

}  // namespace

CosetSpec make_coset_spec(const Field& f, std::uint64_t ambient, std::uint64_t e1) {
  if (!f.is_subfield_order(ambient)) {
    throw Error(ErrorKind::NotASubfield, "GF(" + str(ambient) + ") is not a subfield of " + f.name());
  }
  if (e1 == 0 || (ambient - 1) % e1 != 0) {
    throw Error(ErrorKind::InvalidArgument, "e1 = " + str(e1) + " does not divide " + str(ambient - 1));
  }
  return {ambient, e1, (ambient - 1) / e1};
}

Elem coset_generator(const Field& f, const CosetSpec& cs) {
  return f.from_log(as_signed((f.order() - 1) / (cs.ambient - 1)));
}

std::uint64_t coset_index(const Field& f, const CosetSpec& cs, Elem alpha) {
  f.check(alpha);
  if (alpha.is_zero()) throw Error(ErrorKind::InvalidArgument, "0 is not in H1");
  const std::uint64_t step = (f.order() - 1) / (cs.ambient - 1);
  const std::uint64_t l = f.log(alpha);
  if (l % step != 0 || (l / step) % cs.e1 != 0) {
    throw Error(ErrorKind::InvalidArgument, "element " + str(alpha.code()) + " is not in H1 = <theta'^" +
                                                str(cs.e1) + ">");
  }
  return l / step / cs.e1;
}

std::vector<Elem> coset_lift_points(const Field& f, const CosetSpec& cs, std::span<const Elem> base) {
  check_distinct(base);
  check_size(base.size() * cs.e1);
  const Elem g = coset_generator(f, cs);
  std::vector<std::uint64_t> idx;
  for (Elem a : base) idx.push_back(coset_index(f, cs, a));

  std::vector<Elem> points;
  points.reserve(base.size() * cs.e1);
  for (std::uint64_t v : idx) {
    for (std::uint64_t u = 0; u < cs.e1; ++u) points.push_back(f.pow(g, as_signed(v + cs.e2 * u)));
  }

  const auto l_base = lagrange_l(f, base);
  const auto l_lift = lagrange_l(f, points);
  const Elem e1 = f.from_int(as_signed(cs.e1));
  for (std::size_t k = 0; k < base.size(); ++k) {
    const Elem head = f.mul(f.mul(e1, f.pow(g, as_signed(idx[k] * (cs.e1 - 1)))), l_base[k]);
    for (std::uint64_t u = 0; u < cs.e1; ++u) {
      const Elem expected = f.mul(head, f.pow(g, -as_signed(cs.e2 * u)));
      ensure(l_lift[k * cs.e1 + u] == expected,
             "coset lift identity fails at base point " + str(k) + ", u = " + str(u));
    }
  }
  return points;
}

std::vector<Elem> lemma9_lift_points(const Field& f, const CosetSpec& cs, std::span<const Elem> base) {
  if (cs.e1 % 2 == 0) throw Error(ErrorKind::E1NotOdd, "e1 = " + str(cs.e1) + " is even");
  if (!lemma1_multipliers(f, base)) {
    throw Error(ErrorKind::BaseNotSelfDual, "eta(L_a) is not constant on the base points");
  }
  auto points = coset_lift_points(f, cs, base);
  ensure(lemma1_multipliers(f, points).has_value(), "coset lift lost the constant-character property");
  return points;
}

std::vector<Elem> lemma10_lift_points(const Field& f, const CosetSpec& cs, std::span<const Elem> base) {
  if (cs.e1 % 2 == 0) throw Error(ErrorKind::E1NotOdd, "e1 = " + str(cs.e1) + " is even");
  const int eta_e1 = eta_int(f, as_signed(cs.e1));
  if (eta_e1 != 1) {
    // With q = 1 mod 4 quadratic reciprocity forces eta(e1) = +1.
    ensure(f.order() % 4 != 1, "eta(e1) = -1 although q = 1 mod 4 (e1 = " + str(cs.e1) + ")");
    throw Error(ErrorKind::CharacterCondition,
                "requires eta(e1) = +1; " + detail::eta_text(f, str(cs.e1), f.from_int(as_signed(cs.e1))));
  }
  if (!lemma2_multipliers(f, base)) {
    throw Error(ErrorKind::BaseNotSelfDual, "eta(-L_a) is not identically +1 on the base points");
  }
  auto points = coset_lift_points(f, cs, base);
  ensure(lemma2_multipliers(f, points).has_value(), "coset lift lost the eta(-L) = +1 property");
  return points;
}

SelfDualCode lemma9_lift(FieldPtr f, std::uint64_t e1, std::vector<Elem> base) {
  const auto cs = make_coset_spec(*f, f->order(), e1);
  auto points = lemma9_lift_points(*f, cs, base);
  Provenance prov{"lemma9", {{"e1", e1}}};
  return grs_self_dual(std::move(f), std::move(points), std::move(prov));
}

SelfDualCode lemma10_lift(FieldPtr f, std::uint64_t e1, std::vector<Elem> base) {
  const auto cs = make_coset_spec(*f, f->order(), e1);
  auto points = lemma10_lift_points(*f, cs, base);
  Provenance prov{"lemma10", {{"e1", e1}}};
  return extended_grs_self_dual(std::move(f), std::move(points), std::move(prov));
}

std::string_view to_string(CosetVariant v) {
  switch (v) {
    case CosetVariant::th8: return "th8";
    case CosetVariant::th9: return "th9";
    case CosetVariant::th10: return "th10";
    case CosetVariant::th11: return "th11";
  }
  return "unknown";
}

bool is_extended(CosetVariant v) { return v == CosetVariant::th10 || v == CosetVariant::th11; }

std::vector<Elem> coset_base_points(const Field& f, CosetVariant variant, std::uint64_t r, std::uint32_t s,
                                    std::uint32_t e, std::uint64_t t) {
  const auto R = nt::checked_pow(r, s);
  require(R && f.is_subfield_order(*R), "GF(r^s) to be a subfield of " + f.name());
  require(e < s, "0 <= e <= s-1 (e = " + str(e) + ", s = " + str(s) + ")");
  require(t >= 1 && (r - 1) % t == 0, "t | r-1 (t = " + str(t) + ", r = " + str(r) + ")");
  const std::int64_t ti = as_signed(t);
  const auto roots = [&](bool with_zero) {
    std::vector<Elem> b;
    if (with_zero) b.push_back(f.zero());
    const Elem beta = f.from_log(as_signed((f.order() - 1) / t));
    for (std::uint64_t i = 1; i <= t; ++i) b.push_back(f.pow(beta, as_signed(i)));
    return b;
  };
  const auto lift = [&](std::vector<Elem> b) {
    const auto space = default_subspace(f, r, *R, e);
    return subspace_lift(f, {std::move(b), r, space, default_shift(f, space, *R)});
  };
  switch (variant) {
    case CosetVariant::th8:
      require(t % 2 == 0 && t > 1 && t < r - 1, "t even with 1 < t < r-1 (t = " + str(t) + ")");
      return th1_points(f, r, *R, e, t / 2);
    case CosetVariant::th9:
      require(t % 2 == 1, "t odd (t = " + str(t) + ")");
      require(eta_int(f, -ti) == 1, "eta(-t) = +1; " + detail::eta_text(f, "-" + str(t), f.from_int(-ti)));
      return lift(roots(true));
    case CosetVariant::th10: {
      require(t % 2 == 1, "t odd (t = " + str(t) + ")");
      const std::uint64_t re = *nt::checked_pow(r, e);
      const std::int64_t arg = ((re + 1) / 2) % 2 == 0 ? ti : -ti;
      require(eta_int(f, arg) == 1, "eta((-1)^((r^e+1)/2) t) = +1; " +
                                        detail::eta_text(f, std::to_string(arg), f.from_int(arg)));
      auto points = lift(roots(false));
      ensure(lemma2_multipliers(f, points).has_value(), "mu_t lift fails the extended criterion");
      return points;
    }
    case CosetVariant::th11:
      require(t % 2 == 0 && t < r - 1, "t even with t < r-1 (t = " + str(t) + ")");
      return th4_points(f, r, *R, e, t);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown variant");
}

SelfDualCode iterated_lift(FieldPtr f, CosetVariant variant, std::uint64_t r, std::uint32_t s,
                           std::span<const std::uint32_t> ms, std::uint32_t e, std::uint64_t t) {
  if (ms.empty()) throw Error(ErrorKind::InvalidArgument, "need at least one extension degree");
  if (s == 0) throw Error(ErrorKind::InvalidArgument, "s must be >= 1");
  std::uint64_t total = s;
  for (auto m : ms) {
    if (m == 0) throw Error(ErrorKind::InvalidArgument, "extension degrees must be >= 1");
    require(m % 2 == 1, "every m_i odd (m = " + str(m) + ")");
    total *= m;
  }
  const auto q = total <= 64 ? nt::checked_pow(r, static_cast<std::uint32_t>(total)) : std::nullopt;
  if (!q || *q != f->order()) {
    throw Error(ErrorKind::InvalidArgument, f->name() + " is not GF(r^(s m_1 ... m_l)) for r = " + str(r));
  }
  if (variant == CosetVariant::th8) require(f->order() % 4 == 1, "q = 1 mod 4 (q = " + str(f->order()) + ")");

  const std::uint64_t R = *nt::checked_pow(r, s);
  auto points = coset_base_points(*f, variant, r, s, e, t);

  std::uint64_t predicted = points.size();
  bool trivial = true;
  {
    std::uint64_t P = R;
    for (auto m : ms) {
      const std::uint64_t Q = *nt::checked_pow(P, m);
      predicted *= (Q - 1) / (P - 1);
      check_size(predicted);
      trivial = trivial && m == 1;
      P = Q;
    }
  }

  if (!trivial) {
    auto candidates = f->subfield_elements(R);
    std::sort(candidates.begin(), candidates.end());
    std::optional<Elem> shift;
    for (Elem a : candidates) {
      if (std::none_of(points.begin(), points.end(), [&](Elem x) { return f->add(a, x).is_zero(); })) {
        shift = a;
        break;
      }
    }
    require(shift.has_value(), "a base of at most r^s - 1 points (it fills GF(r^s))");
    for (auto& x : points) x = f->add(*shift, x);
  }

  std::uint64_t P = R;
  for (auto m : ms) {
    const std::uint64_t Q = *nt::checked_pow(P, m);
    if (m > 1) {
      const auto cs = make_coset_spec(*f, Q, (Q - 1) / (P - 1));
      points = is_extended(variant) ? lemma10_lift_points(*f, cs, points) : lemma9_lift_points(*f, cs, points);
    }
    P = Q;
  }

  Provenance prov;
  if (ms.size() == 1) {
    prov.theorem = std::string(to_string(variant));
    prov.params = {{"r", r}, {"s", s}, {"m", ms[0]}, {"e", e}, {"t", t}};
  } else {
    static constexpr const char* kCor[] = {"cor1", "cor2", "cor3", "cor4"};
    prov.theorem = kCor[static_cast<int>(variant)];
    prov.params = {{"r", r}, {"s", s}, {"ms", std::vector<std::uint32_t>(ms.begin(), ms.end())}, {"e", e}, {"t", t}};
  }
  return is_extended(variant) ? extended_grs_self_dual(std::move(f), std::move(points), std::move(prov))
                              : grs_self_dual(std::move(f), std::move(points), std::move(prov));
}

SelfDualCode th8_code(FieldPtr f, std::uint64_t r, std::uint32_t s, std::uint32_t m, std::uint32_t e, std::uint64_t t) {
  const std::uint32_t ms[] = {m};
  return iterated_lift(std::move(f), CosetVariant::th8, r, s, ms, e, t);
}

SelfDualCode th9_code(FieldPtr f, std::uint64_t r, std::uint32_t s, std::uint32_t m, std::uint32_t e, std::uint64_t t) {
  const std::uint32_t ms[] = {m};
  return iterated_lift(std::move(f), CosetVariant::th9, r, s, ms, e, t);
}

SelfDualCode th10_code(FieldPtr f, std::uint64_t r, std::uint32_t s, std::uint32_t m, std::uint32_t e,
                       std::uint64_t t) {
  const std::uint32_t ms[] = {m};
  return iterated_lift(std::move(f), CosetVariant::th10, r, s, ms, e, t);
}

SelfDualCode th11_code(FieldPtr f, std::uint64_t r, std::uint32_t s, std::uint32_t m, std::uint32_t e,
                       std::uint64_t t) {
  const std::uint32_t ms[] = {m};
  return iterated_lift(std::move(f), CosetVariant::th11, r, s, ms, e, t);
}

TwoDecomposition make_two_decomposition(const Field& f, std::uint64_t e1, std::uint64_t e2, std::uint64_t s) {
  const std::uint64_t n = f.order() - 1;
  if (e1 == 0 || e2 == 0 || n % e1 != 0 || n % e2 != 0) {
    throw Error(ErrorKind::InvalidArgument, "e1 = " + str(e1) + " and e2 = " + str(e2) + " must divide " + str(n));
  }
  TwoDecomposition td;
  td.r = f.degree() % 2 == 0 ? *nt::checked_pow(f.characteristic(), f.degree() / 2) : 0;
  td.e1 = e1;
  td.f1 = n / e1;
  td.e2 = e2;
  td.f2 = n / e2;
  td.s = s;
  td.D = td.f2 / nt::gcd(td.f2, td.f1);
  return td;
}

bool in_subgroup(const Field& f, const TwoDecomposition& td, Elem x) {
  return !x.is_zero() && f.pow(x, as_signed(td.f1)) == f.one();
}

std::vector<std::uint64_t> distinct_coset_indices(const Field& f, const TwoDecomposition& td, std::uint64_t t) {
  if (t == 0) throw Error(ErrorKind::InvalidArgument, "t must be >= 1");
  if (t > td.D) throw Error(ErrorKind::TooManyCosets, "t = " + str(t) + " exceeds D = " + str(td.D));
  std::vector<std::uint64_t> idx(t);
  for (std::uint64_t i = 0; i < t; ++i) idx[i] = i;
  const Elem beta = f.from_log(as_signed(td.e2));
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = i + 1; j < idx.size(); ++j) {
      ensure(!in_subgroup(f, td, f.pow(beta, as_signed(idx[i]) - as_signed(idx[j]))),
             "cosets " + str(idx[i]) + " and " + str(idx[j]) + " coincide");
    }
  }
  return idx;
}

std::vector<Elem> coset_union(const Field& f, const TwoDecomposition& td, std::span<const std::uint64_t> indices) {
  check_size(indices.size() * td.f1);
  std::vector<Elem> out;
  out.reserve(indices.size() * td.f1);
  for (std::uint64_t i : indices) {
    for (std::uint64_t j = 0; j < td.f1; ++j) out.push_back(f.from_log(as_signed(i * td.e2 + j * td.e1)));
  }
  check_distinct(out);
  return out;
}

std::string_view to_string(Th12Variant v) { return v == Th12Variant::tf ? "tf" : "tf+2"; }

namespace {

void check_square_field(const Field& f, std::uint64_t r) {
  if (r < 3 || r % 2 == 0 || r * r != f.order()) {
    throw Error(ErrorKind::InvalidArgument, f.name() + " is not GF(r^2) for r = " + str(r));
  }
}

Provenance two_dec_prov(const std::string& theorem, const std::string& variant, std::uint64_t r, std::uint64_t e,
                        std::uint64_t fo, std::uint64_t s, std::uint64_t t, const std::vector<std::uint64_t>& idx) {
  Provenance p{theorem, nlohmann::ordered_json::object()};
  if (!variant.empty()) p.params["variant"] = variant;
  p.params["r"] = r;
  p.params["e"] = e;
  p.params["f"] = fo;
  p.params["s"] = s;
  p.params["t"] = t;
  p.params["indices"] = idx;
  return p;
}

}  // namespace

SelfDualCode th12_code(FieldPtr f, std::uint64_t r, std::uint64_t e, std::uint64_t fo, std::uint64_t s,
                       std::uint64_t t, Th12Variant variant) {
  check_square_field(*f, r);
  const std::uint64_t q = f->order();
  require(e * fo == q - 1, "q - 1 = e f (e = " + str(e) + ", f = " + str(fo) + ")");
  require(s >= 1 && fo % s == 0 && (r - 1) % s == 0, "s | f and s | r-1 (s = " + str(s) + ")");
  const auto td = make_two_decomposition(*f, e, (r - 1) / s, s);
  ensure(td.D == s * (r + 1) / nt::gcd(s * (r + 1), fo), "D mismatch");
  require(t >= 1 && t <= td.D, "1 <= t <= D = " + str(td.D) + " (t = " + str(t) + ")");
  require((t * fo) % 2 == 0, "tf even (tf = " + str(t * fo) + ")");
  auto idx = distinct_coset_indices(*f, td, t);
  const std::uint64_t half = (t - 1) * (r + 1) / 2;

  if (variant == Th12Variant::tf) {
    require(e % 2 == 0, "e even (e = " + str(e) + ")");
    const std::uint64_t A = (r - 1 + fo * t) / s;
    require(A % 2 == 0, "(r-1+ft)/s even (= " + str(A) + ")");
    const auto S = coset_union(*f, td, idx);
    const auto l = lagrange_l(*f, S);
    std::uint64_t I = 0;
    for (auto i : idx) I += i;
    const std::uint64_t tail = half + fo * I / s;
    for (std::size_t mu = 0; mu < idx.size(); ++mu) {
      for (std::uint64_t j = 0; j < fo; ++j) {
        const int expected = parity_sign(idx[mu] * A + j * e + tail);
        ensure(f->eta(l[mu * fo + j]) == expected, "character formula for L_S fails at coset " + str(mu));
      }
    }
    return grs_self_dual(f, S, two_dec_prov("th12", "tf", r, e, fo, s, t, idx));
  }

  const std::uint64_t fs = fo / s;
  if (t <= td.D - 1) {
    const bool case1 = fs % 2 == 0 && half % 2 == 0;
    const bool case2 = fs % 2 == 1 && t % 2 == 0;
    require(case1 || case2, "(f/s and (t-1)(r+1)/2 even) or (f/s odd and t even); f/s = " + str(fs) +
                                ", (t-1)(r+1)/2 = " + str(half) + ", t = " + str(t));
    if (case2) {
      std::uint64_t I = 0;
      for (auto i : idx) I += i;
      if ((I + (r + 1) / 2) % 2 != 0) {
        const std::uint64_t last = idx.back();
        for (std::uint64_t cand = last + 1;; ++cand) {
          const bool clash = std::any_of(idx.begin(), idx.end() - 1, [&](auto i) { return i % td.D == cand % td.D; });
          if (!clash && (I - last + cand + (r + 1) / 2) % 2 == 0) {
            idx.back() = cand;
            break;
          }
        }
      }
    }
  } else {
    const std::uint64_t fts = fo * t / s;
    const std::int64_t x = (as_signed(t) - 1) * (as_signed(r) + 1 - as_signed(fts));
    require(fts % 2 == 0 && x % 4 == 0, "ft/s and (t-1)(r+1-ft/s)/2 even; ft/s = " + str(fts) +
                                            ", (t-1)(r+1-ft/s) = " + std::to_string(x));
  }

  auto S = coset_union(*f, td, idx);
  std::uint64_t I = 0;
  for (auto i : idx) I += i;
  {
    // eta(-L_{S u 0}(gamma)) = (-1)^(i ft/s + (t-1)(r+1)/2 - fI/s), and +1 at 0.
    S.push_back(f->zero());
    const auto l = lagrange_l(*f, S);
    const std::uint64_t fts = fo * t / s;
    for (std::size_t mu = 0; mu < idx.size(); ++mu) {
      for (std::uint64_t j = 0; j < fo; ++j) {
        const int expected = parity_sign(idx[mu] * fts + half + fo * I / s);
        ensure(f->eta(f->neg(l[mu * fo + j])) == expected, "character formula for L_S~ fails at coset " + str(mu));
        ensure(expected == 1, "parity conditions do not give eta(-L) = +1 at coset " + str(mu));
      }
    }
    ensure(f->eta(f->neg(l.back())) == 1, "eta(-L_S~(0)) != +1");
  }
  return extended_grs_self_dual(f, std::move(S), two_dec_prov("th12", "tf+2", r, e, fo, s, t, idx));
}

SelfDualCode th13_code(FieldPtr f, std::uint64_t r, std::uint64_t e, std::uint64_t fo, std::uint64_t s,
                       std::uint64_t t) {
  check_square_field(*f, r);
  const std::uint64_t q = f->order();
  require(e * fo == q - 1, "q - 1 = e f (e = " + str(e) + ", f = " + str(fo) + ")");
  require(s >= 1 && fo % s == 0 && (r + 1) % s == 0, "s | f and s | r+1 (s = " + str(s) + ")");
  const auto td = make_two_decomposition(*f, e, (r + 1) / s, s);
  ensure(td.D == s * (r - 1) / nt::gcd(s * (r - 1), fo), "D mismatch");
  require(t >= 1 && t <= td.D, "1 <= t <= D = " + str(td.D) + " (t = " + str(t) + ")");
  require((t * fo) % 2 == 1, "tf odd (tf = " + str(t * fo) + ")");
  const auto idx = distinct_coset_indices(*f, td, t);

  const Elem beta = f->from_log(as_signed(td.e2));
  std::vector<Elem> a;
  for (auto i : idx) a.push_back(f->pow(beta, as_signed(i * fo)));
  for (Elem x : lagrange_l(*f, a)) {
    ensure(f->in_subfield(x, r), "L_a(beta^(i f)) is not in GF(r)");
    ensure(f->eta(x) == 1, "L_a(beta^(i f)) is not a square");
  }
  auto S = coset_union(*f, td, idx);
  return extended_grs_self_dual(f, std::move(S), two_dec_prov("th13", "", r, e, fo, s, t, idx));
}

}  // namespace mdsgrs
