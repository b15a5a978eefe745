#include "mdsgrs/constructions.hpp"

#include <algorithm>
#include <set>

#include "hypothesis.hpp"
#include "mdsgrs/numtheory.hpp"

namespace mdsgrs {

using detail::ensure;
using detail::eta_int;
using detail::require;

namespace {

std::uint32_t subfield_dimension(const Field& f, std::uint64_t r, std::uint64_t ambient) {
  require(f.is_subfield_order(r), "GF(" + std::to_string(r) + ") to be a subfield of " + f.name());
  require(f.is_subfield_order(ambient), "GF(" + std::to_string(ambient) + ") to be a subfield of " + f.name());
  const auto dim = nt::exact_log(r, ambient);
  require(dim.has_value() && *dim >= 1, std::to_string(ambient) + " to be a power of r = " + std::to_string(r));
  return *dim;
}

void check_order(const Field& f, std::uint64_t base, std::uint32_t m) {
  const auto q = nt::checked_pow(base, m);
  if (!q || *q != f.order()) {
    throw Error(ErrorKind::InvalidArgument, f.name() + " is not GF(" + std::to_string(base) + "^" +
                                                std::to_string(m) + ")");
  }
}

Provenance make_prov(const std::string& theorem, std::initializer_list<std::pair<const char*, std::uint64_t>> kv) {
  Provenance p{theorem, nlohmann::ordered_json::object()};
  for (const auto& [k, v] : kv) p.params[k] = v;
  return p;
}

std::vector<Elem> powers(const Field& f, Elem beta, std::uint64_t from, std::uint64_t to) {
  std::vector<Elem> out;
  for (std::uint64_t i = from; i <= to; ++i) out.push_back(f.pow(beta, static_cast<std::int64_t>(i)));
  return out;
}

}  // namespace

Elem lift_factor(const Field& f, const SubspaceLiftSpec& spec) {
  Elem nonzero = f.one(), shifted = f.one();
  for (Elem v : spec.subspace) {
    if (!v.is_zero()) nonzero = f.mul(nonzero, v);
    shifted = f.mul(shifted, f.add(spec.shift, v));
  }
  const std::int64_t t = static_cast<std::int64_t>(spec.base.size());
  return f.mul(nonzero, f.pow(shifted, t == 0 ? 0 : t - 1));
}

std::vector<Elem> subspace_lift(const Field& f, const SubspaceLiftSpec& spec) {
  const auto in_sub = [&](Elem x) { return f.in_subfield(x, spec.r); };
  {
    auto sorted = spec.base;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorKind::DuplicatePoints, "base points must be distinct");
    }
  }
  for (Elem b : spec.base) {
    f.check(b);
    if (!in_sub(b)) {
      throw Error(ErrorKind::BasePointsNotInSubfield,
                  "base point " + std::to_string(b.code()) + " is not in GF(" + std::to_string(spec.r) + ")");
    }
  }
  const auto dim = nt::exact_log(spec.r, spec.subspace.size());
  if (!dim && spec.subspace.size() != 1) {
    throw Error(ErrorKind::InvalidArgument, "subspace size is not a power of r");
  }
  std::vector<char> member(f.order(), 0);
  for (Elem v : spec.subspace) {
    f.check(v);
    member[v.code()] = 1;
  }
  if (!member[0]) throw Error(ErrorKind::InvalidArgument, "subspace must contain 0");
  const Elem scalar = f.subfield_elements(spec.r).back();
  for (Elem v : spec.subspace) {
    if (!member[f.mul(scalar, v).code()]) throw Error(ErrorKind::InvalidArgument, "subspace not closed under GF(r)");
  }
  if (spec.subspace.size() * spec.subspace.size() <= 10'000'000) {
    for (Elem v : spec.subspace) {
      for (Elem w : spec.subspace) {
        if (!member[f.add(v, w).code()]) throw Error(ErrorKind::InvalidArgument, "subspace not closed under +");
      }
    }
  }
  f.check(spec.shift);
  if (member[spec.shift.code()]) {
    throw Error(ErrorKind::ShiftInSubspace, "shift " + std::to_string(spec.shift.code()) + " lies in V");
  }

  std::vector<Elem> points;
  points.reserve(spec.base.size() * spec.subspace.size());
  for (Elem b : spec.base) {
    const Elem anchor = f.mul(b, spec.shift);
    for (Elem v : spec.subspace) points.push_back(f.add(anchor, v));
  }
  {
    auto sorted = points;
    std::sort(sorted.begin(), sorted.end());
    ensure(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), "lifted points are not distinct");
  }

  const auto l_base = lagrange_l(f, spec.base);
  const auto l_lift = lagrange_l(f, points);
  const Elem factor = lift_factor(f, spec);
  for (std::size_t i = 0; i < spec.base.size(); ++i) {
    const Elem expected = f.mul(factor, l_base[i]);
    for (std::size_t j = 0; j < spec.subspace.size(); ++j) {
      ensure(l_lift[i * spec.subspace.size() + j] == expected, "subspace lift identity fails at point " +
                                                                   std::to_string(i) + "," + std::to_string(j));
    }
  }
  return points;
}

std::vector<Elem> default_subspace_basis(const Field& f, std::uint64_t r, std::uint64_t ambient, std::uint32_t e) {
  const std::uint32_t dim = subfield_dimension(f, r, ambient);
  if (e > dim) throw Error(ErrorKind::InvalidArgument, "subspace dimension exceeds [F_ambient : F_r]");
  const std::uint64_t step = (f.order() - 1) / (ambient - 1);
  std::vector<Elem> basis;
  std::vector<char> span(f.order(), 0);
  span[0] = 1;
  for (std::uint64_t j = 0; basis.size() < e; ++j) {
    const Elem cand = f.from_log(static_cast<std::int64_t>(j * step));
    if (span[cand.code()]) continue;
    basis.push_back(cand);
    for (Elem x : f.span_subspace(r, basis)) span[x.code()] = 1;
  }
  return basis;
}

std::vector<Elem> default_subspace(const Field& f, std::uint64_t r, std::uint64_t ambient, std::uint32_t e) {
  const auto basis = default_subspace_basis(f, r, ambient, e);
  return f.span_subspace(r, basis);
}

Elem default_shift(const Field& f, std::span<const Elem> subspace, std::uint64_t ambient) {
  std::vector<char> member(f.order(), 0);
  for (Elem v : subspace) member[v.code()] = 1;
  for (std::uint32_t c = 0; c < f.order(); ++c) {
    if (!member[c] && f.in_subfield(Elem(c), ambient)) return Elem(c);
  }
  throw Error(ErrorKind::ShiftInSubspace, "subspace is all of GF(" + std::to_string(ambient) + ")");
}

std::vector<Elem> lemma8_extended_lift(const Field& f, std::span<const Elem> base, std::uint64_t r,
                                       std::span<const Elem> subspace, Elem shift) {
  if (base.size() % 2 == 0) throw Error(ErrorKind::EvenLength, "extended lift needs an odd number of base points");
  if (!lemma2_multipliers(f, base)) {
    throw Error(ErrorKind::BaseNotSelfDual, "eta(-L_b) is not identically +1 on the base points");
  }
  const auto dim = nt::exact_log(r, subspace.size());
  const std::uint32_t e = subspace.size() == 1 ? 0 : (dim ? *dim : 0);
  if (f.eta(f.minus_one()) != 1 && e % 2 != 0) {
    throw Error(ErrorKind::ParityCondition,
                "needs q = 1 mod 4 or even subspace dimension; " + f.name() + " with e = " + std::to_string(e));
  }
  SubspaceLiftSpec spec{{base.begin(), base.end()}, r, {subspace.begin(), subspace.end()}, shift};
  auto points = subspace_lift(f, spec);
  ensure(lemma2_multipliers(f, points).has_value(), "extended lift lost the eta(-L) = +1 property");
  return points;
}

std::vector<Elem> th1_points(const Field& f, std::uint64_t r, std::uint64_t ambient, std::uint32_t e,
                             std::uint64_t t) {
  const std::uint32_t m = subfield_dimension(f, r, ambient);
  require(ambient % 4 == 1, "q = 1 mod 4 (q = " + std::to_string(ambient) + ")");
  require(e < m, "0 <= e <= m-1 (e = " + std::to_string(e) + ", m = " + std::to_string(m) + ")");
  require(t >= 1 && ((r - 1) / 2) % t == 0, "t | (r-1)/2 (t = " + std::to_string(t) + ", r = " + std::to_string(r) + ")");
  require(t != (r - 1) / 2, "t != (r-1)/2 (t = " + std::to_string(t) + ")");
  const std::uint64_t q = f.order();
  std::vector<Elem> base;
  if (t % 2 == 1) {
    const Elem beta = f.from_log(static_cast<std::int64_t>((q - 1) / (2 * t)));
    ensure(f.in_subfield(beta, r), "primitive 2t-th root of unity is not in GF(r)");
    ensure(f.eta(beta) == 1, "eta(beta) != 1 for the 2t-th root of unity");
    base = powers(f, beta, 1, 2 * t);
  } else {
    const Elem beta = f.from_log(static_cast<std::int64_t>((q - 1) / t));
    const auto roots = powers(f, beta, 1, t);
    const std::uint64_t sq_step = 2 * ((q - 1) / (r - 1));
    std::optional<Elem> twist;
    for (std::uint64_t k = 0; k < (r - 1) / 2; ++k) {
      const Elem cand = f.from_log(static_cast<std::int64_t>(k * sq_step));
      if (std::find(roots.begin(), roots.end(), cand) != roots.end()) continue;
      if (!twist || cand < *twist) twist = cand;
    }
    ensure(twist.has_value(), "no square of GF(r) outside <beta>");
    base = roots;
    for (Elem x : roots) base.push_back(f.mul(*twist, x));
  }
  const auto space = default_subspace(f, r, ambient, e);
  const Elem shift = default_shift(f, space, ambient);
  return subspace_lift(f, {base, r, space, shift});
}

namespace {

void require_factor_characters(const Field& f, std::uint64_t t, std::uint64_t upto) {
  for (std::uint64_t i = 1; i <= upto; ++i) {
    const std::int64_t x = static_cast<std::int64_t>(i * (t + 1 - i));
    require(eta_int(f, x) == 1, "eta(i(t+1-i)) = +1 for 1 <= i <= " + std::to_string(upto) + "; fails at i = " +
                                    std::to_string(i) + ": " + detail::eta_text(f, std::to_string(x), f.from_int(x)));
  }
}

std::vector<Elem> consecutive_integers(const Field& f, std::uint64_t t) {
  std::vector<Elem> out;
  for (std::uint64_t i = 0; i <= t; ++i) out.push_back(f.from_int(static_cast<std::int64_t>(i)));
  return out;
}

}  // namespace

std::vector<Elem> th2_points(const Field& f, std::uint64_t ambient, std::uint32_t e, std::uint64_t t) {
  const std::uint64_t p = f.characteristic();
  const std::uint32_t m = subfield_dimension(f, p, ambient);
  require(ambient % 4 == 1, "q = 1 mod 4 (q = " + std::to_string(ambient) + ")");
  require(t % 2 == 1 && t >= 2 && t <= p - 1, "t odd with 2 <= t <= p-1 (t = " + std::to_string(t) + ")");
  require(e < m, "0 <= e <= m-1 (e = " + std::to_string(e) + ")");
  require_factor_characters(f, t, (t - 1) / 2);
  const auto space = default_subspace(f, p, ambient, e);
  return subspace_lift(f, {consecutive_integers(f, t), p, space, default_shift(f, space, ambient)});
}

std::vector<Elem> th3_points(const Field& f, std::uint64_t ambient, std::uint32_t e, std::uint64_t t) {
  const std::uint64_t p = f.characteristic();
  const std::uint32_t m = subfield_dimension(f, p, ambient);
  require(ambient % 4 == 1, "q = 1 mod 4 (q = " + std::to_string(ambient) + ")");
  require(t % 2 == 0 && t >= 2 && t <= p - 1, "t even with 2 <= t <= p-1 (t = " + std::to_string(t) + ")");
  require(e < m, "0 <= e <= m-1 (e = " + std::to_string(e) + ")");
  require_factor_characters(f, t, t / 2);
  const auto space = default_subspace(f, p, ambient, e);
  return lemma8_extended_lift(f, consecutive_integers(f, t), p, space, default_shift(f, space, ambient));
}

std::vector<Elem> th4_points(const Field& f, std::uint64_t r, std::uint64_t ambient, std::uint32_t e,
                             std::uint64_t t) {
  const std::uint32_t m = subfield_dimension(f, r, ambient);
  require(t >= 2 && t % 2 == 0 && (r - 1) % t == 0, "t even with t | r-1 (t = " + std::to_string(t) + ")");
  require(e < m, "0 <= e <= m-1 (e = " + std::to_string(e) + ")");
  const std::int64_t ti = static_cast<std::int64_t>(t);
  const bool first = eta_int(f, ti) == 1 && f.eta(f.minus_one()) == 1;
  const bool second = eta_int(f, -ti) == 1 && e % 2 == 0;
  require(first || second, "eta(t) = eta(-1) = +1, or eta(-t) = +1 with e even; have " +
                               detail::eta_text(f, std::to_string(t), f.from_int(ti)) + ", " +
                               detail::eta_text(f, "-1", f.minus_one()) + ", " +
                               detail::eta_text(f, "-" + std::to_string(t), f.from_int(-ti)) +
                               ", e = " + std::to_string(e));
  const Elem beta = f.from_log(static_cast<std::int64_t>((f.order() - 1) / t));
  std::vector<Elem> base{f.zero()};
  for (Elem x : powers(f, beta, 1, t)) base.push_back(x);
  const auto l = lagrange_l(f, base);
  ensure(l[0] == f.minus_one(), "L_b(0) != -1");
  for (std::size_t i = 1; i < l.size(); ++i) ensure(l[i] == f.from_int(ti), "L_b(beta^i) != t");
  const auto space = default_subspace(f, r, ambient, e);
  return lemma8_extended_lift(f, base, r, space, default_shift(f, space, ambient));
}

FieldPtr field_for(std::uint64_t r, std::uint32_t m, std::uint64_t table_limit) {
  const auto pm = nt::prime_power(r);
  if (!pm || pm->first == 2) {
    throw Error(ErrorKind::InvalidArgument, "r = " + std::to_string(r) + " is not an odd prime power");
  }
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "m must be >= 1");
  return make_field(static_cast<std::uint32_t>(pm->first), pm->second * m, table_limit);
}

SelfDualCode th1_code(FieldPtr f, std::uint64_t r, std::uint32_t m, std::uint32_t e, std::uint64_t t) {
  check_order(*f, r, m);
  auto points = th1_points(*f, r, f->order(), e, t);
  return grs_self_dual(f, std::move(points), make_prov("th1", {{"r", r}, {"m", m}, {"e", e}, {"t", t}}));
}

SelfDualCode th2_code(FieldPtr f, std::uint64_t p, std::uint32_t m, std::uint32_t e, std::uint64_t t) {
  check_order(*f, p, m);
  require(nt::is_prime(p), "p prime");
  auto points = th2_points(*f, f->order(), e, t);
  return grs_self_dual(f, std::move(points), make_prov("th2", {{"p", p}, {"m", m}, {"e", e}, {"t", t}}));
}

SelfDualCode th3_code(FieldPtr f, std::uint64_t p, std::uint32_t m, std::uint32_t e, std::uint64_t t) {
  check_order(*f, p, m);
  require(nt::is_prime(p), "p prime");
  auto points = th3_points(*f, f->order(), e, t);
  return extended_grs_self_dual(f, std::move(points), make_prov("th3", {{"p", p}, {"m", m}, {"e", e}, {"t", t}}));
}

SelfDualCode th4_code(FieldPtr f, std::uint64_t r, std::uint32_t m, std::uint32_t e, std::uint64_t t) {
  check_order(*f, r, m);
  auto points = th4_points(*f, r, f->order(), e, t);
  return extended_grs_self_dual(f, std::move(points), make_prov("th4", {{"r", r}, {"m", m}, {"e", e}, {"t", t}}));
}

}  // namespace mdsgrs
