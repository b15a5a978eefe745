#include "mdsgrs/grs.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "mdsgrs/numtheory.hpp"

namespace mdsgrs {

EvalSet make_eval_set(FieldPtr field, std::vector<Elem> points, bool extended) {
  if (!field) throw Error(ErrorKind::InvalidArgument, "null field");
  for (Elem x : points) field->check(x);
  if (points.size() > field->order()) {
    throw Error(ErrorKind::InvalidArgument, "more evaluation points than field elements");
  }
  if (points.size() + (extended ? 1 : 0) > kMaxCodeLength) {
    throw Error(ErrorKind::EnumerationTooLarge, "code length " + std::to_string(points.size()) +
                                                    " exceeds the construction limit " +
                                                    std::to_string(kMaxCodeLength));
  }
  auto sorted = points;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorKind::DuplicatePoints, "evaluation points must be distinct");
  }
  EvalSet es;
  es.field = std::move(field);
  es.points = std::move(points);
  es.extended = extended;
  return es;
}

GeneratorMatrix SelfDualCode::generator() const { return generator_matrix(eval, k); }

std::vector<Elem> lagrange_l(const Field& f, std::span<const Elem> points) {
  const std::size_t n = points.size();
  std::vector<Elem> out(n, f.one());
  for (std::size_t i = 0; i < n; ++i) {
    Elem acc = f.one();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const Elem diff = f.sub(points[i], points[j]);
      if (diff.is_zero()) throw Error(ErrorKind::DuplicatePoints, "repeated evaluation point");
      acc = f.mul(acc, diff);
    }
    out[i] = acc;
  }
  return out;
}

Elem vanishing_eval(const Field& f, std::span<const Elem> set, Elem x) {
  Elem acc = f.one();
  for (Elem s : set) acc = f.mul(acc, f.sub(x, s));
  return acc;
}

std::optional<Lemma1Multipliers> lemma1_multipliers(const Field& f, std::span<const Elem> points) {
  if (points.size() % 2 != 0) {
    throw Error(ErrorKind::OddLength, "GRS self-duality needs an even number of points");
  }
  const auto l = lagrange_l(f, points);
  if (l.empty()) return Lemma1Multipliers{f.one(), {}};
  const int sign = f.eta(l[0]);
  for (Elem x : l) {
    if (f.eta(x) != sign) return std::nullopt;
  }
  Lemma1Multipliers out{sign == 1 ? f.one() : f.theta(), {}};
  out.v.reserve(l.size());
  for (Elem x : l) out.v.push_back(*f.sqrt(f.inv(f.mul(out.lambda, x))));
  return out;
}

std::optional<std::vector<Elem>> lemma2_multipliers(const Field& f, std::span<const Elem> points) {
  if (points.size() % 2 == 0) {
    throw Error(ErrorKind::EvenLength, "extended GRS self-duality needs an odd number of points");
  }
  const auto l = lagrange_l(f, points);
  std::vector<Elem> v;
  v.reserve(l.size());
  for (Elem x : l) {
    const auto root = f.sqrt(f.inv(f.neg(x)));
    if (!root) return std::nullopt;
    v.push_back(*root);
  }
  return v;
}

GeneratorMatrix generator_matrix(const EvalSet& es, std::size_t k) {
  if (!es.has_multipliers() && !es.points.empty()) {
    throw Error(ErrorKind::MultipliersUnset, "evaluation set has no multipliers");
  }
  if (es.multipliers.size() != es.points.size()) {
    throw Error(ErrorKind::ShapeMismatch, "points and multipliers differ in length");
  }
  if (k > es.length()) throw Error(ErrorKind::ShapeMismatch, "dimension exceeds length");
  const Field& f = *es.field;
  const std::size_t n = es.size();
  GeneratorMatrix g(es.field, k, es.length());
  for (std::size_t j = 0; j < n; ++j) {
    Elem cur = es.multipliers[j];
    for (std::size_t i = 0; i < k; ++i) {
      g.at(i, j) = cur;
      cur = f.mul(cur, es.points[j]);
    }
  }
  if (es.extended && k > 0) g.at(k - 1, n) = f.one();
  return g;
}

bool check_self_dual(const GeneratorMatrix& g) {
  if (g.cols() % 2 != 0 || g.rows() * 2 != g.cols()) {
    throw Error(ErrorKind::ShapeMismatch, "self-duality needs a k x 2k matrix, got " +
                                              std::to_string(g.rows()) + " x " + std::to_string(g.cols()));
  }
  const Field& f = g.field();
  for (std::size_t i = 0; i < g.rows(); ++i) {
    const auto a = g.row(i);
    for (std::size_t l = i; l < g.rows(); ++l) {
      const auto b = g.row(l);
      Elem acc = f.zero();
      for (std::size_t j = 0; j < g.cols(); ++j) acc = f.add(acc, f.mul(a[j], b[j]));
      if (!acc.is_zero()) return false;
    }
  }
  return rank(g) == g.rows();
}

namespace {

std::uint64_t message_space(const GeneratorMatrix& g, std::uint64_t limit) {
  const auto total = nt::checked_pow(g.field().order(), static_cast<std::uint32_t>(g.rows()));
  if (!total || *total > limit) {
    throw Error(ErrorKind::EnumerationTooLarge,
                "q^k = " + std::to_string(g.field().order()) + "^" + std::to_string(g.rows()) +
                    " exceeds enumeration limit " + std::to_string(limit));
  }
  return *total;
}

// C(n, k) saturating at cap + 1.
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  long double acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    if (acc > static_cast<long double>(cap)) return cap + 1;
  }
  return static_cast<std::uint64_t>(acc + 0.5L);
}

}  // namespace

std::size_t min_distance(const GeneratorMatrix& g, std::uint64_t enumeration_limit) {
  message_space(g, enumeration_limit);
  const Field& f = g.field();
  const std::size_t k = g.rows(), n = g.cols();
  if (k == 0) return n + 1;
  std::size_t best = n + 1;
  // Codewords up to scalar: the first nonzero message coefficient is 1.
  std::vector<std::vector<Elem>> partial(k + 1, std::vector<Elem>(n));
  auto weight = [&](const std::vector<Elem>& w) {
    return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](Elem x) { return !x.is_zero(); }));
  };
  for (std::size_t lead = 0; lead < k; ++lead) {
    auto& base = partial[lead + 1];
    for (std::size_t j = 0; j < n; ++j) base[j] = g.at(lead, j);
    // Depth-first over coefficients of rows lead+1..k-1.
    auto recurse = [&](auto&& self, std::size_t row) -> void {
      if (row == k) {
        best = std::min(best, weight(partial[row]));
        return;
      }
      const auto& in = partial[row];
      auto& out = partial[row + 1];
      for (std::uint32_t c = 0; c < f.order(); ++c) {
        const Elem coef(c);
        for (std::size_t j = 0; j < n; ++j) out[j] = f.add(in[j], f.mul(coef, g.at(row, j)));
        self(self, row + 1);
      }
    };
    if (lead + 1 == k) {
      best = std::min(best, weight(base));
    } else {
      recurse(recurse, lead + 1);
    }
  }
  return best;
}

std::string_view to_string(MdsMode mode) {
  switch (mode) {
    case MdsMode::exhaustive: return "exhaustive";
    case MdsMode::minors: return "minors";
    case MdsMode::sampled: return "sampled";
  }
  return "unknown";
}

std::optional<MdsMode> parse_mds_mode(std::string_view s) {
  if (s == "exhaustive") return MdsMode::exhaustive;
  if (s == "minors") return MdsMode::minors;
  if (s == "sampled") return MdsMode::sampled;
  return std::nullopt;
}

bool check_mds(const GeneratorMatrix& g, MdsMode mode, const VerifyLimits& limits) {
  const std::size_t k = g.rows(), n = g.cols();
  if (k > n) return false;
  if (k == 0) return true;
  switch (mode) {
    case MdsMode::exhaustive:
      return min_distance(g, limits.enumeration_limit) == n - k + 1;
    case MdsMode::minors: {
      if (binomial_capped(n, k, limits.minor_limit) > limits.minor_limit) {
        throw Error(ErrorKind::EnumerationTooLarge, "C(" + std::to_string(n) + "," + std::to_string(k) +
                                                        ") exceeds minor limit " +
                                                        std::to_string(limits.minor_limit));
      }
      std::vector<std::size_t> cols(k);
      std::iota(cols.begin(), cols.end(), 0);
      while (true) {
        if (!columns_nonsingular(g, cols)) return false;
        std::size_t i = k;
        while (i > 0 && cols[i - 1] == n - k + i - 1) --i;
        if (i == 0) return true;
        ++cols[i - 1];
        for (std::size_t j = i; j < k; ++j) cols[j] = cols[j - 1] + 1;
      }
    }
    case MdsMode::sampled: {
      std::mt19937_64 rng(limits.seed);
      std::vector<std::size_t> perm(n);
      for (std::size_t s = 0; s < limits.sample_count; ++s) {
        std::iota(perm.begin(), perm.end(), 0);
        for (std::size_t i = 0; i < k; ++i) {
          std::uniform_int_distribution<std::size_t> pick(i, n - 1);
          std::swap(perm[i], perm[pick(rng)]);
        }
        std::vector<std::size_t> cols(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(k));
        std::sort(cols.begin(), cols.end());
        if (!columns_nonsingular(g, cols)) return false;
      }
      return true;
    }
  }
  return false;
}

MdsMode auto_mds_mode(const GeneratorMatrix& g, const VerifyLimits& limits) {
  const auto total = nt::checked_pow(g.field().order(), static_cast<std::uint32_t>(g.rows()));
  if (total && *total <= limits.enumeration_limit) return MdsMode::exhaustive;
  if (binomial_capped(g.cols(), g.rows(), limits.minor_limit) <= limits.minor_limit) return MdsMode::minors;
  return MdsMode::sampled;
}

GeneratorMatrix structured_gram(const EvalSet& es, std::size_t k) {
  if (es.multipliers.size() != es.points.size()) {
    throw Error(ErrorKind::ShapeMismatch, "points and multipliers differ in length");
  }
  const Field& f = *es.field;
  GeneratorMatrix out(es.field, k, k);
  if (k == 0) return out;
  std::vector<Elem> sums(2 * k - 1, f.zero());
  for (std::size_t j = 0; j < es.size(); ++j) {
    Elem term = f.mul(es.multipliers[j], es.multipliers[j]);
    for (auto& s : sums) {
      s = f.add(s, term);
      term = f.mul(term, es.points[j]);
    }
  }
  if (es.extended) sums[2 * k - 2] = f.add(sums[2 * k - 2], f.one());
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t l = 0; l < k; ++l) out.at(i, l) = sums[i + l];
  }
  return out;
}

SelfDualCode certify_code(EvalSet es, Provenance provenance) {
  if (es.length() % 2 != 0) {
    throw Error(ErrorKind::VerificationFailed, "odd code length " + std::to_string(es.length()));
  }
  SelfDualCode code{std::move(es), 0, std::move(provenance)};
  code.k = code.length() / 2;
  const auto& v = code.eval.multipliers;
  bool ok = v.size() == code.eval.size() && std::none_of(v.begin(), v.end(), [](Elem x) { return x.is_zero(); });
  if (ok) {
    const auto gram = structured_gram(code.eval, code.k);
    for (std::size_t i = 0; i < code.k && ok; ++i) {
      for (std::size_t l = 0; l < code.k && ok; ++l) ok = gram.at(i, l).is_zero();
    }
  }
  if (!ok) {
    throw Error(ErrorKind::VerificationFailed,
                "G G^T != 0 or rank deficient for " + code.provenance.theorem + " over " + code.field().name());
  }
  return code;
}

SelfDualCode grs_self_dual(FieldPtr field, std::vector<Elem> points, Provenance provenance) {
  auto es = make_eval_set(std::move(field), std::move(points), false);
  auto mult = lemma1_multipliers(*es.field, es.points);
  if (!mult) throw Error(ErrorKind::BaseNotSelfDual, "eta(L_a) is not constant on the points");
  es.multipliers = std::move(mult->v);
  return certify_code(std::move(es), std::move(provenance));
}

SelfDualCode extended_grs_self_dual(FieldPtr field, std::vector<Elem> points, Provenance provenance) {
  auto es = make_eval_set(std::move(field), std::move(points), true);
  auto v = lemma2_multipliers(*es.field, es.points);
  if (!v) throw Error(ErrorKind::BaseNotSelfDual, "eta(-L_a) is not identically +1 on the points");
  es.multipliers = std::move(*v);
  return certify_code(std::move(es), std::move(provenance));
}

}  // namespace mdsgrs
