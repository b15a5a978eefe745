#include "mdsgrs/field.hpp"

#include <algorithm>
#include <sstream>

#include "gfp_poly.hpp"
#include "mdsgrs/numtheory.hpp"

namespace mdsgrs {

namespace {

using detail::Poly;

std::uint64_t field_order_or_throw(std::uint32_t p, std::uint32_t m, std::uint64_t table_limit) {
  if (p % 2 == 0 || !nt::is_prime(p)) {
    throw Error(ErrorKind::CompositeCharacteristic,
                "characteristic " + std::to_string(p) + " is not an odd prime");
  }
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "extension degree must be >= 1");
  const auto q = nt::checked_pow(p, m);
  const std::uint64_t hard_cap = std::uint64_t{1} << 31;
  if (!q || *q > table_limit || *q > hard_cap) {
    throw Error(ErrorKind::TableLimitExceeded,
                "GF(" + std::to_string(p) + "^" + std::to_string(m) + ") exceeds table limit " +
                    std::to_string(table_limit));
  }
  return *q;
}

// Lexicographically smallest monic irreducible, comparing c_0 first.
std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t m, std::uint64_t q) {
  for (std::uint64_t n = 0; n < q; ++n) {
    Poly f(m + 1, 0);
    std::uint64_t rest = n;
    for (std::uint32_t j = 0; j < m; ++j) {
      f[m - 1 - j] = rest % p;
      rest /= p;
    }
    f[m] = 1;
    if (detail::is_irreducible(f, p)) return {f.begin(), f.end()};
  }
  throw Error(ErrorKind::InvalidArgument, "no irreducible polynomial found");
}

bool is_primitive(const Poly& g, const Poly& mod, std::uint64_t p, std::uint64_t q,
                  const std::vector<std::uint64_t>& order_primes) {
  for (std::uint64_t l : order_primes) {
    if (detail::poly_powmod(g, (q - 1) / l, mod, p) == Poly{1}) return false;
  }
  return true;
}

}  // namespace

std::string Field::name() const {
  std::ostringstream os;
  os << "GF(" << q_;
  if (m_ > 1) os << "=" << p_ << "^" << m_;
  os << ")";
  return os.str();
}

void Field::check(Elem x) const {
  if (!contains(x)) {
    throw Error(ErrorKind::InvalidElement,
                "encoding " + std::to_string(x.code()) + " is not an element of " + name());
  }
}

std::uint32_t Field::poly_index_to_code(std::uint32_t index) const {
  return index == 0 ? 0 : log_[index] + 1;
}

Elem Field::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Elem(poly_index_to_code(static_cast<std::uint32_t>(r)));
}

std::uint32_t Field::log(Elem x) const {
  check(x);
  if (x.is_zero()) throw Error(ErrorKind::ZeroArgument, "log of zero");
  return x.code() - 1;
}

Elem Field::inv(Elem a) const {
  if (a.is_zero()) throw Error(ErrorKind::ZeroArgument, "inverse of zero in " + name());
  const std::uint32_t l = a.code() - 1;
  return Elem(l == 0 ? 1 : (q_ - 1 - l) + 1);
}

Elem Field::pow(Elem a, std::int64_t e) const {
  if (a.is_zero()) {
    if (e == 0) return one();
    if (e < 0) throw Error(ErrorKind::ZeroArgument, "negative power of zero");
    return zero();
  }
  const std::int64_t mod = q_ - 1;
  std::int64_t em = e % mod;
  if (em < 0) em += mod;
  const std::uint64_t l = (static_cast<std::uint64_t>(a.code() - 1) * static_cast<std::uint64_t>(em)) % mod;
  return Elem(static_cast<std::uint32_t>(l) + 1);
}

int Field::eta(Elem x) const {
  check(x);
  if (x.is_zero()) throw Error(ErrorKind::ZeroArgument, "quadratic character of zero");
  return (x.code() - 1) % 2 == 0 ? 1 : -1;
}

std::optional<Elem> Field::sqrt(Elem x) const {
  check(x);
  if (x.is_zero()) return x;
  const std::uint32_t l = x.code() - 1;
  if (l % 2 != 0) return std::nullopt;
  return Elem(l / 2 + 1);
}

std::vector<std::uint32_t> Field::to_poly(Elem x) const {
  check(x);
  std::vector<std::uint32_t> out(m_, 0);
  std::uint32_t index = x.is_zero() ? 0 : exp_[x.code() - 1];
  for (std::uint32_t i = 0; i < m_; ++i) {
    out[i] = index % p_;
    index /= p_;
  }
  return out;
}

Elem Field::from_poly(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > m_) throw Error(ErrorKind::InvalidArgument, "polynomial degree too large");
  std::uint64_t index = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    if (*it >= p_) throw Error(ErrorKind::InvalidArgument, "coefficient out of range");
    index = index * p_ + *it;
  }
  return Elem(poly_index_to_code(static_cast<std::uint32_t>(index)));
}

std::vector<std::uint64_t> Field::subfield_orders() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d : nt::divisors(m_)) out.push_back(*nt::checked_pow(p_, static_cast<std::uint32_t>(d)));
  return out;
}

bool Field::is_subfield_order(std::uint64_t r) const {
  const auto d = nt::exact_log(p_, r);
  return d && *d >= 1 && m_ % *d == 0;
}

std::vector<Elem> Field::subfield_elements(std::uint64_t r) const {
  if (!is_subfield_order(r)) {
    throw Error(ErrorKind::NotASubfield, std::to_string(r) + " is not a subfield order of " + name());
  }
  const std::uint64_t step = (q_ - 1) / (r - 1);
  std::vector<Elem> out;
  out.reserve(r);
  out.push_back(zero());
  for (std::uint64_t k = 0; k + 1 < r; ++k) out.push_back(Elem(static_cast<std::uint32_t>(k * step) + 1));
  return out;
}

bool Field::in_subfield(Elem x, std::uint64_t r) const {
  check(x);
  if (!is_subfield_order(r)) {
    throw Error(ErrorKind::NotASubfield, std::to_string(r) + " is not a subfield order of " + name());
  }
  if (x.is_zero()) return true;
  return (x.code() - 1) % ((q_ - 1) / (r - 1)) == 0;
}

std::vector<Elem> Field::span_subspace(std::uint64_t r, std::span<const Elem> basis) const {
  const auto coeffs = subfield_elements(r);
  for (Elem b : basis) check(b);
  const auto total = nt::checked_pow(r, static_cast<std::uint32_t>(basis.size()));
  if (!total || *total > q_) {
    throw Error(ErrorKind::DependentBasis, "basis larger than the field dimension");
  }
  std::vector<Elem> out;
  out.reserve(*total);
  std::vector<std::size_t> digit(basis.size(), 0);
  for (std::uint64_t n = 0; n < *total; ++n) {
    Elem acc = zero();
    for (std::size_t i = 0; i < basis.size(); ++i) acc = add(acc, mul(coeffs[digit[i]], basis[i]));
    out.push_back(acc);
    for (std::size_t i = basis.size(); i-- > 0;) {
      if (++digit[i] < r) break;
      digit[i] = 0;
    }
  }
  auto sorted = out;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorKind::DependentBasis, "basis is linearly dependent over GF(" + std::to_string(r) + ")");
  }
  return out;
}

std::vector<Elem> Field::embedding_from(const Field& sub) const {
  if (sub.p_ != p_ || m_ % sub.m_ != 0) {
    throw Error(ErrorKind::NotASubfield, sub.name() + " does not embed in " + name());
  }
  auto eval = [&](const std::vector<std::uint32_t>& poly, Elem x) {
    Elem acc = zero();
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = add(mul(acc, x), from_int(*it));
    return acc;
  };
  // Image of the generator x of sub = a root of sub's modulus.
  std::optional<Elem> root;
  for (std::uint32_t c = 0; c < q_ && !root; ++c) {
    if (eval(sub.modulus_, Elem(c)).is_zero()) root = Elem(c);
  }
  if (!root) throw Error(ErrorKind::NotASubfield, "modulus of " + sub.name() + " has no root");
  std::vector<Elem> image(sub.q_);
  for (std::uint32_t c = 0; c < sub.q_; ++c) image[c] = eval(sub.to_poly(Elem(c)), *root);
  return image;
}

bool Field::same_field(const Field& other) const {
  return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
}

std::shared_ptr<const Field> Field::with_corrupted_zech(std::uint32_t index, std::uint32_t code) const {
  auto copy = std::shared_ptr<Field>(new Field(*this));
  copy->zech_.at(index) = code;
  return copy;
}

FieldPtr make_field_with_modulus(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus,
                                 std::uint64_t table_limit) {
  const std::uint64_t q = field_order_or_throw(p, m, table_limit);
  if (modulus.size() != m + 1 || modulus.back() != 1) {
    throw Error(ErrorKind::InvalidArgument, "modulus must be monic of degree " + std::to_string(m));
  }
  Poly mod(modulus.begin(), modulus.end());
  for (auto c : mod) {
    if (c >= p) throw Error(ErrorKind::InvalidArgument, "modulus coefficient out of range");
  }
  if (!detail::is_irreducible(mod, p)) {
    throw Error(ErrorKind::InvalidArgument, "modulus is reducible over GF(" + std::to_string(p) + ")");
  }

  const auto order_primes = nt::prime_factors(q - 1);
  Poly theta;
  for (std::uint64_t idx = 1; idx < q; ++idx) {
    Poly g = detail::poly_from_index(idx, p);
    if (is_primitive(g, mod, p, q, order_primes)) {
      theta = std::move(g);
      break;
    }
  }

  auto field = std::shared_ptr<Field>(new Field());
  field->p_ = p;
  field->m_ = m;
  field->q_ = static_cast<std::uint32_t>(q);
  field->half_ = static_cast<std::uint32_t>((q - 1) / 2);
  field->modulus_ = std::move(modulus);
  field->exp_.assign(q - 1, 0);
  field->log_.assign(q, 0);

  // Walk theta^i with fixed buffers; the modulus is monic so reduction needs no inverse.
  std::vector<std::uint64_t> cur(m, 0), th(m, 0), tmp(2 * m - 1, 0);
  cur[0] = 1;
  for (std::size_t i = 0; i < theta.size(); ++i) th[i] = theta[i];
  for (std::uint64_t i = 0; i + 1 < q; ++i) {
    std::uint64_t index = 0;
    for (std::uint32_t j = m; j-- > 0;) index = index * p + cur[j];
    field->exp_[i] = static_cast<std::uint32_t>(index);
    field->log_[index] = static_cast<std::uint32_t>(i);
    std::fill(tmp.begin(), tmp.end(), 0);
    for (std::uint32_t a = 0; a < m; ++a) {
      if (cur[a] == 0) continue;
      for (std::uint32_t b = 0; b < m; ++b) tmp[a + b] = (tmp[a + b] + cur[a] * th[b]) % p;
    }
    for (std::uint32_t d = 2 * m - 1; d-- > m;) {
      const std::uint64_t c = tmp[d];
      if (c == 0) continue;
      for (std::uint32_t j = 0; j < m; ++j) tmp[d - m + j] = (tmp[d - m + j] + (p - c) * mod[j]) % p;
      tmp[d] = 0;
    }
    for (std::uint32_t j = 0; j < m; ++j) cur[j] = tmp[j];
  }

  field->zech_.assign(q - 1, 0);
  for (std::uint64_t d = 0; d + 1 < q; ++d) {
    const std::uint32_t index = field->exp_[d];
    const std::uint32_t c0 = index % p;
    const std::uint32_t shifted = index - c0 + (c0 + 1) % p;
    field->zech_[d] = field->poly_index_to_code(shifted);
  }
  return field;
}

FieldPtr make_field(std::uint32_t p, std::uint32_t m, std::uint64_t table_limit) {
  const std::uint64_t q = field_order_or_throw(p, m, table_limit);
  return make_field_with_modulus(p, m, smallest_irreducible(p, m, q), table_limit);
}

FieldPtr make_field_of_order(std::uint64_t q, std::uint64_t table_limit) {
  const auto pm = nt::prime_power(q);
  if (!pm) throw Error(ErrorKind::InvalidArgument, std::to_string(q) + " is not a prime power");
  if (pm->first == 2) {
    throw Error(ErrorKind::CompositeCharacteristic, "characteristic 2 is not supported");
  }
  return make_field(static_cast<std::uint32_t>(pm->first), pm->second, table_limit);
}

FieldElement::FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
  if (!field_) throw Error(ErrorKind::InvalidArgument, "null field");
  field_->check(value_);
}

const Field& FieldElement::same(const FieldElement& o) const {
  if (field_ != o.field_ && !field_->same_field(*o.field_)) {
    throw Error(ErrorKind::CrossField, field_->name() + " vs " + o.field_->name());
  }
  return *field_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  return {field_, same(o).add(value_, o.value_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  return {field_, same(o).sub(value_, o.value_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  return {field_, same(o).mul(value_, o.value_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  return {field_, same(o).div(value_, o.value_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }

bool FieldElement::operator==(const FieldElement& o) const {
  same(o);
  return value_ == o.value_;
}

std::strong_ordering FieldElement::operator<=>(const FieldElement& o) const {
  same(o);
  return value_ <=> o.value_;
}

}  // namespace mdsgrs
