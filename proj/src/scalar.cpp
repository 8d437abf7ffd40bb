#include "rbalg/scalar.hpp"

#include <charconv>

namespace rbalg {

namespace {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long long mod_reduce(long long v, long long p) {
  long long r = v % p;
  return r < 0 ? r + p : r;
}

long long mul_mod(long long a, long long b, long long p) {
  return static_cast<long long>(static_cast<__int128>(a) * b % p);
}

long long pow_mod(long long a, long long e, long long p) {
  long long acc = 1 % p;
  long long base = mod_reduce(a, p);
  while (e > 0) {
    if (e & 1) acc = mul_mod(acc, base, p);
    base = mul_mod(base, base, p);
    e >>= 1;
  }
  return acc;
}

}  // namespace

FieldSpec FieldSpec::gf(long long p) {
  if (!is_prime(p)) throw std::invalid_argument("FieldSpec: characteristic must be prime, got " + std::to_string(p));
  if (p >= (1LL << 31)) throw std::invalid_argument("FieldSpec: prime too large");
  return FieldSpec(FieldKind::PrimeField, p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.rfind("GF:", 0) == 0) {
    long long p = 0;
    auto body = text.substr(3);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
    if (ec != std::errc() || ptr != body.data() + body.size())
      throw std::invalid_argument("FieldSpec: cannot parse '" + std::string(text) + "'");
    return gf(p);
  }
  throw std::invalid_argument("FieldSpec: expected \"Q\" or \"GF:p\", got '" + std::string(text) + "'");
}

std::string FieldSpec::str() const {
  return is_rationals() ? "Q" : "GF:" + std::to_string(characteristic_);
}

Scalar Scalar::zero(const FieldSpec& fs) { return Scalar(fs); }

Scalar Scalar::one(const FieldSpec& fs) { return from_int(1, fs); }

Scalar Scalar::from_int(long long v, const FieldSpec& fs) {
  Scalar s(fs);
  if (fs.is_rationals())
    s.q_ = BigRational(BigInt(v));
  else
    s.r_ = mod_reduce(v, fs.characteristic());
  return s;
}

Scalar Scalar::from_bigint(const BigInt& v, const FieldSpec& fs) {
  Scalar s(fs);
  if (fs.is_rationals()) {
    s.q_ = BigRational(v);
  } else {
    BigInt r = v % fs.characteristic();
    if (r < 0) r += fs.characteristic();
    s.r_ = r.convert_to<long long>();
  }
  return s;
}

Scalar Scalar::ratio(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("Scalar: zero denominator");
  Scalar s(FieldSpec::rationals());
  s.q_ = BigRational(num) / BigRational(den);
  return s;
}

Scalar Scalar::residue(long long r, long long p) {
  return from_int(r, FieldSpec::gf(p));
}

Scalar Scalar::parse(std::string_view text, const FieldSpec& fs) {
  auto parse_int = [](std::string_view t) -> BigInt {
    if (t.empty()) throw std::invalid_argument("Scalar: empty integer");
    std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    if (i == t.size()) throw std::invalid_argument("Scalar: bare sign");
    for (std::size_t j = i; j < t.size(); ++j)
      if (t[j] < '0' || t[j] > '9')
        throw std::invalid_argument("Scalar: bad digit in '" + std::string(t) + "'");
    return BigInt(std::string(t));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return from_bigint(parse_int(text), fs);
  }
  if (fs.is_prime_field())
    throw std::invalid_argument("Scalar: prime-field elements are decimal residues, got '" + std::string(text) + "'");
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  return ratio(num, den);
}

bool Scalar::is_zero() const {
  return field_.is_rationals() ? q_.is_zero() : r_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rationals() ? q_ == 1 : r_ == 1 % field_.characteristic();
}

void Scalar::require_same_field(const Scalar& o) const {
  if (field_ != o.field_)
    throw std::invalid_argument("Scalar: mixed fields " + field_.str() + " and " + o.field_.str());
}

Scalar Scalar::operator-() const {
  Scalar s(*this);
  if (field_.is_rationals())
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : field_.characteristic() - r_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  if (field_.is_rationals())
    q_ += o.q_;
  else
    r_ = mod_reduce(r_ + o.r_, field_.characteristic());
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_field(o);
  if (field_.is_rationals())
    q_ -= o.q_;
  else
    r_ = mod_reduce(r_ - o.r_, field_.characteristic());
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  if (field_.is_rationals())
    q_ *= o.q_;
  else
    r_ = mul_mod(r_, o.r_, field_.characteristic());
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same_field(o);
  return *this *= o.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
  Scalar s(*this);
  if (field_.is_rationals())
    s.q_ = BigRational(1) / q_;
  else
    s.r_ = pow_mod(r_, field_.characteristic() - 2, field_.characteristic());
  return s;
}

Scalar Scalar::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar acc = one(field_);
  Scalar base(*this);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

std::optional<Scalar> Scalar::sqrt() const {
  if (field_.is_prime_field()) {
    long long p = field_.characteristic();
    for (long long x = 0; x <= p / 2; ++x)
      if (mul_mod(x, x, p) == r_) return residue(x, p);
    return std::nullopt;
  }
  if (q_ < 0) return std::nullopt;
  BigInt num = numerator(q_), den = denominator(q_);
  BigInt sn = boost::multiprecision::sqrt(num), sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return ratio(sn, sd);
}

std::optional<BigInt> Scalar::as_integer() const {
  if (field_.is_prime_field()) return BigInt(r_);
  if (denominator(q_) != 1) return std::nullopt;
  return numerator(q_);
}

std::string Scalar::str() const {
  if (field_.is_prime_field()) return std::to_string(r_);
  if (denominator(q_) == 1) return numerator(q_).str();
  return numerator(q_).str() + "/" + denominator(q_).str();
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.require_same_field(b);
  return a.field_.is_rationals() ? a.q_ == b.q_ : a.r_ == b.r_;
}

}  // namespace rbalg
