#include "fqfrieze/gf.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "fqfrieze/errors.hpp"

namespace fqfrieze {

namespace {

using Poly = std::vector<int>;  // constant-first over F_p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int inv_mod(int a, int p) {
  // p is prime and small; extended Euclid.
  int t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    int quot = r / new_r;
    int tmp = t - quot * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quot * new_r;
    r = new_r;
    new_r = tmp;
  }
  return t < 0 ? t + p : t;
}

// Remainder of a modulo b (b nonzero, any leading coefficient).
Poly poly_rem(Poly a, const Poly& b, int p) {
  trim(a);
  const int db = static_cast<int>(b.size()) - 1;
  const int lead_inv = inv_mod(b.back(), p);
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    const int factor = a.back() * lead_inv % p;
    for (int i = 0; i <= db; ++i) {
      int& slot = a[shift + i];
      slot = ((slot - factor * b[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_from_code(std::uint32_t code, int p, int len) {
  Poly out(len, 0);
  for (int i = 0; i < len; ++i) {
    out[i] = static_cast<int>(code % p);
    code /= p;
  }
  return out;
}

std::uint32_t code_from_poly(const Poly& a, int p) {
  std::uint32_t code = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) code = code * p + *it;
  return code;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto piece = text.substr(pos, comma - pos);
    int v = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size()) {
      throw InputError("invalid integer '" + std::string(piece) + "'");
    }
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

int parse_positive(std::string_view piece, const char* what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
  if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size() || v < 1) {
    throw InputError(std::string("invalid ") + what + " '" + std::string(piece) + "'");
  }
  return v;
}

}  // namespace

struct Field::Impl {
  int p = 2;
  int k = 1;
  int q = 2;
  Poly modulus;
  bool default_modulus = true;

  // Filled when q <= kTableOrder.
  std::vector<std::uint16_t> add_table;
  std::vector<std::uint16_t> mul_table;
  std::vector<std::uint16_t> neg_table;
  std::vector<std::uint16_t> inv_table;

  std::uint32_t add_slow(std::uint32_t a, std::uint32_t b) const {
    if (k == 1) return (a + b) % p;
    std::uint32_t out = 0, place = 1;
    for (int i = 0; i < k; ++i) {
      out += ((a % p + b % p) % p) * place;
      a /= p;
      b /= p;
      place *= p;
    }
    return out;
  }

  std::uint32_t neg_slow(std::uint32_t a) const {
    if (k == 1) return (p - a) % p;
    std::uint32_t out = 0, place = 1;
    for (int i = 0; i < k; ++i) {
      out += ((p - a % p) % p) * place;
      a /= p;
      place *= p;
    }
    return out;
  }

  std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const {
    if (k == 1) {
      return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
    }
    const Poly pa = poly_from_code(a, p, k);
    const Poly pb = poly_from_code(b, p, k);
    Poly prod(2 * k - 1, 0);
    for (int i = 0; i < k; ++i) {
      if (pa[i] == 0) continue;
      for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
    }
    return code_from_poly(poly_rem(std::move(prod), modulus, p), p);
  }

  std::uint32_t pow_slow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t result = 1;
    while (e > 0) {
      if (e & 1U) result = mul_slow(result, a);
      a = mul_slow(a, a);
      e >>= 1U;
    }
    return result;
  }

  std::uint32_t inv_slow(std::uint32_t a) const {
    if (k == 1) return static_cast<std::uint32_t>(inv_mod(static_cast<int>(a), p));
    // a^(q-2)
    return pow_slow(a, static_cast<std::uint64_t>(q) - 2);
  }

  void build_tables() {
    const auto qq = static_cast<std::size_t>(q);
    add_table.resize(qq * qq);
    mul_table.resize(qq * qq);
    neg_table.resize(qq);
    inv_table.assign(qq, 0);
    for (std::uint32_t a = 0; a < qq; ++a) {
      neg_table[a] = static_cast<std::uint16_t>(neg_slow(a));
      for (std::uint32_t b = 0; b < qq; ++b) {
        add_table[a * qq + b] = static_cast<std::uint16_t>(add_slow(a, b));
        mul_table[a * qq + b] = static_cast<std::uint16_t>(mul_slow(a, b));
      }
    }
    for (std::uint32_t a = 1; a < qq; ++a) {
      for (std::uint32_t b = 1; b < qq; ++b) {
        if (mul_table[a * qq + b] == 1) {
          inv_table[a] = static_cast<std::uint16_t>(b);
          break;
        }
      }
    }
  }
};

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(std::span<const int> poly_in, int p) {
  Poly poly(poly_in.begin(), poly_in.end());
  trim(poly);
  const int deg = static_cast<int>(poly.size()) - 1;
  if (deg < 1) return false;
  if (deg == 1) return true;
  for (int d = 1; 2 * d <= deg; ++d) {
    std::uint32_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint32_t code = 0; code < count; ++code) {
      Poly divisor = poly_from_code(code, p, d);
      divisor.push_back(1);
      if (poly_rem(poly, divisor, p).empty()) return false;
    }
  }
  return true;
}

Field Field::make(int p, int k, std::optional<std::vector<int>> modulus) {
  if (!is_prime(p)) {
    throw NonPrimeCharacteristic("characteristic " + std::to_string(p) + " is not prime");
  }
  if (k < 1) throw InputError("extension degree must be at least 1");
  long long q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxOrder) {
      throw InputError("field order exceeds " + std::to_string(kMaxOrder));
    }
  }

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->k = k;
  impl->q = static_cast<int>(q);

  Poly default_mod;
  if (k == 1) {
    default_mod = {0, 1};
  } else {
    const auto lower = static_cast<std::uint32_t>(q);
    for (std::uint32_t code = 0; code < lower; ++code) {
      Poly cand = poly_from_code(code, p, k);
      cand.push_back(1);
      if (is_irreducible(cand, p)) {
        default_mod = std::move(cand);
        break;
      }
    }
  }

  if (modulus) {
    Poly m = *modulus;
    if (static_cast<int>(m.size()) != k + 1) {
      throw InputError("modulus must have " + std::to_string(k + 1) + " coefficients");
    }
    for (int c : m) {
      if (c < 0 || c >= p) throw InputError("modulus coefficients must lie in [0, p)");
    }
    if (m.back() != 1) throw InputError("modulus must be monic");
    if (k > 1 && !is_irreducible(m, p)) {
      std::ostringstream os;
      os << "modulus ";
      for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
      os << " is reducible over F_" << p;
      throw ReducibleModulus(os.str());
    }
    impl->default_modulus = (m == default_mod);
    impl->modulus = std::move(m);
  } else {
    impl->modulus = default_mod;
  }

  if (impl->q <= kTableOrder) impl->build_tables();
  return Field(std::move(impl));
}

Field Field::parse(std::string_view text) {
  std::optional<std::vector<int>> modulus;
  auto colon = text.find(':');
  std::string_view head = text.substr(0, colon);
  if (colon != std::string_view::npos) modulus = parse_int_list(text.substr(colon + 1));

  int p = 0;
  int k = 1;
  auto caret = head.find('^');
  if (caret == std::string_view::npos) {
    p = parse_positive(head, "field descriptor");
    if (!is_prime(p)) {
      throw InputError("field descriptor '" + std::string(text) +
                       "': order must be prime, or written p^k for prime powers");
    }
  } else {
    p = parse_positive(head.substr(0, caret), "characteristic");
    k = parse_positive(head.substr(caret + 1), "extension degree");
  }
  return make(p, k, std::move(modulus));
}

int Field::characteristic() const { return impl_->p; }
int Field::degree() const { return impl_->k; }
int Field::order() const { return impl_->q; }
const std::vector<int>& Field::modulus() const { return impl_->modulus; }
bool Field::tables_precomputed() const { return !impl_->mul_table.empty(); }

std::string Field::descriptor(bool with_modulus) const {
  std::string out = std::to_string(impl_->p);
  if (impl_->k > 1) out += "^" + std::to_string(impl_->k);
  if (impl_->k > 1 && (with_modulus || !impl_->default_modulus)) {
    out += ":";
    for (std::size_t i = 0; i < impl_->modulus.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(impl_->modulus[i]);
    }
  }
  return out;
}

FieldElement Field::from_int(long long v) const {
  const long long p = impl_->p;
  return {static_cast<std::uint32_t>(((v % p) + p) % p)};
}

FieldElement Field::from_code(long long code) const {
  if (code < 0 || code >= impl_->q) {
    throw InputError("element code " + std::to_string(code) + " out of range for F_" +
                     std::to_string(impl_->q));
  }
  return {static_cast<std::uint32_t>(code)};
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
  const Impl& f = *impl_;
  if (!f.add_table.empty()) return {f.add_table[a.code * f.q + b.code]};
  return {f.add_slow(a.code, b.code)};
}

FieldElement Field::neg(FieldElement a) const {
  const Impl& f = *impl_;
  if (!f.neg_table.empty()) return {f.neg_table[a.code]};
  return {f.neg_slow(a.code)};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement Field::mul(FieldElement a, FieldElement b) const {
  const Impl& f = *impl_;
  if (!f.mul_table.empty()) return {f.mul_table[a.code * f.q + b.code]};
  return {f.mul_slow(a.code, b.code)};
}

FieldElement Field::inv(FieldElement a) const {
  if (a.code == 0) throw std::domain_error("inverse of zero");
  const Impl& f = *impl_;
  if (!f.inv_table.empty()) return {f.inv_table[a.code]};
  return {f.inv_slow(a.code)};
}

FieldElement Field::div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

FieldElement Field::pow(FieldElement a, std::uint64_t e) const {
  FieldElement result = one();
  while (e > 0) {
    if (e & 1U) result = mul(result, a);
    a = mul(a, a);
    e >>= 1U;
  }
  return result;
}

std::vector<int> Field::coefficients(FieldElement a) const {
  return poly_from_code(a.code, impl_->p, impl_->k);
}

FieldElement Field::from_coefficients(std::span<const int> coeffs) const {
  if (static_cast<int>(coeffs.size()) > impl_->k) {
    throw InputError("too many coefficients for F_" + std::to_string(impl_->q));
  }
  Poly poly(impl_->k, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    poly[i] = ((coeffs[i] % impl_->p) + impl_->p) % impl_->p;
  }
  return {code_from_poly(poly, impl_->p)};
}

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> out(impl_->q);
  for (int i = 0; i < impl_->q; ++i) out[i] = {static_cast<std::uint32_t>(i)};
  return out;
}

std::vector<FieldElement> Field::units() const {
  std::vector<FieldElement> out(impl_->q - 1);
  for (int i = 1; i < impl_->q; ++i) out[i - 1] = {static_cast<std::uint32_t>(i)};
  return out;
}

bool operator==(const Field& a, const Field& b) {
  if (a.impl_ == b.impl_) return true;
  return a.impl_->p == b.impl_->p && a.impl_->k == b.impl_->k &&
         a.impl_->modulus == b.impl_->modulus;
}

// --- Projective line ------------------------------------------------------

ProjPoint make_point(const Field& f, FieldElement x, FieldElement y) {
  if (y.code != 0) return {f.div(x, y), f.one()};
  if (x.code == 0) throw InputError("(0 : 0) is not a projective point");
  return {f.one(), f.zero()};
}

ProjPoint infinity_point(const Field& f) { return {f.one(), f.zero()}; }

bool is_infinity(const ProjPoint& pt) { return pt.y.code == 0; }

std::vector<ProjPoint> p1_points(const Field& f) {
  std::vector<ProjPoint> out;
  out.reserve(static_cast<std::size_t>(f.order()) + 1);
  for (FieldElement a : f.elements()) out.push_back({a, f.one()});
  out.push_back(infinity_point(f));
  return out;
}

int p1_index(const Field& f, const ProjPoint& pt) {
  return is_infinity(pt) ? f.order() : static_cast<int>(pt.x.code);
}

ProjPoint p1_point(const Field& f, int index) {
  if (index < 0 || index > f.order()) throw InputError("projective point index out of range");
  if (index == f.order()) return infinity_point(f);
  return {FieldElement{static_cast<std::uint32_t>(index)}, f.one()};
}

std::string format_point(const Field& f, const ProjPoint& pt) {
  return is_infinity(pt) ? "inf" : f.format(pt.x);
}

ProjPoint parse_point(const Field& f, std::string_view text) {
  if (text == "inf") return infinity_point(f);
  long long code = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), code);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw InputError("invalid projective point '" + std::string(text) + "'");
  }
  return {f.from_code(code), f.one()};
}

// --- 2x2 matrices ---------------------------------------------------------

Mat2 mat2_identity(const Field& f) { return {f.one(), f.zero(), f.zero(), f.one()}; }

Mat2 mat2_scale(const Field& f, FieldElement s, const Mat2& m) {
  return {f.mul(s, m.a), f.mul(s, m.b), f.mul(s, m.c), f.mul(s, m.d)};
}

Mat2 mat2_neg(const Field& f, const Mat2& m) {
  return {f.neg(m.a), f.neg(m.b), f.neg(m.c), f.neg(m.d)};
}

Mat2 mat2_mul(const Field& f, const Mat2& l, const Mat2& r) {
  return {f.add(f.mul(l.a, r.a), f.mul(l.b, r.c)), f.add(f.mul(l.a, r.b), f.mul(l.b, r.d)),
          f.add(f.mul(l.c, r.a), f.mul(l.d, r.c)), f.add(f.mul(l.c, r.b), f.mul(l.d, r.d))};
}

FieldElement mat2_det(const Field& f, const Mat2& m) {
  return f.sub(f.mul(m.a, m.d), f.mul(m.b, m.c));
}

Mat2 mat2_inverse(const Field& f, const Mat2& m) {
  const FieldElement det = mat2_det(f, m);
  if (det.code == 0) throw SingularMatrix("matrix is singular");
  const FieldElement s = f.inv(det);
  return {f.mul(s, m.d), f.neg(f.mul(s, m.b)), f.neg(f.mul(s, m.c)), f.mul(s, m.a)};
}

ProjPoint mat2_apply(const Field& f, const Mat2& m, const ProjPoint& pt) {
  return make_point(f, f.add(f.mul(m.a, pt.x), f.mul(m.b, pt.y)),
                    f.add(f.mul(m.c, pt.x), f.mul(m.d, pt.y)));
}

std::vector<Mat2> pgl2_elements(const Field& f) {
  std::vector<Mat2> out;
  const auto q = static_cast<std::size_t>(f.order());
  out.reserve(q * (q * q - 1));
  const auto els = f.elements();
  // a = 0 forces b != 0, hence b = 1 and c != 0.
  for (FieldElement c : els) {
    if (c.code == 0) continue;
    for (FieldElement d : els) out.push_back({f.zero(), f.one(), c, d});
  }
  for (FieldElement b : els) {
    for (FieldElement c : els) {
      const FieldElement bc = f.mul(b, c);
      for (FieldElement d : els) {
        if (d != bc) out.push_back({f.one(), b, c, d});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fqfrieze
