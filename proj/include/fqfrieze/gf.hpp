#pragma once

// Exact arithmetic in F_q = F_{p^k}, the projective line P^1(F_q) and
// 2x2 matrices over F_q.
//
// An element is stored as its code: the coefficient vector (constant term
// first) of its polynomial representative read as a base-p integer with the
// constant term least significant. Codes also fix the element order used
// for canonical forms and serialization: 0, 1, then ascending codes.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fqfrieze {

struct FieldElement {
  std::uint32_t code = 0;

  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

using Tuple = std::vector<FieldElement>;

class Field {
 public:
  static constexpr int kMaxOrder = 1 << 16;
  static constexpr int kTableOrder = 256;

  // Throws NonPrimeCharacteristic, ReducibleModulus or InputError.
  // `modulus` is constant-first, length k + 1, monic. When omitted and
  // k > 1 the smallest monic irreducible of degree k is used, comparing
  // coefficients from x^{k-1} down to the constant term.
  static Field make(int p, int k = 1,
                    std::optional<std::vector<int>> modulus = std::nullopt);

  // "p", "p^k" or "p^k:c0,c1,...,ck".
  static Field parse(std::string_view descriptor);

  int characteristic() const;
  int degree() const;
  int order() const;
  bool char_is_2() const { return characteristic() == 2; }

  // Constant-first, monic, length degree() + 1. For prime fields this is x.
  const std::vector<int>& modulus() const;

  // "p" or "p^k"; the modulus suffix is added when it differs from the
  // default one or when `with_modulus` is set.
  std::string descriptor(bool with_modulus = false) const;

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  // Image of an integer in the prime subfield.
  FieldElement from_int(long long v) const;
  // Element with the given code; throws InputError when out of range.
  FieldElement from_code(long long code) const;

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  // Throws std::domain_error on zero.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const;
  FieldElement pow(FieldElement a, std::uint64_t e) const;

  std::vector<int> coefficients(FieldElement a) const;
  FieldElement from_coefficients(std::span<const int> coeffs) const;

  std::vector<FieldElement> elements() const;
  std::vector<FieldElement> units() const;

  // Decimal code; this is the textual form used everywhere.
  std::string format(FieldElement a) const { return std::to_string(a.code); }

  bool tables_precomputed() const;

  friend bool operator==(const Field& a, const Field& b);

 private:
  struct Impl;
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

bool is_prime(long long n);

// True iff the monic polynomial (constant-first coefficients over F_p) has no
// monic factor of degree 1..deg/2.
bool is_irreducible(std::span<const int> poly, int p);

// --- Projective line ------------------------------------------------------

// Normalized so that the last nonzero coordinate is 1: (x : 1) or (1 : 0).
struct ProjPoint {
  FieldElement x;
  FieldElement y;

  friend constexpr auto operator<=>(const ProjPoint&, const ProjPoint&) = default;
};

// Throws InputError when both coordinates vanish.
ProjPoint make_point(const Field& f, FieldElement x, FieldElement y);
ProjPoint infinity_point(const Field& f);
bool is_infinity(const ProjPoint& pt);

// (a : 1) for every a in element order, then (1 : 0).
std::vector<ProjPoint> p1_points(const Field& f);

// Position in p1_points(): the code of a for (a : 1), q for (1 : 0).
int p1_index(const Field& f, const ProjPoint& pt);
ProjPoint p1_point(const Field& f, int index);

// "a" for (a : 1) with a printed as its code, "inf" for (1 : 0).
std::string format_point(const Field& f, const ProjPoint& pt);
ProjPoint parse_point(const Field& f, std::string_view text);

// --- 2x2 matrices ---------------------------------------------------------

// Row-major [[a, b], [c, d]].
struct Mat2 {
  FieldElement a, b, c, d;

  friend constexpr auto operator<=>(const Mat2&, const Mat2&) = default;
};

Mat2 mat2_identity(const Field& f);
Mat2 mat2_scale(const Field& f, FieldElement s, const Mat2& m);
Mat2 mat2_neg(const Field& f, const Mat2& m);
Mat2 mat2_mul(const Field& f, const Mat2& lhs, const Mat2& rhs);
FieldElement mat2_det(const Field& f, const Mat2& m);
// Throws SingularMatrix.
Mat2 mat2_inverse(const Field& f, const Mat2& m);

// Fractional-linear action (x : y) -> (ax + by : cx + dy).
ProjPoint mat2_apply(const Field& f, const Mat2& m, const ProjPoint& pt);

// One invertible representative per scalar class, each scaled so that its
// first nonzero entry (row-major) is 1. Exactly q^3 - q matrices, sorted.
std::vector<Mat2> pgl2_elements(const Field& f);

}  // namespace fqfrieze
