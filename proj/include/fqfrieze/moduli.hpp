#pragma once

// Configurations of n points on P^1(F_q) with no two cyclically consecutive
// points equal, their PGL_2 orbits, and the correspondence with friezes
// obtained from lifts with constant consecutive determinants.

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fqfrieze/frieze.hpp"
#include "fqfrieze/gf.hpp"

namespace fqfrieze {

struct Configuration {
  Field field;
  std::vector<ProjPoint> points;

  int size() const { return static_cast<int>(points.size()); }
};

// Throws InputError when n < 2 or two cyclically adjacent points coincide.
Configuration make_configuration(const Field& f, std::vector<ProjPoint> points);
// Comma-separated points: element codes for (a : 1), "inf" for (1 : 0).
Configuration parse_configuration(const Field& f, std::string_view text);
std::string format_configuration(const Configuration& c);

enum class SignFilter { all, plus, minus };
enum class SignClass { plus, minus, other };

SignFilter parse_sign_filter(std::string_view name);
std::string to_string(SignClass s);

// For even n, with an arbitrary lift V_1..V_n and V_{n+1} = -V_1:
//   plus   iff  prod_{i odd} det(V_i, V_{i+1}) == prod_{i even} det(V_i, V_{i+1})
//   minus  iff  the two products are opposite
// which is exactly the condition for a lift with constant consecutive
// determinants to exist. In characteristic 2 plus and minus coincide and
// plus is reported. Throws InputError for odd n.
SignClass sign_class(const Configuration& c);
bool in_signed_space(const Configuration& c, SignClass which);

struct ModuliOptions {
  double budget = 1e8;  // configurations visited (times |PGL_2| for orbits)
  int workers = 1;
};

// Visits every configuration of length n passing the filter, as point
// indices (see p1_index). A non-`all` filter needs even n (InputError).
// Throws BudgetExceeded when (q+1)^n exceeds the budget.
void for_each_configuration(const Field& f, int n, SignFilter filter,
                            const std::function<void(std::span<const int>)>& visit,
                            const ModuliOptions& options = {});

std::vector<Configuration> enumerate_configurations(const Field& f, int n, SignFilter filter,
                                                    const ModuliOptions& options = {});
std::uint64_t count_enumerated_configurations(const Field& f, int n, SignFilter filter,
                                              const ModuliOptions& options = {});

struct OrbitReport {
  std::uint64_t configurations = 0;
  std::uint64_t orbit_count = 0;
  // Lexicographically least member of each orbit (point indices), sorted,
  // with the matching orbit sizes.
  std::vector<Configuration> representatives;
  std::vector<std::uint64_t> orbit_sizes;
};

// Partitions the configurations into PGL_2 orbits by mapping each one to
// the least image under all q^3 - q representatives.
OrbitReport pgl2_orbits(const Field& f, int n, SignFilter filter,
                        const ModuliOptions& options = {});

Configuration canonical_orbit_rep(const Configuration& c);
bool same_orbit(const Configuration& a, const Configuration& b);

using Vec2 = std::array<FieldElement, 2>;

FieldElement det2(const Field& f, const Vec2& u, const Vec2& v);

struct Lift {
  std::vector<Vec2> vectors;
  FieldElement det;  // det(V_i, V_{i+1}) for every i, with V_{n+1} = -V_1
};

struct NotLiftable {
  SignClass sign = SignClass::other;
  std::string reason;
};

// Odd n: always liftable; the free scalar is chosen so that lambda_1 = 1.
// Even n: liftable iff the sign class is plus; lambda_1 = 1 and the common
// determinant is 1.
std::variant<Lift, NotLiftable> lift_configuration(const Configuration& c);

// Coefficients a_i of V_i = a_i V_{i-1} - V_{i-2} (V_0 = -V_n,
// V_{-1} = -V_{n-1}). For even n the result is the canonical member of the
// rescaling class, see rescaling_canonical.
std::variant<FirstRow, NotLiftable> configuration_to_frieze(const Configuration& c);

// Least tuple among (l a_1, a_2 / l, l a_3, ..., a_n / l) over l != 0.
Tuple rescaling_canonical(const Field& f, std::span<const FieldElement> a);
// All distinct members of the rescaling class.
std::vector<Tuple> rescaling_class(const Field& f, std::span<const FieldElement> a);

struct CriterionFails {
  Mat2 product;
};

// Points of the vectors V_i = a_i V_{i-1} - V_{i-2} started from
// V_{-1} = (-1, 0), V_0 = (0, 1): (1, a_1), (a_2, a_1 a_2 - 1), ...,
// (1, 0), (0, -1).
std::variant<Configuration, CriterionFails> frieze_to_configuration(const FirstRow& row);

// Same vectors, before projection.
std::vector<Vec2> frieze_vectors(const FirstRow& row);

}  // namespace fqfrieze
