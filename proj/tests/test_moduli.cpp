#include <gtest/gtest.h>

#include <set>

#include "fqfrieze/errors.hpp"
#include "fqfrieze/formulas.hpp"
#include "fqfrieze/moduli.hpp"
#include "fqfrieze/search.hpp"
#include "oracles.hpp"

using namespace fqfrieze;

namespace {

Field field_of(int q) {
  switch (q) {
    case 4:
      return Field::parse("2^2");
    case 8:
      return Field::parse("2^3");
    case 9:
      return Field::parse("3^2");
    default:
      return Field::parse(std::to_string(q));
  }
}

Configuration from_indices(const Field& f, const std::vector<int>& v) {
  std::vector<ProjPoint> pts;
  for (int i : v) pts.push_back(p1_point(f, i));
  return make_configuration(f, pts);
}

std::vector<std::vector<int>> indices(const Field& f, int n, SignFilter filter) {
  std::vector<std::vector<int>> out;
  for_each_configuration(f, n, filter,
                         [&](std::span<const int> v) { out.emplace_back(v.begin(), v.end()); });
  return out;
}

bool same_point(const Field& f, const Vec2& v, const ProjPoint& p) {
  return make_point(f, v[0], v[1]) == p;
}

}  // namespace

TEST(Configurations, EnumerationMatchesOracle) {
  for (int q : {2, 3, 4, 5}) {
    const Field f = field_of(q);
    for (int n = 2; n <= (q <= 3 ? 7 : 5); ++n) {
      const auto got = indices(f, n, SignFilter::all);
      EXPECT_EQ(got, oracle::all_configurations(q, n)) << q << " " << n;
      EXPECT_EQ(BigInt(got.size()), count_configurations(q, n));
    }
  }
}

TEST(Configurations, ParseAndValidate) {
  const Field f = field_of(3);
  const auto c = parse_configuration(f, "0,1,inf");
  EXPECT_EQ(c.size(), 3);
  EXPECT_EQ(format_configuration(c), "(0,1,inf)");
  EXPECT_THROW(parse_configuration(f, "0,0,1"), InputError);
  EXPECT_THROW(parse_configuration(f, "0,1,0"), InputError);
  EXPECT_THROW(parse_configuration(f, "1"), InputError);
  EXPECT_THROW(parse_configuration(f, "0,5"), InputError);
}

TEST(SignClasses, AgreeWithOracle) {
  for (int q : {3, 4, 5}) {
    const Field f = field_of(q);
    const oracle::Fq o = oracle::field(q);
    for (int n : {2, 4, 6}) {
      if (q == 5 && n == 6) continue;
      std::uint64_t plus = 0, minus = 0;
      for (const auto& v : indices(f, n, SignFilter::all)) {
        const int s = oracle::sign(o, v);
        const SignClass got = sign_class(from_indices(f, v));
        EXPECT_EQ(got, s == 1 ? SignClass::plus : (s == -1 ? SignClass::minus : SignClass::other));
        plus += s == 1;
        minus += s == -1 || (q % 2 == 0 && s == 1);
      }
      EXPECT_EQ(count_enumerated_configurations(f, n, SignFilter::plus), plus);
      EXPECT_EQ(count_enumerated_configurations(f, n, SignFilter::minus), minus);
    }
  }
}

TEST(SignClasses, CountsFollowRecursion) {
  for (int q : {2, 3, 4, 5}) {
    const Field f = field_of(q);
    for (int n = 2; n <= (q <= 3 ? 8 : 6); n += 2) {
      const auto expect = count_signed_configurations(q, f.char_is_2(), n);
      const auto plus = count_enumerated_configurations(f, n, SignFilter::plus);
      const auto minus = count_enumerated_configurations(f, n, SignFilter::minus);
      EXPECT_EQ(BigInt(plus), expect.plus) << q << " " << n;
      EXPECT_EQ(BigInt(minus), expect.minus) << q << " " << n;
    }
  }
}

TEST(SignClasses, AlternatingConfigurations) {
  const Field f = field_of(3);
  EXPECT_EQ(sign_class(parse_configuration(f, "0,1")), SignClass::plus);
  EXPECT_EQ(sign_class(parse_configuration(f, "0,1,0,1")), SignClass::minus);
  EXPECT_EQ(sign_class(parse_configuration(f, "0,1,0,1,0,1")), SignClass::plus);
  EXPECT_THROW(sign_class(parse_configuration(f, "0,1,2")), InputError);
  EXPECT_THROW(count_enumerated_configurations(f, 5, SignFilter::plus), InputError);
  EXPECT_EQ(parse_sign_filter("minus"), SignFilter::minus);
  EXPECT_THROW(parse_sign_filter("both"), InputError);
}

TEST(Orbits, MatchUnionFindOracle) {
  for (int q : {2, 3, 4}) {
    const Field f = field_of(q);
    const oracle::Fq o = oracle::field(q);
    const auto gens = oracle::pgl2_generators(o);
    for (int n = 2; n <= (q == 4 ? 5 : 6); ++n) {
      const auto report = pgl2_orbits(f, n, SignFilter::all);
      const auto expect = oracle::orbit_sizes(oracle::all_configurations(q, n), gens);
      const std::multiset<int> got(report.orbit_sizes.begin(), report.orbit_sizes.end());
      EXPECT_EQ(got, expect) << q << " " << n;
      EXPECT_EQ(BigInt(report.orbit_count), count_moduli(q, n));
      for (const auto& rep : report.representatives) {
        EXPECT_EQ(canonical_orbit_rep(rep).points, rep.points);
      }
    }
  }
}

TEST(Orbits, PlusOrbitsMatchClosedForm) {
  for (int q : {2, 3, 4, 5}) {
    const Field f = field_of(q);
    for (int m = 1; m <= 3; ++m) {
      EXPECT_EQ(BigInt(pgl2_orbits(f, 2 * m, SignFilter::plus).orbit_count),
                count_moduli_plus(q, f.char_is_2(), m))
          << q << " " << m;
    }
  }
}

TEST(Orbits, DeterministicAcrossWorkers) {
  const Field f = field_of(3);
  ModuliOptions one, three;
  three.workers = 3;
  const auto a = pgl2_orbits(f, 6, SignFilter::all, one);
  const auto b = pgl2_orbits(f, 6, SignFilter::all, three);
  EXPECT_EQ(a.orbit_sizes, b.orbit_sizes);
  ASSERT_EQ(a.representatives.size(), b.representatives.size());
  for (std::size_t i = 0; i < a.representatives.size(); ++i) {
    EXPECT_EQ(a.representatives[i].points, b.representatives[i].points);
  }
}

TEST(Orbits, BudgetChecked) {
  ModuliOptions o;
  o.budget = 100;
  EXPECT_THROW(pgl2_orbits(field_of(3), 5, SignFilter::all, o), BudgetExceeded);
  EXPECT_THROW(count_enumerated_configurations(field_of(3), 5, SignFilter::all, o),
               BudgetExceeded);
}

TEST(Lift, ConstantDeterminantsAndAntiperiodicity) {
  for (int q : {3, 4, 5}) {
    const Field f = field_of(q);
    for (int n : {3, 4, 5}) {
      for (const auto& v : indices(f, n, SignFilter::all)) {
        const Configuration c = from_indices(f, v);
        const auto lifted = lift_configuration(c);
        const bool expect = n % 2 == 1 || sign_class(c) == SignClass::plus;
        ASSERT_EQ(std::holds_alternative<Lift>(lifted), expect) << format_configuration(c);
        if (!expect) {
          const auto& bad = std::get<NotLiftable>(lifted);
          EXPECT_EQ(bad.sign, sign_class(c));
          continue;
        }
        const Lift& l = std::get<Lift>(lifted);
        EXPECT_NE(l.det, f.zero());
        if (n % 2 == 0) {
          EXPECT_EQ(l.det, f.one());
        }
        for (int i = 0; i < n; ++i) {
          EXPECT_TRUE(same_point(f, l.vectors[i], c.points[i]));
          Vec2 next = l.vectors[(i + 1) % n];
          if (i == n - 1) next = {f.neg(next[0]), f.neg(next[1])};
          EXPECT_EQ(det2(f, l.vectors[i], next), l.det);
        }
      }
    }
  }
}

TEST(Correspondence, ImagesAreFriezesAndOrbitInvariant) {
  for (int q : {2, 3, 4}) {
    const Field f = field_of(q);
    for (int n : {3, 4, 5, 6}) {
      if (q == 4 && n == 6) continue;
      const auto group = pgl2_elements(f);
      for (const auto& v : indices(f, n, SignFilter::all)) {
        const Configuration c = from_indices(f, v);
        const auto image = configuration_to_frieze(c);
        if (std::holds_alternative<NotLiftable>(image)) {
          ASSERT_EQ(n % 2, 0);
          continue;
        }
        const FirstRow& row = std::get<FirstRow>(image);
        ASSERT_EQ(row.size(), n);
        ASSERT_TRUE(matrix_criterion(row).holds) << format_configuration(c);
        // A few group translates land on the same frieze.
        for (std::size_t g = 0; g < group.size(); g += 7) {
          Configuration moved = c;
          for (auto& p : moved.points) p = mat2_apply(f, group[g], p);
          const auto other = configuration_to_frieze(moved);
          ASSERT_TRUE(std::holds_alternative<FirstRow>(other));
          EXPECT_EQ(std::get<FirstRow>(other).entries, row.entries);
        }
      }
    }
  }
}

TEST(Correspondence, RoundTripsFromFriezes) {
  for (int q : {2, 3}) {
    const Field f = field_of(q);
    for (int w = 1; w <= 3; ++w) {
      for (const Tuple& t : enumerate_friezes(f, w).tuples) {
        const FirstRow row = make_first_row(f, t);
        const auto config = frieze_to_configuration(row);
        ASSERT_TRUE(std::holds_alternative<Configuration>(config));
        const auto back = configuration_to_frieze(std::get<Configuration>(config));
        ASSERT_TRUE(std::holds_alternative<FirstRow>(back));
        const Tuple expect = row.size() % 2 == 0 ? rescaling_canonical(f, t) : t;
        EXPECT_EQ(std::get<FirstRow>(back).entries, expect) << format_tuple(f, t);
      }
    }
  }
}

TEST(Correspondence, OrbitsAndFriezeClassesAreInBijection) {
  for (int q : {2, 3, 4}) {
    const Field f = field_of(q);
    for (int n : {4, 5, 6}) {
      if (q == 4 && n == 6) continue;
      const SignFilter filter = n % 2 == 0 ? SignFilter::plus : SignFilter::all;
      const auto report = pgl2_orbits(f, n, filter);
      std::set<Tuple> images;
      for (const auto& rep : report.representatives) {
        const auto row = configuration_to_frieze(rep);
        ASSERT_TRUE(std::holds_alternative<FirstRow>(row));
        images.insert(std::get<FirstRow>(row).entries);
        const auto back = frieze_to_configuration(std::get<FirstRow>(row));
        ASSERT_TRUE(std::holds_alternative<Configuration>(back));
        EXPECT_TRUE(same_orbit(std::get<Configuration>(back), rep));
      }
      EXPECT_EQ(images.size(), report.representatives.size());
      std::set<Tuple> classes;
      for (const Tuple& t : enumerate_friezes(f, n - 3).tuples) {
        classes.insert(n % 2 == 0 ? rescaling_canonical(f, t) : t);
      }
      EXPECT_EQ(images, classes) << q << " " << n;
    }
  }
}

TEST(Correspondence, FriezeVectors) {
  const Field f = field_of(5);
  const FirstRow row = make_first_row(f, {f.from_int(2), f.from_int(1), f.from_int(3),
                                          f.from_int(1), f.from_int(2)});
  const auto v = frieze_vectors(row);
  ASSERT_EQ(v.size(), 5U);
  EXPECT_EQ(v[0], (Vec2{f.one(), f.from_int(2)}));
  EXPECT_EQ(v[1], (Vec2{f.from_int(1), f.from_int(1)}));
  EXPECT_EQ(v[3], (Vec2{f.one(), f.zero()}));
  EXPECT_EQ(v[4], (Vec2{f.zero(), f.from_int(-1)}));
  const auto bad = frieze_to_configuration(make_first_row(f, {f.one(), f.one(), f.zero()}));
  EXPECT_TRUE(std::holds_alternative<CriterionFails>(bad));
}

TEST(Rescaling, ClassesAndCanonicalForm) {
  const Field f = field_of(5);
  const Tuple t{f.from_int(1), f.from_int(2), f.from_int(3), f.from_int(4)};
  const auto cls = rescaling_class(f, t);
  EXPECT_EQ(cls.size(), 4U);
  EXPECT_EQ(rescaling_canonical(f, t), cls.front());
  for (const Tuple& u : cls) EXPECT_EQ(rescaling_canonical(f, u), cls.front());
  const Tuple zeros(4, f.zero());
  EXPECT_EQ(rescaling_class(f, zeros).size(), 1U);
}
