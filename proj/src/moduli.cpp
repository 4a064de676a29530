#include "fqfrieze/moduli.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "fqfrieze/errors.hpp"

namespace fqfrieze {

namespace {

Vec2 lift_point(const ProjPoint& p) { return {p.x, p.y}; }

// det(V_i, V_{i+1}) between the standard lifts of point indices.
class DetTable {
 public:
  explicit DetTable(const Field& f) : f_(f), size_(f.order() + 1), table_(size_ * size_) {
    const auto pts = p1_points(f);
    for (int i = 0; i < size_; ++i) {
      for (int j = 0; j < size_; ++j) {
        table_[i * size_ + j] = det2(f, lift_point(pts[i]), lift_point(pts[j]));
      }
    }
  }

  FieldElement operator()(int i, int j) const { return table_[i * size_ + j]; }

  SignClass sign(std::span<const int> v) const {
    const int n = static_cast<int>(v.size());
    FieldElement odd = f_.one();
    FieldElement even = f_.one();
    for (int i = 0; i < n; ++i) {
      FieldElement d = (*this)(v[i], v[(i + 1) % n]);
      if (i == n - 1) d = f_.neg(d);  // V_{n+1} = -V_1
      // i is 0-based, so i even <=> 1-based index odd.
      if (i % 2 == 0) {
        odd = f_.mul(odd, d);
      } else {
        even = f_.mul(even, d);
      }
    }
    if (odd == even) return SignClass::plus;
    if (odd == f_.neg(even)) return SignClass::minus;
    return SignClass::other;
  }

 private:
  const Field& f_;
  int size_;
  std::vector<FieldElement> table_;
};

bool passes(SignFilter filter, SignClass s, bool char2) {
  switch (filter) {
    case SignFilter::all:
      return true;
    case SignFilter::plus:
      return s == SignClass::plus;
    case SignFilter::minus:
      return s == SignClass::minus || (char2 && s == SignClass::plus);
  }
  return false;
}

double power(double base, int e) {
  double r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

void check_filter(int n, SignFilter filter) {
  if (n < 2) throw InputError("configurations need n >= 2");
  if (filter != SignFilter::all && n % 2 != 0) {
    throw InputError("sign filter needs even n, got n = " + std::to_string(n));
  }
}

// Depth-first over index tuples with v_i != v_{i-1} and v_n != v_1, first
// entry restricted to `firsts`.
template <typename Visit>
void walk_configurations(int points, int n, const std::vector<int>& firsts, Visit&& visit) {
  std::vector<int> cur(n);
  int depth = 0;
  for (int first : firsts) {
    cur[0] = first;
    depth = 1;
    std::vector<int> next(n, 0);
    next[1] = 0;
    while (depth > 0) {
      if (depth == n) {
        if (cur[n - 1] != cur[0]) visit(std::span<const int>(cur));
        --depth;
        continue;
      }
      int& cand = next[depth];
      while (cand < points && cand == cur[depth - 1]) ++cand;
      if (cand >= points) {
        cand = 0;
        --depth;
        continue;
      }
      cur[depth] = cand++;
      ++depth;
      if (depth < n) next[depth] = 0;
    }
  }
}

}  // namespace

FieldElement det2(const Field& f, const Vec2& u, const Vec2& v) {
  return f.sub(f.mul(u[0], v[1]), f.mul(u[1], v[0]));
}

Configuration make_configuration(const Field& f, std::vector<ProjPoint> points) {
  const int n = static_cast<int>(points.size());
  if (n < 2) throw InputError("a configuration needs at least 2 points");
  for (auto& p : points) p = make_point(f, p.x, p.y);
  for (int i = 0; i < n; ++i) {
    if (points[i] == points[(i + 1) % n]) {
      throw InputError("points " + std::to_string(i + 1) + " and " +
                       std::to_string((i + 1) % n + 1) + " coincide");
    }
  }
  return Configuration{f, std::move(points)};
}

Configuration parse_configuration(const Field& f, std::string_view text) {
  std::vector<ProjPoint> pts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    pts.push_back(parse_point(f, text.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return make_configuration(f, std::move(pts));
}

std::string format_configuration(const Configuration& c) {
  std::string out = "(";
  for (int i = 0; i < c.size(); ++i) {
    if (i) out += ",";
    out += format_point(c.field, c.points[i]);
  }
  return out + ")";
}

SignFilter parse_sign_filter(std::string_view name) {
  if (name == "all") return SignFilter::all;
  if (name == "plus") return SignFilter::plus;
  if (name == "minus") return SignFilter::minus;
  throw InputError("unknown sign filter '" + std::string(name) + "'");
}

std::string to_string(SignClass s) {
  switch (s) {
    case SignClass::plus:
      return "plus";
    case SignClass::minus:
      return "minus";
    case SignClass::other:
      return "other";
  }
  return "other";
}

SignClass sign_class(const Configuration& c) {
  if (c.size() % 2 != 0) {
    throw InputError("sign class needs an even number of points, got " +
                     std::to_string(c.size()));
  }
  std::vector<int> idx;
  for (const auto& p : c.points) idx.push_back(p1_index(c.field, p));
  return DetTable(c.field).sign(idx);
}

bool in_signed_space(const Configuration& c, SignClass which) {
  const SignClass s = sign_class(c);
  if (c.field.char_is_2() && s == SignClass::plus) return which != SignClass::other;
  return s == which;
}

void for_each_configuration(const Field& f, int n, SignFilter filter,
                            const std::function<void(std::span<const int>)>& visit,
                            const ModuliOptions& options) {
  check_filter(n, filter);
  const int points = f.order() + 1;
  const double estimate = power(points, n);
  if (estimate > options.budget) {
    throw BudgetExceeded("enumerating (q+1)^n = " + std::to_string(estimate) +
                             " candidate configurations exceeds the budget",
                         estimate, options.budget);
  }
  std::vector<int> firsts(points);
  for (int i = 0; i < points; ++i) firsts[i] = i;
  if (filter == SignFilter::all) {
    walk_configurations(points, n, firsts, visit);
    return;
  }
  const DetTable dets(f);
  const bool char2 = f.char_is_2();
  walk_configurations(points, n, firsts, [&](std::span<const int> v) {
    if (passes(filter, dets.sign(v), char2)) visit(v);
  });
}

std::vector<Configuration> enumerate_configurations(const Field& f, int n, SignFilter filter,
                                                    const ModuliOptions& options) {
  std::vector<Configuration> out;
  for_each_configuration(
      f, n, filter,
      [&](std::span<const int> v) {
        Configuration c{f, {}};
        c.points.reserve(v.size());
        for (int i : v) c.points.push_back(p1_point(f, i));
        out.push_back(std::move(c));
      },
      options);
  return out;
}

std::uint64_t count_enumerated_configurations(const Field& f, int n, SignFilter filter,
                                              const ModuliOptions& options) {
  std::uint64_t count = 0;
  for_each_configuration(f, n, filter, [&](std::span<const int>) { ++count; }, options);
  return count;
}

OrbitReport pgl2_orbits(const Field& f, int n, SignFilter filter, const ModuliOptions& options) {
  check_filter(n, filter);
  const int points = f.order() + 1;
  const auto group = pgl2_elements(f);
  const double estimate = power(points, n) * static_cast<double>(group.size());
  if (estimate > options.budget || power(points, n) > 4e18) {
    throw BudgetExceeded("orbit computation needs about " + std::to_string(estimate) +
                             " point images, over budget",
                         estimate, options.budget);
  }

  // action[g * points + p] = index of g . p
  const auto pts = p1_points(f);
  std::vector<int> action(group.size() * points);
  for (std::size_t g = 0; g < group.size(); ++g) {
    for (int p = 0; p < points; ++p) {
      action[g * points + p] = p1_index(f, mat2_apply(f, group[g], pts[p]));
    }
  }

  const DetTable dets(f);
  const bool char2 = f.char_is_2();
  const int workers = std::max(1, std::min(options.workers, points));
  std::vector<std::vector<int>> firsts(workers);
  for (int i = 0; i < points; ++i) firsts[i % workers].push_back(i);
  std::vector<std::map<std::uint64_t, std::uint64_t>> partial(workers);
  std::vector<std::uint64_t> visited(workers, 0);

  auto job = [&](int w) {
    auto& classes = partial[w];
    walk_configurations(points, n, firsts[w], [&](std::span<const int> v) {
      if (filter != SignFilter::all && !passes(filter, dets.sign(v), char2)) return;
      ++visited[w];
      std::uint64_t best = ~std::uint64_t{0};
      for (std::size_t g = 0; g < group.size(); ++g) {
        const int* row = &action[g * points];
        std::uint64_t code = 0;
        for (int i : v) code = code * points + static_cast<std::uint64_t>(row[i]);
        best = std::min(best, code);
      }
      ++classes[best];
    });
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(job, w);
  job(0);
  for (auto& t : pool) t.join();

  std::map<std::uint64_t, std::uint64_t> classes;
  OrbitReport report;
  for (int w = 0; w < workers; ++w) {
    report.configurations += visited[w];
    for (auto [code, count] : partial[w]) classes[code] += count;
  }
  report.orbit_count = classes.size();
  for (const auto& [key, count] : classes) {
    std::uint64_t code = key;
    Configuration c{f, std::vector<ProjPoint>(n)};
    for (int i = n - 1; i >= 0; --i) {
      c.points[i] = p1_point(f, static_cast<int>(code % points));
      code /= points;
    }
    report.representatives.push_back(std::move(c));
    report.orbit_sizes.push_back(count);
  }
  return report;
}

Configuration canonical_orbit_rep(const Configuration& c) {
  const Field& f = c.field;
  std::vector<int> best;
  for (const Mat2& g : pgl2_elements(f)) {
    std::vector<int> image;
    image.reserve(c.points.size());
    for (const auto& p : c.points) image.push_back(p1_index(f, mat2_apply(f, g, p)));
    if (best.empty() || image < best) best = std::move(image);
  }
  Configuration out{f, {}};
  for (int i : best) out.points.push_back(p1_point(f, i));
  return out;
}

bool same_orbit(const Configuration& a, const Configuration& b) {
  return a.size() == b.size() && canonical_orbit_rep(a).points == canonical_orbit_rep(b).points;
}

std::variant<Lift, NotLiftable> lift_configuration(const Configuration& c) {
  const Field& f = c.field;
  const int n = c.size();
  std::vector<Vec2> base(n);
  for (int i = 0; i < n; ++i) base[i] = lift_point(c.points[i]);

  // dets[i] = det(V'_i, V'_{i+1}) (0-based), V'_n = -V'_0.
  std::vector<FieldElement> dets(n);
  for (int i = 0; i < n; ++i) {
    Vec2 next = base[(i + 1) % n];
    if (i == n - 1) next = {f.neg(next[0]), f.neg(next[1])};
    dets[i] = det2(f, base[i], next);
    if (dets[i].code == 0) {
      return NotLiftable{SignClass::other, "consecutive points " + std::to_string(i + 1) +
                                               " and " + std::to_string((i + 1) % n + 1) +
                                               " coincide"};
    }
  }

  // lambda_i lambda_{i+1} = c / det_i. The alternating product of the
  // right-hand sides decides solvability.
  FieldElement odd = f.one();
  FieldElement even = f.one();
  for (int i = 0; i < n; ++i) {
    const FieldElement d = f.inv(dets[i]);
    if (i % 2 == 0) {
      odd = f.mul(odd, d);
    } else {
      even = f.mul(even, d);
    }
  }

  FieldElement scale = f.one();
  if (n % 2 == 1) {
    // lambda_1^2 = (odd / even) * scale; choose scale so that lambda_1 = 1.
    scale = f.div(even, odd);
  } else if (odd != even) {
    const SignClass s = odd == f.neg(even) ? SignClass::minus : SignClass::other;
    return NotLiftable{s, "even configuration of sign class " + to_string(s) +
                              " admits no lift with constant determinants"};
  }

  std::vector<FieldElement> lambda(n);
  lambda[0] = f.one();
  for (int i = 0; i + 1 < n; ++i) {
    lambda[i + 1] = f.div(f.mul(f.inv(dets[i]), scale), lambda[i]);
  }
  if (f.mul(lambda[n - 1], lambda[0]) != f.mul(f.inv(dets[n - 1]), scale)) {
    throw std::logic_error("lift system inconsistent after solving");
  }

  Lift lift{std::vector<Vec2>(n), scale};
  for (int i = 0; i < n; ++i) {
    lift.vectors[i] = {f.mul(lambda[i], base[i][0]), f.mul(lambda[i], base[i][1])};
  }
  return lift;
}

Tuple rescaling_canonical(const Field& f, std::span<const FieldElement> a) {
  const auto cls = rescaling_class(f, a);
  return *std::min_element(cls.begin(), cls.end());
}

std::vector<Tuple> rescaling_class(const Field& f, std::span<const FieldElement> a) {
  std::vector<Tuple> out;
  for (FieldElement l : f.units()) {
    const FieldElement li = f.inv(l);
    Tuple t(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) t[i] = f.mul(i % 2 == 0 ? l : li, a[i]);
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::variant<FirstRow, NotLiftable> configuration_to_frieze(const Configuration& c) {
  const Field& f = c.field;
  auto lifted = lift_configuration(c);
  if (auto* bad = std::get_if<NotLiftable>(&lifted)) return *bad;
  const Lift& lift = std::get<Lift>(lifted);
  const int n = c.size();
  const auto& v = lift.vectors;
  auto neg = [&](const Vec2& x) { return Vec2{f.neg(x[0]), f.neg(x[1])}; };
  // V_{i-1}, V_{i-2} for 1-based i; V_0 = -V_n, V_{-1} = -V_{n-1}.
  auto at = [&](int i) -> Vec2 {
    if (i >= 1) return v[i - 1];
    return neg(v[n + i - 1]);
  };

  const FieldElement delta_inv = f.inv(lift.det);
  Tuple a(n);
  for (int i = 1; i <= n; ++i) {
    const Vec2 prev2 = at(i - 2);
    const Vec2 prev1 = at(i - 1);
    const Vec2 cur = at(i);
    a[i - 1] = f.mul(det2(f, prev2, cur), delta_inv);
    for (int k = 0; k < 2; ++k) {
      if (cur[k] != f.sub(f.mul(a[i - 1], prev1[k]), prev2[k])) {
        throw std::logic_error("lift vectors do not satisfy the three-term relation");
      }
    }
  }
  if (n % 2 == 0) a = rescaling_canonical(f, a);
  return FirstRow{f, std::move(a)};
}

std::vector<Vec2> frieze_vectors(const FirstRow& row) {
  const Field& f = row.field;
  Vec2 before{f.neg(f.one()), f.zero()};  // V_{-1}
  Vec2 last{f.zero(), f.one()};            // V_0
  std::vector<Vec2> out;
  for (FieldElement a : row.entries) {
    Vec2 next{f.sub(f.mul(a, last[0]), before[0]), f.sub(f.mul(a, last[1]), before[1])};
    out.push_back(next);
    before = last;
    last = next;
  }
  return out;
}

std::variant<Configuration, CriterionFails> frieze_to_configuration(const FirstRow& row) {
  const auto crit = matrix_criterion(row);
  if (!crit.holds) return CriterionFails{crit.product};
  const Field& f = row.field;
  std::vector<ProjPoint> pts;
  for (const Vec2& v : frieze_vectors(row)) pts.push_back(make_point(f, v[0], v[1]));
  return make_configuration(f, std::move(pts));
}

}  // namespace fqfrieze
