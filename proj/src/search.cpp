#include "fqfrieze/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "json.hpp"

#include "fqfrieze/errors.hpp"

namespace fqfrieze {

namespace {

std::uint64_t matrix_key(const Mat2& m) {
  return static_cast<std::uint64_t>(m.a.code) | (static_cast<std::uint64_t>(m.b.code) << 16U) |
         (static_cast<std::uint64_t>(m.c.code) << 32U) |
         (static_cast<std::uint64_t>(m.d.code) << 48U);
}

// Per-worker accumulator; merged deterministically at the end.
struct Collector {
  std::size_t keep_limit = 0;
  std::uint64_t count = 0;
  std::vector<Tuple> tuples;
  bool tuples_complete = true;
  std::map<Tuple, std::uint64_t> classes;
  double work = 0;

  void add(const Tuple& t) {
    ++count;
    if (tuples_complete) {
      if (tuples.size() < keep_limit) {
        tuples.push_back(t);
      } else {
        tuples_complete = false;
        tuples.clear();
        tuples.shrink_to_fit();
      }
    }
    ++classes[canonical_dihedral(t)];
  }
};

class Enumerator {
 public:
  Enumerator(const Field& f, int n) : f_(f), n_(n), q_(f.order()) {
    steps_.reserve(q_);
    for (FieldElement a : f.elements()) steps_.push_back(step_matrix(f, a));
    minus_id_ = mat2_neg(f, mat2_identity(f));
  }

  // All tuples of length `len` with first entry in `firsts`; calls
  // leaf(tuple, product) for each, counting one multiplication per step.
  template <typename Leaf>
  void walk(int len, const std::vector<std::uint32_t>& firsts, double& work, Leaf&& leaf) const {
    Tuple cur(len);
    std::vector<Mat2> prefix(static_cast<std::size_t>(len) + 1);
    prefix[0] = mat2_identity(f_);
    for (std::uint32_t first : firsts) {
      cur[0] = FieldElement{first};
      prefix[1] = steps_[first];
      ++work;
      if (len == 1) {
        leaf(cur, prefix[1]);
        continue;
      }
      descend(1, len, cur, prefix, work, leaf);
    }
  }

  const Mat2& minus_id() const { return minus_id_; }
  int order() const { return q_; }

 private:
  template <typename Leaf>
  void descend(int depth, int len, Tuple& cur, std::vector<Mat2>& prefix, double& work,
               Leaf& leaf) const {
    for (int a = 0; a < q_; ++a) {
      cur[depth] = FieldElement{static_cast<std::uint32_t>(a)};
      prefix[depth + 1] = mat2_mul(f_, steps_[a], prefix[depth]);
      ++work;
      if (depth + 1 == len) {
        leaf(cur, prefix[depth + 1]);
      } else {
        descend(depth + 1, len, cur, prefix, work, leaf);
      }
    }
  }

  const Field& f_;
  int n_;
  int q_;
  std::vector<Mat2> steps_;
  Mat2 minus_id_;
};

std::vector<std::vector<std::uint32_t>> split_firsts(int q, int workers) {
  workers = std::max(1, std::min(workers, q));
  std::vector<std::vector<std::uint32_t>> parts(workers);
  for (int a = 0; a < q; ++a) parts[a % workers].push_back(static_cast<std::uint32_t>(a));
  return parts;
}

double geometric_work(double q, int len) {
  double total = 0, term = 1;
  for (int k = 1; k <= len; ++k) {
    term *= q;
    total += term;
  }
  return total;
}

}  // namespace

Strategy parse_strategy(std::string_view name) {
  if (name == "naive") return Strategy::naive;
  if (name == "mitm") return Strategy::mitm;
  throw InputError("unknown strategy '" + std::string(name) + "' (expected naive or mitm)");
}

std::string to_string(Strategy s) { return s == Strategy::naive ? "naive" : "mitm"; }

double default_budget() {
  if (const char* env = std::getenv("FQFRIEZE_BUDGET")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && v > 0) return v;
  }
  return 1e8;
}

double estimate_work(int q, int n, Strategy strategy) {
  if (strategy == Strategy::naive) return geometric_work(q, n);
  const int left = (n + 1) / 2;
  return geometric_work(q, left) + geometric_work(q, n - left);
}

EnumerationResult enumerate_friezes(const Field& f, int w, const SearchOptions& options) {
  if (w < 1) throw InputError("enumeration needs width >= 1, got " + std::to_string(w));
  const int n = w + 3;
  const int q = f.order();
  const double estimate = estimate_work(q, n, options.strategy);
  if (estimate > options.budget) {
    std::ostringstream os;
    os << "enumerating width " << w << " over F_" << q << " with " << to_string(options.strategy)
       << " needs about " << estimate << " matrix multiplications, budget is " << options.budget;
    throw BudgetExceeded(os.str(), estimate, options.budget);
  }

  const auto start = std::chrono::steady_clock::now();
  const Enumerator en(f, n);
  const auto parts = split_firsts(q, options.workers);
  std::vector<Collector> collectors(parts.size());
  for (auto& c : collectors) c.keep_limit = options.keep_tuples_limit;

  double table_work = 0;
  if (options.strategy == Strategy::naive) {
    auto job = [&](std::size_t i) {
      Collector& col = collectors[i];
      en.walk(n, parts[i], col.work, [&](const Tuple& t, const Mat2& p) {
        if (p == en.minus_id()) col.add(t);
      });
    };
    std::vector<std::thread> pool;
    for (std::size_t i = 1; i < parts.size(); ++i) pool.emplace_back(job, i);
    job(0);
    for (auto& t : pool) t.join();
  } else {
    const int left = (n + 1) / 2;
    const int right = n - left;
    // Right halves (a_{left+1}, ..., a_n), keyed by M(a_n) ... M(a_{left+1}).
    std::unordered_map<std::uint64_t, std::vector<Tuple>> table;
    std::vector<std::uint32_t> all(q);
    for (int a = 0; a < q; ++a) all[a] = static_cast<std::uint32_t>(a);
    en.walk(right, all, table_work,
            [&](const Tuple& t, const Mat2& p) { table[matrix_key(p)].push_back(t); });

    auto job = [&](std::size_t i) {
      Collector& col = collectors[i];
      Tuple full(n);
      en.walk(left, parts[i], col.work, [&](const Tuple& t, const Mat2& l) {
        // Need R * L = -Id, i.e. R = -L^{-1}; det L = 1.
        const Mat2 target{l.d, f.neg(l.b), f.neg(l.c), l.a};
        const auto it = table.find(matrix_key(mat2_neg(f, target)));
        if (it == table.end()) return;
        std::copy(t.begin(), t.end(), full.begin());
        for (const Tuple& r : it->second) {
          std::copy(r.begin(), r.end(), full.begin() + left);
          col.add(full);
        }
      });
    };
    std::vector<std::thread> pool;
    for (std::size_t i = 1; i < parts.size(); ++i) pool.emplace_back(job, i);
    job(0);
    for (auto& t : pool) t.join();
  }

  EnumerationResult result{f, w, 0, {}, {}};
  result.work = table_work;
  std::map<Tuple, std::uint64_t> classes;
  for (auto& col : collectors) {
    result.total_count += col.count;
    result.work += col.work;
    result.tuples_complete = result.tuples_complete && col.tuples_complete;
    for (auto& [rep, hits] : col.classes) classes[rep] += hits;
  }
  if (result.tuples_complete && result.total_count <= options.keep_tuples_limit) {
    for (auto& col : collectors) {
      result.tuples.insert(result.tuples.end(), std::make_move_iterator(col.tuples.begin()),
                           std::make_move_iterator(col.tuples.end()));
    }
    std::sort(result.tuples.begin(), result.tuples.end());
  } else {
    result.tuples_complete = false;
  }
  for (auto& [rep, hits] : classes) {
    const int size = frieze_symmetries(rep).orbit_size;
    if (static_cast<std::uint64_t>(size) != hits) result.dihedral_closed = false;
    result.orbits.push_back({rep, size});
  }
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

std::vector<CountCheck> verify_count_formula(const Field& f, int w_max,
                                             const SearchOptions& options) {
  std::vector<CountCheck> rows;
  for (int w = 1; w <= w_max; ++w) {
    CountCheck row;
    row.width = w;
    row.enumerated = enumerate_friezes(f, w, options).total_count;
    row.closed_form = count_friezes(f.order(), f.char_is_2(), w);
    row.match = BigInt(row.enumerated) == row.closed_form;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string catalog_orbits(const EnumerationResult& result, RenderFormat format) {
  const Field& f = result.field;
  if (format == RenderFormat::json) {
    nlohmann::json j;
    j["field"] = f.descriptor();
    j["width"] = result.width;
    j["count"] = result.total_count;
    nlohmann::json orbits = nlohmann::json::array();
    for (const auto& o : result.orbits) {
      std::vector<std::uint32_t> rep;
      for (FieldElement e : o.rep) rep.push_back(e.code);
      orbits.push_back({{"rep", rep}, {"size", o.size}});
    }
    j["orbits"] = orbits;
    return j.dump();
  }
  std::ostringstream os;
  os << "field: " << f.descriptor() << '\n';
  os << "width: " << result.width << '\n';
  os << "count: " << result.total_count << '\n';
  os << "orbits: " << result.orbits.size() << '\n';
  for (const auto& o : result.orbits) {
    os << "  " << format_tuple(f, o.rep) << "  size " << o.size << '\n';
  }
  return os.str();
}

}  // namespace fqfrieze
