#include "fqfrieze/frieze.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "json.hpp"

#include "fqfrieze/errors.hpp"

namespace fqfrieze {

namespace {

long wrap(long c, long n) { return ((c % n) + n) % n; }

// Depths -1 .. last of the South-East diagonal starting at column `start`,
// reading the first row through `a_at` (0-based, caller handles wrapping).
template <typename AAt>
Tuple diagonal(const Field& f, long start, int last, AAt a_at) {
  Tuple d(static_cast<std::size_t>(last) + 2);
  d[0] = f.zero();  // depth -1
  d[1] = f.one();   // depth 0
  for (int k = 0; k + 1 <= last; ++k) {
    // depth k+1 = a[start + k] * depth k - depth k-1
    d[k + 2] = f.sub(f.mul(a_at(start + k), d[k + 1]), d[k]);
  }
  return d;
}

}  // namespace

struct FriezeBuilder {
  static Frieze make(FirstRow row, std::vector<Tuple> rows) {
    return Frieze(std::move(row), std::move(rows));
  }
};

FirstRow make_first_row(const Field& f, Tuple entries) {
  if (entries.size() < 3) {
    throw InputError("a first row needs at least 3 entries, got " +
                     std::to_string(entries.size()));
  }
  for (FieldElement e : entries) {
    if (e.code >= static_cast<std::uint32_t>(f.order())) {
      throw InputError("element code " + std::to_string(e.code) + " out of range");
    }
  }
  return FirstRow{f, std::move(entries)};
}

FirstRow parse_first_row(const Field& f, std::string_view text) {
  Tuple entries;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto piece = text.substr(pos, comma - pos);
    if (piece.empty() && comma == text.size() && !entries.empty()) break;  // trailing comma
    long long v = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size()) {
      throw InputError("invalid element '" + std::string(piece) + "' in row '" +
                       std::string(text) + "'");
    }
    entries.push_back(f.from_code(v));
    pos = comma + 1;
  }
  return make_first_row(f, std::move(entries));
}

std::string format_tuple(const Field& f, std::span<const FieldElement> t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ",";
    out += f.format(t[i]);
  }
  return out + ")";
}

Mat2 step_matrix(const Field& f, FieldElement a) {
  return {a, f.neg(f.one()), f.one(), f.zero()};
}

CriterionResult matrix_criterion(const Field& f, std::span<const FieldElement> a) {
  Mat2 product = mat2_identity(f);
  for (FieldElement x : a) product = mat2_mul(f, step_matrix(f, x), product);
  const Mat2 minus_id = mat2_neg(f, mat2_identity(f));
  return {product == minus_id, product};
}

FieldElement Frieze::at(int r, long c) const {
  return rows_.at(static_cast<std::size_t>(r + 1))[static_cast<std::size_t>(wrap(c, period()))];
}

FriezeBuild frieze_from_first_row(const FirstRow& row) {
  const Field& f = row.field;
  const int n = row.size();
  const int w = row.width();
  if (n < 3) throw InputError("a first row needs at least 3 entries");

  std::vector<Tuple> rows(static_cast<std::size_t>(w) + 4, Tuple(n));
  auto a_at = [&](long i) { return row.entries[static_cast<std::size_t>(wrap(i, n))]; };
  for (int c = 0; c < n; ++c) {
    const Tuple d = diagonal(f, c, w + 2, a_at);
    if (d[w + 2] != f.one() || d[w + 3] != f.zero()) {
      const int bad_row = d[w + 2] != f.one() ? w + 1 : w + 2;
      return NotAFrieze{row, matrix_criterion(row).product, c, bad_row};
    }
    for (int k = 0; k < w + 4; ++k) rows[k][c] = d[k];
  }
  return FriezeBuilder::make(row, std::move(rows));
}

Frieze build_frieze(const FirstRow& row) {
  auto built = frieze_from_first_row(row);
  if (auto* bad = std::get_if<NotAFrieze>(&built)) {
    throw InputError("row " + format_tuple(row.field, row.entries) +
                     " does not define a tame frieze: diagonal at column " +
                     std::to_string(bad->column + 1) + " fails to close at row " +
                     std::to_string(bad->row_index));
  }
  return std::get<Frieze>(std::move(built));
}

std::optional<std::pair<int, int>> unimodular_violation(const Frieze& fr) {
  const Field& f = fr.field();
  for (int r = 0; r <= fr.width() + 1; ++r) {
    for (int c = 0; c < fr.period(); ++c) {
      const FieldElement det =
          f.sub(f.mul(fr.at(r, c), fr.at(r, c + 1)), f.mul(fr.at(r - 1, c + 1), fr.at(r + 1, c)));
      if (det != f.one()) return std::make_pair(r, c);
    }
  }
  return std::nullopt;
}

std::optional<std::pair<int, int>> periodicity_violation(const Frieze& fr) {
  const Field& f = fr.field();
  const int n = fr.period();
  const int w = fr.width();
  const auto& a = fr.first_row().entries;
  // Unrolled: enough copies that no diagonal starting below 2n needs wrapping.
  Tuple unrolled;
  for (int rep = 0; rep < 3 + (w + 3) / n; ++rep) unrolled.insert(unrolled.end(), a.begin(), a.end());
  auto a_at = [&](long i) { return unrolled.at(static_cast<std::size_t>(i)); };
  for (int c = 0; c < n; ++c) {
    const Tuple here = diagonal(f, c, w + 2, a_at);
    const Tuple next = diagonal(f, c + n, w + 2, a_at);
    for (int k = 0; k < w + 4; ++k) {
      if (here[k] != next[k] || here[k] != fr.at(k - 1, c)) return std::make_pair(k - 1, c);
    }
    if (here[w + 2] != f.one()) return std::make_pair(w + 1, c);
    if (here[w + 3] != f.zero()) return std::make_pair(w + 2, c);
  }
  return std::nullopt;
}

std::optional<std::pair<int, int>> glide_violation(const Frieze& fr) {
  const int w = fr.width();
  for (int r = -1; r <= w + 2; ++r) {
    for (int c = 0; c < fr.period(); ++c) {
      if (fr.at(r, c) != fr.at(w + 1 - r, c + r + 1)) return std::make_pair(r, c);
    }
  }
  return std::nullopt;
}

int rank3(const Field& f, const std::array<FieldElement, 9>& m_in) {
  auto m = m_in;
  int rank = 0;
  for (int col = 0; col < 3 && rank < 3; ++col) {
    int pivot = -1;
    for (int r = rank; r < 3; ++r) {
      if (m[r * 3 + col].code != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    for (int k = 0; k < 3; ++k) std::swap(m[pivot * 3 + k], m[rank * 3 + k]);
    const FieldElement inv = f.inv(m[rank * 3 + col]);
    for (int r = 0; r < 3; ++r) {
      if (r == rank || m[r * 3 + col].code == 0) continue;
      const FieldElement factor = f.mul(m[r * 3 + col], inv);
      for (int k = 0; k < 3; ++k) {
        m[r * 3 + k] = f.sub(m[r * 3 + k], f.mul(factor, m[rank * 3 + k]));
      }
    }
    ++rank;
  }
  return rank;
}

TamenessReport check_tame(const Frieze& fr, TameMode mode) {
  const Field& f = fr.field();
  const int n = fr.period();
  const int w = fr.width();
  const auto& a = fr.first_row().entries;

  // Rows lo..hi available to the check.
  const int lo = mode == TameMode::exhaustive ? -3 : -1;
  const int hi = mode == TameMode::exhaustive ? w + 4 : w + 2;
  std::vector<Tuple> ext(static_cast<std::size_t>(hi - lo + 1), Tuple(n));
  for (int c = 0; c < n; ++c) {
    for (int r = -1; r <= w + 2; ++r) ext[r - lo][c] = fr.at(r, c);
  }
  if (mode == TameMode::exhaustive) {
    auto a_at = [&](long i) { return a[static_cast<std::size_t>(wrap(i, n))]; };
    for (int c = 0; c < n; ++c) {
      // Forward: depth k+1 = a[c+k] depth k - depth k-1.
      for (int r = w + 3; r <= w + 4; ++r) {
        ext[r - lo][c] = f.sub(f.mul(a_at(c + r - 1), ext[r - 1 - lo][c]), ext[r - 2 - lo][c]);
      }
      // Backward: depth k-1 = a[c+k] depth k - depth k+1.
      for (int r = -2; r >= -3; --r) {
        ext[r - lo][c] = f.sub(f.mul(a_at(c + r + 1), ext[r + 1 - lo][c]), ext[r + 2 - lo][c]);
      }
    }
  }
  auto get = [&](int r, long c) { return ext[r - lo][static_cast<std::size_t>(wrap(c, n))]; };

  TamenessReport report;
  for (int r = lo + 2; r <= hi - 2; ++r) {
    for (int c = 0; c < n; ++c) {
      if (mode == TameMode::zero_centered && get(r, c).code != 0) continue;
      // Entry (s, t) of the diamond sits at row r + t - s, column c + s - 1.
      std::array<FieldElement, 9> m{};
      for (int s = 0; s < 3; ++s) {
        for (int t = 0; t < 3; ++t) m[s * 3 + t] = get(r + t - s, c + s - 1);
      }
      ++report.diamonds_checked;
      if (rank3(f, m) != 2) {
        report.ok = false;
        report.witness = std::make_pair(r, c);
        return report;
      }
    }
  }
  return report;
}

std::vector<Tuple> dihedral_images(std::span<const FieldElement> a) {
  const std::size_t n = a.size();
  std::vector<Tuple> out;
  out.reserve(2 * n);
  Tuple rev(a.rbegin(), a.rend());
  for (int pass = 0; pass < 2; ++pass) {
    const std::span<const FieldElement> src = pass == 0 ? a : std::span<const FieldElement>(rev);
    for (std::size_t s = 0; s < n; ++s) {
      Tuple t(n);
      for (std::size_t i = 0; i < n; ++i) t[i] = src[(i + s) % n];
      out.push_back(std::move(t));
    }
  }
  return out;
}

DihedralOrbit frieze_symmetries(std::span<const FieldElement> a) {
  const auto images = dihedral_images(a);
  const std::size_t n = a.size();
  DihedralOrbit orbit;
  std::size_t best = 0;
  for (std::size_t i = 1; i < images.size(); ++i) {
    if (images[i] < images[best]) best = i;  // strict: earlier index wins ties
  }
  orbit.canonical = images[best];
  orbit.reversed = best >= n;
  orbit.rotation = static_cast<int>(best % (n == 0 ? 1 : n));
  std::set<Tuple> distinct(images.begin(), images.end());
  orbit.orbit_size = static_cast<int>(distinct.size());
  return orbit;
}

Tuple canonical_dihedral(std::span<const FieldElement> a) {
  const std::size_t n = a.size();
  // Compare candidates in place instead of materialising all 2n images.
  auto read = [&](bool rev, std::size_t s, std::size_t i) {
    return rev ? a[(2 * n - 1 - ((i + s) % n)) % n] : a[(i + s) % n];
  };
  bool best_rev = false;
  std::size_t best_s = 0;
  for (int pass = 0; pass < 2; ++pass) {
    const bool rev = pass == 1;
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t i = 0; i < n; ++i) {
        const FieldElement x = read(rev, s, i);
        const FieldElement y = read(best_rev, best_s, i);
        if (x < y) {
          best_rev = rev;
          best_s = s;
          break;
        }
        if (y < x) break;
      }
    }
  }
  Tuple out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = read(best_rev, best_s, i);
  return out;
}

std::string render_frieze(const Frieze& fr, RenderFormat format) {
  const Field& f = fr.field();
  const int w = fr.width();
  const int n = fr.period();
  if (format == RenderFormat::json) {
    nlohmann::json j;
    j["field"] = f.descriptor();
    j["width"] = w;
    std::vector<std::uint32_t> first;
    for (FieldElement e : fr.first_row().entries) first.push_back(e.code);
    j["first_row"] = first;
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r <= w + 1; ++r) {
      std::vector<std::uint32_t> row;
      for (int c = 0; c < n; ++c) row.push_back(fr.at(r, c).code);
      rows.push_back(row);
    }
    j["rows"] = rows;
    return j.dump();
  }

  std::size_t cell = 1;
  for (int r = 0; r <= w + 1; ++r) {
    for (int c = 0; c < n; ++c) cell = std::max(cell, f.format(fr.at(r, c)).size());
  }
  std::ostringstream os;
  for (int r = 0; r <= w + 1; ++r) {
    std::string line(static_cast<std::size_t>(r) * cell, ' ');
    for (int c = 0; c <= w + 1 - r; ++c) {
      if (c > 0) line.append(cell, ' ');
      const std::string s = f.format(fr.at(r, c));
      line.append(cell - s.size(), ' ');
      line += s;
    }
    os << line << '\n';
  }
  return os.str();
}

Frieze parse_frieze_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed frieze JSON: ") + e.what());
  }
  try {
    const Field f = Field::parse(j.at("field").get<std::string>());
    Tuple entries;
    for (long long code : j.at("first_row").get<std::vector<long long>>()) {
      entries.push_back(f.from_code(code));
    }
    Frieze fr = build_frieze(make_first_row(f, std::move(entries)));
    if (j.at("width").get<int>() != fr.width()) throw InputError("width disagrees with first row");
    const auto rows = j.at("rows").get<std::vector<std::vector<long long>>>();
    if (static_cast<int>(rows.size()) != fr.width() + 2) throw InputError("wrong number of rows");
    for (int r = 0; r <= fr.width() + 1; ++r) {
      if (static_cast<int>(rows[r].size()) != fr.period()) throw InputError("wrong row length");
      for (int c = 0; c < fr.period(); ++c) {
        if (rows[r][c] != fr.at(r, c).code) {
          throw InputError("row " + std::to_string(r) + " disagrees with the first row");
        }
      }
    }
    return fr;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed frieze JSON: ") + e.what());
  }
}

}  // namespace fqfrieze
