#pragma once

// Tame Coxeter friezes over F_q, generated from their first row.
//
// Indexing: a frieze of width w has period n = w + 3 and first row
// (a_1, ..., a_n). Row r, column c (0-based, taken mod n) holds the entry
// at depth r of the South-East diagonal starting above a_{c+1}:
//
//   row -1 : 0 0 0 ...
//   row  0 : 1 1 1 ...
//   row  1 : a_1 a_2 a_3 ...
//   row  2 : a_1 a_2 - 1, a_2 a_3 - 1, ...
//   ...
//   row w+1: 1 1 1 ...
//   row w+2: 0 0 0 ...
//
// In this layout a diamond with left entry (r, c) has right entry (r, c+1),
// top (r-1, c+1) and bottom (r+1, c), and the unimodular rule reads
//   at(r, c) * at(r, c+1) - at(r-1, c+1) * at(r+1, c) = 1.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "fqfrieze/gf.hpp"

namespace fqfrieze {

struct FirstRow {
  Field field;
  Tuple entries;

  int size() const { return static_cast<int>(entries.size()); }
  int width() const { return size() - 3; }
};

// Throws InputError when fewer than 3 entries are given.
FirstRow make_first_row(const Field& f, Tuple entries);
// Comma-separated element codes, e.g. "1,1,1,0,0".
FirstRow parse_first_row(const Field& f, std::string_view text);
std::string format_tuple(const Field& f, std::span<const FieldElement> t);

// [[a, -1], [1, 0]]
Mat2 step_matrix(const Field& f, FieldElement a);

struct CriterionResult {
  bool holds = false;
  Mat2 product;
};

// Product M(a_n) ... M(a_2) M(a_1), compared with -Id. Accepts any length
// >= 1 so that partial products can be probed.
CriterionResult matrix_criterion(const Field& f, std::span<const FieldElement> a);
inline CriterionResult matrix_criterion(const FirstRow& row) {
  return matrix_criterion(row.field, row.entries);
}

class Frieze {
 public:
  const Field& field() const { return row_.field; }
  const FirstRow& first_row() const { return row_; }
  int width() const { return row_.width(); }
  int period() const { return row_.size(); }

  // r in [-1, width() + 2]; c taken mod period().
  FieldElement at(int r, long c) const;

  // Rows -1 .. width()+2, each of length period().
  const std::vector<Tuple>& rows() const { return rows_; }

  friend bool operator==(const Frieze& a, const Frieze& b) {
    return a.row_.field == b.row_.field && a.row_.entries == b.row_.entries &&
           a.rows_ == b.rows_;
  }

 private:
  friend struct FriezeBuilder;
  Frieze(FirstRow row, std::vector<Tuple> rows) : row_(std::move(row)), rows_(std::move(rows)) {}

  FirstRow row_;
  std::vector<Tuple> rows_;
};

struct NotAFrieze {
  FirstRow row;
  Mat2 product;  // M(a_n) ... M(a_1), which differs from -Id
  // First column whose diagonal failed to close, and the offending row.
  int column = 0;
  int row_index = 0;
};

using FriezeBuild = std::variant<Frieze, NotAFrieze>;

// Runs the South-East diagonal recursion from every column and accepts iff
// every diagonal closes with 1 at row w+1 and 0 at row w+2.
FriezeBuild frieze_from_first_row(const FirstRow& row);

// Convenience: throws InputError on rejection.
Frieze build_frieze(const FirstRow& row);

// First diamond (r, c) violating the unimodular rule, if any.
std::optional<std::pair<int, int>> unimodular_violation(const Frieze& f);

// Periodicity: the diagonals recomputed over an unrolled first row
// (a_1..a_n repeated twice, no index wrapping) agree at columns c and c + n
// and close up at every column. Glide reflection:
//   at(r, c) == at(w + 1 - r, c + r + 1) for every stored row r.
std::optional<std::pair<int, int>> periodicity_violation(const Frieze& f);
std::optional<std::pair<int, int>> glide_violation(const Frieze& f);

enum class TameMode {
  // Only 3x3 diamonds centred at a zero of the stored array.
  zero_centered,
  // Every 3x3 diamond, with two extra rows computed by the diagonal
  // recursion on each side so that the border rows can be centres too.
  exhaustive,
};

struct TamenessReport {
  bool ok = true;
  std::optional<std::pair<int, int>> witness;  // (row, column) of the centre
  std::size_t diamonds_checked = 0;
};

TamenessReport check_tame(const Frieze& f, TameMode mode = TameMode::zero_centered);

// Rank of a 3x3 matrix over the field (row-major).
int rank3(const Field& f, const std::array<FieldElement, 9>& m);

struct DihedralOrbit {
  Tuple canonical;
  int rotation = 0;       // canonical = rotate(source or reversed source, rotation)
  bool reversed = false;
  int orbit_size = 0;
};

// Lexicographically least tuple among the n rotations and the n rotations
// of the reversal (element codes compared). Ties prefer the non-reversed
// rotation with the smallest shift.
DihedralOrbit frieze_symmetries(std::span<const FieldElement> a);
inline DihedralOrbit frieze_symmetries(const FirstRow& row) {
  return frieze_symmetries(row.entries);
}
Tuple canonical_dihedral(std::span<const FieldElement> a);
std::vector<Tuple> dihedral_images(std::span<const FieldElement> a);

enum class RenderFormat { text, json };

// text: one fundamental domain, rows 0..w+1 staggered as in a printed
// frieze. json: {"field", "width", "first_row", "rows"} with rows 0..w+1
// listed over one full period.
std::string render_frieze(const Frieze& f, RenderFormat format);

// Inverse of render_frieze(json). Throws InputError on malformed input or
// when the stored rows disagree with the first row.
Frieze parse_frieze_json(std::string_view json);

}  // namespace fqfrieze
