#pragma once

// Exhaustive enumeration of tame friezes of a given width over F_q, i.e. of
// all tuples (a_1, ..., a_n), n = w + 3, with M(a_n) ... M(a_1) = -Id.

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "fqfrieze/formulas.hpp"
#include "fqfrieze/frieze.hpp"
#include "fqfrieze/gf.hpp"

namespace fqfrieze {

enum class Strategy {
  naive,  // depth-first over all q^n tuples, prefix products reused
  mitm,   // meet in the middle on a hash table of right-half products
};

Strategy parse_strategy(std::string_view name);
std::string to_string(Strategy s);

// Elementary matrix multiplications allowed per enumeration. Reads
// FQFRIEZE_BUDGET when set, otherwise 1e8.
double default_budget();

struct SearchOptions {
  Strategy strategy = Strategy::mitm;
  double budget = default_budget();
  int workers = 1;
  // Full tuple lists are kept only while the count stays at or below this.
  std::size_t keep_tuples_limit = 1'000'000;
};

struct OrbitEntry {
  Tuple rep;  // canonical dihedral representative
  int size = 0;
};

struct EnumerationResult {
  Field field;
  int width = 0;
  std::uint64_t total_count = 0;
  std::vector<OrbitEntry> orbits;  // sorted by rep
  std::vector<Tuple> tuples;       // sorted; empty when !tuples_complete
  bool tuples_complete = true;
  // Every dihedral class was hit exactly orbit-size times.
  bool dihedral_closed = true;
  double work = 0;  // matrix multiplications spent
  std::chrono::duration<double> elapsed{};
};

// Estimated matrix multiplications for an enumeration of length n.
double estimate_work(int q, int n, Strategy strategy);

// Throws InputError (w < 1) or BudgetExceeded.
EnumerationResult enumerate_friezes(const Field& f, int w, const SearchOptions& options = {});

struct CountCheck {
  int width = 0;
  std::uint64_t enumerated = 0;
  BigInt closed_form;
  bool match = false;
};

std::vector<CountCheck> verify_count_formula(const Field& f, int w_max,
                                             const SearchOptions& options = {});

// text: header plus one line per orbit; json:
// {"field", "width", "count", "orbits": [{"rep": [...], "size": s}, ...]}.
std::string catalog_orbits(const EnumerationResult& result, RenderFormat format);

}  // namespace fqfrieze
