#pragma once

#include <string>
#include <vector>

#include "monideal/betti.hpp"
#include "monideal/field.hpp"
#include "monideal/ideal.hpp"

namespace monideal {

/// One golden comparison: a quantity recomputed from scratch against an
/// embedded reference value. `where` says which reference item the record
/// reproduces so a failure points at the exact disagreeing entry.
struct CheckResult {
  std::string label;
  std::string where;
  bool pass = false;
  std::string detail;  // expected-vs-got summary on failure, notes on success
};

struct ReproReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

/// The running example: the squarefree Stanley-Reisner-style ideal in six
/// variables with eight degree-three generators whose powers separate all
/// four closure operations.
MonomialIdeal sturmfels_ideal();

/// Checks at s = 2: the four Betti tables of J^[2], J^2, closure(J^2), J^(2),
/// their regularities (8, 7, 6, 6), projdim(J^(2)) = 3, the 21-generator
/// symbolic-power list, and the 37-generator closure list.
ReproReport run_sturmfels(const Field& field = Field::rationals());

/// Checks the split-ideal regularity formulas at a given uniform arity e:
/// reg of the Frobenius square, square, closure of square, symbolic square
/// equal 10e-2, 12e-5, 11e-5, 9e-3. Direct homology in the split ring for
/// e <= 2, transfer from the base ring for e >= 2; at e = 2 both routes run.
ReproReport run_theorem1(int e, const Field& field = Field::rationals());

/// Reproduces the 20-row regularity table over all recorded splittings via
/// transfer. `rows` selects 1-based row numbers (empty = all). When `direct`
/// is set, rows with target arity <= 12 are additionally recomputed directly.
ReproReport run_table(const std::vector<int>& rows = {}, bool direct = false,
                      const Field& field = Field::rationals());

/// Renders one line per check: "PASS <label>" or "FAIL <label>: <detail>".
std::string format_report(const ReproReport& report);

namespace golden {

struct TableRow {
  std::string label;           // e.g. "x1, x2 / 2"
  std::vector<int> arities;    // per-variable split arities in the base ring
  int reg_frobenius;           // reg(sigma(J)^[2])
  int reg_power;               // reg(sigma(J)^2)
  int reg_closure;             // reg of the closure of sigma(J)^2
  int reg_symbolic;            // reg(sigma(J)^(2))
};

const std::vector<TableRow>& table_rows();

/// Reference Betti tables, entries (i, internal degree) -> count.
BettiTable betti_frobenius_square();
BettiTable betti_square();
BettiTable betti_closure_square();
BettiTable betti_symbolic_square();

/// Reference generator lists at s = 2 (exponent vectors over x1..x6).
std::vector<std::vector<int>> symbolic_square_generators();
std::vector<std::vector<int>> closure_square_generators();

}  // namespace golden

}  // namespace monideal
