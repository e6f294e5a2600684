#pragma once

#include <iosfwd>
#include <vector>

#include "hser/ratfunc.hpp"
#include "hser/repmodel.hpp"

namespace hser {

// One line of the survey: the on-shell series and its first Laurent data.
struct SweepRow {
  ReprSpec spec;
  long D = 0;
  long dim_M0 = 0;  // 2D - 6
  Rat gamma0_on;
  Rat gamma2_on;
  long pole_order = 0;
  Poly series_num, series_den;
  std::string palindromic_abbrev;  // "-" when the numerator is not palindromic
  bool formula_used = false;       // leading coefficient came from the closed form
};

// every degree multiset with 0 <= 2(r + sum d) - 6 <= max_dim, ordered
// lexicographically by the sorted degree sequence
std::vector<ReprSpec> enumerate_specs(long max_dim);

SweepRow sweep_row(const ReprSpec& spec);

// rows in enumerate_specs order; jobs > 1 fans specs out to a worker pool
// (output order is unaffected).  progress lines go to stderr when verbose.
std::vector<SweepRow> run_sweep(long max_dim, long jobs, bool verbose = false);

// header + one CSV line per row; byte-deterministic
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace hser
