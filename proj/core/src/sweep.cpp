#include "hser/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <iostream>
#include <stdexcept>
#include <mutex>
#include <ostream>
#include <thread>

#include "hser/engine.hpp"
#include "hser/render.hpp"
#include "hser/schur.hpp"

namespace hser {

namespace {

void extend(std::vector<long>& degrees, long min_d, long D, long Dmax,
            std::vector<ReprSpec>& out) {
  if (D >= 3) out.push_back(ReprSpec::of(degrees));
  for (long d = min_d; D + d + 1 <= Dmax; ++d) {
    degrees.push_back(d);
    extend(degrees, d, D + d + 1, Dmax, out);
    degrees.pop_back();
  }
}

}  // namespace

std::vector<ReprSpec> enumerate_specs(long max_dim) {
  if (max_dim < 0) throw std::invalid_argument("max_dim must be nonnegative");
  long Dmax = (max_dim + 6) / 2;
  std::vector<long> degrees;
  std::vector<ReprSpec> out;
  extend(degrees, 1, 0, Dmax, out);
  std::sort(out.begin(), out.end());
  return out;
}

SweepRow sweep_row(const ReprSpec& spec) {
  SweepRow row;
  row.spec = spec;
  row.D = decompose(spec).D;
  row.dim_M0 = 2 * row.D - 6;
  RatFunc on = onshell_hilbert(spec);
  LaurentExpansion le = laurent_at_one(on, 2);
  row.pole_order = le.pole_order;
  GammaReport g0 = gamma0_onshell(spec);
  row.gamma0_on = g0.value;
  row.formula_used = g0.applicable;
  row.gamma2_on = le.coefficients[2];
  row.series_num = on.num();
  row.series_den = on.den();
  try {
    row.palindromic_abbrev = render_palindromic(on.num());
  } catch (const std::invalid_argument&) {
    row.palindromic_abbrev = "-";
  }
  return row;
}

std::vector<SweepRow> run_sweep(long max_dim, long jobs, bool verbose) {
  std::vector<ReprSpec> specs = enumerate_specs(max_dim);
  std::vector<SweepRow> rows(specs.size());
  std::atomic<size_t> next{0};
  std::mutex log_mutex;
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= specs.size()) return;
      rows[i] = sweep_row(specs[i]);
      if (verbose) {
        std::lock_guard lock(log_mutex);
        std::cerr << "sweep: " << specs[i].str() << " done\n";
      }
    }
  };
  long n = std::max(1L, std::min<long>(jobs, (long)specs.size()));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (long i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "spec,D,dim_M0,gamma0_on,gamma2_on,pole_order,series_num,series_den,"
         "palindromic_abbrev,formula_used\n";
  for (const SweepRow& r : rows) {
    out << r.spec.str() << ',' << r.D << ',' << r.dim_M0 << ',' << rat_str(r.gamma0_on)
        << ',' << rat_str(r.gamma2_on) << ',' << r.pole_order << ',' << coeff_list(r.series_num)
        << ',' << coeff_list(r.series_den) << ",\"" << r.palindromic_abbrev << "\","
        << (r.formula_used ? "true" : "false") << '\n';
  }
}

}  // namespace hser
