#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "kneading/entropy.hpp"
#include "kneading/enumerate.hpp"
#include "kneading/family.hpp"
#include "kneading/inverse_iteration.hpp"

namespace kneading {

enum class OutputFormat { Csv, Json };

// "csv" or "json"; ParseError otherwise.
OutputFormat parse_output_format(std::string_view text);

// Decimal with 17 significant digits, the fixed CSV number format.
std::string format_real(double v);

// Census: header `n,count_formula,count_enumerated`, the counts row, then one
// word per row in sorted order.
void write_census(std::ostream& os, const KneadingCensus& census, OutputFormat fmt);

void write_count(std::ostream& os, int n, std::int64_t count, OutputFormat fmt);

// Rows `word,mu_star,residual,bracket_width`.
void write_records(std::ostream& os, const std::vector<SuperstableRecord>& records,
                   OutputFormat fmt);

// Rows `mu,kneading_word,entropy,lap_depth_reached`.
void write_sweep(std::ostream& os, const SweepReport& report, OutputFormat fmt);

// Rows `kind,i,j,mu_i,mu_j,delta`. For kneading violations delta is the index
// of the first differing symbol; for entropy it is h_i - h_j.
void write_sweep_violations(std::ostream& os, const SweepReport& report, OutputFormat fmt);

void write_entropy(std::ostream& os, const EntropyReport& report, OutputFormat fmt);

void write_class_c(std::ostream& os, const ClassCReport& report, OutputFormat fmt);

void write_ivt(std::ostream& os, const Word& w, double mu, double mu1, double mu2,
               OutputFormat fmt);

}  // namespace kneading
