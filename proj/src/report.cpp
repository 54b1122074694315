#include "kneading/report.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "kneading/errors.hpp"

namespace kneading {

using nlohmann::ordered_json;

OutputFormat parse_output_format(std::string_view text) {
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  throw ParseError("unknown output format '" + std::string(text) + "' (expected csv or json)");
}

std::string format_real(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

namespace {

void emit(std::ostream& os, const ordered_json& j) { os << j.dump(2) << '\n'; }

ordered_json record_json(const SuperstableRecord& r) {
  return {{"word", r.word.str()},
          {"mu_star", r.mu_star},
          {"residual", r.residual},
          {"bracket_width", r.bracket_width}};
}

}  // namespace

void write_census(std::ostream& os, const KneadingCensus& census, OutputFormat fmt) {
  if (fmt == OutputFormat::Json) {
    ordered_json words = ordered_json::array();
    for (const auto& w : census.enumerated) words.push_back(w.str());
    emit(os, {{"n", census.n},
              {"count_formula", census.formula_count},
              {"count_enumerated", census.enumerated.size()},
              {"words", words}});
    return;
  }
  os << "n,count_formula,count_enumerated\n"
     << census.n << ',' << census.formula_count << ',' << census.enumerated.size() << '\n';
  for (const auto& w : census.enumerated) os << w.str() << '\n';
}

void write_count(std::ostream& os, int n, std::int64_t count, OutputFormat fmt) {
  if (fmt == OutputFormat::Json) {
    emit(os, {{"n", n}, {"count", count}});
    return;
  }
  os << "n,count\n" << n << ',' << count << '\n';
}

void write_records(std::ostream& os, const std::vector<SuperstableRecord>& records,
                   OutputFormat fmt) {
  if (fmt == OutputFormat::Json) {
    ordered_json rows = ordered_json::array();
    for (const auto& r : records) rows.push_back(record_json(r));
    emit(os, rows);
    return;
  }
  os << "word,mu_star,residual,bracket_width\n";
  for (const auto& r : records) {
    os << r.word.str() << ',' << format_real(r.mu_star) << ',' << format_real(r.residual) << ','
       << format_real(r.bracket_width) << '\n';
  }
}

void write_sweep(std::ostream& os, const SweepReport& report, OutputFormat fmt) {
  const bool has_entropy = !report.entropies.empty();
  if (fmt == OutputFormat::Json) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < report.mus.size(); ++i) {
      ordered_json row{{"mu", report.mus[i]}, {"kneading_word", report.words[i].str()}};
      row["entropy"] = has_entropy ? ordered_json(report.entropies[i]) : ordered_json(nullptr);
      row["lap_depth_reached"] = has_entropy ? report.lap_depths[i] : 0;
      rows.push_back(std::move(row));
    }
    emit(os, {{"family", report.family}, {"depth", report.depth}, {"points", rows}});
    return;
  }
  os << "mu,kneading_word,entropy,lap_depth_reached\n";
  for (std::size_t i = 0; i < report.mus.size(); ++i) {
    os << format_real(report.mus[i]) << ',' << report.words[i].str() << ',';
    if (has_entropy) os << format_real(report.entropies[i]) << ',' << report.lap_depths[i];
    else os << ',';
    os << '\n';
  }
}

void write_sweep_violations(std::ostream& os, const SweepReport& report, OutputFormat fmt) {
  if (fmt == OutputFormat::Json) {
    ordered_json rows = ordered_json::array();
    for (const auto& v : report.kneading_violations) {
      rows.push_back({{"kind", "kneading"},
                      {"i", v.i},
                      {"j", v.j},
                      {"mu_i", report.mus[v.i]},
                      {"mu_j", report.mus[v.j]},
                      {"delta", v.first_difference}});
    }
    for (const auto& v : report.entropy_violations) {
      rows.push_back({{"kind", "entropy"},
                      {"i", v.i},
                      {"j", v.j},
                      {"mu_i", report.mus[v.i]},
                      {"mu_j", report.mus[v.j]},
                      {"delta", v.delta}});
    }
    emit(os, rows);
    return;
  }
  os << "kind,i,j,mu_i,mu_j,delta\n";
  for (const auto& v : report.kneading_violations) {
    os << "kneading," << v.i << ',' << v.j << ',' << format_real(report.mus[v.i]) << ','
       << format_real(report.mus[v.j]) << ',' << v.first_difference << '\n';
  }
  for (const auto& v : report.entropy_violations) {
    os << "entropy," << v.i << ',' << v.j << ',' << format_real(report.mus[v.i]) << ','
       << format_real(report.mus[v.j]) << ',' << format_real(v.delta) << '\n';
  }
}

void write_entropy(std::ostream& os, const EntropyReport& report, OutputFormat fmt) {
  if (fmt == OutputFormat::Json) {
    emit(os, {{"mu", report.mu},
              {"entropy", report.h_estimate},
              {"lap_depth_reached", report.depth_reached},
              {"cap_hit", report.cap_hit},
              {"lap_counts", report.lap_counts}});
    return;
  }
  os << "mu,entropy,lap_depth_reached,cap_hit\n"
     << format_real(report.mu) << ',' << format_real(report.h_estimate) << ','
     << report.depth_reached << ',' << (report.cap_hit ? "true" : "false") << '\n';
}

void write_class_c(std::ostream& os, const ClassCReport& report, OutputFormat fmt) {
  const std::pair<const char*, bool> props[] = {
      {"unique_fixed_point", report.property1_ok},
      {"negative_schwarzian_sufficient", report.property2_sufficient_ok},
      {"positive_inverse_schwarzian", report.property3_ok},
  };
  if (fmt == OutputFormat::Json) {
    ordered_json witnesses = ordered_json::array();
    for (const auto& w : report.witnesses) {
      ordered_json row{{"property", w.property}, {"mu", w.mu}, {"x", w.x}, {"value", w.value}};
      row["branch"] = w.branch ? ordered_json(std::string(1, to_char(*w.branch))) : ordered_json();
      witnesses.push_back(std::move(row));
    }
    ordered_json j{{"family", report.family},
                   {"mu_samples", report.mu_samples},
                   {"x_samples", report.x_samples}};
    for (const auto& [name, ok] : props) j[name] = ok;
    j["witnesses"] = witnesses;
    emit(os, j);
    return;
  }
  os << "family,property,ok,failures\n";
  int index = 1;
  for (const auto& [name, ok] : props) {
    std::size_t failures = 0;
    for (const auto& w : report.witnesses) failures += w.property == index;
    os << report.family << ',' << name << ',' << (ok ? "true" : "false") << ',' << failures << '\n';
    ++index;
  }
}

void write_ivt(std::ostream& os, const Word& w, double mu, double mu1, double mu2,
               OutputFormat fmt) {
  if (fmt == OutputFormat::Json) {
    emit(os, {{"word", w.str()}, {"mu", mu}, {"mu1", mu1}, {"mu2", mu2}});
    return;
  }
  os << "word,mu,mu1,mu2\n"
     << w.str() << ',' << format_real(mu) << ',' << format_real(mu1) << ',' << format_real(mu2)
     << '\n';
}

}  // namespace kneading
