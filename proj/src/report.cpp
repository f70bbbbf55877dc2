#include <iomanip>
#include <sstream>
#include <string>

#include "fbas/bench.hpp"
#include "json.hpp"

namespace fbas {
namespace {

using Json = nlohmann::ordered_json;

std::string anchor_label(const AnchorSelection& a) {
  std::string s = "'";
  s.push_back(static_cast<char>(a.character));
  s += "' @ " + std::to_string(a.index) + " (" + std::to_string(a.score.value()) + ")";
  return s;
}

std::string percent(const std::optional<double>& v) {
  return v ? format_fixed2(v) + "%" : "n/a";
}

std::string times(const std::optional<double>& v) {
  return v ? format_fixed2(v) + "x" : "n/a";
}

void render_summary(std::ostream& out, const BenchReport& r) {
  const auto& t = r.totals;
  out << "FBAS vs BMH: " << percent(t.stats.improvement_pct) << " fewer comparisons\n";
  out << "FBAS vs naive: " << times(t.stats.speedup_vs_naive) << " speedup, "
      << percent(t.stats.reduction_vs_naive_pct) << " fewer comparisons (per-pattern mean "
      << percent(t.mean_reduction_vs_naive_pct) << ")\n";
  std::size_t wins = 0;
  for (const auto& row : r.rows) wins += row.fbas < row.bmh ? 1 : 0;
  out << "FBAS < BMH on " << wins << " of " << r.rows.size() << " patterns\n";
}

std::string render_text(const BenchReport& r) {
  std::ostringstream out;
  out << "corpus: " << r.source_name << " (" << format_thousands(r.corpus_length)
      << " bytes), mode: " << to_string(r.mode) << "\n\n";

  std::size_t width = 7;
  for (const auto& row : r.rows) width = std::max(width, row.label.size() + (row.duplicate ? 2 : 0));
  width += 2;

  const auto line = [&](const std::string& name, const std::string& len, const std::string& naive,
                        const std::string& kmp, const std::string& bmh, const std::string& fbas,
                        const std::string& impr, const std::string& anchor) {
    out << std::left << std::setw(static_cast<int>(width)) << name << std::right << std::setw(6)
        << len << std::setw(13) << naive << std::setw(13) << kmp << std::setw(12) << bmh
        << std::setw(12) << fbas << std::setw(13) << impr;
    if (!anchor.empty()) out << "  " << anchor;
    out << '\n';
  };

  line("Pattern", "Length", "Naive", "KMP", "BMH", "FBAS", "Improvement", "Anchor");
  out << std::string(width + 69 + 16, '-') << '\n';
  bool any_duplicate = false;
  for (const auto& row : r.rows) {
    any_duplicate |= row.duplicate;
    line(row.label + (row.duplicate ? " *" : ""), std::to_string(row.length()),
         format_thousands(row.naive), format_thousands(row.kmp), format_thousands(row.bmh),
         format_thousands(row.fbas), percent(row.stats.improvement_pct), anchor_label(row.anchor));
  }
  out << std::string(width + 69 + 16, '-') << '\n';
  const auto& t = r.totals;
  line("Total", "--", format_thousands(t.naive), format_thousands(t.kmp), format_thousands(t.bmh),
       format_thousands(t.fbas), percent(t.stats.improvement_pct), "");
  if (any_duplicate) out << "* duplicate pattern\n";
  out << '\n';
  render_summary(out, r);
  return out.str();
}

std::string markdown_escape(const std::string& s) {
  std::string out;
  for (const char c : s) {
    if (c == '|' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string render_markdown(const BenchReport& r) {
  std::ostringstream out;
  out << "Corpus: `" << r.source_name << "` (" << format_thousands(r.corpus_length)
      << " bytes), mode: " << to_string(r.mode) << "\n\n";
  out << "| Pattern | Length | Naive | KMP | BMH | FBAS | Improvement | Anchor |\n";
  out << "|:--|:-:|--:|--:|--:|--:|:-:|:--|\n";
  for (const auto& row : r.rows) {
    out << "| " << markdown_escape(row.label) << (row.duplicate ? " (duplicate)" : "") << " | "
        << row.length() << " | " << format_thousands(row.naive) << " | "
        << format_thousands(row.kmp) << " | " << format_thousands(row.bmh) << " | "
        << format_thousands(row.fbas) << " | " << percent(row.stats.improvement_pct) << " | "
        << markdown_escape(anchor_label(row.anchor)) << " |\n";
  }
  const auto& t = r.totals;
  out << "| **Total** | -- | **" << format_thousands(t.naive) << "** | **"
      << format_thousands(t.kmp) << "** | **" << format_thousands(t.bmh) << "** | **"
      << format_thousands(t.fbas) << "** | **" << percent(t.stats.improvement_pct) << "** | |\n\n";
  render_summary(out, r);
  return out.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string csv_number(const std::optional<double>& v) {
  return v ? format_full(*v) : "undefined";
}

std::string render_csv(const BenchReport& r) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const auto& row : r.rows) {
    out << csv_field(row.pattern) << ',' << row.length() << ',' << row.naive << ',' << row.kmp
        << ',' << row.bmh << ',' << row.fbas << ',' << csv_number(row.stats.improvement_pct) << ','
        << csv_number(row.stats.speedup_vs_naive) << ',' << row.anchor.index << ','
        << csv_field(std::string(1, static_cast<char>(row.anchor.character))) << ','
        << row.anchor.score.value() << '\n';
  }
  const auto& t = r.totals;
  out << "TOTAL,," << t.naive << ',' << t.kmp << ',' << t.bmh << ',' << t.fbas << ','
      << csv_number(t.stats.improvement_pct) << ',' << csv_number(t.stats.speedup_vs_naive)
      << ",,,\n";
  return out.str();
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

std::string render_json(const BenchReport& r) {
  Json doc;
  doc["corpus_meta"] = {{"source_name", r.source_name}, {"length", r.corpus_length}};
  doc["mode"] = to_string(r.mode);
  doc["rows"] = Json::array();
  for (const auto& row : r.rows) {
    Json j;
    j["pattern"] = row.pattern;
    j["label"] = row.label;
    j["length"] = row.length();
    j["naive"] = row.naive;
    j["kmp"] = row.kmp;
    j["bmh"] = row.bmh;
    j["fbas"] = row.fbas;
    j["matches"] = row.matches;
    j["duplicate"] = row.duplicate;
    j["fbas_alignments"] = row.fbas_alignments;
    j["fbas_anchor_hits"] = row.fbas_anchor_hits;
    j["anchor"] = {{"index", row.anchor.index},
                   {"char", std::string(1, static_cast<char>(row.anchor.character))},
                   {"byte", row.anchor.character},
                   {"score", row.anchor.score.value()}};
    j["improvement_pct"] = optional_number(row.stats.improvement_pct);
    j["speedup_vs_naive"] = optional_number(row.stats.speedup_vs_naive);
    j["bmh_speedup_vs_naive"] = optional_number(row.stats.bmh_speedup_vs_naive);
    j["reduction_vs_naive_pct"] = optional_number(row.stats.reduction_vs_naive_pct);
    doc["rows"].push_back(std::move(j));
  }
  const auto& t = r.totals;
  doc["totals"] = {
      {"naive", t.naive},
      {"kmp", t.kmp},
      {"bmh", t.bmh},
      {"fbas", t.fbas},
      {"improvement_pct", optional_number(t.stats.improvement_pct)},
      {"speedup_vs_naive", optional_number(t.stats.speedup_vs_naive)},
      {"bmh_speedup_vs_naive", optional_number(t.stats.bmh_speedup_vs_naive)},
      {"reduction_vs_naive_pct", optional_number(t.stats.reduction_vs_naive_pct)},
      {"mean_reduction_vs_naive_pct", optional_number(t.mean_reduction_vs_naive_pct)},
      {"mean_speedup_vs_naive", optional_number(t.mean_speedup_vs_naive)},
  };
  // Invalid UTF-8 (e.g. a lone byte of a multi-byte anchor) is replaced, not fatal.
  return doc.dump(2, ' ', false, Json::error_handler_t::replace) + "\n";
}

}  // namespace

std::string render_report(const BenchReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::kText: return render_text(report);
    case ReportFormat::kCsv: return render_csv(report);
    case ReportFormat::kJson: return render_json(report);
    case ReportFormat::kMarkdown: return render_markdown(report);
  }
  return render_text(report);
}

}  // namespace fbas
