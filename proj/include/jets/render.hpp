#pragma once

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "jets/sections.hpp"

namespace jets {

enum class OutputFormat { Plain, Csv, Json, Latex };

inline OutputFormat parse_format(const std::string& s) {
  if (s == "plain")
    return OutputFormat::Plain;
  if (s == "csv")
    return OutputFormat::Csv;
  if (s == "json")
    return OutputFormat::Json;
  if (s == "latex")
    return OutputFormat::Latex;
  throw invalid_input("unknown format '" + s +
                      "' (expected plain|csv|json|latex)");
}

inline std::string render_csv(const std::vector<PrunedRow>& rows) {
  std::ostringstream out;
  out << "k,s_lo,s_hi,h0,feasible_min,feasible_max,exact\n";
  for (const PrunedRow& r : rows) {
    out << r.k << ',' << r.raw.s_lo << ',' << r.raw.s_hi << ',';
    if (r.h0)
      out << r.h0->value;
    out << ',';
    if (!r.feasible_empty())
      out << r.feasible_lo;
    out << ',';
    if (!r.feasible_empty())
      out << r.feasible_hi;
    out << ',';
    if (r.h0)
      out << (r.h0->exact ? "true" : "false");
    out << '\n';
  }
  return out.str();
}

inline nlohmann::json rows_to_json(const std::vector<PrunedRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const PrunedRow& r : rows) {
    nlohmann::json j;
    j["k"] = static_cast<long long>(r.k);
    j["s_lo"] = static_cast<long long>(r.raw.s_lo);
    j["s_hi"] = static_cast<long long>(r.raw.s_hi);
    if (r.h0) {
      j["h0"] = static_cast<long long>(r.h0->value);
      j["exact"] = r.h0->exact;
    }
    nlohmann::json feas = nlohmann::json::array();
    for (const Integer& s : r.feasible())
      feas.push_back(static_cast<long long>(s));
    j["feasible"] = std::move(feas);
    arr.push_back(std::move(j));
  }
  return arr;
}

namespace detail {

/// Cell grid in the paper's orientation: one column per k, candidate
/// values descending down the rows, blank where a value was pruned away.
/// Rows are aligned at the bottom on each column's feasible_lo.
inline std::vector<std::vector<std::string>> table_grid(
    const std::vector<PrunedRow>& rows) {
  std::size_t height = 1;
  for (const PrunedRow& r : rows) {
    if (!r.feasible_empty()) {
      const Integer w = r.feasible_hi - r.feasible_lo + 1;
      height = std::max(height, static_cast<std::size_t>(w));
    }
  }
  std::vector<std::vector<std::string>> grid(
      height, std::vector<std::string>(rows.size()));
  for (std::size_t c = 0; c < rows.size(); ++c) {
    const PrunedRow& r = rows[c];
    if (r.feasible_empty())
      continue;
    for (std::size_t i = 0; i < height; ++i) {
      const Integer v = r.feasible_lo + Integer(height - 1 - i);
      if (v <= r.feasible_hi)
        grid[i][c] = v.str();
    }
  }
  return grid;
}

inline std::string column_label(const PrunedRow& r) {
  std::string label = r.k.str();
  if (r.h0 && !r.h0->exact)
    label += '*';  // h0 model is only a lower bound at this k
  return label;
}

}  // namespace detail

inline std::string render_plain(const std::vector<PrunedRow>& rows) {
  const auto grid = detail::table_grid(rows);
  std::vector<std::size_t> widths(rows.size());
  for (std::size_t c = 0; c < rows.size(); ++c) {
    widths[c] = detail::column_label(rows[c]).size();
    for (const auto& line : grid)
      widths[c] = std::max(widths[c], line[c].size());
  }
  std::ostringstream out;
  const auto emit = [&](const std::string& head,
                        const std::vector<std::string>& cells) {
    out << head;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      out << "  ";
      out << std::string(widths[c] - cells[c].size(), ' ') << cells[c];
    }
    out << '\n';
  };
  std::vector<std::string> headers;
  for (const PrunedRow& r : rows)
    headers.push_back(detail::column_label(r));
  emit("k       ", headers);
  for (std::size_t i = 0; i < grid.size(); ++i)
    emit(i == 0 ? "s(kL,x) " : "        ", grid[i]);
  return out.str();
}

inline std::string render_latex(const std::vector<PrunedRow>& rows) {
  const auto grid = detail::table_grid(rows);
  std::ostringstream out;
  out << "\\begin{tabular}{c|" << std::string(rows.size(), 'r') << "}\n";
  out << "\\hline\n";
  out << "$k$";
  for (const PrunedRow& r : rows)
    out << " & " << detail::column_label(r);
  out << " \\\\ \\hline\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    out << (i == 0 ? "$s(kL,x)$" : "");
    for (const std::string& cell : grid[i])
      out << " & " << cell;
    out << " \\\\\n";
  }
  out << "\\hline\n\\end{tabular}\n";
  return out.str();
}

inline std::string render_rows(const std::vector<PrunedRow>& rows,
                               OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::Plain:
      return render_plain(rows);
    case OutputFormat::Csv:
      return render_csv(rows);
    case OutputFormat::Json:
      return rows_to_json(rows).dump(2) + "\n";
    case OutputFormat::Latex:
      return render_latex(rows);
  }
  throw std::logic_error("unreachable");
}

}  // namespace jets
