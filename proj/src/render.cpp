#include "autbound/render.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace autbound {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json degrees_json(const std::vector<int>& degrees) {
  ordered_json out = ordered_json::array();
  for (int d : degrees) out.push_back(std::to_string(d));
  return out;
}

ordered_json factorization_json(const Factorization& f) {
  ordered_json out = ordered_json::array();
  for (const auto& [p, e] : f.factors()) out.push_back({to_string(p), std::to_string(e)});
  return out;
}

ordered_json report_json(const BoundReport& r) {
  ordered_json out;
  out["kind"] = to_string(r.kind);
  out["n"] = std::to_string(r.n);
  out["degrees"] = degrees_json(r.degrees);
  out["value"] = to_string(r.value);
  out["factorization"] = factorization_json(r.factorization);
  ordered_json factors = ordered_json::array();
  for (const auto& f : r.factors) factors.push_back(f.to_string());
  out["factors"] = std::move(factors);
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::string degrees_text(const std::vector<int>& degrees) {
  std::vector<std::string> parts;
  for (int d : degrees) parts.push_back(std::to_string(d));
  return join(parts, ",");
}

const char* status_name(CellStatus s) {
  switch (s) {
    case CellStatus::Pass: return "PASS";
    case CellStatus::Fail: return "FAIL";
    case CellStatus::NoReference: return "SKIP";
  }
  return "?";
}

std::string check_summary(const std::vector<CellCheck>& cells) {
  std::size_t pass = 0;
  std::size_t fail = 0;
  for (const auto& c : cells) {
    pass += c.status == CellStatus::Pass;
    fail += c.status == CellStatus::Fail;
  }
  return std::to_string(pass) + "/" + std::to_string(pass + fail) + " PASS";
}

const CellCheck* find_cell(const std::vector<CellCheck>& cells, int n, int d) {
  for (const auto& c : cells) {
    if (c.n == n && c.d == d) return &c;
  }
  return nullptr;
}

std::string table_text(const std::vector<CellCheck>& cells, IntRange n, IntRange d) {
  std::vector<std::vector<std::string>> grid;
  grid.push_back({"d\\n"});
  for (int ni = n.first; ni <= n.last; ++ni) grid[0].push_back(std::to_string(ni));
  for (int di = d.first; di <= d.last; ++di) {
    std::vector<std::string> row{std::to_string(di)};
    for (int ni = n.first; ni <= n.last; ++ni) {
      const CellCheck* c = find_cell(cells, ni, di);
      row.push_back(c ? c->computed.factorization.to_string(FactorStyle::Compact) : "");
    }
    grid.push_back(std::move(row));
  }
  // Column widths in code points; the middle dot is two bytes but one column.
  auto width = [](const std::string& s) {
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char ch) { return (ch & 0xC0) != 0x80; }));
  };
  std::vector<std::size_t> widths(grid[0].size(), 0);
  for (const auto& row : grid) {
    for (std::size_t j = 0; j < row.size(); ++j) widths[j] = std::max(widths[j], width(row[j]));
  }
  std::string out;
  for (const auto& row : grid) {
    std::string line;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) line += "  ";
      line += row[j];
      if (j + 1 < row.size()) line += std::string(widths[j] - width(row[j]), ' ');
    }
    out += line + "\n";
  }
  return out;
}

std::string table_latex(const std::vector<CellCheck>& cells, IntRange n, IntRange d) {
  std::string out = "\\begin{tabular}{|c|";
  for (std::size_t i = 0; i < n.size(); ++i) out += "c|";
  out += "}\n\\hline\n$d\\backslash n$";
  for (int ni = n.first; ni <= n.last; ++ni) out += " & " + std::to_string(ni);
  out += " \\\\\n\\hline\n";
  for (int di = d.first; di <= d.last; ++di) {
    out += std::to_string(di);
    for (int ni = n.first; ni <= n.last; ++ni) {
      const CellCheck* c = find_cell(cells, ni, di);
      out += " & ";
      if (c) out += "$" + c->computed.factorization.to_string(FactorStyle::Latex) + "$";
    }
    out += " \\\\\n\\hline\n";
  }
  return out + "\\end{tabular}\n";
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "latex") return OutputFormat::Latex;
  throw DomainError("unknown output format '" + name + "'");
}

std::string render_bound(const BoundReport& r, OutputFormat format, bool factorize) {
  switch (format) {
    case OutputFormat::Text:
      if (!factorize) return to_string(r.value) + "\n";
      return to_string(r.value) + " = " + r.factorization.to_string(FactorStyle::Text) + "\n";
    case OutputFormat::Json:
      return report_json(r).dump() + "\n";
    case OutputFormat::Csv: {
      std::vector<std::string> factors;
      for (const auto& f : r.factors) factors.push_back(f.to_string());
      return "kind,n,degrees,value,factorization,factors\n" + to_string(r.kind) + "," + std::to_string(r.n) + "," +
             csv_field(degrees_text(r.degrees)) + "," + to_string(r.value) + "," +
             r.factorization.to_string(FactorStyle::Compact) + "," + join(factors, ";") + "\n";
    }
    case OutputFormat::Latex:
      if (!factorize) return "$" + to_string(r.value) + "$\n";
      return "$" + to_string(r.value) + "=" + r.factorization.to_string(FactorStyle::Latex) + "$\n";
  }
  return {};
}

std::string render_table(const std::vector<CellCheck>& cells, IntRange n, IntRange d, OutputFormat format,
                         bool check) {
  std::string out;
  switch (format) {
    case OutputFormat::Text:
      if (cells.empty()) break;
      out = table_text(cells, n, d);
      if (check) {
        for (const auto& c : cells) {
          out += "n=" + std::to_string(c.n) + " d=" + std::to_string(c.d) + " " + status_name(c.status) + "\n";
        }
      }
      break;
    case OutputFormat::Json: {
      ordered_json doc;
      ordered_json rows = ordered_json::array();
      for (const auto& c : cells) {
        ordered_json row = report_json(c.computed);
        if (check) row["status"] = status_name(c.status);
        rows.push_back(std::move(row));
      }
      doc["cells"] = std::move(rows);
      if (check) doc["summary"] = check_summary(cells);
      return doc.dump() + "\n";
    }
    case OutputFormat::Csv:
      out = check ? "n,d,value,factorization,status\n" : "n,d,value,factorization\n";
      for (const auto& c : cells) {
        out += std::to_string(c.n) + "," + std::to_string(c.d) + "," + to_string(c.computed.value) + "," +
               c.computed.factorization.to_string(FactorStyle::Compact);
        if (check) out += std::string(",") + status_name(c.status);
        out += "\n";
      }
      return out;
    case OutputFormat::Latex:
      if (cells.empty()) break;
      out = table_latex(cells, n, d);
      if (check) {
        for (const auto& c : cells) {
          out += "% n=" + std::to_string(c.n) + " d=" + std::to_string(c.d) + " " + status_name(c.status) + "\n";
        }
      }
      break;
  }
  if (check) out += (format == OutputFormat::Latex ? "% " : "") + check_summary(cells) + "\n";
  return out;
}

std::string render_values(const NamedValues& v, OutputFormat format) {
  switch (format) {
    case OutputFormat::Text: {
      if (v.values.size() == 1) return to_string(v.values.front().second) + "\n";
      std::vector<std::string> parts;
      for (const auto& [name, value] : v.values) parts.push_back(name + "=" + to_string(value));
      return join(parts, " ") + "\n";
    }
    case OutputFormat::Json: {
      ordered_json doc;
      doc["kind"] = v.kind;
      doc["n"] = std::to_string(v.n);
      doc["degrees"] = degrees_json(v.degrees);
      ordered_json values;
      for (const auto& [name, value] : v.values) values[name] = to_string(value);
      doc["values"] = std::move(values);
      return doc.dump() + "\n";
    }
    case OutputFormat::Csv: {
      std::string out = "kind,n,degrees,name,value\n";
      for (const auto& [name, value] : v.values) {
        out += v.kind + "," + std::to_string(v.n) + "," + csv_field(degrees_text(v.degrees)) + "," + name + "," +
               to_string(value) + "\n";
      }
      return out;
    }
    case OutputFormat::Latex: {
      std::vector<std::string> parts;
      for (const auto& [name, value] : v.values) parts.push_back("\\mathrm{" + name + "}=" + to_string(value));
      return "$" + join(parts, ",\\ ") + "$\n";
    }
  }
  return {};
}

std::string render_factorization(const Integer& value, const Factorization& f, OutputFormat format) {
  switch (format) {
    case OutputFormat::Text:
      return to_string(value) + " = " + f.to_string(FactorStyle::Text) + "\n";
    case OutputFormat::Json: {
      ordered_json doc;
      doc["value"] = to_string(value);
      doc["factorization"] = factorization_json(f);
      return doc.dump() + "\n";
    }
    case OutputFormat::Csv:
      return "value,factorization\n" + to_string(value) + "," + f.to_string(FactorStyle::Compact) + "\n";
    case OutputFormat::Latex:
      return "$" + to_string(value) + "=" + f.to_string(FactorStyle::Latex) + "$\n";
  }
  return {};
}

}  // namespace autbound
