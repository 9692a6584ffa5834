// autbound: command-line front end.
//
// Exit codes: 0 success, 1 table check failure, 2 usage error,
// 3 internal invariant violation.

#include "autbound/bounds.hpp"
#include "autbound/discriminant.hpp"
#include "autbound/factorization.hpp"
#include "autbound/render.hpp"
#include "autbound/strata.hpp"
#include "autbound/sweep.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

using namespace autbound;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInvariant = 3;

IntRange parse_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(s, &pos);
    } catch (const std::exception&) {
      throw DomainError("malformed range '" + text + "'");
    }
    if (pos != s.size()) throw DomainError("malformed range '" + text + "'");
    return v;
  };
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    const int v = to_int(text);
    return {v, v};
  }
  return {to_int(text.substr(0, colon)), to_int(text.substr(colon + 1))};
}

int single_degree(const Multidegree& md, const std::string& what) {
  if (md.k() != 1) throw DomainError(what + " takes a single degree, got " + md.to_string());
  return md.front();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact divisibility bounds for automorphism groups of smooth hypersurfaces and complete "
               "intersections in complex projective space"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  bool factorize = false;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv", "latex"}))
      ->capture_default_str();
  app.add_flag("--factorize", factorize, "Show prime factorizations");

  // bound
  auto* bound_cmd = app.add_subcommand("bound", "Compute a GL, PGL or deck-transformation bound");
  std::string bound_kind;
  std::string bound_degrees;
  int bound_n = 0;
  bound_cmd->add_option("kind", bound_kind, "gl | pgl | deck")->required()->check(CLI::IsMember({"gl", "pgl", "deck"}));
  bound_cmd->add_option("-d,--degrees", bound_degrees, "Degree d, or a multidegree d1,...,dk for gl")->required();
  bound_cmd->add_option("-n", bound_n, "Dimension of the ambient projective space")->required();

  // table
  auto* table_cmd = app.add_subcommand("table", "Tabulate the PGL bound (rows d, columns n)");
  std::string n_range_text = "2:4";
  std::string d_range_text = "3:10";
  bool check = false;
  table_cmd->add_option("--n-range", n_range_text, "n range, a:b or a")->capture_default_str();
  table_cmd->add_option("--d-range", d_range_text, "d range, a:b or a")->capture_default_str();
  table_cmd->add_flag("--check", check, "Compare against the published reference values");

  // ndn
  auto* ndn_cmd = app.add_subcommand("ndn", "Intersection number N(d, n)");
  std::string ndn_degrees;
  int ndn_n = 0;
  std::string method = "recursion";
  ndn_cmd->add_option("-d,--degrees", ndn_degrees, "Multidegree d1,...,dk")->required();
  ndn_cmd->add_option("-n", ndn_n, "Dimension n")->required();
  ndn_cmd->add_option("--method", method, "recursion | closed | oracle | all")
      ->check(CLI::IsMember({"recursion", "closed", "oracle", "all"}))
      ->capture_default_str();

  // mult
  auto* mult_cmd = app.add_subcommand("mult", "Multipliers m_i(d, n)");
  std::string mult_degrees;
  int mult_n = 0;
  std::optional<int> mult_i;
  mult_cmd->add_option("-d,--degrees", mult_degrees, "Multidegree d1,...,dk")->required();
  mult_cmd->add_option("-n", mult_n, "Dimension n")->required();
  mult_cmd->add_option("-i", mult_i, "Index i in 1..n+1 (all when omitted)");

  // stratum
  auto* stratum_cmd = app.add_subcommand("stratum", "Degree of the stratum singular along CP^m");
  int stratum_d = 0;
  int stratum_n = 0;
  std::optional<int> stratum_m;
  stratum_cmd->add_option("-d", stratum_d, "Degree d")->required();
  stratum_cmd->add_option("-n", stratum_n, "Dimension n")->required();
  stratum_cmd->add_option("-m", stratum_m, "Dimension m of the linear subspace (the full discriminant when omitted)");

  // factor
  auto* factor_cmd = app.add_subcommand("factor", "Prime factorization of an integer >= 2");
  std::string factor_value;
  factor_cmd->add_option("value", factor_value, "Decimal integer")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    const OutputFormat format = parse_format(format_name);

    if (bound_cmd->parsed()) {
      const Multidegree md = Multidegree::parse(bound_degrees);
      BoundReport report;
      if (bound_kind == "gl") {
        report = md.k() == 1 ? gl_bound_hypersurface(md.front(), bound_n) : gl_bound_general(md, bound_n);
      } else if (bound_kind == "pgl") {
        report = pgl_bound(single_degree(md, "pgl"), bound_n);
      } else {
        report = deck_bound(single_degree(md, "deck"), bound_n);
      }
      std::cout << render_bound(report, format, factorize);
      return 0;
    }

    if (table_cmd->parsed()) {
      const IntRange n = parse_range(n_range_text);
      const IntRange d = parse_range(d_range_text);
      if (!n.empty() && n.first < 1) throw DomainError("table: n must be >= 1");
      if (!d.empty() && d.first < 3) throw DomainError("table: d must be >= 3");
      const std::vector<CellCheck> cells =
          (n.empty() || d.empty()) ? std::vector<CellCheck>{} : check_table(n, d, Execution::Parallel);
      std::cout << render_table(cells, n, d, format, check);
      if (check) {
        bool failed = false;
        for (const auto& c : cells) {
          if (c.status == CellStatus::Fail) {
            std::cerr << "mismatch at n=" << c.n << " d=" << c.d << ": computed "
                      << c.computed.factorization.to_string(FactorStyle::Compact) << ", reference "
                      << c.reference->factorization.to_string(FactorStyle::Compact) << "\n";
            failed = true;
          }
        }
        if (failed) return kExitCheckFailed;
      }
      return 0;
    }

    if (ndn_cmd->parsed()) {
      const Multidegree md = Multidegree::parse(ndn_degrees);
      NamedValues out{"N", ndn_n, {md.degrees().begin(), md.degrees().end()}, {}};
      if (method == "recursion" || method == "all") out.values.emplace_back("recursion", n_value(md, ndn_n));
      if (method == "closed" || method == "all") out.values.emplace_back("closed", n_value_closed(md, ndn_n));
      if (method == "oracle" || method == "all") {
        out.values.emplace_back("oracle", n_value_staircase_oracle(md, ndn_n));
      }
      for (const auto& [name, value] : out.values) {
        if (value != out.values.front().second) {
          throw InvariantViolation("N methods disagree for d=(" + md.to_string() + "), n=" + std::to_string(ndn_n));
        }
      }
      std::cout << render_values(out, format);
      return 0;
    }

    if (mult_cmd->parsed()) {
      const Multidegree md = Multidegree::parse(mult_degrees);
      NamedValues out{"MULTIPLIER", mult_n, {md.degrees().begin(), md.degrees().end()}, {}};
      if (mult_i) {
        out.values.emplace_back("m_" + std::to_string(*mult_i), multiplier(md, mult_n, *mult_i));
      } else {
        const auto all = multipliers(md, mult_n);
        for (std::size_t i = 0; i < all.size(); ++i) out.values.emplace_back("m_" + std::to_string(i + 1), all[i]);
      }
      std::cout << render_values(out, format);
      return 0;
    }

    if (stratum_cmd->parsed()) {
      const int m = stratum_m.value_or(stratum_n);
      NamedValues out{"STRATUM", stratum_n, {stratum_d}, {}};
      out.values.emplace_back(stratum_m ? "deg_V_m" + std::to_string(m) : std::string("deg_Sigma"),
                              stratum_m ? stratum_degree(stratum_d, stratum_n, m) : sigma_degree(stratum_d, stratum_n));
      std::cout << render_values(out, format);
      return 0;
    }

    if (factor_cmd->parsed()) {
      const Integer v = parse_integer(factor_value);
      std::cout << render_factorization(v, autbound::factorize(v), format);
      return 0;
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return kExitInvariant;
  }
  return kExitUsage;
}
