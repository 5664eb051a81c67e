#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "uaw/coeff_matrix.hpp"
#include "uaw/morphisms.hpp"
#include "uaw/spec_io.hpp"
#include "uaw/verify.hpp"

using json = nlohmann::json;
using namespace uaw;

namespace {

// exit codes: 0 pass, 1 verification failure, 2 usage/parse error, 3 fuel
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFuel = 3;

const AlgebraSpec& algebra_by_name(const std::string& name) {
  if (name == "delta") return delta_q();
  if (name == "hhat") return hhat_q();
  throw CLI::ValidationError("--algebra must be delta or hhat");
}

json poly_to_json(const NCPoly& p) {
  json terms = json::array();
  for (const auto& [w, c] : p.terms()) {
    json letters = json::array();
    for (GenId g : w.letters) letters.push_back(p.alphabet()->name(g));
    terms.push_back({{"word", letters}, {"coeff", c.str()}});
  }
  return terms;
}

json report_to_json(const Report& r) {
  json items = json::array();
  for (const auto& i : r.items)
    items.push_back({{"item", i.item}, {"pass", i.pass}, {"residual", i.residual}});
  return {{"name", r.name}, {"pass", r.all_pass()}, {"items", items}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact rewriting engine for the universal Askey-Wilson algebra "
               "and the universal DAHA of type (C1v, C1)"};
  app.require_subcommand(1);

  std::string algebra = "delta";
  std::string expr;
  std::string format = "text";
  std::string gen = "rho";
  std::string suite = "all";
  std::string out_file;
  long fuel = kDefaultFuel;
  int len = 2;
  bool count_only = false;
  bool cumulative = false;
  bool qinv = false;

  auto add_common = [&](CLI::App* cmd, bool with_expr) {
    cmd->add_option("--algebra,-a", algebra, "delta or hhat")
        ->check(CLI::IsMember({"delta", "hhat"}));
    cmd->add_option("--format,-f", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--fuel", fuel, "rewrite step budget");
    if (with_expr) cmd->add_option("expr", expr, "expression")->required();
  };

  CLI::App* normalize_cmd =
      app.add_subcommand("normalize", "reduce an expression to normal form");
  add_common(normalize_cmd, true);

  CLI::App* confluence_cmd =
      app.add_subcommand("confluence", "resolve every overlap ambiguity");
  add_common(confluence_cmd, false);

  CLI::App* psi_cmd =
      app.add_subcommand("psi", "apply psi to a delta-q expression");
  psi_cmd->add_option("--format,-f", format)->check(CLI::IsMember({"text", "json"}));
  psi_cmd->add_option("--fuel", fuel);
  psi_cmd->add_option("expr", expr, "delta-q expression")->required();

  CLI::App* braid_cmd =
      app.add_subcommand("braid", "apply a braid generator to an expression");
  braid_cmd->add_option("--gen,-g", gen, "rho, sigma or tau")
      ->check(CLI::IsMember({"rho", "sigma", "tau"}));
  add_common(braid_cmd, true);

  CLI::App* coeff_cmd = app.add_subcommand(
      "coeff-matrix", "coefficient matrix of an hhat-q expression");
  coeff_cmd->add_option("--format,-f", format)->check(CLI::IsMember({"text", "json"}));
  coeff_cmd->add_option("--fuel", fuel);
  coeff_cmd->add_option("expr", expr, "hhat-q expression")->required();

  CLI::App* basis_cmd =
      app.add_subcommand("basis", "enumerate irreducible basis words");
  add_common(basis_cmd, false);
  basis_cmd->add_option("--len,-l", len, "word length")->required();
  basis_cmd->add_flag("--count", count_only, "print only the count");
  basis_cmd->add_flag("--max", cumulative, "all words of length <= len");

  CLI::App* verify_cmd = app.add_subcommand("verify", "run verification suites");
  verify_cmd->add_option("suite", suite,
                         "all, psi, confluence, squares, braid, dagger-xi, "
                         "matrices, centralizer, center, identities, "
                         "injectivity, basis-counts");
  verify_cmd->add_option("--format,-f", format)
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* export_cmd =
      app.add_subcommand("export-spec", "emit the algebra-spec rule file");
  export_cmd->add_option("--algebra,-a", algebra)
      ->check(CLI::IsMember({"delta", "hhat"}));
  export_cmd->add_flag("--qinv", qinv, "emit the q -> 1/q sibling");
  export_cmd->add_option("--out,-o", out_file, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (normalize_cmd->parsed()) {
      const AlgebraSpec& spec = algebra_by_name(algebra);
      NCPoly nf = spec.normalize(spec.parse(expr), fuel);
      if (format == "json")
        std::cout << json{{"algebra", spec.display_name},
                          {"input", expr},
                          {"normal_form", nf.str()},
                          {"terms", poly_to_json(nf)}}
                         .dump(2)
                  << "\n";
      else
        std::cout << nf.str() << "\n";
      return 0;
    }

    if (confluence_cmd->parsed()) {
      const AlgebraSpec& spec = algebra_by_name(algebra);
      auto report = spec.system.check_confluence(fuel);
      if (format == "json") {
        json entries = json::array();
        for (const auto& e : report.entries) {
          std::string w;
          for (size_t i = 0; i < e.ambiguity.size(); ++i)
            w += (i ? "*" : "") + spec.alphabet->name(e.ambiguity[i]);
          entries.push_back({{"ambiguity", w},
                             {"resolved", e.resolved},
                             {"normal_form", e.left_first.str()}});
        }
        std::cout << json{{"algebra", spec.display_name},
                          {"all_resolved", report.all_resolved()},
                          {"entries", entries}}
                         .dump(2)
                  << "\n";
      } else {
        for (const auto& e : report.entries) {
          std::string w;
          for (size_t i = 0; i < e.ambiguity.size(); ++i)
            w += (i ? "*" : "") + spec.alphabet->name(e.ambiguity[i]);
          std::cout << (e.resolved ? "resolved  " : "UNRESOLVED") << "  " << w
                    << "  ->  " << e.left_first.str() << "\n";
        }
        std::cout << (report.all_resolved() ? "all overlaps resolve"
                                            : "confluence FAILS")
                  << "\n";
      }
      return report.all_resolved() ? 0 : kExitVerifyFail;
    }

    if (psi_cmd->parsed()) {
      NCPoly image = apply(psi(), delta_q().parse(expr), fuel);
      if (format == "json")
        std::cout << json{{"input", expr},
                          {"image", image.str()},
                          {"terms", poly_to_json(image)}}
                         .dump(2)
                  << "\n";
      else
        std::cout << image.str() << "\n";
      return 0;
    }

    if (braid_cmd->parsed()) {
      const AlgebraSpec& spec = algebra_by_name(algebra);
      BraidGen bg = gen == "rho"   ? BraidGen::Rho
                    : gen == "sigma" ? BraidGen::Sigma
                                     : BraidGen::Tau;
      NCPoly image = apply(braid(bg, spec), spec.parse(expr), fuel);
      if (format == "json")
        std::cout << json{{"generator", gen},
                          {"algebra", spec.display_name},
                          {"input", expr},
                          {"image", image.str()}}
                         .dump(2)
                  << "\n";
      else
        std::cout << image.str() << "\n";
      return 0;
    }

    if (coeff_cmd->parsed()) {
      const AlgebraSpec& h = hhat_q();
      CoeffMatrix cm = coefficient_matrix(h.parse(expr), h, fuel);
      if (format == "json") {
        json entries = json::array();
        for (const auto& [k, e] : cm.entries())
          entries.push_back({{"i", k.first}, {"j", k.second}, {"entry", e.str()}});
        std::cout << json{{"input", expr}, {"entries", entries}}.dump(2) << "\n";
      } else {
        std::cout << cm.table();
      }
      return 0;
    }

    if (basis_cmd->parsed()) {
      const AlgebraSpec& spec = algebra_by_name(algebra);
      auto words = cumulative ? enumerate_basis(spec, len)
                               : enumerate_basis_exact(spec, len);
      if (format == "json") {
        json names = json::array();
        if (!count_only)
          for (const auto& w : words) {
            std::string s;
            for (size_t i = 0; i < w.size(); ++i)
              s += (i ? "*" : "") + spec.alphabet->name(w[i]);
            names.push_back(s.empty() ? "1" : s);
          }
        json out = {{"algebra", spec.display_name},
                    {"len", len},
                    {"cumulative", cumulative},
                    {"count", words.size()}};
        if (!count_only) out["words"] = names;
        std::cout << out.dump(2) << "\n";
      } else if (count_only) {
        std::cout << words.size() << "\n";
      } else {
        for (const auto& w : words) {
          std::string s;
          for (size_t i = 0; i < w.size(); ++i)
            s += (i ? "*" : "") + spec.alphabet->name(w[i]);
          std::cout << (s.empty() ? "1" : s) << "\n";
        }
      }
      return 0;
    }

    if (verify_cmd->parsed()) {
      if (suite == "all" && format == "text") {
        bool all = true;
        int n = 0;
        for (const auto& r : run_acceptance()) {
          ++n;
          bool pass = r.pass();
          all = all && pass;
          char buf[64];
          std::snprintf(buf, sizeof buf, "(%.2fs < %.0fs)", r.seconds, r.budget);
          std::cout << (pass ? "PASS" : "FAIL") << "  " << n << ". "
                    << r.report.name << "  " << buf << "\n";
          if (!r.report.all_pass())
            for (const auto& i : r.report.items)
              if (!i.pass)
                std::cout << "      FAIL " << i.item << "  residual: "
                          << i.residual << "\n";
        }
        return all ? 0 : kExitVerifyFail;
      }
      auto reports = run_suite(suite);
      bool all = true;
      if (format == "json") {
        json out = json::array();
        for (const auto& r : reports) {
          out.push_back(report_to_json(r));
          all = all && r.all_pass();
        }
        std::cout << out.dump(2) << "\n";
      } else {
        for (const auto& r : reports) {
          std::cout << r.summary();
          all = all && r.all_pass();
        }
      }
      return all ? 0 : kExitVerifyFail;
    }

    if (export_cmd->parsed()) {
      const AlgebraSpec& base = algebra_by_name(algebra);
      std::string text =
          qinv ? export_spec(twisted_spec(base)) : export_spec(base);
      if (out_file.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_file);
        if (!out) throw std::runtime_error("cannot open " + out_file);
        out << text;
      }
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnknownName& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NonTermination& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFuel;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
