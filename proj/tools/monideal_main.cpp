#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "monideal/arithmetic.hpp"
#include "monideal/decomposition.hpp"
#include "monideal/io.hpp"
#include "monideal/newton.hpp"
#include "monideal/repro.hpp"
#include "monideal/splitting.hpp"

namespace {

using namespace monideal;

struct CommonOpts {
  std::string ideal_spec;
  std::string format = "text";
  std::string field_spec = "Q";
  bool pretty = false;
};

// --ideal accepts a file path, '-' for stdin, or inline content (sniffed by
// a '{' prefix or a 'vars:' header).
MonomialIdeal load_ideal(const std::string& spec) {
  if (spec.empty()) throw std::runtime_error("--ideal is required");
  size_t pos = spec.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos) {
    if (spec[pos] == '{') return parse_ideal_json(spec);
    if (spec.compare(pos, 5, "vars:") == 0) return parse_ideal_text(spec);
  }
  return read_ideal(spec);
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool needs_ideal = true) {
  auto* ideal = cmd->add_option("--ideal", opts.ideal_spec,
                                "ideal: file path, '-' for stdin, or inline text/JSON");
  if (needs_ideal) ideal->required();
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--field", opts.field_spec, "coefficient field: Q, Fp or Fp:<prime>")
      ->capture_default_str();
  cmd->add_flag("--pretty", opts.pretty, "indent JSON output");
}

void print_ideal(const MonomialIdeal& I, const CommonOpts& opts) {
  if (opts.format == "json")
    std::cout << format_ideal_json(I, opts.pretty) << "\n";
  else
    std::cout << format_ideal_text(I);
}

int emit_report(const ReproReport& report) {
  std::cout << format_report(report);
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with monomial ideals: powers, symbolic powers,\n"
               "integral closures, Betti tables, regularity and splitting maps"};
  app.require_subcommand(1);

  CommonOpts opts;
  int s = 1;
  int e = 1;
  std::string monomial_text;
  std::string map_spec;
  std::vector<std::string> table_row_specs;
  bool table_direct = false;

  auto* cmd_power = app.add_subcommand("power", "ordinary power I^s");
  add_common(cmd_power, opts);
  cmd_power->add_option("--s", s, "exponent")->required()->check(CLI::PositiveNumber);

  auto* cmd_frob = app.add_subcommand("frobenius", "Frobenius power I^[s]");
  add_common(cmd_frob, opts);
  cmd_frob->add_option("--s", s, "exponent")->required()->check(CLI::PositiveNumber);

  auto* cmd_symb = app.add_subcommand("symbolic", "symbolic power I^(s) (squarefree I)");
  add_common(cmd_symb, opts);
  cmd_symb->add_option("--s", s, "exponent")->required()->check(CLI::PositiveNumber);

  auto* cmd_clo = app.add_subcommand("closure", "integral closure of I^s");
  add_common(cmd_clo, opts);
  cmd_clo->add_option("--s", s, "exponent")->required()->check(CLI::PositiveNumber);

  auto* cmd_in = app.add_subcommand(
      "in-closure", "test whether a monomial is integral over I^s, with certificate");
  add_common(cmd_in, opts);
  cmd_in->add_option("--s", s, "exponent")->required()->check(CLI::PositiveNumber);
  cmd_in->add_option("--monomial", monomial_text, "monomial, e.g. 'x1^2*x3'")->required();

  auto* cmd_primes = app.add_subcommand("minimal-primes", "minimal primes (squarefree I)");
  add_common(cmd_primes, opts);

  auto* cmd_betti = app.add_subcommand("betti", "multigraded Betti numbers and table");
  add_common(cmd_betti, opts);

  auto* cmd_reg = app.add_subcommand("reg", "Castelnuovo-Mumford regularity");
  add_common(cmd_reg, opts);

  auto* cmd_pd = app.add_subcommand("projdim", "projective dimension");
  add_common(cmd_pd, opts);

  auto* cmd_split = app.add_subcommand("split", "image of the ideal under a splitting map");
  add_common(cmd_split, opts);
  cmd_split
      ->add_option("--map", map_spec,
                   "splitting as JSON, e.g. '{\"split\": {\"x1\": 2}, \"default\": 1}'")
      ->required();

  auto* cmd_example =
      app.add_subcommand("example-ideal", "print the built-in six-variable example ideal");
  add_common(cmd_example, opts, /*needs_ideal=*/false);

  auto* cmd_repro = app.add_subcommand("repro", "recompute the embedded reference results");
  cmd_repro->require_subcommand(1);
  auto* repro_sturmfels = cmd_repro->add_subcommand(
      "sturmfels", "Betti tables, regularities and generator lists at s = 2");
  add_common(repro_sturmfels, opts, /*needs_ideal=*/false);
  auto* repro_thm = cmd_repro->add_subcommand(
      "theorem1", "split-ideal regularity formulas at uniform arity e");
  add_common(repro_thm, opts, /*needs_ideal=*/false);
  repro_thm->add_option("--e", e, "uniform splitting arity")
      ->required()
      ->check(CLI::PositiveNumber);
  auto* repro_table =
      cmd_repro->add_subcommand("table", "the 20-row split-regularity table");
  add_common(repro_table, opts, /*needs_ideal=*/false);
  repro_table->add_option("--rows", table_row_specs,
                          "1-based row numbers, or 'all' (the default)");
  repro_table->add_flag("--direct", table_direct,
                        "also recompute rows with at most 12 target variables directly");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? 0 : 2;  // 2 = usage error; 0 = --help and friends
  }

  try {
    const Field field = Field::parse(opts.field_spec);

    if (*cmd_power) {
      print_ideal(power(load_ideal(opts.ideal_spec), s), opts);
    } else if (*cmd_frob) {
      print_ideal(frobenius_power(load_ideal(opts.ideal_spec), s), opts);
    } else if (*cmd_symb) {
      print_ideal(symbolic_power(load_ideal(opts.ideal_spec), s), opts);
    } else if (*cmd_clo) {
      print_ideal(integral_closure_of_power(load_ideal(opts.ideal_spec), s), opts);
    } else if (*cmd_in) {
      const MonomialIdeal I = load_ideal(opts.ideal_spec);
      const Monomial m = parse_monomial(I.ring(), monomial_text);
      const MonomialIdeal Is = power(I, s);
      const NewtonMembership res = in_newton_polyhedron(m, Is);
      if (opts.format == "json") {
        std::string out = "{\"inside\": ";
        out += res.inside ? "true" : "false";
        if (res.certificate) {
          out += ", \"certificate\": [";
          bool first = true;
          for (const auto& term : res.certificate->terms) {
            if (!first) out += ", ";
            first = false;
            out += "{\"generator\": " + std::to_string(term.generator) +
                   ", \"monomial\": \"" +
                   format_monomial(Is.generators()[static_cast<size_t>(term.generator)]) +
                   "\", \"weight\": \"" + term.weight.to_string() + "\"}";
          }
          out += "]";
        }
        out += "}";
        std::cout << out << "\n";
      } else {
        std::cout << "inside: " << (res.inside ? "true" : "false") << "\n";
        if (res.certificate) {
          std::cout << "certificate:";
          for (const auto& term : res.certificate->terms)
            std::cout << " " << term.weight.to_string() << " * ("
                      << format_monomial(
                             Is.generators()[static_cast<size_t>(term.generator)])
                      << ")";
          std::cout << "\n";
        }
      }
    } else if (*cmd_primes) {
      const MonomialIdeal I = load_ideal(opts.ideal_spec);
      const auto primes = minimal_primes(I);
      if (opts.format == "json") {
        std::string out = "{\"primes\": [";
        for (size_t k = 0; k < primes.size(); ++k) {
          if (k) out += ", ";
          out += "[";
          for (size_t j = 0; j < primes[k].variables.size(); ++j) {
            if (j) out += ", ";
            out += "\"" + I.ring().var(primes[k].variables[j]) + "\"";
          }
          out += "]";
        }
        out += "]}";
        std::cout << out << "\n";
      } else {
        for (const auto& p : primes) {
          std::string line;
          for (int j : p.variables) {
            if (!line.empty()) line += ", ";
            line += I.ring().var(j);
          }
          std::cout << "(" << line << ")\n";
        }
      }
    } else if (*cmd_betti) {
      const BettiData data = betti_numbers(load_ideal(opts.ideal_spec), field);
      if (opts.format == "json")
        std::cout << format_betti_data_json(data, opts.pretty) << "\n";
      else
        std::cout << format_betti_table_text(betti_table(data));
    } else if (*cmd_reg) {
      std::cout << regularity(load_ideal(opts.ideal_spec), field) << "\n";
    } else if (*cmd_pd) {
      std::cout << projdim(load_ideal(opts.ideal_spec), field) << "\n";
    } else if (*cmd_split) {
      const MonomialIdeal I = load_ideal(opts.ideal_spec);
      const SplittingMap sigma = parse_splitting_json(I.ring(), map_spec);
      print_ideal(sigma.apply(I), opts);
    } else if (*cmd_example) {
      print_ideal(sturmfels_ideal(), opts);
    } else if (*repro_sturmfels) {
      return emit_report(run_sturmfels(field));
    } else if (*repro_thm) {
      return emit_report(run_theorem1(e, field));
    } else if (*repro_table) {
      std::vector<int> rows;
      if (!(table_row_specs.size() == 1 && table_row_specs[0] == "all")) {
        for (const auto& spec : table_row_specs) {
          size_t used = 0;
          int value = 0;
          try {
            value = std::stoi(spec, &used);
          } catch (const std::exception&) {
            throw std::invalid_argument("--rows takes row numbers or 'all'");
          }
          if (used != spec.size())
            throw std::invalid_argument("--rows takes row numbers or 'all'");
          rows.push_back(value);
        }
      }
      return emit_report(run_table(rows, table_direct, field));
    }
    return 0;
  } catch (const ParseError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const std::domain_error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
}
