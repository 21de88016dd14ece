#include <iostream>
#include <new>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gradeforge/commands.hpp"
#include "gradeforge/error.hpp"

using namespace gradeforge;
using nlohmann::json;

int main(int argc, char** argv) {
  CLI::App app{"gradeforge: Hadamard products, closure and obstruction reports for power series"};
  app.require_subcommand(0, 1);
  app.fallthrough();

  bool as_json = false;
  bool as_table = false;
  bool show_config = false;
  auto* json_flag = app.add_flag("--json", as_json, "Machine-readable output");
  app.add_flag("--table", as_table, "Human-readable output (default)")->excludes(json_flag);
  app.add_flag("--show-config", show_config, "Print the effective configuration and exit");

  std::optional<std::size_t> terms;
  std::string desc_a, desc_b;
  std::vector<std::string> diag_descs;
  bool emit_recurrence = false;
  std::uint64_t p = 2, q = 0;
  unsigned r = 1;
  bool dot = false;
  std::optional<std::size_t> diag_order;
  double z = 1;
  std::optional<std::size_t> optics_order, plates, cutoff;

  auto* expand = app.add_subcommand("expand", "First N exact coefficients");
  expand->add_option("descriptor", desc_a, "Builtin name, inline JSON or JSON file")->required();
  expand->add_option("--terms", terms, "Number of coefficients");

  auto* hadamard = app.add_subcommand("hadamard", "Termwise product of two series");
  hadamard->add_option("a", desc_a)->required();
  hadamard->add_option("b", desc_b)->required();
  hadamard->add_option("--terms", terms);
  hadamard->add_flag("--emit-recurrence", emit_recurrence, "Also derive the product's recurrence");

  auto* obstruct = app.add_subcommand("obstruct", "Prime support, radius and sign periodicity evidence");
  obstruct->add_option("descriptor", desc_a)->required();
  obstruct->add_option("--terms", terms);

  auto* modp = app.add_subcommand("modp", "Residues mod p^r and their q-kernel automaton");
  modp->add_option("descriptor", desc_a)->required();
  modp->add_option("--p", p, "Prime")->required();
  modp->add_option("--r", r, "Exponent")->capture_default_str();
  modp->add_option("--q", q, "Kernel base (defaults to p)");
  modp->add_flag("--dot", dot, "Print the automaton in Graphviz format");

  auto* diagonal = app.add_subcommand("diagonal", "Rational function whose diagonal is the (product) series");
  diagonal->add_option("descriptors", diag_descs)->required();
  diagonal->add_option("--order", diag_order);

  auto* euler = app.add_subcommand("euler", "Euler integral with the branch-formula cross-check");
  euler->add_option("--z", z)->capture_default_str();

  auto* optics = app.add_subcommand("optics", "Plate identity and odd zeta checks");
  optics->add_option("--order", optics_order);
  optics->add_option("--plates", plates);
  optics->add_option("--cutoff", cutoff);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Config cfg = load_config();
    if (optics_order) cfg.optics_order = *optics_order;
    if (plates) cfg.optics_plates = *plates;
    if (cutoff) cfg.zeta_cutoff = *cutoff;
    if (show_config) {
      std::cout << (as_json ? to_json(cfg).dump(2) + "\n" : render_table(to_json(cfg)));
      return 0;
    }
    const std::size_t n = terms.value_or(cfg.terms);

    json report;
    if (expand->parsed()) {
      report = cmd_expand(load_descriptor(desc_a), n);
    } else if (hadamard->parsed()) {
      report = cmd_hadamard(load_descriptor(desc_a), load_descriptor(desc_b), n, emit_recurrence);
    } else if (obstruct->parsed()) {
      report = cmd_obstruct(load_descriptor(desc_a), n, cfg);
    } else if (modp->parsed()) {
      report = cmd_modp(load_descriptor(desc_a), p, r, q, cfg, dot);
      if (dot && !as_json) {
        std::cout << report["dot"].get<std::string>();
        return 0;
      }
    } else if (diagonal->parsed()) {
      std::vector<SeriesDescriptor> ds;
      for (const auto& d : diag_descs) ds.push_back(load_descriptor(d));
      report = cmd_diagonal(ds, diag_order.value_or(cfg.diagonal_order), cfg);
    } else if (euler->parsed()) {
      report = cmd_euler(z, cfg);
    } else if (optics->parsed()) {
      report = cmd_optics(cfg);
    } else {
      std::cout << app.help();
      return 2;
    }
    std::cout << (as_json ? report.dump(2) + "\n" : render_table(report));
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.family());
  } catch (const json::exception& e) {
    std::cerr << "error: SchemaViolation: " << e.what() << "\n";
    return static_cast<int>(ErrorFamily::schema);
  } catch (const std::bad_alloc&) {
    std::cerr << "error: out of memory\n";
    return static_cast<int>(ErrorFamily::budget);
  }
}
