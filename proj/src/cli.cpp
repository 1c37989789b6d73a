#include "steiner/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "steiner/errors.hpp"
#include "steiner/feasibility.hpp"
#include "steiner/invariants.hpp"
#include "steiner/io.hpp"
#include "steiner/porism.hpp"
#include "steiner/symmetric.hpp"

namespace steiner {

using nlohmann::json;

Tolerance tolerance_from_env() {
  Tolerance tol;
  if (const char* env = std::getenv("STEINER_TOL")) {
    char* end = nullptr;
    const double value = std::strtod(env, &end);
    if (end != env && *end == '\0' && value > 0.0 && std::isfinite(value)) tol.relative = value;
  }
  return tol;
}

namespace {

struct GaugeArgs {
  int n = 0;
  double R = 0.0;
  double r = 0.0;
  double d = 0.0;
};

void add_gauge_options(CLI::App* cmd, GaugeArgs& args, bool d_required) {
  cmd->add_option("--n", args.n, "chain length")->required();
  cmd->add_option("--R", args.R, "outer parent radius")->required();
  cmd->add_option("--r", args.r, "inner parent radius")->required();
  auto* d = cmd->add_option("--d", args.d, "distance between parent centers");
  if (d_required) d->required();
}

Gauge checked_gauge(const GaugeArgs& args, Tolerance tol) {
  const Gauge g{args.n, args.R, args.r, args.d};
  const GaugeReport report = validate_gauge(g, tol);
  if (!report.valid) throw InvalidInput("gauge: " + report.message);
  return g;
}

json complex_json(int k, int m, std::complex<double> z) {
  return {{"k", k}, {"m", m}, {"re", z.real()}, {"im", z.imag()}};
}

json moments_json(const SteinerChain& chain, int max_k, bool with_complex) {
  const MomentSet set = moment_set(chain, max_k);
  json out;
  out["n"] = set.n;
  out["I"] = set.bending;
  if (with_complex) {
    json list = json::array();
    for (const auto& [idx, z] : set.complex) list.push_back(complex_json(idx.first, idx.second, z));
    out["J"] = std::move(list);
  }
  return out;
}

json feasibility_json(const FeasibilityReport& rep) {
  json out;
  out["radii"] = rep.radii;
  out["mode"] = std::string(to_string(rep.mode));
  out["actual_moments"] = {{"I1", rep.moments.I1}, {"I2", rep.moments.I2}, {"I3", rep.moments.I3}};
  if (rep.virtual_parents.roots)
    out["virtual_curvatures"] = {{"a_tilde", (*rep.virtual_parents.roots)[0]},
                                 {"A_tilde", (*rep.virtual_parents.roots)[1]}};
  else
    out["virtual_curvatures"] = nullptr;
  if (rep.virtual_parents.gauge) {
    const VirtualGauge& v = *rep.virtual_parents.gauge;
    out["virtual_gauge"] = {{"R", v.R}, {"r", v.r}, {"d", v.d}};
  } else {
    out["virtual_gauge"] = nullptr;
  }
  out["range_check"] = rep.range_check ? json(*rep.range_check) : json(nullptr);
  out["relation_residual"] = rep.relation_residual;
  out["relation_ok"] = rep.relation_ok;
  out["adjacency_check"] = rep.adjacency_check ? json(*rep.adjacency_check) : json(nullptr);
  out["verdict"] = rep.feasible ? "feasible" : "infeasible";
  if (!rep.feasible) out["reason"] = rep.reason;
  return out;
}

// Relative spread of every invariant column of a sweep.
bool sweep_is_invariant(int n, const std::vector<SweepSample>& rows, double tol) {
  auto spread_ok = [&](auto value_of) {
    double lo = value_of(rows.front()), hi = lo, scale = 1.0;
    for (const auto& row : rows) {
      const double v = value_of(row);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
      scale = std::max(scale, std::abs(v));
    }
    return hi - lo <= tol * scale;
  };
  for (int k = 1; k < n; ++k)
    if (!spread_ok([k](const SweepSample& s) { return s.bending[std::size_t(k - 1)]; })) return false;
  const std::size_t pairs = rows.front().complex.size();
  for (std::size_t i = 0; i < pairs; ++i) {
    if (!spread_ok([i](const SweepSample& s) { return s.complex[i].real(); })) return false;
    if (!spread_ok([i](const SweepSample& s) { return s.complex[i].imag(); })) return false;
  }
  return true;
}

std::optional<SymmetricKind> parse_kind(const std::string& s) {
  if (s == "axial-max") return SymmetricKind::AxialMax;
  if (s == "axial-min") return SymmetricKind::AxialMin;
  if (s == "axial") return SymmetricKind::AxialEven;
  if (s == "lateral") return SymmetricKind::Lateral;
  return std::nullopt;
}

json symmetric_checks(const Gauge& g) {
  json checks = json::object();
  if (g.n == 3) {
    const AxialTripleCheck c = axial_triples_n3_printed(g);
    checks["printed_axial_triples"] = {
        {"printed_radii", c.printed_radii},
        {"solver_radii", c.solver_radii},
        {"direct_pairing_discrepancy", c.direct_pairing()},
        {"swapped_pairing_discrepancy", c.swapped_pairing()},
        {"axial_entry_discrepancy", c.axial_entry_discrepancy},
        {"discrepant", c.discrepant()}};
  } else if (g.n == 4) {
    const AxialQuadruple q = axial_closed_form_n4(g);
    const LateralChain lat = lateral_chain_n4(g);
    checks["axial_closed_form"] = {{"radii", q.radii}, {"bends", q.bends}};
    checks["lateral_bends"] = {lat.b_minus, lat.b_plus};
  } else if (g.n == 6) {
    const AxialSixCheck c = axial_bends_n6(g);
    checks["printed_axial_bends"] = {{"printed", c.printed_bends},
                                     {"solver", c.solver_bends},
                                     {"max_relative_discrepancy", c.max_relative_discrepancy},
                                     {"discrepant", c.discrepant()}};
  }
  return checks;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  const Tolerance tol = tolerance_from_env();

  CLI::App app{"Steiner chain porism toolkit", "steiner"};
  app.require_subcommand(1);
  std::function<int()> action;

  GaugeArgs gauge_args;
  auto* gauge_cmd = app.add_subcommand("gauge", "validate a gauge, or derive d from the Pedoe relation");
  add_gauge_options(gauge_cmd, gauge_args, false);
  gauge_cmd->callback([&] {
    action = [&]() -> int {
      json doc = {{"n", gauge_args.n}, {"R", gauge_args.R}, {"r", gauge_args.r}};
      if (gauge_cmd->count("--d") == 0) {
        const auto d = pedoe_distance(gauge_args.n, gauge_args.R, gauge_args.r);
        if (!d) {
          doc["status"] = "infeasible";
          out << doc.dump(2) << '\n';
          return kExitViolation;
        }
        doc["d"] = *d;
        doc["status"] = "derived";
        out << doc.dump(2) << '\n';
        return kExitOk;
      }
      const GaugeReport report =
          validate_gauge({gauge_args.n, gauge_args.R, gauge_args.r, gauge_args.d}, tol);
      doc["d"] = gauge_args.d;
      doc["pedoe_residual"] = report.pedoe_residual;
      doc["status"] = report.valid ? "valid" : "violation";
      out << doc.dump(2) << '\n';
      return report.valid ? kExitOk : kExitViolation;
    };
  });

  GaugeArgs chain_args;
  double phase = 0.0;
  std::string chain_out;
  auto* chain_cmd = app.add_subcommand("chain", "construct the chain at a given phase");
  add_gauge_options(chain_cmd, chain_args, true);
  chain_cmd->add_option("--phase", phase, "phase in the concentric model (radians)")->required();
  chain_cmd->add_option("--out", chain_out, "output JSON file (stdout when omitted)");
  chain_cmd->callback([&] {
    action = [&]() -> int {
      const SteinerChain chain = chain_at_phase(checked_gauge(chain_args, tol), phase);
      const std::string doc = chain_to_json(chain);
      if (chain_out.empty())
        out << doc << '\n';
      else
        write_text_file(chain_out, doc + "\n");
      return kExitOk;
    };
  });

  std::string inv_chain;
  int max_k = 0;
  bool with_complex = false;
  auto* inv_cmd = app.add_subcommand("invariants", "moments of a chain document");
  inv_cmd->add_option("--chain", inv_chain, "chain JSON file")->required();
  inv_cmd->add_option("--max-k", max_k, "highest bending moment (default n)");
  inv_cmd->add_flag("--complex", with_complex, "also report invariant complex moments");
  inv_cmd->callback([&] {
    action = [&]() -> int {
      const SteinerChain chain = read_chain_file(inv_chain, tol);
      const int k = max_k > 0 ? max_k : chain.gauge.n;
      json doc = moments_json(chain, k, with_complex);
      if (chain.gauge.n == 4 && k >= 3)
        doc["relation_residual"] =
            third_moment_relation_residual(doc["I"][0], doc["I"][1], doc["I"][2]);
      out << doc.dump(2) << '\n';
      return kExitOk;
    };
  });

  GaugeArgs sweep_args;
  int samples = 100;
  std::string csv_path;
  auto* sweep_cmd = app.add_subcommand("sweep", "moments over a uniform phase sweep");
  add_gauge_options(sweep_cmd, sweep_args, true);
  sweep_cmd->add_option("--samples", samples, "number of phases")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--csv", csv_path, "output CSV file (stdout when omitted)");
  sweep_cmd->callback([&] {
    action = [&]() -> int {
      const Gauge g = checked_gauge(sweep_args, tol);
      const auto rows = sweep_samples(g, samples);
      const bool invariant = sweep_is_invariant(g.n, rows, 1e-8);
      if (csv_path.empty()) {
        write_sweep_csv(out, g.n, rows);
      } else {
        std::ostringstream csv;
        write_sweep_csv(csv, g.n, rows);
        write_text_file(csv_path, csv.str());
        const InvarianceReport rep = invariance_sweep(g, samples);
        json doc = {{"samples", samples},
                    {"bending_deviation", rep.bending_deviation},
                    {"max_imaginary", rep.max_imaginary},
                    {"control_deviation", rep.control_deviation},
                    {"invariant", invariant}};
        out << doc.dump(2) << '\n';
      }
      if (!invariant) err << "invariance violation detected\n";
      return invariant ? kExitOk : kExitViolation;
    };
  });

  GaugeArgs sym_args;
  std::string kind_name;
  auto* sym_cmd = app.add_subcommand("symmetric", "axial or lateral symmetric chain");
  add_gauge_options(sym_cmd, sym_args, true);
  sym_cmd->add_option("--kind", kind_name, "axial-max|axial-min|axial|lateral")->required();
  sym_cmd->callback([&] {
    action = [&]() -> int {
      const auto kind = parse_kind(kind_name);
      if (!kind) throw InvalidInput("unknown kind " + kind_name);
      const Gauge g = checked_gauge(sym_args, tol);
      const SteinerChain chain = symmetric_chain(g, *kind);
      json doc = {{"kind", std::string(to_string(*kind))},
                  {"chain", json::parse(chain_to_json(chain))},
                  {"checks", symmetric_checks(g)}};
      out << doc.dump(2) << '\n';
      return kExitOk;
    };
  });

  std::vector<double> radii;
  std::string mode_name = "paper";
  auto* feas_cmd = app.add_subcommand("feasible", "decide whether four radii form a Steiner 4-chain");
  feas_cmd->add_option("--radii", radii, "r1,r2,r3,r4")->required()->delimiter(',')->expected(4);
  feas_cmd->add_option("--mode", mode_name, "paper|constructive")
      ->check(CLI::IsMember({"paper", "constructive"}));
  feas_cmd->callback([&] {
    action = [&]() -> int {
      const FeasibilityMode mode =
          mode_name == "constructive" ? FeasibilityMode::Constructive : FeasibilityMode::Paper;
      const FeasibilityReport rep =
          feasibility_check({radii[0], radii[1], radii[2], radii[3]}, mode);
      out << feasibility_json(rep).dump(2) << '\n';
      return rep.feasible ? kExitOk : kExitViolation;
    };
  });

  std::string render_chain, svg_path;
  auto* render_cmd = app.add_subcommand("render", "draw a chain document as SVG");
  render_cmd->add_option("--chain", render_chain, "chain JSON file")->required();
  render_cmd->add_option("--svg", svg_path, "output SVG file")->required();
  render_cmd->callback([&] {
    action = [&]() -> int {
      write_text_file(svg_path, render_svg(read_chain_file(render_chain, tol)));
      return kExitOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInvalidInput;
  }

  try {
    return action();
  } catch (const ChainValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
}

}  // namespace steiner
