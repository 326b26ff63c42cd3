#include "commands.hpp"

#include "ncrotor/errors.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <charconv>
#include <cmath>
#include <iostream>

namespace ncrotor::app {

using nlohmann::json;

namespace {

json metadata(const std::string& command, const Config& config) {
  return {{"command", command}, {"config", config.source}};
}

json metadata(const std::string& command, const Config& config, const ResolvedParams& params) {
  json meta = metadata(command, config);
  meta.update(resolution_metadata(config, params));
  return meta;
}

std::string irrep_label(const Irrep& irrep) { return fmt::format("({},{})", irrep.p(), irrep.q()); }

std::string spins_label(const std::vector<int>& two_j) {
  std::string out;
  for (std::size_t i = 0; i < two_j.size(); ++i) {
    if (i > 0) out += ' ';
    out += half_integer_string(two_j[i]);
  }
  return out;
}

json params_json(const RotorParams<Rational>& p) {
  return {{"n_c", p.n_c},
          {"m0", exact_json(p.m0)},
          {"i1", exact_json(p.i1)},
          {"i2", exact_json(p.i2)},
          {"units", std::string(to_string(p.units))}};
}

json reduced_json(const ReducedParams<Rational>& p) {
  return {{"m0", exact_json(p.m0)},
          {"i1", exact_json(p.i1)},
          {"i2", exact_json(p.i2)},
          {"units", std::string(to_string(p.units))}};
}

json fit_json(const std::optional<ExponentFit>& fit, const std::vector<int>& window) {
  if (!fit) return nullptr;
  return {{"slope", fit->slope},
          {"intercept", fit->intercept},
          {"residual", fit->residual},
          {"n_c_min", window.front()},
          {"n_c_max", window.back()},
          {"points", window.size()}};
}

json verdict_json(const BandVerdict& v) {
  return {{"verdict", std::string(to_string(v.verdict))},
          {"strictly_decreasing", v.strictly_decreasing},
          {"final_ratio", v.final_ratio}};
}

template <class T>
T parse_int_like(std::string_view text, const std::string& what) {
  T value{};
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) throw InvalidArgument("invalid " + what + " '" + std::string(text) + "'");
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

Report cmd_reps(int n_c, int max_pq) {
  require_valid_nc(n_c);
  if (max_pq < 0) throw InvalidArgument("--max-pq must be non-negative");
  Report report;
  report.table.header = {"p", "q", "dim", "C2", "J", "S_min", "S_max", "exotic"};
  json rows = json::array();
  for (const auto& s : allowed_irreps(n_c, max_pq)) {
    json spins = json::array();
    for (int tj : s.two_j) spins.push_back(half_integer_string(tj));
    rows.push_back({{"p", s.irrep.p()},
                    {"q", s.irrep.q()},
                    {"dimension", s.dimension},
                    {"casimir", exact_json(s.casimir)},
                    {"two_j", s.two_j},
                    {"j", spins},
                    {"s_min", s.strangeness.s_min},
                    {"s_max", s.strangeness.s_max},
                    {"exotic", s.strangeness.exotic()}});
    report.table.rows.push_back({std::to_string(s.irrep.p()), std::to_string(s.irrep.q()),
                                 std::to_string(s.dimension), format_number(s.casimir), spins_label(s.two_j),
                                 std::to_string(s.strangeness.s_min), std::to_string(s.strangeness.s_max),
                                 s.strangeness.exotic() ? "yes" : "no"});
  }
  report.json = {{"metadata", {{"command", "reps"}}}, {"n_c", n_c}, {"max_pq", max_pq}, {"irreps", rows}};
  return report;
}

Report cmd_spectrum(const Config& config, const ResolvedParams& resolved, int n_c,
                    const std::vector<BandLabel>& extra_bands) {
  const RotorParams<Rational> params = resolved.reduced.at(n_c);
  std::vector<BandLabel> bands;
  for (const auto& b : canonical_bands(n_c)) bands.push_back(b);
  for (const auto& b : extra_bands) bands.push_back(b);

  Report report;
  report.table.header = {"band", "p", "q", "J", "dim", "C2", "mass", "mass_exact"};
  json rows = json::array();
  std::vector<Rational> masses;
  for (const auto& band : bands) {
    const Rational mass = su3_mass(params, band);
    masses.push_back(mass);
    const std::string name = band.nickname.empty() ? irrep_label(band.irrep) : band.nickname;
    rows.push_back({{"band", name},
                    {"p", band.irrep.p()},
                    {"q", band.irrep.q()},
                    {"two_j", band.two_j},
                    {"j", half_integer_string(band.two_j)},
                    {"dimension", dimension(band.irrep)},
                    {"casimir", exact_json(casimir(band.irrep))},
                    {"mass", exact_json(mass)}});
    report.table.rows.push_back({name, std::to_string(band.irrep.p()), std::to_string(band.irrep.q()),
                                 half_integer_string(band.two_j), std::to_string(dimension(band.irrep)),
                                 format_number(casimir(band.irrep)), format_number(to_double(mass)),
                                 format_number(mass)});
  }
  const Rational exotic = exotic_splitting(params);
  const Rational decuplet = decuplet_splitting(params);
  report.json = {{"metadata", metadata("spectrum", config, resolved)},
                 {"n_c", n_c},
                 {"params", params_json(params)},
                 {"reduced_params", reduced_json(resolved.reduced)},
                 {"bands", rows},
                 {"exotic_splitting", exact_json(exotic)},
                 {"decuplet_splitting", exact_json(decuplet)}};
  report.notes.push_back("exotic splitting   " + format_number(to_double(exotic)) + "  (" + format_number(exotic) + ")");
  report.notes.push_back("decuplet splitting " + format_number(to_double(decuplet)) + "  (" + format_number(decuplet) +
                         ")");

  if (resolved.masses && resolved.masses->theta_check && params.units == Units::mev) {
    const Rational reference = exact(*resolved.masses->theta_check);
    const Rational predicted = masses[2];
    const Rational diff = abs(predicted - reference);
    report.json["theta_check"] = {{"reference", exact_json(reference)},
                                  {"predicted_antidecuplet", exact_json(predicted)},
                                  {"abs_difference", exact_json(diff)}};
    report.notes.push_back("theta check |10bar - " + format_number(to_double(reference)) +
                           "| = " + format_number(to_double(diff)) + " (informational)");
  }
  return report;
}

Report cmd_calibrate(const Config& config, int n_c) {
  if (!config.physical_masses) throw ConfigError("calibration needs physical_masses in the configuration");
  const auto& m = *config.physical_masses;
  const ReferenceMasses<Rational> refs{exact(m.m_nucleon), exact(m.m_delta), exact(m.m_antidecuplet_ref),
                                       exact(m.m_octet_ref)};
  const RotorParams<Rational> params = calibrate(n_c, refs);
  const auto bands = canonical_bands(n_c);
  const Rational m8 = su3_mass(params, bands[0]);
  const Rational m10 = su3_mass(params, bands[1]);
  const Rational m10bar = su3_mass(params, bands[2]);

  struct Check {
    std::string quantity;
    Rational reference;
    Rational predicted;
  };
  const std::vector<Check> checks = {
      {"M(8)", refs.octet, m8},
      {"M(10) - M(8)", refs.delta - refs.nucleon, m10 - m8},
      {"M(10bar) - M(8)", refs.antidecuplet - refs.octet, m10bar - m8},
      {"M(10bar)", refs.antidecuplet, m10bar},
  };

  Report report;
  report.table.header = {"quantity", "reference", "predicted", "difference"};
  json round_trip = json::array();
  bool exact_match = true;
  for (const auto& c : checks) {
    const Rational diff = c.predicted - c.reference;
    exact_match = exact_match && diff == 0;
    round_trip.push_back({{"quantity", c.quantity},
                          {"reference", exact_json(c.reference)},
                          {"predicted", exact_json(c.predicted)},
                          {"difference", exact_json(diff)}});
    report.table.rows.push_back({c.quantity, format_number(c.reference), format_number(c.predicted),
                                 format_number(diff)});
  }
  report.json = {{"metadata", metadata("calibrate", config)},
                 {"n_c", n_c},
                 {"params", params_json(params)},
                 {"reduced_params", reduced_json(reduce(params))},
                 {"round_trip", round_trip},
                 {"round_trip_exact", exact_match}};
  report.notes.push_back("M0 = " + format_number(to_double(params.m0)) + " MeV  (" + format_number(params.m0) + ")");
  report.notes.push_back("I1 = " + format_number(to_double(params.i1)) + " /MeV  (" + format_number(params.i1) + ")");
  report.notes.push_back("I2 = " + format_number(to_double(params.i2)) + " /MeV  (" + format_number(params.i2) + ")");
  if (m.theta_check) {
    const Rational reference = exact(*m.theta_check);
    const Rational diff = abs(m10bar - reference);
    report.json["theta_check"] = {{"reference", exact_json(reference)},
                                  {"predicted_antidecuplet", exact_json(m10bar)},
                                  {"abs_difference", exact_json(diff)}};
    report.notes.push_back("theta check |10bar - " + format_number(to_double(reference)) +
                           "| = " + format_number(to_double(diff)) + " (informational)");
  }
  return report;
}

ProfileReport cmd_profile(const Config& config, const ProfileConfig& pc, const SolverOptions& solver) {
  const ProfileSolution sol = solve_profile(pc.model, pc.grid, solver);
  const double virial = virial_ratio(sol);
  const auto physical = physical_rotor_params({sol.m0, sol.i1, sol.i2}, pc.model, pc.n_c_reference);

  ProfileReport out;
  out.profile.header = {"r", "f", "cumulative_baryon_number"};
  const auto cumulative = cumulative_baryon_number(sol);
  for (std::size_t i = 0; i < sol.r.size(); ++i) {
    out.profile.rows.push_back({format_number(sol.r[i]), format_number(sol.f[i]), format_number(cumulative[i])});
  }

  json model = {{"variant", "standard_quartic"}, {"f_pi_mev", pc.model.f_pi_mev}, {"e", pc.model.e}};
  model["pion_mass"] = pc.model.pion_mass ? json(*pc.model.pion_mass) : json(nullptr);
  json meta = metadata("profile", config);
  meta["seed"] = solver.seed;

  Report& report = out.report;
  report.json = {{"metadata", meta},
                 {"model", model},
                 {"grid",
                  {{"r_max", pc.grid.r_max},
                   {"n_points", pc.grid.n_points},
                   {"spacing", std::string(to_string(pc.grid.spacing))},
                   {"stretch", pc.grid.stretch}}},
                 {"m0", sol.m0},
                 {"i1", sol.i1},
                 {"i2", sol.i2},
                 {"e2", sol.e2},
                 {"e4", sol.e4},
                 {"e_mass", sol.e_mass},
                 {"b", sol.b},
                 {"virial_ratio", virial},
                 {"converged", sol.converged},
                 {"iterations", sol.iterations},
                 {"physical",
                  {{"n_c", physical.n_c},
                   {"m0_mev", physical.m0},
                   {"i1_per_mev", physical.i1},
                   {"i2_per_mev", physical.i2}}}};

  report.table.header = {"quantity", "value"};
  const std::vector<std::pair<std::string, double>> rows = {
      {"m0", sol.m0},         {"i1", sol.i1},         {"i2", sol.i2},
      {"e2", sol.e2},         {"e4", sol.e4},         {"e_mass", sol.e_mass},
      {"b", sol.b},           {"virial_ratio", virial}, {"M0 [MeV]", physical.m0},
      {"I1 [1/MeV]", physical.i1}, {"I2 [1/MeV]", physical.i2}};
  for (const auto& [name, value] : rows) report.table.rows.push_back({name, format_number(value)});
  report.table.rows.push_back({"converged", sol.converged ? "true" : "false"});
  report.table.rows.push_back({"iterations", std::to_string(sol.iterations)});
  return out;
}

std::vector<int> tail_window(const std::vector<int>& n_c_list, int tail_max) {
  if (n_c_list.empty()) return {};
  const int lo = n_c_list.back();
  if (tail_max < lo) return {};
  return odd_range(lo, tail_max);
}

Report cmd_sweep(const Config& config, const ResolvedParams& resolved, const SweepOptions& options) {
  const ReducedParams<double> reduced{to_double(resolved.reduced.m0), to_double(resolved.reduced.i1),
                                      to_double(resolved.reduced.i2), resolved.reduced.units};
  const SweepResult result = sweep(reduced, options.n_c_list, options.omega_vib);
  const AdiabaticityReport verdicts = adiabaticity_report(result, options.threshold);

  std::optional<ExponentFit> decuplet_fit;
  std::optional<ExponentFit> exotic_fit;
  if (result.n_c_values.size() >= 4) {
    decuplet_fit = fit_exponent(std::span<const int>(result.n_c_values), result.decuplet_gap);
    exotic_fit = fit_exponent(std::span<const int>(result.n_c_values), result.exotic_gap);
  }
  const std::vector<int> tail = tail_window(result.n_c_values, options.tail_max);
  std::optional<ExponentFit> tail_fit;
  std::optional<SweepResult> tail_result;
  if (!tail.empty()) {
    tail_result = sweep(reduced, tail, options.omega_vib);
    if (tail.size() >= 4) tail_fit = fit_exponent(std::span<const int>(tail), tail_result->exotic_gap);
  }

  const double exotic_limit = 1.0 / (4.0 * reduced.i2);
  const int n_max = tail_result ? tail_result->n_c_values.back() : result.n_c_values.back();
  const double exotic_at_max = tail_result ? tail_result->exotic_gap.back() : result.exotic_gap.back();
  const double decuplet_at_max = tail_result ? tail_result->decuplet_gap.back() : result.decuplet_gap.back();

  Report report;
  report.table.header = {"n_c", "exotic_gap", "decuplet_gap", "ratio_exotic", "ratio_decuplet"};
  json rows = json::array();
  for (std::size_t i = 0; i < result.n_c_values.size(); ++i) {
    rows.push_back({{"n_c", result.n_c_values[i]},
                    {"exotic_gap", result.exotic_gap[i]},
                    {"decuplet_gap", result.decuplet_gap[i]},
                    {"ratio_exotic", result.ratio_exotic[i]},
                    {"ratio_decuplet", result.ratio_decuplet[i]}});
    report.table.rows.push_back({std::to_string(result.n_c_values[i]), format_number(result.exotic_gap[i]),
                                 format_number(result.decuplet_gap[i]), format_number(result.ratio_exotic[i]),
                                 format_number(result.ratio_decuplet[i])});
  }

  report.json = {{"metadata", metadata("sweep", config, resolved)},
                 {"reduced_params", reduced_json(resolved.reduced)},
                 {"units", std::string(to_string(result.units))},
                 {"omega_vib", result.omega_vib},
                 {"threshold", verdicts.threshold},
                 {"rows", rows},
                 {"slopes",
                  {{"decuplet", fit_json(decuplet_fit, result.n_c_values)},
                   {"exotic", fit_json(exotic_fit, result.n_c_values)},
                   {"exotic_tail", fit_json(tail_fit, tail)}}},
                 {"limits",
                  {{"exotic_limit", exotic_limit},
                   {"decuplet_limit", 0.0},
                   {"n_c_max", n_max},
                   {"exotic_at_n_c_max", exotic_at_max},
                   {"exotic_relative_deviation", std::abs(exotic_at_max - exotic_limit) / exotic_limit},
                   {"decuplet_at_n_c_max", decuplet_at_max}}},
                 {"verdicts", {{"decuplet", verdict_json(verdicts.decuplet)}, {"exotic", verdict_json(verdicts.exotic)}}}};

  auto slope_note = [](const std::string& name, const std::optional<ExponentFit>& fit, const std::vector<int>& window) {
    if (!fit) return fmt::format("{:<18} n/a (fewer than 4 points)", name + " slope");
    return fmt::format("{:<18} {} over N_c {}..{}", name + " slope", format_number(fit->slope), window.front(),
                       window.back());
  };
  report.notes.push_back(slope_note("decuplet", decuplet_fit, result.n_c_values));
  report.notes.push_back(slope_note("exotic tail", tail_fit, tail));
  report.notes.push_back(fmt::format("exotic limit       {} (gap at N_c = {}: {})", format_number(exotic_limit), n_max,
                                     format_number(exotic_at_max)));
  report.notes.push_back(fmt::format("omega_vib          {} {}", format_number(result.omega_vib), to_string(result.units)));
  report.notes.push_back(fmt::format("decuplet verdict   {}", to_string(verdicts.decuplet.verdict)));
  report.notes.push_back(fmt::format("exotic verdict     {}", to_string(verdicts.exotic.verdict)));
  return report;
}

double resolve_omega_vib(const std::optional<double>& flag, const ScalingConfig& scaling, Units units) {
  double value = 0.0;
  if (flag) {
    value = *flag;
  } else if (scaling.omega_vib) {
    if (scaling.omega_units != units) {
      throw ConfigError(fmt::format("scaling.omega_vib is in {} but the rotor parameters are in {}",
                                    to_string(scaling.omega_units), to_string(units)));
    }
    value = *scaling.omega_vib;
  } else if (units == Units::dimensionless) {
    value = 1.0;
  } else {
    throw ConfigError("omega_vib must be given (--omega-vib or scaling.omega_vib) for parameters in MeV");
  }
  if (!(std::isfinite(value) && value > 0.0)) throw InvalidArgument("omega_vib must be positive");
  return value;
}

BandLabel parse_band(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) throw InvalidArgument("band must be given as p,q,2j: '" + text + "'");
  const int p = parse_int_like<int>(parts[0], "p");
  const int q = parse_int_like<int>(parts[1], "q");
  const int two_j = parse_int_like<int>(parts[2], "2j");
  return BandLabel{Irrep(p, q), two_j, {}};
}

std::vector<int> parse_nc_list(const std::string& text) {
  if (text.empty()) throw InvalidArgument("empty N_c list");
  if (const auto colon = text.find(':'); colon != std::string::npos) {
    const int lo = parse_int_like<int>(std::string_view(text).substr(0, colon), "N_c");
    const int hi = parse_int_like<int>(std::string_view(text).substr(colon + 1), "N_c");
    if (lo % 2 == 0) throw InvalidArgument("N_c range must start at an odd value");
    auto values = odd_range(lo, hi);
    if (values.empty()) throw InvalidArgument("empty N_c list");
    return values;
  }
  std::vector<int> values;
  for (const auto& part : split(text, ',')) values.push_back(parse_int_like<int>(part, "N_c"));
  return values;
}

namespace {

struct Cli {
  std::optional<int> n_c;
  std::optional<std::string> config;
  std::optional<std::string> format;
  std::optional<std::string> out;
  std::uint64_t seed = 0;

  int max_pq = 6;
  std::vector<std::string> bands;
  std::optional<int> grid_points;
  std::optional<double> r_max;
  std::optional<std::string> spacing;
  std::optional<std::string> profile_csv;
  std::optional<std::string> nc_list;
  std::optional<double> omega_vib;
  std::optional<int> tail_max;
};

SolverOptions solver_options(const Cli& cli) {
  SolverOptions options;
  options.seed = cli.seed;
  return options;
}

int execute(const std::string& command, const Cli& cli) {
  const Config config = load_config(resolve_config_path(cli.config));
  const OutputFormat format = cli.format ? parse_format(*cli.format) : config.format.value_or(default_format());
  const std::string out_path = cli.out ? *cli.out : config.output_path.value_or("");

  Report report;
  if (command == "reps") {
    report = cmd_reps(cli.n_c.value_or(3), cli.max_pq);
    if (report.table.rows.empty()) {
      emit(render(report, format), out_path);
      std::cerr << "error: no WZW-allowed representation with p + q <= " << cli.max_pq << '\n';
      return kConstraintViolation;
    }
  } else if (command == "spectrum") {
    std::vector<BandLabel> extra;
    for (const auto& text : cli.bands) extra.push_back(parse_band(text));
    const int n_c = cli.n_c.value_or(3);
    require_valid_nc(n_c);
    report = cmd_spectrum(config, resolve_params(config, solver_options(cli)), n_c, extra);
  } else if (command == "calibrate") {
    report = cmd_calibrate(config, cli.n_c.value_or(kPhysicalNc));
  } else if (command == "profile") {
    ProfileConfig pc = config.profile.value_or(ProfileConfig{});
    if (cli.grid_points) pc.grid.n_points = *cli.grid_points;
    if (cli.r_max) pc.grid.r_max = *cli.r_max;
    if (cli.spacing) pc.grid.spacing = parse_spacing(*cli.spacing);
    if (cli.n_c) pc.n_c_reference = *cli.n_c;
    pc.grid.validate();
    require_valid_nc(pc.n_c_reference);
    ProfileReport pr = cmd_profile(config, pc, solver_options(cli));
    if (cli.profile_csv) emit(render_csv(pr.profile), *cli.profile_csv);
    report = std::move(pr.report);
    if (format == OutputFormat::csv) report.table = std::move(pr.profile);
  } else if (command == "sweep") {
    const ResolvedParams params = resolve_params(config, solver_options(cli));
    SweepOptions options;
    options.n_c_list = cli.nc_list ? parse_nc_list(*cli.nc_list) : config.scaling.n_c_list;
    options.tail_max = cli.tail_max.value_or(config.scaling.tail_max);
    options.threshold = config.scaling.threshold;
    options.omega_vib = resolve_omega_vib(cli.omega_vib, config.scaling, params.reduced.units);
    report = cmd_sweep(config, params, options);
  }
  emit(render(report, format), out_path);
  return kSuccess;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Collective rotor spectra of chiral solitons at odd N_c", "ncrotor"};
  app.require_subcommand(1);
  app.fallthrough();

  Cli cli;
  app.add_option("--nc", cli.n_c, "Number of colors (odd, >= 3)");
  app.add_option("--config", cli.config, "Configuration file (overrides $NCROTOR_CONFIG)");
  app.add_option("--format", cli.format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--out", cli.out, "Write output to this path instead of stdout");
  app.add_option("--seed", cli.seed, "Seed for the profile relaxation start");

  auto* reps = app.add_subcommand("reps", "List WZW-allowed SU(3) representations");
  reps->add_option("--max-pq", cli.max_pq, "Largest p + q listed")->capture_default_str();

  auto* spectrum = app.add_subcommand("spectrum", "Rotor band masses");
  spectrum->add_option("--band", cli.bands, "Extra band p,q,2j (repeatable)");

  app.add_subcommand("calibrate", "Calibrate M0, I1, I2 from physical masses");

  auto* profile = app.add_subcommand("profile", "Solve the hedgehog profile");
  profile->add_option("--grid-points", cli.grid_points, "Number of radial nodes");
  profile->add_option("--r-max", cli.r_max, "Outer radius");
  profile->add_option("--spacing", cli.spacing, "Grid spacing")->check(CLI::IsMember({"uniform", "stretched"}));
  profile->add_option("--profile-csv", cli.profile_csv, "Also write the profile CSV to this path");

  auto* sweep_cmd = app.add_subcommand("sweep", "N_c scaling sweep");
  sweep_cmd->add_option("--nc-list", cli.nc_list, "Odd N_c values: a,b,c or lo:hi");
  sweep_cmd->add_option("--omega-vib", cli.omega_vib, "Vibrational scale, in the units of the rotor parameters");
  sweep_cmd->add_option("--tail-max", cli.tail_max, "Largest N_c of the exotic tail fit");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return execute(command, cli);
  } catch (const ConstraintViolation& e) {
    std::cerr << "error: constraint violation: " << e.what() << '\n';
    return kConstraintViolation;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const GridTooCoarse& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace ncrotor::app
