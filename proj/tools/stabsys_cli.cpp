#include "stabsys/bounds.hpp"
#include "stabsys/charges.hpp"
#include "stabsys/formal.hpp"
#include "stabsys/quadratic.hpp"
#include "stabsys/regions.hpp"
#include "stabsys/report.hpp"
#include "stabsys/walls.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace stabsys;

Rational opt_rational(const std::string& text, const char* flag) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw CLI::ValidationError(std::string(flag) + ": expected an exact rational 'p/q'");
  }
}

ChargeFamily parse_family(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("charge family: expected kind:params, got '" + spec + "'");
  const std::string kind = spec.substr(0, colon);
  std::vector<Rational> params;
  std::string rest = spec.substr(colon + 1);
  std::size_t start = 0;
  while (start <= rest.size()) {
    auto comma = rest.find(',', start);
    params.push_back(parse_rational(rest.substr(start, comma == std::string::npos ? comma : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (kind == "standard" && params.size() == 1) return ChargeFamily::standard_alpha(params[0]);
  if (kind == "standard" && params.size() == 2)
    return ChargeFamily::standard_alpha_beta(params[0], params[1]);
  if (kind == "tilted" && params.size() == 3)
    return ChargeFamily::tilted(params[0], params[1], params[2]);
  if (kind == "dagger" && params.size() == 4) {
    const BGCoefficients c = bg_solve(params[0], params[1], params[2], params[3]);
    return ChargeFamily::dagger(params[0], params[1], params[3], c.re_n, c.re_d, c.re_k);
  }
  throw std::invalid_argument("charge family: unknown spec '" + spec + "'");
}

void emit(const json& report) { std::cout << render_report(report); }

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact stability-condition calculator for coherent systems on curves"};
  app.require_subcommand(1);

  std::string cls_text, alpha_text{"1"}, beta_text{"0"}, gamma_text{"2"}, t_text;
  std::string charge_kind{"tilted"}, fixture_path, object_id, out_path, format{"json"};
  std::string from_spec, to_spec, h0_text, genus_text, kind_text{"op"};
  std::string gmin_text{"1"}, gmax_text{"2"};
  long long bound = 10;
  bool complete = false, mu_min_flag = false;

  // eval: evaluate a charge and its slope on a class
  auto* eval = app.add_subcommand("eval", "Evaluate a central charge on a class");
  eval->add_option("--charge", charge_kind, "alpha|alphabeta|tilted|dagger")->capture_default_str();
  eval->add_option("--class", cls_text, "class vector n,d,k")->required();
  eval->add_option("--alpha", alpha_text, "alpha as p/q");
  eval->add_option("--beta", beta_text, "beta as p/q");
  eval->add_option("--gamma", gamma_text, "gamma as p/q");
  eval->add_option("--t", t_text, "t as p/q (dagger only)");
  eval->callback([&] {
    const ClassVector c = parse_class(cls_text);
    const Rational alpha = opt_rational(alpha_text, "--alpha");
    const Rational beta = opt_rational(beta_text, "--beta");
    const Rational gamma = opt_rational(gamma_text, "--gamma");
    ComplexRational z;
    std::vector<std::string> warnings;
    if (charge_kind == "alpha") z = z_alpha(c, alpha);
    else if (charge_kind == "alphabeta") z = z_alpha_beta(c, alpha, beta);
    else if (charge_kind == "tilted") z = z_tilt(c, alpha, beta, gamma);
    else if (charge_kind == "dagger") {
      const Rational t = opt_rational(t_text.empty() ? "1" : t_text, "--t");
      const BGCoefficients bg = bg_solve(alpha, beta, gamma, t);
      z = ChargeFamily::dagger(alpha, beta, t, bg.re_n, bg.re_d, bg.re_k).evaluate(c);
      warnings.push_back(notes::kDaggerRowSigns);
    } else {
      throw CLI::ValidationError("--charge: unknown kind " + charge_kind);
    }
    json results;
    results["charge"] = to_json(z);
    results["slope"] = to_json(slope(z));
    results["mu_alpha"] = to_json(mu_alpha(c, alpha));
    if (!z.is_zero()) results["phase_display"] = phase_display(z);
    emit(make_report("eval", {{"class", to_json(c)}, {"charge", charge_kind},
                              {"alpha", to_string(alpha)}, {"beta", to_string(beta)},
                              {"gamma", to_string(gamma)}},
                     results, warnings));
  });

  // region check
  auto* region = app.add_subcommand("region", "Parameter-region predicates");
  auto* region_check = region->add_subcommand("check", "PS/S membership and t-window");
  region_check->add_option("--alpha", alpha_text)->required();
  region_check->add_option("--beta", beta_text)->required();
  region_check->add_option("--gamma", gamma_text)->required();
  region_check->callback([&] {
    const ParamTriple p{opt_rational(alpha_text, "--alpha"), opt_rational(beta_text, "--beta"),
                        opt_rational(gamma_text, "--gamma")};
    json results;
    std::vector<std::string> warnings;
    results["ps"] = in_PS(p);
    try {
      results["s"] = in_S(p);
      if (on_S_boundary(p)) warnings.push_back(notes::kSBoundary);
    } catch (const std::domain_error& e) {
      results["s"] = nullptr;
      warnings.push_back(e.what());
    }
    try {
      const auto window = t_window(p.alpha, p.beta, p.gamma);
      results["t_window"] = window ? to_json(*window) : json(nullptr);
      if (p.beta < 1 && window) warnings.push_back(notes::kLowBetaWindow);
    } catch (const std::domain_error& e) {
      results["t_window"] = nullptr;
      warnings.push_back(e.what());
    }
    emit(make_report("region check", {{"alpha", to_string(p.alpha)}, {"beta", to_string(p.beta)},
                                      {"gamma", to_string(p.gamma)}},
                     results, warnings));
  });

  // bg solve
  auto* bg = app.add_subcommand("bg", "Bogomolov-Gieseker coefficient solver");
  auto* bg_cmd = bg->add_subcommand("solve", "Solve the six-equation system");
  bg_cmd->add_option("--alpha", alpha_text)->required();
  bg_cmd->add_option("--beta", beta_text)->required();
  bg_cmd->add_option("--gamma", gamma_text)->required();
  bg_cmd->add_option("--t", t_text, "t as p/q; defaults to the t-window midpoint");
  bg_cmd->callback([&] {
    const Rational alpha = opt_rational(alpha_text, "--alpha");
    const Rational beta = opt_rational(beta_text, "--beta");
    const Rational gamma = opt_rational(gamma_text, "--gamma");
    Rational t;
    std::vector<std::string> warnings{notes::kDaggerRowSigns, notes::kHeadlineP};
    if (!t_text.empty()) {
      t = opt_rational(t_text, "--t");
    } else {
      const auto window = t_window(alpha, beta, gamma);
      if (!window) throw std::domain_error("bg solve: empty t-window; pass --t explicitly");
      t = window->midpoint();
      if (beta < 1) warnings.push_back(notes::kLowBetaWindow);
    }
    json results = to_json(bg_solve(alpha, beta, gamma, t));
    emit(make_report("bg solve", {{"alpha", to_string(alpha)}, {"beta", to_string(beta)},
                                  {"gamma", to_string(gamma)}, {"t", to_string(t)}},
                     results, warnings));
  });

  // support certify
  auto* support = app.add_subcommand("support", "Support-property certificates");
  auto* certify = support->add_subcommand("certify", "Exhaustive box scan of Q_alpha");
  certify->add_option("--alpha", alpha_text)->required();
  certify->add_option("--beta", beta_text);
  certify->add_option("--bound", bound, "lattice box radius")->required();
  certify->callback([&] {
    const auto cert = support_certificate(opt_rational(alpha_text, "--alpha"),
                                          opt_rational(beta_text, "--beta"), bound);
    emit(make_report("support certify",
                     {{"alpha", alpha_text}, {"beta", beta_text}, {"bound", bound}},
                     to_json(cert)));
  });

  // bounds check
  auto* bounds_cmd = app.add_subcommand("bounds", "Section-count and Clifford bounds");
  auto* bounds_check = bounds_cmd->add_subcommand("check", "All applicable bounds for a class");
  bounds_check->add_option("--class", cls_text)->required();
  bounds_check->add_option("--alpha", alpha_text);
  bounds_check->add_option("--genus", genus_text);
  bounds_check->add_option("--h0", h0_text, "recorded h0 for Clifford index");
  bounds_check->add_flag("--mu-min-nonneg", mu_min_flag, "assume mu_min >= 0");
  bounds_check->callback([&] {
    const ClassVector c = parse_class(cls_text);
    const Rational alpha = opt_rational(alpha_text, "--alpha");
    json results;
    std::vector<std::string> warnings;
    results["admissible_semistable"] =
        (c.n >= 0 && c.k >= 0) ? json(admissible_semistable(c, alpha)) : json(nullptr);
    if (c.n > 0) {
      results["system_section_bound"] = system_section_bound(c);
      if (!genus_text.empty()) {
        const Genus g{std::stoll(genus_text)};
        results["system_clifford_bound"] = system_clifford_bound(c, g);
        results["extremal"] = to_json(extremal_classify(c, g));
      }
    }
    SheafClass sheaf;
    sheaf.n = c.n;
    sheaf.d = c.d;
    try {
      results["h0_upper"] = h0_upper(sheaf, mu_min_flag).convert_to<long long>();
    } catch (const std::domain_error& e) {
      warnings.push_back(e.what());
    }
    if (!genus_text.empty() && c.n > 0) {
      const Genus g{std::stoll(genus_text)};
      try {
        results["clifford_upper"] = to_string(clifford_upper(sheaf, g));
      } catch (const std::domain_error& e) {
        warnings.push_back(e.what());
      }
      if (!h0_text.empty()) {
        const auto res = clifford_index(c.n, c.d, Int(h0_text), Genus{std::stoll(genus_text)});
        results["clifford_index"] = to_json(res);
        if (res.printed_form_mismatch) warnings.push_back(notes::kCliffordPrintedForm);
      }
    }
    emit(make_report("bounds check",
                     {{"class", to_json(c)}, {"alpha", to_string(alpha)},
                      {"genus", genus_text.empty() ? json(nullptr) : json(genus_text)}},
                     results, warnings));
  });

  // formal hn / scan-minimal
  auto* formal_cmd = app.add_subcommand("formal", "Finite formal-category engine");
  auto* formal_hn = formal_cmd->add_subcommand("hn", "Harder-Narasimhan filtration");
  formal_hn->add_option("--fixture", fixture_path)->required()->check(CLI::ExistingFile);
  formal_hn->add_option("--object", object_id)->required();
  formal_hn->add_option("--alpha", alpha_text);
  formal_hn->callback([&] {
    const FormalCategory cat = FormalCategory::from_file(fixture_path);
    const auto hn = hn_filtration(cat, object_id, opt_rational(alpha_text, "--alpha"));
    json results = to_json(hn);
    const auto split =
        torsion_pair_split(cat, object_id, opt_rational(alpha_text, "--alpha"),
                           opt_rational(beta_text, "--beta"));
    results["torsion_split"] = {{"t", to_json(split.first)}, {"f", to_json(split.second)}};
    emit(make_report("formal hn",
                     {{"fixture", fixture_path}, {"object", object_id},
                      {"alpha", alpha_text}, {"beta", beta_text}},
                     results, cat.warnings()));
  });
  auto* formal_scan = formal_cmd->add_subcommand(
      "scan-minimal", "Destabilizer constraint scan for minimal objects");
  formal_scan->add_option("--alpha", alpha_text)->required();
  formal_scan->add_option("--beta", beta_text)->required();
  formal_scan->add_option("--gamma", gamma_text)->required();
  formal_scan->add_option("--bound", bound)->required();
  formal_scan->add_option("--kind", kind_text, "op|v1")->capture_default_str();
  formal_scan->callback([&] {
    const MinimalKind kind = kind_text == "v1" ? MinimalKind::V1 : MinimalKind::OP;
    const auto sys = destabilizer_constraints_minimal(
        kind, opt_rational(alpha_text, "--alpha"), opt_rational(beta_text, "--beta"),
        opt_rational(gamma_text, "--gamma"));
    const auto hits = scan_minimal_constraints(sys, bound);
    json results;
    results["system"] = sys.describe();
    results["solutions"] = json::array();
    for (const auto& c : hits) results["solutions"].push_back(to_json(c));
    results["count"] = hits.size();
    emit(make_report("formal scan-minimal",
                     {{"kind", kind_text}, {"alpha", alpha_text}, {"beta", beta_text},
                      {"gamma", gamma_text}, {"bound", bound}},
                     results));
  });

  // walls scan
  auto* walls_cmd = app.add_subcommand("walls", "Wall-and-chamber analysis in gamma");
  auto* walls_scan = walls_cmd->add_subcommand("scan", "Chamber scan for a class");
  walls_scan->add_option("--class", cls_text)->required();
  walls_scan->add_option("--alpha", alpha_text)->required();
  walls_scan->add_option("--beta", beta_text)->required();
  walls_scan->add_option("--gamma-min", gmin_text)->required();
  walls_scan->add_option("--gamma-max", gmax_text)->required();
  walls_scan->add_option("--bound", bound)->required();
  walls_scan->add_option("--fixture", fixture_path)->check(CLI::ExistingFile);
  walls_scan->add_option("--format", format, "json|csv")->capture_default_str();
  walls_scan->add_option("--out", out_path, "write an SVG chamber plot");
  walls_scan->add_flag("--complete", complete, "target records full h0");
  walls_scan->callback([&] {
    const ClassVector c = parse_class(cls_text);
    ScanOptions opts;
    opts.bound = bound;
    opts.mode = c.n < 0 ? ScanMode::ShiftedStable : ScanMode::MinimalObject;
    opts.complete = complete;
    std::optional<FormalCategory> fixture;
    if (!fixture_path.empty()) fixture = FormalCategory::from_file(fixture_path);
    const Rational glo = opt_rational(gmin_text, "--gamma-min");
    const Rational ghi = opt_rational(gmax_text, "--gamma-max");
    const auto scan =
        chamber_scan(c, opt_rational(alpha_text, "--alpha"), opt_rational(beta_text, "--beta"),
                     glo, ghi, opts, fixture ? &*fixture : nullptr);
    if (!out_path.empty()) write_file(out_path, plot_chambers(scan, glo, ghi));
    if (format == "csv") {
      std::cout << walls_csv(scan.walls);
      return;
    }
    emit(make_report("walls scan",
                     {{"class", to_json(c)}, {"alpha", alpha_text}, {"beta", beta_text},
                      {"gamma_min", gmin_text}, {"gamma_max", gmax_text}, {"bound", bound},
                      {"mode", opts.mode == ScanMode::ShiftedStable ? "shifted_stable"
                                                                    : "minimal_object"}},
                     to_json(scan)));
  });

  // orbit
  auto* orbit = app.add_subcommand("orbit", "GL+(2,R)-orbit comparison of charges");
  orbit->add_option("--from", from_spec, "source family, e.g. tilted:1,2,7")->required();
  orbit->add_option("--to", to_spec, "target family, e.g. standard:1")->required();
  orbit->callback([&] {
    const auto verdict = orbit_compare(parse_family(from_spec), parse_family(to_spec));
    emit(make_report("orbit", {{"from", from_spec}, {"to", to_spec}}, to_json(verdict)));
  });

  // plot: re-render a stored walls report as SVG
  auto* plot = app.add_subcommand("plot", "Render a walls-scan report to SVG");
  plot->add_option("--in", fixture_path, "walls scan JSON report")->required()->check(CLI::ExistingFile);
  plot->add_option("--out", out_path, "output SVG path")->required();
  plot->callback([&] {
    std::ifstream in(fixture_path);
    json report = json::parse(in);
    const json& r = report.at("results");
    ChamberScan scan;
    scan.bound = r.value("bound", 0);
    scan.clipped_walls = r.value("clipped_walls", 0);
    for (const auto& jw : r.value("walls", json::array())) {
      WallReport w;
      if (jw.contains("gamma0")) w.gamma0 = rational_from_report(jw["gamma0"]);
      w.in_range = jw.value("in_range", false);
      scan.walls.push_back(std::move(w));
    }
    Rational glo, ghi;
    bool have_range = false;
    for (const auto& jc : r.value("chambers", json::array())) {
      ChamberVerdict v;
      v.lo = rational_from_report(jc.at("lo"));
      v.hi = rational_from_report(jc.at("hi"));
      v.sample = rational_from_report(jc.at("sample"));
      v.stable = jc.at("verdict").get<std::string>() == "stable_within_bound";
      if (!have_range) glo = v.lo;
      ghi = v.hi;
      have_range = true;
      scan.chambers.push_back(std::move(v));
    }
    if (!have_range) throw std::domain_error("plot: report has an empty gamma range");
    write_file(out_path, plot_chambers(scan, glo, ghi));
    emit(make_report("plot", {{"in", fixture_path}, {"out", out_path}},
                     {{"written", out_path}}));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // usage errors
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;  // domain errors
  }
}
