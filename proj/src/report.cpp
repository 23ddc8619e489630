#include "stabsys/report.hpp"

#include <sstream>

namespace stabsys {

json to_json(const Rational& r) { return to_string(r); }

json to_json(const SlopeValue& s) { return to_string(s); }

json to_json(const ClassVector& c) {
  return json::array({c.n.convert_to<long long>(), c.d.convert_to<long long>(),
                      c.k.convert_to<long long>()});
}

json to_json(const ComplexRational& z) {
  return json{{"re", to_string(z.re)}, {"im", to_string(z.im)}};
}

json to_json(const BGCoefficients& c) {
  json j;
  j["p"] = to_json(c.p);
  j["q"] = to_json(c.q);
  j["u"] = to_json(c.u);
  j["A"] = to_json(c.A);
  j["B"] = to_json(c.B);
  j["C"] = to_json(c.C);
  j["D"] = to_json(c.D);
  j["E"] = to_json(c.E);
  j["F"] = to_json(c.F);
  j["t"] = to_json(c.t);
  j["valid"] = {{"q_nonneg", c.q_nonneg},
                {"u_ge_one", c.u_ge_one},
                {"u_le_alpha_plus_one", c.u_le_alpha_plus_one},
                {"p_nonneg", c.p_nonneg},
                {"all", c.all_valid()}};
  j["re_row"] = {{"n", to_json(c.re_n)}, {"d", to_json(c.re_d)}, {"k", to_json(c.re_k)}};
  return j;
}

json to_json(const TWindow& w) {
  return json{{"lo", to_string(w.lo)}, {"hi", to_string(w.hi)}, {"lo_open", w.lo_open}};
}

json to_json(const OrbitVerdict& v) {
  json j;
  j["equivalent"] = v.equivalent;
  if (v.witness) {
    j["witness"] = json::array({json::array({to_string(v.witness->a), to_string(v.witness->b)}),
                                json::array({to_string(v.witness->c), to_string(v.witness->d)})});
    j["witness_convention"] = "T o Z_target = Z_source";
  }
  return j;
}

json to_json(const SupportCertificate& cert) {
  json j;
  j["alpha"] = to_string(cert.alpha);
  j["beta"] = to_string(cert.beta);
  j["bound"] = cert.bound;
  j["checked"] = cert.checked;
  j["violations"] = json::array();
  for (const auto& v : cert.violations)
    j["violations"].push_back({{"class", to_json(v.cls)}, {"check", v.check}});
  if (cert.ratio_min) j["ratio_min"] = to_string(*cert.ratio_min);
  j["pass"] = cert.pass();
  return j;
}

json to_json(const HNFiltration& hn) {
  json factors = json::array();
  for (const auto& f : hn.factors)
    factors.push_back({{"class", to_json(f.cls)},
                       {"slope", to_string(f.slope)},
                       {"step", f.step_id}});
  return json{{"factors", factors}, {"total", to_json(hn.total)}};
}

const char* to_string(Monotonicity m) {
  switch (m) {
    case Monotonicity::Increasing: return "increasing";
    case Monotonicity::Decreasing: return "decreasing";
    case Monotonicity::Constant: return "constant";
  }
  return "?";
}

const char* to_string(WallKind k) {
  switch (k) {
    case WallKind::Numerical: return "numerical";
    case WallKind::Pseudo: return "pseudo";
    case WallKind::ActualCandidate: return "actual_candidate";
  }
  return "?";
}

const char* to_string(TiltClass t) {
  switch (t) {
    case TiltClass::Torsion: return "torsion";
    case TiltClass::Free: return "free";
    case TiltClass::Mixed: return "mixed";
  }
  return "?";
}

const char* to_string(BTag t) {
  switch (t) {
    case BTag::ShiftOfSemistableFree: return "shift_of_semistable_free";
    case BTag::SemistableTorsionSide: return "semistable_torsion_side";
    case BTag::NotInB: return "not_in_B";
  }
  return "?";
}

const char* to_string(TransferOutcome t) {
  switch (t) {
    case TransferOutcome::Pass: return "pass";
    case TransferOutcome::Fail: return "fail";
    case TransferOutcome::Inconclusive: return "inconclusive";
    case TransferOutcome::PreconditionViolated: return "precondition_violated";
  }
  return "?";
}

const char* to_string(ExtremalTag t) {
  switch (t) {
    case ExtremalTag::CompleteTrivial: return "complete_trivial";
    case ExtremalTag::P1Sums: return "p1_sums";
    case ExtremalTag::NotExtremal: return "not_extremal";
    case ExtremalTag::TorsionCase: return "torsion_case";
  }
  return "?";
}

json to_json(const WallReport& w) {
  json j;
  if (w.gamma0) j["gamma0"] = to_string(*w.gamma0);
  j["kind"] = to_string(w.kind);
  j["pair"] = json::array({to_json(w.pair.first), to_json(w.pair.second)});
  j["in_range"] = w.in_range;
  j["monotonicity"] = to_string(w.monotonicity);
  return j;
}

json to_json(const ChamberScan& scan) {
  json j;
  j["bound"] = scan.bound;
  j["clipped_walls"] = scan.clipped_walls;
  j["walls"] = json::array();
  for (const auto& w : scan.walls) j["walls"].push_back(to_json(w));
  j["chambers"] = json::array();
  for (const auto& c : scan.chambers) {
    json destab = json::array();
    for (const auto& d : c.destabilizers) destab.push_back(to_json(d));
    j["chambers"].push_back({{"lo", to_string(c.lo)},
                             {"hi", to_string(c.hi)},
                             {"sample", to_string(c.sample)},
                             {"verdict", c.stable ? "stable_within_bound" : "unstable"},
                             {"destabilizers", destab}});
  }
  return j;
}

json to_json(const CliffordIndexResult& r) {
  json j;
  j["value"] = to_string(r.value);
  if (r.h1) j["h1"] = r.h1->convert_to<long long>();
  if (r.printed_form) j["printed_form"] = to_string(*r.printed_form);
  j["printed_form_mismatch"] = r.printed_form_mismatch;
  j["h1_negative"] = r.h1_negative;
  return j;
}

json to_json(const ExtremalVerdict& v) {
  json j;
  j["tag"] = to_string(v.tag);
  if (v.tag == ExtremalTag::P1Sums) {
    j["partition"] = json::array();
    for (const auto& a : v.partition) j["partition"].push_back(a.convert_to<long long>());
  }
  return j;
}

ClassVector class_from_report(const json& j) {
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument("report: bad class array");
  return ClassVector{Int(j[0].get<long long>()), Int(j[1].get<long long>()),
                     Int(j[2].get<long long>())};
}

Rational rational_from_report(const json& j) { return parse_rational(j.get<std::string>()); }

SlopeValue slope_from_report(const json& j) {
  const std::string s = j.get<std::string>();
  if (s == "inf") return SlopeValue::infinity();
  return SlopeValue(parse_rational(s));
}

json make_report(const std::string& command, json parameters, json results,
                 std::vector<std::string> warnings) {
  json j;
  j["tool"] = "stabsys";
  j["version"] = kToolVersion;
  j["command"] = command;
  j["parameters"] = std::move(parameters);
  j["results"] = std::move(results);
  j["warnings"] = warnings;
  return j;
}

std::string render_report(const json& report) { return report.dump(2) + "\n"; }

namespace {

// Axis pixel positions are exact-rational affine placements rounded to
// integers, so the byte output is reproducible.
long long axis_x(const Rational& g, const Rational& lo, const Rational& hi) {
  const long long width = 1000, margin = 40;
  const Rational pos = (g - lo) / (hi - lo);
  const Rational scaled = pos * width;
  const Int rounded = (numerator(scaled) * 2 + denominator(scaled)) / (2 * denominator(scaled));
  return margin + rounded.convert_to<long long>();
}

}  // namespace

std::string plot_chambers(const ChamberScan& scan, const Rational& gamma_lo,
                          const Rational& gamma_hi) {
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1080\" height=\"160\">\n";
  svg << "<!-- stabsys " << kToolVersion << "; clipped_walls=" << scan.clipped_walls
      << " -->\n";
  for (const auto& c : scan.chambers) {
    const long long x0 = axis_x(c.lo, gamma_lo, gamma_hi);
    const long long x1 = axis_x(c.hi, gamma_lo, gamma_hi);
    svg << "<rect x=\"" << x0 << "\" y=\"60\" width=\"" << (x1 - x0)
        << "\" height=\"40\" fill=\"" << (c.stable ? "#9ecf9e" : "#e8a1a1")
        << "\"/>\n";
  }
  svg << "<line x1=\"40\" y1=\"100\" x2=\"1040\" y2=\"100\" stroke=\"black\"/>\n";
  auto endpoint_label = [&](const Rational& g) {
    const long long x = axis_x(g, gamma_lo, gamma_hi);
    svg << "<text x=\"" << x << "\" y=\"132\" font-size=\"12\" text-anchor=\"middle\">"
        << to_string(g) << "</text>\n";
  };
  endpoint_label(gamma_lo);
  endpoint_label(gamma_hi);
  for (const auto& w : scan.walls) {
    if (!w.gamma0) continue;
    const long long x = axis_x(*w.gamma0, gamma_lo, gamma_hi);
    svg << "<line x1=\"" << x << "\" y1=\"50\" x2=\"" << x
        << "\" y2=\"110\" stroke=\"black\" stroke-width=\"2\"/>\n";
    svg << "<text x=\"" << x << "\" y=\"44\" font-size=\"12\" text-anchor=\"middle\">"
        << to_string(*w.gamma0) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string walls_csv(const std::vector<WallReport>& walls) {
  std::ostringstream csv;
  csv << "gamma0,n,d,k,monotonicity,kind\n";
  for (const auto& w : walls) {
    csv << (w.gamma0 ? to_string(*w.gamma0) : "") << "," << w.pair.first.n << ","
        << w.pair.first.d << "," << w.pair.first.k << "," << to_string(w.monotonicity)
        << "," << to_string(w.kind) << "\n";
  }
  return csv.str();
}

}  // namespace stabsys
