#pragma once

#include "stabsys/bounds.hpp"
#include "stabsys/charges.hpp"
#include "stabsys/formal.hpp"
#include "stabsys/quadratic.hpp"
#include "stabsys/regions.hpp"
#include "stabsys/walls.hpp"

#include <json.hpp>

#include <string>

namespace stabsys {

inline constexpr const char* kToolVersion = "0.1.0";

/// Warning strings attached to reports whenever the relevant machinery runs.
namespace notes {
inline constexpr const char* kDaggerRowSigns =
    "dagger charge rows follow the derivation (d-coefficient t(A+p*beta), "
    "k-coefficient with (p*alpha-1)*beta); the printed form differs in sign";
inline constexpr const char* kHeadlineP =
    "p is computed as (alpha+1-u)/alpha^2; the headline (alpha-u+1)/alpha does "
    "not satisfy the six-equation system";
inline constexpr const char* kLowBetaWindow =
    "for beta < 1 the u >= 1 flag is unattainable; the t-window is the open-below "
    "interval capped at (alpha+1)/(1-beta)";
inline constexpr const char* kCliffordPrintedForm =
    "the printed alternative Clifford formula (g-1)-(h0+h1)/n disagrees with "
    "(d-2(h0-n))/n by a constant 2 under Riemann-Roch";
inline constexpr const char* kSBoundary = "parameters sit on the S-region boundary";
}  // namespace notes

using json = nlohmann::json;

json to_json(const Rational& r);
json to_json(const SlopeValue& s);
json to_json(const ClassVector& c);
json to_json(const ComplexRational& z);
json to_json(const BGCoefficients& c);
json to_json(const TWindow& w);
json to_json(const OrbitVerdict& v);
json to_json(const SupportCertificate& cert);
json to_json(const HNFiltration& hn);
json to_json(const WallReport& w);
json to_json(const ChamberScan& scan);
json to_json(const CliffordIndexResult& r);
json to_json(const ExtremalVerdict& v);

ClassVector class_from_report(const json& j);
Rational rational_from_report(const json& j);
SlopeValue slope_from_report(const json& j);

const char* to_string(Monotonicity m);
const char* to_string(WallKind k);
const char* to_string(TiltClass t);
const char* to_string(BTag t);
const char* to_string(TransferOutcome t);
const char* to_string(ExtremalTag t);

/// Report envelope: command echo, parameters, results, warnings, version.
/// Byte-deterministic for identical inputs (keys are emitted sorted).
json make_report(const std::string& command, json parameters, json results,
                 std::vector<std::string> warnings = {});

/// Serializes a report with a trailing newline; the byte-stable form used by
/// the CLI and tests.
std::string render_report(const json& report);

/// Deterministic chamber plot: one horizontal gamma axis, one labelled tick
/// per in-range wall, chambers shaded by verdict. Walls outside the range
/// are dropped from the drawing and counted in an SVG metadata comment.
std::string plot_chambers(const ChamberScan& scan, const Rational& gamma_lo,
                          const Rational& gamma_hi);

/// CSV table of a wall list: gamma0, n', d', k', monotonicity, kind.
std::string walls_csv(const std::vector<WallReport>& walls);

}  // namespace stabsys
