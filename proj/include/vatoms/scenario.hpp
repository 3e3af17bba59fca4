#pragma once

#include <string>
#include <vector>

#include "vatoms/dynamics.hpp"
#include "vatoms/states.hpp"

namespace vatoms {

/// Resolves a catalog name: "psi0", "pplus", "pminus", "horodecki:alpha=3.6"
/// (bare "horodecki:3.6" and the Greek-letter spelling also accepted),
/// "diag:p1,...,p9", "basis:k". Throws Error for unknown names.
DensityMatrix make_state(const std::string& spec);

/// Parses "independent", "idealsmallr[:omega=V]", "geometric:R=V" (bare
/// "geometric:V" accepted). Case-insensitive in the model name.
CouplingModel parse_model(const std::string& spec);

/// Decimal formatting used by every text output: 12 significant digits,
/// '.' decimal separator.
std::string format_sig(double v);

/// format_sig followed by parsing; the fixed point of the text round trip.
double roundtrip_sig(double v);

struct Series {
    std::string name;
    std::vector<double> values;
};

/// CSV with a header row; every numeric cell goes through format_sig.
std::string render_csv(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows);

/// Self-contained SVG line chart with linear axes and a legend. Values are
/// round-tripped through format_sig first, so rendering from parsed CSV text
/// reproduces the file byte for byte.
std::string render_line_chart(const std::string& title, const std::string& xLabel,
                              const std::vector<double>& x, const std::vector<Series>& series);

/// Parses a render_csv-style document back into header + numeric columns.
std::pair<std::vector<std::string>, std::vector<std::vector<double>>> parse_csv(const std::string& text);

/// Trajectory CSV "t,N,NR,Nred,isPPT,distillable,F,G,H" (flag columns 0/1).
/// The trajectory must already be analyzed.
std::string trajectory_csv(const Trajectory& traj);

}  // namespace vatoms
