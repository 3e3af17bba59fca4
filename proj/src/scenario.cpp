#include "vatoms/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace vatoms {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

double parseNumber(const std::string& s, const char* what) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0') throw Error(std::string("could not parse ") + what + ": '" + s + "'");
    return v;
}

// Accepts "name", "name=value" prefixes like "alpha=3.6" or the Greek
// spelling of alpha.
double parseTaggedNumber(std::string arg, const char* what) {
    const auto eq = arg.find('=');
    if (eq != std::string::npos) arg = arg.substr(eq + 1);
    return parseNumber(arg, what);
}

}  // namespace

DensityMatrix make_state(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string head = lower(colon == std::string::npos ? spec : spec.substr(0, colon));
    const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);

    if (head == "psi0") return psi0();
    if (head == "pplus") return p_plus();
    if (head == "pminus") return p_minus();
    if (head == "horodecki") {
        if (arg.empty()) throw Error("horodecki state needs a mixing parameter, e.g. horodecki:alpha=3.6");
        return horodecki_alpha(AlphaParam(parseTaggedNumber(arg, "alpha")));
    }
    if (head == "basis") {
        if (arg.empty()) throw Error("basis state needs a level, e.g. basis:9");
        return basis_state(static_cast<int>(parseNumber(arg, "basis level")));
    }
    if (head == "diag") {
        std::array<double, 9> p{};
        std::stringstream ss(arg);
        std::string cell;
        int i = 0;
        while (std::getline(ss, cell, ',')) {
            if (i >= 9) throw Error("diag state needs exactly nine probabilities");
            p[i++] = parseNumber(cell, "probability");
        }
        if (i != 9) throw Error("diag state needs exactly nine probabilities");
        return diagonal_state(p);
    }
    throw Error("unknown state '" + spec + "'");
}

CouplingModel parse_model(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string head = lower(colon == std::string::npos ? spec : spec.substr(0, colon));
    const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);

    if (head == "independent") return CouplingModel::independent();
    if (head == "idealsmallr") {
        if (arg.empty()) return CouplingModel::idealSmallR();
        return CouplingModel::idealSmallR(parseTaggedNumber(arg, "omega"));
    }
    if (head == "geometric") {
        if (arg.empty()) throw Error("geometric model needs a separation, e.g. geometric:R=0.2");
        return CouplingModel::geometric(parseTaggedNumber(arg, "separation"));
    }
    throw Error("unknown coupling model '" + spec + "'");
}

std::string format_sig(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

double roundtrip_sig(double v) { return std::strtod(format_sig(v).c_str(), nullptr); }

std::string render_csv(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows) {
    std::ostringstream os;
    for (size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
    os << '\n';
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_sig(row[i]);
        os << '\n';
    }
    return os.str();
}

std::pair<std::vector<std::string>, std::vector<std::vector<double>>> parse_csv(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
    bool first = true;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        if (first) {
            while (std::getline(ss, cell, ',')) header.push_back(cell);
            first = false;
            continue;
        }
        std::vector<double> row;
        while (std::getline(ss, cell, ',')) row.push_back(parseNumber(cell, "csv cell"));
        rows.push_back(std::move(row));
    }
    return {header, rows};
}

std::string trajectory_csv(const Trajectory& traj) {
    if (!traj.analyzed()) throw Error("trajectory has no entanglement reports; call analyzeAll first");
    std::vector<std::vector<double>> rows;
    rows.reserve(traj.times.size());
    for (size_t i = 0; i < traj.times.size(); ++i) {
        const EntanglementReport& r = traj.reports[i];
        rows.push_back({traj.times[i], r.negativity, r.realignNegativity, r.reductionNegativity,
                        r.isPPT ? 1.0 : 0.0, r.distillableByReduction ? 1.0 : 0.0, r.factorF, r.factorG,
                        r.factorH});
    }
    return render_csv({"t", "N", "NR", "Nred", "isPPT", "distillable", "F", "G", "H"}, rows);
}

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string fmtCoord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string fmtTick(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

std::string render_line_chart(const std::string& title, const std::string& xLabel,
                              const std::vector<double>& xRaw, const std::vector<Series>& seriesRaw) {
    std::vector<double> x(xRaw.size());
    std::transform(xRaw.begin(), xRaw.end(), x.begin(), roundtrip_sig);
    std::vector<Series> series = seriesRaw;
    for (Series& s : series)
        std::transform(s.values.begin(), s.values.end(), s.values.begin(), roundtrip_sig);

    const double width = 880, height = 520;
    const double left = 70, right = width - 160, top = 44, bottom = height - 52;

    double xmin = x.empty() ? 0.0 : *std::min_element(x.begin(), x.end());
    double xmax = x.empty() ? 1.0 : *std::max_element(x.begin(), x.end());
    double ymin = 0.0, ymax = 1.0;
    bool haveY = false;
    for (const Series& s : series)
        for (double v : s.values) {
            if (!haveY) {
                ymin = ymax = v;
                haveY = true;
            } else {
                ymin = std::min(ymin, v);
                ymax = std::max(ymax, v);
            }
        }
    if (xmax <= xmin) xmax = xmin + 1.0;
    if (ymax <= ymin) {
        ymin -= 1.0;
        ymax += 1.0;
    }
    const double pad = 0.05 * (ymax - ymin);
    ymin -= pad;
    ymax += pad;

    const auto px = [&](double v) { return left + (v - xmin) / (xmax - xmin) * (right - left); };
    const auto py = [&](double v) { return bottom - (v - ymin) / (ymax - ymin) * (bottom - top); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << fmtCoord((left + right) / 2) << "\" y=\"24\" text-anchor=\"middle\" "
          "font-family=\"sans-serif\" font-size=\"16\">"
       << title << "</text>\n";

    const int ticks = 6;
    os << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333\">\n";
    for (int i = 0; i <= ticks; ++i) {
        const double tx = xmin + (xmax - xmin) * i / ticks;
        const double gx = px(tx);
        os << "<line x1=\"" << fmtCoord(gx) << "\" y1=\"" << fmtCoord(top) << "\" x2=\"" << fmtCoord(gx)
           << "\" y2=\"" << fmtCoord(bottom) << "\" stroke=\"#ddd\"/>\n";
        os << "<text x=\"" << fmtCoord(gx) << "\" y=\"" << fmtCoord(bottom + 16)
           << "\" text-anchor=\"middle\">" << fmtTick(tx) << "</text>\n";
        const double ty = ymin + (ymax - ymin) * i / ticks;
        const double gy = py(ty);
        os << "<line x1=\"" << fmtCoord(left) << "\" y1=\"" << fmtCoord(gy) << "\" x2=\"" << fmtCoord(right)
           << "\" y2=\"" << fmtCoord(gy) << "\" stroke=\"#ddd\"/>\n";
        os << "<text x=\"" << fmtCoord(left - 6) << "\" y=\"" << fmtCoord(gy + 4)
           << "\" text-anchor=\"end\">" << fmtTick(ty) << "</text>\n";
    }
    os << "</g>\n";

    os << "<line x1=\"" << fmtCoord(left) << "\" y1=\"" << fmtCoord(bottom) << "\" x2=\"" << fmtCoord(right)
       << "\" y2=\"" << fmtCoord(bottom) << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << fmtCoord(left) << "\" y1=\"" << fmtCoord(top) << "\" x2=\"" << fmtCoord(left)
       << "\" y2=\"" << fmtCoord(bottom) << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << fmtCoord((left + right) / 2) << "\" y=\"" << fmtCoord(height - 14)
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" << xLabel << "</text>\n";

    for (size_t si = 0; si < series.size(); ++si) {
        const char* color = kPalette[si % (sizeof kPalette / sizeof kPalette[0])];
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.6\" points=\"";
        for (size_t i = 0; i < x.size() && i < series[si].values.size(); ++i) {
            if (i) os << ' ';
            os << fmtCoord(px(x[i])) << ',' << fmtCoord(py(series[si].values[i]));
        }
        os << "\"/>\n";
        const double ly = top + 18.0 * static_cast<double>(si);
        os << "<line x1=\"" << fmtCoord(right + 14) << "\" y1=\"" << fmtCoord(ly) << "\" x2=\""
           << fmtCoord(right + 42) << "\" y2=\"" << fmtCoord(ly) << "\" stroke=\"" << color
           << "\" stroke-width=\"1.6\"/>\n";
        os << "<text x=\"" << fmtCoord(right + 48) << "\" y=\"" << fmtCoord(ly + 4)
           << "\" font-family=\"sans-serif\" font-size=\"12\">" << series[si].name << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace vatoms
