#include <CLI11.hpp>

#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "vatoms/asymptotics.hpp"
#include "vatoms/scenario.hpp"

namespace fs = std::filesystem;
using namespace vatoms;

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void writeFile(const fs::path& path, const std::string& content) {
    if (path.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(path.parent_path(), ec);
        if (ec) throw IoError("cannot create directory " + path.parent_path().string());
    }
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out) throw IoError("cannot write " + path.string());
}

std::string formatEvent(const std::optional<double>& t) { return t ? format_sig(*t) : "none"; }

double factorHOf(const DensityMatrix& rho) { return reduction_factors_GH(rho).second; }

struct EvolveConfig {
    std::string state;
    std::string model;
    double tEnd = 3.0;
    double dt = 1e-3;
    int sampleEvery = 10;
    std::string outDir = "out";
    bool csv = true;
    bool states = false;
    bool plot = false;
};

void runEvolve(const EvolveConfig& cfg) {
    const DensityMatrix rho0 = make_state(cfg.state);
    const CouplingParams params = couplings(parse_model(cfg.model));
    Trajectory traj = evolve(rho0, params, cfg.tEnd, cfg.dt, cfg.sampleEvery);
    traj.analyzeAll();

    const fs::path outDir(cfg.outDir);
    if (cfg.csv) writeFile(outDir / "trajectory.csv", trajectory_csv(traj));
    if (cfg.states) {
        char name[40];
        for (size_t i = 0; i < traj.states.size(); ++i) {
            std::snprintf(name, sizeof name, "sample_%05zu.txt", i);
            writeFile(outDir / "states" / name, to_text(traj.states[i]));
        }
    }
    if (cfg.plot) {
        std::vector<Series> series(3);
        series[0].name = "N";
        series[1].name = "NR";
        series[2].name = "Nred";
        for (const EntanglementReport& r : traj.reports) {
            series[0].values.push_back(r.negativity);
            series[1].values.push_back(r.realignNegativity);
            series[2].values.push_back(r.reductionNegativity);
        }
        writeFile(outDir / "trajectory.svg",
                  render_line_chart("entanglement measures", "t (units 1/gamma)", traj.times, series));
    }

    const auto tN = detect_sign_change(traj, pt_factor_F, params);
    const auto tD = detect_sign_change(traj, factorHOf, params);
    std::cout << "tN_gamma=" << formatEvent(tN) << "\n";
    std::cout << "tD_gamma=" << formatEvent(tD) << "\n";
}

void runFigure(const std::string& which, double alpha, double separation, const std::string& outDir) {
    const DensityMatrix rho0 = horodecki_alpha(AlphaParam(alpha));
    const CouplingParams params = couplings(CouplingModel::geometric(separation));
    Trajectory traj = evolve(rho0, params, 3.0);
    traj.analyzeAll();

    std::vector<std::string> header{"t"};
    std::vector<Series> series;
    if (which == "fig1") {
        header.push_back("F");
        series.push_back({"F", {}});
        for (const auto& r : traj.reports) series[0].values.push_back(r.factorF);
    } else if (which == "fig2") {
        header.insert(header.end(), {"G", "H"});
        series.push_back({"G", {}});
        series.push_back({"H", {}});
        for (const auto& r : traj.reports) {
            series[0].values.push_back(r.factorG);
            series[1].values.push_back(r.factorH);
        }
    } else if (which == "fig3") {
        header.insert(header.end(), {"N", "Nred"});
        series.push_back({"N", {}});
        series.push_back({"Nred", {}});
        for (const auto& r : traj.reports) {
            series[0].values.push_back(r.negativity);
            series[1].values.push_back(r.reductionNegativity);
        }
    } else {
        throw Error("unknown figure '" + which + "' (expected fig1, fig2 or fig3)");
    }

    std::vector<std::vector<double>> rows;
    for (size_t i = 0; i < traj.times.size(); ++i) {
        std::vector<double> row{traj.times[i]};
        for (const Series& s : series) row.push_back(s.values[i]);
        rows.push_back(std::move(row));
    }
    const fs::path dir(outDir);
    writeFile(dir / (which + ".csv"), render_csv(header, rows));
    writeFile(dir / (which + ".svg"), render_line_chart(which, "t (units 1/gamma)", traj.times, series));
}

std::string formatComplex(Complex v) {
    if (v.imag() == 0.0) return format_sig(v.real());
    return format_sig(v.real()) + (v.imag() < 0 ? "-" : "+") + format_sig(std::abs(v.imag())) + "i";
}

void runAsymptote(const std::string& stateSpec) {
    const DensityMatrix rho0 = make_state(stateSpec);
    const AsymptoticParams p = asymptotic_params(rho0);
    const DensityMatrix as = build_asymptotic_state(p);

    std::cout << "x=" << format_sig(p.x) << "\n";
    std::cout << "y=" << format_sig(p.y) << "\n";
    std::cout << "z=" << formatComplex(p.z) << "\n";
    std::cout << "w=" << formatComplex(p.w) << "\n";
    std::cout << "v=" << formatComplex(p.v) << "\n";
    std::cout << "t=" << format_sig(p.t) << "\n";

    const double n = negativity(as);
    const double nred = reduction_negativity(as);
    std::cout << "negativity=" << format_sig(n) << "\n";
    std::cout << "reduction_negativity=" << format_sig(nred) << "\n";
    std::cout << "distillable=" << (nred > 1e-10 ? "true" : "false") << "\n";

    // Residual of the small-separation generator on the projected state;
    // nonzero when the input lies outside the z = w = v = 0 class.
    const Generator gen(couplings(CouplingModel::idealSmallR()));
    std::cout << "stationarity_residual=" << format_sig(gen.apply(as.matrix()).maxAbs()) << "\n";
}

void runScan(double aMin, double aMax, int aSteps, double rMin, double rMax, int rSteps, double tEnd,
             const std::string& outPath) {
    std::ostringstream os;
    os << "alpha,R,tN_gamma,tD_gamma\n";
    for (int i = 0; i < aSteps; ++i) {
        const double alpha = aSteps == 1 ? aMin : aMin + (aMax - aMin) * i / (aSteps - 1);
        for (int j = 0; j < rSteps; ++j) {
            const double r = rSteps == 1 ? rMin : rMin + (rMax - rMin) * j / (rSteps - 1);
            os << format_sig(alpha) << ',' << format_sig(r) << ',';
            try {
                const DensityMatrix rho0 = horodecki_alpha(AlphaParam(alpha));
                const CouplingParams params = couplings(CouplingModel::geometric(r));
                const Trajectory traj = evolve(rho0, params, tEnd);
                const auto tN = detect_sign_change(traj, pt_factor_F, params);
                const auto tD = detect_sign_change(traj, factorHOf, params);
                os << (tN ? format_sig(*tN) : "") << ',' << (tD ? format_sig(*tD) : "") << '\n';
            } catch (const std::exception&) {
                os << "error,error\n";
            }
        }
    }
    writeFile(fs::path(outPath), os.str());
}

void runCouplings(const std::string& modelSpec) {
    const CouplingParams p = couplings(parse_model(modelSpec));
    std::cout << "gamma=" << format_sig(p.gamma) << "\n";
    std::cout << "Gamma13=" << format_sig(p.Gamma13) << "\n";
    std::cout << "Gamma23=" << format_sig(p.Gamma23) << "\n";
    std::cout << "Gammavc=" << format_sig(p.Gammavc) << "\n";
    std::cout << "Omega13=" << format_sig(p.Omega13) << "\n";
    std::cout << "Omega23=" << format_sig(p.Omega23) << "\n";
    std::cout << "Omegavc=" << format_sig(p.Omegavc) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-qutrit radiative-coupling simulator: dissipative dynamics and entanglement analysis"};
    app.require_subcommand(1);

    std::function<void()> action;

    EvolveConfig ev;
    auto* evolveCmd = app.add_subcommand("evolve", "integrate the master equation and report entanglement");
    evolveCmd->set_config("--config", "", "plain key=value file with this command's options; flags win");
    evolveCmd->add_option("--state", ev.state, "initial state, e.g. horodecki:alpha=3.6")->required();
    evolveCmd->add_option("--model", ev.model, "coupling model, e.g. geometric:R=0.2")->required();
    evolveCmd->add_option("--tend", ev.tEnd, "integration time in units 1/gamma")->required();
    evolveCmd->add_option("--dt", ev.dt, "integration step (default 1e-3)");
    evolveCmd->add_option("--sample-every", ev.sampleEvery, "steps between retained samples (default 10)");
    evolveCmd->add_option("--out", ev.outDir, "output directory (default out)");
    evolveCmd->add_flag("--csv,!--no-csv", ev.csv, "write trajectory.csv (default on)");
    evolveCmd->add_flag("--states", ev.states, "dump each sampled state as text");
    evolveCmd->add_flag("--plot", ev.plot, "write an SVG line chart of the measures");
    evolveCmd->callback([&] { action = [&] { runEvolve(ev); }; });

    std::string figWhich = "fig1", figOut = "out";
    double figAlpha = 3.6, figR = 0.2;
    auto* figCmd = app.add_subcommand("figure", "emit one of the standard delayed-birth figures");
    figCmd->set_config("--config", "", "plain key=value file with this command's options; flags win");
    figCmd->add_option("--which", figWhich, "fig1 (factor F), fig2 (G and H), fig3 (N and Nred)");
    figCmd->add_option("--alpha", figAlpha, "mixing parameter (default 3.6)");
    figCmd->add_option("--R", figR, "separation (default 0.2)");
    figCmd->add_option("--out", figOut, "output directory");
    figCmd->callback([&] { action = [&] { runFigure(figWhich, figAlpha, figR, figOut); }; });

    std::string asymState;
    auto* asymCmd = app.add_subcommand("asymptote", "small-separation asymptotic state of an initial state");
    asymCmd->add_option("--state", asymState, "initial state name")->required();
    asymCmd->callback([&] { action = [&] { runAsymptote(asymState); }; });

    double aMin = 3.1, aMax = 4.0, rMin = 0.2, rMax = 0.2, scanTEnd = 3.0;
    int aSteps = 1, rSteps = 1;
    std::string scanOut = "scan.csv";
    auto* scanCmd = app.add_subcommand("scan", "map tN and tD over a grid of alpha and separation");
    scanCmd->set_config("--config", "", "plain key=value file with this command's options; flags win");
    scanCmd->add_option("--alpha-min", aMin);
    scanCmd->add_option("--alpha-max", aMax);
    scanCmd->add_option("--alpha-steps", aSteps);
    scanCmd->add_option("--r-min", rMin);
    scanCmd->add_option("--r-max", rMax);
    scanCmd->add_option("--r-steps", rSteps);
    scanCmd->add_option("--tend", scanTEnd);
    scanCmd->add_option("--out", scanOut, "output CSV path");
    scanCmd->callback([&] { action = [&] { runScan(aMin, aMax, aSteps, rMin, rMax, rSteps, scanTEnd, scanOut); }; });

    std::string couplingsModel;
    auto* coupCmd = app.add_subcommand("couplings", "print the coefficients of a coupling model");
    coupCmd->add_option("--model", couplingsModel, "model spec")->required();
    coupCmd->callback([&] { action = [&] { runCouplings(couplingsModel); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        action();
    } catch (const StepTooLargeError& e) {
        std::cerr << "integration failure: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "io failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
