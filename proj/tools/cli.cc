// Copyright 2026 The qdspin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "qdspin/analysis.h"
#include "qdspin/cavity.h"
#include "qdspin/protocols.h"
#include "qdspin/records_io.h"
#include "qdspin/verify.h"

namespace qdspin::cli {

namespace {

// Inputs this close to unit norm are renormalized with a warning.
constexpr double kNormalizeSlack = 1e-6;

std::optional<double> parse_number(std::string_view s) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
        return std::nullopt;
    }
    return v;
}

struct CavityFlags {
    double g = 1.0;
    double kappa_s = 0.0;
    double gamma = 0.1;
    double detuning = 0.0;

    CavityParams params() const {
        CavityParams p;
        p.g = g;
        p.kappa_s = kappa_s;
        p.gamma = gamma;
        p.probe_detuning = detuning;
        return p;
    }
};

void add_cavity_flags(CLI::App *cmd, CavityFlags &f, std::vector<CLI::Option *> *opts = nullptr) {
    auto *g = cmd->add_option("--g", f.g, "Coupling strength g/kappa")->capture_default_str();
    auto *ks = cmd->add_option("--kappa-s", f.kappa_s, "Side leakage kappa_s/kappa")->capture_default_str();
    auto *gm = cmd->add_option("--gamma", f.gamma, "Dipole decay gamma/kappa")->capture_default_str();
    auto *dt = cmd->add_option("--detuning", f.detuning, "Probe detuning (omega-omega0)/kappa")->capture_default_str();
    if (opts) {
        *opts = {g, ks, gm, dt};
    }
}

std::string format_state(const StateVector &s) {
    static const char *kNames[] = {"uu", "ud", "du", "dd"};
    std::string out;
    for (size_t k = 0; k < s.dimension(); k++) {
        out += (k ? " " : "") + std::string(kNames[k]) + "=" + format_complex6(s.amplitude(k));
    }
    return out;
}

void print_coefficients(std::ostream &out, const ScatterCoefficients &c) {
    out << "r  = " << format_complex6(c.r) << "\n";
    out << "t  = " << format_complex6(c.t) << "\n";
    out << "r0 = " << format_complex6(c.r0) << "\n";
    out << "t0 = " << format_complex6(c.t0) << "\n";
}

int cmd_coeffs(const CavityFlags &flags, std::ostream &out, std::ostream &err) {
    ScatterCoefficients c;
    try {
        c = scatter_coefficients(flags.params());
    } catch (const std::domain_error &e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    }
    print_coefficients(out, c);
    char buf[96];
    std::snprintf(buf, sizeof(buf), "|r|^2+|t|^2 = %.6g\n|r0|^2+|t0|^2 = %.6g\n", c.hot_power(), c.cold_power());
    out << buf;
    return kOk;
}

std::optional<Spinor> checked_spinor(const std::string &name, const std::string &text, std::ostream &err,
                                     int *code) {
    auto s = parse_spinor(text);
    if (!s) {
        err << "error: " << name << " must look like re:im,re:im\n";
        *code = kUsage;
        return std::nullopt;
    }
    double n = s->norm();
    if (std::abs(n - 1) > kNormalizeSlack || n == 0) {
        err << "error: " << name << " has norm " << format_sig9(n) << "; expected 1\n";
        *code = kInvalidInput;
        return std::nullopt;
    }
    if (std::abs(n - 1) > kExactTol) {
        err << "warning: " << name << " renormalized (norm was " << format_sig9(n) << ")\n";
        *s /= n;
    }
    return s;
}

struct RunFlags {
    std::string protocol;
    std::string spin1 = "1:0,0:0";
    std::string spin2 = "1:0,0:0";
    bool ideal = false;
    bool trace = false;
    CavityFlags cavity;
};

int cmd_run(const RunFlags &flags, std::ostream &out, std::ostream &err) {
    auto protocol = parse_protocol(flags.protocol);
    if (!protocol) {
        err << "error: --protocol must be phase-gate or cnot\n";
        return kUsage;
    }
    int code = kOk;
    auto s1 = checked_spinor("--spin1", flags.spin1, err, &code);
    if (!s1) return code;
    auto s2 = checked_spinor("--spin2", flags.spin2, err, &code);
    if (!s2) return code;

    ScatterCoefficients coeffs = ScatterCoefficients::ideal();
    if (!flags.ideal) {
        try {
            coeffs = scatter_coefficients(flags.cavity.params());
        } catch (const std::domain_error &e) {
            err << "error: " << e.what() << "\n";
            return kInvalidInput;
        }
    }

    auto run = run_protocol(*protocol, *s1, *s2, Hardware::from(coeffs), flags.trace);
    out << "protocol: " << protocol_name(*protocol) << "\n";
    if (flags.ideal) {
        out << "cavity: ideal\n";
    } else {
        out << "cavity: g=" << flags.cavity.g << " kappa_s=" << flags.cavity.kappa_s
            << " gamma=" << flags.cavity.gamma << " detuning=" << flags.cavity.detuning << "\n";
        print_coefficients(out, coeffs);
    }
    if (flags.trace) {
        for (const auto &stage : run.trace) {
            out << "stage " << stage.name << ": " << stage.state.str() << "\n";
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%-8s %-12s %-12s %-11s %s\n", "pattern", "raw_prob", "cond_prob", "correction",
                  "corrected_state");
    out << buf;
    for (const auto &o : run.outcomes) {
        std::snprintf(buf, sizeof(buf), "%-8s %-12.6g %-12.6g %-11s ", o.pattern.c_str(), o.raw_probability,
                      o.conditioned_probability, correction_str(o.correction).c_str());
        out << buf << format_state(o.corrected) << "\n";
    }
    std::snprintf(buf, sizeof(buf), "efficiency: %.6g\n", run.efficiency);
    out << buf;
    return kOk;
}

struct SweepFlags {
    std::string protocol;
    double g_min = 0.1;
    double g_max = 2.5;
    long g_steps = 49;
    std::string kappa_s = "0";
    std::string gamma = "0.1";
    std::string detuning = "0";
    long samples = static_cast<long>(kDefaultSamples);
    uint64_t seed = kDefaultSeed;
    std::string out;
    std::string format = "csv";
    unsigned workers = 0;
};

int cmd_sweep(const SweepFlags &flags, std::ostream &out, std::ostream &err) {
    auto protocol = parse_protocol(flags.protocol);
    if (!protocol) {
        err << "error: --protocol must be phase-gate or cnot\n";
        return kUsage;
    }
    if (flags.g_steps <= 0) {
        err << "error: --g-steps must be positive\n";
        return kUsage;
    }
    if (flags.samples <= 0) {
        err << "error: --samples must be positive\n";
        return kUsage;
    }
    if (flags.format != "csv" && flags.format != "json") {
        err << "error: --format must be csv or json\n";
        return kUsage;
    }
    SweepGrid grid;
    grid.g = linspace(flags.g_min, flags.g_max, static_cast<size_t>(flags.g_steps));
    struct ListFlag {
        const char *name;
        const std::string *text;
        std::vector<double> *dst;
    };
    for (const auto &[name, text, dst] : {ListFlag{"--kappa-s", &flags.kappa_s, &grid.kappa_s},
                                          ListFlag{"--gamma", &flags.gamma, &grid.gamma},
                                          ListFlag{"--detuning", &flags.detuning, &grid.detuning}}) {
        auto values = parse_value_list(*text);
        if (!values) {
            err << "error: " << name << " must be a comma list or lo/hi/steps\n";
            return kUsage;
        }
        *dst = std::move(*values);
    }

    std::vector<SweepRecord> records;
    try {
        records = sweep(*protocol, grid, static_cast<size_t>(flags.samples), flags.seed, flags.workers);
    } catch (const std::domain_error &e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    }

    const std::string text = flags.format == "csv" ? records_to_csv(records) : records_to_json(records);
    std::ofstream file(flags.out, std::ios::binary | std::ios::trunc);
    if (!file) {
        err << "error: cannot open " << flags.out << " for writing\n";
        return kIoError;
    }
    file << text;
    file.close();
    if (!file) {
        err << "error: failed writing " << flags.out << "\n";
        return kIoError;
    }
    out << "wrote " << records.size() << " records to " << flags.out << "\n";
    return kOk;
}

int cmd_verify(const std::string &target_name, std::ostream &out, std::ostream &err) {
    auto target = parse_verify_target(target_name);
    if (!target) {
        err << "error: --protocol must be phase-gate, cnot or all\n";
        return kUsage;
    }
    auto report = verify(*target);
    out << report.str();
    out << "verify: " << (report.passed() ? "PASS" : "FAIL") << "\n";
    return report.passed() ? kOk : kVerifyFailed;
}

}  // namespace

std::optional<Spinor> parse_spinor(std::string_view text) {
    size_t comma = text.find(',');
    if (comma == std::string_view::npos) {
        return std::nullopt;
    }
    Spinor s;
    std::string_view parts[2] = {text.substr(0, comma), text.substr(comma + 1)};
    for (int k = 0; k < 2; k++) {
        size_t colon = parts[k].find(':');
        if (colon == std::string_view::npos) {
            return std::nullopt;
        }
        auto re = parse_number(parts[k].substr(0, colon));
        auto im = parse_number(parts[k].substr(colon + 1));
        if (!re || !im) {
            return std::nullopt;
        }
        s[k] = Complex(*re, *im);
    }
    return s;
}

std::optional<std::vector<double>> parse_value_list(std::string_view text) {
    std::vector<double> out;
    if (text.find('/') != std::string_view::npos) {
        size_t a = text.find('/');
        size_t b = text.find('/', a + 1);
        if (b == std::string_view::npos) {
            return std::nullopt;
        }
        auto lo = parse_number(text.substr(0, a));
        auto hi = parse_number(text.substr(a + 1, b - a - 1));
        auto steps_text = text.substr(b + 1);
        size_t steps = 0;
        auto [ptr, ec] = std::from_chars(steps_text.data(), steps_text.data() + steps_text.size(), steps);
        if (!lo || !hi || ec != std::errc() || ptr != steps_text.data() + steps_text.size() || steps == 0) {
            return std::nullopt;
        }
        return linspace(*lo, *hi, steps);
    }
    size_t start = 0;
    while (true) {
        size_t pos = text.find(',', start);
        auto v = parse_number(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
        if (!v) {
            return std::nullopt;
        }
        out.push_back(*v);
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}

std::string format_complex6(Complex c) {
    char buf[64];
    double re = c.real() == 0 ? 0.0 : c.real();
    double im = c.imag() == 0 ? 0.0 : c.imag();
    std::snprintf(buf, sizeof(buf), "%.6g%c%.6gi", re, im < 0 ? '-' : '+', std::abs(im));
    return buf;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Spin-photon gate simulator for quantum-dot microcavities", "qdspin"};
    app.require_subcommand(1);

    CavityFlags coeff_flags;
    auto *coeffs = app.add_subcommand("coeffs", "Print hot and cold cavity reflection/transmission coefficients");
    add_cavity_flags(coeffs, coeff_flags);

    RunFlags run_flags;
    auto *run_cmd = app.add_subcommand("run", "Run one protocol and print the heralded outcome table");
    run_cmd->add_option("--protocol", run_flags.protocol, "phase-gate or cnot")->required();
    run_cmd->add_option("--spin1", run_flags.spin1, "Spin 1 as re:im,re:im")->capture_default_str();
    run_cmd->add_option("--spin2", run_flags.spin2, "Spin 2 as re:im,re:im")->capture_default_str();
    auto *ideal = run_cmd->add_flag("--ideal", run_flags.ideal, "Use the lossless strong-coupling limit");
    run_cmd->add_flag("--trace", run_flags.trace, "Print the state after every optical element");
    std::vector<CLI::Option *> cavity_opts;
    add_cavity_flags(run_cmd, run_flags.cavity, &cavity_opts);
    for (auto *o : cavity_opts) {
        ideal->excludes(o);
    }

    SweepFlags sweep_flags;
    auto *sweep_cmd = app.add_subcommand("sweep", "Average fidelity and efficiency over a parameter grid");
    sweep_cmd->add_option("--protocol", sweep_flags.protocol, "phase-gate or cnot")->required();
    sweep_cmd->add_option("--g-min", sweep_flags.g_min)->capture_default_str();
    sweep_cmd->add_option("--g-max", sweep_flags.g_max)->capture_default_str();
    sweep_cmd->add_option("--g-steps", sweep_flags.g_steps, "Number of g points")->capture_default_str();
    sweep_cmd->add_option("--kappa-s", sweep_flags.kappa_s, "Comma list or lo/hi/steps")->capture_default_str();
    sweep_cmd->add_option("--gamma", sweep_flags.gamma, "Comma list or lo/hi/steps")->capture_default_str();
    sweep_cmd->add_option("--detuning", sweep_flags.detuning, "Comma list or lo/hi/steps")->capture_default_str();
    sweep_cmd->add_option("--samples", sweep_flags.samples, "Haar samples per grid point")->capture_default_str();
    sweep_cmd->add_option("--seed", sweep_flags.seed)->capture_default_str();
    sweep_cmd->add_option("--out", sweep_flags.out, "Output file")->required();
    sweep_cmd->add_option("--format", sweep_flags.format, "csv or json")->capture_default_str();
    sweep_cmd->add_option("--workers", sweep_flags.workers, "Worker threads (0 = QDSPIN_WORKERS or all cores)");

    std::string verify_target = "all";
    auto *verify_cmd = app.add_subcommand("verify", "Run the ideal-case oracle checks");
    verify_cmd->add_option("--protocol", verify_target, "phase-gate, cnot or all")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::CallForAllHelp &e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        err << app.help();
        return kUsage;
    }

    if (coeffs->parsed()) return cmd_coeffs(coeff_flags, out, err);
    if (run_cmd->parsed()) return cmd_run(run_flags, out, err);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep_flags, out, err);
    return cmd_verify(verify_target, out, err);
}

}  // namespace qdspin::cli
