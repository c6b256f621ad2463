// Command-line front end: point queries, sweeps, strategy-region maps,
// high-SNR offsets, and the verification battery. All computation happens
// in linear power units; dB conversion is done here at the boundary.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hksum/hksum.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

// --out, optionally rebased by HKSUM_OUTPUT_DIR for relative paths.
class OutputTarget {
  public:
    explicit OutputTarget(const std::string& path) {
        if (path.empty()) return;
        std::filesystem::path p(path);
        if (const char* dir = std::getenv("HKSUM_OUTPUT_DIR"); dir && p.is_relative()) {
            p = std::filesystem::path(dir) / p;
        }
        file_ = std::make_unique<std::ofstream>(p);
        if (!*file_) throw std::runtime_error("cannot open output file " + p.string());
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }
    bool is_file() const { return file_ != nullptr; }

  private:
    std::unique_ptr<std::ofstream> file_;
};

double to_linear(double p, const std::string& units) {
    return units == "db" ? hksum::linear_from_db(p) : p;
}

std::vector<double> linspace(double lo, double hi, int steps) {
    std::vector<double> out;
    out.reserve(steps);
    for (int i = 0; i < steps; ++i) {
        out.push_back(steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1));
    }
    return out;
}

struct PointReport {
    hksum::RateResult sym, asym, orth, etw, rs;
    hksum::RegionLabel label;
};

PointReport compute_point(const hksum::ChannelParams& ch) {
    return {hksum::r_sym(ch), hksum::r_asym(ch), hksum::r_orth(ch),
            hksum::r_etw(ch),  hksum::r_rs(ch),  hksum::classify(ch)};
}

int cmd_rate(double a, double p_in, const std::string& units, const std::string& format) {
    const hksum::ChannelParams ch(a, to_linear(p_in, units));
    const PointReport r = compute_point(ch);
    using hksum::format_sig;
    if (format == "json") {
        json j;
        j["a"] = ch.a;
        j["p"] = ch.p;
        j["snr_db"] = hksum::db_from_linear(ch.snr());
        j["inr_db"] = hksum::db_from_linear(ch.inr());
        j["r_sym"] = r.sym.rate;
        j["lambda_sym"] = r.sym.split->lambda1;
        j["r_asym"] = r.asym.rate;
        j["lambda_asym"] = r.asym.split->lambda2;
        j["r_orth"] = r.orth.rate;
        j["r_etw"] = r.etw.rate;
        j["etw_split_clamped"] = r.etw.split_clamped;
        j["r_rs"] = r.rs.rate;
        j["rs_basis"] = hksum::scheme_name(*r.rs.basis);
        j["label"] = static_cast<int>(r.label);
        j["label_name"] = hksum::region_name(r.label);
        std::cout << j.dump(2) << '\n';
        return kExitOk;
    }
    std::cout << "a = " << format_sig(ch.a) << "  p = " << format_sig(ch.p) << " ("
              << format_sig(hksum::db_from_linear(ch.p), 6) << " dB)  INR = "
              << format_sig(hksum::db_from_linear(ch.inr()), 6) << " dB\n"
              << "R_sym   = " << format_sig(r.sym.rate)
              << "   lambda_sym  = " << format_sig(r.sym.split->lambda1) << '\n'
              << "R_asym  = " << format_sig(r.asym.rate)
              << "   lambda_asym = " << format_sig(r.asym.split->lambda2) << '\n'
              << "R_orth  = " << format_sig(r.orth.rate) << '\n'
              << "R_ETW   = " << format_sig(r.etw.rate)
              << (r.etw.split_clamped ? "   (split clamped: a*p < 1)" : "") << '\n'
              << "R_RS    = " << format_sig(r.rs.rate) << "   ("
              << hksum::scheme_name(*r.rs.basis) << ")\n"
              << "label   = " << static_cast<int>(r.label) << " (" << hksum::region_name(r.label)
              << ")\n";
    return kExitOk;
}

int cmd_sweep(double p_in, const std::string& units, double a_min, double a_max, int steps,
              bool with_ts, const std::string& out, const std::string& plot,
              const std::string& format) {
    if (steps < 1 || a_min > a_max) {
        std::cerr << "sweep: empty range (steps < 1 or a-min > a-max)\n";
        return kExitUsage;
    }
    const double p = to_linear(p_in, units);
    std::vector<std::string> header = {"a", "R_sym", "R_asym", "R_orth", "R_ETW"};
    if (with_ts) {
        header.push_back("R_TS");
        header.push_back("R_Sason");
    }
    std::vector<std::vector<double>> rows;
    for (const double a : linspace(a_min, a_max, steps)) {
        const hksum::ChannelParams ch(a, p);
        std::vector<double> row = {a, hksum::r_sym(ch).rate, hksum::r_asym(ch).rate,
                                   hksum::r_orth(ch).rate, hksum::r_etw(ch).rate};
        if (with_ts) {
            row.push_back(hksum::r_ts(ch).rate);
            row.push_back(hksum::r_sason(ch).rate);
        }
        rows.push_back(std::move(row));
    }

    OutputTarget target(out);
    if (format == "json") {
        json j = json::array();
        for (const auto& row : rows) {
            json obj;
            for (std::size_t c = 0; c < header.size(); ++c) obj[header[c]] = row[c];
            j.push_back(obj);
        }
        target.stream() << j.dump(2) << '\n';
    } else {
        hksum::csv_row(target.stream(), header);
        for (const auto& row : rows) hksum::csv_values(target.stream(), row);
    }

    if (!plot.empty()) {
        std::vector<hksum::SvgSeries> series(header.size() - 1);
        for (std::size_t c = 1; c < header.size(); ++c) {
            series[c - 1].name = header[c];
            for (const auto& row : rows) series[c - 1].points.emplace_back(row[0], row[c]);
        }
        OutputTarget svg_target(plot);
        hksum::write_svg_plot(svg_target.stream(), "sum rates at p = " + hksum::format_sig(p, 6),
                              "a", "bits/channel use", series);
    }
    return kExitOk;
}

int cmd_region(const std::string& axes, double x_min, double x_max, int x_steps, double y_min,
               double y_max, int y_steps, bool with_ts, const std::string& out,
               const std::string& format) {
    hksum::GridSpec spec;
    spec.axes = axes == "snr-inr" ? hksum::GridAxes::SnrInr : hksum::GridAxes::AP;
    spec.x_min = x_min;
    spec.x_max = x_max;
    spec.x_steps = x_steps;
    spec.y_min = y_min;
    spec.y_max = y_max;
    spec.y_steps = y_steps;
    spec.with_ts = with_ts;
    const hksum::GridScan result = hksum::scan(spec);

    long in_domain = 0;
    for (const auto& row : result.rows) {
        if (row.label != hksum::RegionLabel::OutOfDomain) ++in_domain;
    }
    if (in_domain == 0) {
        std::cerr << "region: no grid point falls inside 0 < a < 1\n";
        return kExitUsage;
    }

    OutputTarget target(out);
    std::vector<std::string> header = {"x", "y", "a", "p", "label", "R_sym", "R_asym", "R_orth"};
    if (with_ts) {
        header.push_back("ts_adv");
        header.push_back("sason_adv");
    }
    if (format == "json") {
        json j = json::array();
        for (const auto& row : result.rows) {
            json obj = {{"x", row.x},         {"y", row.y},
                        {"a", row.a},         {"p", row.p},
                        {"label", static_cast<int>(row.label)},
                        {"R_sym", row.r_sym}, {"R_asym", row.r_asym},
                        {"R_orth", row.r_orth}};
            if (with_ts) {
                obj["ts_adv"] = row.ts_adv;
                obj["sason_adv"] = row.sason_adv;
            }
            j.push_back(obj);
        }
        target.stream() << j.dump(2) << '\n';
    } else {
        hksum::csv_row(target.stream(), header);
        for (const auto& row : result.rows) {
            std::vector<double> cells = {row.x, row.y, row.a, row.p,
                                         static_cast<double>(static_cast<int>(row.label)),
                                         row.r_sym, row.r_asym, row.r_orth};
            if (with_ts) {
                cells.push_back(row.ts_adv);
                cells.push_back(row.sason_adv);
            }
            hksum::csv_values(target.stream(), cells);
        }
    }
    return kExitOk;
}

int cmd_asymptotics(double a_min, double a_max, int steps, const std::string& out,
                    const std::string& plot, const std::string& format) {
    if (steps < 1 || a_min > a_max) {
        std::cerr << "asymptotics: empty range\n";
        return kExitUsage;
    }
    using hksum::Scheme;
    const hksum::OffsetCurve curves[4] = {
        hksum::offset_curve(Scheme::Sym, a_min, a_max, steps),
        hksum::offset_curve(Scheme::Asym, a_min, a_max, steps),
        hksum::offset_curve(Scheme::Etw, a_min, a_max, steps),
        hksum::offset_curve(Scheme::Orth, a_min, a_max, steps),
    };
    std::vector<std::vector<double>> rows;
    rows.reserve(curves[0].values.size());
    for (std::size_t i = 0; i < curves[0].values.size(); ++i) {
        rows.push_back({curves[0].values[i].first, curves[0].values[i].second,
                        curves[1].values[i].second, curves[2].values[i].second,
                        curves[3].values[i].second});
    }
    const std::vector<std::string> header = {"a", "dR_sym", "dR_asym", "dR_ETW", "dR_orth"};

    OutputTarget target(out);
    if (format == "json") {
        json j = json::array();
        for (const auto& row : rows) {
            json obj;
            for (std::size_t c = 0; c < header.size(); ++c) obj[header[c]] = row[c];
            j.push_back(obj);
        }
        target.stream() << j.dump(2) << '\n';
    } else {
        hksum::csv_row(target.stream(), header);
        for (const auto& row : rows) hksum::csv_values(target.stream(), row);
    }

    // Keep the report out of the CSV byte stream.
    std::ostream& report = target.is_file() ? std::cout : std::cerr;
    report << "sym/asym crossover a = " << hksum::format_sig(hksum::crossover(Scheme::Sym, Scheme::Asym), 6)
           << '\n'
           << "sym/orth crossover a = " << hksum::format_sig(hksum::crossover(Scheme::Sym, Scheme::Orth), 6)
           << '\n';

    if (!plot.empty()) {
        std::vector<hksum::SvgSeries> series(4);
        for (std::size_t c = 1; c < header.size(); ++c) {
            series[c - 1].name = header[c];
            for (const auto& row : rows) series[c - 1].points.emplace_back(row[0], row[c]);
        }
        OutputTarget svg_target(plot);
        hksum::write_svg_plot(svg_target.stream(), "high-SNR sum-rate offsets", "a", "bits",
                              series);
    }
    return kExitOk;
}

int cmd_verify(const std::string& suite, long samples, std::uint64_t seed, int oracle_steps) {
    std::vector<hksum::SuiteResult> results;
    const auto pick = [&](long fallback) { return samples > 0 ? samples : fallback; };
    if (suite == "all") {
        results = hksum::verify_all(seed);
    } else if (suite == "dominance") {
        results.push_back(hksum::verify_dominance(seed, pick(10000)));
    } else if (suite == "monotonicity") {
        results.push_back(hksum::verify_monotonicity(seed, pick(200)));
    } else if (suite == "sym-oracle") {
        results.push_back(hksum::verify_sym_oracle(seed, pick(200)));
    } else if (suite == "asym-oracle") {
        results.push_back(hksum::verify_asym_oracle(seed, pick(200)));
    } else if (suite == "etw") {
        results.push_back(hksum::verify_etw(seed, pick(500)));
    } else if (suite == "continuity") {
        results.push_back(hksum::verify_continuity(seed, pick(200)));
    } else if (suite == "asymptote") {
        results.push_back(hksum::verify_asymptotes());
    } else if (suite == "conjecture") {
        results.push_back(hksum::verify_conjecture(seed, pick(60), oracle_steps));
    } else if (suite == "ts") {
        results.push_back(hksum::verify_ts(100.0, static_cast<int>(pick(17))));
    } else {
        std::cerr << "verify: unknown suite '" << suite << "'\n";
        return kExitUsage;
    }

    bool all_passed = true;
    for (const auto& r : results) {
        all_passed = all_passed && r.passed();
        std::cout << (r.passed() ? "[PASS] " : "[FAIL] ") << r.name << ": samples=" << r.samples
                  << " violations=" << r.violations << " worst=" << hksum::format_sig(r.worst, 6);
        if (!r.note.empty()) std::cout << "  (" << r.note << ")";
        std::cout << '\n';
    }
    return all_passed ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"optimized Han-Kobayashi sum rates for the symmetric Gaussian interference channel"};
    app.require_subcommand(1);

    std::string units = "linear";
    std::string format;
    std::string out;
    std::string plot;
    double a = 0.5;
    double p = 100.0;
    bool with_ts = false;

    auto* rate = app.add_subcommand("rate", "rates and winning strategy at one (a, p) point");
    rate->add_option("--a", a, "interference coefficient, linear, in (0,1)")->required();
    rate->add_option("--p", p, "transmit SNR")->required();
    rate->add_option("--units", units, "units for --p: linear | db")
        ->check(CLI::IsMember({"linear", "db"}));
    rate->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

    double a_min = 0.01, a_max = 0.99;
    int steps = 99;
    auto* sweep = app.add_subcommand("sweep", "rates along a at fixed p, CSV");
    sweep->add_option("--p", p, "transmit SNR")->required();
    sweep->add_option("--units", units, "units for --p: linear | db")
        ->check(CLI::IsMember({"linear", "db"}));
    sweep->add_option("--a-min", a_min, "sweep start (default 0.01)");
    sweep->add_option("--a-max", a_max, "sweep end (default 0.99)");
    sweep->add_option("--steps", steps, "sample count (default 99)");
    sweep->add_flag("--ts", with_ts, "add R_TS and R_Sason columns (slow)");
    sweep->add_option("--out", out, "output file (default stdout)");
    sweep->add_option("--plot", plot, "also write an SVG line plot");
    sweep->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    std::string axes = "a-p";
    double x_min = 0.01, x_max = 0.99, y_min = 0.0, y_max = 40.0;
    int x_steps = 99, y_steps = 41;
    auto* region = app.add_subcommand("region", "strategy-region map over a grid, CSV");
    region->add_option("--axes", axes, "a-p | snr-inr")->check(CLI::IsMember({"a-p", "snr-inr"}));
    region->add_option("--x-min", x_min, "x axis start (a, or SNR_dB in snr-inr mode)");
    region->add_option("--x-max", x_max, "x axis end");
    region->add_option("--x-steps", x_steps, "x sample count");
    region->add_option("--y-min", y_min, "y axis start (p_dB, or INR_dB in snr-inr mode)");
    region->add_option("--y-max", y_max, "y axis end");
    region->add_option("--y-steps", y_steps, "y sample count");
    region->add_flag("--ts", with_ts, "add time-sharing advantage columns (slow)");
    region->add_option("--out", out, "output file (default stdout)");
    region->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    auto* asy = app.add_subcommand("asymptotics", "high-SNR offset curves and crossovers");
    asy->add_option("--a-min", a_min, "curve start (default 0.01)");
    asy->add_option("--a-max", a_max, "curve end (default 0.99)");
    asy->add_option("--steps", steps, "sample count (default 99)");
    asy->add_option("--out", out, "output file (default stdout)");
    asy->add_option("--plot", plot, "also write an SVG line plot");
    asy->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    std::string suite = "all";
    long samples = 0;
    std::uint64_t seed = 20250810;
    int oracle_steps = 1001;
    auto* verify = app.add_subcommand("verify", "run the seeded verification suites");
    verify->add_option("--suite", suite,
                       "all | dominance | monotonicity | sym-oracle | asym-oracle | etw | "
                       "continuity | asymptote | conjecture | ts");
    verify->add_option("--samples", samples, "override the suite's sample count");
    verify->add_option("--seed", seed, "RNG seed (default 20250810)");
    verify->add_option("--oracle-steps", oracle_steps,
                       "grid steps per axis for the conjecture oracle (default 1001)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (rate->parsed()) {
            return cmd_rate(a, p, units, format.empty() ? "text" : format);
        }
        if (sweep->parsed()) {
            return cmd_sweep(p, units, a_min, a_max, steps, with_ts, out, plot,
                             format.empty() ? "csv" : format);
        }
        if (region->parsed()) {
            return cmd_region(axes, x_min, x_max, x_steps, y_min, y_max, y_steps, with_ts, out,
                              format.empty() ? "csv" : format);
        }
        if (asy->parsed()) {
            return cmd_asymptotics(a_min, a_max, steps, out, plot,
                                   format.empty() ? "csv" : format);
        }
        if (verify->parsed()) {
            return cmd_verify(suite, samples, seed, oracle_steps);
        }
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerifyFailure;
    }
    return kExitOk;
}
