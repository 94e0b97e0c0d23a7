#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "kgring/cli.hpp"
#include "kgring/errors.hpp"

namespace {

using kgring::cli::Format;
using kgring::cli::Mode;
using kgring::cli::Range;
using kgring::cli::RunConfig;

/// Parse "k" or "lo..hi" into an inclusive range.
bool parse_range(const std::string& text, Range& out) {
    const auto pos = text.find("..");
    try {
        if (pos == std::string::npos) {
            out.lo = out.hi = std::stoi(text);
        } else {
            out.lo = std::stoi(text.substr(0, pos));
            out.hi = std::stoi(text.substr(pos + 2));
        }
    } catch (const std::exception&) {
        return false;
    }
    return out.lo >= 0 && out.hi >= out.lo;
}

int write_output(const RunConfig& cfg, const std::string& payload) {
    if (cfg.out.empty()) {
        std::cout << payload;
        return 0;
    }
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open output file '" << cfg.out << "'\n";
        return 1;
    }
    file << payload;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bound-state spectra and wavefunctions for a spin-0 particle in a "
                 "D-dimensional ring-shaped Kratzer potential (equal scalar/vector coupling)"};

    RunConfig cfg;
    std::string n_text = "0", ntheta_text = "0", m_text = "0";
    std::string mode_text = "spectrum", format_text = "csv";
    double coulomb_A = 0.0;

    app.add_option("--mu", cfg.mu, "Rest mass (natural units)")->capture_default_str();
    app.add_option("--a0", cfg.a0, "Dissociation energy")->capture_default_str();
    app.add_option("--r0", cfg.r0, "Equilibrium internuclear distance")->capture_default_str();
    app.add_option("--C", cfg.C, "Ring-shape strength")->capture_default_str();
    app.add_option("--D", cfg.D, "Spatial dimension (integer >= 2)")->capture_default_str();
    app.add_option("--n", n_text, "Radial quantum number, single value or lo..hi")
        ->capture_default_str();
    app.add_option("--ntheta", ntheta_text, "Polar quantum number, single value or lo..hi")
        ->capture_default_str();
    app.add_option("--m", m_text, "Azimuthal quantum number magnitude, single value or lo..hi")
        ->capture_default_str();
    app.add_option("--mode", mode_text, "spectrum | wavefunction | verify | limits")
        ->capture_default_str();
    app.add_option("--out", cfg.out, "Output path (default: stdout)");
    app.add_option("--format", format_text, "csv | json")->capture_default_str();
    auto* coulomb_opt = app.add_option(
        "--coulomb", coulomb_A,
        "Coulomb strength A: switch to the B = 0 closed-form channel with l = ntheta + m");
    app.add_option("--grid", cfg.grid, "Matrix-oracle grid size N")->capture_default_str();
    app.add_option("--rmax", cfg.rmax, "Matrix-oracle box radius")->capture_default_str();
    app.add_option("--samples", cfg.samples, "Wavefunction sample count")->capture_default_str();
    app.add_option("--coord", cfg.coord, "Wavefunction coordinate: r | t")->capture_default_str();
    app.add_flag("--strict", cfg.strict, "Exit 3 when any requested state is infeasible");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (!parse_range(n_text, cfg.n)) {
        std::cerr << "error: --n must be a nonnegative value or lo..hi range\n";
        return 1;
    }
    if (!parse_range(ntheta_text, cfg.ntheta)) {
        std::cerr << "error: --ntheta must be a nonnegative value or lo..hi range\n";
        return 1;
    }
    if (!parse_range(m_text, cfg.m)) {
        std::cerr << "error: --m must be a nonnegative value or lo..hi range\n";
        return 1;
    }
    if (mode_text == "spectrum")
        cfg.mode = Mode::spectrum;
    else if (mode_text == "wavefunction")
        cfg.mode = Mode::wavefunction;
    else if (mode_text == "verify")
        cfg.mode = Mode::verify;
    else if (mode_text == "limits")
        cfg.mode = Mode::limits;
    else {
        std::cerr << "error: --mode must be one of spectrum|wavefunction|verify|limits\n";
        return 1;
    }
    if (format_text == "csv")
        cfg.format = Format::csv;
    else if (format_text == "json")
        cfg.format = Format::json;
    else {
        std::cerr << "error: --format must be csv or json\n";
        return 1;
    }
    if (coulomb_opt->count() > 0) {
        if (!(coulomb_A > 0.0)) {
            std::cerr << "error: --coulomb requires A > 0\n";
            return 1;
        }
        cfg.coulomb_A = coulomb_A;
    }
    if (cfg.coord != 'r' && cfg.coord != 't') {
        std::cerr << "error: --coord must be r or t\n";
        return 1;
    }
    if (cfg.samples < 2) {
        std::cerr << "error: --samples must be >= 2\n";
        return 1;
    }
    try {
        (void)cfg.params();
    } catch (const kgring::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    if (cfg.mode == Mode::verify) {
        if (cfg.grid < 200) {
            std::cerr << "error: --grid must be >= 200 in verify mode\n";
            return 1;
        }
        if (cfg.rmax < 20.0 * cfg.r0) {
            std::cerr << "error: --rmax must be >= 20*r0 in verify mode\n";
            return 1;
        }
    }

    try {
        switch (cfg.mode) {
        case Mode::spectrum: {
            const auto rows = kgring::cli::cmd_spectrum(cfg);
            const int rc = write_output(cfg, cfg.format == Format::csv
                                                 ? kgring::cli::to_csv(rows)
                                                 : kgring::cli::to_json(rows));
            if (rc != 0) return rc;
            if (cfg.strict && kgring::cli::any_infeasible(rows)) return 3;
            return 0;
        }
        case Mode::wavefunction: {
            const auto rows = kgring::cli::cmd_wavefunction(cfg);
            return write_output(cfg, cfg.format == Format::csv ? kgring::cli::to_csv(rows)
                                                               : kgring::cli::to_json(rows));
        }
        case Mode::verify: {
            const auto rows = kgring::cli::cmd_verify(cfg);
            const int rc = write_output(cfg, cfg.format == Format::csv
                                                 ? kgring::cli::to_csv(rows)
                                                 : kgring::cli::to_json(rows));
            if (rc != 0) return rc;
            return kgring::cli::all_pass(rows) ? 0 : 2;
        }
        case Mode::limits: {
            const auto rows = kgring::cli::cmd_limits(cfg);
            return write_output(cfg, cfg.format == Format::csv ? kgring::cli::to_csv(rows)
                                                               : kgring::cli::to_json(rows));
        }
        }
    } catch (const kgring::NoBoundState& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const kgring::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
