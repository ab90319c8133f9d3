#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>

#include "CLI11.hpp"

#include <pdmosc/checks.hpp>
#include <pdmosc/errors.hpp>

#include "commands.hpp"

using namespace pdmosc::cli;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;
constexpr int exit_domain = 3;

std::size_t grid_points_from_env()
{
    const char* v = std::getenv("PDM_OSC_GRID_POINTS");
    if (!v || !*v)
        return 4001;
    char* end = nullptr;
    const long long n = std::strtoll(v, &end, 10);
    if (*end != '\0' || n < 16 || n > 20'000'000)
        throw UsageError("PDM_OSC_GRID_POINTS must be an integer in [16, 20000000], got '" + std::string(v) + "'");
    return static_cast<std::size_t>(n);
}

struct Sub {
    CLI::App* app;
    RunConfig cfg;
    std::function<Table(const RunConfig&)> build;
    std::string svg_x, svg_y, svg_group;
    std::string format = "csv";
};

void add_output(Sub& s, bool svg)
{
    s.app->add_option("--out", s.cfg.output_path, "output file, - for stdout")->capture_default_str();
    s.app->add_option("--format", s.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    if (svg)
        s.app->add_option("--svg", s.cfg.svg_path, "also write a polyline SVG of " + s.svg_y + " vs " + s.svg_x);
}

void add_gamma(Sub& s)
{
    s.app->add_option("--gamma-sigma0", s.cfg.gamma_sigma0, "deformation gamma sigma0")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
}

void add_alpha(Sub& s)
{
    auto* re = s.app->add_option("--alpha-re", s.cfg.alpha_re, "Re alpha at t = 0")->capture_default_str();
    auto* im = s.app->add_option("--alpha-im", s.cfg.alpha_im, "Im alpha at t = 0")->capture_default_str();
    auto* ab = s.app->add_option("--alpha-abs", s.cfg.alpha_abs, "real alpha = |alpha|; excludes --alpha-re/--alpha-im")
                   ->check(CLI::NonNegativeNumber);
    ab->excludes(re)->excludes(im);
}

void add_time(Sub& s)
{
    s.app->add_option("--t-end", s.cfg.t_end, "end time in units of tau0 = 2 pi / omega0")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    s.app->add_option("--samples", s.cfg.samples, "number of time samples, endpoints included")
        ->check(CLI::Range(2, 10'000'000))
        ->capture_default_str();
}

int write_result(const Sub& s, const Table& t)
{
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (s.cfg.output_path != "-") {
        file.open(s.cfg.output_path, std::ios::binary);
        if (!file) {
            std::cerr << "pdmosc: cannot open " << s.cfg.output_path << " for writing\n";
            return exit_failure;
        }
        os = &file;
    }
    if (s.cfg.format == Format::Csv)
        write_csv(*os, t);
    else
        write_json(*os, t);
    if (!s.cfg.svg_path.empty()) {
        std::ofstream svg(s.cfg.svg_path, std::ios::binary);
        if (!svg) {
            std::cerr << "pdmosc: cannot open " << s.cfg.svg_path << " for writing\n";
            return exit_failure;
        }
        write_svg(svg, t, s.svg_x, s.svg_y, s.svg_group);
    }
    os->flush();
    return *os ? exit_ok : exit_failure;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Deformed (position-dependent mass) harmonic oscillator"};
    app.set_version_flag("--version", PDMOSC_VERSION);
    app.require_subcommand(1);

    std::vector<std::unique_ptr<Sub>> subs;
    auto add = [&](const char* name, const char* help, std::function<Table(const RunConfig&)> build, std::string sx,
                   std::string sy, std::string sg = "") {
        auto s = std::make_unique<Sub>(Sub{app.add_subcommand(name, help), RunConfig{}, std::move(build), sx, sy, sg});
        s->cfg.command = name;
        subs.push_back(std::move(s));
        return subs.back().get();
    };

    {
        auto* s = add("spectrum", "closed-form energies E_n", spectrum_table, "n", "energy_hbar_omega0");
        add_gamma(*s);
        s->app->add_option("--n", s->cfg.n, "highest level (default min(5, n_max))")->check(CLI::NonNegativeNumber);
        add_output(*s, true);
    }
    {
        auto* s = add("eigenfunction", "psi_n on the default grid", eigenfunction_table, "x_sigma0", "psi");
        s->cfg.n = 0;
        add_gamma(*s);
        s->app->add_option("--n", s->cfg.n, "level")->check(CLI::NonNegativeNumber)->capture_default_str();
        add_output(*s, true);
    }
    {
        auto* s = add("classical", "closed-form classical trajectory", classical_table, "t_tau0", "x_sigma0");
        add_gamma(*s);
        s->app->add_option("--amplitude", s->cfg.amplitude, "amplitude A in sigma0")
            ->check(CLI::NonNegativeNumber)
            ->capture_default_str();
        add_time(*s);
        add_output(*s, true);
    }
    {
        auto* s = add("coherent-evolve", "coherent-state label, moments and uncertainties over time", coherent_table,
                      "t_tau0", "x_mean");
        add_gamma(*s);
        add_alpha(*s);
        add_time(*s);
        add_output(*s, true);
    }
    {
        auto* s = add("phase-space", "<x>, <p>, <Pi> of the evolving coherent state", phase_space_table, "x_mean",
                      "p_mean");
        add_gamma(*s);
        add_alpha(*s);
        add_time(*s);
        add_output(*s, true);
    }
    {
        auto* s = add("gup-surface", "uncertainties over a square of alpha values", gup_surface_table, "", "");
        s->cfg.samples = 41;
        add_gamma(*s);
        s->app->add_option("--samples", s->cfg.samples, "cells per side")
            ->check(CLI::Range(2, 100'000))
            ->capture_default_str();
        s->app->add_option("--extent", s->cfg.extent, "half width of the alpha square")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        add_output(*s, false);
    }
    {
        auto* s = add("uncertainty-series", "dx, dp, dPi of the evolving coherent state", uncertainty_table, "t_tau0",
                      "dx_dpi");
        add_gamma(*s);
        add_alpha(*s);
        add_time(*s);
        add_output(*s, true);
    }
    {
        auto* s = add("density-movie", "|psi_cs(x, t)|^2 frames, long format", density_movie_table, "x_sigma0",
                      "density", "frame");
        s->cfg.t_end = 1.0;
        s->cfg.samples = 25;
        add_gamma(*s);
        add_alpha(*s);
        add_time(*s);
        add_output(*s, true);
    }

    RunConfig verify_cfg;
    verify_cfg.command = "verify";
    auto* verify = app.add_subcommand("verify", "run the oracle suites and print a per-check table");
    std::vector<std::string> suites = pdmosc::suite_names();
    verify->add_option("--suite", verify_cfg.suite, "suite to run")
        ->check(CLI::IsMember(suites))
        ->capture_default_str();
    verify->add_option("--out", verify_cfg.output_path, "also write the table as CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (verify->parsed()) {
            std::ofstream file;
            if (verify_cfg.output_path != "-") {
                file.open(verify_cfg.output_path, std::ios::binary);
                if (!file) {
                    std::cerr << "pdmosc: cannot open " << verify_cfg.output_path << " for writing\n";
                    return exit_failure;
                }
            }
            const bool ok = run_verify(verify_cfg, std::cout, file.is_open() ? &file : nullptr);
            return ok ? exit_ok : exit_failure;
        }
        for (auto& s : subs) {
            if (!s->app->parsed())
                continue;
            s->cfg.grid_points = grid_points_from_env();
            s->cfg.format = s->format == "json" ? Format::Json : Format::Csv;
            return write_result(*s, s->build(s->cfg));
        }
    } catch (const UsageError& e) {
        std::cerr << "pdmosc: " << e.what() << '\n';
        return exit_usage;
    } catch (const pdmosc::Error& e) {
        std::cerr << "pdmosc: " << e.what() << '\n';
        return exit_domain;
    } catch (const std::exception& e) {
        std::cerr << "pdmosc: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_usage;
}
