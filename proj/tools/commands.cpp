#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include <pdmosc/checks.hpp>
#include <pdmosc/classical.hpp>
#include <pdmosc/coherent.hpp>
#include <pdmosc/grid.hpp>
#include <pdmosc/spectrum.hpp>

#ifndef PDMOSC_VERSION
#define PDMOSC_VERSION "unknown"
#endif

namespace pdmosc::cli {

namespace {

Table make_table(const RunConfig& cfg, std::vector<std::string> columns)
{
    Table t(std::move(columns));
    t.add_meta("tool", "pdmosc " PDMOSC_VERSION);
    t.add_meta("command", cfg.command);
    t.add_meta("units", "m0=omega0=hbar=1; x in sigma0, t in tau0=2pi/omega0, energies in hbar omega0");
    t.add_meta("gamma_sigma0", cfg.gamma_sigma0);
    return t;
}

void add_alpha_meta(Table& t, const RunConfig& cfg)
{
    t.add_meta("alpha_re", cfg.alpha_real_part());
    t.add_meta("alpha_im", cfg.alpha_imag_part());
}

void add_time_meta(Table& t, const RunConfig& cfg)
{
    t.add_meta("t0", 0.0);
    t.add_meta("t_end_tau0", cfg.t_end);
    t.add_meta("samples", static_cast<double>(cfg.samples));
}

EvolutionConfig time_axis(const RunConfig& cfg, const ModelParams& p)
{
    EvolutionConfig e{0.0, cfg.t_end * p.tau0(), cfg.samples};
    e.validate();
    return e;
}

} // namespace

Table spectrum_table(const RunConfig& cfg)
{
    const auto p = cfg.params();
    const auto top_bound = max_bound_index(p);
    int top = cfg.n;
    if (top < 0)
        top = top_bound ? std::min(5, *top_bound) : 5;
    require_bound(p, top);
    auto t = make_table(cfg, {"n", "energy_hbar_omega0", "uncertainty_product_hbar", "number_expectation"});
    t.add_meta("n_max", top_bound ? std::to_string(*top_bound) : std::string("unbounded"));
    t.add_meta("source", "closed form");
    for (int n = 0; n <= top; ++n)
        t.add_row({static_cast<double>(n), energy(p, n), uncertainty_product(p, n), number_expectation(p, n)});
    return t;
}

Table eigenfunction_table(const RunConfig& cfg)
{
    const auto p = cfg.params();
    const int n = std::max(cfg.n, 0);
    require_bound(p, n);
    // bounds wide enough for the tail of psi_n; the point count is the default grid's
    const Grid span = p.deformed() ? resolved_grid(p, nu(p, n)) : resolved_grid(p, 1.0);
    const auto grid = Grid::uniform(span.coordinate(), span[0], span[span.size() - 1], cfg.grid_points);
    auto t = make_table(cfg, {"x_sigma0", "x_gamma_sigma0", "psi", "density"});
    t.add_meta("n", static_cast<double>(n));
    t.add_meta("energy_hbar_omega0", energy(p, n));
    t.add_meta("grid", "uniform in x_gamma");
    t.add_meta("x_gamma_min", grid[0]);
    t.add_meta("x_gamma_max", grid[grid.size() - 1]);
    t.add_meta("grid_points", static_cast<double>(grid.size()));
    const auto xs = grid.x_values(p);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double v = eigenfunction(p, n, xs[i]);
        t.add_row({xs[i], grid[i], v, v * v});
    }
    return t;
}

Table classical_table(const RunConfig& cfg)
{
    const auto p = cfg.params();
    const ClassicalOrbit orbit(p, cfg.amplitude);
    const auto axis = time_axis(cfg, p);
    auto t = make_table(cfg, {"t_tau0", "x_sigma0", "pi_gamma", "p", "theta"});
    t.add_meta("amplitude_sigma0", cfg.amplitude);
    add_time_meta(t, cfg);
    t.add_meta("omega_gamma", orbit.omega_gamma());
    t.add_meta("pi_gamma_scale", "raw, units hbar/sigma0");
    for (int i = 0; i < axis.samples; ++i) {
        const double time = axis.time(i);
        const auto pt = trajectory(orbit, time);
        t.add_row({time / p.tau0(), pt.x, pt.pi_gamma, pt.p, deformed_phase(orbit, time)});
    }
    return t;
}

Table coherent_table(const RunConfig& cfg)
{
    const auto p = cfg.params();
    const CoherentState s0(p, cplx(cfg.alpha_real_part(), cfg.alpha_imag_part()));
    const auto axis = time_axis(cfg, p);
    auto t = make_table(cfg, {"t_tau0", "alpha_re", "alpha_im", "x_mean", "pi_mean", "p_mean", "dx", "dpi", "dp",
                              "dx_dpi", "gup_ratio", "global_phase"});
    add_alpha_meta(t, cfg);
    add_time_meta(t, cfg);
    t.add_meta("omega_cs", coherent_frequency(p, std::abs(s0.alpha())));
    t.add_meta("moments", "closed form");
    for (const auto& smp : evolve(s0, axis)) {
        const auto m = coherent_moments(smp.state);
        const auto pm = coherent_p_moments(smp.state);
        const double dx = std::sqrt(std::max(0.0, m.ex2 - m.ex * m.ex));
        const double dpi = std::sqrt(std::max(0.0, m.epi2 - m.epi * m.epi));
        const double dp = std::sqrt(std::max(0.0, pm.ep2 - pm.ep * pm.ep));
        const double bound = 0.5 * p.hbar() * (1.0 + p.gamma() * m.ex);
        t.add_row({smp.t / p.tau0(), smp.state.alpha().real(), smp.state.alpha().imag(), m.ex, m.epi, pm.ep, dx, dpi,
                   dp, dx * dpi, dx * dpi / bound, smp.global_phase});
    }
    return t;
}

namespace {

Table select(const Table& full, const RunConfig& cfg, const std::vector<std::string>& cols)
{
    Table t(cols);
    t.meta = full.meta;
    t.meta[1].second = cfg.command;
    for (std::size_t c = 0; c < cols.size(); ++c)
        t.data[c] = full.column(cols[c]);
    return t;
}

} // namespace

Table phase_space_table(const RunConfig& cfg)
{
    return select(coherent_table(cfg), cfg, {"t_tau0", "x_mean", "p_mean", "pi_mean"});
}

Table uncertainty_table(const RunConfig& cfg)
{
    return select(coherent_table(cfg), cfg, {"t_tau0", "dx", "dp", "dpi", "dx_dpi", "gup_ratio"});
}

Table gup_surface_table(const RunConfig& cfg)
{
    const auto p = cfg.params();
    const double e = cfg.extent;
    auto t = make_table(cfg, {"alpha_re", "alpha_im", "valid", "dx", "dp", "dx_dp", "dpi", "dx_dpi", "gup_bound"});
    t.add_meta("alpha_extent", e);
    t.add_meta("resolution", static_cast<double>(cfg.samples));
    t.add_meta("invalid_cells", "lambda_cs <= 0 or p moments undefined; values nan");
    for (const auto& c : gup_surface(p, -e, e, -e, e, cfg.samples))
        t.add_row({c.re, c.im, c.valid ? 1.0 : 0.0, c.dx, c.dp, c.dxdp, c.dpi, c.dxdpi, c.gup_bound});
    return t;
}

Table density_movie_table(const RunConfig& cfg)
{
    const auto p = cfg.params();
    const cplx a(cfg.alpha_real_part(), cfg.alpha_imag_part());
    const CoherentState s0(p, a);
    const auto axis = time_axis(cfg, p);
    // widest state on the orbit sits at alpha = -|alpha|
    const Grid span = p.deformed() ? resolved_grid(p, coherent_lambda(p, -std::abs(a))) : resolved_grid(p, 1.0);
    const Grid grid = Grid::uniform(span.coordinate(), span[0], span[span.size() - 1], cfg.grid_points);
    const auto rho = density_evolution(s0, axis, grid);
    const auto xs = grid.x_values(p);
    auto t = make_table(cfg, {"frame", "t_tau0", "x_sigma0", "density"});
    add_alpha_meta(t, cfg);
    add_time_meta(t, cfg);
    t.add_meta("grid", "uniform in x_gamma");
    t.add_meta("x_gamma_min", grid[0]);
    t.add_meta("x_gamma_max", grid[grid.size() - 1]);
    t.add_meta("grid_points", static_cast<double>(grid.size()));
    for (std::size_t k = 0; k < rho.size(); ++k)
        for (std::size_t i = 0; i < xs.size(); ++i)
            t.add_row({static_cast<double>(k), axis.time(static_cast<int>(k)) / p.tau0(), xs[i], rho[k][i]});
    return t;
}

namespace {

std::string csv_quote(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace

bool run_verify(const RunConfig& cfg, std::ostream& out, std::ostream* csv)
{
    const auto ids = suite_criteria(cfg.suite);
    if (csv) {
        *csv << "# tool=pdmosc " PDMOSC_VERSION "\n# command=verify\n# suite=" << cfg.suite << '\n';
        *csv << "criterion,check,value,tol,status\n";
    }
    bool all = true;
    char buf[512];
    out << "crit  status  check                                            value        tol\n";
    for (int id : ids) {
        const auto r = run_criterion(id);
        for (const auto& c : r.checks) {
            std::snprintf(buf, sizeof buf, "%4d  %-6s  %-47s  %-11.3g  %.3g\n", id, c.pass() ? "pass" : "FAIL",
                          c.name.c_str(), c.value, c.tol);
            out << buf;
            if (csv)
                *csv << id << ',' << csv_quote(c.name) << ',' << format_number(c.value) << ','
                     << format_number(c.tol) << ',' << (c.pass() ? "pass" : "fail") << '\n';
        }
        for (const auto& n : r.notes)
            out << "      note: " << n << '\n';
        all = all && r.passed();
    }
    out << (all ? "all checks passed\n" : "some checks FAILED\n");
    return all;
}

} // namespace pdmosc::cli
