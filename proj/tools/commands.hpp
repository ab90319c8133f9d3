#pragma once

#include <optional>
#include <ostream>
#include <string>

#include <pdmosc/params.hpp>

#include "table.hpp"

namespace pdmosc::cli {

enum class Format { Csv, Json };

struct RunConfig {
    std::string command;
    double gamma_sigma0 = 0.4;
    double alpha_re = 0.7071067811865476;
    double alpha_im = 0.0;
    std::optional<double> alpha_abs;
    double amplitude = 1.0;
    int n = -1;  // -1: command default
    double t_end = 3.0;  // units of tau0
    int samples = 601;
    double extent = 2.0;  // gup-surface half width in Re, Im alpha
    std::string suite = "all";
    std::string output_path = "-";
    std::string svg_path;
    Format format = Format::Csv;
    std::size_t grid_points = 4001;

    ModelParams params() const { return ModelParams::natural(gamma_sigma0); }
    double alpha_real_part() const { return alpha_abs ? *alpha_abs : alpha_re; }
    double alpha_imag_part() const { return alpha_abs ? 0.0 : alpha_im; }
};

// Thrown for parameter combinations the parser cannot see (exit code 2).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Table spectrum_table(const RunConfig& cfg);
Table eigenfunction_table(const RunConfig& cfg);
Table classical_table(const RunConfig& cfg);
Table coherent_table(const RunConfig& cfg);
Table phase_space_table(const RunConfig& cfg);
Table gup_surface_table(const RunConfig& cfg);
Table uncertainty_table(const RunConfig& cfg);
Table density_movie_table(const RunConfig& cfg);

// Prints the per-check table to `out` and writes it as CSV to `csv` if given.
// Returns true when every check passed.
bool run_verify(const RunConfig& cfg, std::ostream& out, std::ostream* csv);

} // namespace pdmosc::cli
