#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kgring/model.hpp"
#include "kgring/radial.hpp"

namespace kgring::cli {

/// Inclusive integer range for a quantum-number flag ("lo..hi" or a single value).
struct Range {
    int lo = 0;
    int hi = 0;
};

enum class Mode { spectrum, wavefunction, verify, limits };
enum class Format { csv, json };

struct RunConfig {
    double mu = 1.0;
    double a0 = 1.0;
    double r0 = 1.0;
    double C = 0.0;
    int D = 3;
    Range n{0, 0};
    Range ntheta{0, 0};
    Range m{0, 0};
    Mode mode = Mode::spectrum;
    std::string out;  ///< empty means stdout
    Format format = Format::csv;
    std::optional<double> coulomb_A;  ///< enables the B = 0 closed-form channel
    bool strict = false;              ///< infeasible states become exit code 3
    // oracle sizing
    int grid = 2000;
    double rmax = 200.0;
    // wavefunction sampling
    char coord = 'r';  ///< 'r' (log-spaced radial) or 't' (uniform polar)
    int samples = 200;

    ModelParams params() const { return {mu, a0, r0, C, D}; }
};

/// One spectrum line; non-finite numeric fields mark infeasible states.
struct SpectrumRow {
    int n, ntheta, m;
    double j, j_prime, m_prime;
    double E;        ///< relativistic energy E_R
    double binding;  ///< E_R - mu
    double E_nr;     ///< nonrelativistic closed form
    double zeta;
    std::string status;  ///< ok | no_bound_state | negative_discriminant |
                         ///< no_real_angular_momentum | multiple_roots
    int roots_found = 0;
};

struct WavefunctionRow {
    int n, ntheta, m;
    double coord;  ///< r or theta
    double value;  ///< R(r) or H(theta)
    double extra;  ///< g(r) for radial rows, cos(theta) for polar rows
};

struct VerifyRow {
    int n, ntheta, m;
    double E;
    double radial_residual;
    double angular_residual;
    double norm_radial_err;
    double norm_polar_err;
    double norm_azimuthal_err;
    double eigen_gap;
    std::string status;
    bool pass = false;
};

struct LimitsRow {
    int n, ntheta, m;
    double E;          ///< bisection root (full model, or B = 0 channel with --coulomb)
    double E_coulomb;  ///< closed form, NaN unless --coulomb
    double E_series;   ///< second-order series, NaN unless --coulomb
    double E_nr;
    double transformed_residual;  ///< noncentral residual under the nonrelativistic substitution
    std::string status;
};

std::vector<SpectrumRow> cmd_spectrum(const RunConfig& cfg);
std::vector<WavefunctionRow> cmd_wavefunction(const RunConfig& cfg);
std::vector<VerifyRow> cmd_verify(const RunConfig& cfg);
std::vector<LimitsRow> cmd_limits(const RunConfig& cfg);

/// Serialize with a fixed 17-significant-digit format: output is byte-stable
/// and every numeric field round-trips bit-exactly.
std::string to_csv(const std::vector<SpectrumRow>& rows);
std::string to_csv(const std::vector<WavefunctionRow>& rows);
std::string to_csv(const std::vector<VerifyRow>& rows);
std::string to_csv(const std::vector<LimitsRow>& rows);
std::string to_json(const std::vector<SpectrumRow>& rows);
std::string to_json(const std::vector<WavefunctionRow>& rows);
std::string to_json(const std::vector<VerifyRow>& rows);
std::string to_json(const std::vector<LimitsRow>& rows);

/// True when every verify row passed.
bool all_pass(const std::vector<VerifyRow>& rows);

/// True when any row carries a hard infeasibility status (strict-mode exit 3).
bool any_infeasible(const std::vector<SpectrumRow>& rows);

} // namespace kgring::cli
