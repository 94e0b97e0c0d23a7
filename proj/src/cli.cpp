#include "kgring/cli.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>

#include "kgring/errors.hpp"
#include "kgring/oracle.hpp"
#include "kgring/quadrature.hpp"

namespace kgring::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string json_number(double v) {
    if (!std::isfinite(v)) return "null";
    return fmt(v);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

template <typename Fn>
void for_each_state(const RunConfig& cfg, Fn&& fn) {
    for (int n = cfg.n.lo; n <= cfg.n.hi; ++n)
        for (int nt = cfg.ntheta.lo; nt <= cfg.ntheta.hi; ++nt)
            for (int m = cfg.m.lo; m <= cfg.m.hi; ++m) fn(n, nt, m);
}

std::string status_of(const DomainError& e) {
    if (dynamic_cast<const NoRealAngularMomentum*>(&e)) return "no_real_angular_momentum";
    if (dynamic_cast<const NegativeDiscriminant*>(&e)) return "negative_discriminant";
    return "negative_discriminant";
}

double quiet_nonrel_energy(const ModelParams& p, const QuantumNumbers& qn) {
    try {
        return nonrel_energy(p, qn);
    } catch (const DomainError&) {
        return kNaN;
    }
}

} // namespace

std::vector<SpectrumRow> cmd_spectrum(const RunConfig& cfg) {
    std::vector<SpectrumRow> rows;
    const ModelParams p = cfg.params();
    for_each_state(cfg, [&](int n, int nt, int m) {
        SpectrumRow row{n,    nt,   m,    kNaN, kNaN, kNaN,
                        kNaN, kNaN, kNaN, kNaN, "ok", 0};
        try {
            if (cfg.coulomb_A) {
                const int ell = nt + m;  // C = 0, D = 3 composition of the labels
                const double A = *cfg.coulomb_A;
                row.E = coulomb_root(cfg.mu, A, n, ell, cfg.D);
                row.j = row.j_prime = ell;
                row.m_prime = m;
                row.binding = row.E - cfg.mu;
                row.zeta = cfg.D + 2.0 * ell - 2.0;
                row.roots_found = 1;
            } else {
                const QuantumNumbers qn{n, nt, m};
                const BoundState state = solve_bound_state(p, qn);
                row.E = state.E;
                row.binding = state.E - cfg.mu;
                row.j = state.angular.j;
                row.j_prime = state.angular.j_prime;
                row.m_prime = state.angular.m_prime;
                row.zeta = state.intermediates.zeta;
                row.E_nr = quiet_nonrel_energy(p, qn);
                row.roots_found = static_cast<int>(state.diagnostics.roots.size());
                if (state.diagnostics.multiple_roots) row.status = "multiple_roots";
            }
        } catch (const NoBoundState&) {
            row.status = "no_bound_state";
        } catch (const DomainError& e) {
            row.status = status_of(e);
        }
        rows.push_back(std::move(row));
    });
    return rows;
}

std::vector<WavefunctionRow> cmd_wavefunction(const RunConfig& cfg) {
    std::vector<WavefunctionRow> rows;
    const ModelParams p = cfg.params();
    for_each_state(cfg, [&](int n, int nt, int m) {
        const QuantumNumbers qn{n, nt, m};
        const BoundState state = solve_bound_state(p, qn);
        if (cfg.coord == 'r') {
            // log-spaced grid covering the decay scale 1/eps
            const double lo = 0.01 * cfg.r0;
            const double hi = std::max(15.0 / state.intermediates.eps, 10.0 * cfg.r0);
            const double step = std::log(hi / lo) / (cfg.samples - 1);
            for (int i = 0; i < cfg.samples; ++i) {
                const double r = lo * std::exp(i * step);
                rows.push_back({n, nt, m, r, radial_wavefunction(state, r),
                                reduced_radial_wavefunction(state, r)});
            }
        } else {
            for (int i = 0; i < cfg.samples; ++i) {
                const double theta = std::numbers::pi * i / (cfg.samples - 1.0);
                rows.push_back({n, nt, m, theta,
                                polar_wavefunction(nt, state.angular.m_prime, theta),
                                std::cos(theta)});
            }
        }
    });
    return rows;
}

std::vector<VerifyRow> cmd_verify(const RunConfig& cfg) {
    std::vector<VerifyRow> rows;
    const ModelParams p = cfg.params();
    const double gap_tol =
        5e-4 * cfg.mu * std::max(1.0, (2000.0 / cfg.grid) * (2000.0 / cfg.grid));
    for_each_state(cfg, [&](int n, int nt, int m) {
        VerifyRow row{n, nt, m, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, "ok", false};
        try {
            const QuantumNumbers qn{n, nt, m};
            const BoundState state = solve_bound_state(p, qn);
            row.E = state.E;

            std::vector<double> r_grid(300);
            for (std::size_t i = 0; i < r_grid.size(); ++i)
                r_grid[i] = 0.1 * cfg.r0 * std::pow(100.0, i / (r_grid.size() - 1.0));
            row.radial_residual = oracle::radial_ode_residual(state, r_grid).max_rel_residual;

            std::vector<double> t_grid(300);
            for (std::size_t i = 0; i < t_grid.size(); ++i)
                t_grid[i] = 0.1 + (std::numbers::pi - 0.2) * i / (t_grid.size() - 1.0);
            const double alpha2_sq = cfg.mu + state.E;
            row.angular_residual =
                oracle::angular_ode_residual(state.angular, nt, cfg.D, cfg.C, alpha2_sq, t_grid)
                    .max_rel_residual;

            row.norm_radial_err = std::abs(
                integrate_to_inf([&](double r) {
                    const double R = radial_wavefunction(state, r);
                    return R * R * std::pow(r, cfg.D - 1.0);
                }) -
                1.0);
            const double mp = state.angular.m_prime;
            row.norm_polar_err = std::abs(
                integrate([&](double s) {
                    const double H = polar_wavefunction(nt, mp, std::acos(s));
                    return H * H;
                }, -1.0, 1.0) -
                1.0);
            row.norm_azimuthal_err = std::abs(
                integrate([&](double phi) { return std::norm(azimuthal(m, phi)); }, 0.0,
                          2.0 * std::numbers::pi) -
                1.0);

            const auto eigen = oracle::matrix_eigen_crosscheck(p, qn, cfg.grid, cfg.rmax);
            row.eigen_gap = eigen.gap;

            row.pass = row.radial_residual <= 1e-7 && row.angular_residual <= 1e-7 &&
                       row.norm_radial_err <= 1e-8 && row.norm_polar_err <= 1e-8 &&
                       row.norm_azimuthal_err <= 1e-8 && eigen.converged &&
                       row.eigen_gap <= gap_tol;
        } catch (const NoBoundState&) {
            row.status = "no_bound_state";
        } catch (const DomainError& e) {
            row.status = status_of(e);
        }
        rows.push_back(std::move(row));
    });
    return rows;
}

std::vector<LimitsRow> cmd_limits(const RunConfig& cfg) {
    std::vector<LimitsRow> rows;
    const ModelParams p = cfg.params();
    for_each_state(cfg, [&](int n, int nt, int m) {
        LimitsRow row{n, nt, m, kNaN, kNaN, kNaN, kNaN, kNaN, "ok"};
        try {
            if (cfg.coulomb_A) {
                const int ell = nt + m;
                const double A = *cfg.coulomb_A;
                row.E = coulomb_root(cfg.mu, A, n, ell, cfg.D);
                row.E_coulomb = coulomb_energy(cfg.mu, A * A, n, ell, cfg.D);
                row.E_series = coulomb_series(cfg.mu, A * A, n, ell, cfg.D);
            } else {
                const QuantumNumbers qn{n, nt, m};
                row.E = solve_bound_state(p, qn).E;
                row.E_nr = nonrel_energy(p, qn);
                row.transformed_residual = transformed_nonrel_residual(p, qn, row.E_nr);
            }
        } catch (const NoBoundState&) {
            row.status = "no_bound_state";
        } catch (const DomainError& e) {
            row.status = status_of(e);
        }
        rows.push_back(std::move(row));
    });
    return rows;
}

std::string to_csv(const std::vector<SpectrumRow>& rows) {
    std::ostringstream os;
    os << "n,ntheta,m,j,j_prime,m_prime,E_R,binding,E_NR,zeta,status,roots_found\n";
    for (const auto& r : rows)
        os << r.n << ',' << r.ntheta << ',' << r.m << ',' << fmt(r.j) << ',' << fmt(r.j_prime)
           << ',' << fmt(r.m_prime) << ',' << fmt(r.E) << ',' << fmt(r.binding) << ','
           << fmt(r.E_nr) << ',' << fmt(r.zeta) << ',' << csv_field(r.status) << ','
           << r.roots_found << '\n';
    return os.str();
}

std::string to_csv(const std::vector<WavefunctionRow>& rows) {
    std::ostringstream os;
    os << "n,ntheta,m,coord,value,extra\n";
    for (const auto& r : rows)
        os << r.n << ',' << r.ntheta << ',' << r.m << ',' << fmt(r.coord) << ',' << fmt(r.value)
           << ',' << fmt(r.extra) << '\n';
    return os.str();
}

std::string to_csv(const std::vector<VerifyRow>& rows) {
    std::ostringstream os;
    os << "n,ntheta,m,E_R,radial_residual,angular_residual,norm_radial_err,norm_polar_err,"
          "norm_azimuthal_err,eigen_gap,status,pass\n";
    for (const auto& r : rows)
        os << r.n << ',' << r.ntheta << ',' << r.m << ',' << fmt(r.E) << ','
           << fmt(r.radial_residual) << ',' << fmt(r.angular_residual) << ','
           << fmt(r.norm_radial_err) << ',' << fmt(r.norm_polar_err) << ','
           << fmt(r.norm_azimuthal_err) << ',' << fmt(r.eigen_gap) << ','
           << csv_field(r.status) << ',' << (r.pass ? "true" : "false") << '\n';
    return os.str();
}

std::string to_csv(const std::vector<LimitsRow>& rows) {
    std::ostringstream os;
    os << "n,ntheta,m,E_R,E_coulomb,E_series,E_NR,transformed_residual,status\n";
    for (const auto& r : rows)
        os << r.n << ',' << r.ntheta << ',' << r.m << ',' << fmt(r.E) << ',' << fmt(r.E_coulomb)
           << ',' << fmt(r.E_series) << ',' << fmt(r.E_nr) << ',' << fmt(r.transformed_residual)
           << ',' << csv_field(r.status) << '\n';
    return os.str();
}

namespace {

std::string json_string(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

template <typename Row, typename FieldWriter>
std::string rows_to_json(const std::vector<Row>& rows, FieldWriter&& writer) {
    std::ostringstream os;
    os << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        os << "  {";
        writer(os, rows[i]);
        os << (i + 1 < rows.size() ? "},\n" : "}\n");
    }
    os << "]\n";
    return os.str();
}

} // namespace

std::string to_json(const std::vector<SpectrumRow>& rows) {
    return rows_to_json(rows, [](std::ostringstream& os, const SpectrumRow& r) {
        os << "\"n\":" << r.n << ",\"ntheta\":" << r.ntheta << ",\"m\":" << r.m
           << ",\"j\":" << json_number(r.j) << ",\"j_prime\":" << json_number(r.j_prime)
           << ",\"m_prime\":" << json_number(r.m_prime) << ",\"E_R\":" << json_number(r.E)
           << ",\"binding\":" << json_number(r.binding) << ",\"E_NR\":" << json_number(r.E_nr)
           << ",\"zeta\":" << json_number(r.zeta) << ",\"status\":" << json_string(r.status)
           << ",\"roots_found\":" << r.roots_found;
    });
}

std::string to_json(const std::vector<WavefunctionRow>& rows) {
    return rows_to_json(rows, [](std::ostringstream& os, const WavefunctionRow& r) {
        os << "\"n\":" << r.n << ",\"ntheta\":" << r.ntheta << ",\"m\":" << r.m
           << ",\"coord\":" << json_number(r.coord) << ",\"value\":" << json_number(r.value)
           << ",\"extra\":" << json_number(r.extra);
    });
}

std::string to_json(const std::vector<VerifyRow>& rows) {
    return rows_to_json(rows, [](std::ostringstream& os, const VerifyRow& r) {
        os << "\"n\":" << r.n << ",\"ntheta\":" << r.ntheta << ",\"m\":" << r.m
           << ",\"E_R\":" << json_number(r.E)
           << ",\"radial_residual\":" << json_number(r.radial_residual)
           << ",\"angular_residual\":" << json_number(r.angular_residual)
           << ",\"norm_radial_err\":" << json_number(r.norm_radial_err)
           << ",\"norm_polar_err\":" << json_number(r.norm_polar_err)
           << ",\"norm_azimuthal_err\":" << json_number(r.norm_azimuthal_err)
           << ",\"eigen_gap\":" << json_number(r.eigen_gap)
           << ",\"status\":" << json_string(r.status)
           << ",\"pass\":" << (r.pass ? "true" : "false");
    });
}

std::string to_json(const std::vector<LimitsRow>& rows) {
    return rows_to_json(rows, [](std::ostringstream& os, const LimitsRow& r) {
        os << "\"n\":" << r.n << ",\"ntheta\":" << r.ntheta << ",\"m\":" << r.m
           << ",\"E_R\":" << json_number(r.E) << ",\"E_coulomb\":" << json_number(r.E_coulomb)
           << ",\"E_series\":" << json_number(r.E_series) << ",\"E_NR\":" << json_number(r.E_nr)
           << ",\"transformed_residual\":" << json_number(r.transformed_residual)
           << ",\"status\":" << json_string(r.status);
    });
}

bool all_pass(const std::vector<VerifyRow>& rows) {
    for (const auto& r : rows)
        if (!r.pass) return false;
    return true;
}

bool any_infeasible(const std::vector<SpectrumRow>& rows) {
    for (const auto& r : rows)
        if (r.status != "ok" && r.status != "multiple_roots") return true;
    return false;
}

} // namespace kgring::cli
