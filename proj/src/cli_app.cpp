#include "hyperbasis/cli_app.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <set>
#include <numbers>
#include <sstream>

#include "hyperbasis/bases.hpp"
#include "hyperbasis/contraction.hpp"
#include "hyperbasis/errors.hpp"
#include "hyperbasis/interbasis.hpp"
#include "hyperbasis/parallel.hpp"
#include "hyperbasis/verify.hpp"

namespace hyperbasis::cli {

namespace {

constexpr double kPi = std::numbers::pi;

using Complex = std::complex<double>;

std::string num(double v) {
    char buf[40];
    snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

// Row-oriented writer producing either CSV or JSONL with identical numbers.
class TableWriter {
  public:
    TableWriter(std::ostream& os, std::string format, std::vector<std::string> columns,
                const std::string& provenance)
        : os_(os), fmt_(std::move(format)), cols_(std::move(columns)) {
        os_ << provenance << "\n";
        if (fmt_ == "csv") {
            for (std::size_t i = 0; i < cols_.size(); ++i)
                os_ << (i ? "," : "") << cols_[i];
            os_ << "\n";
        }
    }

    void row(const std::vector<double>& vals) {
        if (fmt_ == "csv") {
            for (std::size_t i = 0; i < vals.size(); ++i)
                os_ << (i ? "," : "") << num(vals[i]);
            os_ << "\n";
            return;
        }
        os_ << "{";
        for (std::size_t i = 0; i < vals.size(); ++i)
            os_ << (i ? "," : "") << "\"" << cols_[i] << "\":" << num(vals[i]);
        os_ << "}\n";
    }

  private:
    std::ostream& os_;
    std::string fmt_;
    std::vector<std::string> cols_;
};

std::string provenance(const std::string& echo, const std::string& tag) {
    return std::string("# hyperbasis ") + kVersion + " | " + echo + " | tag: " + tag;
}

struct OutputTarget {
    std::ofstream file;
    std::ostream* os = nullptr;

    explicit OutputTarget(const std::string& path) {
        if (path.empty() || path == "-") {
            os = &std::cout;
            return;
        }
        file.open(path);
        if (!file) throw DomainError("cannot open output file: " + path);
        os = &file;
    }
};

std::string join_args(int argc, const char* const argv[]) {
    std::string s;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) s += " ";
        s += argv[i];
    }
    return s;
}

// ---------------------------------------------------------------------------

int cmd_eval(const std::string& echo, const std::string& basis, double R, double rho,
             double s, int m, double nu, const GridSpec& g1, const GridSpec& g2,
             const std::string& out, const std::string& format) {
    bases::SpectralParams sp{R, rho};
    std::vector<std::string> cols;
    std::function<Complex(double, double)> f;
    if (basis == "ho") {
        cols = {"y", "x", "re", "im"};
        f = [&](double a, double b) { return bases::psi_ho(sp, s, {a, b}).value; };
    } else if (basis == "ps") {
        cols = {"tau", "phi", "re", "im"};
        f = [&](double a, double b) { return bases::psi_s(sp, m, {a, b}).value; };
    } else if (basis == "eq+" || basis == "eq-") {
        cols = {"tau1", "tau2", "re", "im"};
        bases::Parity p = (basis == "eq+") ? bases::Parity::Plus : bases::Parity::Minus;
        f = [&, p](double a, double b) { return bases::psi_eq(sp, nu, p, {a, b}).value; };
    } else if (basis == "eq1" || basis == "eq2") {
        cols = {"tau1", "tau2", "re", "im"};
        int which = (basis == "eq1") ? 1 : 2;
        f = [&, which](double a, double b) {
            return bases::psi_eq12(sp, nu, which, {a, b}).value;
        };
    } else {
        throw DomainError("eval: unknown basis " + basis);
    }
    OutputTarget target(out);
    TableWriter w(*target.os, format, cols, provenance(echo, "basis." + basis));
    auto v1 = g1.values();
    auto v2 = g2.values();
    std::vector<Complex> vals(v1.size() * v2.size());
    parallel::for_each_index(vals.size(), [&](std::size_t i) {
        vals[i] = f(v1[i / v2.size()], v2[i % v2.size()]);
    });
    for (std::size_t i = 0; i < vals.size(); ++i)
        w.row({v1[i / v2.size()], v2[i % v2.size()], vals[i].real(), vals[i].imag()});
    return 0;
}

int cmd_coeff(const std::string& echo, const std::string& family, double rho,
              const std::vector<double>& s_list, const std::vector<int>& m_list,
              const GridSpec& nu_grid, const std::string& route, const std::string& out,
              const std::string& format) {
    using interbasis::Parity;
    if (family != "W+" && family != "W-" && family != "U+" && family != "U-" &&
        family != "V")
        throw DomainError("coeff: unknown family " + family);
    for (double s : s_list)
        if (s == 0.0 && family != "U+" && family != "U-")
            throw DomainError("coeff: s = 0 excluded");
    OutputTarget target(out);
    if (family == "W+" || family == "W-") {
        Parity p = (family == "W+") ? Parity::Plus : Parity::Minus;
        TableWriter w(*target.os, format, {"rho", "s", "nu", "re", "im", "err_est"},
                      provenance(echo, "coeff." + family));
        auto nus = nu_grid.values();
        for (double s : s_list)
            for (double nu : nus) {
                auto c = interbasis::coeff_w(rho, s, nu, p);
                w.row({rho, s, nu, c.value.real(), c.value.imag(), c.err_est});
            }
        return 0;
    }
    if (family == "U+" || family == "U-") {
        Parity p = (family == "U+") ? Parity::Plus : Parity::Minus;
        bool integral = (route == "integral");
        TableWriter w(*target.os, format, {"rho", "m", "nu", "re", "im", "err_est"},
                      provenance(echo, "coeff." + family));
        auto nus = nu_grid.values();
        std::vector<interbasis::CoefficientValue> vals(m_list.size() * nus.size());
        parallel::for_each_index(vals.size(), [&](std::size_t i) {
            int m = m_list[i / nus.size()];
            double nu = nus[i % nus.size()];
            vals[i] = integral ? interbasis::coeff_u_integral(rho, nu, m, p)
                               : interbasis::coeff_u(rho, nu, m, p);
        });
        for (std::size_t i = 0; i < vals.size(); ++i)
            w.row({rho, static_cast<double>(m_list[i / nus.size()]), nus[i % nus.size()],
                   vals[i].value.real(), vals[i].value.imag(), vals[i].err_est});
        return 0;
    }
    if (family == "V") {
        TableWriter w(*target.os, format,
                      {"rho", "s", "m", "route", "re", "im", "err_est"},
                      provenance(echo, "coeff.V"));
        auto emit = [&](double s, int m, int route_id,
                        const interbasis::CoefficientValue& c) {
            w.row({rho, s, static_cast<double>(m), static_cast<double>(route_id),
                   c.value.real(), c.value.imag(), c.err_est});
        };
        for (double s : s_list)
            for (int m : m_list) {
                if (route == "series" || route == "all")
                    emit(s, m, 0, interbasis::coeff_v_series(rho, s, m));
                if (route == "nu" || route == "all")
                    emit(s, m, 1, interbasis::coeff_v_nu_integral(rho, s, m));
                if (route == "phi" || route == "all")
                    emit(s, m, 2, interbasis::coeff_v_phi_integral(rho, s, m, 1.0));
            }
        return 0;
    }
    throw DomainError("coeff: unknown family " + family);
}

int cmd_verify(const std::string& echo, const std::string& filter, const std::string& out,
               const std::string& format, bool quiet) {
    auto reports = verify::run_suite(filter);
    OutputTarget target(out);
    if (format == "jsonl") {
        *target.os << provenance(echo, "verify") << "\n";
        for (const auto& r : reports) *target.os << verify::to_jsonl(r) << "\n";
    } else {
        *target.os << provenance(echo, "verify") << "\n"
                   << verify::summary_table(reports);
    }
    if (!quiet && target.os != &std::cout)
        std::cout << verify::summary_table(reports);
    for (const auto& r : reports)
        if (!r.passed) return 1;
    return 0;
}

int cmd_contract(const std::string& echo, const std::string& tgt, double k, double k1,
                 double k2, double k2p, int m, const std::string& parity,
                 const std::vector<double>& R_list, const std::string& out,
                 const std::string& format) {
    using interbasis::Parity;
    Parity p = (parity == "-") ? Parity::Minus : Parity::Plus;
    contraction::ContractionCurve curve;
    if (tgt == "ps") {
        curve = contraction::contract_ps(k, m, 10.0, 200, R_list);
    } else if (tgt == "eq") {
        curve = contraction::contract_eq(k, k1, p, 6.0, 120, R_list);
    } else if (tgt == "ho") {
        curve = contraction::contract_ho(k, k2, {0.5, 1.0}, R_list);
    } else if (tgt == "U") {
        std::vector<double> alphas;
        for (int i = 1; i <= 14; ++i) alphas.push_back(0.2 + (kPi - 0.4) * i / 15.0);
        curve = contraction::contract_u(k, m, p, alphas, R_list);
    } else if (tgt == "W") {
        curve = contraction::contract_w(k, k1, k2p, R_list);
    } else if (tgt == "V") {
        curve = contraction::contract_v(k, k2, m, R_list);
    } else {
        throw DomainError("contract: unknown target " + tgt);
    }
    OutputTarget target(out);
    TableWriter w(*target.os, format, {"R", "error", "fit_residual"},
                  provenance(echo, "contract." + tgt));
    for (std::size_t i = 0; i < curve.R_values.size(); ++i) {
        double fitted = curve.degenerate
                            ? 0.0
                            : curve.fitted_prefactor *
                                  std::pow(curve.R_values[i], curve.fitted_exponent);
        w.row({curve.R_values[i], curve.errors[i], curve.errors[i] - fitted});
    }
    *target.os << "# fit exponent " << num(curve.fitted_exponent) << " prefactor "
               << num(curve.fitted_prefactor) << " decreasing "
               << (curve.strictly_decreasing() ? 1 : 0) << "\n";
    return 0;
}

int cmd_figure(const std::string& echo, const std::string& id, const std::string& out,
               const std::string& format) {
    static const std::set<std::string> known{"1",  "2",  "3",  "4",  "5",  "6",  "7",
                                             "8",  "9",  "10", "11", "12", "13", "14",
                                             "15", "18", "19", "20", "21", "22", "23"};
    if (!known.count(id)) throw DomainError("figure: unknown id " + id);
    OutputTarget target(out);
    auto table = [&](std::vector<std::string> cols) {
        return std::make_unique<TableWriter>(*target.os, format, std::move(cols),
                                             provenance(echo, "figure." + id));
    };
    if (id == "1") { // sqrt(y) K_{i rho}(|s| y), rho = s = 4
        auto w = table({"y", "value"});
        for (int i = 1; i <= 400; ++i) {
            double y = 4.0 * i / 400.0;
            w->row({y, std::sqrt(y) * specfun::macdonald_imag(4.0, 4.0 * y)});
        }
        return 0;
    }
    if (id == "2") {
        auto w = table({"tau", "m0", "m1", "m2"});
        for (int i = 1; i <= 300; ++i) {
            double t = 3.0 * i / 300.0;
            w->row({t, bases::potential_s(0, t), bases::potential_s(1, t),
                    bases::potential_s(2, t)});
        }
        return 0;
    }
    if (id == "3") {
        auto w = table({"tau", "m0", "m2"});
        bases::SpectralParams sp{1.0, 1.0};
        for (int i = 0; i <= 300; ++i) {
            double t = 3.0 * i / 300.0;
            w->row({t, bases::psi_s_radial(sp, 0, t), bases::psi_s_radial(sp, 2, t)});
        }
        return 0;
    }
    if (id == "4") {
        auto w = table({"tau1", "plus_re", "plus_im", "minus_re", "minus_im"});
        for (int i = 0; i <= 400; ++i) {
            double t = -4.0 + 8.0 * i / 400.0;
            Complex p = bases::eq_radial(1.0, 2.0, bases::Parity::Plus, t);
            Complex mi = bases::eq_radial(1.0, 2.0, bases::Parity::Minus, t);
            w->row({t, p.real(), p.imag(), mi.real(), mi.imag()});
        }
        return 0;
    }
    if (id == "5") {
        auto w = table({"tau1", "f1_re", "f1_im", "f2_re", "f2_im"});
        for (int i = 0; i <= 400; ++i) {
            double t = -4.0 + 8.0 * i / 400.0;
            Complex a = bases::eq12_radial(1.0, 2.0, 1, t);
            Complex b = bases::eq12_radial(1.0, 2.0, 2, t);
            w->row({t, a.real(), a.imag(), b.real(), b.imag()});
        }
        return 0;
    }
    if (id == "6") {
        auto w = table({"tau1", "nu0", "nu_half", "nu1"});
        for (int i = 0; i <= 300; ++i) {
            double t = -3.0 + 6.0 * i / 300.0;
            w->row({t, bases::potential_eq(0.0, t), bases::potential_eq(0.5, t),
                    bases::potential_eq(1.0, t)});
        }
        return 0;
    }
    if (id == "7" || id == "8") {
        bool even = (id == "7");
        auto w = table({"nu", "m_a", "m_b", "m_c"});
        std::vector<int> ms = even ? std::vector<int>{2, 4, 6} : std::vector<int>{1, 3, 5};
        for (int i = 0; i <= 600; ++i) {
            double nu = -6.0 + 12.0 * i / 600.0;
            std::vector<double> row{nu};
            for (int m : ms) {
                Complex u = interbasis::coeff_u(2.0, nu, m, interbasis::Parity::Plus).value;
                row.push_back(even ? u.real() : u.imag());
            }
            w->row(row);
        }
        return 0;
    }
    if (id == "9" || id == "10") {
        double R = (id == "9") ? 10.0 : 100.0;
        auto w = table({"r", "curved", "flat"});
        bases::SpectralParams sp{R, R};
        for (int i = 0; i <= 200; ++i) {
            double r = 10.0 * i / 200.0;
            double lhs = std::sqrt(R) * bases::psi_s_radial(sp, 2, r / R);
            double rhs = std::sqrt(1.0) * specfun::bessel_j(2, r);
            w->row({r, lhs, rhs});
        }
        return 0;
    }
    if (id == "11" || id == "12" || id == "18" || id == "19") {
        double R = (id == "11" || id == "18") ? 4.0 : 20.0;
        int m = (id == "11" || id == "12") ? 2 : 3;
        auto w = table({"k1", "u", "target"});
        for (int i = 1; i < 200; ++i) {
            double a = kPi * i / 200.0; // k1 = cos(a) in (-1, 1)
            double k1 = std::cos(a), k2 = std::sin(a);
            Complex u =
                interbasis::coeff_u(R, R * k1, m, interbasis::Parity::Plus).value *
                std::sqrt(R);
            Complex tgt = (m % 2 ? Complex(0, -1) * ((m / 2) % 2 ? -1.0 : 1.0)
                                 : Complex(((m / 2) % 2 ? -1.0 : 1.0), 0)) *
                          std::cos(m * a) / std::sqrt(kPi * k2);
            // plotted components: real part for even m, imaginary for odd
            double uv = (m % 2 == 0) ? u.real() : u.imag();
            double tv = (m % 2 == 0) ? tgt.real() : tgt.imag();
            w->row({k1, uv, tv});
        }
        return 0;
    }
    if (id == "13" || id == "14") {
        double R = (id == "13") ? 5.0 : 50.0;
        double k = 1.0, k1 = 0.2;
        double k2 = std::sqrt(k * k - k1 * k1);
        auto w = table({"y", "curved", "flat"});
        bases::SpectralParams sp{R, k * R};
        for (int i = 0; i <= 300; ++i) {
            double y = -6.0 + 12.0 * i / 300.0;
            Complex lhs = R * bases::eq_norm(sp, k1 * R, bases::Parity::Plus) *
                          bases::eq_radial(k * R, k1 * R, bases::Parity::Plus, y / R);
            double rhs = std::sqrt(k / (kPi * k2)) * std::cos(k2 * y);
            w->row({y, lhs.real(), rhs});
        }
        return 0;
    }
    if (id == "15") {
        double k = 1.0, k2 = 1.0 / std::sqrt(2.0), x = 1.0;
        double k1 = std::sqrt(k * k - k2 * k2);
        auto w = table({"R", "curved", "flat"});
        for (int i = 0; i <= 200; ++i) {
            double R = 2.0 + 58.0 * i / 200.0;
            bases::SpectralParams sp{R, k * R};
            double lhs = R * bases::psi_ho_radial(sp, k2 * R, 1.0 + x / R);
            double rhs = std::sqrt(2.0 * k / kPi) *
                         std::sin(contraction::phase_m(k, k2, R) - k1 * x) / std::sqrt(k1);
            w->row({R, lhs, rhs});
        }
        return 0;
    }
    if (id == "20" || id == "21") {
        double k = 1.0, k1 = 1.0 / std::sqrt(2.0), k2p = 1.0 / std::sqrt(2.0);
        bool re = (id == "20");
        auto w = table({"R", "w", "asym"});
        double kk2 = std::sqrt(k * k - k1 * k1);
        for (int i = 0; i <= 200; ++i) {
            double R = 2.0 + 38.0 * i / 200.0;
            Complex wv =
                interbasis::coeff_w(k * R, k2p * R, k1 * R, interbasis::Parity::Plus).value;
            double mod = 1.0 / (2.0 * std::sqrt(kPi * k2p * R));
            double phase = R * k1 + R * k1 * std::log(k2p / kk2) +
                           0.5 * R * k * std::log(std::fabs((k1 - k) / (k1 + k)));
            Complex asym = mod * std::exp(Complex(0.0, phase));
            w->row({R, re ? wv.real() : wv.imag(), re ? asym.real() : asym.imag()});
        }
        return 0;
    }
    if (id == "22" || id == "23") {
        int m = (id == "22") ? 2 : 1;
        double k = 1.0, k2 = 1.0 / std::sqrt(2.0);
        double k1 = std::sqrt(k * k - k2 * k2);
        double alpha = std::atan2(k2, k1);
        auto w = table({"R", "v", "asym"});
        std::vector<double> Rs;
        for (int i = 0; i <= 56; ++i) Rs.push_back(2.0 + 0.5 * i);
        std::vector<double> vvals(Rs.size());
        parallel::for_each_index(Rs.size(), [&](std::size_t i) {
            vvals[i] =
                interbasis::coeff_v_nu_integral(k * Rs[i], k2 * Rs[i], m).value.real();
        });
        for (std::size_t i = 0; i < Rs.size(); ++i) {
            double R = Rs[i];
            double mp = contraction::phase_m(k, k2, R);
            double amp = std::sqrt(2.0 / (kPi * k1 * R));
            double asym = (m % 2 == 0)
                              ? ((m / 2) % 2 == 0 ? 1.0 : -1.0) * amp * std::sin(mp + m * alpha)
                              : (((m - 1) / 2) % 2 == 0 ? 1.0 : -1.0) * amp *
                                    std::cos(mp + m * alpha);
            w->row({R, vvals[i], asym});
        }
        return 0;
    }
    throw DomainError("figure: unknown id " + id);
}

} // namespace

GridSpec GridSpec::parse(const std::string& text) {
    GridSpec g;
    char c1, c2;
    std::istringstream is(text);
    if (!(is >> g.lo >> c1 >> g.hi >> c2 >> g.n) || c1 != ':' || c2 != ':' || g.n < 1 ||
        !is.eof())
        throw DomainError("bad grid spec (want a:b:n): " + text);
    if (!std::isfinite(g.lo) || !std::isfinite(g.hi))
        throw DomainError("grid endpoints must be finite");
    return g;
}

std::vector<double> GridSpec::values() const {
    std::vector<double> v;
    v.reserve(n);
    if (n == 1) {
        v.push_back(lo);
        return v;
    }
    for (int i = 0; i < n; ++i) v.push_back(lo + (hi - lo) * i / (n - 1.0));
    return v;
}

int run(int argc, const char* const argv[]) {
    CLI::App app{"hyperbasis: subgroup bases, interbasis coefficients and flat-limit "
                 "checks on the two-sheeted hyperboloid"};
    app.require_subcommand(1);
    std::string echo = join_args(argc, argv);

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate a basis wavefunction on a grid");
    std::string basis, g1_text = "0.1:3:50", g2_text = "0:0:1";
    std::string out, format = "csv";
    double R = 1.0, rho = 1.0, s = 1.0, nu = 1.0;
    int m = 0;
    eval->add_option("basis", basis, "ho|ps|eq+|eq-|eq1|eq2")->required();
    eval->add_option("--R", R);
    eval->add_option("--rho", rho);
    eval->add_option("--s", s);
    eval->add_option("--m", m);
    eval->add_option("--nu", nu);
    eval->add_option("--grid1", g1_text, "radial grid a:b:n (y, tau or tau1)");
    eval->add_option("--grid2", g2_text, "angular grid a:b:n (x, phi or tau2)");
    eval->add_option("--out,-o", out);
    eval->add_option("--format", format)->check(CLI::IsMember({"csv", "jsonl"}));

    // coeff
    auto* coeff = app.add_subcommand("coeff", "interbasis coefficients");
    std::string family, route = "wilson", nu_text = "-6:6:121";
    std::vector<double> s_list{1.0};
    std::vector<int> m_list{0};
    coeff->add_option("family", family, "W+|W-|U+|U-|V")->required();
    coeff->add_option("--rho", rho);
    coeff->add_option("--s", s_list)->delimiter(',');
    coeff->add_option("--m", m_list)->delimiter(',');
    coeff->add_option("--nu", nu_text, "nu grid a:b:n");
    coeff->add_option("--route", route, "wilson|integral|series|nu|phi|all");
    coeff->add_option("--out,-o", out);
    coeff->add_option("--format", format)->check(CLI::IsMember({"csv", "jsonl"}));

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the identity suite");
    std::string filter = "*";
    bool quiet = false;
    verify_cmd->add_option("--filter", filter, "id prefix, or * for all");
    verify_cmd->add_option("--out,-o", out);
    verify_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "jsonl", "table"}));
    verify_cmd->add_flag("--quiet", quiet);

    // contract
    auto* contract = app.add_subcommand("contract", "flat-limit sweeps");
    std::string target, parity = "+";
    double k = 1.0, k1 = 0.2, k2 = 1.0 / std::sqrt(2.0), k2p = 1.0 / std::sqrt(2.0);
    std::vector<double> R_list{10, 20, 40, 80, 160};
    contract->add_option("target", target, "ps|eq|ho|U|W|V")->required();
    contract->add_option("--k", k);
    contract->add_option("--k1", k1);
    contract->add_option("--k2", k2);
    contract->add_option("--k2p", k2p);
    contract->add_option("--m", m);
    contract->add_option("--parity", parity)->check(CLI::IsMember({"+", "-"}));
    contract->add_option("--R", R_list)->delimiter(',');
    contract->add_option("--out,-o", out);
    contract->add_option("--format", format)->check(CLI::IsMember({"csv", "jsonl"}));

    // figure
    auto* figure = app.add_subcommand("figure", "emit figure-reproduction data");
    std::string fig_id;
    figure->add_option("id", fig_id, "figure number")->required();
    figure->add_option("--out,-o", out);
    figure->add_option("--format", format)->check(CLI::IsMember({"csv", "jsonl"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (eval->parsed())
            return cmd_eval(echo, basis, R, rho, s, m, nu, GridSpec::parse(g1_text),
                            GridSpec::parse(g2_text), out, format);
        if (coeff->parsed())
            return cmd_coeff(echo, family, rho, s_list, m_list, GridSpec::parse(nu_text),
                             route, out, format);
        if (verify_cmd->parsed()) return cmd_verify(echo, filter, out, format, quiet);
        if (contract->parsed())
            return cmd_contract(echo, target, k, k1, k2, k2p, m, parity, R_list, out,
                                format);
        if (figure->parsed()) return cmd_figure(echo, fig_id, out, format);
    } catch (const DomainError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
    return 2;
}

} // namespace hyperbasis::cli
