#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "hyperbasis/verify.hpp"

using namespace hyperbasis;

TEST_CASE("registry ids are sorted and unique") {
    auto ids = verify::suite_check_ids();
    REQUIRE(!ids.empty());
    std::set<std::string> uniq(ids.begin(), ids.end());
    CHECK(uniq.size() == ids.size());
    CHECK(std::is_sorted(ids.begin(), ids.end()));
}

TEST_CASE("filter semantics") {
    // 'W' prefix selects exactly the six W-coefficient checks
    auto reports = verify::run_suite("W");
    CHECK(reports.size() == 6);
    for (const auto& r : reports) {
        CHECK(r.id.rfind("W.", 0) == 0);
        CHECK(r.passed);
    }
    // empty filter matches nothing
    CHECK(verify::run_suite("").empty());
}

TEST_CASE("suite determinism: two runs produce bit-identical reports") {
    auto a = verify::run_suite("F");
    auto b = verify::run_suite("F");
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(verify::to_jsonl(a[i]) == verify::to_jsonl(b[i]));
}

TEST_CASE("individual identity checks pass") {
    SUBCASE("macdonald product") {
        auto r = verify::check_macdonald_product(1.0, 0.0, 1.0);
        CHECK(r.passed);
        CHECK(r.abs_err <= 10.0 * r.err_budget + 1e-9);
        CHECK(verify::check_macdonald_product(0.5, 1.0, 2.0).passed);
    }
    SUBCASE("macdonald product decays at large xt") {
        auto near = verify::check_macdonald_product(1.0, 0.0, 1.0);
        auto far = verify::check_macdonald_product(1.0, 25.0, 1.0);
        CHECK(std::abs(far.lhs) < 0.1 * std::abs(near.lhs));
        CHECK(far.passed);
    }
    SUBCASE("mellin barnes") {
        auto r = verify::check_mellin_barnes(1.0);
        CHECK(r.passed);
        CHECK(r.rel_err < 1e-8);
        // rho = 0 limit: 4 pi^2 |G(1/2)|^2 = 4 pi^3
        auto r0 = verify::check_mellin_barnes(1e-8);
        CHECK(std::abs(r0.rhs.real() - 4.0 * std::pow(M_PI, 3)) < 1e-6);
        CHECK(r0.passed);
    }
    SUBCASE("legendre fourier, tau2 = 0 reduces to Mellin-Barnes") {
        CHECK(verify::check_legendre_fourier(1.0, 0.0).passed);
        CHECK(verify::check_legendre_fourier(1.0, 0.8).passed);
    }
    SUBCASE("legendre measure") {
        auto d = verify::check_legendre_measure(1.0, 1, 1);
        CHECK(d.passed);
        CHECK(d.rel_err < 1e-7);
        auto o = verify::check_legendre_measure(1.0, 1, 3);
        CHECK(o.passed);
        // different parity: result is real
        auto p = verify::check_legendre_measure(1.0, 1, 2);
        CHECK(std::fabs(p.rhs.imag()) < 1e-10);
        CHECK(p.passed);
    }
    SUBCASE("u orthogonality values") {
        auto r22 = verify::check_u_orthogonality(1.0, 2, 2, true);
        CHECK(r22.passed);
        CHECK(std::abs(r22.rhs - verify::Complex(0.5)) < 1e-14);
        auto r2m2 = verify::check_u_orthogonality(1.0, 2, -2, true);
        CHECK(std::abs(r2m2.rhs - verify::Complex(0.5)) < 1e-14);
        CHECK(r2m2.passed);
        auto r13 = verify::check_u_orthogonality(1.0, 1, 3, true);
        CHECK(std::abs(r13.rhs) == 0.0);
        CHECK(r13.passed);
        auto mixed = verify::check_u_orthogonality(1.0, 2, 3, true);
        CHECK(mixed.passed); // mixed parity -> 0
    }
    SUBCASE("v orthogonality") {
        CHECK(verify::check_v_orthogonality(1.0, 0, 0).passed);
        CHECK(verify::check_v_orthogonality(1.0, 1, 3).passed);
    }
    SUBCASE("smeared deltas") {
        auto k = verify::check_smeared_delta(verify::SmearedBasis::Macdonald, 1.0, 0.1);
        CHECK(k.passed);
        CHECK(std::abs(k.lhs - verify::Complex(1.0)) < 1e-2);
        CHECK_THROWS_AS(
            verify::check_smeared_delta(verify::SmearedBasis::Macdonald, 0.1, 0.1),
            DomainError);
    }
    SUBCASE("wilson orthogonality") {
        verify::Complex a{0.25, 1.0}, b{0.25, -1.0}, g{0.5, 0.0}, d{0.0, 0.0};
        auto off = verify::check_wilson_orthogonality(0, 1, a, b, g, d);
        CHECK(off.passed);
        auto diag = verify::check_wilson_orthogonality(1, 1, a, b, g, d);
        CHECK(diag.passed);
        CHECK(diag.rel_err < 1e-8);
    }
    SUBCASE("ho-in-eq expansions") {
        CHECK(verify::check_ho_in_eq_expansion_cos(1.0, 1.0, 0.5, 1.0).passed);
        CHECK(verify::check_ho_in_eq_expansion_sin(1.0, 1.0, 0.5, 1.0).passed);
        CHECK(verify::check_ho_in_eq_mellin_cos(1.0, 0.5, 1.0).passed);
        CHECK(verify::check_ho_in_eq_mellin_sin(1.0, 0.5, 1.0).passed);
    }
}

TEST_CASE("error-budget sanity on quadrature-based reports") {
    auto r = verify::check_mellin_barnes(0.5);
    CHECK(r.abs_err <= 10.0 * (r.err_budget + 1e-10 * std::abs(r.lhs)));
    auto k = verify::check_macdonald_product(2.0, 0.7, 1.3);
    CHECK(k.abs_err <= 10.0 * (k.err_budget + 1e-9 * std::abs(k.lhs)));
}

TEST_CASE("jsonl serialization round-trips the flags") {
    auto r = verify::check_mellin_barnes(1.0);
    std::string line = verify::to_jsonl(r);
    CHECK(line.find("\"id\":\"P.mellin-barnes\"") != std::string::npos);
    CHECK(line.find("\"passed\":true") != std::string::npos);
}
