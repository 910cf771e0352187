#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "niep/classify.hpp"
#include "niep/conditions.hpp"
#include "niep/spectrum.hpp"
#include "niep/verify.hpp"
#include "oracles.hpp"

using namespace niep;

namespace {
Rational R(long n, long d = 1) { return Rational(n, d); }

Spectrum S(std::initializer_list<Rational> vals) { return Spectrum(std::vector<Rational>(vals)); }

const Spectrum sigma33{std::vector<Rational>{R(3), R(3), R(-2), R(-2), R(-2)}};
const Spectrum tau{std::vector<Rational>{R(1), R(1), R(-2, 3), R(-2, 3), R(-2, 3)}};
}  // namespace

TEST_CASE("spectrum: construction invariants") {
    CHECK_THROWS_AS(Spectrum(std::vector<Rational>{}), DomainError);
    const Spectrum sp(std::vector<Rational>{R(-2), R(3), R(3)});
    CHECK(sp[0] == R(3));
    CHECK(sp[2] == R(-2));
    CHECK(sp.leading_multiplicity() == 2);

    // one-value lists classify through the single-positive-value rule
    const Classification one = classify(Spectrum(std::vector<Rational>{R(5)}));
    CHECK(one.niep.status == Status::REALIZABLE);
    CHECK(one.niep.certificate->source == "suleimanova_companion");
    const Classification neg = classify(Spectrum(std::vector<Rational>{R(-1)}));
    CHECK(neg.niep.status == Status::NOT_REALIZABLE);
}

TEST_CASE("power sums: frozen values") {
    CHECK(power_sum(sigma33, 2) == R(30));
    CHECK(power_sum(sigma33, 4) == R(210));
    CHECK(power_sum(tau, 1) == R(0));
    CHECK(power_sum(S({R(1), R(2)}), 3) == R(9));
    CHECK_THROWS_AS(power_sum(tau, 0), DomainError);

    const PowerSums ps = compute_power_sums(sigma33, 6);
    for (int k = 1; k <= 6; ++k) CHECK(ps.at(k) == power_sum(sigma33, k));
}

TEST_CASE("check_perron") {
    CHECK(check_perron(sigma33).satisfied);
    CHECK(!check_perron(S({R(2), R(-3)})).satisfied);
    CHECK(check_perron(S({R(5), R(5), R(-5)})).satisfied);
    CHECK(!check_perron(S({R(-1)})).satisfied);
}

TEST_CASE("check_power_sums") {
    CHECK(check_power_sums(sigma33, 10).satisfied);
    const auto rep = check_power_sums(S({R(1), R(-2)}), 1);
    CHECK(!rep.satisfied);
    REQUIRE(rep.witness.size() == 2);
    CHECK(rep.witness[0].second == R(1));   // violating k
    CHECK(rep.witness[1].second == R(-1));  // s_1
    CHECK(check_power_sums(S({R(3), R(-1), R(-1), R(-1)}), 6).satisfied);
}

TEST_CASE("check_jll") {
    CHECK(check_jll(tau, 10, 10).satisfied);
    CHECK(check_jll(S({R(2), R(-1), R(-1), R(-1)}), 1, 1).satisfied);  // m = 1 is vacuous

    // (1,-1,-1): fine at k=1, m=2 (9 >= 1) but violated at k=1, m=3:
    // n^2 s_3 = 9*(-1) < s_1^3 = -1
    CHECK(check_jll(S({R(1), R(-1), R(-1)}), 1, 2).satisfied);
    const auto rep = check_jll(S({R(1), R(-1), R(-1)}), 6, 6);
    CHECK(!rep.satisfied);
    REQUIRE(rep.witness.size() == 4);
    CHECK(rep.witness[0].second == R(1));  // k
    CHECK(rep.witness[1].second == R(3));  // m
    CHECK(rep.witness[2].second == R(-9));
    CHECK(rep.witness[3].second == R(-1));
}

TEST_CASE("check_lm_trace_zero") {
    const auto rep = check_lm_trace_zero(sigma33);
    CHECK(rep.applicable);
    CHECK(!rep.satisfied);
    REQUIRE(rep.witness.size() == 2);
    CHECK(rep.witness[0].second == R(840));
    CHECK(rep.witness[1].second == R(900));

    // (4,2,-2,-2,-2): 4*s4 = 1280 >= s2^2 = 1024
    const auto rep2 = check_lm_trace_zero(S({R(4), R(2), R(-2), R(-2), R(-2)}));
    CHECK(rep2.applicable);
    CHECK(rep2.satisfied);
    CHECK(rep2.witness[0].second == R(1280));
    CHECK(rep2.witness[1].second == R(1024));

    CHECK(!check_lm_trace_zero(S({R(1), R(1), R(1), R(1), R(1)})).applicable);
    CHECK(!check_lm_trace_zero(S({R(1), R(-1)})).applicable);
}

TEST_CASE("check_extreme") {
    const auto rep = check_extreme(sigma33);
    CHECK(rep.applicable);
    CHECK(!rep.satisfied);
    CHECK(rep.witness[0].second == R(-60));

    // sigma_t at t = 1/2: value derived twice (direct sums and the audit quartic)
    const auto rep2 = check_extreme(S({R(7, 2), R(3), R(-2), R(-2), R(-2)}));
    CHECK(rep2.satisfied);
    CHECK(rep2.witness[0].second == R(607, 32));

    const auto rep3 = check_extreme(S({R(1), R(0), R(0), R(0), R(0)}));
    CHECK(rep3.satisfied);
    CHECK(rep3.witness[0].second == R(7, 2));

    CHECK(!check_extreme(S({R(1), R(-1)})).applicable);
}

TEST_CASE("check_mn_symmetric") {
    const auto rep = check_mn_symmetric(S({R(15, 4), R(9, 4), R(-2), R(-2), R(-2)}));
    CHECK(rep.applicable);
    CHECK(!rep.satisfied);  // 1/4 > 0

    CHECK(check_mn_symmetric(S({R(4), R(2), R(-2), R(-2), R(-2)})).satisfied);  // boundary

    // perturbed list boundary at t = 9/10
    auto perturbed = [](const Rational& t) {
        return S({R(3) + t, R(3) - t, R(-19, 10), R(-2), R(-21, 10)});
    };
    CHECK(check_mn_symmetric(perturbed(R(9, 10))).satisfied);
    CHECK(!check_mn_symmetric(perturbed(R(89, 100))).satisfied);
}

TEST_CASE("check_suleimanova") {
    CHECK(check_suleimanova(S({R(3), R(-1), R(-1), R(-1)})).applicable);
    CHECK(check_suleimanova(S({R(3), R(-1), R(-1), R(-1)})).satisfied);
    const auto rep = check_suleimanova(S({R(1), R(-2)}));
    CHECK(rep.applicable);
    CHECK(!rep.satisfied);
    CHECK(!check_suleimanova(sigma33).applicable);
}

TEST_CASE("reducible_partition_scan") {
    CHECK(reducible_partition_scan(sigma33).empty());
    CHECK(reducible_partition_scan(tau).empty());

    const auto viable = reducible_partition_scan(S({R(4), R(2), R(-2), R(-2), R(-2)}));
    REQUIRE(viable.size() == 1);
    CHECK(viable[0].part1 == std::vector<Rational>{R(4), R(-2), R(-2)});
    CHECK(viable[0].part2 == std::vector<Rational>{R(2), R(-2)});

    const auto pair = reducible_partition_scan(S({R(1), R(1)}));
    REQUIRE(pair.size() == 1);
    CHECK(pair[0].part1 == std::vector<Rational>{R(1)});
    CHECK(pair[0].part2 == std::vector<Rational>{R(1)});

    CHECK_THROWS_AS(reducible_partition_scan(S({R(1)})), DomainError);
}

TEST_CASE("classify: the trace-zero non-realizable list") {
    const Classification cls = classify(sigma33);
    CHECK(cls.niep.status == Status::NOT_REALIZABLE);
    CHECK(cls.drniep.status == Status::NOT_REALIZABLE);
    CHECK(cls.sniep.status == Status::NOT_REALIZABLE);
    REQUIRE(cls.niep.certificate.has_value());
    CHECK(cls.niep.certificate->kind == Certificate::Kind::Violation);
    CHECK(cls.niep.certificate->source == "lm_trace_zero");
    CHECK(cls.partition_scan_ran);
    CHECK(cls.viable_partitions.empty());

    // same conclusion for the scaled version tau = sigma/3
    const Classification cls_tau = classify(tau);
    CHECK(cls_tau.niep.status == Status::NOT_REALIZABLE);
    CHECK(cls_tau.partition_scan_ran);
    CHECK(cls_tau.viable_partitions.empty());
}

TEST_CASE("classify: family instance with Jordan-separated problems") {
    const Classification cls = classify(S({R(15, 4), R(9, 4), R(-2), R(-2), R(-2)}));

    CHECK(cls.niep.status == Status::REALIZABLE);
    REQUIRE(cls.niep.certificate.has_value());
    CHECK(cls.niep.certificate->kind == Certificate::Kind::Matrix);
    CHECK(cls.niep.certificate->source == "family:lm_sigma_hat");
    CHECK(*cls.niep.certificate->parameter == R(3, 4));

    CHECK(cls.drniep.status == Status::NOT_REALIZABLE);
    CHECK(cls.drniep.certificate->source == "diagonalizable_minimum_t");

    CHECK(cls.sniep.status == Status::NOT_REALIZABLE);
    CHECK(cls.sniep.certificate->source == "mn_symmetric");

    // the NIEP certificate replays through the verifier
    const auto& m = std::get<MatrixQ>(cls.niep.certificate->matrix);
    CHECK(verify_spectrum(m, S({R(15, 4), R(9, 4), R(-2), R(-2), R(-2)})).ok());
}

TEST_CASE("classify: symmetric catalog instance certifies all three problems") {
    const Classification cls = classify(S({R(4), R(2), R(-2), R(-2), R(-2)}));
    CHECK(cls.niep.status == Status::REALIZABLE);
    CHECK(cls.sniep.status == Status::REALIZABLE);
    CHECK(cls.sniep.certificate->source == "catalog:sym_sigma_hat_t1");
    CHECK(cls.drniep.status == Status::REALIZABLE);
    CHECK(cls.drniep.certificate->source == "catalog:sym_sigma_hat_t1");

    const Classification cls2 = classify(S({R(4), R(3), R(-2), R(-2), R(-2)}));
    CHECK(cls2.sniep.status == Status::REALIZABLE);
    CHECK(cls2.sniep.certificate->source == "catalog:sym_sigma_t1");
}

TEST_CASE("classify: single-positive list gets a companion certificate") {
    const Classification cls = classify(S({R(3), R(-1), R(-1), R(-1)}));
    CHECK(cls.niep.status == Status::REALIZABLE);
    REQUIRE(cls.niep.certificate.has_value());
    CHECK(cls.niep.certificate->source == "suleimanova_companion");
    const auto& m = std::get<MatrixQ>(cls.niep.certificate->matrix);
    CHECK(m.is_nonnegative());
    CHECK(verify_spectrum(m, S({R(3), R(-1), R(-1), R(-1)})).ok());

    const Classification neg = classify(S({R(1), R(-2)}));
    CHECK(neg.niep.status == Status::NOT_REALIZABLE);
    CHECK(neg.niep.certificate->source == "perron");
}

TEST_CASE("classify: top-two shift deduction and its boundary") {
    // (3 + that, 3, -2, -2, -2) realizable for that >= 2*t0 ~ 0.87598
    const Classification above = classify(S({R(3) + R(88, 100), R(3), R(-2), R(-2), R(-2)}));
    CHECK(above.niep.status == Status::REALIZABLE);
    REQUIRE(above.niep.certificate.has_value());
    CHECK(above.niep.certificate->kind == Certificate::Kind::Deduction);
    CHECK(above.niep.certificate->source == "guo_shift");
    CHECK(*above.niep.certificate->parameter == R(44, 100));
    CHECK(above.sniep.status == Status::NOT_REALIZABLE);  // 3 - 2 = 1 > trace

    const Classification below = classify(S({R(3) + R(87, 100), R(3), R(-2), R(-2), R(-2)}));
    CHECK(below.niep.status == Status::UNKNOWN);

    // a shifted catalog instance
    const Classification cat = classify(S({R(9, 2), R(7, 2), R(-2), R(-2), R(-2)}));
    CHECK(cat.niep.status == Status::REALIZABLE);
    CHECK(cat.niep.certificate->kind == Certificate::Kind::Deduction);
}

TEST_CASE("classify: perturbed family below its threshold is already excluded") {
    auto perturbed = [](const Rational& t) {
        return S({R(3) + t, R(3) - t, R(-19, 10), R(-2), R(-21, 10)});
    };
    const Classification good = classify(perturbed(R(1, 2)));
    CHECK(good.niep.status == Status::REALIZABLE);
    CHECK(good.niep.certificate->source == "family:perturbed");
    CHECK(good.drniep.status == Status::REALIZABLE);  // five distinct eigenvalues
    CHECK(good.sniep.status == Status::NOT_REALIZABLE);

    const Classification bad = classify(perturbed(R(2, 5)));
    CHECK(bad.niep.status == Status::NOT_REALIZABLE);
    CHECK(bad.niep.certificate->source == "lm_trace_zero");
}

TEST_CASE("classify: permutation invariance and unknown stays unknown") {
    const Spectrum shuffled{std::vector<Rational>{R(-2), R(15, 4), R(-2), R(9, 4), R(-2)}};
    const Classification a = classify(shuffled);
    const Classification b = classify(S({R(15, 4), R(9, 4), R(-2), R(-2), R(-2)}));
    CHECK(a.niep.status == b.niep.status);
    CHECK(a.drniep.status == b.drniep.status);
    CHECK(a.sniep.status == b.sniep.status);

    CHECK(classify(S({R(1), R(1, 2), R(-1, 3)})).niep.status == Status::UNKNOWN);
}

TEST_CASE("necessary-condition verdicts are scale covariant") {
    std::mt19937 rng(8001);
    for (int iter = 0; iter < 30; ++iter) {
        const int n = 2 + static_cast<int>(rng() % 4);
        std::vector<Rational> vals;
        for (int i = 0; i < n; ++i) vals.push_back(oracles::random_rational(rng, 8, 3));
        const Spectrum sp(vals);
        for (const Rational& c : {R(2), R(1, 3), R(7, 5)}) {
            std::vector<Rational> scaled;
            for (const auto& v : sp.values()) scaled.push_back(c * v);
            const Spectrum sc(scaled);
            CHECK(check_perron(sp).satisfied == check_perron(sc).satisfied);
            CHECK(check_power_sums(sp, 6).satisfied == check_power_sums(sc, 6).satisfied);
            CHECK(check_jll(sp, 4, 4).satisfied == check_jll(sc, 4, 4).satisfied);
            const auto a = check_lm_trace_zero(sp), b = check_lm_trace_zero(sc);
            CHECK(a.applicable == b.applicable);
            if (a.applicable) CHECK(a.satisfied == b.satisfied);
        }
    }
}

TEST_CASE("JLL restated on matrices: trace inequalities for random nonnegative matrices") {
    std::mt19937 rng(8002);
    for (int iter = 0; iter < 100; ++iter) {
        const int n = 2 + static_cast<int>(iter % 4);
        const MatrixQ a = oracles::random_nonneg_matrix(rng, n, 6, 3);
        // powers 1..16
        std::vector<MatrixQ> pw{a};
        for (int k = 2; k <= 16; ++k) pw.push_back(pw.back() * a);
        for (int k = 1; k <= 4; ++k)
            for (int m = 1; m <= 4; ++m) {
                const Rational lhs =
                    pow(Rational(n), static_cast<unsigned>(m - 1)) * pw[k * m - 1].trace();
                const Rational rhs = pow(pw[k - 1].trace(), static_cast<unsigned>(m));
                CHECK(lhs >= rhs);
            }
    }
}

TEST_CASE("certified realizations have matching trace power sums") {
    const std::vector<Spectrum> specs = {
        S({R(15, 4), R(9, 4), R(-2), R(-2), R(-2)}),
        S({R(3), R(-1), R(-1), R(-1)}),
        S({R(7, 2), R(5, 2), R(-19, 10), R(-2), R(-21, 10)}),
    };
    for (const auto& sp : specs) {
        const Classification cls = classify(sp);
        REQUIRE(cls.niep.status == Status::REALIZABLE);
        REQUIRE(cls.niep.certificate->kind == Certificate::Kind::Matrix);
        const auto& m = std::get<MatrixQ>(cls.niep.certificate->matrix);
        MatrixQ p = m;
        for (int k = 1; k <= 5; ++k) {
            CHECK(p.trace() == power_sum(sp, k));
            p = p * m;
        }
    }
}

namespace {

ConditionReport replay_checker(const std::string& name, const Spectrum& sp) {
    if (name == "perron") return check_perron(sp);
    if (name == "power_sums") return check_power_sums(sp, 10);
    if (name == "jll") return check_jll(sp, 10, 10);
    if (name == "lm_trace_zero") return check_lm_trace_zero(sp);
    if (name == "extreme") return check_extreme(sp);
    if (name == "mn_symmetric") return check_mn_symmetric(sp);
    if (name == "suleimanova") return check_suleimanova(sp);
    throw DomainError("unknown condition name: " + name);
}

}  // namespace

TEST_CASE("verdict soundness: certificates replay") {
    const std::vector<Spectrum> specs = {
        sigma33,
        tau,
        S({R(15, 4), R(9, 4), R(-2), R(-2), R(-2)}),
        S({R(4), R(2), R(-2), R(-2), R(-2)}),
        S({R(4), R(3), R(-2), R(-2), R(-2)}),
        S({R(3), R(-1), R(-1), R(-1)}),
        S({R(1), R(-2)}),
        S({R(7, 2), R(5, 2), R(-19, 10), R(-2), R(-21, 10)}),
        S({R(388, 100), R(3), R(-2), R(-2), R(-2)}),
    };
    for (const auto& sp : specs) {
        const Classification cls = classify(sp);
        for (const Verdict* v : {&cls.niep, &cls.drniep, &cls.sniep}) {
            if (!v->certificate) continue;
            const Certificate& cert = *v->certificate;
            if (v->status == Status::NOT_REALIZABLE &&
                cert.kind == Certificate::Kind::Violation) {
                const ConditionReport replay = replay_checker(cert.source, sp);
                CHECK(replay.violated());
                REQUIRE(cert.violation.has_value());
                CHECK(replay.witness == cert.violation->witness);
            }
            if (v->status == Status::NOT_REALIZABLE &&
                cert.kind == Certificate::Kind::PartitionScan) {
                CHECK(sp.leading_multiplicity() >= 2);
                CHECK(reducible_partition_scan(sp).empty());
            }
            if (v->status == Status::REALIZABLE && cert.kind == Certificate::Kind::Matrix) {
                if (const auto* mq = std::get_if<MatrixQ>(&cert.matrix))
                    CHECK(verify_spectrum(*mq, sp).ok());
                if (const auto* mx = std::get_if<MatrixQuad>(&cert.matrix))
                    CHECK(verify_spectrum(*mx, sp).ok());
            }
        }
    }
}

TEST_CASE("extreme-condition root audit flags the reference discrepancy") {
    const ExtremeAuditRecord rec = sigma_t_extreme_audit();

    // quartic built from the printed inequality: (7/2)t^4 + 42t^3 + 150t^2 + 72t - 60
    CHECK(rec.quartic == Poly{R(-60), R(72), R(150), R(42), R(7, 2)});

    // the quartic agrees with check_extreme on sigma_t samples
    for (const Rational& t : {R(1, 2), R(2, 5), R(1)}) {
        const auto rep = check_extreme(S({R(3) + t, R(3), R(-2), R(-2), R(-2)}));
        CHECK(rec.quartic(t) == rep.witness[0].second);
    }

    CHECK(rec.root.width() <= R(1, 1000000000000L));
    // smallest nonnegative root is 0.4203587..., not 0.39671
    CHECK(abs(rec.root.midpoint() - Rational::from_string("0.4203587")) < R(1, 1000000));
    CHECK(rec.reference == R(39671, 100000));
    CHECK(rec.discrepancy);
    CHECK(rec.abs_diff > R(1, 1000));
    CHECK(rec.abs_diff < R(3, 100));
}
