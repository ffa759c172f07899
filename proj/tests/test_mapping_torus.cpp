#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "zetaflow/errors.hpp"
#include "zetaflow/torus/suspension.hpp"

using namespace zetaflow;
using cdet::LogMonomial;
using exact::Int;
using exact::IntMatrix;
using exact::Rat;
using torus::PeriodScale;

namespace {

Rat rat(long long num, long long den = 1) { return Rat(Int(num), Int(den)); }

struct Group {
    long long rank;
    std::vector<Int> torsion;
};

void check_summary(const cdet::HomologySummary& got, const std::vector<Group>& expected) {
    REQUIRE(got.size() == expected.size());
    for (size_t i = 0; i < got.size(); ++i) {
        CHECK(got[i].free_rank == expected[i].rank);
        CHECK(got[i].torsion == expected[i].torsion);
    }
}

// random unimodular matrix: a word in elementary shears and signed swaps
IntMatrix random_unimodular(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> coin(0, 2);
    std::uniform_int_distribution<int> idx(0, n - 1);
    std::uniform_int_distribution<long long> amount(-2, 2);
    IntMatrix m = IntMatrix::identity(n);
    for (int step = 0; step < 8; ++step) {
        IntMatrix e = IntMatrix::identity(n);
        const int i = idx(rng), j = idx(rng);
        switch (coin(rng)) {
            case 0:
                if (i != j) e.at(i, j) = amount(rng);
                break;
            case 1:
                e.at(i, i) = -1;
                break;
            default:
                if (i != j) {
                    e.at(i, i) = 0;
                    e.at(j, j) = 0;
                    e.at(i, j) = 1;
                    e.at(j, i) = -1;
                }
        }
        m = m * e;
    }
    return m;
}

const IntMatrix kQuarterTurn = IntMatrix::from_rows({{0, -1}, {1, 0}});
const IntMatrix kAnosov = IntMatrix::from_rows({{2, 1}, {1, 1}});
const IntMatrix kUnipotent = IntMatrix::from_rows({{1, 1}, {0, 1}});
// companion matrix of 1 + t + t^2 + t^3 + t^4 (order five)
const IntMatrix kOrderFive =
    IntMatrix::from_rows({{0, 0, 0, -1}, {1, 0, 0, -1}, {0, 1, 0, -1}, {0, 0, 1, -1}});

} // namespace

TEST_CASE("system constructors validate their input") {
    CHECK_THROWS_AS(torus::torus_system(IntMatrix::from_rows({{2, 0}, {0, 1}}),
                                        PeriodScale::log_integer(2)),
                    NotUnimodular);
    CHECK_THROWS_AS(torus::torus_system(IntMatrix::from_rows({{1, 2, 3}}),
                                        PeriodScale::log_integer(2)),
                    ValidationError);
    CHECK_THROWS_AS(torus::graded_system({}, PeriodScale::log_integer(2)), ValidationError);
    CHECK_THROWS_AS(torus::graded_system({IntMatrix(1, 2)}, PeriodScale::log_integer(2)),
                    ValidationError);
    CHECK_THROWS_AS(torus::graded_system({IntMatrix(0, 0)}, PeriodScale::log_integer(2)),
                    ValidationError);
    CHECK_THROWS_AS(PeriodScale::log_integer(1), ValidationError);
    CHECK_THROWS_AS(PeriodScale::plain(0.0), ValidationError);
    CHECK_THROWS_AS(PeriodScale::plain(-2.0), ValidationError);
    CHECK(PeriodScale::log_integer(3).value() == doctest::Approx(std::log(3.0)));
    CHECK(PeriodScale::plain(2.5).value() == doctest::Approx(2.5));
}

TEST_CASE("torus systems carry one exterior power per degree") {
    const auto e = torus::torus_system(kAnosov, PeriodScale::log_integer(2));
    REQUIRE(e.top_degree() == 2);
    CHECK(e.action[0] == IntMatrix::identity(1));
    CHECK(e.action[1] == kAnosov);
    CHECK(e.action[2] == IntMatrix::from_rows({{1}}));
}

TEST_CASE("pinned cohomology: circle with the identity map") {
    const auto e = torus::graded_system({IntMatrix::from_rows({{1}}), IntMatrix::from_rows({{1}})},
                                        PeriodScale::log_integer(2));
    const auto s = torus::suspension_cohomology(e);
    check_summary(torus::cohomology_summary(s), {{1, {}}, {2, {}}, {1, {}}});
    CHECK(torus::check_semisimple_at_one(e));
    // cup with the flow class is an isomorphism on both fixed parts here
    CHECK(cdet::is_acyclic(torus::psi_cup_complex(s)));
    CHECK(torus::special_value_rhs(s) == LogMonomial::one());
}

TEST_CASE("pinned cohomology: quarter turn on the two-torus") {
    const auto e = torus::torus_system(kQuarterTurn, PeriodScale::log_integer(2));
    const auto s = torus::suspension_cohomology(e);
    check_summary(torus::cohomology_summary(s),
                  {{1, {}}, {1, {}}, {1, {Int(2)}}, {1, {}}});
    CHECK(torus::check_semisimple_at_one(e));
    CHECK(cdet::is_acyclic(torus::psi_cup_complex(s)));
    CHECK(torus::special_value_rhs(s) == LogMonomial(rat(2), -2));
}

TEST_CASE("pinned cohomology: hyperbolic automorphism") {
    const auto e = torus::torus_system(kAnosov, PeriodScale::log_integer(2));
    const auto s = torus::suspension_cohomology(e);
    check_summary(torus::cohomology_summary(s), {{1, {}}, {1, {}}, {1, {}}, {1, {}}});
    CHECK(torus::special_value_rhs(s) == LogMonomial(rat(1), -2));
}

TEST_CASE("pinned cohomology: order-five companion matrix") {
    const auto e = torus::torus_system(kOrderFive, PeriodScale::log_integer(2));
    CHECK(kOrderFive.pow(5) == IntMatrix::identity(4));
    const auto s = torus::suspension_cohomology(e);
    check_summary(torus::cohomology_summary(s),
                  {{1, {}}, {1, {}}, {2, {Int(5)}}, {2, {}}, {1, {Int(5)}}, {1, {}}});
    CHECK(torus::check_semisimple_at_one(e));
    CHECK(torus::special_value_rhs(s) == LogMonomial(rat(5), -4));
}

TEST_CASE("unipotent monodromy is not semisimple and the cup complex stalls") {
    const auto e = torus::torus_system(kUnipotent, PeriodScale::log_integer(2));
    CHECK_FALSE(torus::check_semisimple_at_one(e));
    const auto s = torus::suspension_cohomology(e);
    check_summary(torus::cohomology_summary(s), {{1, {}}, {2, {}}, {2, {}}, {1, {}}});
    CHECK_FALSE(cdet::is_acyclic(torus::psi_cup_complex(s)));
    CHECK_THROWS_AS(torus::special_value_rhs(s), NotAcyclic);
}

TEST_CASE("suspension cohomology has euler characteristic zero") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> size_dist(1, 4);
    for (int trial = 0; trial < 15; ++trial) {
        const auto a = random_unimodular(rng, size_dist(rng));
        const auto s = torus::suspension_cohomology(
            torus::torus_system(a, PeriodScale::log_integer(2)));
        long long chi = 0;
        int sign = 1;
        for (const auto& h : torus::cohomology_summary(s)) {
            chi += sign * h.free_rank;
            sign = -sign;
        }
        CHECK(chi == 0);
    }
}

TEST_CASE("degreewise splitting sizes are consistent") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 10; ++trial) {
        const auto a = random_unimodular(rng, 3);
        const auto e = torus::torus_system(a, PeriodScale::log_integer(2));
        const auto s = torus::suspension_cohomology(e);
        for (int i = 0; i <= s.top_degree(); ++i) {
            const auto& d = s.degrees[i];
            CHECK(d.rank == d.coker_rank + d.ker_rank);
            CHECK(d.ker_basis.cols() == d.ker_rank);
            CHECK(d.coker_lift.cols() == d.coker_rank);
            if (d.coker_rank > 0) CHECK(d.coker_projection.rows() == d.coker_rank);
            // the kernel sits one matrix earlier than the cokernel
            if (i <= e.top_degree()) {
                const IntMatrix m = e.action[i] - IntMatrix::identity(e.action[i].rows());
                CHECK(d.ker_rank == m.cols() - exact::rank(m));
            }
        }
    }
}

TEST_CASE("homology torsion sits one degree below cohomology torsion") {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<int> size_dist(2, 4);
    for (int trial = 0; trial < 12; ++trial) {
        const auto a = random_unimodular(rng, size_dist(rng));
        const auto e = torus::torus_system(a, PeriodScale::log_integer(2));
        const auto coh = torus::cohomology_summary(torus::suspension_cohomology(e));
        const auto hom = torus::homology_summary(e);
        REQUIRE(coh.size() == hom.size());
        for (size_t i = 0; i < hom.size(); ++i) {
            CHECK(hom[i].free_rank == coh[i].free_rank);
            if (i + 1 < coh.size())
                CHECK(hom[i].torsion == coh[i + 1].torsion);
            else
                CHECK(hom[i].torsion.empty());
        }
    }
}

TEST_CASE("semisimple at one forces an exact cup complex") {
    std::mt19937_64 rng(44);
    std::uniform_int_distribution<int> size_dist(1, 4);
    int semisimple_seen = 0;
    for (int trial = 0; trial < 25; ++trial) {
        const auto a = random_unimodular(rng, size_dist(rng));
        const auto e = torus::torus_system(a, PeriodScale::log_integer(2));
        if (!torus::check_semisimple_at_one(e)) continue;
        ++semisimple_seen;
        CHECK(cdet::is_acyclic(torus::psi_cup_complex(torus::suspension_cohomology(e))));
    }
    CHECK(semisimple_seen >= 10);
}

TEST_CASE("invariants do not depend on the choice of coordinates") {
    std::mt19937_64 rng(45);
    const std::vector<IntMatrix> subjects = {kQuarterTurn, kAnosov, kOrderFive};
    for (const auto& a : subjects) {
        const auto e = torus::torus_system(a, PeriodScale::log_integer(2));
        const auto s = torus::suspension_cohomology(e);
        const auto coh = torus::cohomology_summary(s);
        const LogMonomial rhs = torus::special_value_rhs(s);
        for (int trial = 0; trial < 4; ++trial) {
            const IntMatrix u = random_unimodular(rng, a.rows());
            REQUIRE(abs(det(u)) == 1);
            // integral inverse of a unimodular matrix, via the rational one
            const exact::RatMatrix ui = exact::RatMatrix::from(u).inverse();
            IntMatrix uinv(a.rows(), a.rows());
            for (int i = 0; i < a.rows(); ++i)
                for (int j = 0; j < a.rows(); ++j) {
                    REQUIRE(denominator(ui.at(i, j)) == 1);
                    uinv.at(i, j) = numerator(ui.at(i, j));
                }
            const IntMatrix conj = u * a * uinv;
            const auto e2 = torus::torus_system(conj, PeriodScale::log_integer(2));
            const auto s2 = torus::suspension_cohomology(e2);
            const auto coh2 = torus::cohomology_summary(s2);
            REQUIRE(coh2.size() == coh.size());
            for (size_t i = 0; i < coh.size(); ++i) {
                CHECK(coh2[i].free_rank == coh[i].free_rank);
                CHECK(coh2[i].torsion == coh[i].torsion);
            }
            CHECK(torus::special_value_rhs(s2) == rhs);
        }
    }
}

TEST_CASE("period group and flow class") {
    const auto e = torus::torus_system(kAnosov, PeriodScale::log_integer(3));
    const auto g = torus::period_group(e);
    CHECK(g.rank == 1);
    CHECK(g.generator == LogMonomial::ell(1));
    CHECK(g.ell.p == 3);

    const auto s = torus::suspension_cohomology(e);
    CHECK(s.psi == LogMonomial::ell(1));

    const auto plain = torus::period_group(
        torus::torus_system(kAnosov, PeriodScale::plain(2.5)));
    CHECK(plain.rank == 1);
    CHECK(plain.generator == LogMonomial::ell(1));
    CHECK(plain.ell.value() == doctest::Approx(2.5));
}

TEST_CASE("graded systems agree with their torus counterparts") {
    const auto direct = torus::torus_system(kQuarterTurn, PeriodScale::log_integer(2));
    const auto graded = torus::graded_system(
        {IntMatrix::identity(1), kQuarterTurn, IntMatrix::from_rows({{1}})},
        PeriodScale::log_integer(2));
    const auto s1 = torus::suspension_cohomology(direct);
    const auto s2 = torus::suspension_cohomology(graded);
    const auto c1 = torus::cohomology_summary(s1);
    const auto c2 = torus::cohomology_summary(s2);
    REQUIRE(c1.size() == c2.size());
    for (size_t i = 0; i < c1.size(); ++i) {
        CHECK(c1[i].free_rank == c2[i].free_rank);
        CHECK(c1[i].torsion == c2[i].torsion);
    }
    CHECK(torus::special_value_rhs(s1) == torus::special_value_rhs(s2));
}
