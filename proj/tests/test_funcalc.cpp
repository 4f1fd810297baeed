#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "adjspec/funcalc.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace adjspec;

namespace {

template <class S>
SpectralDecomposition<S> decompose_fixture(const Matrix<S>& a,
                                           const std::vector<std::pair<S, int>>& entries) {
    Spectrum<S> s;
    for (const auto& [lambda, mult] : entries) s.entries.push_back({lambda, mult});
    return decompose(a, s);
}

}  // namespace

TEST_CASE("identity and constant functions") {
    auto a = fixtures::defective4();
    auto dec = decompose_fixture(a, {{ExactScalar(1), 2}, {ExactScalar(-1), 2}});

    std::vector<FunctionJet<ExactScalar>> id_jets, one_jets;
    for (const auto& c : dec.components) {
        id_jets.push_back(jet_power(1, c.lambda, c.multiplicity - 1));
        one_jets.push_back(jet_power(0, c.lambda, c.multiplicity - 1));
    }
    CHECK(apply_function(dec, id_jets) == a);
    CHECK(apply_function(dec, one_jets) == Matrix<ExactScalar>::identity(4));
}

TEST_CASE("feeding the characteristic polynomial reproduces Cayley-Hamilton") {
    auto a = fixtures::hermitian3();
    auto dec = decompose_fixture(a, {{ExactScalar(0), 2}, {ExactScalar(3), 1}});
    std::vector<FunctionJet<ExactScalar>> jets;
    for (const auto& c : dec.components)
        jets.push_back(jet_poly(dec.char_data.p, c.lambda, c.multiplicity - 1));
    CHECK(apply_function(dec, jets).is_zero());
}

TEST_CASE("polynomial jets agree with Horner evaluation, exactly") {
    std::mt19937_64 rng(5150);
    for (int t = 0; t < 10; ++t) {
        auto planted = oracles::planted_jordan(rng, 5);
        auto dec = decompose(planted.a, planted.spectrum);
        int deg = 1 + static_cast<int>(rng() % (2 * planted.a.n()));
        std::vector<ExactScalar> coeffs;
        for (int k = 0; k <= deg; ++k)
            coeffs.push_back(ExactScalar(static_cast<long>(rng() % 9) - 4));
        Poly<ExactScalar> g(coeffs);
        std::vector<FunctionJet<ExactScalar>> jets;
        for (const auto& c : dec.components)
            jets.push_back(jet_poly(g, c.lambda, c.multiplicity - 1));
        CHECK(apply_function(dec, jets) == poly_eval_matrix(g, planted.a));
    }
}

TEST_CASE("power jets are the special case of polynomial jets") {
    auto a = fixtures::defective4();
    auto dec = decompose_fixture(a, {{ExactScalar(1), 2}, {ExactScalar(-1), 2}});
    std::vector<FunctionJet<ExactScalar>> jets;
    for (const auto& c : dec.components) jets.push_back(jet_power(3, c.lambda, 1));
    CHECK(apply_function(dec, jets) == a * a * a);
}

TEST_CASE("resolvent jets match a direct linear solve") {
    auto a = fixtures::hermitian3();
    auto dec = decompose_fixture(a, {{ExactScalar(0), 2}, {ExactScalar(3), 1}});
    ExactScalar w(2);
    std::vector<FunctionJet<ExactScalar>> jets;
    for (const auto& c : dec.components)
        jets.push_back(jet_resolvent(w, c.lambda, c.multiplicity - 1));
    auto direct = mat_solve(ExactScalar(2) * Matrix<ExactScalar>::identity(3) - a,
                            Matrix<ExactScalar>::identity(3));
    CHECK(apply_function(dec, jets) == direct);

    CHECK_THROWS_AS(jet_resolvent(ExactScalar(3), ExactScalar(3), 1), PoleAtEigenvalue);
}

TEST_CASE("exp on the defective fixture matches the closed form and the Taylor oracle") {
    auto a = to_approx(fixtures::defective4());
    auto cd = faddeev_decompose(a);
    auto spectrum = find_roots_approx(cd.p);
    auto dec = decompose(a, spectrum);
    std::vector<FunctionJet<ApproxScalar>> jets;
    for (const auto& c : dec.components) jets.push_back(jet_exp(c.lambda, c.multiplicity - 1));
    auto result = apply_function(dec, jets);

    CHECK(max_abs_diff(result, fixtures::defective4_exp()) < 1e-9);
    CHECK(std::abs(result(3, 0) - ApproxScalar(-3.0 * std::exp(1.0), 0.0)) < 1e-9);
    CHECK(max_abs_diff(result, oracles::expm_oracle(a)) < 1e-8);
}

TEST_CASE("exp semigroup spot check: funcalc(exp A)^2 = funcalc(exp 2A)") {
    auto a = to_approx(fixtures::defective4());
    auto exp_of = [](const Matrix<ApproxScalar>& m) {
        auto cd = faddeev_decompose(m);
        auto dec = decompose(m, find_roots_approx(cd.p));
        std::vector<FunctionJet<ApproxScalar>> jets;
        for (const auto& c : dec.components)
            jets.push_back(jet_exp(c.lambda, c.multiplicity - 1));
        return apply_function(dec, jets);
    };
    auto e1 = exp_of(a);
    auto e2 = exp_of(ApproxScalar(2.0, 0.0) * a);
    CHECK(max_abs_diff(e1 * e1, e2) < 1e-7);
}

TEST_CASE("exp matches the Taylor oracle on random diagonalizable matrices") {
    std::mt19937_64 rng(8456);
    for (int t = 0; t < 5; ++t) {
        auto planted = oracles::planted_diagonalizable(rng, 4);
        auto cd = faddeev_decompose(planted.a);
        auto dec = decompose(planted.a, find_roots_approx(cd.p));
        std::vector<FunctionJet<ApproxScalar>> jets;
        for (const auto& c : dec.components)
            jets.push_back(jet_exp(c.lambda, c.multiplicity - 1));
        CHECK(max_abs_diff(apply_function(dec, jets), oracles::expm_oracle(planted.a)) < 1e-8);
    }
}

TEST_CASE("jets that are too short are rejected") {
    auto a = fixtures::defective4();
    auto dec = decompose_fixture(a, {{ExactScalar(1), 2}, {ExactScalar(-1), 2}});
    std::vector<FunctionJet<ExactScalar>> jets = {{ExactScalar(1), {ExactScalar(1)}},
                                                  {ExactScalar(-1), {ExactScalar(1)}}};
    CHECK_THROWS_AS(apply_function(dec, jets), JetTooShort);
    jets.pop_back();
    CHECK_THROWS_AS(apply_function(dec, jets), JetTooShort);
}

TEST_CASE("resolvent expansion residual: exact fixtures") {
    auto a3 = fixtures::hermitian3();
    auto dec3 = decompose_fixture(a3, {{ExactScalar(0), 2}, {ExactScalar(3), 1}});
    CHECK(resolvent_expansion_residual(dec3, ExactScalar(2)) == 0.0);

    auto a4 = fixtures::defective4();
    auto dec4 = decompose_fixture(a4, {{ExactScalar(1), 2}, {ExactScalar(-1), 2}});
    CHECK(resolvent_expansion_residual(dec4, ExactScalar(1, 2)) == 0.0);
    CHECK(resolvent_expansion_residual(dec4, ExactScalar(mpq_class(2), mpq_class(1))) == 0.0);

    CHECK_THROWS_AS(resolvent_expansion_residual(dec3, ExactScalar(3)), PoleAtEigenvalue);
}

TEST_CASE("resolvent expansion residual: scalar matrix reduces to one term") {
    Matrix<ExactScalar> a = ExactScalar(4) * Matrix<ExactScalar>::identity(3);
    Spectrum<ExactScalar> s;
    s.entries = {{ExactScalar(4), 3}};
    auto dec = decompose(a, s);
    CHECK(resolvent_expansion_residual(dec, ExactScalar(7)) == 0.0);
}

TEST_CASE("resolvent expansion residual at random exact points") {
    std::mt19937_64 rng(4321);
    auto a4 = fixtures::defective4();
    auto dec4 = decompose_fixture(a4, {{ExactScalar(1), 2}, {ExactScalar(-1), 2}});
    int tested = 0;
    while (tested < 20) {
        ExactScalar z(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 6));
        if (z == ExactScalar(1) || z == ExactScalar(-1)) continue;
        CHECK(resolvent_expansion_residual(dec4, z) == 0.0);
        ++tested;
    }
}
