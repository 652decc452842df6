#include "scarlab/protocols.hpp"

#include "scarlab/fibonacci.hpp"
#include "scarlab/geometry.hpp"
#include "scarlab/rng.hpp"

#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>
#include <complex>

using namespace scarlab;

namespace {

ScarSpec dangler_spec(int L) {
    return make_scar_spec(build_geometry({GeometryDescriptor::Kind::Dangler, L, 0}));
}

StateVector basis_state(std::shared_ptr<const BlockadedBasis> basis, std::uint64_t s) {
    StateVector v(std::move(basis));
    v[v.basis()->index(s)] = 1.0;
    return v;
}

// Dense infinite-temperature OTOC oracle on the open half chain:
// Tr[Z_last(-t) Z_site Z_last(-t) Z_site] / dim over the blockaded set.
std::vector<double> heisenberg_otoc_oracle(int L, int site, const std::vector<double>& times) {
    const Graph g = build_geometry({GeometryDescriptor::Kind::ChainObc, L, 0}).graph;
    auto basis = enumerate_blockaded(g);
    const SparseOperator h = build_pxp(g, basis);
    const EigenSystem es = exact_eigs(h);
    const auto d = static_cast<Eigen::Index>(basis->dim());

    Eigen::VectorXd z_last(d), z_site(d);
    for (Eigen::Index k = 0; k < d; ++k) {
        const std::uint64_t s = basis->state(static_cast<std::size_t>(k));
        z_last(k) = ((s >> (L - 1)) & 1) ? -1.0 : 1.0;
        z_site(k) = ((s >> site) & 1) ? -1.0 : 1.0;
    }
    std::vector<double> out;
    out.reserve(times.size());
    for (double t : times) {
        Eigen::VectorXcd phases(d);
        for (Eigen::Index k = 0; k < d; ++k) {
            phases(k) = std::exp(Complex{0.0, -es.eigenvalues[static_cast<std::size_t>(k)] * t});
        }
        const Eigen::MatrixXcd u =
            es.eigenvectors * phases.asDiagonal() * es.eigenvectors.adjoint();
        const Eigen::MatrixXcd zlt = u * z_last.asDiagonal() * u.adjoint();
        const Complex trace = (zlt * z_site.asDiagonal() * zlt * z_site.asDiagonal()).trace();
        out.push_back(trace.real() / static_cast<double>(d));
    }
    return out;
}

} // namespace

TEST_SUITE("protocols") {

TEST_CASE("the correlated state is a fixed point of the measurement loop") {
    const ScarSpec spec = dangler_spec(5);
    const SparseOperator h = build_pxp(spec.graph, spec.full_basis);
    const StateVector lambda = build_lambda(spec);
    const PrepTrace trace = prepare(h, {spec.pairing.pairs().front()}, 0.8, 4, lambda, lambda);
    REQUIRE(trace.steps.size() == 5);
    for (const auto& step : trace.steps) {
        CHECK(std::abs(step.conditional_prob - 1.0) < 1e-12);
        CHECK(std::abs(step.cumulative_prob - 1.0) < 1e-12);
        CHECK(step.infidelity < 1e-12);
    }
}

TEST_CASE("cumulative probability equals the direct operator power") {
    const ScarSpec spec = dangler_spec(5); // N = 10
    const SparseOperator h = build_pxp(spec.graph, spec.full_basis);
    const StateVector lambda = build_lambda(spec);
    const StateVector psi0 = basis_state(spec.full_basis, 0);
    const double tau = 1.3;
    const auto pair = spec.pairing.pairs().front();
    const PrepTrace trace = prepare(h, {pair}, tau, 5, psi0, lambda);

    // Unnormalized repeated application of the composite step.
    StateVector m = psi0;
    const SparseOperator projector = build_pair_projector(spec.full_basis, {pair});
    for (int k = 1; k <= 5; ++k) {
        m = apply(projector, evolve(h, m, tau));
        const double direct = m.norm() * m.norm();
        CHECK(std::abs(direct - trace.steps[static_cast<std::size_t>(k)].cumulative_prob) < 1e-10);
    }
}

TEST_CASE("preparation converges from the empty state") {
    const ScarSpec spec = dangler_spec(6); // N = 12
    const SparseOperator h = build_pxp(spec.graph, spec.full_basis);
    const StateVector lambda = build_lambda(spec);
    const StateVector psi0 = basis_state(spec.full_basis, 0);
    const PrepTrace trace = prepare(h, {spec.pairing.pairs().front()}, 1.0, 40, psi0, lambda);
    REQUIRE(!trace.annihilated);
    const auto& steps = trace.steps;
    CHECK(steps.back().infidelity < 1e-5);
    // Cumulative probabilities are nonincreasing and approach the overlap.
    for (std::size_t k = 1; k < steps.size(); ++k) {
        CHECK(steps[k].cumulative_prob <= steps[k - 1].cumulative_prob + 1e-12);
    }
    const double target_overlap = std::norm(inner(lambda, psi0));
    CHECK(steps.back().cumulative_prob == doctest::Approx(target_overlap).epsilon(0.02));
    // Late steps: the failure branch is squeezed under the infidelity.
    for (std::size_t k = steps.size() - 5; k < steps.size(); ++k) {
        CHECK(steps[k].conditional_prob >= 1.0 - 10.0 * steps[k].infidelity - 1e-12);
    }
}

TEST_CASE("bell product state overlap") {
    const int L = 8;
    const ScarSpec spec = dangler_spec(L);
    const StateVector phi0 = bell_initial_state(L, spec.full_basis, spec.pairing);
    CHECK(std::abs(phi0.norm() - 1.0) < 1e-12);

    const StateVector lambda = build_lambda(spec);
    const double overlap2 = std::norm(inner(phi0, lambda));
    CHECK(overlap2 == doctest::Approx(16.0 / 55.0).epsilon(1e-12)); // 2^{L/2} / F_{L+2}

    // Enhancement over the empty start is 2^{L/4}.
    const StateVector psi0 = basis_state(spec.full_basis, 0);
    const double ratio = inner(phi0, lambda).real() / inner(psi0, lambda).real();
    CHECK(ratio == doctest::Approx(std::pow(2.0, L / 4.0)).epsilon(1e-12));

    CHECK_THROWS_AS(bell_initial_state(5, dangler_spec(5).full_basis,
                                       dangler_spec(5).pairing),
                    std::invalid_argument);
}

TEST_CASE("bell start beats the empty start at equal step count") {
    const int L = 8; // N = 16
    const ScarSpec spec = dangler_spec(L);
    const SparseOperator h = build_pxp(spec.graph, spec.full_basis);
    const StateVector lambda = build_lambda(spec);
    const StateVector psi0 = basis_state(spec.full_basis, 0);
    const StateVector phi0 = bell_initial_state(L, spec.full_basis, spec.pairing);

    // All pairs measured at once vs the single pair, same initial state.
    const PrepTrace single = prepare(h, {spec.pairing.pairs().front()}, 1.0, 5, phi0, lambda);
    const PrepTrace all = prepare(h, spec.pairing.pairs(), 1.0, 5, phi0, lambda);
    CHECK(all.steps[5].infidelity < single.steps[5].infidelity);

    const PrepTrace empty_start = prepare(h, spec.pairing.pairs(), 1.0, 5, psi0, lambda);
    CHECK(all.steps[5].infidelity < empty_start.steps[5].infidelity);
}

TEST_CASE("quench starts perfectly correlated and scrambles toward the page value") {
    const int L = 6; // N = 12
    const ScarSpec spec = dangler_spec(L);
    const SparseOperator h = build_pxp(spec.graph, spec.full_basis);
    const StateVector initial = apply_z(build_lambda(spec), L - 1);

    std::vector<double> times;
    for (double t = 0.0; t <= 30.0; t += 1.0) times.push_back(t);
    const QuenchTrace trace = quench(h, initial, times, spec.pairing.pairs(),
                                     standard_half_cut(L), min_entanglement_half_cut(L));
    REQUIRE(trace.records.size() == times.size());
    for (double zz : trace.records[0].zz) CHECK(zz == doctest::Approx(1.0));
    CHECK(trace.records[0].entropy_standard ==
          doctest::Approx(std::log(static_cast<double>(fibonacci(L + 2)))).epsilon(1e-10));

    // The pair at the perturbed edge decays before the pair at the link.
    std::vector<double> edge_series, link_series;
    for (const auto& rec : trace.records) {
        link_series.push_back(rec.zz.front()); // pair (0, L)
        edge_series.push_back(rec.zz.back());  // pair (L-1, 2L-1)
    }
    const auto edge_cross = first_crossing(times, edge_series, 0.9);
    const auto link_cross = first_crossing(times, link_series, 0.9);
    REQUIRE(edge_cross.has_value());
    REQUIRE(link_cross.has_value());
    CHECK(*edge_cross < *link_cross);

    // Late-time entropies drift up toward the page value.
    const double page = page_value(fibonacci(L + 2), fibonacci(L + 2));
    CHECK(std::abs(trace.records.back().entropy_min_cut - page) < 0.35);
}

TEST_CASE("exact mode matches the dense heisenberg oracle") {
    const int L = 6;
    const Graph half = build_geometry({GeometryDescriptor::Kind::ChainObc, L, 0}).graph;
    std::vector<double> times{0.0, 0.5, 1.0, 2.0, 4.0, 7.0};
    for (int site : {0, 2, 4}) {
        const auto series = otoc(half, site, times, OtocMode::Exact);
        const auto oracle = heisenberg_otoc_oracle(L, site, times);
        for (std::size_t k = 0; k < times.size(); ++k) {
            CHECK(std::abs(series[k] - oracle[k]) < 1e-8);
        }
    }
}

TEST_CASE("approximate mode agrees before the butterfly time") {
    const int L = 6;
    const Graph half = build_geometry({GeometryDescriptor::Kind::ChainObc, L, 0}).graph;
    std::vector<double> times;
    for (double t = 0.0; t <= 6.0; t += 0.25) times.push_back(t);

    const auto link = otoc(half, 0, times, OtocMode::Approx);
    const auto t_b = first_crossing(times, link, 0.99);
    REQUIRE(t_b.has_value());
    CHECK(*t_b > 1.0);

    const auto approx = otoc(half, 3, times, OtocMode::Approx);
    const auto exact = otoc(half, 3, times, OtocMode::Exact);
    CHECK(approx[0] == doctest::Approx(1.0));
    for (std::size_t k = 0; k < times.size(); ++k) {
        if (times[k] < *t_b) CHECK(std::abs(approx[k] - exact[k]) < 1e-3);
    }
    // Past several butterfly times the two Hamiltonians disagree visibly.
    double max_late = 0.0;
    for (std::size_t k = 0; k < times.size(); ++k) {
        if (times[k] > 2.0 * *t_b) max_late = std::max(max_late, std::abs(approx[k] - exact[k]));
    }
    CHECK(max_late > 1e-3);
}

TEST_CASE("decoupled halves keep the standard cut entropy frozen") {
    const int L = 5;
    const ScarSpec spec =
        make_scar_spec(build_geometry({GeometryDescriptor::Kind::DecoupledChainsObc, L, 0}));
    const SparseOperator h = build_pxp(spec.graph, spec.full_basis);
    const StateVector initial = apply_z(build_lambda(spec), L - 1);
    std::vector<double> times{0.0, 2.0, 5.0, 9.0};
    const QuenchTrace trace = quench(h, initial, times, spec.pairing.pairs(),
                                     standard_half_cut(L), min_entanglement_half_cut(L));
    const double frozen = trace.records[0].entropy_standard;
    for (const auto& rec : trace.records) {
        CHECK(std::abs(rec.entropy_standard - frozen) < 1e-9);
    }
}

TEST_CASE("zeeman perturbation plumbing") {
    const ScarSpec spec = dangler_spec(5);
    const SparseOperator h = build_pxp(spec.graph, spec.full_basis);
    const StateVector lambda = build_lambda(spec);

    const SparseOperator same = perturb(h, spec.graph, 0.0, 0.0, 123);
    CHECK(residual(same, lambda, 0.0) < 1e-12);
    CHECK(same.n_entries() == h.n_entries()); // zero fields add nothing

    const SparseOperator p1 = perturb(h, spec.graph, 0.0, 0.05, 42);
    const SparseOperator p2 = perturb(h, spec.graph, 0.0, 0.05, 42);
    REQUIRE(p1.n_entries() == p2.n_entries());
    for (std::size_t k = 0; k < p1.n_entries(); ++k) {
        CHECK(p1.value(k) == p2.value(k)); // bit identical draws
    }
    CHECK(residual(p1, lambda, 0.0) > 1e-3); // no longer an eigenstate

    const SparseOperator shifted = perturb(h, spec.graph, 0.3, 0.0, 7);
    CHECK(residual(shifted, lambda, 0.0) > 1e-3);
}

TEST_CASE("normal sampler is reproducible and roughly standard") {
    NormalSampler a(2024), b(2024);
    double mean = 0.0, var = 0.0;
    std::vector<double> draws;
    for (int k = 0; k < 4000; ++k) {
        const double x = a(0.0, 1.0);
        CHECK(x == b(0.0, 1.0));
        draws.push_back(x);
        mean += x;
    }
    mean /= draws.size();
    for (double x : draws) var += (x - mean) * (x - mean);
    var /= draws.size();
    CHECK(std::abs(mean) < 0.05);
    CHECK(std::abs(var - 1.0) < 0.1);
}

} // TEST_SUITE
