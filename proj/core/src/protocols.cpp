#include "scarlab/protocols.hpp"

#include "scarlab/errors.hpp"
#include "scarlab/geometry.hpp"
#include "scarlab/rng.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace scarlab {

namespace {

double zz_expectation(const StateVector& v, int a, int b) {
    const auto& states = v.basis()->states();
    const std::uint64_t mask = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
    double acc = 0.0;
    for (std::size_t k = 0; k < states.size(); ++k) {
        const double w = std::norm(v[k]);
        acc += (std::popcount(states[k] & mask) % 2 == 0) ? w : -w;
    }
    return acc;
}

void project_pairs(StateVector& v, const std::vector<std::pair<int, int>>& pairs) {
    const auto& states = v.basis()->states();
    for (std::size_t k = 0; k < states.size(); ++k) {
        for (const auto& [a, b] : pairs) {
            if (((states[k] >> a) & 1) != ((states[k] >> b) & 1)) {
                v[k] = Complex{0.0, 0.0};
                break;
            }
        }
    }
}

double schmidt_entropy(const StateVector& v, const Bipartition& cut) {
    const auto sv = schmidt_values(v, cut);
    std::vector<double> p(sv.size());
    for (std::size_t k = 0; k < sv.size(); ++k) p[k] = sv[k] * sv[k];
    return entropy_from_probabilities(p);
}

} // namespace

PrepTrace prepare(const SparseOperator& h, const std::vector<std::pair<int, int>>& measured_pairs,
                  double tau, int k_max, const StateVector& psi0, const StateVector& target,
                  const PropagatorConfig& cfg) {
    if (tau <= 0) throw std::invalid_argument("prepare: tau must be positive");
    if (measured_pairs.empty()) throw std::invalid_argument("prepare: no measured pairs");
    if (k_max < 0) throw std::invalid_argument("prepare: negative step count");

    PrepTrace trace;
    StateVector psi = psi0;
    double cumulative = 1.0;
    const auto infidelity = [&](const StateVector& s) {
        return 1.0 - std::norm(inner(target, s));
    };
    trace.steps.push_back({0, 1.0, 1.0, infidelity(psi), 0.0});

    for (int k = 1; k <= k_max; ++k) {
        StateVector evolved = evolve(h, psi, tau, cfg);
        project_pairs(evolved, measured_pairs);
        const double surviving = evolved.norm();
        const double conditional = surviving * surviving;
        cumulative *= conditional;
        if (surviving < 1e-150) {
            trace.annihilated = true;
            trace.steps.push_back({k, conditional, cumulative, 1.0, k * tau});
            return trace;
        }
        for (auto& a : evolved.amplitudes()) a *= 1.0 / surviving;
        psi = std::move(evolved);
        trace.steps.push_back({k, conditional, cumulative, infidelity(psi), k * tau});
    }
    return trace;
}

StateVector bell_initial_state(int L, std::shared_ptr<const BlockadedBasis> full,
                               const PairingPattern& pairing) {
    if (L % 2 != 0) throw std::invalid_argument("bell_initial_state: L must be even");
    if (pairing.n_pairs() != L) throw std::invalid_argument("bell_initial_state: pairing size mismatch");

    // Entangled pairs sit at even pair indices; odd pair indices stay empty.
    const int n_bell = L / 2;
    const double amp = std::pow(2.0, -0.25 * L);
    StateVector v(full);
    for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << n_bell); ++sel) {
        std::uint64_t state = 0;
        for (int j = 0; j < n_bell; ++j) {
            if (sel & (std::uint64_t{1} << j)) {
                const auto& [a, b] = pairing.pairs()[2 * j];
                state |= (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
            }
        }
        const int excited = std::popcount(sel);
        v[full->index(state)] = Complex{(excited % 2 == 0) ? amp : -amp, 0.0};
    }
    return v;
}

QuenchTrace quench(const SparseOperator& h, const StateVector& psi_init,
                   const std::vector<double>& times,
                   const std::vector<std::pair<int, int>>& observable_pairs,
                   const Bipartition& standard_cut, const Bipartition& min_cut,
                   const PropagatorConfig& cfg) {
    QuenchTrace trace;
    trace.pairs = observable_pairs;
    StateVector psi = psi_init;
    double current_time = 0.0;
    for (double t : times) {
        if (t < current_time) throw std::invalid_argument("quench: time grid must be nondecreasing");
        if (t > current_time) psi = evolve(h, psi, t - current_time, cfg);
        current_time = t;
        QuenchRecord rec;
        rec.time = t;
        rec.zz.reserve(observable_pairs.size());
        for (const auto& [a, b] : observable_pairs) rec.zz.push_back(zz_expectation(psi, a, b));
        rec.entropy_standard = schmidt_entropy(psi, standard_cut);
        rec.entropy_min_cut = schmidt_entropy(psi, min_cut);
        trace.records.push_back(std::move(rec));
    }
    return trace;
}

std::vector<double> otoc(const Graph& g_a, int site, const std::vector<double>& times, OtocMode mode,
                         const PropagatorConfig& cfg) {
    const int L = g_a.n_vertices();
    if (site < 0 || site >= L) throw std::invalid_argument("otoc: site out of range");
    const Graph expected_chain = build_geometry({GeometryDescriptor::Kind::ChainObc, L, 0}).graph;
    if (g_a != expected_chain) {
        throw std::invalid_argument("otoc: half graph must be the open chain with canonical labels");
    }
    const GeometryDescriptor desc{mode == OtocMode::Approx
                                      ? GeometryDescriptor::Kind::Dangler
                                      : GeometryDescriptor::Kind::DecoupledChainsObc,
                                  L, 0};
    const ScarSpec spec = make_scar_spec(build_geometry(desc));
    const SparseOperator h = build_pxp(spec.graph, spec.full_basis);
    StateVector psi = apply_z(build_lambda(spec), L - 1);

    std::vector<double> series;
    series.reserve(times.size());
    double current_time = 0.0;
    for (double t : times) {
        if (t < current_time) throw std::invalid_argument("otoc: time grid must be nondecreasing");
        if (t > current_time) psi = evolve(h, psi, t - current_time, cfg);
        current_time = t;
        series.push_back(zz_expectation(psi, site, spec.pairing.partner(site)));
    }
    return series;
}

std::optional<double> first_crossing(const std::vector<double>& times,
                                     const std::vector<double>& series, double threshold) {
    if (times.size() != series.size()) throw std::invalid_argument("first_crossing: size mismatch");
    for (std::size_t k = 0; k < series.size(); ++k) {
        if (series[k] < threshold) return times[k];
    }
    return std::nullopt;
}

SparseOperator perturb(const SparseOperator& h, const Graph& g, double mean, double sigma,
                       std::uint64_t seed) {
    if (sigma < 0) throw std::invalid_argument("perturb: sigma must be nonnegative");
    if (h.basis()->graph() != g) throw std::invalid_argument("perturb: operator basis mismatch");
    NormalSampler sampler(seed);
    std::vector<double> fields(g.n_vertices());
    for (auto& delta : fields) delta = sampler(mean, sigma);

    const auto& states = h.basis()->states();
    std::vector<double> diag(states.size(), 0.0);
    for (std::size_t k = 0; k < states.size(); ++k) {
        double z = 0.0;
        for (int v = 0; v < g.n_vertices(); ++v) {
            z += ((states[k] >> v) & 1) ? -fields[v] : fields[v];
        }
        diag[k] = z;
    }
    return add_diagonal(h, diag);
}

} // namespace scarlab
