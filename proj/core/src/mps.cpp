#include "scarlab/mps.hpp"

#include "scarlab/entanglement.hpp"
#include "scarlab/errors.hpp"
#include "scarlab/geometry.hpp"
#include "scarlab/scars.hpp"

#include <cmath>
#include <stdexcept>

namespace scarlab {

LambdaMps LambdaMps::standard() {
    LambdaMps t;
    t.m00 << 0.5, 0.5, 0.5, 0.5;
    t.m11 << 0.0, 0.0, -2.0, 0.0;
    t.boundary_left << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    t.boundary_right = t.boundary_left;
    return t;
}

namespace {

// Depth-first contraction over physical configurations. The mixed tensors
// are zero, so only configurations with s_i = s_ibar survive; pruning on a
// vanishing partial product keeps the sweep linear in the number of
// nonzero amplitudes.
void contract_rec(const LambdaMps& t, int site, int L, std::uint64_t half_string,
                  const Eigen::Matrix2d& partial, MpsBoundary mode,
                  const PairingPattern& pairing, const BlockadedBasis& full, StateVector& out) {
    if (partial.isZero(0.0)) return;
    if (site == L) {
        double amp;
        if (mode == MpsBoundary::Trace) {
            amp = partial.trace();
        } else {
            amp = t.boundary_left.dot(partial * t.boundary_right);
        }
        if (amp == 0.0) return;
        std::uint64_t doubled = 0;
        for (int k = 0; k < L; ++k) {
            if (half_string & (std::uint64_t{1} << k)) {
                doubled |= std::uint64_t{1} << pairing.pairs()[k].first;
                doubled |= std::uint64_t{1} << pairing.pairs()[k].second;
            }
        }
        out[full.index(doubled)] += Complex{amp, 0.0};
        return;
    }
    contract_rec(t, site + 1, L, half_string, Eigen::Matrix2d(partial * t.m00), mode, pairing, full, out);
    contract_rec(t, site + 1, L, half_string | (std::uint64_t{1} << site),
                 Eigen::Matrix2d(partial * t.m11), mode, pairing, full, out);
}

} // namespace

StateVector mps_amplitudes(int L, MpsBoundary mode, const EnumerationLimits& limits) {
    if (L < 2) throw std::invalid_argument("mps_amplitudes: L must be >= 2");
    const GeometryDescriptor desc{
        mode == MpsBoundary::Trace ? GeometryDescriptor::Kind::RingDoubled
                                   : GeometryDescriptor::Kind::Dangler,
        L, 0};
    const Geometry geometry = build_geometry(desc);
    auto full = enumerate_blockaded(geometry.graph, limits);

    const LambdaMps t = LambdaMps::standard();
    StateVector out(full);
    contract_rec(t, 0, L, 0, Eigen::Matrix2d::Identity(), mode, *geometry.pairing, *full, out);
    out.normalize();
    return out;
}

namespace {

double two_level_entropy(double p1, double p2) {
    double s = 0.0;
    if (p1 > 1e-14) s -= p1 * std::log(p1);
    if (p2 > 1e-14) s -= p2 * std::log(p2);
    return s;
}

} // namespace

double min_cut_entropy_asymptotic(MinCutKind cut, MinCutGeometry geometry, bool even_half_size) {
    const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    const double gamma = std::sqrt(1.0 / (2.0 * std::sqrt(5.0)) - 1.0 / 20.0);
    const double s_regular = two_level_entropy(0.5 + gamma, 0.5 - gamma);
    const double s_split = two_level_entropy(golden / std::sqrt(5.0), 1.0 / (std::sqrt(5.0) * golden));

    if (even_half_size && cut != MinCutKind::Regular) {
        throw std::invalid_argument("min_cut_entropy_asymptotic: even half size uses regular cuts");
    }
    if (!even_half_size && cut != MinCutKind::PairSplitting) {
        throw std::invalid_argument("min_cut_entropy_asymptotic: odd half size must split a pair");
    }
    if (geometry == MinCutGeometry::Dangler) {
        return even_half_size ? s_regular : s_split;
    }
    // Ring: two cuts in the periodic tensor chain, independent in the
    // thermodynamic limit.
    return even_half_size ? 2.0 * s_regular : s_regular + s_split;
}

double finite_size_min_cut_entropy(int L, MinCutGeometry geometry) {
    if (L < 2 || L > 12) throw DimensionLimitError("finite_size_min_cut_entropy: L must be in [2, 12]");
    const GeometryDescriptor desc{
        geometry == MinCutGeometry::Ring ? GeometryDescriptor::Kind::RingDoubled
                                         : GeometryDescriptor::Kind::Dangler,
        L, 0};
    const ScarSpec spec = make_scar_spec(build_geometry(desc));
    const StateVector lambda = build_lambda(spec);
    const auto sv = schmidt_values(lambda, min_entanglement_half_cut(L));
    std::vector<double> p(sv.size());
    for (std::size_t k = 0; k < sv.size(); ++k) p[k] = sv[k] * sv[k];
    return entropy_from_probabilities(p);
}

} // namespace scarlab
