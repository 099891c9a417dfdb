#ifndef IRSCHED_CHANNEL_HPP
#define IRSCHED_CHANNEL_HPP

#include <array>
#include <vector>

#include <armadillo>

#include "irsched/common.hpp"
#include "irsched/scenario.hpp"

namespace irsched {

// One Monte Carlo user deployment. LOS flags are drawn once per UE and shared
// across carriers.
struct UeDrop {
    std::vector<std::array<double, 2>> positions;
    std::vector<bool> los;

    int size() const { return static_cast<int>(positions.size()); }
};

// Frequency-dependent channel matrices for one drop. The gNB->UE direct link
// is blocked; only the cascade through the IRS exists.
struct ChannelSet {
    int n_irs = 0;
    int n_gnb = 0;
    int n_ue = 0;
    int n_carriers = 0;

    std::vector<arma::cx_mat> h_gi; // per carrier i: N_I x N_g (gNB -> IRS)
    std::vector<arma::cx_mat> g_ue; // index k * n_carriers + i: N_U x N_I (IRS -> UE)
    arma::cx_vec w_gnb;             // unit-norm gNB beamformer

    const arma::cx_mat& g(int ue, int carrier) const
    {
        return g_ue[static_cast<std::size_t>(ue) * n_carriers + carrier];
    }
};

// Unit-norm ULA response: element m = exp(j*2*pi*spacing*m*sin(angle)) / sqrt(n).
arma::cx_vec ula_steering(double angle_rad, int n, double spacing_wavelengths);

// TR 38.901 UMi street-canyon LOS probability (2-D distance).
double los_probability_umi(double distance_m);

// `count` positions uniform over the half-disc {x >= 0, |p| <= radius} plus
// per-position LOS flags against the IRS location.
UeDrop random_ue_positions(const ScenarioConfig& cfg, int count, RngStream& rng);

// Standard drop of cfg.K users.
UeDrop drop_ues(const ScenarioConfig& cfg, RngStream& rng);

// Clustered geometric mmWave model: pure-LOS gNB->IRS link, and per UE an
// optional LOS path plus a fixed number of NLOS single-ray clusters with
// complex Gaussian gains, random angles and excess delays.
ChannelSet synthesize_channels(const ScenarioConfig& cfg, const UeDrop& drop, RngStream& rng);

} // namespace irsched

#endif
