#ifndef IRSCHED_RATE_HPP
#define IRSCHED_RATE_HPP

#include <iosfwd>
#include <vector>

#include "irsched/channel.hpp"
#include "irsched/irs.hpp"
#include "irsched/scenario.hpp"

namespace irsched {

enum class TableMode {
    kExhaustive, // fill every (ue, codeword, carrier) cell
    kProjected,  // fill only the codeword nearest to the continuous optimum
};

// Precomputed achievable rates feeding every scheduler, plus the
// continuous-optimum rate and its codebook projection per (ue, carrier).
struct RateTable {
    int n_ue = 0;
    int n_codewords = 0;
    int n_carriers = 0;
    std::vector<double> rates;          // [ue][codeword][carrier]
    std::vector<double> cont_rate;      // [ue][carrier]
    std::vector<int> proj_codeword;     // [ue][carrier]

    double rate(int ue, int codeword, int carrier) const
    {
        return rates[(static_cast<std::size_t>(ue) * n_codewords + codeword) * n_carriers +
                     carrier];
    }
    double& rate(int ue, int codeword, int carrier)
    {
        return rates[(static_cast<std::size_t>(ue) * n_codewords + codeword) * n_carriers +
                     carrier];
    }
    double continuous_rate(int ue, int carrier) const
    {
        return cont_rate[static_cast<std::size_t>(ue) * n_carriers + carrier];
    }
    int projected(int ue, int carrier) const
    {
        return proj_codeword[static_cast<std::size_t>(ue) * n_carriers + carrier];
    }
};

// Single-stream achievable rate log2(1 + ||G Phi H w||^2 s2/n2): the UE
// combiner matches the effective cascade vector, which attains the dominant
// singular value of the rank-one effective channel.
double achievable_rate(const ChannelSet& channels, const IrsConfiguration& cfg_irs, int ue,
                       int carrier, double sigma_s2, double sigma_n2);

RateTable build_rate_table(const ChannelSet& channels, const Codebook& cb,
                           const ScenarioConfig& cfg, TableMode mode, int n_threads = 1);

// One row per (ue, codeword, carrier): "ue,codeword,carrier,rate".
void write_rate_table_csv(const RateTable& table, std::ostream& out);

} // namespace irsched

#endif
