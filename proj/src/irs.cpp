#include "irsched/irs.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <queue>
#include <set>
#include <stdexcept>

namespace irsched {

namespace {

double wrap_to_2pi(double theta)
{
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0)
        t += kTwoPi;
    return t;
}

// Squared circular deviation for angles already in [0, 2*pi).
inline double circ_dev_sq(double a, double b)
{
    double d = std::fabs(a - b);
    if (d > M_PI)
        d = kTwoPi - d;
    return d * d;
}

} // namespace

std::vector<double> IrsConfiguration::phases() const
{
    const double step = kTwoPi / static_cast<double>(1u << b_irs);
    std::vector<double> th(phase_idx.size());
    for (std::size_t n = 0; n < phase_idx.size(); ++n)
        th[n] = step * phase_idx[n];
    return th;
}

arma::cx_vec IrsConfiguration::coefficients() const
{
    const double step = kTwoPi / static_cast<double>(1u << b_irs);
    arma::cx_vec phi(phase_idx.size());
    for (std::size_t n = 0; n < phase_idx.size(); ++n)
        phi[n] = std::polar(1.0, step * phase_idx[n]);
    return phi;
}

nlohmann::json Codebook::to_json() const
{
    nlohmann::json j;
    j["schema_version"] = 1;
    j["b_codebook"] = b_codebook;
    j["b_irs"] = b_irs;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : entries)
        arr.push_back(e.phase_idx);
    j["entries"] = arr;
    return j;
}

Codebook Codebook::from_json(const nlohmann::json& j)
{
    Codebook cb;
    cb.b_codebook = j.at("b_codebook").get<int>();
    cb.b_irs = j.at("b_irs").get<int>();
    for (const auto& row : j.at("entries")) {
        IrsConfiguration e;
        e.b_irs = cb.b_irs;
        e.phase_idx = row.get<std::vector<std::uint32_t>>();
        cb.entries.push_back(std::move(e));
    }
    if (cb.size() != (1 << cb.b_codebook))
        throw std::invalid_argument("codebook entry count does not match 2^b_codebook");
    return cb;
}

Codebook Codebook::from_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open codebook file: " + path);
    nlohmann::json j;
    in >> j;
    return from_json(j);
}

void Codebook::save(const std::string& path) const
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write codebook file: " + path);
    out << to_json().dump(2) << "\n";
}

ContinuousConfig optimal_continuous_config(const ChannelSet& channels, int ue, int carrier)
{
    if (ue < 0 || ue * channels.n_carriers >= static_cast<int>(channels.g_ue.size()) ||
        carrier < 0 || carrier >= channels.n_carriers)
        throw std::invalid_argument("optimal_continuous_config: index out of range");

    const arma::cx_mat& g = channels.g(ue, carrier);
    const arma::cx_vec beamformed = channels.h_gi[carrier] * channels.w_gnb; // N_I

    // Per-element effective vectors c_n = g_n * (H w)_n; the cascade is
    // A(theta) = sum_n e^{j theta_n} c_n.
    arma::cx_mat c = g;
    for (int n = 0; n < channels.n_irs; ++n)
        c.col(n) *= beamformed[n];

    ContinuousConfig out;
    out.phases.assign(channels.n_irs, 0.0);
    if (arma::norm(c, "fro") == 0.0) {
        out.degenerate = true;
        return out;
    }

    arma::cx_vec u;
    if (channels.n_ue == 1) {
        u = arma::cx_vec{1.0}; // canonical scalar combiner
    } else {
        arma::cx_vec a0 = arma::sum(c, 1);
        const double n0 = arma::norm(a0);
        if (n0 > 0.0) {
            u = a0 / n0;
        } else {
            u = arma::cx_vec(channels.n_ue, arma::fill::zeros);
            u[0] = 1.0;
        }
    }

    arma::cx_vec phasor(channels.n_irs);
    double prev_gain = 0.0;
    for (int it = 0; it < 50; ++it) {
        for (int n = 0; n < channels.n_irs; ++n) {
            const std::complex<double> proj = arma::cdot(u, c.col(n));
            out.phases[n] = proj == 0.0 ? 0.0 : -std::arg(proj);
            phasor[n] = std::polar(1.0, out.phases[n]);
        }
        arma::cx_vec a = c * phasor;
        const double gain = arma::norm(a);
        if (gain == 0.0)
            break;
        u = a / gain;
        if (it > 0 && gain - prev_gain < 1e-6 * prev_gain)
            break;
        prev_gain = gain;
    }
    for (double& th : out.phases)
        th = wrap_to_2pi(th);
    return out;
}

IrsConfiguration quantize_config(std::span<const double> theta, int b_irs)
{
    const std::uint32_t levels = 1u << b_irs;
    IrsConfiguration q;
    q.b_irs = b_irs;
    q.phase_idx.resize(theta.size());
    for (std::size_t n = 0; n < theta.size(); ++n) {
        const double x = wrap_to_2pi(theta[n]) * levels / kTwoPi;
        const double lo = std::floor(x);
        const double frac = x - lo;
        const std::uint32_t below = static_cast<std::uint32_t>(lo) % levels;
        const std::uint32_t above = (below + 1) % levels;
        if (frac < 0.5)
            q.phase_idx[n] = below;
        else if (frac > 0.5)
            q.phase_idx[n] = above;
        else
            q.phase_idx[n] = std::min(below, above); // exact midpoint
    }
    return q;
}

double circular_distance(std::span<const double> a, std::span<const double> b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("circular_distance: length mismatch");
    double total = 0.0;
    for (std::size_t n = 0; n < a.size(); ++n) {
        double d = std::fabs(wrap_to_2pi(a[n]) - wrap_to_2pi(b[n]));
        if (d > M_PI)
            d = kTwoPi - d;
        total += d * d;
    }
    return total;
}

double circular_distance(const IrsConfiguration& a, const IrsConfiguration& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("circular_distance: configuration size mismatch");
    const auto pa = a.phases();
    const auto pb = b.phases();
    return circular_distance(pa, pb);
}

int map_to_codebook(std::span<const double> theta, const Codebook& cb)
{
    if (cb.entries.empty())
        throw std::invalid_argument("map_to_codebook: empty codebook");
    int best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (int c = 0; c < cb.size(); ++c) {
        const auto ph = cb.entries[c].phases();
        const double d = circular_distance(theta, ph);
        if (d < best_d) {
            best_d = d;
            best = c;
        }
    }
    return best;
}

namespace {

// Nearest grid index vector (circular distance to `origin`) not yet in
// `used`. Best-first walk over single-step element perturbations.
std::vector<std::uint32_t> nearest_unused_grid_vector(
    const std::vector<std::uint32_t>& origin, int b_irs,
    const std::set<std::vector<std::uint32_t>>& used)
{
    const std::uint32_t levels = 1u << b_irs;
    const double step = kTwoPi / levels;
    auto dist_to_origin = [&](const std::vector<std::uint32_t>& v) {
        double total = 0.0;
        for (std::size_t n = 0; n < v.size(); ++n) {
            double d = std::fabs(step * (static_cast<double>(v[n]) -
                                         static_cast<double>(origin[n])));
            d = std::fmod(d, kTwoPi);
            if (d > M_PI)
                d = kTwoPi - d;
            total += d * d;
        }
        return total;
    };

    using Entry = std::pair<double, std::vector<std::uint32_t>>;
    auto cmp = [](const Entry& a, const Entry& b) {
        if (a.first != b.first)
            return a.first > b.first;
        return a.second > b.second; // lexicographically smaller vector first
    };
    std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> frontier(cmp);
    std::set<std::vector<std::uint32_t>> visited;
    frontier.push({0.0, origin});
    visited.insert(origin);

    while (!frontier.empty()) {
        auto [d, v] = frontier.top();
        frontier.pop();
        if (!used.count(v))
            return v;
        for (std::size_t n = 0; n < v.size(); ++n) {
            for (int delta : {1, -1}) {
                std::vector<std::uint32_t> w = v;
                w[n] = (v[n] + levels + delta) % levels;
                if (visited.insert(w).second)
                    frontier.push({dist_to_origin(w), w});
            }
        }
    }
    throw std::logic_error("phase grid exhausted while deduplicating centroids");
}

} // namespace

Codebook codebook_from_training(const std::vector<std::vector<double>>& points, int b_codebook,
                                int b_irs, RngStream& rng, KmeansTrace* trace)
{
    const int k = 1 << b_codebook;
    const int n_points = static_cast<int>(points.size());
    if (n_points < k)
        throw InsufficientTrainingError("codebook_from_training: " + std::to_string(n_points) +
                                        " training points for " + std::to_string(k) +
                                        " codebook entries");
    const std::size_t dim = points[0].size();
    for (const auto& p : points)
        if (p.size() != dim)
            throw std::invalid_argument("codebook_from_training: inconsistent point dimensions");

    // Canonical angles in [0, 2*pi) so the inner loops can skip fmod.
    std::vector<std::vector<double>> pts(points);
    for (auto& p : pts)
        for (double& t : p)
            t = wrap_to_2pi(t);

    auto dist = [dim](const std::vector<double>& a, const std::vector<double>& b,
                      double cutoff) {
        double total = 0.0;
        for (std::size_t n = 0; n < dim; ++n) {
            total += circ_dev_sq(a[n], b[n]);
            if (total >= cutoff)
                return total;
        }
        return total;
    };
    const double kInf = std::numeric_limits<double>::infinity();

    // k-means++ seeding: next centroid drawn with probability proportional to
    // the squared circular distance to the nearest chosen one.
    std::vector<std::vector<double>> centroids;
    centroids.reserve(k);
    std::vector<double> min_d(n_points, kInf);
    centroids.push_back(pts[rng.next_index(n_points)]);
    for (int c = 1; c < k; ++c) {
        double total = 0.0;
        for (int p = 0; p < n_points; ++p) {
            min_d[p] = std::min(min_d[p], dist(pts[p], centroids.back(), min_d[p]));
            total += min_d[p];
        }
        if (total <= 0.0) {
            centroids.push_back(pts[rng.next_index(n_points)]);
            continue;
        }
        double x = rng.uniform(0.0, total);
        int pick = n_points - 1;
        for (int p = 0; p < n_points; ++p) {
            x -= min_d[p];
            if (x <= 0.0) {
                pick = p;
                break;
            }
        }
        centroids.push_back(pts[pick]);
    }

    std::vector<int> owner(n_points, 0);
    double prev_obj = kInf;
    for (int iter = 0; iter < 100; ++iter) {
        // Assignment step.
        double obj = 0.0;
        for (int p = 0; p < n_points; ++p) {
            double best = kInf;
            int best_c = 0;
            for (int c = 0; c < k; ++c) {
                const double d = dist(pts[p], centroids[c], best);
                if (d < best) {
                    best = d;
                    best_c = c;
                }
            }
            owner[p] = best_c;
            obj += best;
        }
        if (trace)
            trace->objective.push_back(obj);
        if (iter > 0 && prev_obj - obj < 1e-6 * std::max(prev_obj, 1e-300))
            break;
        prev_obj = obj;

        // Update step: per-element circular mean, kept only when it does not
        // worsen the cluster cost (the phasor mean is not the exact minimizer
        // of the squared deviation, so an unconditional update could break
        // the monotone objective).
        std::vector<std::vector<int>> members(k);
        for (int p = 0; p < n_points; ++p)
            members[owner[p]].push_back(p);
        for (int c = 0; c < k; ++c) {
            if (members[c].empty())
                continue; // keep previous centroid
            std::vector<double> cand(dim, 0.0);
            for (std::size_t n = 0; n < dim; ++n) {
                double re = 0.0, im = 0.0;
                for (int p : members[c]) {
                    re += std::cos(pts[p][n]);
                    im += std::sin(pts[p][n]);
                }
                cand[n] = (re == 0.0 && im == 0.0) ? 0.0 : wrap_to_2pi(std::atan2(im, re));
            }
            double cost_old = 0.0, cost_new = 0.0;
            for (int p : members[c]) {
                cost_old += dist(pts[p], centroids[c], kInf);
                cost_new += dist(pts[p], cand, kInf);
            }
            if (cost_new < cost_old)
                centroids[c] = std::move(cand);
        }
    }

    // Quantize centroids and enforce pairwise-distinct entries.
    std::set<std::vector<std::uint32_t>> used;
    std::vector<IrsConfiguration> entries;
    entries.reserve(k);
    for (const auto& cen : centroids) {
        IrsConfiguration q = quantize_config(cen, b_irs);
        if (used.count(q.phase_idx))
            q.phase_idx = nearest_unused_grid_vector(q.phase_idx, b_irs, used);
        used.insert(q.phase_idx);
        entries.push_back(std::move(q));
    }
    std::sort(entries.begin(), entries.end(),
              [](const IrsConfiguration& a, const IrsConfiguration& b) {
                  return a.phase_idx < b.phase_idx;
              });

    Codebook cb;
    cb.b_codebook = b_codebook;
    cb.b_irs = b_irs;
    cb.entries = std::move(entries);
    return cb;
}

Codebook build_codebook(const ScenarioConfig& cfg, KmeansTrace* trace)
{
    const int m = cfg.training_count();
    if (static_cast<long long>(m) * cfg.F < cfg.codebook_size())
        throw InsufficientTrainingError("build_codebook: M*F training points (" +
                                        std::to_string(static_cast<long long>(m) * cfg.F) +
                                        ") below codebook size " +
                                        std::to_string(cfg.codebook_size()));

    RngStream pos_rng(cfg.seed, StreamTag::kTrainingPositions);
    RngStream chan_rng(cfg.seed, StreamTag::kTrainingChannels);
    const UeDrop training = random_ue_positions(cfg, m, pos_rng);
    const ChannelSet ch = synthesize_channels(cfg, training, chan_rng);

    std::vector<std::vector<double>> points;
    points.reserve(static_cast<std::size_t>(m) * cfg.F);
    for (int u = 0; u < m; ++u) {
        for (int i = 0; i < cfg.F; ++i) {
            const ContinuousConfig oc = optimal_continuous_config(ch, u, i);
            points.push_back(quantize_config(oc.phases, cfg.b_irs).phases());
        }
    }

    RngStream km_rng(cfg.seed, StreamTag::kKmeans);
    return codebook_from_training(points, cfg.b_codebook, cfg.b_irs, km_rng, trace);
}

} // namespace irsched
