#include "spt/error_flow.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include <Eigen/Dense>

namespace spt {

namespace {

void validate_table(const Table3& p3, int n) {
    if (static_cast<int>(p3.size()) != n * n * n) throw std::invalid_argument("three-site table has wrong size");
    double s = 0;
    for (double v : p3) {
        if (v < -1e-15) throw std::invalid_argument("negative probability in three-site table");
        s += v;
    }
    if (std::abs(s - 1.0) > 1e-12) throw std::invalid_argument("three-site table is not normalised");
}

int draw(const std::vector<double>& p, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> U(0.0, 1.0);
    double u = U(rng);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (u < p[i]) return static_cast<int>(i);
        u -= p[i];
    }
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] > 0) return i;
    return 0;
}

using Mat = Eigen::MatrixXcd;

// Sequential Born sampling of an open MPS with 1 x D first and D x 1 last blocks.
std::vector<int> sample_open_mps(const std::vector<std::vector<Mat>>& T, std::mt19937_64& rng) {
    const int L = static_cast<int>(T.size());
    std::vector<Mat> right(L + 1);
    right[L] = Mat::Identity(1, 1);
    for (int i = L - 1; i >= 0; --i) {
        Mat r = Mat::Zero(T[i][0].rows(), T[i][0].rows());
        for (const auto& a : T[i]) r += a * right[i + 1] * a.adjoint();
        r /= r.cwiseAbs().maxCoeff();
        right[i] = std::move(r);
    }
    std::vector<int> out(L);
    Mat left = Mat::Identity(1, 1);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    for (int i = 0; i < L; ++i) {
        const int d = static_cast<int>(T[i].size());
        std::vector<double> p(d);
        std::vector<Mat> cand(d);
        double tot = 0;
        for (int s = 0; s < d; ++s) {
            cand[s] = T[i][s].adjoint() * left * T[i][s];
            p[s] = std::max(0.0, (cand[s] * right[i + 1]).trace().real());
            tot += p[s];
        }
        for (auto& v : p) v /= tot;
        int s = draw(p, rng);
        out[i] = s;
        left = cand[s] / cand[s].cwiseAbs().maxCoeff();
    }
    return out;
}

class IidModel : public ErrorModel {
public:
    explicit IidModel(std::vector<double> p) : p_(std::move(p)) {}
    int num_labels() const override { return static_cast<int>(p_.size()); }
    std::vector<int> sample(int L, std::mt19937_64& rng) const override {
        std::vector<int> s(L);
        for (auto& x : s) x = draw(p_, rng);
        return s;
    }
    std::string name() const override { return "iid"; }

private:
    std::vector<double> p_;
};

class MarkovModel : public ErrorModel {
public:
    MarkovModel(std::vector<double> p, double xi) : p_(std::move(p)), keep_(std::exp(-1.0 / xi)) {}
    int num_labels() const override { return static_cast<int>(p_.size()); }
    std::vector<int> sample(int L, std::mt19937_64& rng) const override {
        std::uniform_real_distribution<double> U(0.0, 1.0);
        std::vector<int> s(L);
        s[0] = draw(p_, rng);
        for (int i = 1; i < L; ++i) s[i] = U(rng) < keep_ ? s[i - 1] : draw(p_, rng);
        return s;
    }
    std::string name() const override { return "markov"; }

private:
    std::vector<double> p_;
    double keep_;
};

class GerrymanderModel : public ErrorModel {
public:
    GerrymanderModel(int n, int g_star, double f) : n_(n), g_(g_star), f_(f) {
        if (n < 3) throw std::invalid_argument("gerrymander tiles need at least three labels");
    }
    int num_labels() const override { return n_; }
    std::vector<int> sample(int L, std::mt19937_64& rng) const override {
        std::uniform_real_distribution<double> U(0.0, 1.0);
        std::uniform_int_distribution<int> other(0, n_ - 2);
        auto label = [&]() {
            int x = other(rng);
            return x >= g_ ? x + 1 : x;
        };
        std::vector<int> s;
        s.reserve(L + 3);
        // Length-biased first tile with a uniform offset makes the window stationary.
        const double w1 = 3.0 * f_, w0 = 1.0 - f_;
        bool first = true;
        while (static_cast<int>(s.size()) < L) {
            bool big = first ? U(rng) < w1 / (w1 + w0) : U(rng) < f_;
            int x = label();
            std::vector<int> tile = big ? std::vector<int>{x, g_, x} : std::vector<int>{x};
            int start = 0;
            if (first && big) start = std::uniform_int_distribution<int>(0, 2)(rng);
            first = false;
            for (int t = start; t < static_cast<int>(tile.size()); ++t) s.push_back(tile[t]);
        }
        s.resize(L);
        return s;
    }
    std::string name() const override { return "gerrymander"; }

private:
    int n_, g_;
    double f_;
};

class RandomMpsModel : public ErrorModel {
public:
    RandomMpsModel(int n, int chi, std::uint64_t seed) : n_(n), chi_(chi) {
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> N(0.0, 1.0);
        for (int s = 0; s < n; ++s) {
            Mat a(chi, chi);
            for (int i = 0; i < chi; ++i)
                for (int j = 0; j < chi; ++j) a(i, j) = {N(rng), N(rng)};
            A_.push_back(a);
        }
        // Fixed points of rho -> sum A^dag rho A and R -> sum A R A^dag by power iteration.
        left_ = Mat::Identity(chi, chi);
        right_ = Mat::Identity(chi, chi);
        for (int it = 0; it < 2000; ++it) {
            Mat l = Mat::Zero(chi, chi), r = Mat::Zero(chi, chi);
            for (const auto& a : A_) {
                l += a.adjoint() * left_ * a;
                r += a * right_ * a.adjoint();
            }
            left_ = l / l.trace().real();
            right_ = r / r.trace().real();
        }
    }
    int num_labels() const override { return n_; }
    // The right environment of every prefix is the right fixed point, so the
    // conditional weights only need the running left environment.
    std::vector<int> sample(int L, std::mt19937_64& rng) const override {
        std::vector<int> out(L);
        Mat left = left_;
        for (int i = 0; i < L; ++i) {
            std::vector<double> p(n_);
            std::vector<Mat> cand(n_);
            double tot = 0;
            for (int s = 0; s < n_; ++s) {
                cand[s] = A_[s].adjoint() * left * A_[s];
                p[s] = std::max(0.0, (cand[s] * right_).trace().real());
                tot += p[s];
            }
            for (auto& v : p) v /= tot;
            int s = draw(p, rng);
            out[i] = s;
            left = cand[s] / cand[s].trace().real();
        }
        return out;
    }
    std::string name() const override { return "random-mps"; }

private:
    int n_, chi_;
    std::vector<Mat> A_;
    Mat left_, right_;
};

class CircuitModel : public ErrorModel {
public:
    explicit CircuitModel(int k) : k_(k) {
        if (k < 1 || k > 6) throw std::invalid_argument("circuit error model supports 1 <= k <= 6");
    }
    int num_labels() const override { return 2; }
    std::vector<int> sample(int L, std::mt19937_64& rng) const override {
        std::uniform_real_distribution<double> U(0.0, 2.0 * std::numbers::pi);
        double theta = 0;
        for (int a = 0; a < k_; ++a) theta += U(rng);
        const int B = 1 << k_;
        const int mask = B - 1;
        const std::complex<double> plus = std::exp(std::complex<double>(0, theta));
        const std::complex<double> minus = std::exp(std::complex<double>(0, -theta));
        std::vector<std::vector<Mat>> T(L);
        for (int i = 0; i < L; ++i) {
            const int Dl = i == 0 ? 1 : B;
            const int Dr = i == L - 1 ? 1 : B;
            std::vector<Mat> zt(2, Mat::Zero(Dl, Dr));
            for (int b = 0; b < Dl; ++b)
                for (int z = 0; z < 2; ++z) {
                    int nb = ((b << 1) | z) & mask;
                    std::complex<double> ph = 1.0;
                    if (i >= k_) {
                        int parity = (__builtin_popcount(static_cast<unsigned>(b & mask)) + z) & 1;
                        ph = parity ? minus : plus;
                    }
                    zt[z](b, i == L - 1 ? 0 : nb) += ph;
                }
            const double r = 1.0 / std::sqrt(2.0);
            T[i] = {r * (zt[0] + zt[1]), r * (zt[0] - zt[1])};
        }
        return sample_open_mps(T, rng);
    }
    std::string name() const override { return "circuit"; }

private:
    int k_;
};

}  // namespace

Table3 iid_table3(const std::vector<double>& p) {
    const int n = static_cast<int>(p.size());
    Table3 t(n * n * n);
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k) t[(g * n + h) * n + k] = p[g] * p[h] * p[k];
    return t;
}

std::vector<double> centre_marginal(const Table3& p3, int n) {
    std::vector<double> p(n, 0.0);
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k) p[h] += p3[(g * n + h) * n + k];
    return p;
}

std::vector<double> maj_flow_step(const Table3& p3, int n) {
    validate_table(p3, n);
    std::vector<double> out = centre_marginal(p3, n);
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            if (h == g) continue;
            out[g] += p3[(g * n + h) * n + g] - p3[(h * n + g) * n + h];
        }
    return out;
}

Dominance dominance_check(const Table3& p3, int n) {
    validate_table(p3, n);
    Dominance d;
    d.f.assign(n, 0.0);
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) d.f[g] += p3[(g * n + h) * n + g] - p3[(h * n + g) * n + h];
    auto p = centre_marginal(p3, n);
    d.leader = static_cast<int>(std::max_element(p.begin(), p.end()) - p.begin());
    d.dominant = true;
    for (int g = 0; g < n; ++g)
        if (g != d.leader && !(d.f[d.leader] > d.f[g])) d.dominant = false;
    return d;
}

std::pair<int, int> top_two(const std::vector<double>& p) {
    std::vector<int> idx(p.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return p[a] > p[b]; });
    return {idx[0], idx.size() > 1 ? idx[1] : idx[0]};
}

GapReport gap_and_depth(const std::vector<double>& p0, double eps, int max_depth) {
    const int n = static_cast<int>(p0.size());
    if (!(eps > 0 && eps < 1)) throw std::invalid_argument("eps must lie in (0, 1)");
    GapReport r;
    std::vector<double> p = p0;
    auto [a0, b0] = top_two(p);
    const double delta0 = p[a0] - p[b0];
    r.generic = delta0 > 0;
    r.bound = delta0 > 0 ? static_cast<int>(std::ceil(std::log(1.0 / eps) + n * std::log(1.0 / delta0))) : -1;
    for (int d = 0; d <= max_depth; ++d) {
        auto [g1, g2] = top_two(p);
        const double delta = p[g1] - p[g2];
        r.marginals.push_back(p);
        r.gap.push_back(delta);
        if (r.depth_reached < 0 && delta > 1.0 - eps) {
            r.depth_reached = d;
            break;
        }
        if (!r.generic) break;
        auto next = maj_flow_step(iid_table3(p), n);
        const double total = std::accumulate(next.begin(), next.end(), 0.0);
        for (double& v : next) v /= total;
        double sum_sq = 0;
        for (double v : p) sum_sq += v * v;
        const double predicted = p[g1] * p[g1] - p[g2] * p[g2] - delta * sum_sq;
        const double actual = (next[g1] - next[g2]) - delta;
        r.recursion_defect = std::max(r.recursion_defect, std::abs(actual - predicted));
        p = std::move(next);
    }
    return r;
}

std::vector<double> almost_uniform(int n, double delta) {
    std::vector<double> p(n, (1.0 - delta) / n);
    p[0] += delta;
    return p;
}

std::unique_ptr<ErrorModel> make_iid_model(std::vector<double> p) { return std::make_unique<IidModel>(std::move(p)); }
std::unique_ptr<ErrorModel> make_markov_model(std::vector<double> p, double xi) {
    return std::make_unique<MarkovModel>(std::move(p), xi);
}
std::unique_ptr<ErrorModel> make_gerrymander_model(int n, int g_star, double f) {
    return std::make_unique<GerrymanderModel>(n, g_star, f);
}
std::unique_ptr<ErrorModel> make_random_mps_model(int n, int chi, std::uint64_t tensor_seed) {
    return std::make_unique<RandomMpsModel>(n, chi, tensor_seed);
}
std::unique_ptr<ErrorModel> make_circuit_model(int k) { return std::make_unique<CircuitModel>(k); }

std::vector<int> blockwise_maj(const std::vector<int>& s) {
    if (s.size() % 3 != 0) throw std::invalid_argument("string length must be a multiple of 3");
    std::vector<int> out(s.size() / 3);
    for (std::size_t t = 0; t < out.size(); ++t) {
        int g = s[3 * t], h = s[3 * t + 1], k = s[3 * t + 2];
        out[t] = (g == h || g == k) ? g : h;
    }
    return out;
}

MonteCarloReport sample_majority_tree(const ErrorModel& model, int L, int d, int trials, std::uint64_t seed) {
    const int n = model.num_labels();
    int x = L, l = 0;
    while (x % 3 == 0) {
        x /= 3;
        ++l;
    }
    if (x != 1 || d > l) throw std::invalid_argument("need L = 3^l with d <= l");
    std::mt19937_64 rng(seed);
    std::vector<std::vector<double>> sum(d + 1, std::vector<double>(n, 0.0)), sum2 = sum;
    for (int t = 0; t < trials; ++t) {
        auto s = model.sample(L, rng);
        for (int k = 0; k <= d; ++k) {
            std::vector<double> frac(n, 0.0);
            for (int v : s) frac[v] += 1.0;
            for (int g = 0; g < n; ++g) {
                frac[g] /= static_cast<double>(s.size());
                sum[k][g] += frac[g];
                sum2[k][g] += frac[g] * frac[g];
            }
            if (k < d) s = blockwise_maj(s);
        }
    }
    MonteCarloReport r;
    r.n = n;
    for (int k = 0; k <= d; ++k) {
        std::vector<double> m(n), se(n);
        for (int g = 0; g < n; ++g) {
            m[g] = sum[k][g] / trials;
            double var = std::max(0.0, sum2[k][g] / trials - m[g] * m[g]);
            se[g] = std::sqrt(var / std::max(1, trials - 1));
        }
        auto [g1, g2] = top_two(m);
        r.marginal.push_back(m);
        r.std_error.push_back(se);
        r.gap.push_back(m[g1] - m[g2]);
    }
    return r;
}

PairCorrelation pair_correlation(const ErrorModel& model, int L, int d, int trials, std::uint64_t seed) {
    const int n = model.num_labels();
    std::mt19937_64 rng(seed);
    std::vector<int> a(trials), b(trials);
    for (int t = 0; t < trials; ++t) {
        auto s = model.sample(L, rng);
        for (int k = 0; k < d; ++k) s = blockwise_maj(s);
        if (s.size() < 2) throw std::invalid_argument("need two renormalised sites at depth d");
        a[t] = s[0];
        b[t] = s[1];
    }
    PairCorrelation pc;
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            double pab = 0, pa = 0, pb = 0;
            for (int t = 0; t < trials; ++t) {
                pab += (a[t] == g && b[t] == h);
                pa += (a[t] == g);
                pb += (b[t] == h);
            }
            pab /= trials;
            pa /= trials;
            pb /= trials;
            const double cov = pab - pa * pb;
            // Influence function of the covariance estimator.
            double m = 0, m2 = 0;
            for (int t = 0; t < trials; ++t) {
                double psi = (a[t] == g && b[t] == h) - pb * (a[t] == g) - pa * (b[t] == h);
                m += psi;
                m2 += psi * psi;
            }
            m /= trials;
            double se = std::sqrt(std::max(0.0, m2 / trials - m * m) / trials);
            pc.max_abs_cov = std::max(pc.max_abs_cov, std::abs(cov));
            if (se > 0) pc.max_z = std::max(pc.max_z, std::abs(cov) / se);
            else if (std::abs(cov) > 0) pc.max_z = std::max(pc.max_z, 1e300);
        }
    return pc;
}

TripleStats sample_triples(const ErrorModel& model, int trials, std::uint64_t seed) {
    const int n = model.num_labels();
    std::mt19937_64 rng(seed);
    TripleStats st;
    st.count0.assign(n, 0);
    st.count1.assign(n, 0);
    st.trials = trials;
    for (int t = 0; t < trials; ++t) {
        auto s = model.sample(3, rng);
        ++st.count0[s[1]];
        ++st.count1[blockwise_maj(s)[0]];
    }
    for (int g = 0; g < n; ++g) {
        st.p0.push_back(static_cast<double>(st.count0[g]) / trials);
        st.p1.push_back(static_cast<double>(st.count1[g]) / trials);
    }
    return st;
}

}  // namespace spt
