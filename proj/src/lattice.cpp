#include "bo/lattice.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bo {

namespace {

constexpr long kBlock = 64;  // fixed accumulation blocks, thread-count independent

void check_guard(const LatticeSumSpec& spec) {
    if (spec.n_cut < 1) throw std::invalid_argument("lattice sum: n_cut >= 1");
    if (spec.id == LatticeSum::algebrTV2 && (spec.m < 2 || spec.m > 3))
        throw std::invalid_argument("algebrTV2: m must be 2 or 3");
    const long guard = (spec.id == LatticeSum::algebrTV2 && spec.m == 3) ? 256 : 16384;
    if (spec.n_cut > guard)
        throw std::invalid_argument("lattice sum: cost guard exceeded");
}

// Outer loop split into fixed blocks; block sums combined sequentially so the
// reduction order never depends on the thread count.
template <typename F>
double blocked_sum(long lo, long hi, F&& per_index) {
    const long count = hi - lo + 1;
    if (count <= 0) return 0.0;
    const long nblocks = (count + kBlock - 1) / kBlock;
    std::vector<double> block(nblocks, 0.0);
#pragma omp parallel for schedule(dynamic)
    for (long b = 0; b < nblocks; ++b) {
        double acc = 0.0;
        const long end = std::min(hi, lo + (b + 1) * kBlock - 1);
        for (long i = lo + b * kBlock; i <= end; ++i) acc += per_index(i);
        block[b] = acc;
    }
    double total = 0.0;
    for (long b = 0; b < nblocks; ++b) total += block[b];
    return total;
}

// For |j|, |l| <= N a mixed-sign pair has |j + l| <= N - 1, so only same-sign
// pairs meet |j + l| > N; each positive-index term has one mirror image.
double algebr_tv(long N) {
    return 2.0 * blocked_sum(1, N, [N](long j) {
        double acc = 0.0;
        for (long l = N - j + 1; l <= N; ++l)
            acc += 1.0 / (static_cast<double>(j) * static_cast<double>(l) * static_cast<double>(l));
        return acc;
    });
}

double algebr_tv2_m3(long N) {
    // mixed signs can exceed N when m = 3: full sum over all sign patterns
    return blocked_sum(1, 2 * N, [N](long a) {
        const long j1 = (a <= N) ? a : N - a;  // +1..N then -1..-N
        double acc = 0.0;
        for (long j2 = -N; j2 <= N; ++j2) {
            if (j2 == 0) continue;
            for (long j3 = -N; j3 <= N; ++j3) {
                if (j3 == 0) continue;
                if (std::labs(j1 + j2 + j3) <= N) continue;
                acc += 1.0 / (std::labs(j1) * static_cast<double>(j2) * j2 *
                              static_cast<double>(j3) * j3);
            }
        }
        return acc;
    });
}

double serie_new(long N) {
    return 2.0 * blocked_sum(1, N, [N](long j) {
        double inner = 0.0;
        for (long l = N - j + 1; l <= N; ++l)
            inner += 1.0 / (static_cast<double>(j) * j * static_cast<double>(l) * l);
        return std::sqrt(inner);
    });
}

double sersaut(long N) {
    return 2.0 * blocked_sum(1, N, [N](long l) {
        double acc = 0.0;
        for (long j = N - l + 1; j <= N; ++j)
            acc += static_cast<double>(j) / (static_cast<double>(l) * l);
        return acc;
    });
}

}  // namespace

double evaluate(const LatticeSumSpec& spec) {
    check_guard(spec);
    switch (spec.id) {
        case LatticeSum::algebrTV:
            return algebr_tv(spec.n_cut);
        case LatticeSum::algebrTV2:
            return spec.m == 2 ? algebr_tv(spec.n_cut) : algebr_tv2_m3(spec.n_cut);
        case LatticeSum::serienew:
            return serie_new(spec.n_cut);
        case LatticeSum::sersaut:
            return sersaut(spec.n_cut);
    }
    return 0.0;
}

double evaluate_serial(const LatticeSumSpec& spec) {
    check_guard(spec);
    const long N = spec.n_cut;
    double acc = 0.0;
    switch (spec.id) {
        case LatticeSum::algebrTV:
            for (long j = -N; j <= N; ++j) {
                if (j == 0) continue;
                for (long l = -N; l <= N; ++l) {
                    if (l == 0 || std::labs(j + l) <= N) continue;
                    acc += 1.0 / (std::labs(j) * static_cast<double>(l) * l);
                }
            }
            return acc;
        case LatticeSum::algebrTV2: {
            if (spec.m == 2) return evaluate_serial({LatticeSum::algebrTV, 2, N});
            for (long j1 = -N; j1 <= N; ++j1) {
                if (j1 == 0) continue;
                for (long j2 = -N; j2 <= N; ++j2) {
                    if (j2 == 0) continue;
                    for (long j3 = -N; j3 <= N; ++j3) {
                        if (j3 == 0 || std::labs(j1 + j2 + j3) <= N) continue;
                        acc += 1.0 / (std::labs(j1) * static_cast<double>(j2) * j2 *
                                      static_cast<double>(j3) * j3);
                    }
                }
            }
            return acc;
        }
        case LatticeSum::serienew:
            for (long j = -N; j <= N; ++j) {
                if (j == 0) continue;
                double inner = 0.0;
                for (long l = -N; l <= N; ++l) {
                    if (l == 0 || std::labs(j + l) <= N) continue;
                    inner += 1.0 / (static_cast<double>(j) * j * static_cast<double>(l) * l);
                }
                acc += std::sqrt(inner);
            }
            return acc;
        case LatticeSum::sersaut:
            for (long j = -N; j <= N; ++j) {
                if (j == 0) continue;
                for (long l = -N; l <= N; ++l) {
                    if (l == 0 || std::labs(j + l) <= N) continue;
                    acc += std::labs(j) / (static_cast<double>(l) * l);
                }
            }
            return acc;
    }
    return acc;
}

double rate_scale(LatticeSum id, long n_cut) {
    const double n = static_cast<double>(n_cut);
    const double ln = std::log(std::max(n, 2.0));
    switch (id) {
        case LatticeSum::algebrTV:
        case LatticeSum::algebrTV2:
            return ln / n;
        case LatticeSum::serienew:
            return 1.0 / std::sqrt(n);
        case LatticeSum::sersaut:
            return n * ln;
    }
    return 1.0;
}

RateFit fit_rate(LatticeSum id, int m, const std::vector<long>& grid) {
    if (grid.size() < 6)
        throw std::invalid_argument("fit_rate: need a grid of >= 6 points");
    RateFit fit;
    fit.lemma = lattice_sum_name(id);
    fit.grid = grid;
    Eigen::MatrixXd A(grid.size(), 3);
    Eigen::VectorXd b(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double v = evaluate({id, m, grid[i]});
        fit.values.push_back(v);
        fit.scaled.push_back(v / rate_scale(id, grid[i]));
        fit.max_scaled = std::max(fit.max_scaled, fit.scaled.back());
        const double n = static_cast<double>(grid[i]);
        A(i, 0) = 1.0;
        A(i, 1) = std::log(n);
        A(i, 2) = std::log(std::log(n));
        b(i) = std::log(v);
    }
    const Eigen::Vector3d c = A.colPivHouseholderQr().solve(b);
    fit.power = c(1);
    fit.log_power = c(2);
    return fit;
}

long check_integral_bound(long n_max, double c) {
    long violations = 0;
    for (long N = 1; N <= n_max; ++N) {
        double suffix = 0.0;
        for (long a = N; a >= 1; --a) {
            suffix += 1.0 / (static_cast<double>(a) * a);
            const double bound =
                c * static_cast<double>(N - a + 1) / (static_cast<double>(a) * N);
            if (suffix > bound) ++violations;
        }
    }
    return violations;
}

const char* lattice_sum_name(LatticeSum id) {
    switch (id) {
        case LatticeSum::algebrTV: return "algebrTV";
        case LatticeSum::algebrTV2: return "algebrTV2";
        case LatticeSum::serienew: return "serienew";
        case LatticeSum::sersaut: return "sersaut";
    }
    return "?";
}

}  // namespace bo
