#include "bo/wick.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>

#include "bo/rng.hpp"

namespace bo {

namespace {

using cplx = std::complex<double>;

bool has_opposite_pair(const IndexTuple& t) {
    for (std::size_t a = 0; a < t.size(); ++a)
        for (std::size_t b = a + 1; b < t.size(); ++b)
            if (t[a] == -t[b]) return true;
    return false;
}

bool has_pair_value(const IndexTuple& t, long j) {
    // some l != m with t_l = |j|, t_m = -|j|
    const long a = std::labs(j);
    bool plus = false, minus = false;
    for (long x : t) {
        if (x == a) plus = true;
        if (x == -a) minus = true;
    }
    return plus && minus;
}

// Lexicographically first couple (l, m), l < m (1-based), with t_l = -t_m and
// |t_l| = |j|; (0, 0) if none.
std::pair<int, int> first_couple(const IndexTuple& t, long j) {
    const long a = std::labs(j);
    const int n = static_cast<int>(t.size());
    for (int l = 0; l < n; ++l) {
        if (std::labs(t[l]) != a) continue;
        for (int m = l + 1; m < n; ++m)
            if (t[m] == -t[l]) return {l + 1, m + 1};
    }
    return {0, 0};
}

IndexTuple sorted(IndexTuple t) {
    std::sort(t.begin(), t.end());
    return t;
}

// multiset(t) with one copy each of +j and -j removed.
IndexTuple residual_multiset(const IndexTuple& t, long j) {
    IndexTuple s = sorted(t);
    auto it = std::find(s.begin(), s.end(), std::labs(j));
    if (it != s.end()) s.erase(it);
    it = std::find(s.begin(), s.end(), -std::labs(j));
    if (it != s.end()) s.erase(it);
    return s;
}

void enumerate_rec(int pos, int n, long box, long partial, IndexTuple& cur,
                   const TupleSetSpec& spec, std::vector<IndexTuple>& out) {
    if (pos == n - 1) {
        const long last = -partial;
        if (last == 0 || std::labs(last) > box) return;
        cur.push_back(last);
        if (in_family(cur, spec)) out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (long v = -box; v <= box; ++v) {
        if (v == 0) continue;
        cur.push_back(v);
        enumerate_rec(pos + 1, n, box, partial + v, cur, spec, out);
        cur.pop_back();
    }
}

cplx draw_g(std::uint64_t seed, std::uint64_t draw, long mode) {
    Rng rng(seed, draw * 0x100000001ULL + static_cast<std::uint64_t>(mode));
    double h, l;
    rng.next_normal_pair(h, l);
    return cplx{h, l} * 0.70710678118654752440;
}

cplx g_at(const std::map<long, cplx>& g, long idx) {
    const cplx v = g.at(std::labs(idx));
    return idx > 0 ? v : std::conj(v);
}

}  // namespace

bool in_family(const IndexTuple& t, const TupleSetSpec& spec) {
    long sum = 0;
    for (long x : t) {
        if (x == 0 || std::labs(x) > spec.box) return false;
        sum += x;
    }
    if (sum != 0) return false;
    if (spec.constrain_gt >= 0) {
        long s = 0;
        for (int p : spec.constrain_idx) s += t[static_cast<std::size_t>(p - 1)];
        if (std::labs(s) <= spec.constrain_gt) return false;
    }
    switch (spec.family) {
        case TupleSetSpec::Family::A:
            return true;
        case TupleSetSpec::Family::A_tilde:
            return !has_opposite_pair(t);
        case TupleSetSpec::Family::A_tilde_c:
            return has_opposite_pair(t);
        case TupleSetSpec::Family::A_tilde_c_j:
            return has_pair_value(t, spec.j);
        case TupleSetSpec::Family::B:
            return first_couple(t, spec.j) == std::pair<int, int>{spec.l, spec.m};
    }
    return false;
}

std::vector<IndexTuple> enumerate_tuples(const TupleSetSpec& spec) {
    if (spec.box < 1) throw std::invalid_argument("enumerate_tuples: box >= 1 required");
    std::vector<IndexTuple> out;
    IndexTuple cur;
    cur.reserve(static_cast<std::size_t>(spec.n));
    enumerate_rec(0, spec.n, spec.box, 0, cur, spec, out);
    return out;
}

double exact_moment(const MomentQuery& q) {
    // fold g_{-n} = conj(g_n): count plain (a) and conjugated (b) powers per |n|
    std::map<long, std::pair<int, int>> groups;
    for (long x : q.j_list) {
        if (x == 0) throw std::invalid_argument("exact_moment: zero index");
        auto& g = groups[std::labs(x)];
        (x > 0 ? g.first : g.second)++;
    }
    for (long x : q.i_list) {
        if (x == 0) throw std::invalid_argument("exact_moment: zero index");
        auto& g = groups[std::labs(x)];
        (x > 0 ? g.second : g.first)++;
    }
    double r = 1.0;
    for (const auto& [mode, ab] : groups) {
        if (ab.first != ab.second) return 0.0;
        for (int f = 2; f <= ab.first; ++f) r *= f;  // E[g^a conj(g)^a] = a!
    }
    return r;
}

double monte_carlo_moment(const MomentQuery& q, std::size_t draws, std::uint64_t seed,
                          double* std_error) {
    if (draws == 0) throw std::invalid_argument("monte_carlo_moment: draws >= 1");
    std::vector<long> modes;
    for (long x : q.j_list) modes.push_back(std::labs(x));
    for (long x : q.i_list) modes.push_back(std::labs(x));
    std::sort(modes.begin(), modes.end());
    modes.erase(std::unique(modes.begin(), modes.end()), modes.end());

    double sum = 0.0, sumsq = 0.0;
    for (std::size_t d = 0; d < draws; ++d) {
        std::map<long, cplx> g;
        for (long m : modes) g[m] = draw_g(seed, d, m);
        cplx p{1.0, 0.0};
        for (long x : q.j_list) p *= g_at(g, x);
        for (long x : q.i_list) p *= std::conj(g_at(g, x));
        sum += p.real();  // the moment is real; Im averages to zero
        sumsq += p.real() * p.real();
    }
    const double mean = sum / static_cast<double>(draws);
    if (std_error) {
        const double var =
            std::max(0.0, sumsq / static_cast<double>(draws) - mean * mean);
        *std_error = std::sqrt(var / static_cast<double>(draws));
    }
    return mean;
}

SweepReport verify_orthogonality(OrthStatement s, long box, int n) {
    SweepReport rep;
    rep.statement = orth_statement_name(s);
    rep.box = box;

    auto family = [&](TupleSetSpec::Family f, int arity, long j = 0) {
        TupleSetSpec spec;
        spec.family = f;
        spec.n = arity;
        spec.box = box;
        spec.j = j;
        return enumerate_tuples(spec);
    };

    switch (s) {
        case OrthStatement::tildeA_n3:
        case OrthStatement::tildeA_n4: {
            const int arity = (s == OrthStatement::tildeA_n3) ? 3 : 4;
            const auto all = family(TupleSetSpec::Family::A, arity);
            for (const auto& t : all)
                for (const auto& u : all) {
                    if (sorted(t) == sorted(u)) continue;
                    ++rep.pairs_checked;
                    if (exact_moment({t, u}) != 0.0 &&
                        !has_opposite_pair(t) && !has_opposite_pair(u))
                        ++rep.violations;
                }
            break;
        }
        case OrthStatement::cor55: {
            const auto all = family(TupleSetSpec::Family::A_tilde, n);
            for (const auto& t : all)
                for (const auto& u : all) {
                    if (sorted(t) == sorted(u)) continue;
                    ++rep.pairs_checked;
                    if (exact_moment({t, u}) != 0.0) ++rep.violations;
                }
            break;
        }
        case OrthStatement::forp2: {
            for (long j = 1; j <= box; ++j) {
                const auto sj = family(TupleSetSpec::Family::A_tilde_c_j, 5, j);
                std::vector<IndexTuple> rj;
                for (const auto& t : sj) rj.push_back(residual_multiset(t, j));
                for (long i = 1; i <= box; ++i) {
                    const auto si = family(TupleSetSpec::Family::A_tilde_c_j, 5, i);
                    std::vector<IndexTuple> ri;
                    for (const auto& t : si) ri.push_back(residual_multiset(t, i));
                    for (std::size_t a = 0; a < sj.size(); ++a)
                        for (std::size_t b = 0; b < si.size(); ++b) {
                            if (rj[a] == ri[b]) continue;
                            ++rep.pairs_checked;
                            if (exact_moment({sj[a], si[b]}) != 0.0) ++rep.violations;
                        }
                }
            }
            break;
        }
        case OrthStatement::orthtzv: {
            for (long j = 1; j <= box; ++j) {
                const auto sj = family(TupleSetSpec::Family::A_tilde_c_j, 5, j);
                for (const auto& t : sj)
                    for (const auto& u : sj) {
                        if (sorted(t) == sorted(u)) continue;
                        ++rep.pairs_checked;
                        if (exact_moment({t, u}) != 0.0) ++rep.violations;
                    }
            }
            break;
        }
        case OrthStatement::rem5_disjoint: {
            const auto all = family(TupleSetSpec::Family::A, 5);
            for (const auto& t : all)
                for (long i = 1; i <= box; ++i)
                    for (long j = i + 1; j <= box; ++j) {
                        ++rep.pairs_checked;
                        if (has_pair_value(t, i) && has_pair_value(t, j)) ++rep.violations;
                    }
            break;
        }
    }
    return rep;
}

SweepReport check_union_A(int n, long box) {
    SweepReport rep{"union_A", box, 0, 0};
    TupleSetSpec a{TupleSetSpec::Family::A, n, box};
    for (const auto& t : enumerate_tuples(a)) {
        ++rep.pairs_checked;
        TupleSetSpec ta = a, tc = a;
        ta.family = TupleSetSpec::Family::A_tilde;
        tc.family = TupleSetSpec::Family::A_tilde_c;
        if (in_family(t, ta) == in_family(t, tc)) ++rep.violations;
    }
    return rep;
}

SweepReport check_partition_B(int n, long box) {
    SweepReport rep{"partition_B", box, 0, 0};
    for (long j = 1; j <= box; ++j) {
        TupleSetSpec cls{TupleSetSpec::Family::A_tilde_c_j, n, box, j};
        for (const auto& t : enumerate_tuples(cls)) {
            ++rep.pairs_checked;
            int hits = 0;
            for (int l = 1; l <= n; ++l)
                for (int m = l + 1; m <= n; ++m) {
                    TupleSetSpec b{TupleSetSpec::Family::B, n, box, j, l, m};
                    if (in_family(t, b)) ++hits;
                }
            if (hits != 1) ++rep.violations;  // disjoint cover: exactly one part
        }
    }
    return rep;
}

SweepReport check_dommat(int n, long box) {
    SweepReport rep{"dommat", box, 0, 0};
    TupleSetSpec a{TupleSetSpec::Family::A, n, box};
    for (const auto& t : enumerate_tuples(a))
        for (long j = 1; j <= box; ++j) {
            ++rep.pairs_checked;
            TupleSetSpec plus{TupleSetSpec::Family::A_tilde_c_j, n, box, j};
            TupleSetSpec minus{TupleSetSpec::Family::A_tilde_c_j, n, box, -j};
            if (in_family(t, plus) != in_family(t, minus)) ++rep.violations;
        }
    return rep;
}

SweepReport check_bersstr(long box, long n_cut) {
    SweepReport rep{"bersstr", box, 0, 0};
    // left side: tuples in A~_4^c with |j_1 + j_2| > n_cut
    TupleSetSpec spec{TupleSetSpec::Family::A_tilde_c, 4, box};
    spec.constrain_idx = {1, 2};
    spec.constrain_gt = n_cut;
    std::vector<IndexTuple> lhs = enumerate_tuples(spec);
    // right side: (k, h, -k, -h) and (k, h, -h, -k) with |h + k| > n_cut
    std::vector<IndexTuple> rhs;
    for (long k = -box; k <= box; ++k) {
        if (k == 0) continue;
        for (long h = -box; h <= box; ++h) {
            if (h == 0 || std::labs(h + k) <= n_cut) continue;
            rhs.push_back({k, h, -k, -h});
            rhs.push_back({k, h, -h, -k});
        }
    }
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    rhs.erase(std::unique(rhs.begin(), rhs.end()), rhs.end());
    rep.pairs_checked = lhs.size() + rhs.size();
    if (lhs != rhs) rep.violations = 1;
    return rep;
}

const char* orth_statement_name(OrthStatement s) {
    switch (s) {
        case OrthStatement::tildeA_n3: return "opposite-pair necessity, n=3";
        case OrthStatement::tildeA_n4: return "opposite-pair necessity, n=4";
        case OrthStatement::cor55: return "pair-free orthogonality";
        case OrthStatement::forp2: return "cross-class orthogonality";
        case OrthStatement::orthtzv: return "within-class orthogonality";
        case OrthStatement::rem5_disjoint: return "class disjointness, n=5";
    }
    return "?";
}

}  // namespace bo
