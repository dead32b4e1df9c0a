#ifndef BO_WICK_HPP
#define BO_WICK_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace bo {

using IndexTuple = std::vector<long>;

// Families of constrained integer tuples (entries non-zero, zero total sum):
//   A          : all of them
//   A_tilde    : no opposite pair j_k = -j_l
//   A_tilde_c  : at least one opposite pair
//   A_tilde_c_j: opposite pair with value j (= the set for |j|)
//   B          : the lexicographic disjoint refinement of A_tilde_c_j by the
//                first position pair (l, m) carrying +-j
struct TupleSetSpec {
    enum class Family { A, A_tilde, A_tilde_c, A_tilde_c_j, B };
    Family family = Family::A;
    int n = 3;
    long box = 3;  // entries range over 0 < |j_i| <= box
    long j = 0;    // for A_tilde_c_j and B
    int l = 0, m = 0;  // for B, 1-based with l < m
    // optional extra constraint: |sum over positions constrain_idx| > constrain_gt
    std::vector<int> constrain_idx;  // 1-based positions
    long constrain_gt = -1;          // < 0 disables
};

bool in_family(const IndexTuple& t, const TupleSetSpec& spec);
std::vector<IndexTuple> enumerate_tuples(const TupleSetSpec& spec);

// E[ g_{j_1}...g_{j_n} conj(g_{i_1}...g_{i_n}) ] for independent circular
// complex Gaussians with E|g|^2 = 1 and g_{-n} = conj(g_n).
struct MomentQuery {
    IndexTuple j_list;  // unconjugated factors
    IndexTuple i_list;  // conjugated factors
};

// Folds to positive indices, then per group |n|: E[g^a conj(g)^b] = delta_ab a!.
double exact_moment(const MomentQuery& q);

// Same expectation by plain averaging over draws; g streams derived from
// (seed, draw, mode) so distinct queries can share draws.
double monte_carlo_moment(const MomentQuery& q, std::size_t draws, std::uint64_t seed,
                          double* std_error = nullptr);

enum class OrthStatement {
    tildeA_n3,      // nonzero moment of distinct multisets forces an opposite pair
    tildeA_n4,
    cor55,          // both tuples free of opposite pairs, distinct multisets -> 0
    forp2,          // mixed pair classes, distinct residual multisets -> 0
    orthtzv,        // same class j, distinct multisets -> 0
    rem5_disjoint,  // the classes A~_5^{c,j} are pairwise disjoint
};

struct SweepReport {
    std::string statement;
    long box = 0;
    std::uint64_t pairs_checked = 0;
    std::uint64_t violations = 0;
};

SweepReport verify_orthogonality(OrthStatement s, long box, int n = 5);

// Exact set checks used by the partition acceptance criterion.
SweepReport check_union_A(int n, long box);          // A = A_tilde (disjoint) A_tilde_c
SweepReport check_partition_B(int n, long box);      // A~^{c,j} = disjoint union of B
SweepReport check_dommat(int n, long box);           // A~^{c,j} = A~^{c,|j|}
SweepReport check_bersstr(long box, long n_cut);     // closed form of the n = 4 class

const char* orth_statement_name(OrthStatement s);

}  // namespace bo

#endif
