#ifndef BO_MONOMIAL_HPP
#define BO_MONOMIAL_HPP

#include <functional>
#include <string>
#include <vector>

#include "bo/field.hpp"

namespace bo {

// Expression tree over leaves d_x^alpha u, with optional Hilbert-transform
// wrappers (also around whole products) and products. The degree is the
// number of leaves.
class Monomial {
public:
    struct Node {
        enum class Kind { leaf, hilbert, product };
        Kind kind = Kind::leaf;
        int alpha = 0;
        std::vector<Node> kids;
    };

    Monomial() = default;
    explicit Monomial(Node n) : root_(std::move(n)) {}

    static Monomial leaf(int alpha) { return Monomial(Node{Node::Kind::leaf, alpha, {}}); }
    static Monomial u() { return leaf(0); }
    static Monomial ux(int order = 1) { return leaf(order); }
    static Monomial H(Monomial m) {
        Node n{Node::Kind::hilbert, 0, {}};
        n.kids.push_back(std::move(m.root_));
        return Monomial(std::move(n));
    }
    static Monomial prod(std::vector<Monomial> ms);

    const Node& root() const { return root_; }

    int degree() const;       // number of leaves
    int max_order() const;    // |p| = max leaf alpha
    int total_order() const;  // ||p|| = sum of leaf alphas
    Monomial skeleton() const;  // erase all Hilbert wrappers

    // Leaves are numbered left to right; the source supplies the field that
    // leaf evaluates to, before its derivative is applied.
    using LeafSource = std::function<const FourierField&(int leaf_index)>;

    MeanField evaluate(const LeafSource& src) const;

    // Evaluate together with the tangent obtained by replacing, linearly in
    // each leaf, the base field by the direction field.
    struct Dual {
        MeanField value;
        MeanField tangent;
    };
    Dual evaluate_dual(const FourierField& u, const FourierField& v) const;

private:
    Node root_;
};

double eval_integral(const Monomial& p, const FourierField& u);

// Gateaux derivative of u -> integral p(u) dx in direction v.
double directional_derivative(const Monomial& p, const FourierField& u,
                              const FourierField& v);

// p*_N: the sum over leaves of p with one leaf's d^alpha u replaced by
// d^alpha pi_{>N}(u d_x u). Summands are kept separate.
class PStarSum {
public:
    PStarSum(Monomial p, long n_cut) : p_(std::move(p)), n_cut_(n_cut) {}
    int summands() const { return p_.degree(); }
    double eval_summand(int i, const FourierField& u) const;
    double eval(const FourierField& u) const;
    long cutoff() const { return n_cut_; }

private:
    Monomial p_;
    long n_cut_;
};

inline PStarSum pstar_N(Monomial p, long n_cut) { return PStarSum(std::move(p), n_cut); }

// Exact integration-by-parts identities for band-limited fields, returned as
// relative residuals (0 at machine precision when the identities hold).
struct IntparResiduals {
    double first_equality;  // the two left-hand forms agree
    double pairing_sum;     // the mixed Hilbert pairing sums to zero
};

// Requires u supported on modes |j| <= N; throws std::invalid_argument else.
IntparResiduals check_intpar_identities(const FourierField& u, int m, long n_cut);

enum class VanishingTerm {
    hebSR_I,         // coupling of pi_{>N}(u du) against H du
    hebSR_II,        // u^2 against the projected Hilbert derivative
    esrty_III,       // u H du against the twice-differentiated projection
    esrty_II_cancel  // the mutually cancelling pair inside the second term
};

// Absolute value of the named term at pi_N u, divided by a Cauchy-Schwarz
// scale of its factors.
double check_vanishing_term(const FourierField& u, long n_cut, VanishingTerm which);

const char* vanishing_term_name(VanishingTerm t);

}  // namespace bo

#endif
