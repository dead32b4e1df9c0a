#include "bo/monomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bo {

namespace {

using Node = Monomial::Node;

int count_leaves(const Node& n) {
    if (n.kind == Node::Kind::leaf) return 1;
    int c = 0;
    for (const auto& k : n.kids) c += count_leaves(k);
    return c;
}

int max_alpha(const Node& n) {
    if (n.kind == Node::Kind::leaf) return n.alpha;
    int m = 0;
    for (const auto& k : n.kids) m = std::max(m, max_alpha(k));
    return m;
}

int sum_alpha(const Node& n) {
    if (n.kind == Node::Kind::leaf) return n.alpha;
    int s = 0;
    for (const auto& k : n.kids) s += sum_alpha(k);
    return s;
}

Node strip_h(const Node& n) {
    switch (n.kind) {
        case Node::Kind::leaf:
            return n;
        case Node::Kind::hilbert:
            return strip_h(n.kids.front());
        case Node::Kind::product: {
            Node out{Node::Kind::product, 0, {}};
            out.kids.reserve(n.kids.size());
            for (const auto& k : n.kids) out.kids.push_back(strip_h(k));
            return out;
        }
    }
    return n;
}

MeanField as_mean(FourierField f) { return MeanField{0.0, std::move(f)}; }

MeanField hilbert_mf(const MeanField& f) { return {0.0, hilbert(f.osc)}; }

MeanField eval_node(const Node& n, const Monomial::LeafSource& src, int& leaf) {
    switch (n.kind) {
        case Node::Kind::leaf:
            return as_mean(derivative(src(leaf++), n.alpha));
        case Node::Kind::hilbert:
            return hilbert_mf(eval_node(n.kids.front(), src, leaf));
        case Node::Kind::product: {
            MeanField acc = eval_node(n.kids.front(), src, leaf);
            for (std::size_t i = 1; i < n.kids.size(); ++i)
                acc = product(acc, eval_node(n.kids[i], src, leaf));
            return acc;
        }
    }
    return {};
}

struct DualMF {
    MeanField value;
    MeanField tangent;
};

DualMF eval_dual_node(const Node& n, const FourierField& u, const FourierField& v) {
    switch (n.kind) {
        case Node::Kind::leaf:
            return {as_mean(derivative(u, n.alpha)), as_mean(derivative(v, n.alpha))};
        case Node::Kind::hilbert: {
            DualMF c = eval_dual_node(n.kids.front(), u, v);
            return {hilbert_mf(c.value), hilbert_mf(c.tangent)};
        }
        case Node::Kind::product: {
            std::vector<DualMF> kids;
            kids.reserve(n.kids.size());
            for (const auto& k : n.kids) kids.push_back(eval_dual_node(k, u, v));
            const std::size_t m = kids.size();
            // prefix[i] = product of values of kids [0, i)
            std::vector<MeanField> prefix(m + 1), suffix(m + 1);
            prefix[0] = MeanField{1.0, {}};
            for (std::size_t i = 0; i < m; ++i) prefix[i + 1] = product(prefix[i], kids[i].value);
            suffix[m] = MeanField{1.0, {}};
            for (std::size_t i = m; i-- > 0;) suffix[i] = product(kids[i].value, suffix[i + 1]);
            MeanField tan{};
            for (std::size_t i = 0; i < m; ++i) {
                MeanField t = product(product(prefix[i], kids[i].tangent), suffix[i + 1]);
                tan.mean += t.mean;
                if (tan.osc.n_max() < t.osc.n_max()) tan.osc.coeffs().resize(t.osc.n_max());
                for (std::size_t j = 1; j <= t.osc.n_max(); ++j)
                    tan.osc.set(j, tan.osc.coeff(static_cast<long>(j)) + t.osc.coeff(static_cast<long>(j)));
            }
            return {prefix[m], std::move(tan)};
        }
    }
    return {};
}

double l2_norm(const MeanField& f) {
    return std::sqrt(two_pi * (f.mean * f.mean + sobolev_norm_sq(f.osc, 0.0)));
}

// |integral f g| divided by the Cauchy-Schwarz bound of the same pairing.
double rel_vanish(const MeanField& f, const MeanField& g) {
    const double val = integrate(product(f, g));
    const double scale = l2_norm(f) * l2_norm(g);
    return std::abs(val) / std::max(scale, 1e-300);
}

}  // namespace

Monomial Monomial::prod(std::vector<Monomial> ms) {
    if (ms.size() == 1) return std::move(ms.front());
    Node n{Node::Kind::product, 0, {}};
    n.kids.reserve(ms.size());
    for (auto& m : ms) n.kids.push_back(std::move(m.root_));
    return Monomial(std::move(n));
}

int Monomial::degree() const { return count_leaves(root_); }
int Monomial::max_order() const { return max_alpha(root_); }
int Monomial::total_order() const { return sum_alpha(root_); }
Monomial Monomial::skeleton() const { return Monomial(strip_h(root_)); }

MeanField Monomial::evaluate(const LeafSource& src) const {
    int leaf = 0;
    return eval_node(root_, src, leaf);
}

Monomial::Dual Monomial::evaluate_dual(const FourierField& u, const FourierField& v) const {
    DualMF d = eval_dual_node(root_, u, v);
    return {std::move(d.value), std::move(d.tangent)};
}

double eval_integral(const Monomial& p, const FourierField& u) {
    return integrate(p.evaluate([&u](int) -> const FourierField& { return u; }));
}

double directional_derivative(const Monomial& p, const FourierField& u,
                              const FourierField& v) {
    return integrate(p.evaluate_dual(u, v).tangent);
}

double PStarSum::eval_summand(int i, const FourierField& u) const {
    const FourierField repl = project_high(product(u, derivative(u)).osc, n_cut_);
    auto src = [&](int leaf) -> const FourierField& { return leaf == i ? repl : u; };
    return integrate(p_.evaluate(src));
}

double PStarSum::eval(const FourierField& u) const {
    double s = 0.0;
    for (int i = 0; i < summands(); ++i) s += eval_summand(i, u);
    return s;
}

IntparResiduals check_intpar_identities(const FourierField& u, int m, long n_cut) {
    for (std::size_t j = static_cast<std::size_t>(n_cut) + 1; j <= u.n_max(); ++j)
        if (u.coeff(static_cast<long>(j)) != cplx{})
            throw std::invalid_argument("field has modes above the cutoff");

    const MeanField um = as_mean(u);
    const FourierField f = project_high(product(u, derivative(u)).osc, n_cut);
    const FourierField dmu = derivative(u, m);
    const FourierField dmf = derivative(f, m);

    const double a = integrate(product(product(um, as_mean(hilbert(dmu))), as_mean(hilbert(dmf))));
    const double b = integrate(product(product(um, as_mean(dmu)), as_mean(dmf)));
    const double r1 = std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});

    const double c1 = integrate(product(product(um, as_mean(dmu)), as_mean(hilbert(dmf))));
    const double c2 = integrate(product(product(um, as_mean(dmf)), as_mean(hilbert(dmu))));
    const double r2 = std::abs(c1 + c2) / std::max({std::abs(c1), std::abs(c2), 1e-300});
    return {r1, r2};
}

double check_vanishing_term(const FourierField& u, long n_cut, VanishingTerm which) {
    const FourierField un = project_low(u, n_cut);
    const MeanField umn = as_mean(un);
    const FourierField dun = derivative(un);
    const FourierField q = project_high(product(un, dun).osc, n_cut);

    switch (which) {
        case VanishingTerm::hebSR_I:
            return rel_vanish(product(umn, as_mean(q)), as_mean(hilbert(dun)));
        case VanishingTerm::hebSR_II:
            return rel_vanish(product(umn, umn), as_mean(hilbert(derivative(q))));
        case VanishingTerm::esrty_III:
            return rel_vanish(product(umn, as_mean(hilbert(dun))), as_mean(derivative(q, 2)));
        case VanishingTerm::esrty_II_cancel: {
            const FourierField d2un = derivative(un, 2);
            const MeanField f = product(umn, as_mean(d2un));
            const FourierField g = project_high(hilbert(product(un, d2un).osc), n_cut);
            return rel_vanish(f, as_mean(g));
        }
    }
    return 0.0;
}

const char* vanishing_term_name(VanishingTerm t) {
    switch (t) {
        case VanishingTerm::hebSR_I: return "I_N";
        case VanishingTerm::hebSR_II: return "II_N";
        case VanishingTerm::esrty_III: return "III_N";
        case VanishingTerm::esrty_II_cancel: return "II_N_cancel";
    }
    return "?";
}

}  // namespace bo
