#ifndef BO_FLOW_HPP
#define BO_FLOW_HPP

#include <vector>

#include "bo/field.hpp"

namespace bo {

// Truncated flow: d/dt c_j = L_j c_j + [nonlinear]_j with the nonlinearity
// -pi_N((pi_N u) d_x (pi_N u)) confined to |j| <= N; modes above N evolve
// linearly. L_j = -i j|j| for BO, +i j^3 for KdV.
struct FlowSpec {
    enum class Equation { BO, KdV };
    Equation equation = Equation::BO;
    long n_cut = 64;
    double dt = 1e-3;      // base step; halved until the drift criterion passes
    double tol = 1e-9;     // allowed relative L^2 drift of pi_N u per evolve
    bool nonlinear = true; // test hook: false gives the exact linear flow
};

// Full right-hand side (linear + projected nonlinearity) at u.
FourierField flow_vector_field(const FlowSpec& spec, const FourierField& u);

// Integrating-factor RK4: the linear phase is applied exactly, the classical
// four stages handle the nonlinearity. The base step is halved (at most 14
// times, else std::runtime_error) until ||pi_N u||_{L^2} drifts by at most
// spec.tol relative over the whole interval. Works for negative t.
FourierField evolve(const FlowSpec& spec, const FourierField& u0, double t);

struct ConvergenceRow {
    long n_cut;
    double dist;  // H^s distance to the reference (largest-N) trajectory
};

// Reference flow = largest entry of n_list (must be >= 4x every other entry).
std::vector<ConvergenceRow> convergence_probe(const FlowSpec& base, const FourierField& u0,
                                              const std::vector<long>& n_list, double t,
                                              double s);

}  // namespace bo

#endif
