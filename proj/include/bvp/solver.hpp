#pragma once

#include <vector>

#include "bvp/exprlang.hpp"
#include "bvp/grid.hpp"
#include "bvp/kernel.hpp"
#include "bvp/quadrature.hpp"
#include "bvp/verifier.hpp"

namespace bvp {

struct SolveSettings {
    double damping = 0.5;              // theta in (0,1]
    int max_iters = 10000;
    double conv_tol = 1e-10;           // sup-norm relative change
    double trivial_threshold = 1e-6;   // ||u|| below this is the zero solution
    std::vector<double> init_scales = {0.1, 1.0, 10.0};
    int grid_n = 200;
};

enum class SolveStatus { Solved, Trivial, Diverged, MaxIters };

struct SolveOutcome {
    SolveStatus status = SolveStatus::MaxIters;
    GridFunction solution{0, {}};      // meaningful iff status == Solved
    int iterations = 0;
    std::vector<double> history;       // sup-norm per iteration
    int clamped_points = 0;            // negative intermediate values clamped at 0
    VerificationReport report{};       // verifier result for the final candidate
};

/// One application of the integral operator
///   (A_lambda u)(t) = lambda * int_0^1 G(t,s) a(s) f(u~(s)) ds,
/// where u~ is the piecewise-linear interpolant of u. The integral is
/// split at eta and at every interpolation breakpoint so each piece is
/// smooth for the adaptive rule.
GridFunction apply_operator(const BvpParams& p, const Expression& a, const Expression& f,
                            double lambda, const GridFunction& u,
                            const QuadratureSettings& q);

/// Damped Picard iteration u <- (1-theta) u + theta A_lambda u over each
/// initial scale in turn, clamping negatives at 0. A converged candidate
/// passing the verifier is Solved; a converged candidate with norm below
/// trivial_threshold is Trivial and the next scale is tried.
///
/// If no scale converges freely (typical when f(u)/u is increasing, which
/// makes the nontrivial fixed point repelling), the solver pins the
/// amplitude, settles the shape of the normalized iteration, and bisects
/// for the amplitude of unit operator gain; the resulting candidate is
/// accepted only if the independent verifier passes.
SolveOutcome picard_solve(const BvpParams& p, const Expression& a, const Expression& f,
                          double lambda, const SolveSettings& s,
                          const QuadratureSettings& q);

}  // namespace bvp
