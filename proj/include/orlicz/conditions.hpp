#pragma once

#include "orlicz/phi.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>

namespace orlicz {

enum class Condition { A0, A1, VA1, AIncP, ADecQ, StrongLogHolder, AlphaHolder };
enum class Verdict { Holds, Fails, Inconclusive };

const char* to_string(Condition c);
const char* to_string(Verdict v);
Condition condition_from_string(const std::string& s);

/// A violating configuration. A0/A1/VA1: points x, y of a ball of radius r
/// and argument t. aInc/aDec: point x with arguments s = y < t. Hölder-type
/// conditions: points x, y with r = |x - y|.
struct Witness {
    double x = 0.0;
    double y = 0.0;
    double t = 0.0;
    double r = 0.0;
};

struct ConditionReport {
    Condition condition = Condition::A0;
    double parameter = 0.0;  // p, q or alpha where the condition takes one; K for A1/VA1
    Verdict verdict = Verdict::Inconclusive;
    std::optional<Witness> witness;
    std::map<std::string, double> constants;  // beta, L_p, L_q, omega(r_min), ...
    std::string method;                       // "analytic" or "sampled"
};

struct CheckOptions {
    std::size_t budget = 1000;   // (ball, t) evaluations for the samplers; >= 100
    double max_constant = 1e6;   // sampled constants beyond this count as violations
};

/// `parameter` is p for aInc, q for aDec, alpha for alphaHolder and K for
/// A1/VA1 (K <= 0 means K = 1); ignored otherwise.
ConditionReport check_condition(const Phi& phi, Condition c, double parameter = 0.0, const CheckOptions& opt = {});

/// Re-evaluates a Fails witness; true when it is a genuine violation of the
/// inequality with the constants stored in the report.
bool witness_violates(const Phi& phi, const ConditionReport& report);

/// phi^-_B(mean|f| / (1 + omega)) - (mean phi(x, f) + omega) on B = [lo, hi].
/// Throws PreconditionViolated unless rho_phi(L f) <= 1 on B, with L the
/// family's almost-increasing constant.
double jensen_gap(const Phi& phi, double lo, double hi, const std::function<double(double)>& f, double omega);

}  // namespace orlicz
