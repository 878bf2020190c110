#pragma once

#include "hv/verma.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hv {

/// Shape statistics of a nonzero vector, read off its canonical form.
struct VectorStats {
    std::set<GroupElement> J;                   // t-exponents appearing
    int r = 0;                                  // max E-factor count
    std::set<std::vector<GroupElement>> I;      // E-exponent sequences realizing r
    int l = 0;        // discrete: max count of E-exponents off the eps-line
    int l_prime = 0;  // discrete: max count of t-exponents off the eps-line,
                      // over monomials whose E-exponents all lie on it
};

VectorStats stats(const ModuleVector& v);

/// A cyclicity certificate: applying `word` left-to-right (word[0] first)
/// to the vector with digest `input_digest` yields scalar * v.
struct Certificate {
    std::vector<Generator> word;
    Rat scalar;
    std::string input_digest;
};

/// Theorem criteria: dense orders are irreducible iff (c1,c2) != (0,0);
/// discrete orders iff eps(1)c1 + eps(2)c2 != 0.
bool irreducible(const OrderSpec& order, const CentralCharge& charge);

/// One step of the dense r-reduction (requires r(v) > 1): returns the
/// positive t-generator applied and the image, with r decreased by
/// exactly one and the image nonzero.
std::pair<Generator, ModuleVector> dense_reduce_r(const ModuleVector& v);

/// One step taking r = 1 to r = 0 on a dense order: applies t^alpha for a
/// scanned alpha strictly between the top two E-exponent groups.
std::pair<Generator, ModuleVector> dense_reduce_to_t(const ModuleVector& v);

/// Finishing word for a dense-order vector lying in U(L^t_-) v; loops the
/// good-exponent collapse (Case 1) and the eta-substitution (Case 2) until
/// the vector lands in C v. Requires (c1,c2) != (0,0).
std::vector<Generator> dense_finish(ModuleVector& v);

/// One step of the discrete l-reduction (requires l(v) >= 1).
std::pair<Generator, ModuleVector> discrete_reduce_l(const ModuleVector& v);

/// Collapse of the maximal eps-ladder of E-factors once l = 0; requires
/// eps(1)c1 + eps(2)c2 != 0. Returns the word of positive collinear t's.
std::pair<std::vector<Generator>, ModuleVector> discrete_reduce_Eeps(const ModuleVector& v);

/// Finishing word for a discrete-order vector in U(L^t_-) v: one E-step
/// per unit of l', then the maximal eps-ladder of E's.
std::vector<Generator> discrete_finish(ModuleVector& v);

/// Full driver: compose the reduction steps for the order's family and
/// return a replayable certificate. Requires v != 0 and the
/// irreducibility criterion to hold (throws CriterionError otherwise).
Certificate reduce_to_highest(const ModuleVector& v);

/// Replay the certificate word through the engine and compare against
/// scalar * v. Throws if the digest does not match the vector.
bool verify_certificate(const ModuleVector& v, const Certificate& cert);

struct CriterionError : std::domain_error {
    using std::domain_error::domain_error;
};

} // namespace hv
