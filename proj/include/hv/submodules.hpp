#pragma once

#include "hv/reduction.hpp"
#include "hv/verma.hpp"

#include <map>
#include <vector>

namespace hv {

enum class SecondaryCase { prop37_1, prop37_2, prop38_ab, prop38_xi };

std::string secondary_case_name(SecondaryCase c);
SecondaryCase secondary_case_from_name(const std::string& s);

/// Parameters of the discrete-case maximal submodules: finitely supported
/// rational sequences, zero-extended beyond their support.
struct WhittakerParams {
    SecondaryCase variant = SecondaryCase::prop38_ab;
    std::map<long long, Rat> a, b; // prop38_ab
    std::map<long long, Rat> xi;   // prop38_xi
    long long window = 3;          // quantifier window for the i-indices

    Rat a_at(long long i) const { auto it = a.find(i); return it == a.end() ? Rat(0) : it->second; }
    Rat b_at(long long i) const { auto it = b.find(i); return it == b.end() ? Rat(0) : it->second; }
    Rat xi_at(long long i) const { auto it = xi.find(i); return it == xi.end() ? Rat(0) : it->second; }
};

/// Which maximal-submodule description applies to a reducible module.
SecondaryCase criterion_secondary(const OrderSpec& order, const CentralCharge& charge);

/// Membership in the unique maximal graded submodule (variant prop37_1:
/// the degree-(0,0) component vanishes) or in the span of monomials with
/// a t-factor (variant prop37_2). Dense orders, (c1,c2) = (0,0).
bool prop37_member(const ModuleVector& v, SecondaryCase variant);

/// Membership in M_ab(h) / M_xi(h) within the stated quantifier window:
/// every image X(eps' + i_1 eps)...X(eps' + i_h eps) v with all i_j in
/// [-window, window] and X in {t, E} per slot must land in I_ab v
/// (evaluation of the commutative U(H_-)-polynomial at (a, b)) resp. in
/// U(E) J_xi v (evaluation of the t-variables at xi).
bool prop38_member(const ModuleVector& v, const WhittakerParams& params, long long h,
                   long long window);

/// One stage of a generation certificate: the new vector is the sum of
/// act_elem(elem, w[source]) over the stage's terms, where w[0] is the
/// cyclic vector E(-gamma) v and w[i] is the result of stage i.
struct GenerationTerm {
    LieElement elem;
    int source = -1;
};

struct GenerationStep {
    std::vector<GenerationTerm> terms;
};

/// Reified generation chain for Prop 3.7(1): replays the proof that the
/// submodule generated by E(-gamma) v contains every E(-beta) v and
/// t^{-delta} v. Single-term stages are plain successive applications;
/// two-term stages realize the proof's commutator differences, which no
/// single composition chain can produce.
struct GenerationChain {
    GroupElement gamma;
    std::vector<GenerationStep> steps;

    /// Flattened view: the Lie elements of all stages in order.
    std::vector<LieElement> elements() const;
};

/// Build the chain from E(-gamma) v to the target monomial (one-factor
/// forms E(-beta) v or t^{-delta} v) following the proof: a small gamma'
/// below gamma, the ladder gamma' + n*gamma, and a final positive E or t
/// application. Dense orders with all central charges zero. Throws
/// std::runtime_error("step budget exceeded") past maxsteps stages.
GenerationChain prop37_generate(const OrderSpec& order, GroupElement gamma,
                                const PBWMonomial& target, int maxsteps);

/// Engine replay of a chain at zero central charge: all stage vectors.
std::vector<ModuleVector> replay_generation(const OrderSpec& order, const GenerationChain& chain);

/// True when the final stage vector is a nonzero multiple of the target.
bool verify_generation(const OrderSpec& order, const GenerationChain& chain,
                       const PBWMonomial& target);

} // namespace hv
