#include "hv/submodules.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace hv {

std::string secondary_case_name(SecondaryCase c) {
    switch (c) {
        case SecondaryCase::prop37_1: return "prop37_1";
        case SecondaryCase::prop37_2: return "prop37_2";
        case SecondaryCase::prop38_ab: return "prop38_ab";
        default: return "prop38_xi";
    }
}

SecondaryCase secondary_case_from_name(const std::string& s) {
    if (s == "prop37_1") return SecondaryCase::prop37_1;
    if (s == "prop37_2") return SecondaryCase::prop37_2;
    if (s == "prop38_ab") return SecondaryCase::prop38_ab;
    if (s == "prop38_xi") return SecondaryCase::prop38_xi;
    throw std::invalid_argument("unknown submodule variant: " + s);
}

SecondaryCase criterion_secondary(const OrderSpec& order, const CentralCharge& charge) {
    if (irreducible(order, charge))
        throw CriterionError("criterion_secondary applies only to reducible modules");
    if (order.is_dense()) {
        bool c34_zero = sgn(charge.c3) == 0 && sgn(charge.c4) == 0;
        return c34_zero ? SecondaryCase::prop37_1 : SecondaryCase::prop37_2;
    }
    GroupElement eps = order.epsilon();
    return sgn(charge.pair_f(eps)) == 0 ? SecondaryCase::prop38_ab : SecondaryCase::prop38_xi;
}

bool prop37_member(const ModuleVector& v, SecondaryCase variant) {
    const OrderSpec& o = v.order();
    const CentralCharge& ch = v.charge();
    if (!o.is_dense()) throw std::domain_error("prop37_member requires a dense order");
    if (sgn(ch.c1) != 0 || sgn(ch.c2) != 0)
        throw std::domain_error("prop37_member requires (c1,c2) = (0,0)");
    if (variant == SecondaryCase::prop37_1) {
        if (sgn(ch.c3) != 0 || sgn(ch.c4) != 0)
            throw std::domain_error("prop37_1 requires (c3,c4) = (0,0)");
        return sgn(v.unit_coefficient()) == 0;
    }
    if (variant != SecondaryCase::prop37_2)
        throw std::domain_error("prop37_member handles the dense variants only");
    for (const auto& [m, c] : v.terms())
        if (m.t.empty()) return false;
    return true;
}

namespace {

// Decompose a U(H_-)-supported vector as a polynomial in the commuting
// variables t^{-k eps}, E(-k eps) and evaluate per variant. Returns false
// through `ok` when some monomial leaves the eps-line.
bool ideal_member(const ModuleVector& v, const WhittakerParams& p) {
    const OrderSpec& o = v.order();
    if (p.variant == SecondaryCase::prop38_ab) {
        Rat total(0);
        for (const auto& [m, c] : v.terms()) {
            Rat prod = c;
            for (auto a : m.t) {
                auto co = o.coords(a);
                if (co[1] != 0) return false;
                prod *= p.a_at(co[0]);
            }
            for (auto b : m.e) {
                auto co = o.coords(b);
                if (co[1] != 0) return false;
                prod *= p.b_at(co[0]);
            }
            total += prod;
        }
        return sgn(total) == 0;
    }
    // prop38_xi: evaluate the t-variables only, collect by E-monomial
    std::map<std::vector<GroupElement>, Rat> coeffs;
    for (const auto& [m, c] : v.terms()) {
        Rat prod = c;
        for (auto a : m.t) {
            auto co = o.coords(a);
            if (co[1] != 0) return false;
            prod *= p.xi_at(co[0]);
        }
        for (auto b : m.e)
            if (o.coords(b)[1] != 0) return false;
        auto [it, fresh] = coeffs.emplace(m.e, prod);
        if (!fresh) it->second += prod;
    }
    for (const auto& [mono, c] : coeffs)
        if (sgn(c) != 0) return false;
    return true;
}

long long eps_height(const OrderSpec& o, const PBWMonomial& m) {
    long long h = 0;
    for (auto a : m.t) h += o.coords(a)[1];
    for (auto b : m.e) h += o.coords(b)[1];
    return h;
}

} // namespace

bool prop38_member(const ModuleVector& v, const WhittakerParams& params, long long h,
                   long long window) {
    const OrderSpec& o = v.order();
    const CentralCharge& ch = v.charge();
    if (o.is_dense()) throw std::domain_error("prop38_member requires a discrete order");
    GroupElement eps = o.epsilon();
    GroupElement epsp = o.epsilon_prime();
    if (sgn(ch.pair_h(eps)) != 0)
        throw std::domain_error("prop38_member requires eps(1)c1 + eps(2)c2 = 0");
    bool f_zero = sgn(ch.pair_f(eps)) == 0;
    if (params.variant == SecondaryCase::prop38_ab && !f_zero)
        throw std::domain_error("prop38_ab requires eps(1)c3 + eps(2)c4 = 0");
    if (params.variant == SecondaryCase::prop38_xi && f_zero)
        throw std::domain_error("prop38_xi requires eps(1)c3 + eps(2)c4 != 0");
    if (params.variant != SecondaryCase::prop38_ab && params.variant != SecondaryCase::prop38_xi)
        throw std::domain_error("prop38_member handles the discrete variants only");
    if (h < 0) throw std::domain_error("h must be nonnegative");
    for (const auto& [m, c] : v.terms())
        if (eps_height(o, m) != h)
            throw std::domain_error("vector does not lie in M(h)");

    // all index tuples (i_1..i_h) in [-window, window]^h, all X in {t,E}^h
    std::vector<long long> idx(static_cast<size_t>(h), -window);
    std::vector<int> sym(static_cast<size_t>(h), 0);
    auto advance = [&]() {
        for (size_t j = 0; j < sym.size(); ++j) {
            if (sym[j] == 0) { sym[j] = 1; return true; }
            sym[j] = 0;
        }
        for (size_t j = 0; j < idx.size(); ++j) {
            if (idx[j] < window) { ++idx[j]; return true; }
            idx[j] = -window;
        }
        return false;
    };
    do {
        ModuleVector w = v;
        for (size_t j = idx.size(); j-- > 0;) { // rightmost operator acts first
            GroupElement arg = epsp + eps * idx[j];
            Generator g = sym[j] == 0 ? Generator::t(arg) : Generator::e(arg);
            w = act(g, w);
        }
        if (!ideal_member(w, params)) return false;
    } while (h > 0 && advance());
    return true;
}

std::vector<LieElement> GenerationChain::elements() const {
    std::vector<LieElement> out;
    for (const auto& s : steps)
        for (const auto& t : s.terms) out.push_back(t.elem);
    return out;
}

namespace {

GroupElement scan_first_gen(const OrderSpec& o, const std::function<bool(GroupElement)>& ok) {
    for (long long w = 1; w <= 4096; w *= 2)
        for (GroupElement g : positive_window(o, w))
            if (ok(g)) return g;
    throw std::runtime_error("window scan exhausted");
}

} // namespace

GenerationChain prop37_generate(const OrderSpec& order, GroupElement gamma,
                                const PBWMonomial& target, int maxsteps) {
    if (!order.is_dense()) throw std::domain_error("prop37_generate requires a dense order");
    if (!order.positive(gamma)) throw std::domain_error("prop37_generate requires gamma > 0");
    if (target.length() != 1)
        throw std::domain_error("target must be E(-beta) v or t^{-delta} v");

    bool t_form = !target.t.empty();
    GroupElement goal = t_form ? target.t.front() : target.e.front();
    if (!order.positive(goal)) throw std::domain_error("target exponent must be positive");

    GenerationChain chain{gamma, {}};
    auto budget = [&]() {
        if (static_cast<int>(chain.steps.size()) >= maxsteps)
            throw std::runtime_error("step budget exceeded");
    };

    // For a t-target, first reach E(-(delta+alpha)) v with delta < alpha <
    // 2*delta and det2(delta, alpha) != 0, then apply t^alpha.
    GroupElement beta = goal;
    GroupElement talpha{0, 0};
    if (t_form) {
        talpha = choose_between(order, goal, goal * 2);
        beta = goal + talpha;
    }

    // node values: w[0] = E(-gamma) v with coefficient 1, then exact
    // unit-coefficient vectors X_sigma along the proof's ladder
    struct Node {
        GroupElement sigma;
        int index;
    };
    Node cur{gamma, 0};

    if (beta != gamma) {
        GroupElement gp = scan_first_gen(order, [&](GroupElement g) {
            return order.less(g, gamma) && det2(g, gamma) != 0;
        });
        // E(gamma - gamma') E(-gamma) v = -det2(gamma', gamma) E(-gamma') v
        Rat c1 = rat(-det2(gp, gamma));
        budget();
        chain.steps.push_back({{{LieElement(Generator::e(gamma - gp), Rat(1) / c1), 0}}});
        cur = {gp, static_cast<int>(chain.steps.size())};

        if (beta != gp) {
            // climb sigma = gamma' + n*gamma until sigma > beta with
            // det2(sigma, beta) != 0, via
            //   det2(sigma,gamma) X_{sigma+gamma} = E(-gamma) X_sigma - E(-sigma) X_gamma
            Rat d = rat(det2(gp, gamma));
            while (!(order.less(beta, cur.sigma) && det2(cur.sigma, beta) != 0)) {
                budget();
                GroupElement next = cur.sigma + gamma;
                GenerationStep step;
                step.terms.push_back({LieElement(Generator::e(-gamma), Rat(1) / d), cur.index});
                step.terms.push_back({LieElement(Generator::e(-cur.sigma), Rat(-1) / d), 0});
                chain.steps.push_back(std::move(step));
                cur = {next, static_cast<int>(chain.steps.size())};
            }
            // E(sigma - beta) X_sigma = -det2(beta, sigma) X_beta
            Rat c2 = rat(-det2(beta, cur.sigma));
            budget();
            chain.steps.push_back(
                {{{LieElement(Generator::e(cur.sigma - beta), Rat(1) / c2), cur.index}}});
            cur = {beta, static_cast<int>(chain.steps.size())};
        }
    }

    if (t_form) {
        // t^alpha E(-(delta+alpha)) v = det2(alpha, delta) t^{-delta} v
        Rat c3 = rat(det2(talpha, goal));
        budget();
        chain.steps.push_back(
            {{{LieElement(Generator::t(talpha), Rat(1) / c3), cur.index}}});
    }
    return chain;
}

std::vector<ModuleVector> replay_generation(const OrderSpec& order, const GenerationChain& chain) {
    CentralCharge zero{0, 0, 0, 0};
    std::vector<ModuleVector> nodes;
    ModuleVector w0(order, zero);
    PBWMonomial m0;
    m0.e.push_back(chain.gamma);
    w0.add(m0, 1);
    nodes.push_back(w0);
    for (const auto& step : chain.steps) {
        ModuleVector w(order, zero);
        for (const auto& term : step.terms) {
            if (term.source < 0 || term.source >= static_cast<int>(nodes.size()))
                throw std::invalid_argument("generation step references an unknown stage");
            w += act_elem(term.elem, nodes[static_cast<size_t>(term.source)]);
        }
        nodes.push_back(std::move(w));
    }
    return nodes;
}

bool verify_generation(const OrderSpec& order, const GenerationChain& chain,
                       const PBWMonomial& target) {
    std::vector<ModuleVector> nodes = replay_generation(order, chain);
    const ModuleVector& last = nodes.back();
    if (last.is_zero() || last.terms().size() != 1) return false;
    return last.terms().begin()->first == target;
}

} // namespace hv
