#include "hv/verma.hpp"

#include <algorithm>
#include <stdexcept>

namespace hv {

std::string PBWMonomial::str() const {
    if (empty()) return "v";
    std::string s;
    for (auto a : t) s += "t^-" + a.str() + " ";
    for (auto b : e) s += "E(-" + b.str() + ") ";
    return s + "v";
}

std::string ModuleVector::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += rat_to_string(c) + "*" + m.str();
    }
    return s;
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

ModuleVector& ModuleVector::operator*=(const Rat& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

bool ModuleVector::homogeneous(GroupElement* deg_out) const {
    if (terms_.empty()) return true;
    GroupElement d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    if (deg_out) *deg_out = d;
    return true;
}

namespace {

using Accum = std::map<PBWMonomial, Rat>;

void accum_add(Accum& acc, const PBWMonomial& m, const Rat& c) {
    if (sgn(c) == 0) return;
    auto [it, fresh] = acc.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (sgn(it->second) == 0) acc.erase(it);
    }
}

struct Engine {
    const OrderSpec& order;
    const CentralCharge& charge;

    // g applied to m, scaled by c, into acc.
    void apply(const Generator& g, const PBWMonomial& m, Rat c, Accum& acc) {
        using K = Generator::Kind;
        if (g.kind == K::K) {
            accum_add(acc, m, c * charge[g.k]);
            return;
        }
        bool positive = order.positive(g.alpha);
        if (g.kind == K::T && !positive) {
            PBWMonomial out = m;
            GroupElement a = -g.alpha;
            out.t.insert(std::upper_bound(out.t.begin(), out.t.end(), a, OrderLess{&order}), a);
            accum_add(acc, out, c);
            return;
        }
        if (g.kind == K::E && !positive) {
            apply_negative_e(-g.alpha, m, c, acc);
            return;
        }
        // positive generator: [g, X] on the rest, plus X * (g on the rest)
        if (m.empty()) return; // L_+ annihilates the highest-weight vector
        auto [first, rest] = split_first(m);
        LieElement br = bracket(g, first);
        for (const auto& [h, bc] : br.terms()) apply(h, rest, c * bc, acc);
        Accum sub;
        apply(g, rest, c, sub);
        for (const auto& [sm, sc] : sub) apply(first, sm, sc, acc);
    }

private:
    static std::pair<Generator, PBWMonomial> split_first(const PBWMonomial& m) {
        PBWMonomial rest = m;
        if (!m.t.empty()) {
            rest.t.erase(rest.t.begin());
            return {Generator::t(-m.t.front()), rest};
        }
        rest.e.erase(rest.e.begin());
        return {Generator::e(-m.e.front()), rest};
    }

    // E(-b) entering from the left: pass the t-block (each pass-by merges
    // the E into a t via the bracket), then insertion-sort into the E-block
    // (each out-of-order swap spawns a merged E term).
    void apply_negative_e(GroupElement b, const PBWMonomial& m, const Rat& c, Accum& acc) {
        if (!m.t.empty()) {
            GroupElement a = m.t.front();
            PBWMonomial rest = m;
            rest.t.erase(rest.t.begin());
            LieElement br = bracket(Generator::e(-b), Generator::t(-a));
            for (const auto& [h, bc] : br.terms()) apply(h, rest, c * bc, acc);
            Accum sub;
            apply_negative_e(b, rest, c, sub);
            for (const auto& [sm, sc] : sub) apply(Generator::t(-a), sm, sc, acc);
            return;
        }
        if (m.e.empty() || order.leq(b, m.e.front())) {
            PBWMonomial out = m;
            out.e.insert(out.e.begin(), b);
            accum_add(acc, out, c);
            return;
        }
        GroupElement b1 = m.e.front();
        PBWMonomial rest = m;
        rest.e.erase(rest.e.begin());
        LieElement br = bracket(Generator::e(-b), Generator::e(-b1));
        for (const auto& [h, bc] : br.terms()) apply(h, rest, c * bc, acc);
        Accum sub;
        apply_negative_e(b, rest, c, sub);
        for (const auto& [sm, sc] : sub) {
            PBWMonomial out = sm;
            out.e.insert(out.e.begin(), b1); // b1 precedes everything in sub
            accum_add(acc, out, sc);
        }
    }
};

} // namespace

ModuleVector act(const Generator& g, const ModuleVector& v) {
    ModuleVector out(v.order(), v.charge());
    Engine eng{v.order(), v.charge()};
    Accum acc;
    for (const auto& [m, c] : v.terms()) eng.apply(g, m, c, acc);
    for (const auto& [m, c] : acc) out.add(m, c);
    return out;
}

ModuleVector act_elem(const LieElement& x, const ModuleVector& v) {
    ModuleVector out(v.order(), v.charge());
    for (const auto& [g, c] : x.terms()) {
        ModuleVector part = act(g, v);
        part *= c;
        out += part;
    }
    return out;
}

ModuleVector normal_order(const std::vector<Generator>& word, const CentralCharge& charge,
                          const OrderSpec& order) {
    ModuleVector v = ModuleVector::unit(order, charge);
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = act(*it, v);
    return v;
}

std::map<GroupElement, ModuleVector> grade(const ModuleVector& v) {
    std::map<GroupElement, ModuleVector> out;
    for (const auto& [m, c] : v.terms()) {
        auto [it, fresh] = out.emplace(m.degree(), ModuleVector(v.order(), v.charge()));
        it->second.add(m, c);
    }
    return out;
}

namespace {

// Enumerate multisets of window elements as nondecreasing index sequences.
// Coordinates of `len` window elements are bounded by len*window, which
// prunes branches that can no longer reach the remaining sum.
struct BasisEnum {
    const std::vector<GroupElement>& pool;
    long long window;
    std::vector<PBWMonomial> out;

    bool reachable(GroupElement r, int len) const {
        long long cap = static_cast<long long>(len) * window;
        return std::llabs(r.x) <= cap && std::llabs(r.y) <= cap;
    }

    void epart(size_t from, GroupElement remaining, int budget, std::vector<GroupElement>& tp,
               std::vector<GroupElement>& ep) {
        if (remaining.is_zero()) out.push_back(PBWMonomial{tp, ep});
        if (budget == 0 || !reachable(remaining, budget)) return;
        for (size_t i = from; i < pool.size(); ++i) {
            ep.push_back(pool[i]);
            epart(i, remaining - pool[i], budget - 1, tp, ep);
            ep.pop_back();
        }
    }

    void tpart(size_t from, GroupElement remaining, int budget, std::vector<GroupElement>& tp) {
        std::vector<GroupElement> ep;
        epart(0, remaining, budget, tp, ep);
        if (budget == 0 || !reachable(remaining, budget)) return;
        for (size_t i = from; i < pool.size(); ++i) {
            tp.push_back(pool[i]);
            tpart(i, remaining - pool[i], budget - 1, tp);
            tp.pop_back();
        }
    }
};

} // namespace

std::vector<PBWMonomial> enumerate_basis(const OrderSpec& order, GroupElement degree,
                                         long long window, int maxlen) {
    if (order.positive(degree))
        throw std::domain_error("enumerate_basis requires degree <= 0");
    BasisEnum be{positive_window(order, window), window, {}};
    std::vector<GroupElement> tp;
    be.tpart(0, -degree, maxlen, tp);
    std::sort(be.out.begin(), be.out.end());
    return be.out;
}

} // namespace hv
