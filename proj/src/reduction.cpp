#include "hv/reduction.hpp"

#include "hv/json_io.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace hv {

namespace {

void check(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("reduction contract violated: ") + what);
}

bool all_tpart(const ModuleVector& v) {
    for (const auto& [m, c] : v.terms())
        if (!m.e.empty()) return false;
    return true;
}

int count_noncollinear(const OrderSpec& o, const std::vector<GroupElement>& xs) {
    int n = 0;
    for (auto x : xs)
        if (!o.collinear_eps(x)) ++n;
    return n;
}

// order-max of the candidate sequences under the sequence order
const std::vector<GroupElement>* sequence_max(const OrderSpec& o,
                                              const std::vector<const std::vector<GroupElement>*>& seqs) {
    const std::vector<GroupElement>* best = nullptr;
    for (auto* s : seqs)
        if (!best || compare_sequences(o, *s, *best) == Ordering::Greater) best = s;
    return best;
}

GroupElement scan_first(const OrderSpec& o, const std::function<bool(GroupElement)>& ok) {
    for (long long w = 1; w <= 4096; w *= 2)
        for (GroupElement g : positive_window(o, w))
            if (ok(g)) return g;
    throw std::runtime_error("window scan exhausted");
}

} // namespace

VectorStats stats(const ModuleVector& v) {
    if (v.is_zero()) throw std::domain_error("stats requires a nonzero vector");
    const OrderSpec& o = v.order();
    VectorStats s;
    for (const auto& [m, c] : v.terms()) {
        s.r = std::max<int>(s.r, static_cast<int>(m.e.size()));
        for (auto a : m.t) s.J.insert(a);
    }
    for (const auto& [m, c] : v.terms())
        if (static_cast<int>(m.e.size()) == s.r) s.I.insert(m.e);
    if (!o.is_dense()) {
        for (const auto& [m, c] : v.terms()) {
            int le = count_noncollinear(o, m.e);
            s.l = std::max(s.l, le);
            if (le == 0) s.l_prime = std::max(s.l_prime, count_noncollinear(o, m.t));
        }
    }
    return s;
}

bool irreducible(const OrderSpec& order, const CentralCharge& charge) {
    if (order.is_dense()) return sgn(charge.c1) != 0 || sgn(charge.c2) != 0;
    return sgn(charge.pair_h(order.epsilon())) != 0;
}

std::pair<Generator, ModuleVector> dense_reduce_r(const ModuleVector& v) {
    const OrderSpec& o = v.order();
    if (!o.is_dense()) throw std::domain_error("dense_reduce_r requires a dense order");
    VectorStats st = stats(v);
    if (st.r <= 1) throw std::domain_error("dense_reduce_r requires r > 1");

    // the r-maximal part of v: its E-sequences and its t-exponents
    std::vector<const std::vector<GroupElement>*> seqs;
    std::set<GroupElement> Jbar;
    for (const auto& [m, c] : v.terms())
        if (static_cast<int>(m.e.size()) == st.r) {
            seqs.push_back(&m.e);
            for (auto a : m.t) Jbar.insert(a);
        }
    const std::vector<GroupElement>& top = *sequence_max(o, seqs);
    GroupElement beta11 = top.front();
    GroupElement gamma = seqs.front()->front();
    for (auto* s : seqs) gamma = o.min(gamma, s->front());

    std::set<GroupElement> forbidden;
    for (auto j : Jbar) forbidden.insert(beta11 - j);
    GroupElement gp = choose_small(o, o.min(gamma, mu(o, beta11)), forbidden);

    Generator g = Generator::t(gp);
    ModuleVector out = act(g, v);
    check(!out.is_zero(), "dense r-step image is nonzero");
    check(stats(out).r == st.r - 1, "dense r-step decreases r by one");
    return {g, out};
}

std::pair<Generator, ModuleVector> dense_reduce_to_t(const ModuleVector& v) {
    const OrderSpec& o = v.order();
    if (!o.is_dense()) throw std::domain_error("dense_reduce_to_t requires a dense order");
    VectorStats st = stats(v);
    if (st.r != 1) throw std::domain_error("dense_reduce_to_t requires r = 1");

    // distinct single E-exponents, descending
    std::set<GroupElement, OrderLess> exps{OrderLess{&o}};
    for (const auto& [m, c] : v.terms())
        if (!m.e.empty()) exps.insert(m.e.front());
    GroupElement beta1 = *exps.rbegin();
    GroupElement beta2 = exps.size() > 1 ? *std::next(exps.rbegin()) : GroupElement{0, 0};

    GroupElement alpha = choose_between(o, beta2, beta1);
    Generator g = Generator::t(alpha);
    ModuleVector out = act(g, v);
    check(!out.is_zero(), "dense t-step image is nonzero");
    check(all_tpart(out), "dense t-step lands in U(L^t_-) v");
    return {g, out};
}

namespace {

// (total bad-exponent count, total t-length): the dense finishing measure.
std::pair<long long, long long> finish_measure(const ModuleVector& v) {
    long long bad = 0, len = 0;
    for (const auto& [m, c] : v.terms()) {
        len += static_cast<long long>(m.t.size());
        for (auto a : m.t)
            if (sgn(v.charge().pair_h(a)) == 0) ++bad;
    }
    return {bad, len};
}

// positive primitive generator of the line a(1)c1 + a(2)c2 = 0
GroupElement bad_line_direction(const OrderSpec& o, const CentralCharge& ch) {
    mpz_class nx = -ch.c2.get_num() * ch.c1.get_den();
    mpz_class ny = ch.c1.get_num() * ch.c2.get_den();
    GroupElement rho{nx.get_si(), ny.get_si()};
    rho = primitive_part(rho);
    return o.positive(rho) ? rho : -rho;
}

} // namespace

std::vector<Generator> dense_finish(ModuleVector& v) {
    const OrderSpec& o = v.order();
    const CentralCharge& ch = v.charge();
    if (!o.is_dense()) throw std::domain_error("dense_finish requires a dense order");
    if (sgn(ch.c1) == 0 && sgn(ch.c2) == 0)
        throw CriterionError("dense_finish requires (c1,c2) != (0,0)");
    if (v.is_zero() || !all_tpart(v))
        throw std::domain_error("dense_finish requires a nonzero vector in U(L^t_-) v");

    std::vector<Generator> word;
    while (!v.is_multiple_of_unit()) {
        std::vector<const std::vector<GroupElement>*> seqs;
        for (const auto& [m, c] : v.terms()) seqs.push_back(&m.t);
        std::vector<GroupElement> top = *sequence_max(o, seqs);

        bool any_bad = false;
        for (const auto& [m, c] : v.terms())
            for (auto a : m.t)
                if (sgn(ch.pair_h(a)) == 0) any_bad = true;

        if (!any_bad) {
            // Case 1: collapse the maximal monomial, largest exponent first
            for (auto it = top.rbegin(); it != top.rend(); ++it) {
                word.push_back(Generator::e(*it));
                v = act(word.back(), v);
            }
            check(v.is_multiple_of_unit() && !v.is_zero(), "case-1 collapse ends in C v");
            break;
        }

        // Case 2
        auto before = finish_measure(v);
        GroupElement gmax = top.back();
        int b = static_cast<int>(std::count(top.begin(), top.end(), gmax));
        GroupElement step;
        if (sgn(ch.pair_h(gmax)) != 0) {
            step = gmax;
        } else {
            // alpha0 = order-min of the entries and their gaps below gmax
            std::optional<GroupElement> alpha0;
            auto feed = [&](GroupElement x) {
                if (!o.positive(x)) return;
                if (!alpha0 || o.less(x, *alpha0)) alpha0 = x;
            };
            for (const auto& [m, c] : v.terms())
                for (auto a : m.t) {
                    feed(a);
                    feed(gmax - a);
                }
            GroupElement delta = scan_first(o, [&](GroupElement g) {
                return o.less(g, gmax) && !(g * 2 == gmax);
            });
            GroupElement bound = o.min(*alpha0, o.min(delta, gmax - delta));
            // the finite set of bad positives below gmax
            std::set<GroupElement> badset;
            GroupElement rho = bad_line_direction(o, ch);
            for (GroupElement x = rho; o.leq(x, gmax); x = x + rho) badset.insert(x);
            GroupElement eta = choose_small(o, bound, badset);
            step = gmax - eta;
        }
        for (int i = 0; i < b; ++i) {
            word.push_back(Generator::e(step));
            v = act(word.back(), v);
        }
        check(!v.is_zero() && all_tpart(v), "case-2 step stays nonzero in U(L^t_-) v");
        check(finish_measure(v) < before, "case-2 measure strictly decreases");
    }
    return word;
}

std::pair<Generator, ModuleVector> discrete_reduce_l(const ModuleVector& v) {
    const OrderSpec& o = v.order();
    if (o.is_dense()) throw std::domain_error("discrete_reduce_l requires a discrete order");
    VectorStats st = stats(v);
    if (st.l < 1) throw std::domain_error("discrete_reduce_l requires l >= 1");
    GroupElement eps = o.epsilon();

    // non-collinear E-sequences of the l-maximal monomials
    std::vector<std::vector<GroupElement>> owned;
    for (const auto& [m, c] : v.terms()) {
        std::vector<GroupElement> nc;
        for (auto b : m.e)
            if (!o.collinear_eps(b)) nc.push_back(b);
        if (static_cast<int>(nc.size()) == st.l) owned.push_back(std::move(nc));
    }
    std::vector<const std::vector<GroupElement>*> seqs;
    for (const auto& s : owned) seqs.push_back(&s);
    const std::vector<GroupElement>& top = *sequence_max(o, seqs);
    GroupElement alpha11 = top.front();
    GroupElement alpha = seqs.front()->front();
    for (auto* s : seqs) alpha = o.min(alpha, s->front());

    long long n = 1;
    while (det2(alpha11, alpha - eps * n) == 0 || st.J.count(alpha11 - alpha + eps * n)) ++n;

    Generator g = Generator::t(alpha - eps * n);
    ModuleVector out = act(g, v);
    check(!out.is_zero(), "discrete l-step image is nonzero");
    check(stats(out).l == st.l - 1, "discrete l-step decreases l by one");
    return {g, out};
}

std::pair<std::vector<Generator>, ModuleVector> discrete_reduce_Eeps(const ModuleVector& v) {
    const OrderSpec& o = v.order();
    if (o.is_dense()) throw std::domain_error("discrete_reduce_Eeps requires a discrete order");
    if (sgn(v.charge().pair_h(o.epsilon())) == 0)
        throw CriterionError("discrete_reduce_Eeps requires eps(1)c1 + eps(2)c2 != 0");
    if (v.is_zero() || stats(v).l != 0)
        throw std::domain_error("discrete_reduce_Eeps requires l = 0");

    std::vector<const std::vector<GroupElement>*> ladders;
    for (const auto& [m, c] : v.terms()) ladders.push_back(&m.e);
    std::vector<GroupElement> top = *sequence_max(o, ladders);

    std::vector<Generator> word;
    ModuleVector out = v;
    for (auto it = top.rbegin(); it != top.rend(); ++it) {
        word.push_back(Generator::t(*it));
        out = act(word.back(), out);
    }
    check(!out.is_zero() && all_tpart(out), "eps-ladder collapse lands in U(L^t_-) v");
    return {word, out};
}

std::vector<Generator> discrete_finish(ModuleVector& v) {
    const OrderSpec& o = v.order();
    const CentralCharge& ch = v.charge();
    if (o.is_dense()) throw std::domain_error("discrete_finish requires a discrete order");
    GroupElement eps = o.epsilon();
    if (sgn(ch.pair_h(eps)) == 0)
        throw CriterionError("discrete_finish requires eps(1)c1 + eps(2)c2 != 0");
    if (v.is_zero() || !all_tpart(v))
        throw std::domain_error("discrete_finish requires a nonzero vector in U(L^t_-) v");

    std::vector<Generator> word;
    while (stats(v).l_prime > 0) {
        VectorStats st = stats(v);
        int lp = st.l_prime;
        GroupElement amax = *st.J.begin();
        for (auto a : st.J) amax = o.max(amax, a);
        long long n = 1;
        while (st.J.count(eps * n)) ++n;
        word.push_back(Generator::e(amax - eps * n));
        v = act(word.back(), v);
        check(!v.is_zero() && all_tpart(v), "l'-step stays nonzero in U(L^t_-) v");
        check(stats(v).l_prime == lp - 1, "l'-step decreases l' by one");
    }
    // now the t-exponents all lie on Z*eps: collapse the maximal ladder
    std::vector<const std::vector<GroupElement>*> ladders;
    for (const auto& [m, c] : v.terms()) ladders.push_back(&m.t);
    std::vector<GroupElement> top = *sequence_max(o, ladders);
    for (auto it = top.rbegin(); it != top.rend(); ++it) {
        word.push_back(Generator::e(*it));
        v = act(word.back(), v);
    }
    check(v.is_multiple_of_unit() && !v.is_zero(), "final ladder collapse ends in C v");
    return word;
}

Certificate reduce_to_highest(const ModuleVector& v) {
    if (v.is_zero()) throw std::domain_error("reduce_to_highest requires a nonzero vector");
    if (!irreducible(v.order(), v.charge()))
        throw CriterionError("irreducibility criterion fails for this order and charge");

    Certificate cert;
    cert.input_digest = vector_digest(v);
    ModuleVector w = v;
    if (v.order().is_dense()) {
        while (stats(w).r > 1) {
            auto [g, img] = dense_reduce_r(w);
            cert.word.push_back(g);
            w = img;
        }
        if (stats(w).r == 1) {
            auto [g, img] = dense_reduce_to_t(w);
            cert.word.push_back(g);
            w = img;
        }
        auto tail = dense_finish(w);
        cert.word.insert(cert.word.end(), tail.begin(), tail.end());
    } else {
        while (stats(w).l >= 1) {
            auto [g, img] = discrete_reduce_l(w);
            cert.word.push_back(g);
            w = img;
        }
        auto [ladder, img] = discrete_reduce_Eeps(w);
        cert.word.insert(cert.word.end(), ladder.begin(), ladder.end());
        w = img;
        auto tail = discrete_finish(w);
        cert.word.insert(cert.word.end(), tail.begin(), tail.end());
    }
    check(w.is_multiple_of_unit() && !w.is_zero(), "driver ends in a nonzero multiple of v");
    cert.scalar = w.unit_coefficient();
    return cert;
}

bool verify_certificate(const ModuleVector& v, const Certificate& cert) {
    if (vector_digest(v) != cert.input_digest)
        throw std::invalid_argument("certificate digest does not match the vector");
    if (sgn(cert.scalar) == 0) return false;
    ModuleVector w = v;
    for (const Generator& g : cert.word) w = act(g, w);
    ModuleVector expect = ModuleVector::unit(v.order(), v.charge());
    expect *= cert.scalar;
    return w == expect;
}

} // namespace hv
