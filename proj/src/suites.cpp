#include "hv/suites.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hv {

Generator random_generator(Rng& rng, long long coord_bound, bool allow_central) {
    if (allow_central && rng.below(8) == 0)
        return Generator::central(static_cast<int>(rng.range(1, 4)));
    GroupElement a{0, 0};
    while (a.is_zero()) a = {rng.range(-coord_bound, coord_bound), rng.range(-coord_bound, coord_bound)};
    return rng.below(2) == 0 ? Generator::t(a) : Generator::e(a);
}

PBWMonomial random_monomial(Rng& rng, const OrderSpec& order, long long window, int maxlen) {
    std::vector<GroupElement> pool = positive_window(order, window);
    PBWMonomial m;
    int len = static_cast<int>(rng.below(static_cast<std::uint64_t>(maxlen) + 1));
    for (int i = 0; i < len; ++i) {
        GroupElement g = pool[rng.below(pool.size())];
        if (rng.below(2) == 0)
            m.t.push_back(g);
        else
            m.e.push_back(g);
    }
    OrderLess less{&order};
    std::sort(m.t.begin(), m.t.end(), less);
    std::sort(m.e.begin(), m.e.end(), less);
    return m;
}

ModuleVector normal_order_randomized(const std::vector<Generator>& word,
                                     const CentralCharge& charge, const OrderSpec& order,
                                     Rng& rng) {
    using Word = std::vector<Generator>;
    for (const Generator& g : word)
        if (g.kind == Generator::Kind::K || order.positive(g.alpha))
            throw std::domain_error("randomized rewriter handles negative words only");

    // a pair (left, right) is out of normal order when E precedes t, or
    // same-kind exponents decrease left to right
    auto violation = [&](const Generator& a, const Generator& b) {
        if (a.kind == Generator::Kind::E && b.kind == Generator::Kind::T) return true;
        if (a.kind != b.kind) return false;
        return order.less(-b.alpha, -a.alpha);
    };

    std::vector<std::pair<Rat, Word>> work{{Rat(1), word}};
    ModuleVector out(order, charge);
    while (!work.empty()) {
        size_t pick = rng.below(work.size());
        auto [coeff, w] = work[pick];
        work.erase(work.begin() + static_cast<long>(pick));

        std::vector<size_t> spots;
        for (size_t i = 0; i + 1 < w.size(); ++i)
            if (violation(w[i], w[i + 1])) spots.push_back(i);
        if (spots.empty()) {
            PBWMonomial m;
            for (const Generator& g : w)
                (g.kind == Generator::Kind::T ? m.t : m.e).push_back(-g.alpha);
            out.add(m, coeff);
            continue;
        }
        size_t i = spots[rng.below(spots.size())];
        LieElement br = bracket(w[i], w[i + 1]);
        Word swapped = w;
        std::swap(swapped[i], swapped[i + 1]);
        work.push_back({coeff, std::move(swapped)});
        for (const auto& [g, c] : br.terms()) {
            Word merged;
            merged.insert(merged.end(), w.begin(), w.begin() + static_cast<long>(i));
            merged.push_back(g);
            merged.insert(merged.end(), w.begin() + static_cast<long>(i) + 2, w.end());
            work.push_back({coeff * c, std::move(merged)});
        }
    }
    return out;
}

namespace {

using Runner = std::function<std::string(Rng&, const SuiteConfig&)>; // empty = pass

std::string check_eq(bool ok, const std::string& detail) {
    return ok ? std::string{} : detail;
}

std::string run_jacobi(Rng& rng, const SuiteConfig&) {
    LieElement x(random_generator(rng, 10, true));
    LieElement y(random_generator(rng, 10, true));
    LieElement z(random_generator(rng, 10, true));
    LieElement sum = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) +
                     bracket(z, bracket(x, y));
    return check_eq(sum.is_zero(), "jacobi sum nonzero for " + x.str() + ", " + y.str() + ", " + z.str());
}

std::string rep_case(Rng& rng, const SuiteConfig& cfg, bool check_grading) {
    Generator x = random_generator(rng, cfg.window, true);
    Generator y = random_generator(rng, cfg.window, true);
    ModuleVector v(cfg.order, cfg.charge);
    PBWMonomial m = random_monomial(rng, cfg.order, cfg.window, std::min(cfg.maxlen, 4));
    v.add(m, rat(rng.range(1, 5), rng.range(1, 3)));

    ModuleVector yx = act(y, v);
    ModuleVector xy = act(x, yx);
    ModuleVector xv = act(x, v);
    ModuleVector yxv = act(y, xv);
    ModuleVector lhs = xy - yxv;
    ModuleVector rhs = act_elem(bracket(x, y), v);
    if (!(lhs == rhs)) return "representation identity fails for " + x.str() + ", " + y.str();
    if (check_grading) {
        GroupElement d0 = m.degree();
        GroupElement dge;
        if (!yx.homogeneous(&dge) || (!yx.is_zero() && !(dge == d0 + y.degree())))
            return "inner action not homogeneous of the predicted degree";
        GroupElement dfull = d0 + x.degree() + y.degree();
        if (!xy.homogeneous(&dge) || (!xy.is_zero() && !(dge == dfull)))
            return "outer action not homogeneous of the predicted degree";
        if (!rhs.homogeneous(&dge) || (!rhs.is_zero() && !(dge == dfull)))
            return "bracket action not homogeneous of the predicted degree";
    }
    return {};
}

std::string run_confluence(Rng& rng, const SuiteConfig& cfg) {
    std::vector<GroupElement> pool = positive_window(cfg.order, std::min<long long>(cfg.window, 3));
    std::vector<Generator> word;
    int len = static_cast<int>(rng.range(1, 5));
    for (int i = 0; i < len; ++i) {
        GroupElement g = pool[rng.below(pool.size())];
        word.push_back(rng.below(2) == 0 ? Generator::t(-g) : Generator::e(-g));
    }
    ModuleVector base = normal_order(word, cfg.charge, cfg.order);
    ModuleVector alt = normal_order_randomized(word, cfg.charge, cfg.order, rng);
    return check_eq(base == alt, "rewriting schedules disagree on a negative word");
}

std::string run_mu(Rng& rng, const SuiteConfig& cfg) {
    GroupElement a{0, 0};
    while (!cfg.order.positive(a))
        a = {rng.range(-cfg.window, cfg.window), rng.range(-cfg.window, cfg.window)};
    GroupElement fast = mu(cfg.order, a);
    // brute force: the order-minimum of {a/m : m | gcd}
    long long g = std::gcd(std::llabs(a.x), std::llabs(a.y));
    GroupElement best = a;
    for (long long m2 = 1; m2 <= g; ++m2)
        if (g % m2 == 0) {
            GroupElement cand{a.x / m2, a.y / m2};
            if (cfg.order.less(cand, best)) best = cand;
        }
    if (!(fast == best)) return "mu mismatch at " + a.str();
    if (!cfg.order.positive(fast)) return "mu not positive at " + a.str();
    return {};
}

std::string run_orders(Rng& rng, const SuiteConfig& cfg) {
    const OrderSpec& o = cfg.order;
    auto rnd = [&] { return GroupElement{rng.range(-10, 10), rng.range(-10, 10)}; };
    GroupElement a = rnd(), b = rnd(), c = rnd();
    if (o.compare(a, b) != flip(o.compare(b, a))) return "antisymmetry fails";
    if ((o.compare(a, b) == Ordering::Equal) != (a == b)) return "equality is not structural";
    if (o.compare(a, b) != o.compare(a + c, b + c)) return "translation invariance fails";
    if (o.is_dense()) {
        GroupElement g{0, 0};
        while (!o.positive(g)) g = rnd();
        GroupElement below = choose_small(o, g, {});
        if (!(o.positive(below) && o.less(below, g))) return "no positive element below " + g.str();
    } else {
        GroupElement eps = o.epsilon();
        GroupElement g{0, 0};
        while (!o.positive(g)) g = rnd();
        if (o.less(g, eps)) return "epsilon is not minimal against " + g.str();
        // Lemma 2.3(2)-style check
        GroupElement alpha = rnd(), beta = rnd();
        if (o.leq({0, 0}, alpha) && o.less(alpha, beta) && !o.collinear_eps(beta - alpha)) {
            for (long long n = 1; n <= 10; ++n)
                if (!o.less(alpha + eps * n, beta))
                    return "beta does not dominate alpha + n*eps at n=" + std::to_string(n);
        }
    }
    return {};
}

std::string run_prop37(Rng& rng, const SuiteConfig& cfg) {
    OrderSpec o = cfg.order.is_dense() ? cfg.order : OrderSpec::sqrt2();
    bool variant2 = rng.below(2) == 1;
    CentralCharge ch = variant2 ? CentralCharge{0, 0, 1, 2} : CentralCharge{0, 0, 0, 0};
    SecondaryCase variant = variant2 ? SecondaryCase::prop37_2 : SecondaryCase::prop37_1;

    ModuleVector v(o, ch);
    int nterms = static_cast<int>(rng.range(1, 3));
    for (int i = 0; i < nterms; ++i) {
        PBWMonomial m = random_monomial(rng, o, 3, 3);
        if (m.empty()) m.t.push_back(positive_window(o, 1).front());
        if (variant2 && m.t.empty()) {
            m.t.push_back(positive_window(o, 1).front());
            std::sort(m.t.begin(), m.t.end(), OrderLess{&o});
        }
        v.add(m, rat(rng.range(1, 4)));
    }
    if (v.is_zero() || !prop37_member(v, variant)) return "constructed vector is not a member";
    Generator g = random_generator(rng, 3, true);
    ModuleVector w = act(g, v);
    if (!prop37_member(w, variant))
        return "membership not preserved under " + g.str();
    return {};
}

std::string run_prop38(Rng& rng, const SuiteConfig& cfg) {
    OrderSpec o = cfg.order.is_dense() ? OrderSpec::lex() : cfg.order;
    bool xi_variant = rng.below(2) == 1;
    GroupElement eps = o.epsilon();
    GroupElement epsp = o.epsilon_prime();
    // kill eps(1)c1+eps(2)c2 (and c3/c4 per variant) while keeping the
    // complementary direction alive
    CentralCharge ch = xi_variant ? CentralCharge{rat(-eps.y), rat(eps.x), 1, 1}
                                  : CentralCharge{rat(-eps.y), rat(eps.x), rat(-eps.y), rat(eps.x)};
    if (sgn(ch.pair_h(eps)) != 0) return "internal: charge design";
    WhittakerParams p;
    p.variant = xi_variant ? SecondaryCase::prop38_xi : SecondaryCase::prop38_ab;
    for (long long i = 1; i <= 2; ++i) {
        p.a[i] = rat(rng.range(-2, 2));
        p.b[i] = rat(rng.range(-2, 2));
        p.xi[i] = rat(rng.range(-2, 2));
    }

    // an h = 0 member by construction: p(vars) - p(a,b) on one monomial
    ModuleVector v(o, ch);
    PBWMonomial m;
    Rat value(1);
    int len = static_cast<int>(rng.range(1, 2));
    for (int i = 0; i < len; ++i) {
        long long k = rng.range(1, 2);
        if (!xi_variant && rng.below(2) == 0) {
            m.e.push_back(eps * k);
            value *= p.b_at(k);
        } else {
            m.t.push_back(eps * k);
            value *= xi_variant ? p.xi_at(k) : p.a_at(k);
        }
    }
    OrderLess less{&o};
    std::sort(m.t.begin(), m.t.end(), less);
    std::sort(m.e.begin(), m.e.end(), less);
    v.add(m, 1);
    v.add(PBWMonomial{}, -value);
    if (v.is_zero()) return {}; // degenerate draw; nothing to test
    if (!prop38_member(v, p, 0, p.window)) return "constructed h=0 vector is not a member";

    // closure under the eps-line subalgebra
    long long k = rng.range(1, 2);
    Generator g = rng.below(2) == 0 ? Generator::t(eps * (rng.below(2) ? k : -k))
                                    : Generator::e(eps * (rng.below(2) ? k : -k));
    ModuleVector w = act(g, v);
    if (!w.is_zero() && !prop38_member(w, p, 0, p.window))
        return "h=0 membership not preserved under " + g.str();

    // grading up: X(-alpha) with positive eps'-coordinate
    GroupElement alpha = epsp + eps * rng.range(0, 1);
    Generator up = rng.below(2) == 0 ? Generator::t(-alpha) : Generator::e(-alpha);
    ModuleVector wu = act(up, v);
    if (!wu.is_zero() && !prop38_member(wu, p, 1, p.window))
        return "membership not preserved under " + up.str();
    return {};
}

} // namespace

std::vector<std::string> suite_names() {
    return {"jacobi", "rep", "grading", "confluence", "mu", "orders", "prop37", "prop38"};
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg) {
    Runner runner;
    if (name == "jacobi")
        runner = [](Rng& r, const SuiteConfig& c) { return run_jacobi(r, c); };
    else if (name == "rep")
        runner = [](Rng& r, const SuiteConfig& c) { return rep_case(r, c, false); };
    else if (name == "grading")
        runner = [](Rng& r, const SuiteConfig& c) { return rep_case(r, c, true); };
    else if (name == "confluence")
        runner = run_confluence;
    else if (name == "mu")
        runner = run_mu;
    else if (name == "orders")
        runner = run_orders;
    else if (name == "prop37")
        runner = run_prop37;
    else if (name == "prop38")
        runner = run_prop38;
    else
        throw std::invalid_argument("unknown suite: " + name);

    SuiteReport report{name, cfg.trials, cfg.seed, {}};
    for (long long i = 0; i < cfg.trials; ++i) {
        std::uint64_t sub = cfg.seed ^ static_cast<std::uint64_t>(i);
        Rng rng(sub);
        std::string detail = runner(rng, cfg);
        if (!detail.empty()) report.failures.push_back({i, sub, detail});
    }
    return report;
}

} // namespace hv
