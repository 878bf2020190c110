#include "hv/json_io.hpp"

#include <cstdio>
#include <stdexcept>

namespace hv {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument("malformed JSON: " + what);
}

long long to_int(const json& j, const std::string& what) {
    require(j.is_number_integer(), what + " must be an integer");
    return j.get<long long>();
}

Rat to_rat(const json& j, const std::string& what) {
    if (j.is_number_integer()) return rat(j.get<long long>());
    require(j.is_string(), what + " must be a rational string");
    return rat_from_string(j.get<std::string>());
}

} // namespace

json order_to_json(const OrderSpec& o) {
    json j;
    if (o.is_dense()) {
        j["kind"] = "dense";
        j["theta"] = {{"u", rat_to_string(o.theta_u())},
                      {"v", rat_to_string(o.theta_v())},
                      {"d", o.theta_d()}};
    } else {
        const auto& m = o.matrix();
        j["kind"] = "discrete";
        j["matrix"] = {{m[0], m[1]}, {m[2], m[3]}};
    }
    return j;
}

OrderSpec order_from_json(const json& j) {
    require(j.is_object() && j.contains("kind"), "order needs a kind");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "dense") {
        require(j.contains("theta"), "dense order needs theta");
        const json& t = j.at("theta");
        return OrderSpec::dense(to_rat(t.at("u"), "theta.u"), to_rat(t.at("v"), "theta.v"),
                                to_int(t.at("d"), "theta.d"));
    }
    if (kind == "discrete") {
        require(j.contains("matrix"), "discrete order needs matrix");
        const json& m = j.at("matrix");
        require(m.is_array() && m.size() == 2 && m[0].size() == 2 && m[1].size() == 2,
                "matrix must be 2x2");
        return OrderSpec::discrete({to_int(m[0][0], "matrix"), to_int(m[0][1], "matrix"),
                                    to_int(m[1][0], "matrix"), to_int(m[1][1], "matrix")});
    }
    throw std::invalid_argument("unknown order kind: " + kind);
}

json charge_to_json(const CentralCharge& c) {
    return json::array({rat_to_string(c.c1), rat_to_string(c.c2), rat_to_string(c.c3),
                        rat_to_string(c.c4)});
}

CentralCharge charge_from_json(const json& j) {
    require(j.is_array() && j.size() == 4, "charge must be a 4-array");
    return {to_rat(j[0], "c1"), to_rat(j[1], "c2"), to_rat(j[2], "c3"), to_rat(j[3], "c4")};
}

json group_to_json(GroupElement a) {
    return json::array({a.x, a.y});
}

GroupElement group_from_json(const json& j) {
    require(j.is_array() && j.size() == 2, "lattice point must be a 2-array");
    return {to_int(j[0], "coordinate"), to_int(j[1], "coordinate")};
}

json generator_to_json(const Generator& g) {
    json j;
    switch (g.kind) {
        case Generator::Kind::T:
            j["kind"] = "t";
            j["alpha"] = group_to_json(g.alpha);
            break;
        case Generator::Kind::E:
            j["kind"] = "E";
            j["alpha"] = group_to_json(g.alpha);
            break;
        case Generator::Kind::K:
            j["kind"] = "K";
            j["i"] = g.k;
            break;
    }
    return j;
}

Generator generator_from_json(const json& j) {
    require(j.is_object() && j.contains("kind"), "generator needs a kind");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "t") return Generator::t(group_from_json(j.at("alpha")));
    if (kind == "E") return Generator::e(group_from_json(j.at("alpha")));
    if (kind == "K") return Generator::central(static_cast<int>(to_int(j.at("i"), "i")));
    throw std::invalid_argument("unknown generator kind: " + kind);
}

json lie_to_json(const LieElement& x) {
    json j = json::array();
    for (const auto& [g, c] : x.terms())
        j.push_back({{"coeff", rat_to_string(c)}, {"gen", generator_to_json(g)}});
    return j;
}

LieElement lie_from_json(const json& j) {
    require(j.is_array(), "Lie element must be an array of terms");
    LieElement x;
    for (const json& t : j)
        x.add(generator_from_json(t.at("gen")), to_rat(t.at("coeff"), "coeff"));
    return x;
}

json vector_to_json(const ModuleVector& v) {
    json terms = json::array();
    for (const auto& [m, c] : v.terms()) {
        json t = json::array(), e = json::array();
        for (auto a : m.t) t.push_back(group_to_json(a));
        for (auto b : m.e) e.push_back(group_to_json(b));
        terms.push_back({{"coeff", rat_to_string(c)}, {"t", t}, {"e", e}});
    }
    return {{"order", order_to_json(v.order())},
            {"charge", charge_to_json(v.charge())},
            {"terms", terms}};
}

ModuleVector vector_from_json(const json& j) {
    require(j.is_object() && j.contains("order") && j.contains("charge") && j.contains("terms"),
            "vector needs order, charge and terms");
    OrderSpec order = order_from_json(j.at("order"));
    CentralCharge charge = charge_from_json(j.at("charge"));
    ModuleVector v(order, charge);
    for (const json& t : j.at("terms")) {
        PBWMonomial m;
        for (const json& a : t.at("t")) m.t.push_back(group_from_json(a));
        for (const json& b : t.at("e")) m.e.push_back(group_from_json(b));
        for (size_t i = 1; i < m.t.size(); ++i)
            require(order.leq(m.t[i - 1], m.t[i]), "t-exponents must be ascending");
        for (size_t i = 1; i < m.e.size(); ++i)
            require(order.leq(m.e[i - 1], m.e[i]), "e-exponents must be ascending");
        auto positive = [&](const std::vector<GroupElement>& xs) {
            for (auto x : xs)
                if (!order.positive(x)) return false;
            return true;
        };
        require(positive(m.t) && positive(m.e), "exponents must be positive");
        v.add(m, to_rat(t.at("coeff"), "coeff"));
    }
    return v;
}

json certificate_to_json(const Certificate& c) {
    json word = json::array();
    for (const Generator& g : c.word) word.push_back(generator_to_json(g));
    return {{"word", word}, {"scalar", rat_to_string(c.scalar)}, {"input_digest", c.input_digest}};
}

Certificate certificate_from_json(const json& j) {
    require(j.is_object() && j.contains("word") && j.contains("scalar") &&
                j.contains("input_digest"),
            "certificate needs word, scalar and input_digest");
    Certificate c;
    for (const json& g : j.at("word")) c.word.push_back(generator_from_json(g));
    c.scalar = to_rat(j.at("scalar"), "scalar");
    c.input_digest = j.at("input_digest").get<std::string>();
    return c;
}

namespace {

std::map<long long, Rat> sequence_from_json(const json& j, const std::string& what) {
    std::map<long long, Rat> out;
    if (j.is_null()) return out;
    require(j.is_object(), what + " must map indices to rationals");
    for (const auto& [k, val] : j.items()) {
        long long i = std::stoll(k);
        require(i >= 1, what + " indices must be positive");
        Rat r = to_rat(val, what);
        if (sgn(r) != 0) out[i] = r;
    }
    return out;
}

json sequence_to_json(const std::map<long long, Rat>& s) {
    json j = json::object();
    for (const auto& [i, r] : s) j[std::to_string(i)] = rat_to_string(r);
    return j;
}

} // namespace

json params_to_json(const WhittakerParams& p) {
    json j;
    j["variant"] = secondary_case_name(p.variant);
    j["window"] = p.window;
    if (p.variant == SecondaryCase::prop38_ab) {
        j["a"] = sequence_to_json(p.a);
        j["b"] = sequence_to_json(p.b);
    } else if (p.variant == SecondaryCase::prop38_xi) {
        j["xi"] = sequence_to_json(p.xi);
    }
    return j;
}

WhittakerParams params_from_json(const json& j) {
    require(j.is_object() && j.contains("variant"), "params need a variant");
    WhittakerParams p;
    p.variant = secondary_case_from_name(j.at("variant").get<std::string>());
    if (j.contains("window")) p.window = to_int(j.at("window"), "window");
    if (j.contains("a")) p.a = sequence_from_json(j.at("a"), "a");
    if (j.contains("b")) p.b = sequence_from_json(j.at("b"), "b");
    if (j.contains("xi")) p.xi = sequence_from_json(j.at("xi"), "xi");
    return p;
}

std::string canonical_dump(const json& j) {
    return j.dump();
}

std::string vector_digest(const ModuleVector& v) {
    std::string s = canonical_dump(vector_to_json(v));
    // FNV-1a, 64-bit
    unsigned long long h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", h);
    return buf;
}

} // namespace hv
