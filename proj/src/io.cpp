#include "cfh/io.hpp"

#include <fstream>
#include <sstream>

#include "cfh/errors.hpp"

namespace cfh {

namespace {

ojson curve_to_json(Curve const& c) {
    ojson j;
    j["vertices"] = ojson::array();
    for (auto const& v : c.vertices)
        j["vertices"].push_back(ojson::array({rat_str(v.x), rat_str(v.y)}));
    j["deck"] = ojson::array({c.deck.u, c.deck.v});
    return j;
}

Curve curve_from_json(ojson const& j, std::string const& which) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("deck"))
        throw ParseError(which + ": expected {vertices, deck}");
    Curve c;
    for (auto const& v : j.at("vertices")) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_string() || !v[1].is_string())
            throw ParseError(which + ": vertex must be a pair of rational strings");
        c.vertices.push_back({parse_rat(v[0].get<std::string>()),
                              parse_rat(v[1].get<std::string>())});
    }
    auto const& d = j.at("deck");
    if (!d.is_array() || d.size() != 2 || !d[0].is_number_integer() || !d[1].is_number_integer())
        throw ParseError(which + ": deck must be a pair of integers");
    c.deck = {d[0].get<long long>(), d[1].get<long long>()};
    return c;
}

ojson parse_text(std::string const& text) {
    ojson j = ojson::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON");
    return j;
}

std::string read_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

ojson pair_to_json(CurvePair const& pair) {
    ojson j;
    j["surface"] = surface_name(pair.surface);
    j["alpha"] = curve_to_json(pair.alpha);
    j["beta"] = curve_to_json(pair.beta);
    return j;
}

CurvePair pair_from_json(ojson const& j) {
    if (!j.is_object() || !j.contains("surface") || !j.contains("alpha") || !j.contains("beta"))
        throw ParseError("expected {surface, alpha, beta}");
    if (!j.at("surface").is_string()) throw ParseError("surface must be a string");
    auto sk = surface_from_name(j.at("surface").get<std::string>());
    if (!sk) throw Unsupported("unknown surface " + j.at("surface").get<std::string>());
    CurvePair pair;
    pair.surface = *sk;
    pair.alpha = curve_from_json(j.at("alpha"), "alpha");
    pair.beta = curve_from_json(j.at("beta"), "beta");
    return pair;
}

ojson complex_to_json(ConnectionComplex const& cc) {
    ojson j;
    j["generators"] = cc.names;
    j["nu"] = ojson::array();
    for (int q = 0; q < cc.n(); q++)
        for (int p = 0; p < cc.n(); p++)
            if (cc.nu[q][p] != 0)
                j["nu"].push_back(ojson::array({q, p, cc.nu[q][p].convert_to<long long>()}));
    if (cc.mu) j["mu"] = *cc.mu;
    if (cc.order) {
        j["order"] = ojson::array();
        for (int p = 0; p < cc.n(); p++)
            for (int q = 0; q < cc.n(); q++)
                if (p != q && cc.leq(p, q)) j["order"].push_back(ojson::array({p, q}));
    }
    j["coeff"] = cc.f2 ? "f2" : "z";
    return j;
}

ConnectionComplex complex_from_json(ojson const& j) {
    if (!j.is_object() || !j.contains("generators") || !j.contains("nu"))
        throw ParseError("expected {generators, nu}");
    ConnectionComplex cc;
    for (auto const& g : j.at("generators")) {
        if (!g.is_string()) throw ParseError("generator names must be strings");
        cc.names.push_back(g.get<std::string>());
    }
    int n = cc.n();
    cc.nu.assign(n, std::vector<Int>(n, 0));
    for (auto const& e : j.at("nu")) {
        if (!e.is_array() || e.size() != 3) throw ParseError("nu entry must be [q,p,value]");
        int q = e[0].get<int>(), p = e[1].get<int>();
        if (q < 0 || p < 0 || q >= n || p >= n) throw ParseError("nu index out of range");
        cc.nu[q][p] = Int(e[2].get<long long>());
    }
    if (j.contains("mu")) {
        std::vector<long long> mu = j.at("mu").get<std::vector<long long>>();
        if ((int)mu.size() != n) throw ParseError("mu length mismatch");
        cc.mu = mu;
    }
    if (j.contains("order")) {
        std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
        for (int i = 0; i < n; i++) le[i][i] = true;
        for (auto const& e : j.at("order")) {
            if (!e.is_array() || e.size() != 2) throw ParseError("order entry must be [p,q]");
            int p = e[0].get<int>(), q = e[1].get<int>();
            if (q < 0 || p < 0 || q >= n || p >= n) throw ParseError("order index out of range");
            le[p][q] = true;
        }
        for (int t = 0; t < n; t++)
            for (int i = 0; i < n; i++)
                for (int k = 0; k < n; k++)
                    if (le[i][t] && le[t][k]) le[i][k] = true;
        cc.order = std::move(le);
    }
    if (j.contains("coeff")) {
        auto c = j.at("coeff").get<std::string>();
        if (c != "z" && c != "f2") throw ParseError("coeff must be z or f2");
        cc.f2 = c == "f2";
    }
    return cc;
}

CurvePair load_pair(std::string const& path) { return pair_from_json(parse_text(read_file(path))); }

ConnectionComplex load_complex(std::string const& path) {
    return complex_from_json(parse_text(read_file(path)));
}

void save_text(std::string const& path, std::string const& text) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << text;
    if (!out) throw IoError("write failed for " + path);
}

} // namespace cfh
