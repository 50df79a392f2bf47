#include "wvo/io.hpp"

#include <algorithm>
#include <sstream>

namespace wvo {

std::string monomial_string(const PartFn& rho) {
    // collect (n, label, multiplicity), order n descending then label
    std::vector<std::tuple<int, int, int>> factors;
    for (int x = 0; x < rho.labels(); ++x) {
        const auto& parts = rho.at(x);
        for (size_t i = 0; i < parts.size();) {
            size_t j = i;
            while (j < parts.size() && parts[j] == parts[i]) ++j;
            factors.emplace_back(parts[i], x, static_cast<int>(j - i));
            i = j;
        }
    }
    std::sort(factors.begin(), factors.end(), [](const auto& a, const auto& b) {
        if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) > std::get<0>(b);
        return std::get<1>(a) < std::get<1>(b);
    });
    if (factors.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [n, x, mult] : factors) {
        if (!first) os << " ";
        os << "a[-" << n << "](g" << x << ")^" << mult;
        first = false;
    }
    return os.str();
}

PartFn parse_monomial(const std::string& s, int labels) {
    PartFn rho(labels);
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) {
        if (tok == "1") continue;
        // a[-N](gX)^M
        if (tok.rfind("a[-", 0) != 0) throw std::invalid_argument("parse_monomial: bad token " + tok);
        size_t close = tok.find(']');
        int n = std::stoi(tok.substr(3, close - 3));
        size_t gp = tok.find("(g", close);
        size_t gend = tok.find(')', gp);
        int x = std::stoi(tok.substr(gp + 2, gend - gp - 2));
        int mult = 1;
        size_t caret = tok.find('^', gend);
        if (caret != std::string::npos) mult = std::stoi(tok.substr(caret + 1));
        if (x < 0 || x >= labels) throw std::invalid_argument("parse_monomial: label out of range");
        for (int k = 0; k < mult; ++k) rho = with_part(rho, x, n);
    }
    return rho;
}

json sym_json(const SymVec& v) {
    json terms = json::array();
    for (const auto& [rho, c] : v.terms())
        terms.push_back({{"monomial", monomial_string(rho)}, {"coeff", c.to_string()}});
    return json{{"terms", terms}};
}

json fock_json(const FockVec& v) {
    json terms = json::array();
    for (const auto& [key, c] : v.terms())
        terms.push_back({{"monomial", monomial_string(key.rho)},
                         {"lattice", key.alpha.to_string()},
                         {"coeff", c.to_string()}});
    return json{{"terms", terms}};
}

json wreath_fn_json(const WreathClassFn& f) {
    json obj = json::object();
    for (const auto& [rho, c] : f.terms()) obj[rho.to_string('c')] = c.to_string();
    return json{{"group", f.group()->descriptor}, {"n", f.level()}, {"values", obj}};
}

json group_json(const Group& g) {
    json classes = json::array();
    for (int c = 0; c < g->nc; ++c)
        classes.push_back({{"size", g->class_size[c]},
                           {"element_order", g->class_elt_order[c]},
                           {"centralizer", g->zeta[c]},
                           {"inverse_class", g->inv_class[c]}});
    json chi = json::array();
    for (int i = 0; i < g->nc; ++i) {
        json row = json::array();
        for (int c = 0; c < g->nc; ++c) row.push_back(g->chi[i][c].to_string());
        chi.push_back(row);
    }
    json out{{"descriptor", g->descriptor},
             {"order", g->elements->order()},
             {"exponent", g->exponent},
             {"classes", classes},
             {"char_table", chi},
             {"degrees", g->degrees},
             {"irrep_order", "degree ascending, trivial first, ties by value strings"}};
    if (!g->pi.empty()) {
        json pi = json::array();
        for (const auto& v : g->pi) pi.push_back(v.to_string());
        out["natural_2dim_character"] = pi;
    }
    return out;
}

json xi_json(const XiForm& xf) {
    json xi = json::array();
    for (int c = 0; c < xf.group()->nc; ++c) xi.push_back(xf.xi().at(c).to_string());
    json a = json::array();
    for (int i = 0; i < xf.group()->nc; ++i) {
        json row = json::array();
        for (int j = 0; j < xf.group()->nc; ++j) {
            const Cyclo& v = xf.a(i, j);
            if (v.is_integer())
                row.push_back(v.to_long());
            else
                row.push_back(v.to_string());
        }
        a.push_back(row);
    }
    return json{{"xi", xi}, {"A", a}};
}

json char_table_json(const WreathCharTable& t, const std::string& route) {
    json rows = json::array(), cols = json::array(), zs = json::array(), values = json::array();
    for (const auto& r : t.rows) rows.push_back(r.to_string('g'));
    for (const auto& c : t.cols) cols.push_back(c.to_string('c'));
    for (const auto& z : t.col_centralizer) zs.push_back(z.to_string());
    for (const auto& row : t.values) {
        json jr = json::array();
        for (const auto& v : row) jr.push_back(v.to_string());
        values.push_back(jr);
    }
    return json{{"group", t.g->descriptor},
                {"n", t.n},
                {"route", route},
                {"row_labeling",
                 "matrix coefficients <s_{lambda,-omega}, a'_{-mu}>; rows are duals when a class "
                 "is not self-inverse"},
                {"rows", rows},
                {"cols", cols},
                {"Z", zs},
                {"values", values}};
}

std::string char_table_csv(const WreathCharTable& t) {
    std::ostringstream os;
    os << "lambda";
    for (const auto& c : t.cols) os << "," << c.to_string('c');
    os << "\n";
    os << "Z";
    for (const auto& z : t.col_centralizer) os << "," << z.to_string();
    os << "\n";
    for (size_t i = 0; i < t.rows.size(); ++i) {
        os << t.rows[i].to_string('g');
        for (const auto& v : t.values[i]) os << "," << v.to_string();
        os << "\n";
    }
    return os.str();
}

namespace {

// Short human-readable form: plain rational when possible.
std::string cyclo_pretty(const Cyclo& v) {
    if (v.is_rational()) return v.to_rational().to_string();
    return v.to_string();
}

}  // namespace

std::string char_table_pretty(const WreathCharTable& t) {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> head{"lambda \\ type"};
    for (const auto& c : t.cols) head.push_back(c.to_string('c').empty() ? "()" : c.to_string('c'));
    cells.push_back(head);
    std::vector<std::string> zrow{"Z_mu"};
    for (const auto& z : t.col_centralizer) zrow.push_back(z.to_string());
    cells.push_back(zrow);
    for (size_t i = 0; i < t.rows.size(); ++i) {
        std::vector<std::string> row;
        row.push_back(t.rows[i].to_string('g').empty() ? "()" : t.rows[i].to_string('g'));
        for (const auto& v : t.values[i]) row.push_back(cyclo_pretty(v));
        cells.push_back(row);
    }
    std::vector<size_t> width(cells[0].size(), 0);
    for (const auto& row : cells)
        for (size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
    std::ostringstream os;
    for (const auto& row : cells) {
        for (size_t j = 0; j < row.size(); ++j) {
            os << row[j] << std::string(width[j] - row[j].size() + 2, ' ');
        }
        os << "\n";
    }
    return os.str();
}

json mckay_report_json(const AffineData& ad, long root_count, const RelationReport* relations) {
    json cartan = json::array();
    for (const auto& row : ad.cartan) cartan.push_back(row);
    json edges = json::array();
    for (const auto& [i, j, m] : ad.edges) edges.push_back({{"i", i}, {"j", j}, {"mult", m}});
    json out{{"group", ad.g->descriptor},
             {"label", ad.ade_label},
             {"cartan", cartan},
             {"delta", ad.delta.c},
             {"edges", edges},
             {"eigencheck", ad.eigen_ok},
             {"radical_ok", ad.radical_ok},
             {"root_count", root_count},
             {"expected_root_count", expected_root_count(ad.ade_label)}};
    if (relations) {
        out["relation_cases"] = relations->cases;
        out["relation_failures"] = relations->mismatches;
    }
    return out;
}

LatticeVec parse_lattice(const std::string& s) {
    if (s.rfind("e[", 0) != 0 || s.back() != ']')
        throw std::invalid_argument("parse_lattice: expected e[..]: " + s);
    LatticeVec v;
    std::string body = s.substr(2, s.size() - 3);
    std::istringstream is(body);
    std::string item;
    while (std::getline(is, item, ',')) v.c.push_back(std::stol(item));
    return v;
}

Half parse_half(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Half::of_int(std::stol(s));
    long num = std::stol(s.substr(0, slash));
    long den = std::stol(s.substr(slash + 1));
    if (den != 2) throw std::invalid_argument("parse_half: denominator must be 2");
    return Half::halves(num);
}

}  // namespace wvo
