#include "qcusp/json_io.hpp"

#include <stdexcept>

namespace qcusp::jsonio {

namespace {

using exact::LaurentPoly;
using exact::RationalFunction;
using exact::Scalar;
using rewrite::NCPoly;

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

mpq_class rational_from_json(const json& j, const char* what) {
    std::string s;
    if (j.is_string())
        s = j.get<std::string>();
    else if (j.is_number_integer())
        s = std::to_string(j.get<long long>());
    else
        bad(std::string(what) + " wants a rational string");
    mpq_class q;
    try {
        q = mpq_class(s);
    } catch (const std::invalid_argument&) {
        bad(std::string(what) + ": unreadable rational '" + s + "'");
    }
    if (q.get_den() == 0) bad(std::string(what) + ": zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

long exponent_from_key(const std::string& key) {
    try {
        size_t used = 0;
        long e = std::stol(key, &used);
        if (used != key.size()) bad("exponent key '" + key + "'");
        return e;
    } catch (const std::invalid_argument&) {
        bad("exponent key '" + key + "'");
    } catch (const std::out_of_range&) {
        bad("exponent key '" + key + "' out of range");
    }
}

template <class R, class FromEntry>
mat::RingMatrix<R> matrix_from_json_impl(const json& j, const R& fill, FromEntry from_entry) {
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        bad("matrix wants an object with n and entries");
    if (!j["n"].is_number_integer()) bad("matrix size n must be an integer");
    int n = j["n"].get<int>();
    if (n < 1 || n > 16) bad("matrix size " + std::to_string(n) + " outside [1, 16]");
    const json& rows = j["entries"];
    if (!rows.is_array() || rows.size() != static_cast<size_t>(n)) bad("entries must hold n rows");
    mat::RingMatrix<R> m(n, fill);
    for (int i = 0; i < n; ++i) {
        const json& row = rows[static_cast<size_t>(i)];
        if (!row.is_array() || row.size() != static_cast<size_t>(n))
            bad("row " + std::to_string(i) + " must hold n entries");
        for (int jj = 0; jj < n; ++jj) m.at(i, jj) = from_entry(row[static_cast<size_t>(jj)]);
    }
    return m;
}

std::string carrier_of(const json& j) {
    if (!j.is_object() || !j.contains("carrier") || !j["carrier"].is_string())
        bad("matrix wants a carrier field");
    return j["carrier"].get<std::string>();
}

}  // namespace

json to_json(const Scalar& s) {
    return json{{"re", s.re().get_str()}, {"im", s.im().get_str()}};
}

Scalar scalar_from_json(const json& j) {
    if (j.is_string() || j.is_number_integer())
        return Scalar(rational_from_json(j, "scalar"));
    if (!j.is_object()) bad("scalar wants an object with re and im");
    mpq_class re = j.contains("re") ? rational_from_json(j["re"], "scalar re") : mpq_class(0);
    mpq_class im = j.contains("im") ? rational_from_json(j["im"], "scalar im") : mpq_class(0);
    return Scalar(std::move(re), std::move(im));
}

json to_json(const LaurentPoly& p) {
    json j = json::object();
    for (const auto& [e, c] : p.coeffs()) j[std::to_string(e)] = to_json(c);
    return j;
}

LaurentPoly laurent_from_json(const json& j) {
    if (!j.is_object()) bad("laurent polynomial wants an object keyed by exponents");
    LaurentPoly p;
    for (const auto& [key, val] : j.items()) p.add_term(exponent_from_key(key), scalar_from_json(val));
    return p;
}

json to_json(const RationalFunction& f) {
    return json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

RationalFunction ratfunc_from_json(const json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        bad("rational function wants num and den");
    LaurentPoly den = laurent_from_json(j["den"]);
    if (den.is_zero()) bad("rational function with zero denominator");
    return RationalFunction(laurent_from_json(j["num"]), den);
}

json to_json(const mat::RingMatrix<RationalFunction>& m) {
    json rows = json::array();
    for (int i = 0; i < m.n(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.n(); ++j) row.push_back(to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"n", m.n()}, {"carrier", "ratfunc"}, {"entries", std::move(rows)}};
}

json to_json(const mat::RingMatrix<LaurentPoly>& m) {
    json rows = json::array();
    for (int i = 0; i < m.n(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.n(); ++j) row.push_back(to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"n", m.n()}, {"carrier", "laurent"}, {"entries", std::move(rows)}};
}

json to_json(const mat::RingMatrix<NCPoly>& m, const rewrite::Alphabet& alph) {
    json rows = json::array();
    for (int i = 0; i < m.n(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.n(); ++j) {
            json entry = json::object();
            for (const auto& [w, c] : m.at(i, j).terms()) entry[alph.print(w)] = to_json(c);
            row.push_back(std::move(entry));
        }
        rows.push_back(std::move(row));
    }
    return json{{"n", m.n()}, {"carrier", "freealg"}, {"entries", std::move(rows)}};
}

mat::RingMatrix<RationalFunction> ratfunc_matrix_from_json(const json& j) {
    std::string carrier = carrier_of(j);
    if (carrier == "ratfunc")
        return matrix_from_json_impl<RationalFunction>(
            j, RationalFunction(), [](const json& e) { return ratfunc_from_json(e); });
    if (carrier == "laurent")
        return matrix_from_json_impl<RationalFunction>(j, RationalFunction(), [](const json& e) {
            return RationalFunction(laurent_from_json(e));
        });
    bad("carrier '" + carrier + "' does not embed into rational functions");
}

mat::RingMatrix<NCPoly> freealg_matrix_from_json(const json& j, const rewrite::Alphabet& alph) {
    if (carrier_of(j) != "freealg") bad("carrier must be freealg");
    return matrix_from_json_impl<NCPoly>(j, NCPoly(), [&](const json& e) {
        if (!e.is_object()) bad("free-algebra entry wants an object keyed by words");
        NCPoly p;
        for (const auto& [key, val] : e.items()) {
            rewrite::Word w = key == "1" ? rewrite::Word() : alph.parse_word(key);
            p.add_term(w, scalar_from_json(val));
        }
        return p;
    });
}

classify::TriangularT classify_input_from_json(const json& j) {
    auto m = ratfunc_matrix_from_json(j);
    classify::TriangularT t = classify::triangular_from_matrix(m);
    if (j.contains("params")) {
        const json& params = j["params"];
        if (!params.is_object()) bad("params wants an object");
        if (t.n > 3) bad("params supported only for n <= 3");
        // declared alpha, beta (, gamma) must reproduce the diagonal as
        // alpha t, alpha beta t (, alpha beta gamma t)
        static const char* names[] = {"alpha", "beta", "gamma"};
        std::vector<Scalar> declared;
        for (int k = 0; k < t.n; ++k) {
            if (!params.contains(names[k])) bad(std::string("params wants ") + names[k]);
            declared.push_back(scalar_from_json(params[names[k]]));
        }
        Scalar running(1);
        for (int i = 0; i < t.n; ++i) {
            running = running * declared[static_cast<size_t>(i)];
            auto mono = t.diagonal[static_cast<size_t>(i)].as_laurent();
            auto lead = mono ? mono->as_monomial() : std::nullopt;
            if (!lead || lead->first != 1) bad("diagonal entry is not a multiple of t");
            if (lead->second != running)
                bad("params disagree with diagonal entry " + std::to_string(i + 1));
        }
    }
    return t;
}

json to_json(const classify::Decision2& d) {
    return json{{"n", 2}, {"accept", d.accept}, {"case", d.case_tag}, {"reason", d.reason}};
}

json to_json(const classify::Decision3& d, bool witnesses) {
    json j{{"n", 3},
           {"accept", d.accept},
           {"accept_x", d.accept_x},
           {"accept_y", d.accept_y},
           {"accept_corner", d.accept_corner},
           {"case_x", d.case_x},
           {"case_y", d.case_y},
           {"regular", d.regular},
           {"reason", d.reason}};
    if (witnesses) {
        if (d.witness_a) j["witness_a"] = to_json(*d.witness_a);
        if (d.witness_b) j["witness_b"] = to_json(*d.witness_b);
        if (d.witness_c) j["witness_c"] = to_json(*d.witness_c);
    }
    return j;
}

json to_json(const report::Bounds& b) {
    return json{{"max_degree", b.max_degree}, {"hopf_degree", b.hopf_degree},
                {"pair_l", b.pair_l},         {"pair_b", b.pair_b},
                {"seed", b.seed},             {"lambda", to_json(b.lambda)}};
}

json to_json(const report::VerificationReport& r, bool timings) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        json jc{{"name", c.name},
                {"anchor", c.anchor},
                {"status", report::status_str(c.status)},
                {"witness", c.witness}};
        if (timings) jc["time_ms"] = c.time_ms;
        checks.push_back(std::move(jc));
    }
    return json{{"suite", r.suite}, {"bounds", to_json(r.bounds)}, {"checks", std::move(checks)}};
}

}  // namespace qcusp::jsonio
