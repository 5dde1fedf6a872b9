#include "schub/render.hpp"

#include <sstream>

namespace schub {

nlohmann::json to_json(const Poly& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : f.terms())
        terms.push_back({{"exponents", m.exponents()}, {"coeff", c.str()}});
    return terms;
}

nlohmann::json to_json(const IntMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json to_json(const StanleyReport& r) {
    return {{"n", r.n},         {"ell", r.ell},     {"det_abs", r.det_abs.str()},
            {"rhs", r.rhs.str()}, {"equal", r.equal}, {"sign", r.sign}};
}

nlohmann::json to_json(const SuiteResult& r) {
    nlohmann::json items = nlohmann::json::array();
    for (const CheckItem& item : r.items) {
        nlohmann::json j = {{"witness", item.witness}, {"pass", item.pass}, {"text", item.text}};
        if (!item.data.is_null()) j["data"] = item.data;
        items.push_back(std::move(j));
    }
    return {{"suite", r.suite},           {"n", r.n},       {"seed", r.seed},
            {"checks_run", r.checks_run}, {"items", items}, {"pass", r.pass},
            {"ms", r.ms}};
}

std::string to_text(const StanleyReport& r) {
    std::ostringstream out;
    out << "n=" << r.n << " ell=" << r.ell << ": |det| = " << r.det_abs.str()
        << ", rhs = " << r.rhs.str() << ", " << (r.equal ? "equal" : "NOT EQUAL")
        << ", sign = " << (r.sign >= 0 ? "+1" : "-1");
    return out.str();
}

std::string to_text(const SuiteResult& r) {
    std::ostringstream out;
    for (const CheckItem& item : r.items)
        out << "  [" << (item.pass ? "ok" : "FAIL") << "] " << item.text << "\n";
    out << r.suite << ": " << r.checks_run << " checks, "
        << (r.pass ? "all pass" : "FAILURES above") << " (" << r.ms << " ms)";
    return out.str();
}

}  // namespace schub
