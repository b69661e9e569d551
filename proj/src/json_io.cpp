#include "qgcat/json_io.hpp"

namespace qgcat {

nlohmann::json to_json(const CycloNumber& x) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(c.get_str());
  return {{"order", x.order()}, {"coeffs", coeffs}};
}

CycloNumber cyclo_from_json(const nlohmann::json& j) {
  std::vector<mpq_class> c;
  for (const auto& s : j.at("coeffs")) {
    mpq_class v(s.get<std::string>());
    v.canonicalize();
    c.push_back(v);
  }
  return CycloNumber::from_coeffs(j.at("order").get<int>(), c);
}

nlohmann::json to_json(const CycloMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

nlohmann::json table_to_json(const SixJTable& t, const std::vector<CycloNumber>& vals) {
  nlohmann::json out{{"level", t.level()}, {"F", nlohmann::json::array()}, {"R", nlohmann::json::array()}};
  for (std::size_t i = 0; i < t.num_f(); ++i) {
    const FKey& x = t.fkeys()[i];
    out["F"].push_back({{"labels", {x.a, x.b, x.c, x.d, x.e, x.f}}, {"value", to_json(vals[i])}});
  }
  for (std::size_t i = 0; i < t.num_r(); ++i) {
    const RKey& x = t.rkeys()[i];
    out["R"].push_back({{"labels", {x.a, x.b, x.c}}, {"value", to_json(vals[t.num_f() + i])}});
  }
  return out;
}

nlohmann::json to_json(const SuiteReport& r) {
  nlohmann::json j{{"family", r.family}, {"instances", r.instances}, {"violations", r.violations}, {"pass", r.ok()}};
  if (!r.first_counterexample.empty()) j["first_counterexample"] = r.first_counterexample;
  return j;
}

}  // namespace qgcat
