#include "grh/json_io.hpp"

namespace grh {

Json scalar_json(const Scalar& s) {
  if (s.exact()) return Json(s.str());
  return Json(s.to_double());
}

Json verdict_json(const StabilityVerdict& v) {
  Json j;
  j["verdict"] = to_string(v.status);
  if (v.first_failing_index)
    j["first_failing_index"] = *v.first_failing_index;
  else
    j["first_failing_index"] = nullptr;
  j["marginal"] = v.marginal;
  return j;
}

Json table_json(const RHTable& t) {
  Json j;
  j["degree"] = t.degree;
  j["mode"] = t.exact ? "exact" : "float";
  Json levels = Json::array();
  for (const RHLevel& lvl : t.levels) {
    Json row1 = Json::array(), row2 = Json::array();
    for (const Scalar& s : lvl.row1) row1.push_back(scalar_json(s));
    for (const Scalar& s : lvl.row2) row2.push_back(scalar_json(s));
    levels.push_back(Json{{"p", lvl.p}, {"row1", row1}, {"row2", row2}});
  }
  j["levels"] = levels;
  Json piv = Json::array();
  for (const Scalar& s : t.pivots) piv.push_back(scalar_json(s));
  j["pivots"] = piv;
  j["scaling_log"] = t.scaling_log;
  Json v = verdict_json(t.verdict);
  j["verdict"] = v["verdict"];
  j["first_failing_index"] = v["first_failing_index"];
  j["marginal"] = v["marginal"];
  j["complete"] = t.complete;
  return j;
}

Json shaft_json(const ShaftParams& p, const ComplexPolynomial& q,
                const std::array<Scalar, 3>& conditions, const StabilityVerdict& v) {
  Json j;
  j["params"] = Json{{"k", scalar_json(p.k)},
                     {"omega", scalar_json(p.omega)},
                     {"big_omega", scalar_json(p.big_omega)},
                     {"kp", scalar_json(p.kp)},
                     {"ki", scalar_json(p.ki)}};
  j["polynomial"] = q.str();
  Json conds = Json::array();
  for (const Scalar& c : conditions) conds.push_back(scalar_json(c));
  j["conditions"] = conds;
  Json vj = verdict_json(v);
  j["verdict"] = vj["verdict"];
  j["first_failing_index"] = vj["first_failing_index"];
  j["marginal"] = vj["marginal"];
  return j;
}

}  // namespace grh
