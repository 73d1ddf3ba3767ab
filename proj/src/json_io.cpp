#include "cliff/json_io.hpp"

#include "cliff/errors.hpp"

namespace cliff::jsonio {

using nlohmann::json;

json multivector_to_json(const Multivector& m) {
  json out = json::array();
  for (const auto& [mask, c] : m.terms()) {
    json indices = json::array();
    for (int i = 0; i < m.algebra().n(); ++i)
      if (mask >> i & 1) indices.push_back(i);
    out.push_back({{"blade", indices},
                   {"num", c.get_num().get_str()},
                   {"den", c.get_den().get_str()}});
  }
  return out;
}

Multivector multivector_from_json(const json& j, const Signature& sig) {
  std::vector<Multivector::Term> terms;
  for (const auto& entry : j) {
    BladeMask mask = 0;
    for (const auto& idx : entry.at("blade")) {
      const int i = idx.get<int>();
      if (i < 0 || i >= sig.n()) throw Error("blade index outside the algebra");
      mask |= BladeMask{1} << i;
    }
    Rational c;
    if (!rat_from_string(entry.at("num").get<std::string>() + "/" +
                             entry.at("den").get<std::string>(),
                         c))
      throw Error("malformed rational in multivector JSON");
    terms.emplace_back(mask, std::move(c));
  }
  return Multivector::from_terms(sig, std::move(terms));
}

json matrix_to_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rat_to_string(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json ortho_to_json(const groups::OrthoMatrix& m) {
  json metric = json::array();
  for (int i = 0; i < m.metric().n(); ++i) metric.push_back(m.metric().metric(i));
  return {{"metric", metric},
          {"det", rat_to_string(m.det())},
          {"entries", matrix_to_json(m.matrix())}};
}

json certificate_to_json(const groups::GroupCertificate& cert) {
  json norm = nullptr;
  if (cert.norm_value)
    norm = {{"a", rat_to_string(cert.norm_value->a)}, {"b", rat_to_string(cert.norm_value->b)}};
  return {{"element", multivector_to_json(cert.element)},
          {"flags",
           {{"in_clifford_group", cert.in_clifford_group},
            {"in_twisted_clifford_group", cert.in_twisted_clifford_group},
            {"in_pin", cert.in_pin},
            {"in_spin", cert.in_spin},
            {"in_reduced_pin", cert.in_reduced_pin}}},
          {"norm", norm}};
}

json kmatrix_to_json(const spinors::KMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.size(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.size(); ++c)
      row.push_back({{"re", rat_to_string(m.at(r, c).a)}, {"im", rat_to_string(m.at(r, c).b)}});
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace cliff::jsonio
