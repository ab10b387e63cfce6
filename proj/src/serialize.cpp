#include "gmf/serialize.hpp"

#include <stdexcept>

namespace gmf {

Json series_json(const PoincareSeries& p) {
  Json j = Json::object();
  for (const auto& [e, c] : p.c) j[std::to_string(e)] = c;
  return j;
}

PoincareSeries series_from_json(const Json& j) {
  PoincareSeries p;
  for (const auto& [k, v] : j.items()) p.add(std::stoi(k), v.get<long long>());
  return p;
}

Json ring_json(const RingPtr& r) { return {{"generators", r->names}, {"degrees", r->degrees}}; }

RingPtr ring_from_json(const Json& j) {
  auto names = j.at("generators").get<std::vector<std::string>>();
  auto degs = j.at("degrees").get<std::vector<int>>();
  if (names.size() != degs.size()) throw std::invalid_argument("ring: generators and degrees differ in length");
  for (int d : degs)
    if (d <= 0) throw std::invalid_argument("ring: degrees must be positive");
  return make_ring(names, degs);
}

Json mat_json(const Mat& m) {
  Json rows = Json::array();
  for (size_t i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (size_t j = 0; j < m.cols; ++j) row.push_back(m(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

Mat mat_from_json(const RingPtr& r, const Json& j, size_t rows, size_t cols) {
  if (!j.is_array() || j.size() != rows) throw std::invalid_argument("matrix: wrong number of rows");
  Mat m(rows, cols, r);
  for (size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw std::invalid_argument("matrix: wrong number of columns");
    for (size_t k = 0; k < cols; ++k) m(i, k) = parse_poly(r, j[i][k].get<std::string>());
  }
  return m;
}

Json fingerprint_json(const MFFingerprint& f) { return {{"rank0", series_json(f.rank0)}, {"rank1", series_json(f.rank1)}}; }

namespace {

std::vector<int> degrees(const GradedFreeModule& m) {
  std::vector<int> d;
  for (size_t i = 0; i < m.rank(); ++i) d.push_back(m.gen_degree(i));
  return d;
}

GradedFreeModule from_degrees(const RingPtr& r, const Json& j) {
  GradedFreeModule m{r, {}};
  for (int d : j.get<std::vector<int>>()) m.shifts.push_back(-d);
  return m;
}

}  // namespace

Json mf_json(const MF& m) {
  return {{"ring", ring_json(m.ring)},           {"potential", m.w.to_string()}, {"potential_degree", m.d},
          {"m0_degrees", degrees(m.m0)},         {"m1_degrees", degrees(m.m1)},  {"f_entries", mat_json(m.f)},
          {"g_entries", mat_json(m.g)}};
}

MF mf_from_json(const Json& j) {
  try {
    MF m;
    m.ring = ring_from_json(j.at("ring"));
    m.w = parse_poly(m.ring, j.at("potential").get<std::string>());
    if (j.contains("potential_degree")) {
      m.d = j["potential_degree"].get<int>();
    } else if (auto d = m.w.degree()) {
      m.d = *d;
    } else {
      throw std::invalid_argument("potential_degree is required for a zero or inhomogeneous potential");
    }
    m.m0 = from_degrees(m.ring, j.at("m0_degrees"));
    m.m1 = from_degrees(m.ring, j.at("m1_degrees"));
    m.f = mat_from_json(m.ring, j.at("f_entries"), m.m1.rank(), m.m0.rank());
    m.g = mat_from_json(m.ring, j.at("g_entries"), m.m0.rank(), m.m1.rank());
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("factorization JSON: ") + e.what());
  }
}

Json kw_json(const KwModule& m) {
  Json terms = Json::array();
  for (int k = m.lo; k <= m.hi(); ++k)
    terms.push_back({{"degree", k},
                     {"degrees", degrees(m.term(k))},
                     {"del_entries", mat_json(m.del_at(k))},
                     {"s_entries", mat_json(m.s_at(k))}});
  return {{"ring", ring_json(m.ring)}, {"potential", m.w.to_string()}, {"potential_degree", m.d},
          {"lo", m.lo},                {"terms", terms}};
}

}  // namespace gmf
