#include "gmf/reports.hpp"

#include "gmf/equiv.hpp"
#include "gmf/hecke.hpp"
#include "gmf/moy.hpp"
#include "gmf/stabilize.hpp"

namespace gmf {

namespace {

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

bool is_braid(const std::string& text) {
  auto p = text.find_first_not_of(" \t\r\n");
  return p != std::string::npos && text.compare(p, 2, "m=") == 0;
}

Json report_json(const Report& r) {
  Json j = {{"ok", r.ok}};
  if (!r.ok) j["problems"] = r.to_string();
  return j;
}

// compiled factorization summary: graded ranks, validity, reduced fingerprint
Json mf_summary(const MF& m) {
  MF red = reduce_mf(m);
  Json j = {{"valid", report_json(validate_mf(m))},
            {"ranks", {{"m0", series_json(graded_rank(m.m0))}, {"m1", series_json(graded_rank(m.m1))}}},
            {"fingerprint", fingerprint_json(fingerprint(m))},
            {"reduced", mf_json(red)}};
  if (red.is_zero()) j["note"] = "contractible";
  return j;
}

MF compile_input(const std::string& text, int n, int unit) {
  if (is_braid(text)) return compile_graph(braid_to_graph(parse_braid(text)), n, unit);
  return compile_graph(parse_graph(text), n, unit);
}

MF side_mf(const std::vector<BSWord>& side, int m, int n, int unit) {
  std::optional<MF> acc;
  for (const auto& w : side) {
    BraidWord b{m, w.word};
    MF x = shift_mf(compile_graph(braid_to_graph(b), n, unit), 0, w.shift);
    acc = acc ? direct_sum(*acc, x) : x;
  }
  if (!acc) {
    MF e = compile_graph(braid_to_graph(BraidWord{m, {}}), n, unit);
    return zero_mf(e.ring, e.w, e.d);
  }
  return *acc;
}

}  // namespace

Status compile_report(const std::string& text, const ReportOptions& o, Json& out) {
  int unit = o.unit ? o.unit : 1;
  MF m = compile_input(text, o.n, unit);
  out = {{"verb", "compile"}, {"n", o.n}, {"unit", unit}};
  out.update(mf_summary(m));
  return out["valid"]["ok"].get<bool>() ? Status::ok : Status::invariant;
}

Status close_report(const std::string& text, const ReportOptions& o, Json& out) {
  ClosureOptions opt;
  opt.unit = o.unit ? o.unit : 1;
  opt.window = o.window;
  BraidWord w = parse_braid(text);
  ClosureResult r;
  if (o.route == "theorem")
    r = close_braid(w, o.n, opt);
  else if (o.route == "direct")
    r = close_braid_direct(w, o.n, opt);
  else if (o.route == "excluded")
    r = close_braid_excluded(w, o.n, opt);
  else
    throw std::invalid_argument("route must be theorem, direct or excluded");
  MF b = compile_graph(braid_to_graph(w), o.n, opt.unit);
  out = {{"verb", "close"},
         {"braid", braid_to_string(w)},
         {"n", o.n},
         {"unit", opt.unit},
         {"route", o.route},
         {"H0", series_json(r.H0)},
         {"H1", series_json(r.H1)},
         {"shifts", {{"N", r.data.N}, {"k", r.data.k}}},
         {"window", {r.lo, r.hi}},
         {"certified", r.certified},
         {"fingerprint", fingerprint_json(fingerprint(b))}};
  if (!r.certified) out["partial"] = true;
  return r.certified ? Status::ok : Status::partial;
}

Status verify_hecke_report(const std::string& text, const ReportOptions&, Json& out) {
  RelationFile f = parse_relation_file(text);
  out = {{"verb", "verify-hecke"}, {"m", f.m}, {"relations", Json::array()}};
  for (const auto& rel : f.relations) {
    RelationResult r = verify_relation(rel.lhs, rel.rhs, f.m);
    Json j = {{"verdict", r.equal ? "equal" : "unequal"}};
    if (!r.equal) j["difference"] = r.difference.to_string();
    out["relations"].push_back(j);
  }
  return Status::ok;
}

Status verify_moy_report(const std::string& text, const ReportOptions& o, Json& out) {
  int unit = o.unit ? o.unit : 2;
  RelationFile f = parse_relation_file(text);
  out = {{"verb", "verify-moy"}, {"m", f.m}, {"n", o.n}, {"unit", unit}, {"relations", Json::array()}};
  Status code = Status::ok;
  for (const auto& rel : f.relations) {
    RelationResult h = verify_relation(rel.lhs, rel.rhs, f.m);
    MF a = side_mf(rel.lhs, f.m, o.n, unit), b = side_mf(rel.rhs, f.m, o.n, unit);
    MFFingerprint fa = fingerprint(a), fb = fingerprint(b);
    Json j = {{"hecke", h.equal ? "equal" : "unequal"},
              {"fingerprint_lhs", fingerprint_json(fa)},
              {"fingerprint_rhs", fingerprint_json(fb)}};
    if (!h.equal) j["difference"] = h.difference.to_string();
    std::string verdict = "unequal";
    if (fa == fb) {
      verdict = "fingerprint-equal-certificate-pending";
      bool small = a.rank0() + a.rank1() <= 24;
      if (o.certify || small) {
        EquivalenceCertificate c = find_equivalence(a, b);
        if (c.level == CertificateLevel::certified) verdict = "equal";
        j["certificate"] = {{"level", to_string(c.level)}, {"composites_checked", c.composites_checked}};
      }
    }
    if (verdict != "equal" && fa == fb && !h.equal) {
      verdict = "unequal";
      j["note"] = "Hecke classes differ and no equivalence was found";
    }
    j["verdict"] = verdict;
    // the Hecke class is a decategorification: equal classes force equal fingerprints
    if (h.equal && fa != fb) code = Status::invariant;
    if (verdict == "fingerprint-equal-certificate-pending" && code == Status::ok) code = Status::partial;
    out["relations"].push_back(j);
  }
  return code;
}

// {"ring": {...}, "ideal": ["x - y"], "potential": "x^3 - y^3"}
Status stabilize_report(const std::string& text, const ReportOptions&, Json& out) {
  Json in = parse_json(text);
  RingPtr r = ring_from_json(in.at("ring"));
  std::vector<Poly> xs;
  for (const auto& s : in.at("ideal")) xs.push_back(parse_poly(r, s.get<std::string>()));
  Poly w = parse_poly(r, in.at("potential").get<std::string>());
  if (!ideal_coefficients(xs, w)) throw std::invalid_argument("potential is not in the ideal");
  MF m = stabilize_ci(xs, w);
  out = {{"verb", "stabilize"}, {"factorization", mf_json(m)}};
  out.update(mf_summary(m));
  return out["valid"]["ok"].get<bool>() ? Status::ok : Status::invariant;
}

Status reduce_report(const std::string& text, const ReportOptions&, Json& out) {
  MF m = mf_from_json(parse_json(text));
  Report rep = validate_mf(m);
  if (!rep.ok) throw std::invalid_argument("invalid factorization: " + rep.to_string());
  out = {{"verb", "reduce"}};
  out.update(mf_summary(m));
  return Status::ok;
}

}  // namespace gmf
