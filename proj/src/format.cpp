#include "skein/format.hpp"

#include <regex>
#include <sstream>
#include <stdexcept>

namespace skein {

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "text") return OutputFormat::Text;
  throw std::invalid_argument("unknown format '" + s + "' (json, csv, text)");
}

LocalizedCoeff parse_localized(const std::string& s) {
  static const std::regex frac(R"(^\((.*)\)/\((?:u\^(\d+))?(?:\(1\+u\^2\)(?:\^(\d+))?)?\)$)");
  std::smatch m;
  if (!std::regex_match(s, m, frac)) return LocalizedCoeff(LaurentPoly::parse(s, Var::u));
  const int a = m[2].matched ? std::stoi(m[2].str()) : 0;
  const int b = m[3].matched ? std::stoi(m[3].str()) : (s.find("(1+u^2)") != std::string::npos ? 1 : 0);
  return LocalizedCoeff(LaurentPoly::parse(m[1].str(), Var::u), a, b);
}

Json to_json(const SkeinVector& v) {
  Json j = Json::object();
  for (auto it = v.terms().rbegin(); it != v.terms().rend(); ++it)
    j["t^" + std::to_string(it->first)] = it->second.str();
  return j;
}

SkeinVector skein_vector_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("skein vector JSON must be an object");
  SkeinVector v;
  for (const auto& [key, val] : j.items()) {
    if (key.rfind("t^", 0) != 0) throw std::invalid_argument("bad basis label '" + key + "'");
    v.add(std::stoi(key.substr(2)), LaurentPoly::parse(val.get<std::string>(), Var::A));
  }
  return v;
}

Json to_json(const TracePolynomial& p) {
  Json j = Json::object();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    j[TracePolynomial::key_str(it->first)] = it->second.str();
  return j;
}

TracePolynomial trace_polynomial_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("trace polynomial JSON must be an object");
  TracePolynomial p;
  for (const auto& [key, val] : j.items())
    p.add(TracePolynomial::parse_key(key), parse_localized(val.get<std::string>()));
  return p;
}

Json to_json(const EquationRow& r) {
  Json j;
  j["n"] = r.n;
  j["diagonal"] = r.lhs_coeff.str();
  j["rhs"] = to_json(r.rhs);
  j["diagonal_ok"] = r.diagonal_ok();
  j["parity_ok"] = r.parity_ok();
  return j;
}

Json to_json(const Elimination& e) {
  Json j;
  j["N"] = e.N;
  Json rows = Json::array();
  for (const auto& [n, d] : e.d) rows.push_back({{"n", n}, {"lead", d.str()}, {"value", to_json(e.r.at(n))}});
  j["rows"] = rows;
  j["remaining"] = e.remaining;
  j["parity_ok"] = e.parity_ok;
  return j;
}

Json to_json(const Presentation& p) {
  Json j;
  j["N"] = p.N;
  j["substitution"] = substitution_name(p.sub);
  Json fp = Json::array();
  for (int k : p.free_part) fp.push_back("t^" + std::to_string(k));
  j["free_part"] = fp;
  Json rows = Json::array();
  for (size_t i = 0; i < p.rows.size(); ++i) {
    Json r = to_json(p.rows[i]);
    Json gens = Json::array();
    for (const auto& g : p.annihilators[i]) gens.push_back(g.str());
    r["annihilator"] = gens;
    rows.push_back(r);
  }
  j["rows"] = rows;
  j["lower_triangular"] = p.lower_triangular;
  j["odd_rows_close"] = p.odd_rows_close;
  Json i0 = Json::array(), i1 = Json::array();
  for (const auto& f : p.factors_from_i0) i0.push_back(f.str());
  for (const auto& f : p.factors_from_i1) i1.push_back(f.str());
  j["torsion_factors_from_i0"] = i0;
  j["torsion_factors_from_i1"] = i1;
  j["indexing"] = p.indexing_report;
  j["bbm_witness"] = p.bbm_witness.str();
  j["bbm_ideal_in_band_ideal"] = p.bbm_in_band;
  j["band_ideal_in_bbm_ideal"] = p.band_in_bbm;
  return j;
}

Json system_json(int N, Substitution sub) {
  Json j;
  j["N"] = N;
  j["substitution"] = substitution_name(sub);
  Json band = Json::array();
  for (int n = 1; n <= N; ++n) band.push_back(to_json(equation_for(n)));
  j["band_move"] = band;
  Json bbm = Json::array();
  for (int n = 0; n <= N; ++n)
    for (int sign : {-1, 1}) {
      const TracePolynomial eq = bbm_equation_for(n, sign, sub);
      bbm.push_back({{"n", n}, {"sign", sign}, {"equation", to_json(eq)}, {"normalized", to_json(normalize_equation(eq))}});
    }
  j["bbm"] = bbm;
  if (N >= 2) j["elimination"] = to_json(eliminate_bbm_system(N, sub));
  return j;
}

std::string equations_csv(const std::vector<EquationRow>& rows) {
  std::ostringstream os;
  os << "n,diagonal,rhs_support,rhs\n";
  for (const auto& r : rows) {
    std::string support;
    for (auto it = r.rhs.terms().rbegin(); it != r.rhs.terms().rend(); ++it)
      support += (support.empty() ? "" : " ") + ("t^" + std::to_string(it->first));
    os << r.n << ',' << r.lhs_coeff.str() << ',' << support << ",\"" << (r.rhs.is_zero() ? "0" : r.rhs.str()) << "\"\n";
  }
  return os.str();
}

}  // namespace skein
