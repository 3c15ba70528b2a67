#include "nsreal/json_io.hpp"

#include <algorithm>
#include <sstream>

namespace nsreal::json_io {

Json rational(const Rational& q) { return to_fraction_string(q); }

Json interval(const Interval& iv) { return Json::array({rational(iv.lo), rational(iv.hi)}); }

Rational parse_rational_field(const Json& j) {
  if (j.is_array() && j.size() == 2)
    return Rational(Integer(j[0].get<std::string>()), Integer(j[1].get<std::string>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw Error(ErrorCode::kParse, "not a rational: " + j.dump());
}

Json goldbach_summary(std::uint64_t limit) {
  Rational s = goldbach::gb_partial_sum(limit);
  Rational tb = goldbach::tail_bound(limit);
  Json j;
  j["limit"] = limit;
  j["powers"] = goldbach::count_perfect_powers(limit);
  j["partial_sum"] = rational(s);
  j["tail_bound"] = rational(tb);
  j["abs_err_vs_1"] = rational(abs(Rational(1 - s)));
  return j;
}

Json sieve_report(const goldbach::SieveReport& r) {
  Json steps = Json::array();
  for (const auto& st : r.steps) {
    Json s;
    s["base"] = st.base;
    s["contribution"] = rational(st.contribution);
    s["tail"] = rational(st.tail);
    s["exponents"] = st.exponents;
    steps.push_back(std::move(s));
  }
  Json j;
  j["depth"] = r.depth;
  j["steps"] = std::move(steps);
  j["removed_bases"] = r.removed_bases;
  j["residual"] = rational(r.residual);
  j["residual_interval"] = interval(r.residual_interval);
  j["coverage_gap"] = rational(r.coverage_gap);
  j["tail_sum"] = rational(r.tail_sum);
  return j;
}

Json ext_sum(const std::string& series, std::size_t depth, const extsum::ExtSumResult& r) {
  Json j;
  j["series"] = series;
  j["depth"] = depth;
  j["value"] = r.value.to_string();
  j["sign"] = r.value.sign();
  j["delta"] = r.value.delta().to_string();
  j["divergent"] = r.divergent;
  j["eta"] = r.eta ? interval(*r.eta) : Json(nullptr);
  return j;
}

Json hermite_m(unsigned n, unsigned p, unsigned k, const Integer& m) {
  Json j;
  j["n"] = n;
  j["p"] = p;
  j["k"] = k;
  j["M"] = m.get_str();
  return j;
}

Json certificate(const hermite::HermiteCertificate& c) {
  Json coeffs = Json::array();
  for (const auto& b : c.coefficients)
    coeffs.push_back(Json::array({b.get_num().get_str(), b.get_den().get_str()}));
  Json ms = Json::array(), ledger = Json::array();
  for (const auto& m : c.M) ms.push_back(m.get_str());
  for (const auto& e : c.eps_ledger) ledger.push_back(rational(e));
  Json j;
  j["coeffs"] = std::move(coeffs);
  j["common_denominator"] = c.common_denominator.get_str();
  j["prime"] = c.prime;
  j["M"] = std::move(ms);
  j["I"] = c.integer_combination.get_str();
  j["eps_ledger"] = std::move(ledger);
  j["eps_bound"] = rational(c.eps_bound);
  j["lower_bound"] = rational(c.lower_bound);
  j["checks"] = {{"m0_nondivisible", c.checks.m0_nondivisible},
                 {"mk_divisible", c.checks.mk_divisible},
                 {"eps_half", c.checks.eps_half}};
  return j;
}

hermite::HermiteCertificate certificate_from_json(const Json& j) {
  try {
    hermite::HermiteCertificate c;
    for (const auto& b : j.at("coeffs")) c.coefficients.push_back(parse_rational_field(b));
    c.common_denominator = j.contains("common_denominator")
                               ? Integer(j["common_denominator"].get<std::string>())
                               : Integer(1);
    c.prime = j.at("prime").get<unsigned long>();
    for (const auto& m : j.at("M")) c.M.emplace_back(m.get<std::string>());
    c.integer_combination = Integer(j.at("I").get<std::string>());
    if (j.contains("eps_ledger"))
      for (const auto& e : j["eps_ledger"]) c.eps_ledger.push_back(parse_rational_field(e));
    c.eps_bound = parse_rational_field(j.at("eps_bound"));
    c.lower_bound = parse_rational_field(j.at("lower_bound"));
    const auto& ch = j.at("checks");
    c.checks = {ch.at("m0_nondivisible").get<bool>(), ch.at("mk_divisible").get<bool>(),
                ch.at("eps_half").get<bool>()};
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("malformed certificate: ") + e.what());
  }
}

Json convergent(const hermite::Convergent& c) {
  Json j;
  j["p"] = c.p.get_str();
  j["q"] = c.q.get_str();
  j["error"] = interval(c.error);
  j["bound"] = rational(Rational(Integer(1), c.q * c.q));
  j["holds"] = c.error.hi < Rational(Integer(1), c.q * c.q);
  return j;
}

Json dirichlet(const std::string& alpha, const std::vector<hermite::Convergent>& cs) {
  Json arr = Json::array();
  for (const auto& c : cs) arr.push_back(convergent(c));
  Json j;
  j["alpha"] = alpha;
  j["convergents"] = std::move(arr);
  return j;
}

Json liouville(unsigned m, unsigned n, const hermite::Convergent& c, bool holds) {
  Json j;
  j["m"] = m;
  j["n"] = n;
  j["p"] = c.p.get_str();
  j["q"] = c.q.get_str();
  j["error"] = interval(c.error);
  j["holds"] = holds;
  return j;
}

Json canonical_form(const std::string& expr, const wattenberg::DedekindNumber& d) {
  Json j;
  j["expr"] = expr;
  j["canonical"] = d.to_string();
  j["sign"] = d.sign();
  j["delta"] = d.delta().to_string();
  return j;
}

namespace {

std::string cell(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_rows(std::ostringstream& os, const std::vector<Json>& rows) {
  std::vector<std::string> header;
  for (const auto& row : rows)
    for (const auto& [k, v] : row.items())
      if (std::find(header.begin(), header.end(), k) == header.end()) header.push_back(k);
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (i) os << ",";
      if (row.contains(header[i])) os << cell(row[header[i]]);
    }
    os << "\n";
  }
}

}  // namespace

std::string to_csv(const Json& doc, const std::string& array_key) {
  std::ostringstream os;
  std::vector<Json> rows;
  if (!array_key.empty() && doc.contains(array_key) && doc[array_key].is_array()) {
    std::size_t idx = 0;
    for (const auto& el : doc[array_key]) {
      Json row;
      row["index"] = idx++;
      if (el.is_object()) {
        for (const auto& [k, v] : el.items()) row[k] = v;
      } else {
        row[array_key] = el;
      }
      rows.push_back(std::move(row));
    }
  } else {
    rows.push_back(doc);
  }
  write_rows(os, rows);
  return os.str();
}

}  // namespace nsreal::json_io
