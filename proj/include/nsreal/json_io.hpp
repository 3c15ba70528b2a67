// JSON views of library results. Rationals are always "p/q" strings.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "nsreal/extsum.hpp"
#include "nsreal/goldbach.hpp"
#include "nsreal/hermite.hpp"

namespace nsreal::json_io {

using Json = nlohmann::ordered_json;

Json rational(const Rational& q);
Json interval(const Interval& iv);
Rational parse_rational_field(const Json& j);

Json goldbach_summary(std::uint64_t limit);
Json sieve_report(const goldbach::SieveReport& r);
Json ext_sum(const std::string& series, std::size_t depth, const extsum::ExtSumResult& r);
Json hermite_m(unsigned n, unsigned p, unsigned k, const Integer& m);
Json certificate(const hermite::HermiteCertificate& c);
/// Inverse of certificate(); the checks block is read back as recorded.
hermite::HermiteCertificate certificate_from_json(const Json& j);
Json convergent(const hermite::Convergent& c);
Json dirichlet(const std::string& alpha, const std::vector<hermite::Convergent>& cs);
Json liouville(unsigned m, unsigned n, const hermite::Convergent& c, bool holds);
Json canonical_form(const std::string& expr, const wattenberg::DedekindNumber& d);

/// One CSV row per element of `array_key` (or a single row when absent).
std::string to_csv(const Json& doc, const std::string& array_key);

}  // namespace nsreal::json_io
