#include "scenario_io.hpp"

#include <cmath>
#include <cstdlib>
#include <initializer_list>
#include <set>

namespace hauteur::cli {
namespace {

using Json = nlohmann::json;

void reject_unknown(const Json& object, std::initializer_list<std::string_view> allowed,
                    const std::string& where) {
  if (!object.is_object()) throw FormatError(where + ": expected an object");
  for (const auto& item : object.items()) {
    bool known = false;
    for (std::string_view key : allowed) known = known || item.key() == key;
    if (!known) throw FormatError(where + ": unknown key '" + item.key() + "'");
  }
}

Integer integer_field(const Json& value, const std::string& where) {
  if (value.is_number_unsigned()) return Integer(std::to_string(value.get<std::uint64_t>()), 10);
  if (value.is_number_integer()) return Integer(std::to_string(value.get<std::int64_t>()), 10);
  if (value.is_string()) {
    try {
      return parse_integer(value.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  throw FormatError(where + ": expected an integer");
}

std::uint64_t small_field(const Json& value, const std::string& where) {
  const Integer n = integer_field(value, where);
  if (n < 0) throw FormatError(where + ": must not be negative");
  try {
    return to_u64(n);
  } catch (const std::overflow_error&) {
    throw FormatError(where + ": out of range");
  }
}

const Json& required(const Json& object, const char* key, const std::string& where) {
  auto it = object.find(key);
  if (it == object.end()) throw FormatError(where + ": missing '" + key + "'");
  return *it;
}

double parse_decimal(const Json& value, const std::string& where) {
  if (!value.is_number()) throw FormatError(where + ": expected a number");
  return value.get<double>();
}

}  // namespace

double rounded(const Real& value, int significant) {
  return std::strtod(value.to_string(significant).c_str(), nullptr);
}

TowerScenario parse_scenario(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("scenario: ") + e.what());
  }
  reject_unknown(doc, {"p", "base", "towers", "M", "moduli"}, "scenario");

  TowerScenario sc;
  sc.p = integer_field(required(doc, "p", "scenario"), "scenario.p");
  if (auto it = doc.find("base"); it != doc.end()) {
    reject_unknown(*it, {"deg_K", "local_deg", "e_p", "f_p", "class_order"}, "scenario.base");
    auto take = [&](const char* key, std::uint64_t& slot) {
      slot = small_field(required(*it, key, "scenario.base"), std::string("scenario.base.") + key);
    };
    take("deg_K", sc.base.deg_K);
    take("local_deg", sc.base.local_deg);
    take("e_p", sc.base.e_p);
    take("f_p", sc.base.f_p);
    take("class_order", sc.base.class_order);
  }

  const Json& towers = required(doc, "towers", "scenario");
  if (!towers.is_array()) throw FormatError("scenario.towers: expected a list");
  for (std::size_t i = 0; i < towers.size(); ++i) {
    const std::string where = "scenario.towers[" + std::to_string(i) + "]";
    reject_unknown(towers[i], {"d", "e", "count"}, where);
    Tower t;
    t.d = small_field(required(towers[i], "d", where), where + ".d");
    t.e = small_field(required(towers[i], "e", where), where + ".e");
    const Json& count = required(towers[i], "count", where);
    if (count.is_string() && count.get<std::string>() == "krasner") {
      t.count.reset();
    } else {
      t.count = integer_field(count, where + ".count");
    }
    sc.towers.push_back(std::move(t));
  }

  if (auto it = doc.find("M"); it != doc.end()) sc.modulus_bound = integer_field(*it, "scenario.M");
  if (auto it = doc.find("moduli"); it != doc.end()) {
    if (!it->is_array()) throw FormatError("scenario.moduli: expected a list");
    std::vector<ModulusData> moduli;
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string where = "scenario.moduli[" + std::to_string(i) + "]";
      reject_unknown((*it)[i], {"g", "eps"}, where);
      ModulusData m;
      m.g = integer_field(required((*it)[i], "g", where), where + ".g");
      m.eps = static_cast<unsigned>(small_field(required((*it)[i], "eps", where), where + ".eps"));
      moduli.push_back(std::move(m));
    }
    sc.moduli = std::move(moduli);
  }
  try {
    sc.validate();
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  return sc;
}

nlohmann::ordered_json report_to_json(const BoundReport& report) {
  ReportRecord record;
  record.e_bound = report.e_bound;
  record.f_bound = report.f_bound;
  record.log10_f = rounded(report.f_bound.log10(), 6);
  record.k = report.k;
  record.lambda = report.lambda;
  record.beta = report.beta;
  record.ln_height_bound = rounded(report.ln_bound, 15);
  const mpfr_prec_t prec = report.ln_bound.precision();
  record.log10_height_bound = rounded(report.ln_bound / log(Real(10L, prec)), 6);
  return record_to_json(record);
}

nlohmann::ordered_json record_to_json(const ReportRecord& record) {
  nlohmann::ordered_json out;
  out["e_bound"] = record.e_bound.to_string();
  out["f_bound"] = record.f_bound.to_string();
  out["log10_f"] = record.log10_f;
  out["k"] = record.k;
  out["lambda"] = record.lambda;
  out["beta"] = record.beta.to_string();
  out["ln_height_bound"] = record.ln_height_bound;
  out["log10_height_bound"] = record.log10_height_bound;
  return out;
}

std::string render_report(const BoundReport& report) { return report_to_json(report).dump(2) + "\n"; }

ReportRecord parse_report(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("report: ") + e.what());
  }
  reject_unknown(doc,
                 {"e_bound", "f_bound", "log10_f", "k", "lambda", "beta", "ln_height_bound",
                  "log10_height_bound"},
                 "report");
  auto text_field = [&](const char* key) {
    const Json& v = required(doc, key, "report");
    if (!v.is_string()) throw FormatError(std::string("report.") + key + ": expected a string");
    return v.get<std::string>();
  };
  ReportRecord r;
  try {
    r.e_bound = Factorization::parse(text_field("e_bound"));
    r.f_bound = Factorization::parse(text_field("f_bound"));
    r.beta = ExactRational::parse(text_field("beta"));
  } catch (const FormatError&) {
    throw;
  } catch (const std::exception& e) {
    throw FormatError(std::string("report: ") + e.what());
  }
  r.log10_f = parse_decimal(required(doc, "log10_f", "report"), "report.log10_f");
  r.k = small_field(required(doc, "k", "report"), "report.k");
  r.lambda = small_field(required(doc, "lambda", "report"), "report.lambda");
  r.ln_height_bound = parse_decimal(required(doc, "ln_height_bound", "report"), "report.ln_height_bound");
  r.log10_height_bound =
      parse_decimal(required(doc, "log10_height_bound", "report"), "report.log10_height_bound");
  return r;
}

}  // namespace hauteur::cli
