#include "mindisc/curve_io.hpp"

#include <sstream>
#include <utility>

namespace mindisc {

namespace {

[[noreturn]] void malformed(const std::string& why) {
  throw std::invalid_argument("malformed document: " + why);
}

const ordered_json& require(const ordered_json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) malformed(std::string("missing field \"") + key + "\"");
  return *it;
}

std::vector<Integer> integer_list(const ordered_json& j, bool reverse) {
  if (!j.is_array() || j.empty()) malformed("expected a nonempty coefficient array");
  std::vector<Integer> out;
  out.reserve(j.size());
  for (const auto& item : j) out.push_back(integer_from_json(item));
  if (reverse) std::reverse(out.begin(), out.end());
  return out;
}

// true when the list is ascending on the wire (the default).
bool ascending_order(const ordered_json& j) {
  auto it = j.find("order");
  if (it == j.end()) return true;
  if (!it->is_string()) malformed("\"order\" must be a string");
  const std::string order = it->get<std::string>();
  if (order == "ascending") return true;
  if (order == "descending") return false;
  malformed("\"order\" must be \"ascending\" or \"descending\"");
}

ordered_json integer_strings(const std::vector<Integer>& v) {
  ordered_json out = ordered_json::array();
  for (const Integer& x : v) out.push_back(x.get_str());
  return out;
}

std::string sign_prefix(bool negative, bool first) {
  if (first) return negative ? "-" : "";
  return negative ? " - " : " + ";
}

}  // namespace

Integer integer_from_json(const ordered_json& j) {
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      malformed("\"" + j.get<std::string>() + "\" is not a decimal integer");
    }
  }
  if (j.is_number_integer() || j.is_number_unsigned())
    return Integer(static_cast<long>(j.get<long long>()));
  malformed("expected an integer (number or decimal string)");
}

Rational rational_from_json(const ordered_json& j) {
  if (j.is_string()) {
    try {
      Rational q(j.get<std::string>());
      if (q.get_den() == 0) malformed("zero denominator");
      q.canonicalize();
      return q;
    } catch (const std::invalid_argument&) {
      malformed("\"" + j.get<std::string>() + "\" is not a rational number");
    }
  }
  return Rational(integer_from_json(j));
}

CurveDocument curve_from_json(const ordered_json& j) {
  if (!j.is_object()) malformed("expected a curve object");
  const ordered_json& kind = require(j, "kind");
  if (!kind.is_string()) malformed("\"kind\" must be a string");
  CurveDocument doc;
  const std::string k = kind.get<std::string>();
  if (k == "elliptic") {
    doc.kind = CurveDocument::Kind::elliptic;
    const ordered_json& a = require(j, "a");
    if (!a.is_array() || a.size() != 5)
      malformed("\"a\" must list [a1, a2, a3, a4, a6]");
    for (size_t i = 0; i < 5; ++i) doc.a[i] = integer_from_json(a[i]);
  } else if (k == "superelliptic") {
    doc.kind = CurveDocument::Kind::superelliptic;
    const ordered_json& n = require(j, "n");
    if (!n.is_number_integer() || n.get<long long>() < 2)
      malformed("\"n\" must be an integer >= 2");
    doc.n = static_cast<int>(n.get<long long>());
    doc.f = integer_list(require(j, "f"), !ascending_order(j));
  } else {
    malformed("unknown curve kind \"" + k + "\"");
  }
  if (auto it = j.find("point"); it != j.end()) doc.point = *it;
  return doc;
}

ordered_json curve_to_json(const CurveDocument& doc) {
  ordered_json out;
  if (doc.kind == CurveDocument::Kind::elliptic) {
    out["kind"] = "elliptic";
    out["a"] = integer_strings({doc.a.begin(), doc.a.end()});
  } else {
    out["kind"] = "superelliptic";
    out["n"] = doc.n;
    out["order"] = "ascending";
    out["f"] = integer_strings(doc.f);
  }
  if (doc.point) out["point"] = *doc.point;
  return out;
}

CurveDocument parse_curve_document(const std::string& text) {
  return curve_from_json(ordered_json::parse(text));
}

ordered_json factorization_to_json(const Factorization& f) {
  ordered_json out;
  out["sign"] = f.sign;
  ordered_json factors = ordered_json::array();
  for (const auto& [p, e] : f.factors)
    factors.push_back(ordered_json::array({p.get_str(), e}));
  out["factors"] = std::move(factors);
  return out;
}

Factorization factorization_from_json(const ordered_json& j) {
  if (!j.is_object()) malformed("expected a factorization object");
  Factorization f;
  const ordered_json& sign = require(j, "sign");
  if (!sign.is_number_integer()) malformed("\"sign\" must be +1 or -1");
  f.sign = sign.get<int>();
  if (f.sign != 1 && f.sign != -1) malformed("\"sign\" must be +1 or -1");
  const ordered_json& factors = require(j, "factors");
  if (!factors.is_array()) malformed("\"factors\" must be an array");
  for (const auto& pair : factors) {
    if (!pair.is_array() || pair.size() != 2) malformed("factor entries are pairs");
    Integer p = integer_from_json(pair[0]);
    if (!pair[1].is_number_unsigned() && !pair[1].is_number_integer())
      malformed("factor exponents are integers");
    f.factors[std::move(p)] = pair[1].get<unsigned long>();
  }
  return f;
}

ResultDocument result_from_json(const ordered_json& j) {
  if (!j.is_object()) malformed("expected a result object");
  ResultDocument doc;
  doc.minimal_model = curve_from_json(require(j, "minimal_model"));
  const ordered_json& tr = require(j, "transformation");
  doc.u = integer_from_json(require(tr, "u"));
  if (auto it = tr.find("r"); it != tr.end()) doc.r = integer_from_json(*it);
  if (auto it = tr.find("s"); it != tr.end()) doc.s = integer_from_json(*it);
  if (auto it = tr.find("t"); it != tr.end()) doc.t = integer_from_json(*it);
  doc.discriminant_before = integer_from_json(require(j, "discriminant_before"));
  doc.discriminant_after = integer_from_json(require(j, "discriminant_after"));
  doc.factored_minimal_discriminant =
      factorization_from_json(require(j, "factored_minimal_discriminant"));
  if (auto it = j.find("genus"); it != j.end()) {
    if (!it->is_number_integer()) malformed("\"genus\" must be an integer");
    doc.genus = it->get<int>();
  }
  if (auto it = j.find("certificate"); it != j.end()) {
    if (!it->is_object()) malformed("\"certificate\" must be an object");
    std::map<Integer, Minimality> cert;
    for (const auto& [key, value] : it->items()) {
      if (!value.is_string()) malformed("certificate statuses are strings");
      cert[Integer(key)] = minimality_from_string(value.get<std::string>());
    }
    doc.certificate = std::move(cert);
  }
  return doc;
}

ordered_json result_to_json(const ResultDocument& doc) {
  ordered_json out;
  out["minimal_model"] = curve_to_json(doc.minimal_model);
  ordered_json tr;
  tr["u"] = doc.u.get_str();
  if (doc.r) tr["r"] = doc.r->get_str();
  if (doc.s) tr["s"] = doc.s->get_str();
  if (doc.t) tr["t"] = doc.t->get_str();
  out["transformation"] = std::move(tr);
  out["discriminant_before"] = doc.discriminant_before.get_str();
  out["discriminant_after"] = doc.discriminant_after.get_str();
  out["factored_minimal_discriminant"] =
      factorization_to_json(doc.factored_minimal_discriminant);
  if (doc.genus) out["genus"] = *doc.genus;
  if (doc.certificate) {
    ordered_json cert;
    for (const auto& [p, status] : *doc.certificate)
      cert[p.get_str()] = to_string(status);
    out["certificate"] = std::move(cert);
  }
  return out;
}

ResultDocument parse_result_document(const std::string& text) {
  return result_from_json(ordered_json::parse(text));
}

ResultDocument run_elliptic_minimize(const CurveDocument& doc) {
  if (doc.kind != CurveDocument::Kind::elliptic)
    malformed("expected an elliptic curve document");
  WeierstrassEquation e{doc.a[0], doc.a[1], doc.a[2], doc.a[3], doc.a[4]};
  LaskaResult res = laska_minimize(e);
  ResultDocument out;
  out.minimal_model.kind = CurveDocument::Kind::elliptic;
  out.minimal_model.a = {res.model.a1, res.model.a2, res.model.a3, res.model.a4,
                         res.model.a6};
  out.minimal_model.point = doc.point;
  out.u = res.transformation.u;
  out.r = res.transformation.r;
  out.s = res.transformation.s;
  out.t = res.transformation.t;
  out.discriminant_before = discriminant(e);
  out.discriminant_after = discriminant(res.model);
  out.factored_minimal_discriminant = factorize(out.discriminant_after);
  return out;
}

ResultDocument run_super_minimize(const CurveDocument& doc, bool with_certificate) {
  if (doc.kind != CurveDocument::Kind::superelliptic)
    malformed("expected a superelliptic curve document");
  SuperellipticCurve curve = SuperellipticCurve::from_ascending(doc.n, doc.f);
  ReduceResult res = reduce(curve);
  ResultDocument out;
  out.minimal_model.kind = CurveDocument::Kind::superelliptic;
  out.minimal_model.n = doc.n;
  std::vector<Rational> asc = res.curve.form().ascending();
  out.minimal_model.f.reserve(asc.size());
  for (const Rational& c : asc) out.minimal_model.f.push_back(Integer(c.get_num()));
  out.minimal_model.point = doc.point;
  out.u = res.scaling.u;
  out.discriminant_before = res.scaling.old_delta;
  out.discriminant_after = res.scaling.new_delta;
  out.factored_minimal_discriminant = factorize(res.scaling.new_delta);
  out.genus = res.curve.genus();
  if (with_certificate) {
    // Statuses refer to the emitted model; its delta is already factored.
    std::map<Integer, Minimality> cert;
    const unsigned long bound = static_cast<unsigned long>(res.curve.threshold());
    for (const auto& [p, v] : out.factored_minimal_discriminant.factors)
      cert[p] = v < bound ? Minimality::certified_minimal : Minimality::inconclusive;
    out.certificate = std::move(cert);
  }
  return out;
}

ResultDocument run_minimize(const CurveDocument& doc, bool with_certificate) {
  if (doc.kind == CurveDocument::Kind::elliptic) return run_elliptic_minimize(doc);
  return run_super_minimize(doc, with_certificate);
}

ordered_json run_discriminant(const ordered_json& input) {
  ordered_json out;
  Rational disc;
  if (input.is_array()) {
    std::vector<Rational> asc;
    if (input.empty()) malformed("expected a nonempty coefficient array");
    for (const auto& item : input) asc.push_back(rational_from_json(item));
    out["kind"] = "binary_form";
    disc = discriminant(BinaryForm::from_ascending(asc));
  } else {
    CurveDocument doc = curve_from_json(input);
    if (doc.kind == CurveDocument::Kind::elliptic) {
      out["kind"] = "elliptic";
      disc = Rational(discriminant(
          WeierstrassEquation{doc.a[0], doc.a[1], doc.a[2], doc.a[3], doc.a[4]}));
    } else {
      out["kind"] = "superelliptic";
      disc = discriminant(BinaryForm::from_ascending(doc.f));
    }
  }
  if (disc.get_den() == 1) {
    Integer n(disc.get_num());
    out["discriminant"] = n.get_str();
    if (n != 0) out["factorization"] = factorization_to_json(factorize(n));
  } else {
    out["discriminant"] = disc.get_str();
  }
  return out;
}

ordered_json run_transvectant(const ordered_json& input) {
  if (!input.is_object()) malformed("expected {\"f\": [...], \"g\": [...], \"r\": k}");
  const bool asc = ascending_order(input);
  auto form_of = [&](const char* key) {
    const ordered_json& list = require(input, key);
    if (!list.is_array() || list.empty())
      malformed(std::string("\"") + key + "\" must be a nonempty coefficient array");
    std::vector<Rational> coeffs;
    for (const auto& item : list) coeffs.push_back(rational_from_json(item));
    if (!asc) std::reverse(coeffs.begin(), coeffs.end());
    return BinaryForm::from_ascending(coeffs);
  };
  BinaryForm f = form_of("f");
  BinaryForm g = form_of("g");
  const ordered_json& r = require(input, "r");
  if (!r.is_number_integer() || r.get<long long>() < 0)
    malformed("\"r\" must be a nonnegative integer");
  BinaryForm h = transvectant(f, g, static_cast<int>(r.get<long long>()));
  ordered_json out;
  out["degree"] = h.degree();
  out["order"] = "ascending";
  ordered_json coeffs = ordered_json::array();
  for (const Rational& c : h.ascending()) coeffs.push_back(Rational(c).get_str());
  out["coefficients"] = std::move(coeffs);
  return out;
}

std::string render_polynomial(const std::vector<Rational>& ascending,
                              const std::string& var) {
  std::ostringstream os;
  bool first = true;
  for (int k = static_cast<int>(ascending.size()) - 1; k >= 0; --k) {
    const Rational& c = ascending[k];
    if (c == 0) continue;
    Rational mag = c < 0 ? Rational(-c) : c;
    os << sign_prefix(c < 0, first);
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  if (first) os << "0";
  return os.str();
}

std::string render_weierstrass(const std::array<Integer, 5>& a) {
  std::ostringstream os;
  os << "y^2";
  if (a[0] != 0) os << (a[0] < 0 ? " - " : " + ")
                    << (abs(a[0]) == 1 ? std::string() : Integer(abs(a[0])).get_str() + "*")
                    << "x*y";
  if (a[2] != 0) os << (a[2] < 0 ? " - " : " + ")
                    << (abs(a[2]) == 1 ? std::string() : Integer(abs(a[2])).get_str() + "*")
                    << "y";
  os << " = ";
  // x^3 + a2 x^2 + a4 x + a6, ascending
  std::vector<Rational> rhs{Rational(a[4]), Rational(a[3]), Rational(a[1]),
                            Rational(1)};
  os << render_polynomial(rhs, "x");
  return os.str();
}

std::string render_factorization(const Factorization& f) {
  std::ostringstream os;
  if (f.sign < 0) os << "-1";
  bool first = f.sign >= 0;
  for (const auto& [p, e] : f.factors) {
    if (!first) os << " * ";
    first = false;
    os << p.get_str();
    if (e > 1) os << "^" << e;
  }
  if (first) os << "1";
  return os.str();
}

std::string render_result(const ResultDocument& doc) {
  std::ostringstream os;
  if (doc.minimal_model.kind == CurveDocument::Kind::elliptic) {
    os << "minimal model:        " << render_weierstrass(doc.minimal_model.a) << "\n";
    os << "transformation:       u = " << doc.u.get_str();
    if (doc.r) os << ", r = " << doc.r->get_str();
    if (doc.s) os << ", s = " << doc.s->get_str();
    if (doc.t) os << ", t = " << doc.t->get_str();
    os << "\n";
  } else {
    std::vector<Rational> asc;
    for (const Integer& c : doc.minimal_model.f) asc.emplace_back(c);
    os << "minimal model:        y^" << doc.minimal_model.n << " = "
       << render_polynomial(asc, "x") << "\n";
    os << "scaling:              u = " << doc.u.get_str() << "\n";
    if (doc.genus) os << "genus:                " << *doc.genus << "\n";
  }
  if (doc.minimal_model.point)
    os << "marked point:         " << doc.minimal_model.point->dump() << "\n";
  os << "discriminant before:  " << doc.discriminant_before.get_str() << "\n";
  os << "discriminant after:   " << doc.discriminant_after.get_str() << "\n";
  os << "minimal discriminant: "
     << render_factorization(doc.factored_minimal_discriminant) << "\n";
  if (doc.certificate) {
    os << "certificate:          ";
    if (doc.certificate->empty()) os << "(no primes divide the discriminant)";
    bool first = true;
    for (const auto& [p, status] : *doc.certificate) {
      if (!first) os << ", ";
      first = false;
      os << p.get_str() << ": " << to_string(status);
    }
    os << "\n";
  }
  return os.str();
}

std::string render_discriminant(const ordered_json& out) {
  std::ostringstream os;
  os << "discriminant: " << out.at("discriminant").get<std::string>();
  if (out.contains("factorization")) {
    Factorization f = factorization_from_json(out.at("factorization"));
    os << " = " << render_factorization(f);
  } else if (out.at("discriminant").get<std::string>() == "0") {
    os << " (not factored)";
  }
  os << "\n";
  return os.str();
}

std::string render_transvectant(const ordered_json& out) {
  std::ostringstream os;
  std::vector<Rational> asc;
  for (const auto& item : out.at("coefficients")) asc.push_back(rational_from_json(item));
  os << "degree " << out.at("degree").get<int>() << " covariant: "
     << render_polynomial(asc, "x") << "\n";
  return os.str();
}

const char* to_string(Minimality m) {
  return m == Minimality::certified_minimal ? "certified_minimal" : "inconclusive";
}

Minimality minimality_from_string(const std::string& s) {
  if (s == "certified_minimal") return Minimality::certified_minimal;
  if (s == "inconclusive") return Minimality::inconclusive;
  malformed("unknown minimality status \"" + s + "\"");
}

}  // namespace mindisc
