// Wire documents for the command-line tool: curves in, results out.
// Integers travel as decimal strings; coefficient lists are ascending
// (constant term first) with an explicit "order" marker.
#pragma once

#include "mindisc/arith.hpp"
#include "mindisc/superelliptic.hpp"
#include "mindisc/weierstrass.hpp"

#include "json.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mindisc {

using ordered_json = nlohmann::ordered_json;

struct CurveDocument {
  enum class Kind { elliptic, superelliptic };
  Kind kind = Kind::elliptic;
  std::array<Integer, 5> a{};  // a1, a2, a3, a4, a6
  int n = 0;                   // superelliptic exponent
  std::vector<Integer> f;      // ascending: f[k] is the weight of x^k
  // Marked point, carried verbatim from input to output; plays no role in
  // any computation.
  std::optional<ordered_json> point;
  bool operator==(const CurveDocument&) const = default;
};

struct ResultDocument {
  CurveDocument minimal_model;
  Integer u = 1;
  std::optional<Integer> r, s, t;  // present for elliptic reductions
  Integer discriminant_before = 0;
  Integer discriminant_after = 0;
  Factorization factored_minimal_discriminant;
  std::optional<int> genus;
  std::optional<std::map<Integer, Minimality>> certificate;
  bool operator==(const ResultDocument&) const = default;
};

Integer integer_from_json(const ordered_json& j);
Rational rational_from_json(const ordered_json& j);

CurveDocument curve_from_json(const ordered_json& j);
ordered_json curve_to_json(const CurveDocument& doc);
CurveDocument parse_curve_document(const std::string& text);

ResultDocument result_from_json(const ordered_json& j);
ordered_json result_to_json(const ResultDocument& doc);
ResultDocument parse_result_document(const std::string& text);

ordered_json factorization_to_json(const Factorization& f);
Factorization factorization_from_json(const ordered_json& j);

ResultDocument run_elliptic_minimize(const CurveDocument& doc);
ResultDocument run_super_minimize(const CurveDocument& doc, bool with_certificate);
// Dispatches on doc.kind.
ResultDocument run_minimize(const CurveDocument& doc, bool with_certificate);

// Accepts a curve document or a bare ascending coefficient array.
ordered_json run_discriminant(const ordered_json& input);
// {"f": [...], "g": [...], "r": k} with ascending coefficient lists.
ordered_json run_transvectant(const ordered_json& input);

std::string render_result(const ResultDocument& doc);
std::string render_discriminant(const ordered_json& out);
std::string render_transvectant(const ordered_json& out);
std::string render_polynomial(const std::vector<Rational>& ascending,
                              const std::string& var);
std::string render_weierstrass(const std::array<Integer, 5>& a);
std::string render_factorization(const Factorization& f);

const char* to_string(Minimality m);
Minimality minimality_from_string(const std::string& s);

}  // namespace mindisc
