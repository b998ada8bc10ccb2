#include "symf/io.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "symf/error.hpp"

namespace symf {

using Json = nlohmann::ordered_json;

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\n");
  return std::string(s.substr(first, last - first + 1));
}

Json partition_json(const Partition& p) {
  Json a = Json::array();
  for (int v : p.parts()) a.push_back(v);
  return a;
}

Partition partition_from(const Json& j) {
  if (!j.is_array()) throw SyntaxError("expected a partition array");
  std::vector<int> parts;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw SyntaxError("partition entries must be integers");
    parts.push_back(v.get<int>());
  }
  try {
    return Partition(std::move(parts));
  } catch (const DomainError& e) {
    throw SyntaxError(e.what());
  }
}

Rational rational_from(const Json& j) {
  if (!j.is_string()) throw SyntaxError("coefficients must be decimal strings");
  return parse_rational(j.get<std::string>());
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw SyntaxError(std::string("malformed JSON: ") + e.what());
  }
}

// "2*" prefix for a coefficient multiplying a basis symbol, with the sign
// handled by the caller.
std::string coefficient_prefix(const Rational& magnitude) {
  return magnitude == 1 ? std::string() : to_string(magnitude) + "*";
}

std::string symbol(BasisTag b, const Partition& lambda) {
  std::string out(basis_name(b));
  out += '[';
  out += lambda.empty() ? std::string() : to_string(lambda);
  out += ']';
  return out;
}

template <class Terms, class Render>
std::string join_signed(const Terms& terms, Render render) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : terms) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = negative ? Rational(-c) : c;
    out += coefficient_prefix(magnitude) + render(key);
  }
  return out;
}

std::string aligned_rows(const std::vector<std::vector<std::string>>& cells,
                         bool left_align_first) {
  std::vector<std::size_t> width;
  for (const auto& row : cells) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
  }
  std::string out;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) line += "  ";
      const std::string pad(width[j] - row[j].size(), ' ');
      line += (j == 0 && left_align_first) ? row[j] + pad : pad + row[j];
    }
    line.erase(line.find_last_not_of(' ') + 1);
    out += line + "\n";
  }
  return out;
}

}  // namespace

// -- Element literals ---------------------------------------------------------------

SymElement parse_element(std::string_view text) {
  const std::string original(text);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw SyntaxError("malformed element '" + original + "': expected basis:terms, e.g. s:1*2,1");
  }
  const BasisTag basis = parse_basis(trim(text.substr(0, colon)));
  const std::string body = trim(text.substr(colon + 1));
  SymElement out(basis);
  if (body.empty()) throw SyntaxError("malformed element '" + original + "': no terms");
  if (body == "0") return out;

  // Split at '+' or '-' that start a new term, i.e. not right after '*'
  // and not the first character of a term.
  std::vector<std::string> terms;
  std::string current;
  for (char ch : body) {
    if ((ch == '+' || ch == '-') && !trim(current).empty() && trim(current).back() != '*') {
      terms.push_back(trim(current));
      current.clear();
      if (ch == '-') current += '-';
      continue;
    }
    current += ch;
  }
  terms.push_back(trim(current));

  for (std::string term : terms) {
    Rational sign = 1;
    if (!term.empty() && (term.front() == '+' || term.front() == '-')) {
      if (term.front() == '-') sign = -1;
      term = trim(std::string_view(term).substr(1));
    }
    if (term.empty()) throw SyntaxError("malformed element '" + original + "': empty term");
    const auto star = term.find('*');
    if (star == std::string::npos) {
      out.add_term(parse_partition(term), sign);
    } else {
      const Rational c = parse_rational(trim(std::string_view(term).substr(0, star)));
      out.add_term(parse_partition(trim(std::string_view(term).substr(star + 1))), sign * c);
    }
  }
  return out;
}

// -- JSON ---------------------------------------------------------------------------------

std::string to_json(const SymElement& f) {
  Json terms = Json::array();
  for (const auto& [lambda, c] : f.terms()) {
    terms.push_back(Json{{"partition", partition_json(lambda)}, {"coeff", to_string(c)}});
  }
  return Json{{"basis", std::string(basis_name(f.basis()))}, {"terms", terms}}.dump();
}

SymElement element_from_json(std::string_view json) {
  const Json j = parse_json(json);
  if (!j.is_object() || !j.contains("basis") || !j.contains("terms") ||
      !j["basis"].is_string() || !j["terms"].is_array()) {
    throw SyntaxError("element JSON needs a \"basis\" string and a \"terms\" array");
  }
  SymElement out(parse_basis(j["basis"].get<std::string>()));
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("partition") || !t.contains("coeff")) {
      throw SyntaxError("each term needs \"partition\" and \"coeff\"");
    }
    out.add_term(partition_from(t["partition"]), rational_from(t["coeff"]));
  }
  return out;
}

std::string to_json(const TensorElement& t) {
  Json out = Json::array();
  for (const auto& [key, c] : t.terms()) {
    out.push_back(Json{{"left", partition_json(key.first)},
                       {"right", partition_json(key.second)},
                       {"coeff", to_string(c)}});
  }
  return out.dump();
}

TensorElement tensor_from_json(std::string_view json, BasisTag left, BasisTag right) {
  const Json j = parse_json(json);
  if (!j.is_array()) throw SyntaxError("tensor JSON must be an array");
  TensorElement out(left, right);
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("left") || !t.contains("right") || !t.contains("coeff")) {
      throw SyntaxError("each tensor term needs \"left\", \"right\" and \"coeff\"");
    }
    out.add_term(partition_from(t["left"]), partition_from(t["right"]), rational_from(t["coeff"]));
  }
  return out;
}

namespace {
Json tableau_json(const Tableau& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows()) rows.push_back(row);
  return rows;
}
}  // namespace

std::string to_json(const Tableau& t) { return tableau_json(t).dump(); }

std::string to_json(const std::vector<Tableau>& ts) {
  Json out = Json::array();
  for (const auto& t : ts) out.push_back(tableau_json(t));
  return out.dump();
}

std::string to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    out.push_back(std::move(row));
  }
  return out.dump();
}

Matrix matrix_from_json(std::string_view json) {
  const Json j = parse_json(json);
  if (!j.is_array()) throw SyntaxError("matrix JSON must be an array of rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw SyntaxError("matrix rows must be arrays");
    auto& r = rows.emplace_back();
    for (const auto& v : row) r.push_back(rational_from(v));
    if (r.size() != rows.front().size()) throw SyntaxError("matrix rows differ in length");
  }
  return Matrix::from_rows(rows);
}

std::string to_json(const ClassFunction& chi) {
  Json values = Json::array();
  for (const auto& [mu, v] : chi.values()) {
    values.push_back(Json{{"class", partition_json(mu)}, {"value", to_string(v)}});
  }
  return Json{{"n", chi.degree()}, {"values", values}}.dump();
}

std::string to_json(const CharacterTable& table) {
  Json parts = Json::array();
  for (const auto& p : table.partitions) parts.push_back(partition_json(p));
  Json values = Json::array();
  for (const auto& row : table.values) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(to_string(v));
    values.push_back(std::move(r));
  }
  return Json{{"n", table.n}, {"partitions", parts}, {"values", values}}.dump();
}

std::string to_json(const PartitionMap<Integer>& multiplicities) {
  Json out = Json::array();
  for (const auto& [lambda, m] : multiplicities) {
    out.push_back(Json{{"partition", partition_json(lambda)}, {"multiplicity", to_string(m)}});
  }
  return out.dump();
}

std::string to_json(const Polynomial& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) {
    terms.push_back(Json{{"exponents", e}, {"coeff", to_string(c)}});
  }
  return Json{{"variables", f.variables()}, {"terms", terms}}.dump();
}

// -- Text ---------------------------------------------------------------------------------

std::string to_text(const SymElement& f) {
  return join_signed(f.terms(), [&](const Partition& p) { return symbol(f.basis(), p); });
}

std::string to_text(const TensorElement& t) {
  return join_signed(t.terms(), [&](const TensorElement::Key& k) {
    return symbol(t.left_basis(), k.first) + " (x) " + symbol(t.right_basis(), k.second);
  });
}

std::string to_text(const Tableau& t) {
  std::string out;
  const auto& inner = t.shape().inner;
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    std::string line;
    for (int k = 0; k < inner[r]; ++k) line += ". ";
    for (std::size_t j = 0; j < t.rows()[r].size(); ++j) {
      if (j > 0) line += ' ';
      line += std::to_string(t.rows()[r][j]);
    }
    out += line + "\n";
  }
  return out;
}

std::string to_text(const Matrix& m) {
  std::vector<std::vector<std::string>> cells(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) cells[i].push_back(to_string(m(i, j)));
  }
  return aligned_rows(cells, false);
}

std::string to_text(const ClassFunction& chi) {
  std::vector<std::vector<std::string>> cells;
  for (const auto& [mu, v] : chi.values()) cells.push_back({to_string(mu), to_string(v)});
  return aligned_rows(cells, true);
}

std::string to_text(const CharacterTable& table) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{""};
  for (const auto& mu : table.partitions) header.push_back(to_string(mu));
  cells.push_back(std::move(header));
  for (std::size_t i = 0; i < table.partitions.size(); ++i) {
    std::vector<std::string> row{to_string(table.partitions[i])};
    for (const auto& v : table.values[i]) row.push_back(to_string(v));
    cells.push_back(std::move(row));
  }
  return aligned_rows(cells, true);
}

std::string to_text(const PartitionMap<Integer>& multiplicities) {
  std::vector<std::vector<std::string>> cells;
  for (const auto& [lambda, m] : multiplicities) cells.push_back({to_string(lambda), to_string(m)});
  return aligned_rows(cells, true);
}

}  // namespace symf
