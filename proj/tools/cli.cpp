#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "symf/characters.hpp"
#include "symf/error.hpp"
#include "symf/hopf.hpp"
#include "symf/io.hpp"
#include "symf/partition.hpp"
#include "symf/permutation.hpp"
#include "symf/reps.hpp"
#include "symf/symfunc.hpp"
#include "symf/tableau.hpp"

namespace symf::cli {

namespace {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Argument parsing helpers

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string piece;
  std::istringstream in(text);
  while (std::getline(in, piece, sep)) out.push_back(piece);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

int parse_int(const std::string& text, std::string_view what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw SyntaxError("malformed " + std::string(what) + " '" + text + "': expected an integer");
}

int parse_nonnegative(const std::string& text, std::string_view what) {
  const int v = parse_int(text, what);
  if (v < 0) throw DomainError(std::string(what) + " must be nonnegative, got " + text);
  return v;
}

/// Comma- or space-separated one-line permutation word.
Permutation parse_word_permutation(std::string text) {
  std::replace(text.begin(), text.end(), ',', ' ');
  return parse_permutation(text);
}

std::vector<int> parse_int_list(const std::string& text, std::string_view what) {
  std::vector<int> out;
  for (const auto& piece : split(text, ',')) out.push_back(parse_int(piece, what));
  return out;
}

Tableau parse_tableau_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception&) {
    throw SyntaxError("malformed tableau '" + text + "': expected JSON like [[1,2],[3]]");
  }
  std::vector<std::vector<int>> rows;
  if (!j.is_array()) throw SyntaxError("a tableau must be an array of rows");
  for (const auto& row : j) {
    if (!row.is_array()) throw SyntaxError("tableau rows must be arrays");
    auto& r = rows.emplace_back();
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw SyntaxError("tableau entries must be integers");
      r.push_back(v.get<int>());
    }
  }
  return Tableau(std::move(rows));
}

MatrixRep parse_rep(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw SyntaxError("malformed representation '" + text +
                      "': expected kind:argument, e.g. defining:3 or specht:2,1");
  }
  const std::string kind = text.substr(0, colon);
  const std::string arg = text.substr(colon + 1);
  if (kind == "young") return young_module(parse_partition(arg));
  if (kind == "specht") return specht_module(parse_partition(arg));
  return classical_rep(parse_classical_kind(kind), parse_int(arg, "degree"));
}

SubgroupSpec parse_subgroup(const std::string& text) {
  const auto colon = text.find(':');
  const std::string kind = colon == std::string::npos ? text : text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? std::string() : text.substr(colon + 1);
  if (kind == "young") {
    std::vector<int> composition = parse_int_list(arg, "composition");
    return SubgroupSpec::young(composition);
  }
  if (kind == "elements") {
    std::vector<Permutation> elements;
    for (const auto& w : split(arg, ';')) elements.push_back(parse_word_permutation(w));
    if (elements.empty()) throw SyntaxError("subgroup needs at least one element");
    const int n = elements.front().degree();
    return SubgroupSpec::from_elements(n, std::move(elements));
  }
  throw SyntaxError("malformed subgroup '" + text +
                    "': expected young:2,1 or elements:1,2,3;1,3,2");
}

// ---------------------------------------------------------------------------
// Output

struct Output {
  std::ostream& out;
  bool json = false;

  void integer(const Integer& v) const { out << to_string(v) << '\n'; }
  void rational(const Rational& v) const {
    out << (json ? "\"" + to_string(v) + "\"" : to_string(v)) << '\n';
  }
  void boolean(bool v) const { out << (v ? "true" : "false") << '\n'; }
  void partition(const Partition& p) const {
    if (json) {
      out << Json(p.vec()).dump() << '\n';
    } else {
      out << to_string(p) << '\n';
    }
  }
  template <class T>
  void value(const T& v) const {
    if (json) {
      out << to_json(v) << '\n';
    } else {
      std::string text = to_text(v);
      if (text.empty() || text.back() != '\n') text += '\n';
      out << text;
    }
  }
};

std::string rep_json(const MatrixRep& rep) {
  Json gens = Json::array();
  for (const auto& g : rep.generators()) gens.push_back(Json::parse(to_json(g)));
  return Json{{"degree", rep.degree()}, {"dim", rep.dim()}, {"generators", gens}}.dump();
}

std::string rep_text(const MatrixRep& rep) {
  std::string out = "degree " + std::to_string(rep.degree()) + ", dimension " +
                    std::to_string(rep.dim()) + "\n";
  for (std::size_t i = 0; i < rep.generators().size(); ++i) {
    out += "X(s_" + std::to_string(i + 1) + ")\n" + to_text(rep.generators()[i]);
  }
  return out;
}

std::string subgroup_character_text(const std::map<Permutation, Rational>& chi) {
  std::string out;
  for (const auto& [h, v] : chi) out += to_string(h) + "  " + to_string(v) + "\n";
  return out;
}

std::string subgroup_character_json(const std::map<Permutation, Rational>& chi) {
  Json out = Json::array();
  for (const auto& [h, v] : chi) {
    std::vector<int> word(h.word().begin(), h.word().end());
    out.push_back(Json{{"element", word}, {"value", to_string(v)}});
  }
  return out.dump();
}

// ---------------------------------------------------------------------------
// Command table

using Action = std::function<void(const Output&)>;

class Commands {
 public:
  explicit Commands(CLI::App& app) : app_(app) {}

  CLI::App* add(const std::string& name, const std::string& description, Action action) {
    CLI::App* sub = app_.add_subcommand(name, description);
    actions_.emplace(sub, std::move(action));
    return sub;
  }

  const Action* selected() const {
    for (const auto& [sub, action] : actions_) {
      if (sub->parsed()) return &action;
    }
    return nullptr;
  }

 private:
  CLI::App& app_;
  std::map<CLI::App*, Action> actions_;
};

// Every string argument is stored here so that parsing happens inside the
// command action, where library exceptions map to exit codes.
struct Args {
  std::string a, b, c;
  std::string to;  // empty: the command's natural basis
  std::string left = "s";
  std::string right = "s";
  std::string pair = "s,s";
  std::string perm;
  std::string values;
  std::string character;
  std::string subgroup;
  std::string subgroup_rep = "trivial";
  std::string transversal;
  std::string degree;
  int vars = 0;
  int max_entry = 0;
  int multiplicity = 1;
  int table_cap = kDefaultCharacterTableCap;
  bool inverse = false;
  bool list = false;
  bool show_character = false;
};

void register_commands(Commands& cmd, Args& a) {
  // -- partitions and tableaux
  {
    auto* s = cmd.add("kostka", "Kostka number K_{λμ}", [&a](const Output& o) {
      const Partition lambda = parse_partition(a.a);
      const Partition mu = parse_partition(a.b);
      if (lambda.size() != mu.size()) {
        throw DomainError("kostka: |λ| = " + std::to_string(lambda.size()) +
                          " differs from |μ| = " + std::to_string(mu.size()));
      }
      if (!a.list) return o.integer(kostka(lambda, mu));
      SsytStream stream(SkewShape(lambda), std::vector<int>(mu.vec()));
      std::vector<Tableau> all;
      while (auto t = stream.next()) all.push_back(std::move(*t));
      if (o.json) {
        o.out << to_json(all) << '\n';
      } else {
        for (std::size_t i = 0; i < all.size(); ++i) o.out << (i ? "\n" : "") << to_text(all[i]);
      }
    });
    s->add_option("lambda", a.a, "shape λ")->required();
    s->add_option("mu", a.b, "content μ")->required();
    s->add_flag("--list", a.list, "print the tableaux instead of their number");
  }
  {
    auto* s = cmd.add("flambda", "number of standard tableaux f^λ", [&a](const Output& o) {
      o.integer(f_lambda(parse_partition(a.a)));
    });
    s->add_option("lambda", a.a)->required();
  }
  {
    auto* s = cmd.add("ssyt", "semistandard tableaux of a (skew) shape", [&a](const Output& o) {
      const Partition outer = parse_partition(a.a);
      const Partition inner = a.b.empty() ? Partition() : parse_partition(a.b);
      SkewShape shape(outer, inner);
      if (!a.list) return o.integer(count_ssyt(shape, a.max_entry));
      auto stream = enumerate_ssyt(shape, a.max_entry);
      std::vector<Tableau> all;
      while (auto t = stream.next()) all.push_back(std::move(*t));
      if (o.json) {
        o.out << to_json(all) << '\n';
      } else {
        for (std::size_t i = 0; i < all.size(); ++i) o.out << (i ? "\n" : "") << to_text(all[i]);
      }
    });
    s->add_option("outer", a.a)->required();
    s->add_option("inner", a.b);
    s->add_option("--max", a.max_entry, "largest entry")->required();
    s->add_flag("--list", a.list);
  }
  {
    auto* s = cmd.add("partitions", "partitions of n, descending lexicographic", [&a](const Output& o) {
      const int n = parse_nonnegative(a.a, "n");
      const auto parts = partitions_of(n);
      if (o.json) {
        Json arr = Json::array();
        for (const auto& p : parts) arr.push_back(p.vec());
        o.out << arr.dump() << '\n';
      } else {
        for (const auto& p : parts) o.out << to_string(p) << '\n';
      }
    });
    s->add_option("n", a.a)->required();
  }
  {
    auto* s = cmd.add("conjugate", "conjugate partition", [&a](const Output& o) {
      o.partition(conjugate(parse_partition(a.a)));
    });
    s->add_option("lambda", a.a)->required();
  }
  {
    auto* s = cmd.add("dominates", "whether λ dominates μ", [&a](const Output& o) {
      o.boolean(dominates(parse_partition(a.a), parse_partition(a.b)));
    });
    s->add_option("lambda", a.a)->required();
    s->add_option("mu", a.b)->required();
  }
  {
    auto* s = cmd.add("ztable", "z_λ for every λ ⊢ n", [&a](const Output& o) {
      const int n = parse_nonnegative(a.a, "n");
      PartitionMap<Integer> z;
      for (const auto& p : partitions_of(n)) z.emplace(p, z_value(p));
      if (o.json) {
        Json arr = Json::array();
        for (const auto& [p, v] : z) arr.push_back(Json{{"partition", p.vec()}, {"z", to_string(v)}});
        o.out << arr.dump() << '\n';
      } else {
        o.out << to_text(z);
      }
    });
    s->add_option("n", a.a)->required();
  }
  {
    auto* s = cmd.add("cycle-type", "cycle type of a permutation", [&a](const Output& o) {
      o.partition(cycle_type(parse_word_permutation(a.a)));
    });
    s->add_option("word", a.a, "one-line word, e.g. 2,1,3")->required();
  }
  {
    auto* s = cmd.add("rsk", "RSK correspondence (word -> P, Q) or its inverse", [&a](const Output& o) {
      if (a.inverse) {
        if (a.b.empty()) throw SyntaxError("rsk --inverse needs the tableaux P and Q");
        const auto word = rsk_inverse(parse_tableau_json(a.a), parse_tableau_json(a.b));
        if (o.json) {
          o.out << Json(word).dump() << '\n';
        } else {
          for (std::size_t i = 0; i < word.size(); ++i) o.out << (i ? "," : "") << word[i];
          o.out << '\n';
        }
        return;
      }
      const std::vector<int> word = a.a == "()" ? std::vector<int>{} : parse_int_list(a.a, "word");
      const RskPair pq = rsk(word);
      if (o.json) {
        o.out << Json{{"insertion", Json::parse(to_json(pq.insertion))},
                      {"recording", Json::parse(to_json(pq.recording))}}
                     .dump()
              << '\n';
      } else {
        o.out << "P\n" << to_text(pq.insertion) << "Q\n" << to_text(pq.recording);
      }
    });
    s->add_option("word", a.a, "word like 3,1,2; with --inverse, P as JSON")->required();
    s->add_option("recording", a.b, "with --inverse, Q as JSON");
    s->add_flag("--inverse", a.inverse);
  }

  // -- the ring Sym
  {
    auto* s = cmd.add("convert", "change of basis", [&a](const Output& o) {
      o.value(convert(parse_element(a.a), parse_basis(a.to)));
    });
    s->add_option("element", a.a, "element literal, e.g. s:1*2,1")->required();
    s->add_option("--to", a.to, "target basis m|e|h|p|s")->required();
  }
  {
    auto* s = cmd.add("multiply", "product f·g", [&a](const Output& o) {
      const SymElement f = parse_element(a.a);
      o.value(convert(multiply(f, parse_element(a.b)), a.to.empty() ? f.basis() : parse_basis(a.to)));
    });
    s->add_option("f", a.a)->required();
    s->add_option("g", a.b)->required();
    s->add_option("--to", a.to, "result basis (default: basis of f)");
  }
  {
    auto* s = cmd.add("inner", "Hall inner product ⟨f, g⟩", [&a](const Output& o) {
      o.rational(hall_inner(parse_element(a.a), parse_element(a.b)));
    });
    s->add_option("f", a.a)->required();
    s->add_option("g", a.b)->required();
  }
  {
    auto* s = cmd.add("omega", "the involution ω", [&a](const Output& o) {
      o.value(omega(parse_element(a.a)));
    });
    s->add_option("f", a.a)->required();
  }
  {
    auto* s = cmd.add("skew", "skew Schur function s_{λ/μ} in the Schur basis", [&a](const Output& o) {
      const SymElement r = skew_schur(parse_partition(a.a), parse_partition(a.b));
      o.value(a.to.empty() ? r : convert(r, parse_basis(a.to)));
    });
    s->add_option("lambda", a.a)->required();
    s->add_option("mu", a.b)->required();
    s->add_option("--to", a.to, "result basis (default s)");
  }
  {
    auto* s = cmd.add("perp", "s_μ^⊥ f", [&a](const Output& o) {
      o.value(perp(parse_partition(a.a), parse_element(a.b)));
    });
    s->add_option("mu", a.a)->required();
    s->add_option("f", a.b)->required();
  }
  {
    auto* s = cmd.add("evaluate", "f(x_1, ..., x_m)", [&a](const Output& o) {
      const Polynomial p = evaluate(parse_element(a.a), a.vars);
      o.out << (o.json ? to_json(p) : to_string(p)) << '\n';
    });
    s->add_option("f", a.a)->required();
    s->add_option("--vars", a.vars, "number of variables m")->required()->check(CLI::NonNegativeNumber);
  }
  {
    auto* s = cmd.add("counit", "ε(f) and, with --star, ε*(f) = f(1)", [&a](const Output& o) {
      const SymElement f = parse_element(a.a);
      o.rational(a.list ? counit_star(f) : counit(f));
    });
    s->add_option("f", a.a)->required();
    s->add_flag("--star", a.list);
  }

  // -- characters and coefficients
  {
    auto* s = cmd.add("char", "character value χ^λ(μ)", [&a](const Output& o) {
      const Partition lambda = parse_partition(a.a);
      const Partition mu = parse_partition(a.b);
      if (lambda.size() != mu.size()) {
        throw DomainError("char: |λ| = " + std::to_string(lambda.size()) + " differs from |μ| = " +
                          std::to_string(mu.size()));
      }
      o.integer(character(lambda, mu));
    });
    s->add_option("lambda", a.a)->required();
    s->add_option("mu", a.b)->required();
  }
  {
    auto* s = cmd.add("chartable", "character table of S_n", [&a](const Output& o) {
      o.value(character_table(parse_nonnegative(a.a, "n"), a.table_cap));
    });
    s->add_option("n", a.a)->required();
    s->add_option("--cap", a.table_cap, "largest n allowed")->capture_default_str();
  }
  {
    auto* s = cmd.add("ch", "Frobenius characteristic of a class function", [&a](const Output& o) {
      const int n = parse_nonnegative(a.a, "n");
      ClassFunction f(n);
      if (!a.character.empty()) {
        const Partition lambda = parse_partition(a.character);
        if (lambda.size() != n) throw DomainError("ch: --character must be a partition of n");
        f = irreducible_character(lambda);
      } else {
        const auto& classes = partition_list(n).items;
        const auto vals = split(a.values, ',');
        if (vals.size() != classes.size()) {
          throw DomainError("ch: expected " + std::to_string(classes.size()) +
                            " values, one per class of S_" + std::to_string(n));
        }
        for (std::size_t i = 0; i < classes.size(); ++i) f.set(classes[i], parse_rational(vals[i]));
      }
      const SymElement r = frobenius_ch(f);
      o.value(a.to.empty() ? r : convert(r, parse_basis(a.to)));
    });
    s->add_option("n", a.a)->required();
    auto* v = s->add_option("--values", a.values, "values in canonical class order, comma-separated");
    auto* c = s->add_option("--character", a.character, "use the irreducible χ^λ");
    v->excludes(c);
    s->add_option("--to", a.to, "result basis (default p)");
  }
  {
    auto* s = cmd.add("ch-inverse", "class function with the given characteristic", [&a](const Output& o) {
      const SymElement f = parse_element(a.a);
      int n = 0;
      if (!a.degree.empty()) {
        n = parse_nonnegative(a.degree, "degree");
      } else if (auto d = f.homogeneous_degree()) {
        n = *d;
      } else {
        throw DomainError("ch-inverse: input is not homogeneous; pass --degree for zero");
      }
      o.value(frobenius_inverse(f, n));
    });
    s->add_option("f", a.a)->required();
    s->add_option("--degree", a.degree);
  }
  {
    auto* s = cmd.add("lr", "Littlewood–Richardson coefficient c^λ_{μν}", [&a](const Output& o) {
      o.integer(littlewood_richardson(parse_partition(a.a), parse_partition(a.b), parse_partition(a.c)));
    });
    s->add_option("lambda", a.a)->required();
    s->add_option("mu", a.b)->required();
    s->add_option("nu", a.c)->required();
  }
  {
    auto* s = cmd.add("kronecker", "Kronecker coefficient γ^λ_{μν}", [&a](const Output& o) {
      o.integer(kronecker(parse_partition(a.a), parse_partition(a.b), parse_partition(a.c)));
    });
    s->add_option("lambda", a.a)->required();
    s->add_option("mu", a.b)->required();
    s->add_option("nu", a.c)->required();
  }
  {
    auto* s = cmd.add("kron-product", "internal product f ⋆ g", [&a](const Output& o) {
      o.value(kronecker_product(parse_element(a.a), parse_element(a.b)));
    });
    s->add_option("f", a.a)->required();
    s->add_option("g", a.b)->required();
  }
  {
    auto* s = cmd.add("youngs-rule", "multiplicities of S^λ in H^μ", [&a](const Output& o) {
      o.value(youngs_rule(parse_partition(a.a)));
    });
    s->add_option("mu", a.a)->required();
  }

  // -- Hopf structure and plethysm
  {
    auto* s = cmd.add("coproduct", "Δf = f[X+Y]", [&a](const Output& o) {
      o.value(convert(coproduct_sum(parse_element(a.a)), parse_basis(a.left), parse_basis(a.right)));
    });
    s->add_option("f", a.a)->required();
    s->add_option("--left", a.left)->capture_default_str();
    s->add_option("--right", a.right)->capture_default_str();
  }
  {
    auto* s = cmd.add("coproduct-star", "Δ*f = f[XY]", [&a](const Output& o) {
      o.value(convert(coproduct_prod(parse_element(a.a)), parse_basis(a.left), parse_basis(a.right)));
    });
    s->add_option("f", a.a)->required();
    s->add_option("--left", a.left)->capture_default_str();
    s->add_option("--right", a.right)->capture_default_str();
  }
  {
    auto* s = cmd.add("antipode", "the antipode", [&a](const Output& o) {
      o.value(antipode(parse_element(a.a)));
    });
    s->add_option("f", a.a)->required();
  }
  {
    auto* s = cmd.add("cauchy", "h_n[XY] in a pair of dual bases", [&a](const Output& o) {
      o.value(cauchy_kernel(parse_nonnegative(a.a, "n"), parse_dual_pair(a.pair)));
    });
    s->add_option("n", a.a)->required();
    s->add_option("--pair", a.pair, "s,s | h,m | m,h | p,p/z")->capture_default_str();
  }
  {
    auto* s = cmd.add("plethysm", "f[k·g]", [&a](const Output& o) {
      o.value(plethysm(parse_element(a.a), parse_element(a.b), a.multiplicity));
    });
    s->add_option("f", a.a)->required();
    s->add_option("g", a.b)->required();
    s->add_option("--multiplicity", a.multiplicity, "alphabet multiplicity k")->capture_default_str();
  }

  // -- explicit representations
  {
    auto* s = cmd.add("rep", "matrices of a representation", [&a](const Output& o) {
      const MatrixRep rep = parse_rep(a.a);
      if (!a.perm.empty()) return o.value(rep.matrix(parse_word_permutation(a.perm)));
      o.out << (o.json ? rep_json(rep) + "\n" : rep_text(rep));
    });
    s->add_option("spec", a.a, "trivial:n sign:n defining:n regular:n standard:n young:λ specht:λ")
        ->required();
    s->add_option("--perm", a.perm, "print X(π) for this one-line word");
  }
  {
    auto* s = cmd.add("decompose", "multiplicities of irreducibles", [&a](const Output& o) {
      const MatrixRep rep = parse_rep(a.a);
      if (a.show_character) return o.value(character_of(rep));
      o.value(decompose(rep));
    });
    s->add_option("spec", a.a)->required();
    s->add_flag("--character", a.show_character, "print the character instead");
  }
  {
    auto* s = cmd.add("induce", "induce a subgroup representation to S_n", [&a](const Output& o) {
      const SubgroupSpec h = parse_subgroup(a.subgroup);
      const SubgroupRep y = a.subgroup_rep == "trivial" ? SubgroupRep::trivial(h)
                            : a.subgroup_rep == "sign"  ? SubgroupRep::sign(h)
                                                        : throw SyntaxError("--rep must be trivial or sign");
      std::optional<std::vector<Permutation>> t;
      if (!a.transversal.empty()) {
        t.emplace();
        for (const auto& w : split(a.transversal, ';')) t->push_back(parse_word_permutation(w));
      }
      const MatrixRep rep = induce(y, t);
      if (!a.perm.empty()) return o.value(rep.matrix(parse_word_permutation(a.perm)));
      if (a.show_character) return o.value(character_of(rep));
      o.value(decompose(rep));
    });
    s->add_option("--subgroup", a.subgroup, "young:2,1 or elements:1,2,3;1,3,2")->required();
    s->add_option("--rep", a.subgroup_rep, "trivial or sign")->capture_default_str();
    s->add_option("--transversal", a.transversal, "coset representatives, e.g. 1,2,3;2,1,3;3,2,1");
    s->add_option("--perm", a.perm, "print the induced matrix of this permutation");
    s->add_flag("--character", a.show_character, "print the character");
  }
  {
    auto* s = cmd.add("restrict", "restrict a representation to a subgroup", [&a](const Output& o) {
      const SubgroupRep r = restrict(parse_rep(a.a), parse_subgroup(a.subgroup));
      if (!a.perm.empty()) return o.value(r.matrix(parse_word_permutation(a.perm)));
      const auto chi = r.character();
      o.out << (o.json ? subgroup_character_json(chi) + "\n" : subgroup_character_text(chi));
    });
    s->add_option("spec", a.a)->required();
    s->add_option("--subgroup", a.subgroup)->required();
    s->add_option("--perm", a.perm, "print the matrix of this subgroup element");
  }
  {
    auto* s = cmd.add("tensor", "decompose a tensor product of representations", [&a](const Output& o) {
      const MatrixRep rep = tensor_product(parse_rep(a.a), parse_rep(a.b));
      if (a.show_character) return o.value(character_of(rep));
      o.value(decompose(rep));
    });
    s->add_option("first", a.a)->required();
    s->add_option("second", a.b)->required();
    s->add_flag("--character", a.show_character);
  }
  {
    auto* s = cmd.add("ext2", "exterior square of a representation", [&a](const Output& o) {
      const ClassFunction chi = exterior_square_character(character_of(parse_rep(a.a)));
      if (a.show_character) return o.value(chi);
      o.value(decompose(chi));
    });
    s->add_option("spec", a.a)->required();
    s->add_flag("--character", a.show_character);
  }
  {
    auto* s = cmd.add("gl-char", "character s_λ(x_1..x_m) of the GL_m module V^λ", [&a](const Output& o) {
      const Polynomial p = gl_character(parse_partition(a.a), parse_nonnegative(a.b, "m"));
      o.out << (o.json ? to_json(p) : to_string(p)) << '\n';
    });
    s->add_option("lambda", a.a)->required();
    s->add_option("m", a.b)->required();
  }
  {
    auto* s = cmd.add("gl-dim", "dimension of V^λ for GL_m", [&a](const Output& o) {
      o.integer(gl_dimension(parse_partition(a.a), parse_nonnegative(a.b, "m")));
    });
    s->add_option("lambda", a.a)->required();
    s->add_option("m", a.b)->required();
  }
  {
    auto* s = cmd.add("schur-weyl", "check m^n = Σ f^λ dim V^λ", [&a](const Output& o) {
      o.boolean(schur_weyl_check(parse_nonnegative(a.a, "n"), parse_nonnegative(a.b, "m")));
    });
    s->add_option("n", a.a)->required();
    s->add_option("m", a.b)->required();
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact symmetric functions and symmetric group representations", "symf"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  if (const char* env = std::getenv("SYMF_FORMAT")) format = env;
  int max_deg = symf::max_degree();
  if (const char* env = std::getenv("SYMF_MAX_DEGREE")) {
    try {
      max_deg = parse_nonnegative(env, "SYMF_MAX_DEGREE");
    } catch (const DomainError& e) {
      err << "error: " << e.what() << '\n';
      return kUsageError;
    }
  }
  RepCaps caps = rep_caps();

  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->envname("SYMF_FORMAT");
  app.add_option("--max-degree", max_deg, "largest degree for basis transitions")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--regular-cap", caps.regular, "largest n for the regular representation");
  app.add_option("--young-cap", caps.young_module, "largest n for Young permutation modules");
  app.add_option("--specht-cap", caps.specht_module, "largest n for Specht modules");

  Args a;
  Commands commands(app);
  register_commands(commands, a);

  // CLI11 expects argv in reverse order when given a vector.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o;
    std::ostringstream e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kOk : kUsageError;
  }
  if (format != "text" && format != "json") {
    err << "error: --format must be text or json\n";
    return kUsageError;
  }

  const Action* action = commands.selected();
  if (action == nullptr) {
    err << "error: no subcommand given\n";
    return kUsageError;
  }
  // Settings are process-wide; put them back so repeated calls stay independent.
  struct Restore {
    int degree = symf::max_degree();
    RepCaps caps = rep_caps();
    ~Restore() {
      set_max_degree(degree);
      set_rep_caps(caps);
    }
  } restore;
  try {
    set_max_degree(max_deg);
    set_rep_caps(caps);
    (*action)(Output{out, format == "json"});
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kDomainError;
  }
  return kOk;
}

}  // namespace symf::cli
