#include <bzeta/bailey/pair_file.hpp>

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace bzeta::bailey {

DefinitionError::DefinitionError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Field {
  std::string value;
  std::size_t line = 0;
  std::size_t column = 0;
};

std::string trim(std::string_view s, std::size_t* leading = nullptr) {
  std::size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  std::size_t e = s.size();
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  if (leading) *leading = b;
  return std::string(s.substr(b, e - b));
}

ExprPtr parse_field_expression(const Field& f, std::size_t offset, std::string_view text) {
  try {
    return parse_expression(text);
  } catch (const ExpressionError& err) {
    throw DefinitionError(err.what(), f.line, f.column + offset + err.column() - 1);
  }
}

std::size_t parse_count(const Field& f, const char* key) {
  std::size_t used = 0;
  long long v = -1;
  try {
    v = std::stoll(f.value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != f.value.size() || v < 0) {
    throw DefinitionError(std::string(key) + " must be a nonnegative integer", f.line, f.column);
  }
  return static_cast<std::size_t>(v);
}

Rational parse_field_rational(const Field& f, const char* key) {
  try {
    return qcore::parse_rational(f.value);
  } catch (const std::exception& err) {
    throw DefinitionError(std::string(key) + ": " + err.what(), f.line, f.column);
  }
}

const std::set<std::string, std::less<>>& known_keys() {
  static const std::set<std::string, std::less<>> keys{"name", "kind",  "a_param", "alpha", "beta",
                                                       "s",    "q",     "depth",   "order"};
  return keys;
}

}  // namespace

PairDefinition parse_pair_definition(std::string_view text) {
  std::map<std::string, Field, std::less<>> fields;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view raw = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (trim(raw).empty()) {
      if (end == text.size()) break;
      continue;
    }
    const auto eq = raw.find('=');
    if (eq == std::string_view::npos) {
      std::size_t lead = 0;
      trim(raw, &lead);
      throw DefinitionError("expected 'key = value'", line_no, lead + 1);
    }
    std::size_t key_lead = 0;
    const std::string key = trim(raw.substr(0, eq), &key_lead);
    if (!known_keys().contains(key)) {
      throw DefinitionError("unknown key '" + key + "'", line_no, key_lead + 1);
    }
    if (fields.contains(key)) {
      throw DefinitionError("duplicate key '" + key + "'", line_no, key_lead + 1);
    }
    std::size_t value_lead = 0;
    const std::string value = trim(raw.substr(eq + 1), &value_lead);
    const std::size_t column = eq + 1 + value_lead + 1;
    if (value.empty()) throw DefinitionError("empty value for '" + key + "'", line_no, column);
    fields[key] = Field{value, line_no, column};
    if (end == text.size()) break;
  }

  for (const char* required : {"name", "a_param", "alpha", "depth", "order"}) {
    if (!fields.contains(required)) {
      throw DefinitionError(std::string("missing required key '") + required + "'", line_no, 1);
    }
  }

  PairDefinition def;
  def.name = fields["name"].value;
  if (auto it = fields.find("kind"); it != fields.end()) {
    if (it->second.value == "classical") {
      def.kind = PairDefinition::Kind::classical;
    } else if (it->second.value == "zeta") {
      def.kind = PairDefinition::Kind::zeta;
    } else {
      throw DefinitionError("kind must be 'classical' or 'zeta'", it->second.line,
                            it->second.column);
    }
  }
  if (auto it = fields.find("s"); it != fields.end()) def.s = parse_field_rational(it->second, "s");
  if (auto it = fields.find("q"); it != fields.end()) {
    def.q = parse_field_rational(it->second, "q");
    if (*def.q <= 0 || *def.q >= 1) {
      throw DefinitionError("q must lie in (0,1)", it->second.line, it->second.column);
    }
  }
  def.depth = parse_count(fields["depth"], "depth");
  def.order = parse_count(fields["order"], "order");

  const Field& a_field = fields["a_param"];
  std::size_t piece_start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= a_field.value.size(); ++i) {
    const char c = i < a_field.value.size() ? a_field.value[i] : ',';
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      std::size_t lead = 0;
      const std::string piece =
          trim(std::string_view(a_field.value).substr(piece_start, i - piece_start), &lead);
      if (piece.empty()) {
        throw DefinitionError("empty a_param candidate", a_field.line,
                              a_field.column + piece_start);
      }
      ExprPtr e = parse_field_expression(a_field, piece_start + lead, piece);
      try {
        evaluate_monomial(*e, def.s);
      } catch (const ExpressionError& err) {
        throw DefinitionError(err.what(), a_field.line,
                              a_field.column + piece_start + lead + err.column() - 1);
      }
      def.a_candidates.push_back(std::move(e));
      piece_start = i + 1;
    }
  }
  def.alpha = parse_field_expression(fields["alpha"], 0, fields["alpha"].value);
  if (auto it = fields.find("beta"); it != fields.end()) {
    def.beta = parse_field_expression(it->second, 0, it->second.value);
  }
  return def;
}

PairDefinition load_pair_definition(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open pair definition " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_pair_definition(buffer.str());
}

std::string to_text(const PairDefinition& def) {
  std::ostringstream out;
  out << "name = " << def.name << '\n';
  out << "kind = " << (def.kind == PairDefinition::Kind::zeta ? "zeta" : "classical") << '\n';
  out << "a_param = ";
  for (std::size_t i = 0; i < def.a_candidates.size(); ++i) {
    if (i != 0) out << ", ";
    out << to_string(*def.a_candidates[i]);
  }
  out << '\n';
  out << "alpha = " << to_string(*def.alpha) << '\n';
  if (def.beta) out << "beta = " << to_string(*def.beta) << '\n';
  if (def.s) out << "s = " << qcore::to_string(*def.s) << '\n';
  if (def.q) out << "q = " << qcore::to_string(*def.q) << '\n';
  out << "depth = " << def.depth << '\n';
  out << "order = " << def.order << '\n';
  return out.str();
}

bool equivalent(const PairDefinition& a, const PairDefinition& b) {
  if (a.name != b.name || a.kind != b.kind || a.s != b.s || a.q != b.q || a.depth != b.depth ||
      a.order != b.order || a.a_candidates.size() != b.a_candidates.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.a_candidates.size(); ++i) {
    if (!equivalent(*a.a_candidates[i], *b.a_candidates[i])) return false;
  }
  if (!equivalent(*a.alpha, *b.alpha)) return false;
  if (static_cast<bool>(a.beta) != static_cast<bool>(b.beta)) return false;
  return !a.beta || equivalent(*a.beta, *b.beta);
}

const CandidateReport* DefinitionOutcome::validated() const {
  for (const auto& c : candidates) {
    if (c.report.ok()) return &c;
  }
  return nullptr;
}

VerificationReport::Status DefinitionOutcome::status() const {
  if (validated()) return VerificationReport::Status::verified;
  for (const auto& c : candidates) {
    if (c.report.status != VerificationReport::Status::mismatch) {
      return VerificationReport::Status::inconclusive;
    }
  }
  return VerificationReport::Status::mismatch;
}

namespace {

template <typename Algebra>
Sequence<typename Algebra::Element> sequence_of(const ExprPtr& expr, const Algebra& alg,
                                                const std::optional<Rational>& s,
                                                const char* field) {
  using E = typename Algebra::Element;
  return Sequence<E>([expr, alg, s, field](std::size_t n) -> E {
    Environment env;
    env.indices["n"] = static_cast<std::int64_t>(n);
    env.s = s;
    try {
      return evaluate(*expr, alg, env);
    } catch (const ExpressionError& err) {
      throw std::runtime_error(std::string(field) + " at n=" + std::to_string(n) + ", column " +
                               std::to_string(err.column()) + ": " + err.what());
    }
  });
}

template <typename Algebra>
DefinitionOutcome run(const PairDefinition& def, const Algebra& alg,
                      const std::optional<ChainParameters>& chain, std::size_t steps,
                      std::size_t depth) {
  using E = typename Algebra::Element;
  DefinitionOutcome outcome;
  outcome.name = def.name;
  const Sequence<E> alpha = sequence_of(def.alpha, alg, def.s, "alpha");
  const std::string s_label = def.s ? qcore::to_string(*def.s) : "s";
  for (const ExprPtr& candidate : def.a_candidates) {
    const Monomial a = evaluate_monomial(*candidate, def.s);
    VerificationReport report;
    if (def.kind == PairDefinition::Kind::zeta) {
      BaileyZetaPair<Algebra> zp =
          def.beta ? BaileyZetaPair<Algebra>{def.name, a, s_label, alpha,
                                             sequence_of(def.beta, alg, def.s, "beta")}
                   : zeta_pair_from_alpha(alg, def.name, a, s_label, alpha);
      if (chain && steps > 0) {
        BaileyPair<Algebra> pair = zeta_to_classical(alg, zp);
        for (std::size_t i = 0; i < steps; ++i) pair = chain_step(alg, pair, *chain);
        report = verify_pair(alg, pair, depth);
      } else {
        report = verify_pair(alg, zp, depth);
      }
    } else {
      BaileyPair<Algebra> pair =
          def.beta ? BaileyPair<Algebra>{def.name, a, alpha,
                                         sequence_of(def.beta, alg, def.s, "beta")}
                   : pair_from_alpha(alg, def.name, a, alpha);
      if (chain) {
        for (std::size_t i = 0; i < steps; ++i) pair = chain_step(alg, pair, *chain);
      }
      report = verify_pair(alg, pair, depth);
    }
    outcome.candidates.push_back({to_string(*candidate), std::move(report)});
  }
  return outcome;
}

DefinitionOutcome dispatch(const PairDefinition& def, const std::optional<ChainParameters>& chain,
                           std::size_t steps, std::size_t depth, std::size_t order) {
  if (def.q) return run(def, RationalAlgebra(*def.q), chain, steps, depth);
  return run(def, SeriesAlgebra(order), chain, steps, depth);
}

}  // namespace

DefinitionOutcome verify_definition(const PairDefinition& def, std::size_t depth,
                                    std::size_t order) {
  return dispatch(def, std::nullopt, 0, depth, order);
}

DefinitionOutcome verify_chained_definition(const PairDefinition& def,
                                            const ChainParameters& params, std::size_t steps,
                                            std::size_t depth, std::size_t order) {
  return dispatch(def, params, steps, depth, order);
}

}  // namespace bzeta::bailey
