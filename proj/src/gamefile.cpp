#include "polyrep/gamefile.hpp"

#include <fstream>
#include <sstream>

namespace polyrep {

namespace {

struct Line {
  int number = 0;
  std::string text;
};

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string strip(const std::string& raw) {
  std::string s = raw;
  if (auto hash = s.find('#'); hash != std::string::npos) s.erase(hash);
  auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

Vector<Rational> parse_row(const std::string& text, int line) {
  Vector<Rational> row;
  for (const std::string& tok : split_ws(text)) {
    try {
      row.push_back(parse_rational(tok));
    } catch (const std::invalid_argument&) {
      throw SyntaxError("bad rational '" + tok + "'", line);
    }
  }
  return row;
}

class Reader {
 public:
  explicit Reader(std::istream& in) {
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
      ++number;
      std::string text = strip(raw);
      if (!text.empty()) lines_.push_back({number, text});
    }
  }

  bool done() const { return pos_ >= lines_.size(); }
  const Line& peek() const { return lines_[pos_]; }
  Line take() { return lines_[pos_++]; }
  int last_line() const { return lines_.empty() ? 0 : lines_.back().number; }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

// A header line "key: rest"; rejects anything else.
std::pair<std::string, std::string> key_of(const Line& line) {
  auto colon = line.text.find(':');
  if (colon == std::string::npos)
    throw SyntaxError("expected 'key: value', got '" + line.text + "'", line.number);
  std::string key = strip(line.text.substr(0, colon));
  std::string rest = strip(line.text.substr(colon + 1));
  if (key.empty() || key.find(' ') != std::string::npos)
    throw SyntaxError("malformed key '" + key + "'", line.number);
  return {key, rest};
}

Matrix<Rational> parse_matrix(Reader& reader, std::size_t n, int header_line) {
  Matrix<Rational> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (reader.done())
      throw SyntaxError("matrix ends after " + std::to_string(i) + " of " + std::to_string(n) +
                            " rows",
                        reader.last_line());
    Line line = reader.take();
    Vector<Rational> row = parse_row(line.text, line.number);
    if (row.size() != n)
      throw SemanticError("matrix row has " + std::to_string(row.size()) + " entries, expected " +
                              std::to_string(n),
                          line.number);
    for (std::size_t j = 0; j < n; ++j) m(i, j) = row[j];
  }
  (void)header_line;
  return m;
}

double parse_float(const std::string& tok, int line) {
  try {
    std::size_t used = 0;
    double v = std::stod(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw SyntaxError("bad float '" + tok + "'", line);
  }
}

IntegrationDefaults parse_integration(const std::string& rest, int line) {
  IntegrationDefaults defaults;
  for (const std::string& tok : split_ws(rest)) {
    auto eq = tok.find('=');
    if (eq == std::string::npos)
      throw SyntaxError("expected option=value, got '" + tok + "'", line);
    std::string key = tok.substr(0, eq), value = tok.substr(eq + 1);
    if (key == "rtol") {
      defaults.rtol = parse_float(value, line);
    } else if (key == "atol") {
      defaults.atol = parse_float(value, line);
    } else if (key == "max_step") {
      defaults.max_step = parse_float(value, line);
    } else if (key == "method") {
      if (value == "rk4")
        defaults.method = IntegrationMethod::rk4;
      else if (value == "rk45")
        defaults.method = IntegrationMethod::rk45;
      else
        throw SemanticError("unknown method '" + value + "'", line);
    } else if (key == "mode") {
      if (value == "prism")
        defaults.mode = CoordinateMode::prism;
      else if (value == "chart")
        defaults.mode = CoordinateMode::chart;
      else if (value == "auto")
        defaults.mode = CoordinateMode::automatic;
      else
        throw SemanticError("unknown mode '" + value + "'", line);
    } else {
      throw SyntaxError("unknown integration option '" + key + "'", line);
    }
  }
  return defaults;
}

}  // namespace

IntegratorConfig IntegrationDefaults::apply(IntegratorConfig base) const {
  if (rtol) base.rtol = *rtol;
  if (atol) base.atol = *atol;
  if (max_step) base.max_step = *max_step;
  if (method) base.method = *method;
  if (mode) base.mode = *mode;
  return base;
}

std::optional<ConservativeDecomposition> GameFile::candidate() const {
  if (!skew_model || !scaling || !equilibrium) return std::nullopt;
  ConservativeDecomposition d;
  d.skew_model = *skew_model;
  d.scaling = *scaling;
  d.equilibrium = *equilibrium;
  const std::size_t n = signature.dimension();
  d.offsets = Matrix<Rational>(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      d.offsets(i, j) = payoff(i, j) - d.skew_model(i, j) * d.scaling[signature.group_of(j)];
  return d;
}

GameFile parse_game_file(std::istream& in) {
  Reader reader(in);
  if (reader.done()) throw SyntaxError("empty game file", 0);

  {
    Line line = reader.take();
    auto [key, rest] = key_of(line);
    if (key != "format") throw SyntaxError("first entry must be 'format: v1'", line.number);
    if (rest != "v1") throw SemanticError("unsupported format '" + rest + "'", line.number);
  }

  std::optional<Signature> sig;
  std::optional<Matrix<Rational>> payoff;
  GameFile file;
  bool saw_integration = false;

  while (!reader.done()) {
    Line line = reader.take();
    auto [key, rest] = key_of(line);

    auto need_signature = [&]() -> const Signature& {
      if (!sig) throw SemanticError("'" + key + "' requires 'signature' first", line.number);
      return *sig;
    };
    auto expect_bare = [&] {
      if (!rest.empty())
        throw SyntaxError("'" + key + ":' takes no inline value, rows follow", line.number);
    };

    if (key == "signature") {
      if (sig) throw SemanticError("duplicate 'signature'", line.number);
      std::vector<std::size_t> parts;
      for (const std::string& tok : split_ws(rest)) {
        Rational r;
        try {
          r = parse_rational(tok);
        } catch (const std::invalid_argument&) {
          throw SyntaxError("bad group size '" + tok + "'", line.number);
        }
        if (r.get_den() != 1 || r <= 0)
          throw SemanticError("group size must be a positive integer", line.number);
        parts.push_back(r.get_num().get_ui());
      }
      if (parts.empty()) throw SemanticError("signature needs at least one group", line.number);
      sig = Signature(parts);
    } else if (key == "payoff") {
      expect_bare();
      if (payoff) throw SemanticError("duplicate 'payoff'", line.number);
      payoff = parse_matrix(reader, need_signature().dimension(), line.number);
    } else if (key == "skew_model") {
      expect_bare();
      if (file.skew_model) throw SemanticError("duplicate 'skew_model'", line.number);
      file.skew_model = parse_matrix(reader, need_signature().dimension(), line.number);
    } else if (key == "scaling") {
      if (file.scaling) throw SemanticError("duplicate 'scaling'", line.number);
      Vector<Rational> row = parse_row(rest, line.number);
      if (row.size() != need_signature().groups())
        throw SemanticError("scaling needs one entry per group", line.number);
      file.scaling = std::move(row);
    } else if (key == "equilibrium") {
      if (file.equilibrium) throw SemanticError("duplicate 'equilibrium'", line.number);
      Vector<Rational> row = parse_row(rest, line.number);
      if (row.size() != need_signature().dimension())
        throw SemanticError("equilibrium needs one entry per strategy", line.number);
      file.equilibrium = std::move(row);
    } else if (key == "integration") {
      if (saw_integration) throw SemanticError("duplicate 'integration'", line.number);
      saw_integration = true;
      file.integration = parse_integration(rest, line.number);
    } else if (key == "format") {
      throw SemanticError("duplicate 'format'", line.number);
    } else {
      throw SyntaxError("unknown key '" + key + "'", line.number);
    }
  }

  if (!sig) throw SemanticError("missing 'signature'", reader.last_line());
  if (!payoff) throw SemanticError("missing 'payoff'", reader.last_line());
  file.signature = *sig;
  file.payoff = std::move(*payoff);

  if (file.scaling)
    for (const Rational& l : *file.scaling)
      if (l == 0) throw SemanticError("scaling entries must be nonzero", reader.last_line());

  return file;
}

GameFile parse_game_file_text(const std::string& text) {
  std::istringstream in(text);
  return parse_game_file(in);
}

GameFile load_game_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse_game_file(in);
}

std::string serialize_game_file(const GameFile& file) {
  std::ostringstream out;
  out << "format: v1\n";
  out << "signature:";
  for (std::size_t s : file.signature.parts()) out << ' ' << s;
  out << '\n';

  auto write_matrix = [&](const char* key, const Matrix<Rational>& m) {
    out << key << ":\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "  ") << to_string(m(i, j));
      out << '\n';
    }
  };
  write_matrix("payoff", file.payoff);
  if (file.skew_model) write_matrix("skew_model", *file.skew_model);
  if (file.scaling) {
    out << "scaling:";
    for (const Rational& l : *file.scaling) out << ' ' << to_string(l);
    out << '\n';
  }
  if (file.equilibrium) {
    out << "equilibrium:";
    for (const Rational& q : *file.equilibrium) out << ' ' << to_string(q);
    out << '\n';
  }

  const IntegrationDefaults& d = file.integration;
  if (d.rtol || d.atol || d.max_step || d.method || d.mode) {
    out << "integration:";
    std::ostringstream opts;
    opts.precision(17);
    if (d.rtol) opts << " rtol=" << *d.rtol;
    if (d.atol) opts << " atol=" << *d.atol;
    if (d.max_step) opts << " max_step=" << *d.max_step;
    if (d.method)
      opts << " method=" << (*d.method == IntegrationMethod::rk4 ? "rk4" : "rk45");
    if (d.mode)
      opts << " mode="
           << (*d.mode == CoordinateMode::prism
                   ? "prism"
                   : *d.mode == CoordinateMode::chart ? "chart" : "auto");
    out << opts.str() << '\n';
  }
  return out.str();
}

}  // namespace polyrep
