#include "gammaq/formats.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "gammaq/errors.hpp"

namespace gammaq {

  namespace {

    struct Line {
      std::size_t              number;
      std::vector<std::string> tokens;
    };

    // Non-blank lines with comments removed, split on whitespace.
    std::vector<Line> tokenize(std::string_view text) {
      std::vector<Line> lines;
      std::size_t       number = 0;
      std::size_t       pos    = 0;
      while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) {
          end = text.size();
        }
        ++number;
        auto raw = text.substr(pos, end - pos);
        if (auto hash = raw.find('#'); hash != std::string_view::npos) {
          raw = raw.substr(0, hash);
        }
        std::istringstream       in{std::string(raw)};
        std::vector<std::string> tokens;
        for (std::string tok; in >> tok;) {
          tokens.push_back(std::move(tok));
        }
        if (!tokens.empty()) {
          lines.push_back({number, std::move(tokens)});
        }
        pos = end + 1;
      }
      return lines;
    }

    void expect_header(std::vector<Line> const& lines, char const* format) {
      if (lines.empty()) {
        throw ParseError(std::string("empty input, expected '") + format + " v1'");
      }
      auto const& first = lines.front();
      if (first.tokens.size() != 2 || first.tokens[0] != format
          || first.tokens[1] != "v1") {
        throw ParseError(std::string("expected '") + format + " v1'", first.number);
      }
    }

    // "S:" followed by labels, or "S:" glued to the first label ("S:a").
    std::optional<std::vector<std::string>> declaration(Line const& line,
                                                        std::string_view key) {
      auto const& head = line.tokens.front();
      if (head.size() < key.size() + 1 || head.compare(0, key.size(), key) != 0
          || head[key.size()] != ':') {
        return std::nullopt;
      }
      std::vector<std::string> names;
      if (head.size() > key.size() + 1) {
        names.push_back(head.substr(key.size() + 1));
      }
      names.insert(names.end(), line.tokens.begin() + 1, line.tokens.end());
      return names;
    }

    SymbolTablePtr symbols_at(std::vector<std::string> names, std::size_t line) {
      if (names.empty()) {
        throw ParseError("declaration lists no symbols", line);
      }
      try {
        return make_symbols(std::move(names));
      } catch (InvalidSymbol const& e) {
        throw ParseError(e.what(), line);
      }
    }

    // "SGS g:" / "SGS g :" → "g"
    std::optional<std::string> block_label(Line const& line, std::string_view key) {
      if (line.tokens.front() != key) {
        return std::nullopt;
      }
      std::string label;
      if (line.tokens.size() == 2) {
        label = line.tokens[1];
        if (label.empty() || label.back() != ':') {
          throw ParseError(std::string(key) + " block header must end with ':'",
                           line.number);
        }
        label.pop_back();
      } else if (line.tokens.size() == 3 && line.tokens[2] == ":") {
        label = line.tokens[1];
      } else {
        throw ParseError(std::string("malformed ") + std::string(key) + " header",
                         line.number);
      }
      if (label.empty()) {
        throw ParseError(std::string(key) + " block without a label", line.number);
      }
      return label;
    }

  }  // namespace

  GammaSemigroup parse_gsem(std::string_view text) {
    auto lines = tokenize(text);
    expect_header(lines, "gsem");

    SymbolTablePtr carrier;
    SymbolTablePtr gamma;
    std::size_t    i = 1;
    for (; i < lines.size() && (!carrier || !gamma); ++i) {
      auto const& line = lines[i];
      if (auto names = declaration(line, "S")) {
        if (carrier) {
          throw ParseError("S declared twice", line.number);
        }
        carrier = symbols_at(std::move(*names), line.number);
      } else if (auto names = declaration(line, "G")) {
        if (gamma) {
          throw ParseError("G declared twice", line.number);
        }
        gamma = symbols_at(std::move(*names), line.number);
      } else {
        throw ParseError("expected 'S:' and 'G:' declarations before tables",
                         line.number);
      }
    }
    if (!carrier || !gamma) {
      throw ParseError("missing 'S:' or 'G:' declaration");
    }

    std::size_t const n = carrier->size();
    std::size_t const k = gamma->size();
    OperationTable    s_op(n * k * n);
    OperationTable    g_op(k * n * k);
    std::vector<bool> sgs_seen(k, false);
    std::vector<bool> gsg_seen(n, false);
    bool              any_gsg = false;

    auto resolve = [](SymbolTable const& table, std::string const& label, std::size_t line) {
      auto idx = table.find(label);
      if (!idx) {
        throw MissingEntry("line " + std::to_string(line) + ": table entry '"
                           + label + "' is not a declared symbol");
      }
      return *idx;
    };

    auto read_rows = [&](std::size_t rows, std::size_t header_line) {
      if (i + rows > lines.size()) {
        throw ParseError("table block is truncated", header_line);
      }
      std::vector<Line const*> out;
      for (std::size_t r = 0; r < rows; ++r) {
        auto const& row = lines[i + r];
        if (row.tokens.size() != rows) {
          throw ParseError("expected " + std::to_string(rows) + " entries, found "
                               + std::to_string(row.tokens.size()),
                           row.number);
        }
        out.push_back(&row);
      }
      i += rows;
      return out;
    };

    while (i < lines.size()) {
      auto const& header = lines[i];
      if (auto label = block_label(header, "SGS")) {
        auto const g = gamma->find(*label);
        if (!g) {
          throw ParseError("SGS block for unknown Γ symbol '" + *label + "'",
                           header.number);
        }
        if (sgs_seen[*g]) {
          throw ParseError("duplicate SGS block for '" + *label + "'", header.number);
        }
        sgs_seen[*g] = true;
        ++i;
        auto rows = read_rows(n, header.number);
        for (std::size_t x = 0; x < n; ++x) {
          for (std::size_t y = 0; y < n; ++y) {
            s_op[(x * k + *g) * n + y]
                = resolve(*carrier, rows[x]->tokens[y], rows[x]->number);
          }
        }
      } else if (auto label = block_label(header, "GSG")) {
        auto const s = carrier->find(*label);
        if (!s) {
          throw ParseError("GSG block for unknown S symbol '" + *label + "'",
                           header.number);
        }
        if (gsg_seen[*s]) {
          throw ParseError("duplicate GSG block for '" + *label + "'", header.number);
        }
        gsg_seen[*s] = true;
        any_gsg      = true;
        ++i;
        auto rows = read_rows(k, header.number);
        for (std::size_t a = 0; a < k; ++a) {
          for (std::size_t b = 0; b < k; ++b) {
            g_op[(a * n + *s) * k + b]
                = resolve(*gamma, rows[a]->tokens[b], rows[a]->number);
          }
        }
      } else {
        throw ParseError("expected an 'SGS <γ>:' or 'GSG <s>:' block header",
                         header.number);
      }
    }

    for (std::size_t g = 0; g < k; ++g) {
      if (!sgs_seen[g]) {
        throw ParseError("missing SGS block for '" + gamma->name(g) + "'");
      }
    }
    std::optional<OperationTable> g_table;
    if (any_gsg) {
      g_table = std::move(g_op);
    }
    return GammaSemigroup::build(carrier, gamma, s_op, g_table);
  }

  std::string render_gsem(GammaSemigroup const& g) {
    std::ostringstream out;
    auto const&        S = g.carrier();
    auto const&        G = g.gamma();
    out << "gsem v1\nS:";
    for (auto const& name : S.names()) {
      out << ' ' << name;
    }
    out << "\nG:";
    for (auto const& name : G.names()) {
      out << ' ' << name;
    }
    out << '\n';
    for (std::size_t c = 0; c < g.gamma_size(); ++c) {
      out << "SGS " << G.name(c) << ":\n";
      for (std::size_t x = 0; x < g.size(); ++x) {
        for (std::size_t y = 0; y < g.size(); ++y) {
          out << (y == 0 ? "" : " ") << S.name(g.product(x, c, y));
        }
        out << '\n';
      }
    }
    if (g.both_sided()) {
      for (std::size_t s = 0; s < g.size(); ++s) {
        out << "GSG " << S.name(s) << ":\n";
        for (std::size_t a = 0; a < g.gamma_size(); ++a) {
          for (std::size_t b = 0; b < g.gamma_size(); ++b) {
            out << (b == 0 ? "" : " ") << G.name(g.gamma_product(a, s, b));
          }
          out << '\n';
        }
      }
    }
    return out.str();
  }

  QFuzzySubset parse_qfz(std::string_view text, SymbolTablePtr const& domain) {
    auto lines = tokenize(text);
    expect_header(lines, "qfz");
    if (lines.size() < 2) {
      throw ParseError("missing 'Q:' declaration");
    }
    auto names = declaration(lines[1], "Q");
    if (!names) {
      throw ParseError("expected 'Q:' declaration", lines[1].number);
    }
    QSet              q(symbols_at(std::move(*names), lines[1].number));
    QFuzzySubset      mu(domain, q);
    std::vector<bool> seen(domain->size() * q.size(), false);
    for (std::size_t i = 2; i < lines.size(); ++i) {
      auto const& line = lines[i];
      if (line.tokens.front() != "mu") {
        throw ParseError("expected 'mu <s> <q> <grade>'", line.number);
      }
      if (line.tokens.size() != 4) {
        throw ParseError("'mu' lines take exactly three fields", line.number);
      }
      auto const x = domain->find(line.tokens[1]);
      if (!x) {
        throw UnknownSymbol("line " + std::to_string(line.number)
                            + ": unknown element '" + line.tokens[1] + "'");
      }
      auto const p = q.names().find(line.tokens[2]);
      if (!p) {
        throw UnknownSymbol("line " + std::to_string(line.number)
                            + ": unknown Q symbol '" + line.tokens[2] + "'");
      }
      Grade grade;
      try {
        grade = Grade::parse(line.tokens[3]);
      } catch (ParseError const& e) {
        throw ParseError(e.what(), line.number);
      } catch (OutOfRange const& e) {
        throw OutOfRange("line " + std::to_string(line.number) + ": " + e.what());
      }
      auto const cell = *x * q.size() + *p;
      if (seen[cell]) {
        throw ParseError("duplicate grade for (" + line.tokens[1] + ","
                             + line.tokens[2] + ")",
                         line.number);
      }
      seen[cell] = true;
      mu.set(*x, *p, grade);
    }
    return mu;
  }

  std::string render_qfz(QFuzzySubset const& mu) {
    std::ostringstream out;
    out << "qfz v1\nQ:";
    for (auto const& name : mu.qset().names().names()) {
      out << ' ' << name;
    }
    out << '\n';
    for (std::size_t x = 0; x < mu.domain_size(); ++x) {
      for (std::size_t q = 0; q < mu.q_size(); ++q) {
        out << "mu " << mu.domain()->name(x) << ' '
            << mu.qset().names().name(q) << ' ' << mu(x, q).to_string() << '\n';
      }
    }
    return out.str();
  }

  std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw std::runtime_error("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }

}  // namespace gammaq
