// gammaq: command-line front end over the gammaq core library.
//
// Exit codes: 0 when every check agrees, 1 when a discrepancy is found,
// 2 on an input or usage error.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "gammaq/composition.hpp"
#include "gammaq/errors.hpp"
#include "gammaq/formats.hpp"
#include "gammaq/harness.hpp"
#include "gammaq/operator_semigroup.hpp"
#include "gammaq/transfer.hpp"

namespace {

  using namespace gammaq;
  using json = nlohmann::json;

  constexpr int exit_agree       = 0;
  constexpr int exit_discrepancy = 1;
  constexpr int exit_error       = 2;

  struct Options {
    std::vector<std::string> files;
    std::string              side      = "both";
    std::string              t;
    std::string              kind;
    std::string              theorem   = "all";
    std::string              grid      = "5";
    std::size_t              q_size    = 1;
    std::size_t              max_s     = 3;
    std::size_t              max_g     = 2;
    std::string              output;
    std::string              subset;
    std::string              thresholds = "image";
    bool                     timing    = false;
    unsigned                 jobs      = 1;
  };

  void emit(Options const& o, std::string const& text) {
    if (o.output.empty()) {
      std::cout << text << '\n';
      return;
    }
    std::ofstream out(o.output, std::ios::binary);
    if (!out) {
      throw std::runtime_error("cannot write '" + o.output + "'");
    }
    out << text << '\n';
  }

  std::string bool_text(bool b) {
    return b ? "true" : "false";
  }

  GammaSemigroup load_structure(std::string const& path) {
    return parse_gsem(read_file(path));
  }

  std::string structure_id(std::string const& path) {
    return std::filesystem::path(path).stem().string();
  }

  // Labels may themselves contain commas ("[1,3]"), so operator labels are
  // matched greedily against the universe instead of split naively.
  CrispSubset parse_subset(SymbolTablePtr const& universe, std::string const& text) {
    CrispSubset out(universe);
    std::string rest;
    for (char ch : text) {
      if (ch != '{' && ch != '}' && ch != ' ') {
        rest += ch;
      }
    }
    while (!rest.empty()) {
      std::size_t best = 0;
      std::size_t idx  = 0;
      for (std::size_t i = 0; i < universe->size(); ++i) {
        auto const& name = universe->name(i);
        if (name.size() > best && rest.compare(0, name.size(), name) == 0
            && (rest.size() == name.size() || rest[name.size()] == ',')) {
          best = name.size();
          idx  = i;
        }
      }
      if (best == 0) {
        auto const end = rest.find(',');
        throw UnknownSymbol("unknown element '" + rest.substr(0, end) + "'");
      }
      out.insert(idx);
      rest.erase(0, std::min(rest.size(), best + 1));
    }
    return out;
  }

  VerifyOptions verify_options(Options const& o) {
    VerifyOptions v;
    v.grid   = parse_grid(o.grid);
    v.q_size = o.q_size;
    v.jobs   = o.jobs;
    if (o.thresholds == "all") {
      v.thresholds = LevelThresholds::all_nonempty;
    } else if (o.thresholds != "image") {
      throw std::invalid_argument("--thresholds must be image or all");
    }
    return v;
  }

  std::string set_text(std::vector<Grade> const& grades) {
    std::string out = "{";
    for (std::size_t i = 0; i < grades.size(); ++i) {
      out += (i == 0 ? "" : ",") + grades[i].to_string();
    }
    return out + "}";
  }

  json operator_json(GammaSemigroup const& g, OperatorSemigroup const& os) {
    json j;
    j["kind"] = std::string(to_string(os.kind()));
    auto const& labels = *os.domain();
    json        classes = json::array();
    for (std::size_t i = 0; i < os.size(); ++i) {
      json members = json::array();
      for (auto const& p : os.element(i).members) {
        if (os.kind() == OperatorKind::left) {
          members.push_back(g.carrier().name(p.first) + "," + g.gamma().name(p.second));
        } else {
          members.push_back(g.gamma().name(p.first) + "," + g.carrier().name(p.second));
        }
      }
      classes.push_back({{"label", labels.name(i)}, {"members", members}});
    }
    j["classes"] = classes;
    json table   = json::array();
    for (std::size_t i = 0; i < os.size(); ++i) {
      json row = json::array();
      for (std::size_t k = 0; k < os.size(); ++k) {
        row.push_back(labels.name(os.product(i, k)));
      }
      table.push_back(row);
    }
    j["table"] = table;
    j["unity"] = os.unity() ? json(labels.name(*os.unity())) : json(nullptr);
    auto wd    = check_well_defined(g, os);
    j["well_defined"] = {{"pairs_checked", wd.pairs_checked}, {"violations", wd.violations}};
    return j;
  }

  void require_files(Options const& o, std::size_t n, char const* usage) {
    if (o.files.size() != n) {
      throw CLI::ValidationError(std::string("expected ") + usage);
    }
  }

  int cmd_validate(Options const& o) {
    require_files(o, 1, "one GSEM file");
    auto g = load_structure(o.files[0]);
    json j{{"valid", true},
           {"size", g.size()},
           {"gamma_size", g.gamma_size()},
           {"both_sided", g.both_sided()}};
    emit(o, j.dump(2));
    return exit_agree;
  }

  int cmd_regular(Options const& o) {
    require_files(o, 1, "one GSEM file");
    auto g = load_structure(o.files[0]);
    auto r = is_regular(g);
    json j{{"regular", r.regular}};
    if (r.regular) {
      json witness = json::object();
      for (std::size_t x = 0; x < g.size(); ++x) {
        witness[g.carrier().name(x)] = g.gamma().name(r.witness[x]);
      }
      j["witness"] = witness;
    } else {
      j["failing"] = g.carrier().name(*r.failing);
    }
    emit(o, j.dump(2));
    return exit_agree;
  }

  int cmd_ideal(Options const& o) {
    require_files(o, 1, "one GSEM file");
    auto g = load_structure(o.files[0]);
    auto a = parse_subset(g.carrier_ptr(), o.subset);
    emit(o, bool_text(is_ideal(g, a, parse_side(o.side))));
    return exit_agree;
  }

  int cmd_qideal(Options const& o) {
    require_files(o, 2, "a GSEM file and a QFZ file");
    auto g     = load_structure(o.files[0]);
    auto mu    = parse_qfz(read_file(o.files[1]), g);
    auto check = is_q_fuzzy_ideal(g, mu, parse_side(o.side));
    emit(o,
         check.holds ? std::string("true")
                     : "false: " + describe(g, mu, *check.violation));
    return exit_agree;
  }

  int cmd_level(Options const& o) {
    require_files(o, 2, "a GSEM file and a QFZ file");
    if (o.t.empty()) {
      throw CLI::ValidationError("level needs --t");
    }
    auto g  = load_structure(o.files[0]);
    auto mu = parse_qfz(read_file(o.files[1]), g);
    emit(o, level_set(mu, Grade::parse(o.t)).to_string());
    return exit_agree;
  }

  int cmd_image(Options const& o) {
    require_files(o, 2, "a GSEM file and a QFZ file");
    auto g  = load_structure(o.files[0]);
    auto mu = parse_qfz(read_file(o.files[1]), g);
    emit(o, set_text(image(mu)));
    return exit_agree;
  }

  int cmd_compose(Options const& o) {
    require_files(o, 3, "a GSEM file and two QFZ files");
    auto g   = load_structure(o.files[0]);
    auto mu1 = parse_qfz(read_file(o.files[1]), g);
    auto mu2 = parse_qfz(read_file(o.files[2]), g);
    auto out = render_qfz(compose(g, mu1, mu2));
    out.pop_back();
    emit(o, out);
    return exit_agree;
  }

  int cmd_operators(Options const& o) {
    require_files(o, 1, "one GSEM file");
    auto g = load_structure(o.files[0]);
    json j;
    if (o.kind.empty()) {
      j["left"]  = operator_json(g, build_left_operator(g));
      j["right"] = operator_json(g, build_right_operator(g));
    } else {
      j = operator_json(g, build_operator_semigroup(g, parse_operator_kind(o.kind)));
    }
    emit(o, j.dump(2));
    return exit_agree;
  }

  // map --kind star|star-prime|plus|plus-prime, input as --subset (crisp) or
  // a QFZ file over the map's source (fuzzy).
  int cmd_map(Options const& o) {
    if (o.files.empty() || o.files.size() > 2) {
      throw CLI::ValidationError("expected a GSEM file and optionally a QFZ file");
    }
    bool const fuzzy = o.files.size() == 2;
    if (fuzzy == !o.subset.empty()) {
      throw CLI::ValidationError("give either a QFZ file or --subset, not both");
    }
    auto const kind = o.kind;
    auto const t    = [&] {
      if (kind == "star") {
        return fuzzy ? Transfer::star_fuzzy : Transfer::star_crisp;
      }
      if (kind == "star-prime") {
        return fuzzy ? Transfer::star_prime_fuzzy : Transfer::star_prime_crisp;
      }
      if (kind == "plus") {
        return fuzzy ? Transfer::plus_fuzzy : Transfer::plus_crisp;
      }
      if (kind == "plus-prime") {
        return fuzzy ? Transfer::plus_prime_fuzzy : Transfer::plus_prime_crisp;
      }
      throw CLI::ValidationError("--kind must be star, star-prime, plus or plus-prime");
    }();
    OperatorContext ctx(load_structure(o.files[0]));
    auto const&     g      = ctx.source();
    auto const&     source = transfer_source(ctx, t);
    if (!fuzzy) {
      auto const input  = parse_subset(source, o.subset);
      auto const output = [&] {
        switch (t) {
          case Transfer::star_crisp:
            return star_crisp(ctx.right(), input);
          case Transfer::star_prime_crisp:
            return star_prime_crisp(g, ctx.right(), input);
          case Transfer::plus_crisp:
            return plus_crisp(ctx.left(), input);
          default:
            return plus_prime_crisp(g, ctx.left(), input);
        }
      }();
      emit(o, output.to_string());
      return exit_agree;
    }
    auto const input  = parse_qfz(read_file(o.files[1]), source);
    auto const output = [&] {
      switch (t) {
        case Transfer::star_fuzzy:
          return star_fuzzy(ctx.right(), input);
        case Transfer::star_prime_fuzzy:
          return star_prime_fuzzy(g, ctx.right(), input);
        case Transfer::plus_fuzzy:
          return plus_fuzzy(ctx.left(), input);
        default:
          return plus_prime_fuzzy(g, ctx.left(), input);
      }
    }();
    auto text = render_qfz(output);
    text.pop_back();
    emit(o, text);
    return exit_agree;
  }

  int cmd_verify(Options const& o) {
    if (o.files.empty()) {
      throw CLI::ValidationError("expected at least one GSEM file");
    }
    auto const                 options = verify_options(o);
    std::vector<VerdictReport> reports;
    for (auto const& path : o.files) {
      auto g  = load_structure(path);
      auto id = structure_id(path);
      if (o.theorem == "all") {
        auto part = run_verify_all(g, id, options);
        std::move(part.begin(), part.end(), std::back_inserter(reports));
      } else {
        reports.push_back(run_verify(g, id, o.theorem, options));
      }
    }
    bool const all_ok = std::all_of(
        reports.begin(), reports.end(), [](auto const& r) { return r.ok(); });
    if (reports.size() == 1) {
      emit(o, reports.front().to_json(o.timing));
    } else {
      emit(o, to_json(reports, o.timing));
    }
    return all_ok ? exit_agree : exit_discrepancy;
  }

  int cmd_search(Options const& o) {
    if (o.files.size() != 1) {
      throw CLI::ValidationError("expected one property name");
    }
    SearchOptions s;
    s.max_s  = o.max_s;
    s.max_g  = o.max_g;
    s.grid   = parse_grid(o.grid);
    s.q_size = o.q_size;
    s.jobs   = o.jobs;
    auto r   = run_search(o.files[0], s);
    emit(o, r.to_json(o.timing));
    return r.ok() ? exit_agree : exit_discrepancy;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite Γ-semigroups, Q-fuzzy ideals and operator semigroups"};
  app.require_subcommand(1);
  Options o;

  struct Command {
    char const* name;
    char const* help;
    char const* positional;
    int (*run)(Options const&);
  };
  Command const commands[] = {
      {"validate", "Parse and validate a GSEM file", "gsem", cmd_validate},
      {"regular", "Decide regularity, with a witness per element", "gsem", cmd_regular},
      {"ideal", "Decide whether --subset is an ideal on --side", "gsem", cmd_ideal},
      {"qideal", "Decide whether a Q-fuzzy subset is a Q-fuzzy ideal", "gsem qfz", cmd_qideal},
      {"level", "Print the level set at --t", "gsem qfz", cmd_level},
      {"image", "Print the image of a Q-fuzzy subset", "gsem qfz", cmd_image},
      {"compose", "Print the sup-min composition of two Q-fuzzy subsets", "gsem qfz qfz",
       cmd_compose},
      {"operators", "Print the left and/or right operator semigroup", "gsem", cmd_operators},
      {"map", "Apply a transfer map (--kind star|star-prime|plus|plus-prime)", "gsem [qfz]",
       cmd_map},
      {"verify", "Run theorem checks (--theorem ID or all) over GSEM files", "gsem...",
       cmd_verify},
      {"search", "Search enumerated structures for counterexamples to a property",
       "property", cmd_search},
  };

  int (*selected)(Options const&) = nullptr;
  for (auto const& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("inputs", o.files, c.positional);
    sub->add_option("--side", o.side, "left, right or both")->capture_default_str();
    sub->add_option("--t", o.t, "level threshold, n/d or decimal");
    sub->add_option("--kind", o.kind, "operator kind or transfer map");
    sub->add_option("--theorem", o.theorem, "theorem id or all")->capture_default_str();
    sub->add_option("--grid", o.grid, "grid size N or comma list of grades")
        ->capture_default_str();
    sub->add_option("--q-size", o.q_size, "size of the generated Q")->capture_default_str();
    sub->add_option("--max-s", o.max_s, "largest |S| searched")->capture_default_str();
    sub->add_option("--max-g", o.max_g, "largest |Γ| searched")->capture_default_str();
    sub->add_option("-o,--output", o.output, "write to this file instead of stdout");
    sub->add_option("--subset", o.subset, "crisp subset such as a,b");
    sub->add_option("--thresholds", o.thresholds, "level criterion reading: image or all")
        ->capture_default_str();
    sub->add_flag("--timing", o.timing, "include elapsed time in reports");
    sub->add_option("--jobs", o.jobs, "worker threads")->capture_default_str();
    sub->callback([&selected, run = c.run] { selected = run; });
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_error;
  }

  try {
    return selected(o);
  } catch (CLI::ValidationError const& e) {
    std::cerr << "usage error: " << e.what() << '\n';
  } catch (ParseError const& e) {
    std::cerr << "parse error: " << e.what() << '\n';
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return exit_error;
}
