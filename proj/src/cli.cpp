#include "invsr/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "invsr/congruence.hpp"
#include "invsr/errors.hpp"
#include "invsr/generators.hpp"
#include "invsr/relations.hpp"
#include "invsr/report.hpp"
#include "invsr/theorems.hpp"

namespace invsr {

namespace {

using nlohmann::json;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  bool force = false;
  bool timing = false;

  std::string file;
  std::string kind;
  std::size_t param = 0;
  bool zero_fixing = false;
  std::string gen;
  std::string subset = "all";
  std::string which;
  bool paper_suite = false;
};

struct Loaded {
  std::string bytes;
  SemigroupDocument doc;
};

std::string read_all(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    return read_all(in);
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    throw IoError("cannot read " + path);
  }
  return read_all(f);
}

Loaded load(const std::string& path, std::istream& in) {
  Loaded l;
  l.bytes = read_input(path, in);
  l.doc = parse_document(l.bytes);
  return l;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out += i ? sep + parts[i] : parts[i];
  }
  return out;
}

std::string map_text(const Endomorphism& f) {
  std::string out;
  for (std::size_t x = 0; x < f.size(); ++x) {
    out += (x ? " " : "") + std::to_string(f[x]);
  }
  return out;
}

json maps_json(std::span<const Endomorphism> maps) {
  auto out = json::array();
  for (const auto& f : maps) {
    out.push_back(images_json(f.images()));
  }
  return out;
}

void list_maps(RunReport& r, std::span<const Endomorphism> maps) {
  for (std::size_t i = 0; i < maps.size(); ++i) {
    char idx[16];
    std::snprintf(idx, sizeof idx, "  %3zu: ", i);
    r.text.push_back(idx + map_text(maps[i]));
  }
}

std::string label_or_none(const FiniteSemigroup& g, std::optional<ElementId> e) {
  return e ? g.label(*e) : "none";
}

json label_or_null(const FiniteSemigroup& g, std::optional<ElementId> e) {
  return e ? json(g.label(*e)) : json(nullptr);
}

class Runner {
 public:
  Runner(const Options& o, std::istream& in, std::ostream& out, std::ostream& err)
      : o_(o), in_(in), out_(out), err_(err), guard_{o.force} {}

  int gen() {
    out_ << emit_document(builtin_semigroup(o_.kind, o_.param, guard_));
    return kExitOk;
  }

  int product() {
    const auto left = load(o_.file, in_);
    const auto right = builtin_semigroup(o_.kind, o_.param, guard_);
    out_ << emit_document(product_document(left.doc, right, guard_));
    return kExitOk;
  }

  int validate(RunReport& r) {
    const auto l = load(o_.file, in_);
    r.digest = input_digest(l.bytes);
    const auto report = validate_semigroup(l.doc, guard_);
    auto failures = json::array();
    r.text.push_back("name: " + l.doc.name);
    r.text.push_back("size: " + std::to_string(l.doc.elements.size()));
    r.text.push_back(std::string("valid: ") + (report.valid() ? "yes" : "no"));
    for (const auto& f : report.failures) {
      std::vector<std::string> labels;
      for (const auto w : f.witness) {
        labels.push_back(l.doc.elements[w]);
      }
      failures.push_back({{"axiom", f.axiom}, {"witness", labels}});
      r.text.push_back("  " + f.axiom + ": (" + join(labels, ", ") + ")");
    }
    r.payload = {{"name", l.doc.name},
                 {"size", l.doc.elements.size()},
                 {"valid", report.valid()},
                 {"failures", failures}};
    return report.valid() ? kExitOk : kExitInput;
  }

  int info(RunReport& r) {
    const auto gp = semigroup(r);
    const auto& g = *gp;
    std::vector<std::string> idem;
    for (const auto e : g.idempotents()) {
      idem.push_back(g.label(e));
    }
    auto hasse = json::array();
    std::vector<std::string> hasse_text;
    for (const auto& [e, f] : idempotent_hasse_pairs(g)) {
      hasse.push_back({g.label(e), g.label(f)});
      hasse_text.push_back(g.label(e) + " < " + g.label(f));
    }
    std::vector<std::string> inverse;
    std::vector<std::string> zero;
    for (std::size_t x = 0; x < g.size(); ++x) {
      inverse.push_back(g.label(g.inverse_of(ElementId(x))));
      zero.push_back(g.label(g.zero_part(ElementId(x))));
    }
    const auto ext = extremal_idempotents(g);
    const auto dist = distinguished_elements(g);
    const bool lattice = idempotents_form_lattice(g);
    r.payload = {{"name", g.name()},
                 {"size", g.size()},
                 {"elements", g.labels()},
                 {"inverse", inverse},
                 {"zero_part", zero},
                 {"idempotents", idem},
                 {"hasse", hasse},
                 {"least_idempotent", label_or_null(g, ext.least)},
                 {"greatest_idempotent", label_or_null(g, ext.greatest)},
                 {"identity", label_or_null(g, dist.identity)},
                 {"absorbing", label_or_null(g, dist.absorbing)},
                 {"idempotents_form_lattice", lattice}};
    r.text = {
        "name: " + g.name(),
        "size: " + std::to_string(g.size()),
        "elements: " + join(g.labels(), " "),
        "inverse: " + join(inverse, " "),
        "zero part: " + join(zero, " "),
        "idempotents: " + join(idem, " "),
        "hasse: " + (hasse_text.empty() ? std::string("none") : join(hasse_text, ", ")),
        "least idempotent: " + label_or_none(g, ext.least),
        "greatest idempotent: " + label_or_none(g, ext.greatest),
        "identity: " + label_or_none(g, dist.identity),
        "absorbing: " + label_or_none(g, dist.absorbing),
        std::string("E(G) is a lattice: ") + (lattice ? "yes" : "no"),
    };
    return kExitOk;
  }

  int endos(RunReport& r) {
    const auto gp = semigroup(r);
    if (o_.zero_fixing && !gp->identity()) {
      throw PreconditionError("--zero-fixing needs an identity element");
    }
    const auto end = enumerate_endomorphisms(gp, o_.zero_fixing, guard_);
    r.payload = {{"zero_fixing", o_.zero_fixing},
                 {"elements", gp->labels()},
                 {"count", end.size()},
                 {"maps", maps_json(end.carrier())}};
    r.text.push_back("elements: " + join(gp->labels(), " "));
    r.text.push_back(std::string(o_.zero_fixing ? "End_0(G)" : "End(G)") + ": " +
                     std::to_string(end.size()) + " endomorphism(s)");
    list_maps(r, end.carrier());
    if (!o_.zero_fixing) {
      if (const auto ex = example_maps(*gp)) {
        std::vector<Endomorphism> unlisted;
        for (const auto& f : end.carrier()) {
          if (std::find(ex->listed.begin(), ex->listed.end(), f) == ex->listed.end()) {
            unlisted.push_back(f);
          }
        }
        r.payload["discrepancy"] = {{"stated", 9},
                                    {"computed", end.size()},
                                    {"unlisted", maps_json(unlisted)}};
        r.text.push_back("discrepancy: the worked example states 9, found " +
                         std::to_string(end.size()) + "; unlisted:");
        list_maps(r, unlisted);
      }
    }
    return kExitOk;
  }

  int subsemiring(RunReport& r) {
    const auto gp = semigroup(r);
    std::vector<Endomorphism> gens;
    if (o_.gen == "lambda") {
      gens = lambda_maps(*gp);
    } else if (o_.gen == "mu") {
      gens = mu_maps(*gp);
    } else {
      if (!gp->identity()) {
        throw PreconditionError("tau generators need an identity element");
      }
      gens = tau_maps(*gp);
    }
    const auto s = close_subsemiring(gp, gens, guard_);
    r.payload = {{"gen", o_.gen},
                 {"generators", gens.size()},
                 {"size", s.size()},
                 {"maps", maps_json(s.carrier())}};
    r.text.push_back("generators: " + std::to_string(gens.size()) + " " + o_.gen + " map(s)");
    r.text.push_back("closed subsemiring: " + std::to_string(s.size()) + " map(s)");
    list_maps(r, s.carrier());
    return kExitOk;
  }

  int monolith_cmd(RunReport& r) {
    const auto gp = semigroup(r);
    const auto e = o_.subset == "embedE" ? embedded_idempotent_endos(gp, guard_)
                   : o_.subset == "MG"   ? mu_subsemiring(gp)
                                         : enumerate_endomorphisms(gp, false, guard_);
    r.payload = {{"subset", o_.subset}, {"size", e.size()}};
    r.text.push_back("subset: " + o_.subset + " (" + std::to_string(e.size()) + " maps)");
    if (e.size() < 2) {
      r.payload["subdirectly_irreducible"] = false;
      r.payload["trivial"] = true;
      r.text.push_back("trivial semiring: no monolith");
      return kExitOk;
    }
    const auto m = monolith(e.tables());
    const auto cand = monolith_candidate(e);
    r.payload["subdirectly_irreducible"] = m.has_value();
    r.payload["hypotheses_unmet"] = cand.unmet;
    r.payload["matches_r"] = m && *m == cand.relation.partition;
    if (e.size() <= kPartitionOracleLimit) {
      r.payload["partition_oracle_agrees"] = monolith_by_partitions(e.tables(), guard_) == m;
    }
    r.text.push_back(std::string("subdirectly irreducible: ") + (m ? "yes" : "no"));
    if (m) {
      auto blocks = json::array();
      r.text.push_back("monolith blocks: " + std::to_string(m->block_count()));
      for (const auto& block : m->blocks()) {
        std::vector<Endomorphism> maps;
        std::vector<std::string> idx;
        for (const auto u : block) {
          maps.push_back(e[u]);
          idx.push_back(std::to_string(u));
        }
        blocks.push_back(maps_json(maps));
        r.text.push_back("  {" + join(idx, " ") + "}");
      }
      r.payload["blocks"] = blocks;
      r.text.push_back(std::string("equals (R_I & R_L) on E: ") +
                       (*m == cand.relation.partition ? "yes" : "no"));
    }
    if (!cand.unmet.empty()) {
      r.text.push_back("unmet hypotheses: " + join(cand.unmet, "; "));
    }
    r.text.push_back("carrier:");
    list_maps(r, e.carrier());
    return kExitOk;
  }

  int simple(RunReport& r) {
    const auto gp = semigroup(r);
    if (o_.which == "end0" && !gp->identity()) {
      throw PreconditionError("End_0(G) needs an identity element");
    }
    const auto e = o_.which == "endE" ? embedded_idempotent_endos(gp, guard_)
                   : o_.which == "MG" ? mu_subsemiring(gp)
                                      : enumerate_endomorphisms(gp, o_.which == "end0", guard_);
    const bool simple = e.size() >= 2 && is_congruence_simple(e.tables());
    r.payload = {{"which", o_.which}, {"size", e.size()}, {"simple", simple}};
    r.text.push_back("semiring: " + o_.which + " (" + std::to_string(e.size()) + " maps)");
    r.text.push_back(std::string("simple: ") + (simple ? "true" : "false"));
    if (e.size() < 2) {
      r.text.push_back("trivial semiring");
    } else if (e.size() <= kPartitionOracleLimit) {
      const bool oracle = is_congruence_simple_by_partitions(e.tables(), guard_);
      r.payload["partition_oracle"] = oracle;
      r.text.push_back(std::string("partition oracle: ") + (oracle ? "true" : "false"));
    }
    return kExitOk;
  }

  int check(RunReport& r) {
    std::vector<TheoremReport> reports;
    if (o_.paper_suite) {
      std::string all;
      for (const auto& entry : builtin_corpus()) {
        all += emit_document(entry.doc);
      }
      r.digest = input_digest(all);
      reports = verify_corpus_suite(guard_);
    } else {
      const auto gp = semigroup(r);
      reports = verify_theorem_suite(*gp, gp->name(), guard_);
    }
    const auto t = tally(reports);
    r.payload = {{"reports", theorem_reports_json(reports)},
                 {"summary",
                  {{"holds", t.holds},
                   {"fails", t.fails},
                   {"precondition_unmet", t.precondition_unmet},
                   {"erratum", t.erratum}}}};
    r.text = theorem_reports_text(reports);
    r.text.push_back("summary: " + std::to_string(t.holds) + " holds, " +
                     std::to_string(t.fails) + " fails, " +
                     std::to_string(t.precondition_unmet) + " precondition-unmet, " +
                     std::to_string(t.erratum) + " erratum");
    for (const auto& rep : reports) {
      if (rep.verdict == Verdict::erratum) {
        r.text.push_back("erratum: " + rep.theorem + " [" + rep.instance + "] " + rep.detail);
      }
    }
    return t.fails ? kExitViolated : kExitOk;
  }

 private:
  SemigroupPtr semigroup(RunReport& r) {
    const auto l = load(o_.file, in_);
    r.digest = input_digest(l.bytes);
    return share(FiniteSemigroup::from_document(l.doc, guard_));
  }

  const Options& o_;
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
  SizeGuard guard_;
};

bool env_force() {
  const char* v = std::getenv("INVSR_FORCE");
  return v != nullptr && std::string(v) == "1";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Endomorphism semirings of finite commutative inverse semigroups", "invsr"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--force", o.force, "Disable size guards (also INVSR_FORCE=1)");
  app.add_flag("--timing", o.timing, "Include wall-clock time in the report");

  auto* gen = app.add_subcommand("gen", "Emit a built-in semigroup document");
  gen->add_option("kind", o.kind, "Family")->required();
  gen->add_option("param", o.param, "Size parameter");

  auto* product = app.add_subcommand(
      "product", "Direct product of a document (stdin by default) with a built-in");
  product->add_option("kind", o.kind, "Family of the right factor")->required();
  product->add_option("param", o.param, "Size parameter");
  product->add_option("--left", o.file, "Left factor document")->default_val("-");

  auto file_command = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "Semigroup document, - for stdin")->required();
    return sub;
  };
  auto* validate = file_command("validate", "Check the commutative inverse semigroup axioms");
  auto* info = file_command("info", "Idempotents, order, distinguished elements");
  auto* endos = file_command("endos", "Enumerate End(G)");
  endos->add_flag("--zero-fixing", o.zero_fixing, "Only maps fixing the identity");
  auto* sub = file_command("subsemiring", "Close a family of generators");
  sub->add_option("--gen", o.gen, "Generators")
      ->required()
      ->check(CLI::IsMember({"lambda", "mu", "tau"}));
  auto* mono = file_command("monolith", "Monolith of a subsemiring");
  mono->add_option("--subset", o.subset, "Subsemiring")
      ->check(CLI::IsMember({"embedE", "MG", "all"}));
  auto* simple = file_command("simple", "Congruence-simplicity verdict");
  simple->add_option("--which", o.which, "Semiring")
      ->required()
      ->check(CLI::IsMember({"end", "endE", "MG", "end0"}));
  auto* check = app.add_subcommand("check", "Run the theorem suite");
  check->add_flag("--paper-suite", o.paper_suite, "Run over the built-in corpus");
  check->add_option("file", o.file, "Semigroup document");

  std::vector<std::string> argv_store{"invsr"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) {
    argv.push_back(a.data());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "invsr: " << e.what() << "\n";
    return kExitInput;
  }
  if (check->parsed() && !o.paper_suite && o.file.empty()) {
    err << "invsr: check needs a file or --paper-suite\n";
    return kExitInput;
  }

  o.force = o.force || env_force();
  if (o.force) {
    err << "invsr: warning: size guards disabled\n";
  }

  Runner runner(o, in, out, err);
  RunReport report;
  const auto start = std::chrono::steady_clock::now();
  int code = kExitOk;
  try {
    if (gen->parsed()) {
      return runner.gen();
    }
    if (product->parsed()) {
      return runner.product();
    }
    auto* parsed = app.get_subcommands().front();
    report.command = parsed->get_name();
    if (parsed == validate) {
      code = runner.validate(report);
    } else if (parsed == info) {
      code = runner.info(report);
    } else if (parsed == endos) {
      code = runner.endos(report);
    } else if (parsed == sub) {
      code = runner.subsemiring(report);
    } else if (parsed == mono) {
      code = runner.monolith_cmd(report);
    } else if (parsed == simple) {
      code = runner.simple(report);
    } else {
      code = runner.check(report);
    }
  } catch (const FormatError& e) {
    err << "invsr: format error: " << e.what() << "\n";
    return kExitInput;
  } catch (const AxiomError& e) {
    err << "invsr: not a commutative inverse semigroup: " << e.what() << "\n";
    return kExitInput;
  } catch (const PreconditionError& e) {
    err << "invsr: " << e.what() << "\n";
    return kExitInput;
  } catch (const GuardError& e) {
    err << "invsr: size guard: " << e.what() << " (use --force)\n";
    return kExitIo;
  } catch (const IoError& e) {
    err << "invsr: " << e.what() << "\n";
    return kExitIo;
  }
  if (o.timing) {
    report.timing_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
  }
  out << emit_report(report, o.format == "json" ? ReportFormat::json : ReportFormat::text);
  return code;
}

}  // namespace invsr
