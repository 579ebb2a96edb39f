#include "efdkit/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "efdkit/canonical.hpp"
#include "efdkit/errors.hpp"
#include "efdkit/json.hpp"
#include "efdkit/lattice.hpp"
#include "efdkit/models.hpp"
#include "efdkit/selftest.hpp"
#include "efdkit/syntax.hpp"
#include "efdkit/translate.hpp"

namespace efdkit {

namespace {

struct Output {
  Json json;
  std::string text;
  int code = kExitOk;
};

struct Common {
  std::string format = "json";
  bool pretty = false;
  std::uint64_t seed = kDefaultSeed;
  std::size_t budget = 0;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

std::int64_t parse_k(const std::string& text) {
  try {
    std::size_t used = 0;
    const long long k = std::stoll(text, &used);
    if (trim(text.substr(used)).empty()) return k;
  } catch (const std::logic_error&) {
  }
  throw InvalidArgument("expected an integer, got '" + text + "'");
}

/// Sentence text or one of the shorthands `delta K`, `epsilon K`, `boolean`, `absurd`.
EFDSentence read_sentence(const std::string& raw, Signature sig) {
  const std::string text = trim(raw);
  const auto space = text.find(' ');
  const std::string head = text.substr(0, space);
  if (head == "delta" && space != std::string::npos) {
    return build_delta_k(parse_k(text.substr(space + 1)), sig == Signature::Hoop ? Signature::Hoop : Signature::Group);
  }
  if (head == "epsilon" && space != std::string::npos) return build_epsilon_k(parse_k(text.substr(space + 1)));
  if (text == "boolean") return boolean_marker_sentence();
  if (text == "absurd") return absurd_sentence(sig);
  return parse_sentence(text, sig);
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read '" + path + "'");
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (!line.empty() && line[0] != '#') out.push_back(line);
  }
  return out;
}

std::vector<EFDSentence> gather_sentences(const std::vector<std::string>& texts, const std::vector<std::string>& files,
                                          Signature sig) {
  std::vector<EFDSentence> out;
  for (const auto& t : texts) out.push_back(read_sentence(t, sig));
  for (const auto& f : files) {
    for (const auto& line : read_lines(f)) out.push_back(read_sentence(line, sig));
  }
  return out;
}

std::vector<std::int64_t> parse_prime_list(const std::string& text) { return PrimeSet::parse(text).listed(); }

AEClass parse_class(const std::string& raw, Family f) {
  const std::string text = trim(raw);
  if (text == "trivial") return AEClass::trivial(f);
  if (text == "boolean") {
    AEClass c = AEClass::boolean();
    if (f != Family::P) throw InvalidArgument("the Boolean class exists only in the P family");
    return c;
  }
  std::string body = text;
  for (const char* prefix : {"divisible", "div"}) {
    if (body.rfind(prefix, 0) == 0) {
      body = trim(body.substr(std::string(prefix).size()));
      if (!body.empty() && body[0] == ':') body = body.substr(1);
      break;
    }
  }
  return AEClass::divisible(f, PrimeSet::parse(body));
}

/// `Bal^{2,3}`, `lp^all`, `bal^inconsistent`, `classical`.
LogicExpansion parse_expansion(const std::string& raw) {
  std::string text = trim(raw);
  for (auto& ch : text) {
    if (ch >= 'A' && ch <= 'Z') ch = static_cast<char>(ch - 'A' + 'a');
  }
  if (text == "classical") return {LogicExpansion::Base::LP, {}, LogicExpansion::Special::Classical};
  const auto caret = text.find('^');
  const std::string base = text.substr(0, caret);
  LogicExpansion e;
  if (base == "bal") {
    e.base = LogicExpansion::Base::Bal;
  } else if (base == "lp") {
    e.base = LogicExpansion::Base::LP;
  } else {
    throw InvalidArgument("unknown logic '" + raw + "' (expected Bal^S, LP^S or Classical)");
  }
  const std::string rest = caret == std::string::npos ? "{}" : text.substr(caret + 1);
  if (rest == "inconsistent") {
    e.special = LogicExpansion::Special::Inconsistent;
  } else {
    e.primes = PrimeSet::parse(rest);
  }
  e.validate();
  return e;
}

Family parse_family(const std::string& s) {
  if (s == "G" || s == "g" || s == "group") return Family::G;
  if (s == "P" || s == "p" || s == "mv") return Family::P;
  throw InvalidArgument("unknown family '" + s + "' (expected G or P)");
}

Assignment parse_assignments(const std::vector<std::string>& items) {
  Assignment env;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidArgument("expected VAR=VALUE, got '" + item + "'");
    const Term v = parse_term(trim(item.substr(0, eq)), Signature::Group);
    if (v.op() != Op::Var) throw InvalidArgument("expected a variable name in '" + item + "'");
    env[v.variable()] = parse_element(trim(item.substr(eq + 1)));
  }
  return env;
}

std::string bits_text(const Bits& b) {
  std::string s = "(";
  for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
  return s + ")";
}

std::string system_text(const IneqSystem& s) {
  if (s.rows.empty()) return "true";
  std::string out;
  for (std::size_t i = 0; i < s.rows.size(); ++i) out += (i ? ", " : "") + to_string(s.rows[i]) + " >= 0";
  return out;
}

const char* error_kind(const std::exception& e) {
  if (dynamic_cast<const CapExceeded*>(&e)) return "cap-exceeded";
  if (dynamic_cast<const FragmentError*>(&e)) return "fragment";
  if (dynamic_cast<const OverflowError*>(&e)) return "overflow";
  if (dynamic_cast<const ParseError*>(&e)) return "parse";
  if (dynamic_cast<const SignatureError*>(&e)) return "signature";
  if (dynamic_cast<const DimensionMismatch*>(&e)) return "dimension";
  if (dynamic_cast<const UniverseError*>(&e)) return "universe";
  if (dynamic_cast<const FamilyMismatch*>(&e)) return "family";
  if (dynamic_cast<const InvalidArgument*>(&e)) return "invalid-argument";
  return "internal";
}

int error_code(const std::exception& e) {
  if (dynamic_cast<const FragmentError*>(&e) || dynamic_cast<const OverflowError*>(&e)) return kExitFragment;
  return kExitInput;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact canonicalization and classification of EFD-sentences", "efdkit"};
  app.require_subcommand(1);
  Common common;
  if (const char* env = std::getenv("EFDKIT_SEED")) {
    try {
      common.seed = std::stoull(env);
    } catch (const std::logic_error&) {
      err << "efdkit: ignoring malformed EFDKIT_SEED '" << env << "'\n";
    }
  }
  std::function<Output()> action;

  const auto add_common = [&](CLI::App* sub, bool randomized) {
    sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_flag("--pretty", common.pretty, "Indent JSON output");
    if (randomized) {
      sub->add_option("--seed", common.seed, "Random seed (default 1729 or $EFDKIT_SEED)");
      sub->add_option("--budget", common.budget, "Sample budget");
    }
  };

  std::string sig_name = "group";
  const auto sig = [&] { return signature_from_string(sig_name); };
  std::size_t cap = kDefaultPermutationCap;

  // parse
  std::string parse_text, parse_kind = "auto";
  bool parse_expand = false;
  auto* parse = app.add_subcommand("parse", "Parse a term, identity or sentence and print its AST");
  parse->add_option("text", parse_text, "Input text")->required();
  parse->add_option("--sig", sig_name, "group | hoop | mv");
  parse->add_option("--kind", parse_kind, "auto | term | identity | sentence")
      ->check(CLI::IsMember({"auto", "term", "identity", "sentence"}));
  parse->add_flag("--expand", parse_expand, "Also expand macros into primitive operations");
  add_common(parse, false);
  parse->callback([&] {
    action = [&] {
      std::string kind = parse_kind;
      const std::string text = trim(parse_text);
      if (kind == "auto") {
        if (text.find("exists!") != std::string::npos || text == "boolean" || text == "absurd" ||
            text.rfind("delta ", 0) == 0 || text.rfind("epsilon ", 0) == 0) {
          kind = "sentence";
        } else if (text.rfind("forall", 0) == 0) {
          kind = "identity";
        } else {
          kind = "term";
        }
      }
      Output o;
      Json j;
      j["kind"] = kind;
      if (kind == "term") {
        const Term t = parse_term(text, sig());
        j["signature"] = std::string(to_string(sig()));
        j["text"] = print_term(t);
        j["ast"] = to_json(t);
        o.text = print_term(t);
        if (parse_expand) {
          const Term e = expand_macros(t, sig());
          j["expanded"] = print_term(e);
          o.text += "\n" + print_term(e);
        }
      } else if (kind == "identity") {
        const Identity id = parse_identity(text, sig());
        j["identity"] = to_json(id);
        o.text = print_identity(id);
      } else {
        const EFDSentence s = read_sentence(text, sig());
        j["sentence"] = to_json(s);
        const auto u = uniqueness_quasiidentity(s);
        j["uniqueness"] = print_quasiidentity(u);
        o.text = print_sentence(s) + "\n" + print_quasiidentity(u);
      }
      o.json = with_schema("parse", j);
      return o;
    };
  });

  // canon
  std::string canon_term;
  std::size_t canon_n = 0;
  auto* canon = app.add_subcommand("canon", "Piecewise-linear canonical form of a group term");
  canon->add_option("term", canon_term, "Group term in x-variables")->required();
  canon->add_option("--sig", sig_name, "Signature (group only)");
  canon->add_option("--cap", cap, "Maximum number of distinct linear forms");
  canon->add_option("--n", canon_n, "Ambient dimension (default: largest x index)");
  add_common(canon, false);
  canon->callback([&] {
    action = [&] {
      if (sig() != Signature::Group) throw FragmentError("canon takes group terms");
      const Term t = parse_term(canon_term, Signature::Group);
      const auto ln = distribute_to_lattice_normal(t, canon_n);
      const auto pl = piecewise_canonical(ln, cap);
      Output o;
      Json j;
      j["term"] = print_term(t);
      j["forms"] = Json::array();
      for (const auto& f : ln.forms) j["forms"].push_back(to_json(f));
      const Json body = to_json(pl);
      for (const auto& [k, v] : body.items()) j[k] = v;
      o.json = with_schema("piecewise", j);
      for (const auto& p : pl.pieces) o.text += system_text(p.region) + "  =>  " + to_string(p.form) + "\n";
      return o;
    };
  });

  // reduce
  std::int64_t reduce_k = 0;
  std::string reduce_term, reduce_sentence;
  auto* reduce = app.add_subcommand("reduce", "Reduce delta_{k,t} to delta_{k'}");
  reduce->add_option("--k", reduce_k, "Divisor k >= 1");
  reduce->add_option("--term", reduce_term, "Group term t(x)");
  reduce->add_option("--sentence", reduce_sentence, "A sentence of the form k z1 = t(x) instead of --k/--term");
  reduce->add_option("--cap", cap, "Maximum number of distinct linear forms");
  add_common(reduce, false);
  reduce->callback([&] {
    action = [&] {
      DeltaKT d;
      if (!reduce_sentence.empty()) {
        const auto got = as_delta_kt(read_sentence(reduce_sentence, Signature::Group));
        if (!got) throw FragmentError("not of the form k z1 = t(x): " + reduce_sentence);
        d = *got;
      } else {
        if (reduce_term.empty()) throw InvalidArgument("reduce needs --k and --term, or --sentence");
        d = DeltaKT{reduce_k, parse_term(reduce_term, Signature::Group)};
      }
      d.validate();
      const std::int64_t kp = reduce_delta_kt(d, cap);
      Output o;
      Json j;
      j["k"] = d.k;
      j["term"] = print_term(d.t);
      j["gcd"] = d.k / kp;
      j["k_prime"] = kp;
      o.json = with_schema("reduce", j);
      o.text = "k' = " + std::to_string(kp) + "\n";
      return o;
    };
  });

  // classify
  std::vector<std::string> cls_inputs, cls_files;
  bool cls_detail = false;
  auto* classify = app.add_subcommand("classify", "Canonical AE-class of a set of sentences");
  classify->add_option("sentences", cls_inputs, "Sentences or shorthands (delta K, epsilon K, boolean, absurd)");
  classify->add_option("--sentence", cls_inputs, "Sentence (repeatable)");
  classify->add_option("--file", cls_files, "File with one sentence per line");
  classify->add_option("--sig", sig_name, "group | mv");
  classify->add_option("--cap", cap, "Maximum number of distinct linear forms");
  classify->add_flag("--detail", cls_detail, "Include the per-sentence pipeline trace");
  add_common(classify, false);
  classify->callback([&] {
    action = [&] {
      const auto ss = gather_sentences(cls_inputs, cls_files, sig());
      Output o;
      if (sig() == Signature::Group) {
        const auto g = classify_group_sentences_detailed(ss, cap);
        Json j = to_json(g.cls);
        if (cls_detail) {
          j["k_primes"] = g.k_primes;
          j["refuted"] = g.refuted;
        }
        o.json = with_schema("class", j);
        o.text = g.cls.to_string() + "\n";
      } else if (sig() == Signature::MV) {
        const auto m = classify_mv_sentences_detailed(ss, cap);
        Json j = cls_detail ? to_json(m) : to_json(m.cls);
        if (!cls_detail) j["per_paper_scope"] = m.per_paper_scope;
        o.json = with_schema("class", j);
        o.text = m.cls.to_string() + (m.per_paper_scope ? " (per-paper-scope)" : "") + "\n";
      } else {
        throw FragmentError("classification is available for group and mv sentences");
      }
      return o;
    };
  });

  // translate
  std::vector<std::string> tr_inputs;
  std::string tr_term;
  auto* translate = app.add_subcommand("translate", "Hoop -> group star translation, or MV -> hoop -> group");
  translate->add_option("sentences", tr_inputs, "Sentences");
  translate->add_option("--term", tr_term, "A single hoop term to star-translate");
  translate->add_option("--sig", sig_name, "hoop | mv");
  add_common(translate, false);
  translate->callback([&] {
    action = [&] {
      Output o;
      Json j;
      if (!tr_term.empty()) {
        if (sig() != Signature::Hoop) throw FragmentError("term translation takes hoop terms");
        const Term st = star_term(parse_term(tr_term, Signature::Hoop));
        j["star"] = print_term(st);
        j["ast"] = to_json(st);
        o.json = with_schema("translate", j);
        o.text = print_term(st) + "\n";
        return o;
      }
      j["results"] = Json::array();
      for (const auto& s : gather_sentences(tr_inputs, {}, sig())) {
        Json r;
        r["input"] = print_sentence(s);
        if (s.signature == Signature::Hoop) {
          const auto st = star_sentence(s);
          r["star"] = print_sentence(st);
          o.text += print_sentence(st) + "\n";
        } else if (s.signature == Signature::MV) {
          r["branches"] = Json::array();
          for (const auto& basic : phi_rad_decompose(s)) {
            const auto h = mv_to_hoop(basic);
            const auto st = star_sentence(h);
            Json b;
            b["sign"] = basic.sign;
            b["hoop"] = print_sentence(h);
            b["group"] = print_sentence(st);
            r["branches"].push_back(b);
            o.text += bits_text(basic.sign) + "  " + print_sentence(h) + "\n    " + print_sentence(st) + "\n";
          }
        } else {
          throw FragmentError("translate takes hoop or mv sentences");
        }
        j["results"].push_back(r);
      }
      o.json = with_schema("translate", j);
      return o;
    };
  });

  // decompose
  std::vector<std::string> dec_inputs;
  auto* decompose = app.add_subcommand("decompose", "Check an MV sentence in 2 and split it into radical-basic sentences");
  decompose->add_option("sentence", dec_inputs, "MV sentence")->required();
  add_common(decompose, false);
  decompose->callback([&] {
    action = [&] {
      Output o;
      Json j;
      j["results"] = Json::array();
      for (const auto& s : gather_sentences(dec_inputs, {}, Signature::MV)) {
        Json r;
        r["input"] = print_sentence(s);
        const auto two = check_in_two(s);
        r["two"] = to_json(two);
        if (!two.holds) {
          o.code = kExitFragment;
          o.text += "fails in 2 at e = " + bits_text(*two.failing) + " (" + two.reason + ")\n";
        } else {
          r["sentences"] = Json::array();
          for (const auto& b : phi_rad_decompose(s)) {
            r["sentences"].push_back(to_json(b));
            o.text += bits_text(b.sign) + " -> " + bits_text(b.sign_z) + "  " + print_sentence(b.sentence) + "\n";
          }
        }
        j["results"].push_back(r);
      }
      o.json = with_schema("decompose", j);
      return o;
    };
  });

  // fulldim
  std::string fd_system, fd_rows;
  std::size_t fd_n = 0;
  std::size_t fd_samples = 0;
  auto* fulldim = app.add_subcommand("fulldim", "Full-dimensionality of a homogeneous inequality system");
  fulldim->add_option("system", fd_system, R"(JSON {"n": 2, "rows": [[1,0],[0,1]]})");
  fulldim->add_option("--rows", fd_rows, "Rows as '1 0; 0 1' (with --n)");
  fulldim->add_option("--n", fd_n, "Dimension for --rows");
  fulldim->add_option("--samples", fd_samples, "Also return this many sampled solutions");
  add_common(fulldim, true);
  fulldim->callback([&] {
    action = [&] {
      IneqSystem s;
      if (!fd_system.empty()) {
        Json in;
        try {
          in = Json::parse(fd_system);
        } catch (const Json::parse_error& e) {
          throw InvalidArgument(std::string("bad system JSON: ") + e.what());
        }
        s = ineq_from_json(in);
      } else {
        s.n = fd_n;
        std::stringstream rows(fd_rows);
        std::string row;
        while (std::getline(rows, row, ';')) {
          std::stringstream cells(row);
          std::vector<std::int64_t> r;
          std::string cell;
          while (cells >> cell) r.push_back(parse_k(cell));
          if (!r.empty()) s.rows.emplace_back(std::move(r));
        }
        s.validate();
      }
      const auto r = is_full_dimensional(s);
      Output o;
      Json j;
      j["system"] = to_json(s);
      const Json body = to_json(r);
      for (const auto& [k, v] : body.items()) j[k] = v;
      if (fd_samples) {
        j["samples"] = Json::array();
        for (const auto& x : sample_solutions(s, fd_samples, common.seed)) j["samples"].push_back(point_json(x));
      }
      o.json = with_schema("fulldim", j);
      o.text = r.full ? "full-dimensional\n" : "not full-dimensional; vanishing form " + to_string(*r.vanishing) + "\n";
      return o;
    };
  });

  // eval
  std::string ev_model = "q", ev_term;
  std::vector<std::string> ev_assign;
  std::string ev_sig;
  auto* evalc = app.add_subcommand("eval", "Evaluate a term in a witness algebra");
  evalc->add_option("term", ev_term, "Term")->required();
  evalc->add_option("--model", ev_model, "z, q, qs:2,3, lex(z,qs:2), pos(q), gamma(qs:2,3), two");
  evalc->add_option("--assign", ev_assign, "VAR=VALUE, e.g. x1=1/2 or z1=(0, 1/3) (repeatable)");
  evalc->add_option("--sig", ev_sig, "Signature (default: the model's)");
  add_common(evalc, false);
  evalc->callback([&] {
    action = [&] {
      const Algebra a = Algebra::parse(ev_model);
      const Signature s = ev_sig.empty() ? a.species() : signature_from_string(ev_sig);
      const Term t = parse_term(ev_term, s);
      const Element v = eval(a, t, parse_assignments(ev_assign));
      Output o;
      Json j;
      j["model"] = a.describe();
      j["term"] = print_term(t);
      j["value"] = to_json(v);
      o.json = with_schema("eval", j);
      o.text = to_string(v) + "\n";
      return o;
    };
  });

  // check
  std::string ck_model = "q", ck_sig;
  std::vector<std::string> ck_inputs;
  std::string ck_mode = "sentence";
  auto* check = app.add_subcommand("check", "Check a sentence or identity in a witness algebra on samples");
  check->add_option("sentence", ck_inputs, "Sentence, shorthand or identity")->required();
  check->add_option("--model", ck_model, "Model descriptor");
  check->add_option("--sig", ck_sig, "Signature (default: the model's)");
  check->add_option("--mode", ck_mode, "sentence | uniqueness | identity")
      ->check(CLI::IsMember({"sentence", "uniqueness", "identity"}));
  add_common(check, true);
  check->callback([&] {
    action = [&] {
      const Algebra a = Algebra::parse(ck_model);
      const Signature s = ck_sig.empty() ? a.species() : signature_from_string(ck_sig);
      const std::size_t budget = common.budget ? common.budget : 500;
      Output o;
      Json j;
      j["model"] = a.describe();
      j["results"] = Json::array();
      for (const auto& text : ck_inputs) {
        Json r;
        Verdict v;
        if (ck_mode == "identity") {
          const Identity id = parse_identity(text, s);
          r["input"] = print_identity(id);
          v = check_identity_sampled(a, id, budget, common.seed);
        } else {
          const EFDSentence phi = read_sentence(text, s);
          r["input"] = print_sentence(phi);
          v = ck_mode == "uniqueness" ? check_uniqueness_sampled(a, phi, budget, common.seed)
                                      : check_sentence_sampled(a, phi, budget, common.seed);
          // Exact decisions where the model supports them.
          const std::string head = trim(text).substr(0, trim(text).find(' '));
          if (ck_mode == "sentence" && (head == "delta" || head == "epsilon")) {
            const std::int64_t k = parse_k(trim(text).substr(head.size()));
            try {
              r["exact"] = head == "delta" ? holds_delta_exact(a, k) : holds_epsilon_exact(a, k);
            } catch (const Error&) {
            }
          }
        }
        r["verdict"] = to_json(v);
        o.text += r["input"].get<std::string>() + ": " + to_string(v.status) + " (" + v.confidence + ")\n";
        j["results"].push_back(r);
      }
      o.json = with_schema("check", j);
      return o;
    };
  });

  // lattice
  std::string lat_op;
  std::vector<std::string> lat_args;
  std::string lat_family = "G", lat_primes = "2,3,5", lat_base = "bal";
  auto* lattice = app.add_subcommand("lattice", "Class and logic-expansion lattices");
  lattice->add_option("op", lat_op, "includes A B (A is a subclass of B) | meet | join | order | classes | expansions")
      ->required()
      ->check(CLI::IsMember({"includes", "meet", "join", "order", "classes", "expansions"}));
  lattice->add_option("args", lat_args, "Classes (trivial, boolean, {2,3}, all\\{5}) or expansions (Bal^{2}, Classical)");
  lattice->add_option("--family", lat_family, "G | P");
  lattice->add_option("--primes", lat_primes, "Primes of the finite shadow");
  lattice->add_option("--base", lat_base, "bal | lp (for expansions)");
  add_common(lattice, false);
  lattice->callback([&] {
    action = [&] {
      Output o;
      Json j;
      j["op"] = lat_op;
      const auto need = [&](std::size_t k) {
        if (lat_args.size() != k) throw InvalidArgument("lattice " + lat_op + " takes " + std::to_string(k) + " arguments");
      };
      if (lat_op == "includes" || lat_op == "meet" || lat_op == "join") {
        need(2);
        const Family f = parse_family(lat_family);
        const AEClass a = parse_class(lat_args[0], f), b = parse_class(lat_args[1], f);
        a.validate();
        b.validate();
        if (lat_op == "includes") {
          j["result"] = includes(a, b);
          o.text = includes(a, b) ? "true\n" : "false\n";
        } else {
          const AEClass r = lat_op == "meet" ? meet(a, b) : join(a, b);
          j["result"] = lattice_json(r);
          o.text = r.to_string() + "\n";
        }
      } else if (lat_op == "order") {
        need(2);
        const auto o2 = expansion_order(parse_expansion(lat_args[0]), parse_expansion(lat_args[1]));
        j["result"] = to_string(o2);
        o.text = to_string(o2) + "\n";
      } else {
        const auto ps = parse_prime_list(lat_primes);
        FinitePoset p;
        FinitePoset reference;
        const auto cube = boolean_cube(ps.size());
        if (lat_op == "classes") {
          const Family f = parse_family(lat_family);
          p = class_poset(f, ps);
          reference = ordinal_sum(chain_poset(f == Family::G ? 1 : 2), cube);
        } else {
          const auto base = parse_expansion(lat_base).base;
          p = expansion_poset(base, ps);
          reference = dual(ordinal_sum(chain_poset(base == LogicExpansion::Base::Bal ? 1 : 2), cube));
        }
        const bool iso = is_isomorphic(p, reference);
        j["poset"] = to_json(p);
        j["matches_reference_shape"] = iso;
        for (const auto& c : j["poset"]["covers"]) o.text += c[0].get<std::string>() + " < " + c[1].get<std::string>() + "\n";
        o.text += iso ? "isomorphic to the reference shape\n" : "NOT isomorphic to the reference shape\n";
      }
      o.json = with_schema("lattice", j);
      return o;
    };
  });

  // axioms
  std::string ax_logic;
  auto* axioms = app.add_subcommand("axioms", "Axioms of a logic expansion");
  axioms->add_option("logic", ax_logic, "Bal^{2,3} or LP^{3}")->required();
  add_common(axioms, false);
  axioms->callback([&] {
    action = [&] {
      const auto e = parse_expansion(ax_logic);
      const auto list = emit_axioms(e);
      const auto meta = base_metadata(e.base);
      Output o;
      Json j;
      j["logic"] = to_json(e);
      j["equivalence_formulas"] = meta.equivalence_formulas;
      j["defining_equations"] = meta.defining_equations;
      j["axioms"] = Json::array();
      for (const auto& a : list) {
        j["axioms"].push_back(to_json(a));
        o.text += a.name + ": " + a.formula + "\n";
      }
      o.json = with_schema("axioms", j);
      return o;
    };
  });

  // selftest
  std::vector<std::string> st_suites;
  auto* selftest = app.add_subcommand("selftest", "Run built-in property suites (all when none is named)");
  selftest->add_option("suites", st_suites, "Suite names")->check(CLI::IsMember(suite_names()));
  add_common(selftest, true);
  selftest->callback([&] {
    action = [&] {
      const auto names = st_suites.empty() ? suite_names() : st_suites;
      Output o;
      Json j;
      j["suites"] = Json::array();
      bool all = true;
      for (const auto& name : names) {
        const auto r = run_suite(name, common.seed, common.budget);
        all = all && r.pass();
        j["suites"].push_back(to_json(r));
        o.text += std::string(r.pass() ? "PASS " : "FAIL ") + name + "\n";
        for (const auto& p : r.properties) {
          o.text += std::string(p.pass() ? "  ok   " : "  FAIL ") + p.name + " (" + std::to_string(p.checks) + " checks)\n";
          for (const auto& ce : p.counterexamples) o.text += "         " + ce + "\n";
        }
      }
      j["pass"] = all;
      o.json = with_schema("selftest-run", j);
      o.code = all ? kExitOk : kExitProperty;
      return o;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    const Output o = action();
    if (common.format == "text") {
      out << o.text;
    } else {
      out << (common.pretty ? o.json.dump(2) : o.json.dump()) << "\n";
    }
    return o.code;
  } catch (const std::exception& e) {
    Json j;
    j["error"] = error_kind(e);
    j["message"] = e.what();
    if (common.format == "json") out << with_schema("error", j).dump() << "\n";
    err << "efdkit: " << e.what() << "\n";
    return dynamic_cast<const Error*>(&e) ? error_code(e) : kExitInput;
  }
}

}  // namespace efdkit
