#include "starrep/cli.hpp"
#include "starrep/conditions.hpp"
#include "starrep/gram.hpp"
#include "starrep/hankel.hpp"
#include "starrep/presets.hpp"
#include "starrep/rewrite.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace starrep {

using nlohmann::ordered_json;

namespace {

constexpr std::size_t kDoubleMaxDegree = 12;
constexpr std::size_t kDoubleMaxIterations = 64;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream out;
  for (unsigned int k = 0; k < len; ++k)
    out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[k]);
  return out.str();
}

struct Report {
  std::string command;
  std::string digest;
  std::string verdict = "ok";
  ordered_json data = ordered_json::object();
  ordered_json witnesses = ordered_json::array();
};

int exit_code(const std::string& verdict) {
  if (verdict == "holds" || verdict == "ok") return 0;
  if (verdict == "fails") return 1;
  if (verdict == "inconclusive") return 2;
  return 3;
}

ordered_json polys(const std::vector<Polynomial>& ps, const Alphabet& a) {
  ordered_json out = ordered_json::array();
  for (auto& p : ps) out.push_back(p.format(a));
  return out;
}

ordered_json words_json(const std::vector<Word>& ws, const Alphabet& a) {
  ordered_json out = ordered_json::array();
  for (auto& w : ws) out.push_back(a.format(w));
  return out;
}

ordered_json trace_json(const std::vector<RewriteStep>& steps, const Alphabet& a) {
  ordered_json out = ordered_json::array();
  for (auto& s : steps)
    out.push_back({{"relation", s.relation},
                   {"left", a.format(s.left)},
                   {"right", a.format(s.right)},
                   {"coefficient", s.coefficient.to_string()}});
  return out;
}

ordered_json witness_json(const Witness& w, const Alphabet& a) {
  ordered_json out = {{"kind", w.kind}, {"relations", w.relations}, {"words", words_json(w.words, a)}};
  if (w.polynomial) out["polynomial"] = w.polynomial->format(a);
  if (!w.trace.empty()) out["trace"] = trace_json(w.trace, a);
  if (!w.note.empty()) out["note"] = w.note;
  return out;
}

void add_condition(Report& r, const ConditionReport& c, const Alphabet& a) {
  r.verdict = std::string(to_string(c.verdict));
  r.data["condition"] = c.condition;
  if (c.bound) r.data["bound"] = *c.bound;
  if (!c.note.empty()) r.data["note"] = c.note;
  if (!c.parameters.empty()) {
    ordered_json params = ordered_json::object();
    for (auto& [k, v] : c.parameters) params[k] = v;
    r.data["parameters"] = params;
  }
  for (auto& w : c.witnesses) r.witnesses.push_back(witness_json(w, a));
}

ordered_json system_json(const RewriteSystem& s) {
  const Alphabet& a = s.alphabet();
  std::vector<std::string> order;
  for (Symbol sym : s.order().descending()) order.push_back(a.name(sym));
  return {{"status", std::string(to_string(s.status()))},
          {"order", order},
          {"relations", polys(s.relations(), a)},
          {"leading_words", words_json(s.leading_words(), a)}};
}

void print_text(const ordered_json& j, std::ostream& out, int indent) {
  const std::string pad(indent, ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto& v = it.value();
    if (v.is_object()) {
      out << pad << it.key() << ":\n";
      print_text(v, out, indent + 2);
    } else if (v.is_array()) {
      out << pad << it.key() << ":";
      bool scalar = std::all_of(v.begin(), v.end(), [](auto& e) { return e.is_primitive(); });
      if (scalar && v.size() <= 12 && v.dump().size() < 100) {
        // words containing spaces would run together
        const bool spaced = std::any_of(v.begin(), v.end(), [](auto& e) {
          return e.is_string() && e.template get<std::string>().find(' ') != std::string::npos;
        });
        const char* sep = " ";
        for (auto& e : v) {
          out << sep << (e.is_string() ? e.get<std::string>() : e.dump());
          if (spaced) sep = ", ";
        }
        out << "\n";
      } else {
        out << "\n";
        for (auto& e : v) {
          if (e.is_object()) {
            out << pad << "  -\n";
            print_text(e, out, indent + 4);
          } else {
            out << pad << "  " << (e.is_string() ? e.get<std::string>() : e.dump()) << "\n";
          }
        }
      }
    } else {
      out << pad << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

void emit(const Report& r, bool json, long long millis, std::ostream& out) {
  if (json) {
    ordered_json doc = {{"command", r.command},
                        {"input_digest", r.digest},
                        {"verdict", r.verdict},
                        {"data", r.data},
                        {"witnesses", r.witnesses},
                        {"millis", millis}};
    out << doc.dump(2) << "\n";
    return;
  }
  out << r.command << ": " << r.verdict << "\n";
  print_text(r.data, out, 2);
  for (std::size_t k = 0; k < r.witnesses.size(); ++k) {
    out << "  witness " << k + 1 << ":\n";
    print_text(r.witnesses[k], out, 4);
  }
}

Bindings parse_overrides(const std::vector<std::string>& items) {
  Bindings out;
  for (auto& item : items) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("--param expects NAME=VALUE, got '" + item + "'");
    std::string name = item.substr(0, eq);
    try {
      out[name] = parse_scalar(item.substr(eq + 1));
    } catch (const ParseError& e) {
      throw InputError("--param " + name + ": " + e.message);
    }
  }
  return out;
}

std::string digest_input(const std::string& source, const Bindings& overrides) {
  std::string data = source;
  for (auto& [k, v] : overrides) data += "\n--param " + k + "=" + v.to_string();
  return sha256_hex(data);
}

} // namespace

std::string load_source(const std::string& file) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(file, ec)) {
    std::ifstream in(file, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  if (auto text = preset_text(file)) return *text;
  throw ParseError("no such file or preset '" + file + "'", 0, 1);
}

RewriteSystem prepare_system(const Presentation& p, const Bindings& overrides) {
  RewriteSystem raw = p.system(overrides);
  if (!p.star_double) return raw;
  RewriteSystem base = complete(raw, kDoubleMaxDegree, kDoubleMaxIterations);
  if (base.status() != CompletionStatus::closed)
    throw PreconditionError("completion of the *-double base did not close within the caps");
  std::vector<Polynomial> rels = base.relations();
  for (auto& r : base.relations()) rels.push_back(r.star());
  RewriteSystem doubled(base.alphabet(), rels);
  if (is_closed_under_compositions(doubled).holds()) return doubled.with_status(CompletionStatus::closed);
  if (auto found = find_star_double(base)) return *found;
  throw PreconditionError("no starred-letter order makes the *-double closed");
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  CLI::App app{"Exact tools for *-algebras given by generators and relations"};
  app.name("starrep");
  app.require_subcommand(1);
  bool json = false;
  std::vector<std::string> param_items;
  app.add_flag("--json", json, "Emit one JSON report document");
  app.add_option("--param", param_items, "Override a parameter binding NAME=VALUE")->allow_extra_args(false);

  std::string file, expr, condition, preset_name, out_path;
  std::size_t max_deg = 12, max_iter = 50, max_len = 3, size = 8;
  bool adjoint = false, faithful = false;

  auto* c_complete = app.add_subcommand("complete", "Critical-pair completion");
  c_complete->add_option("FILE", file, "Presentation file or preset")->required();
  c_complete->add_option("--max-deg", max_deg, "Discard compositions above this degree");
  c_complete->add_option("--max-iter", max_iter, "Round cap");

  auto* c_reduce = app.add_subcommand("reduce", "Normal form of an expression");
  c_reduce->add_option("FILE", file)->required();
  c_reduce->add_option("--expr", expr, "Expression to reduce")->required();

  auto* c_check = app.add_subcommand("check", "Decide a condition");
  c_check->add_option("FILE", file)->required();
  c_check->add_option("--condition", condition)
      ->required()
      ->check(CLI::IsMember(condition_names()));
  std::optional<std::size_t> scan_len;
  c_check->add_option("--max-len", scan_len, "Word length bound for scans");

  auto* c_gram = app.add_subcommand("gram", "Gram weights and minors");
  c_gram->add_option("FILE", file)->required();
  c_gram->add_option("--size", size, "Number of basis words")->required();

  auto* c_rep = app.add_subcommand("rep", "Representation checks");
  c_rep->add_option("FILE", file)->required();
  auto* adj = c_rep->add_flag("--adjoint", adjoint, "Check <fz, g> = <f, gz*> on basis pairs");
  auto* fai = c_rep->add_flag("--faithful", faithful, "Faithfulness witness for --expr");
  adj->excludes(fai);
  c_rep->add_option("--expr", expr);
  c_rep->add_option("--max-len", max_len, "Basis word length for --adjoint")->default_val(3);

  auto* c_demo = app.add_subcommand("demo", "Worked constructions");
  std::string demo_name;
  c_demo->add_option("NAME", demo_name)->required()->check(CLI::IsMember({"hankel"}));
  c_demo->add_option("--size", size, "Matrix size N");

  auto* c_preset = app.add_subcommand("preset", "Write a bundled presentation");
  c_preset->add_option("NAME", preset_name)->required();
  c_preset->add_option("--out", out_path, "Destination file (stdout if omitted)");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<const char*> argv{"starrep"};
  for (auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }

  Report r;
  for (auto* sub : app.get_subcommands()) r.command = sub->get_name();
  // Input errors exit 3; in JSON mode they still produce one report document.
  auto fail = [&](const std::string& message, ordered_json position) {
    if (!json) {
      err << "input error: " << message << "\n";
      return 3;
    }
    r.verdict = "error";
    r.data = ordered_json{{"message", message}};
    for (auto& [k, v] : position.items()) r.data[k] = v;
    r.witnesses = ordered_json::array();
    emit(r, true, 0, out);
    return 3;
  };
  try {
    const Bindings overrides = parse_overrides(param_items);
    if (c_preset->parsed()) {
      r.command = "preset";
      auto text = preset_text(preset_name);
      if (!text) throw InputError("unknown preset '" + preset_name + "'");
      r.digest = sha256_hex(*text);
      if (out_path.empty()) {
        out << *text;
        return 0;
      }
      std::ofstream f(out_path, std::ios::binary);
      if (!f) throw InputError("cannot write '" + out_path + "'");
      f << *text;
      r.data["name"] = preset_name;
      r.data["path"] = out_path;
    } else if (c_demo->parsed()) {
      r.command = "demo " + demo_name;
      r.digest = sha256_hex("hankel:" + std::to_string(size));
      HankelReport h = hankel_demo(size);
      std::vector<std::string> moments, ma, mb;
      for (auto& m : h.moments) moments.push_back(m.get_str());
      for (auto& m : h.minors_a) ma.push_back(m.to_string());
      for (auto& m : h.minors_a_prime) mb.push_back(m.to_string());
      r.data["size"] = size;
      r.data["moments"] = moments;
      r.data["minors_A"] = ma;
      r.data["minors_A_prime"] = mb;
      r.data["minors_positive"] = h.minors_positive;
      r.data["block_diagonal"] = h.block_diagonal;
      r.data["example"] = {{"g", "u_0 + a_1"},
                           {"norm2", h.example.norm2.get_str()},
                           {"right_image_norm2", h.example.right_image2.get_str()},
                           {"left_image_norm2", h.example.left_image2.get_str()}};
      r.verdict = h.minors_positive && h.block_diagonal && h.example_contracts ? "holds" : "fails";
    } else {
      const std::string source = load_source(file);
      r.digest = digest_input(source, overrides);
      Presentation p = parse_presentation(source);
      const Alphabet alphabet = p.alphabet();

      if (c_complete->parsed()) {
        r.command = "complete";
        CompletionResult res = complete_traced(p.system(overrides), max_deg, max_iter);
        IdealEquality eq = certify_same_ideal(res);
        r.data["system"] = system_json(res.system);
        r.data["size"] = res.system.size();
        r.data["rounds"] = res.trace.rounds;
        r.data["discarded"] = res.trace.discarded;
        r.data["same_ideal"] = eq.holds();
        if (res.system.status() == CompletionStatus::closed && p.star_double) {
          RewriteSystem d = prepare_system(p, overrides);
          r.data["double"] = system_json(d);
        }
        r.verdict = res.system.status() == CompletionStatus::closed
                        ? (eq.holds() ? "holds" : "fails")
                        : "inconclusive";
      } else if (c_reduce->parsed()) {
        r.command = "reduce";
        RewriteSystem s = prepare_system(p, overrides);
        Polynomial f = parse_expression(expr, alphabet, p.bindings(overrides));
        RewriteCertificate cert = reduce(f, s);
        r.data["input"] = f.format(alphabet);
        r.data["normal_form"] = cert.normal_form.format(alphabet);
        r.data["steps"] = trace_json(cert.steps, alphabet);
        r.data["certificate_verified"] = cert.verify(s);
        if (s.status() != CompletionStatus::closed && !is_closed_under_compositions(s).holds())
          r.data["note"] = "relations are not closed; the result is a normal form, not canonical";
      } else if (c_check->parsed()) {
        r.command = "check " + condition;
        RewriteSystem s = prepare_system(p, overrides);
        const Alphabet& a = s.alphabet();
        add_condition(r, check_condition(s, condition, scan_len), a);
      } else if (c_gram->parsed()) {
        r.command = "gram";
        GramSession g(prepare_system(p, overrides));
        const Alphabet& a = g.system().alphabet();
        try {
          g.choose_xi(size);
          std::vector<std::string> words, xi, minors;
          for (std::size_t k = 1; k <= size; ++k) words.push_back(a.format(g.word(k)));
          for (auto& v : g.xi()) xi.push_back(v.get_str());
          for (auto& v : g.minors()) minors.push_back(v.get_str());
          ordered_json matrix = ordered_json::array();
          for (auto& row : g.gram_matrix(size)) {
            ordered_json jr = ordered_json::array();
            for (auto& v : row) jr.push_back(v.to_string());
            matrix.push_back(jr);
          }
          r.data["words"] = words;
          r.data["xi"] = xi;
          r.data["minors"] = minors;
          r.data["matrix"] = matrix;
          r.verdict = "holds";
        } catch (const NonExpandingViolation& v) {
          r.verdict = "fails";
          r.witnesses.push_back({{"kind", "non-expanding-violation"},
                                 {"entry", {v.i, v.j}},
                                 {"references", v.k},
                                 {"words", {a.format(g.word(v.i)), a.format(g.word(v.j)), a.format(v.word)}},
                                 {"note", v.what()}});
        }
      } else if (c_rep->parsed()) {
        GramSession g(prepare_system(p, overrides));
        const Alphabet& a = g.system().alphabet();
        if (faithful) {
          r.command = "rep faithful";
          if (expr.empty()) throw InputError("--faithful needs --expr");
          Polynomial f = normal_form(parse_expression(expr, alphabet, p.bindings(overrides)), g.system());
          if (f.is_zero()) throw InputError("expression is zero in the algebra");
          auto [word, coeff] = g.faithfulness_witness(f);
          const Scalar lc = f.leading_coefficient(g.system().order());
          r.data["f"] = f.format(a);
          r.data["word"] = a.format(word);
          r.data["coefficient"] = coeff.to_string();
          r.data["leading_coefficient"] = lc.to_string();
          r.verdict = coeff == lc && !coeff.is_zero() ? "holds" : "fails";
        } else if (adjoint) {
          r.command = "rep adjoint";
          std::vector<Word> basis = enumerate_basis_words(g.system(), max_len);
          std::size_t checked = 0;
          r.verdict = "holds";
          for (Symbol sym : a.symbols()) {
            Polynomial z = normal_form(Polynomial(Word{sym}), g.system());
            for (auto& f : basis)
              for (auto& h : basis) {
                ++checked;
                try {
                  if (!g.adjoint_check(z, Polynomial(f), Polynomial(h))) {
                    r.verdict = "fails";
                    if (r.witnesses.size() < 32)
                      r.witnesses.push_back({{"kind", "adjoint-mismatch"},
                                             {"words", {a.name(sym), a.format(f), a.format(h)}}});
                  }
                } catch (const NonExpandingViolation& v) {
                  r.verdict = "fails";
                  r.witnesses.push_back({{"kind", "non-expanding-violation"}, {"note", v.what()}});
                  break;
                }
              }
          }
          r.data["max_len"] = max_len;
          r.data["basis_words"] = basis.size();
          r.data["pairs_checked"] = checked;
        } else {
          throw InputError("rep needs --adjoint or --faithful");
        }
      }
    }
  } catch (const ParseError& e) {
    return fail(e.what(), ordered_json{{"line", e.line}, {"column", e.column}});
  } catch (const PreconditionError& e) {
    return fail(std::string("precondition: ") + e.what(), ordered_json::object());
  } catch (const InputError& e) {
    return fail(e.what(), ordered_json::object());
  } catch (const std::invalid_argument& e) {
    return fail(e.what(), ordered_json::object());
  }
  const auto millis =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  emit(r, json, millis, out);
  return exit_code(r.verdict);
}

} // namespace starrep
