#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ltlteach/characterize.hpp"
#include "ltlteach/errors.hpp"
#include "ltlteach/formula.hpp"
#include "ltlteach/sample.hpp"
#include "ltlteach/verification.hpp"

using namespace ltlteach;

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;
constexpr int kExhausted = 3;

Alphabet parse_ap(const std::string& csv) {
  std::vector<std::string> atoms;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
    while (!tok.empty() && tok.back() == ' ') tok.pop_back();
    if (!tok.empty()) atoms.push_back(tok);
  }
  return Alphabet(atoms);
}

DualVariant parse_variant(const std::string& v) {
  if (v == "corrected") return DualVariant::Corrected;
  if (v == "paper") return DualVariant::Paper;
  throw CLI::ValidationError("--dual-variant must be corrected or paper");
}

void write_out(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text;
}

CharacterizationReport run_characterize(const FormulaPtr& f,
                                        const Alphabet& ap,
                                        const std::string& fragment,
                                        const CharacterizeOptions& opts) {
  if (fragment == "monotone") return characterize_monotone(f, ap, opts);
  if (fragment == "monotone-g") return characterize_monotone_G(f, ap, opts);
  if (fragment == "x-omega") return characterize_X_omega(f, ap, opts);
  if (fragment.rfind("finite:", 0) == 0)
    return characterize_finite_fragment(f, parse_ops(fragment.substr(7)), ap,
                                        opts);
  throw CLI::ValidationError(
      "--fragment must be monotone, monotone-g, x-omega, or finite:<OPS>");
}

int run(int argc, char** argv) {
  CLI::App app{"teaching sets and transfinite evaluation for LTL fragments"};
  app.require_subcommand(1);

  std::string ap_csv, formula_text, sample_path, fragment = "monotone";
  std::string out_path, variant = "corrected", ops_csv, family_name;
  std::string word_text, expr_text;
  size_t max_size = 0, max_len = 4, budget = 1000000, instantiate_len = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--ap", ap_csv, "comma-separated atomic propositions");
    cmd->add_option("--formula", formula_text, "LTL formula");
    cmd->add_option("--sample", sample_path, "sample file path");
    cmd->add_option("--max-size", max_size, "formula size bound");
    cmd->add_option("--max-len", max_len, "word length bound");
    cmd->add_option("--budget", budget, "work budget");
    cmd->add_option("--out", out_path, "output file (default stdout)");
    cmd->add_option("--dual-variant", variant, "corrected|paper");
  };

  CLI::App* c_char = app.add_subcommand("characterize",
                                        "emit a uniquely characterizing sample");
  add_common(c_char);
  c_char->add_option("--fragment", fragment,
                     "monotone|monotone-g|x-omega|finite:<OPS>");

  CLI::App* c_schem = app.add_subcommand(
      "characterize-schematic", "characterizing sample as schematic examples");
  add_common(c_schem);

  CLI::App* c_eval = app.add_subcommand("eval",
                                        "evaluate a formula on a word");
  add_common(c_eval);
  c_eval->add_option("--word", word_text, "finite word, e.g. {p}.{}");
  c_eval->add_option("--expr", expr_text, "word expression, e.g. {}^w.{p}");

  CLI::App* c_fits = app.add_subcommand("fits", "check fit against a sample");
  add_common(c_fits);
  c_fits->add_option("--instantiate-len", instantiate_len,
                     "judge schemas on instances up to this length");

  CLI::App* c_verify = app.add_subcommand("verify-unique",
                                          "uniqueness within a fragment");
  add_common(c_verify);
  c_verify->add_option("--ops", ops_csv, "operator set, e.g. F,sF,&,|");

  CLI::App* c_classify = app.add_subcommand(
      "classify", "finite-word characterizability of an operator set");
  c_classify->add_option("--ops", ops_csv, "operator set, e.g. F,&")
      ->required();

  CLI::App* c_adv = app.add_subcommand("adversary",
                                       "fitting inequivalent competitor");
  add_common(c_adv);
  c_adv->add_option("--family", family_name,
                    "x-or|f-and-omega|until|x-and-not|fx-and-or")
      ->required();

  CLI::App* c_teach = app.add_subcommand("teach", "Gold characteristic sample");
  add_common(c_teach);
  c_teach->add_option("--ops", ops_csv, "operator set");

  CLI::App* c_learn = app.add_subcommand("learn",
                                         "first enumerated fitting formula");
  add_common(c_learn);
  c_learn->add_option("--ops", ops_csv, "operator set");

  CLI::App* c_oracle = app.add_subcommand(
      "oracle", "canonical-set upward-closure brute-force check");
  add_common(c_oracle);

  CLI::App* c_size = app.add_subcommand("size-report",
                                        "sample size and length bounds");
  add_common(c_size);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return kTrue;
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message; normalize the exit code
    return kUsage;
  }

  CharacterizeOptions copts;
  copts.dual_variant = parse_variant(variant);
  copts.budget = budget;
  copts.max_size = max_size;

  if (c_char->parsed() || c_schem->parsed()) {
    FormulaPtr f;
    Alphabet ap = parse_ap(ap_csv);
    f = parse_formula(formula_text, ap);
    CharacterizationReport r =
        c_schem->parsed() ? characterize_schematic(f, ap, copts)
                          : run_characterize(f, ap, fragment, copts);
    write_out(out_path, print_sample(r.sample));
    return kTrue;
  }
  if (c_eval->parsed()) {
    Alphabet ap = parse_ap(ap_csv);
    FormulaPtr f = parse_formula(formula_text, ap);
    bool value;
    if (!word_text.empty()) {
      value = eval_finite(f, parse_word(word_text, ap), ap);
    } else if (!expr_text.empty()) {
      // Route through the fit checker's payload dispatch.
      Sample probe;
      probe.ap = ap;
      probe.add_expr(true, parse_expr(expr_text, ap));
      value = fits(f, probe).ok;
    } else {
      throw CLI::ValidationError("eval needs --word or --expr");
    }
    std::cout << (value ? "true" : "false") << "\n";
    return value ? kTrue : kFalse;
  }
  if (c_fits->parsed()) {
    Sample s = load_sample(sample_path);
    FormulaPtr f = parse_formula(formula_text, s.ap);
    FitOptions fo;
    fo.schema_instantiate_len = instantiate_len;
    FitResult r = fits(f, s, fo);
    if (r.ok) {
      std::cout << "fits\n";
      return kTrue;
    }
    std::cout << "does not fit: " << r.failure << "\n";
    return kFalse;
  }
  if (c_verify->parsed()) {
    Sample s = load_sample(sample_path);
    FormulaPtr f = parse_formula(formula_text, s.ap);
    Signature ops = ops_csv.empty() ? signature(f) : parse_ops(ops_csv);
    size_t bound = max_size ? max_size : formula_size(f);
    FitOptions fo;
    fo.schema_instantiate_len = instantiate_len;
    UniquenessVerdict v = verify_unique(f, s, ops, bound, fo);
    switch (v.status) {
      case UniquenessVerdict::Status::Confirmed:
        std::cout << "confirmed (" << v.examined << " formulas examined)\n";
        return kTrue;
      case UniquenessVerdict::Status::Refuted:
        std::cout << "refuted: " << print_formula(v.competitor)
                  << " also fits; differs on " << print_word(v.witness, s.ap)
                  << "\n";
        return kFalse;
      default:
        std::cout << "bound exhausted on " << print_formula(v.competitor)
                  << "\n";
        return kExhausted;
    }
  }
  if (c_classify->parsed()) {
    ClassifyResult r = classify_operator_set(parse_ops(ops_csv));
    if (r.admits) {
      std::cout << "admits; maximal set " << print_signature(r.witness)
                << "\n";
      return kTrue;
    }
    std::cout << "does not admit; violated fragment "
              << print_signature(r.witness) << "\n";
    return kFalse;
  }
  if (c_adv->parsed()) {
    Sample s = load_sample(sample_path);
    FormulaPtr f = parse_formula(formula_text, s.ap);
    AdversaryResult r = adversary(parse_adversary_family(family_name), s, f);
    std::cout << "competitor: " << print_formula(r.psi) << "\n"
              << "distinguished by: " << print_example(r.witness, s.ap)
              << "\n";
    return kTrue;
  }
  if (c_teach->parsed() || c_learn->parsed()) {
    Signature ops = parse_ops(ops_csv);
    if (c_teach->parsed()) {
      Alphabet ap = parse_ap(ap_csv);
      FormulaPtr f = parse_formula(formula_text, ap);
      size_t bound = max_size ? max_size : formula_size(f);
      Sample s = gold_teach(f, {ap, ops, bound});
      write_out(out_path, print_sample(s));
      return kTrue;
    }
    Sample s = load_sample(sample_path);
    size_t bound = max_size ? max_size : 6;
    FormulaPtr f = gold_learn(s, {s.ap, ops, bound});
    std::cout << print_formula(f) << "\n";
    return kTrue;
  }
  if (c_oracle->parsed()) {
    Alphabet ap = parse_ap(ap_csv);
    FormulaPtr f = parse_formula(formula_text, ap);
    auto bad = oracle_upward_closure(f, ap, max_len);
    if (!bad) {
      std::cout << "confirmed up to length " << max_len << "\n";
      return kTrue;
    }
    std::cout << "discrepancy at " << print_word(*bad, ap) << "\n";
    return kFalse;
  }
  if (c_size->parsed()) {
    Alphabet ap = parse_ap(ap_csv);
    FormulaPtr f = parse_formula(formula_text, ap);
    CharacterizationReport r = characterize_monotone(f, ap, copts);
    SizeReport sr = size_report(r, f);
    std::cout << "formula size: " << sr.formula_size << "\n"
              << "positives: " << sr.n_pos << "\n"
              << "negatives: " << sr.n_neg << "\n"
              << "longest positive: " << sr.l_max << "\n"
              << "length bound l_max <= |formula|: "
              << (sr.length_bound_ok ? "ok" : "VIOLATED") << "\n";
    return sr.length_bound_ok ? kTrue : kFalse;
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::Error&) {
    return kUsage;  // CLI11_PARSE already printed the message
  } catch (const BudgetError& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return kExhausted;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const FragmentError& e) {
    std::cerr << "fragment error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
