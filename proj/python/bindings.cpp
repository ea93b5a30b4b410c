#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ltlteach/characterize.hpp"
#include "ltlteach/errors.hpp"
#include "ltlteach/formula.hpp"
#include "ltlteach/sample.hpp"
#include "ltlteach/verification.hpp"

namespace py = pybind11;
using namespace ltlteach;

namespace {

// The module speaks the same textual formats as the command line tool:
// formulas, words, expressions and samples go in and out as strings.

Alphabet make_ap(const std::vector<std::string>& atoms) {
  return Alphabet(atoms);
}

DualVariant make_variant(const std::string& v) {
  if (v == "corrected") return DualVariant::Corrected;
  if (v == "paper") return DualVariant::Paper;
  throw EvalError("dual variant must be 'corrected' or 'paper'");
}

CharacterizeOptions make_opts(const std::string& variant, size_t budget,
                              size_t max_size) {
  CharacterizeOptions o;
  o.dual_variant = make_variant(variant);
  o.budget = budget;
  o.max_size = max_size;
  return o;
}

std::string run_characterize(const std::string& formula,
                             const std::vector<std::string>& atoms,
                             const std::string& fragment,
                             const std::string& variant, size_t budget,
                             size_t max_size) {
  Alphabet ap = make_ap(atoms);
  FormulaPtr f = parse_formula(formula, ap);
  CharacterizeOptions o = make_opts(variant, budget, max_size);
  CharacterizationReport r;
  if (fragment == "monotone")
    r = characterize_monotone(f, ap, o);
  else if (fragment == "monotone-g")
    r = characterize_monotone_G(f, ap, o);
  else if (fragment == "x-omega")
    r = characterize_X_omega(f, ap, o);
  else if (fragment.rfind("finite:", 0) == 0)
    r = characterize_finite_fragment(f, parse_ops(fragment.substr(7)), ap, o);
  else
    throw EvalError(
        "fragment must be monotone, monotone-g, x-omega, or finite:<OPS>");
  return print_sample(r.sample);
}

}  // namespace

PYBIND11_MODULE(_ltlteach, m) {
  m.doc() = "teaching sets and transfinite evaluation for LTL fragments";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<FragmentError>(m, "FragmentError", PyExc_ValueError);
  py::register_exception<EvalError>(m, "EvalError", PyExc_ValueError);
  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);

  m.def(
      "eval_word",
      [](const std::string& formula, const std::vector<std::string>& atoms,
         const std::string& word) {
        Alphabet ap = make_ap(atoms);
        return eval_finite(parse_formula(formula, ap), parse_word(word, ap),
                           ap);
      },
      py::arg("formula"), py::arg("ap"), py::arg("word"),
      "Truth of a formula on a finite word like '{p}.{q}'.");

  m.def(
      "eval_expr",
      [](const std::string& formula, const std::vector<std::string>& atoms,
         const std::string& expr) {
        Alphabet ap = make_ap(atoms);
        Sample probe;
        probe.ap = ap;
        probe.add_expr(true, parse_expr(expr, ap));
        return fits(parse_formula(formula, ap), probe).ok;
      },
      py::arg("formula"), py::arg("ap"), py::arg("expr"),
      "Truth on a finitely presented transfinite word like '{q}^w.{p}'.");

  m.def("characterize", &run_characterize, py::arg("formula"), py::arg("ap"),
        py::arg("fragment") = "monotone",
        py::arg("dual_variant") = "corrected", py::arg("budget") = 1000000,
        py::arg("max_size") = 0,
        "Uniquely characterizing sample, returned in the sample file format.");

  m.def(
      "characterize_schematic",
      [](const std::string& formula, const std::vector<std::string>& atoms) {
        Alphabet ap = make_ap(atoms);
        return print_sample(
            characterize_schematic(parse_formula(formula, ap), ap).sample);
      },
      py::arg("formula"), py::arg("ap"),
      "Characterizing sample re-emitted as schematic examples.");

  m.def(
      "canonical_set",
      [](const std::string& formula, const std::vector<std::string>& atoms) {
        Alphabet ap = make_ap(atoms);
        FormulaPtr rew = rewrite_for_fragment(parse_formula(formula, ap),
                                              RewriteTarget::StrictEventually);
        std::vector<std::string> out;
        for (const Word& w : canonical_set(rew, ap))
          out.push_back(print_word(w, ap));
        return out;
      },
      py::arg("formula"), py::arg("ap"),
      "Canonical example words of a monotone-fragment formula.");

  m.def(
      "dual",
      [](const std::vector<std::string>& words,
         const std::vector<std::string>& atoms, const std::string& variant) {
        Alphabet ap = make_ap(atoms);
        std::vector<Word> a;
        for (const std::string& w : words) a.push_back(parse_word(w, ap));
        std::vector<std::string> out;
        for (const auto& v : dual(a, ap, make_variant(variant)))
          out.push_back(print_expr(v, ap));
        return out;
      },
      py::arg("words"), py::arg("ap"), py::arg("variant") = "corrected",
      "Maximal words avoiding every anchored embedding of the given words.");

  m.def(
      "fits",
      [](const std::string& formula, const std::string& sample,
         size_t instantiate_len) {
        Sample s = parse_sample(sample);
        FitOptions fo;
        fo.schema_instantiate_len = instantiate_len;
        FitResult r = fits(parse_formula(formula, s.ap), s, fo);
        return py::make_tuple(r.ok, r.failure);
      },
      py::arg("formula"), py::arg("sample"), py::arg("instantiate_len") = 0,
      "(ok, first_failure) of a formula against a sample in text form.");

  m.def(
      "verify_unique",
      [](const std::string& formula, const std::string& sample,
         const std::string& ops, size_t max_size, size_t instantiate_len) {
        Sample s = parse_sample(sample);
        FormulaPtr f = parse_formula(formula, s.ap);
        Signature sig = ops.empty() ? signature(f) : parse_ops(ops);
        size_t bound = max_size ? max_size : formula_size(f);
        FitOptions fo;
        fo.schema_instantiate_len = instantiate_len;
        UniquenessVerdict v = verify_unique(f, s, sig, bound, fo);
        py::dict out;
        switch (v.status) {
          case UniquenessVerdict::Status::Confirmed:
            out["status"] = "confirmed";
            break;
          case UniquenessVerdict::Status::Refuted:
            out["status"] = "refuted";
            out["competitor"] = print_formula(v.competitor);
            out["witness"] = print_word(v.witness, s.ap);
            break;
          case UniquenessVerdict::Status::BoundExhausted:
            out["status"] = "bound-exhausted";
            out["competitor"] = print_formula(v.competitor);
            break;
        }
        out["examined"] = v.examined;
        return out;
      },
      py::arg("formula"), py::arg("sample"), py::arg("ops") = "",
      py::arg("max_size") = 0, py::arg("instantiate_len") = 0,
      "Uniqueness of a sample within a fragment, up to a size bound.");

  m.def(
      "classify",
      [](const std::string& ops) {
        ClassifyResult r = classify_operator_set(parse_ops(ops));
        return py::make_tuple(r.admits, print_signature(r.witness));
      },
      py::arg("ops"),
      "(admits, witness_fragment) for finite-word characterizability.");

  m.def(
      "adversary",
      [](const std::string& family, const std::string& sample,
         const std::string& formula) {
        Sample s = parse_sample(sample);
        FormulaPtr f = parse_formula(formula, s.ap);
        AdversaryResult r = adversary(parse_adversary_family(family), s, f);
        return py::make_tuple(print_formula(r.psi),
                              print_example(r.witness, s.ap));
      },
      py::arg("family"), py::arg("sample"), py::arg("formula"),
      "(competitor, distinguishing_example) for a lower-bound family.");

  m.def(
      "teach",
      [](const std::string& formula, const std::vector<std::string>& atoms,
         const std::string& ops, size_t max_size) {
        Alphabet ap = make_ap(atoms);
        FormulaPtr f = parse_formula(formula, ap);
        size_t bound = max_size ? max_size : formula_size(f);
        return print_sample(gold_teach(f, {ap, parse_ops(ops), bound}));
      },
      py::arg("formula"), py::arg("ap"), py::arg("ops"),
      py::arg("max_size") = 0, "Gold-style characteristic sample.");

  m.def(
      "learn",
      [](const std::string& sample, const std::string& ops, size_t max_size) {
        Sample s = parse_sample(sample);
        return print_formula(gold_learn(s, {s.ap, parse_ops(ops), max_size}));
      },
      py::arg("sample"), py::arg("ops"), py::arg("max_size") = 6,
      "First enumerated formula fitting the sample.");

  m.def(
      "oracle",
      [](const std::string& formula, const std::vector<std::string>& atoms,
         size_t max_len) -> py::object {
        Alphabet ap = make_ap(atoms);
        auto bad = oracle_upward_closure(parse_formula(formula, ap), ap,
                                         max_len);
        if (!bad) return py::none();
        return py::str(print_word(*bad, ap));
      },
      py::arg("formula"), py::arg("ap"), py::arg("max_len") = 4,
      "First word disagreeing with the canonical upward closure, or None.");

  m.def(
      "size_report",
      [](const std::string& formula, const std::vector<std::string>& atoms) {
        Alphabet ap = make_ap(atoms);
        FormulaPtr f = parse_formula(formula, ap);
        SizeReport r = size_report(characterize_monotone(f, ap), f);
        py::dict out;
        out["formula_size"] = r.formula_size;
        out["n_pos"] = r.n_pos;
        out["n_neg"] = r.n_neg;
        out["l_max"] = r.l_max;
        out["length_bound_ok"] = r.length_bound_ok;
        return out;
      },
      py::arg("formula"), py::arg("ap"),
      "Sample size statistics of the monotone characterization.");
}
