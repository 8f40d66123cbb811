// wordhopf: evaluate products and coproducts, run the verification suites,
// and print weak-order Hasse diagrams.
//
// Exit codes: 0 success or pass, 1 a verification suite failed, 2 usage or
// input error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wordhopf/wordhopf.hpp"

using namespace wordhopf;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Output

struct Out {
  std::string text;
  json j;
};

template <class Key>
Out plain(const LinComb<Key>& x) {
  return {to_string(x), to_json(x)};
}

Out tagged(const NsymmElem& x) {
  json j = to_json(x.terms);
  j["basis"] = basis_name(x.basis);
  return {to_string(x), j};
}

Out tagged(const QsymmElem& x) {
  json j = to_json(x.terms);
  j["basis"] = basis_name(x.basis);
  return {to_string(x), j};
}

// Tensor over a tagged basis: both factors carry the same letter.
Out tagged(const Tensor<Word>& t, const std::string& b) {
  std::string s;
  if (t.empty()) s = "0";
  bool first = true;
  for (const auto& [k, c] : t) {
    Coeff mag = c < 0 ? -c : c;
    s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    if (mag != 1) s += std::to_string(mag);
    s += b + key_to_string(k.first) + " " + std::string(kTensorSign) + " " + b + key_to_string(k.second);
    first = false;
  }
  json j = to_json(t);
  j["basis"] = b;
  return {s, j};
}

Out scalar(Coeff c) { return {std::to_string(c), json{{"value", c}}}; }

// ---------------------------------------------------------------------------
// Operands

struct EvalArgs {
  std::string algebra;
  std::string op;
  std::vector<std::string> operands;
  std::string basis;
  std::string to;
  std::string target;
  int cap = 3;
};

void need(const EvalArgs& a, std::size_t n) {
  if (a.operands.size() != n)
    throw UsageError(a.op + " on " + a.algebra + " takes " + std::to_string(n) + " operand(s), got " +
                     std::to_string(a.operands.size()));
}

void need_at_least(const EvalArgs& a, std::size_t n) {
  if (a.operands.size() < n)
    throw UsageError(a.op + " on " + a.algebra + " takes at least " + std::to_string(n) + " operands");
}

[[noreturn]] void unsupported(const EvalArgs& a) {
  throw UsageError("operation '" + a.op + "' is not available on " + a.algebra);
}

Elem<Word> words(const std::string& s) {
  return parse_elem(s, [](Cursor& c) { return parse_word(c); });
}
Elem<Perm> perms(const std::string& s) {
  return parse_elem(s, [](Cursor& c) { return parse_perm(c); });
}
Elem<Subst> substs(const std::string& s) {
  return parse_elem(s, [](Cursor& c) { return parse_subst(c); });
}

NBasis nbasis(const std::string& s) {
  if (s == "Z") return NBasis::Z;
  if (s == "S") return NBasis::S;
  if (s == "R") return NBasis::R;
  throw UsageError("nsymm bases are Z, S, R (got '" + s + "')");
}

QBasis qbasis(const std::string& s) {
  if (s == "M") return QBasis::M;
  if (s == "F") return QBasis::F;
  throw UsageError("qsymm bases are M, F (got '" + s + "')");
}

// ---------------------------------------------------------------------------
// Generic operations on an algebra given by a HopfDef

template <class Key, class Parse>
std::optional<Out> generic(const EvalArgs& a, const HopfDef<Key>& h, Parse parse) {
  if (a.op == "mul") {
    if (!h.has_product()) unsupported(a);
    need_at_least(a, 2);
    LinComb<Key> acc = parse(a.operands[0]);
    for (std::size_t i = 1; i < a.operands.size(); ++i) acc = h.mul(acc, parse(a.operands[i]));
    return plain(acc);
  }
  if (a.op == "comul") {
    need(a, 1);
    return plain(h.comul(parse(a.operands[0])));
  }
  if (a.op == "antipode") {
    if (!h.has_product()) unsupported(a);
    need(a, 1);
    return plain(antipode(h, parse(a.operands[0])));
  }
  return std::nullopt;
}

Out eval_words(const EvalArgs& a) {
  HopfDef<Word> h = a.algebra == "shuffle"   ? shuffle_def()
                    : a.algebra == "liehopf" ? liehopf_def()
                    : a.algebra == "wha"     ? wha_def()
                                             : icc_def();
  if (auto r = generic(a, h, words)) return *r;
  if (a.op == "pair" && (a.algebra == "shuffle" || a.algebra == "liehopf")) {
    need(a, 2);
    return scalar(pair(kronecker_pairing<Word>(), words(a.operands[0]), words(a.operands[1])));
  }
  if (a.op == "project" && a.algebra == "wha") {
    need(a, 1);
    Elem<Word> x = words(a.operands[0]);
    if (a.target.empty() || a.target == "std-surj") return plain(linear_extend(std_surj_retract, x));
    if (a.target == "mpr") return plain(linear_extend(schensted_to_mpr, x));
    throw UsageError("wha projects to std-surj or mpr");
  }
  if (a.op == "project" && a.algebra == "icc") {
    need(a, 1);
    return tagged(QsymmElem{QBasis::M, linear_extend(icc_to_qsymm, words(a.operands[0]))});
  }
  unsupported(a);
}

Out eval_mpr(const EvalArgs& a) {
  HopfDef<Perm> h = a.algebra == "mpr" ? mpr_def() : mpr2_def();
  if (auto r = generic(a, h, perms)) return *r;
  if (a.op == "mul2" || a.op == "comul2") {
    if (a.algebra != "mpr") unsupported(a);
    EvalArgs b = a;
    b.op = a.op == "mul2" ? "mul" : "comul";
    return *generic(b, mpr2_def(), perms);
  }
  if (a.op == "compose") {
    need_at_least(a, 2);
    Elem<Perm> acc = perms(a.operands[0]);
    for (std::size_t i = 1; i < a.operands.size(); ++i) acc = compose(acc, perms(a.operands[i]));
    return plain(acc);
  }
  if (a.op == "pair") {
    need(a, 2);
    Pairing<Perm, Perm> p = a.algebra == "mpr" ? Pairing<Perm, Perm>(kronecker_inverse) : Pairing<Perm, Perm>([](const Perm& x, const Perm& y) { return orthonormal(x, y); });
    return scalar(pair(p, perms(a.operands[0]), perms(a.operands[1])));
  }
  if (a.op == "embed") {
    need(a, 1);
    return plain(linear_extend([](const Perm& s) { return Elem<Subst>(embed_dwha(s)); }, perms(a.operands[0])));
  }
  if (a.op == "project") {
    need(a, 1);
    Elem<Perm> x = perms(a.operands[0]);
    if (a.target.empty() || a.target == "qsymm") {
      QBasis b = qbasis(a.basis.empty() ? "F" : a.basis);
      QsymmElem out{QBasis::F, {}};
      for (const auto& [s, c] : x) out.terms.add_scaled(project_pi(s).terms, c);
      return tagged(to_basis(out, b));
    }
    if (a.target == "nsymm") {
      NBasis b = nbasis(a.basis.empty() ? "R" : a.basis);
      return tagged(to_basis(psi_of(x), b));
    }
    if (a.target == "icc") return plain(linear_extend(mpr_to_icc, x));
    throw UsageError("mpr projects to qsymm, nsymm or icc");
  }
  if (a.op == "convert" && a.target == "complement") {
    need(a, 1);
    return plain(linear_extend([](const Perm& s) { return Elem<Perm>(complement(s)); }, perms(a.operands[0])));
  }
  unsupported(a);
}

Out eval_dwha(const EvalArgs& a) {
  SubstCap cap{a.cap, a.cap};
  if (auto r = generic(a, dwha_def(cap), substs)) return *r;
  if (a.op == "mul2" || a.op == "comul2") {
    EvalArgs b = a;
    b.op = a.op == "mul2" ? "mul" : "comul";
    return *generic(b, dwha2_def(cap), substs);
  }
  if (a.op == "pair") {
    need(a, 2);
    return scalar(pair(Pairing<Subst, Subst>(inner_product), substs(a.operands[0]), substs(a.operands[1])));
  }
  if (a.op == "project") {
    need(a, 1);
    return plain(linear_extend(project_mpr, substs(a.operands[0])));
  }
  if (a.op == "convert" && a.target == "swap") {
    need(a, 1);
    return plain(linear_extend([](const Subst& p) { return Elem<Subst>(swap(p)); }, substs(a.operands[0])));
  }
  unsupported(a);
}

Tensor<Word> to_nbasis(const Tensor<Word>& t, NBasis b) {
  auto f = [b](const Word& w) { return to_basis(nsymm(NBasis::Z, w), b).terms; };
  return tensor_map<Word, Word>(f, f, t);
}

Out eval_nsymm(const EvalArgs& a) {
  NBasis b = nbasis(a.basis.empty() ? "Z" : a.basis);
  auto elem = [&](const std::string& s) { return NsymmElem{b, words(s)}; };
  if (a.op == "mul" || a.op == "mul2") {
    need_at_least(a, 2);
    NsymmElem acc = elem(a.operands[0]);
    for (std::size_t i = 1; i < a.operands.size(); ++i)
      acc = a.op == "mul" ? nsymm_mul(acc, elem(a.operands[i])) : nsymm_second_mul(acc, elem(a.operands[i]));
    return tagged(to_basis(acc, b));
  }
  if (a.op == "comul") {
    need(a, 1);
    Tensor<Word> t = nsymm_def().comul(to_basis(elem(a.operands[0]), NBasis::Z).terms);
    return tagged(to_nbasis(t, b), basis_name(b));
  }
  if (a.op == "antipode") {
    need(a, 1);
    Elem<Word> s = antipode(nsymm_def(), to_basis(elem(a.operands[0]), NBasis::Z).terms);
    return tagged(to_basis(NsymmElem{NBasis::Z, s}, b));
  }
  if (a.op == "convert") {
    need(a, 1);
    return tagged(to_basis(elem(a.operands[0]), nbasis(a.to.empty() ? "S" : a.to)));
  }
  if (a.op == "pair") {
    need(a, 2);
    return scalar(pair(elem(a.operands[0]), QsymmElem{qbasis(a.to.empty() ? "M" : a.to), words(a.operands[1])}));
  }
  if (a.op == "embed") {
    need(a, 1);
    return plain(embed_i(elem(a.operands[0])));
  }
  unsupported(a);
}

Out eval_qsymm(const EvalArgs& a) {
  QBasis b = qbasis(a.basis.empty() ? "M" : a.basis);
  auto in_m = [&](const std::string& s) { return to_basis(QsymmElem{b, words(s)}, QBasis::M).terms; };
  const HopfDef<Word> h = qsymm_def();
  if (a.op == "mul") {
    need_at_least(a, 2);
    Elem<Word> acc = in_m(a.operands[0]);
    for (std::size_t i = 1; i < a.operands.size(); ++i) acc = h.mul(acc, in_m(a.operands[i]));
    return tagged(to_basis(QsymmElem{QBasis::M, acc}, b));
  }
  if (a.op == "comul") {
    need(a, 1);
    Tensor<Word> t = h.comul(in_m(a.operands[0]));
    if (b == QBasis::F) {
      auto f = [](const Word& w) { return m_to_f(w); };
      t = tensor_map<Word, Word>(f, f, t);
    }
    return tagged(t, basis_name(b));
  }
  if (a.op == "antipode") {
    need(a, 1);
    return tagged(to_basis(QsymmElem{QBasis::M, antipode(h, in_m(a.operands[0]))}, b));
  }
  if (a.op == "convert") {
    need(a, 1);
    QBasis t = qbasis(a.to.empty() ? (b == QBasis::M ? "F" : "M") : a.to);
    return tagged(to_basis(QsymmElem{b, words(a.operands[0])}, t));
  }
  if (a.op == "section") {
    need(a, 1);
    Perm (*f)(const Word&) = a.target.empty() || a.target == "lsd" ? &section_lsd
                             : a.target == "lld"                  ? &section_lld
                                                                  : nullptr;
    if (!f) throw UsageError("sections are lsd or lld");
    Elem<Perm> out;
    for (const auto& [w, c] : words(a.operands[0]))
      out.add_scaled(b == QBasis::F ? Elem<Perm>(f(w)) : section_on_monomial(f, w), c);
    return plain(out);
  }
  unsupported(a);
}

Out eval(const EvalArgs& a) {
  if (a.algebra == "shuffle" || a.algebra == "liehopf" || a.algebra == "wha" || a.algebra == "icc")
    return eval_words(a);
  if (a.algebra == "mpr" || a.algebra == "mpr2") return eval_mpr(a);
  if (a.algebra == "dwha") return eval_dwha(a);
  if (a.algebra == "nsymm") return eval_nsymm(a);
  return eval_qsymm(a);
}

// ---------------------------------------------------------------------------
// Verification suites

struct CheckArgs {
  std::string suite;
  std::string algebra = "mpr";
  std::string pairing = "nsymm-qsymm";
  std::string map = "pi";
  std::string halves;
  std::string side = "left";
  int cap = 3;
  int n = 6;
  int bound = -1;
};

int bound_or(const CheckArgs& c, int fallback) { return c.bound >= 0 ? c.bound : fallback; }

std::vector<Report> suite_structure(const CheckArgs& c, bool antipode_only) {
  auto run = [&](const auto& h, int fallback) {
    int b = bound_or(c, fallback);
    if (antipode_only) return std::vector<Report>{check_antipode(h, b)};
    std::vector<Report> r{check_bialgebra(h, b)};
    if (h.has_product()) r.push_back(check_antipode(h, b));
    return r;
  };
  const std::string& al = c.algebra;
  if (al == "shuffle") return run(shuffle_def(), 5);
  if (al == "liehopf") return run(liehopf_def(), 5);
  if (al == "mpr") return run(mpr_def(), 4);
  if (al == "mpr2") return run(mpr2_def(), 4);
  if (al == "wha") return run(wha_def(), 5);
  if (al == "nsymm") return run(nsymm_def(), 5);
  if (al == "qsymm") return run(qsymm_def(), 5);
  if (al == "icc") {
    if (antipode_only) throw UsageError("icc has no product, so no antipode");
    return run(icc_def(), 5);
  }
  SubstCap cap{c.cap, c.cap};
  if (al == "dwha") return run(dwha_def(cap), dwha_bound(cap));
  if (al == "dwha2") return run(dwha2_def(cap), dwha_bound(cap));
  throw UsageError("unknown algebra '" + al + "'");
}

std::vector<Report> suite_dual(const std::string& which, const CheckArgs& c) {
  SubstCap cap{c.cap, c.cap};
  if (which == "lie-shuffle")
    return {check_dual_pair(liehopf_def(), shuffle_def(), kronecker_pairing<Word>(), bound_or(c, 5))};
  if (which == "nsymm-qsymm")
    return {check_dual_pair(nsymm_def(), qsymm_def(), Pairing<Word, Word>(nsymm_qsymm_pairing), bound_or(c, 5))};
  if (which == "z-m")
    return {check_dual_pair(nsymm_def(), qsymm_def(), Pairing<Word, Word>(z_m_kronecker), bound_or(c, 5))};
  if (which == "mpr")
    return {check_dual_pair(mpr_def(), mpr_def(), Pairing<Perm, Perm>(kronecker_inverse), bound_or(c, 4))};
  if (which == "mpr-mpr2")
    return {check_dual_pair(mpr_def(), mpr2_def(), Pairing<Perm, Perm>([](const Perm& x, const Perm& y) { return orthonormal(x, y); }), bound_or(c, 4))};
  if (which == "dwha")
    return {check_dual_pair(dwha_def(cap), dwha_def(cap), Pairing<Subst, Subst>(inner_product),
                            bound_or(c, dwha_bound(cap)))};
  throw UsageError("unknown pairing '" + which + "'");
}

Halves parse_halves(const std::string& s, Halves fallback) {
  if (s.empty()) return fallback;
  if (s == "algebra") return Halves::Algebra;
  if (s == "coalgebra") return Halves::Coalgebra;
  if (s == "both") return Halves::Both;
  throw UsageError("--halves is algebra, coalgebra or both");
}

std::vector<Report> suite_morphism(const CheckArgs& c) {
  const std::string& m = c.map;
  SubstCap cap{c.cap, c.cap};
  auto h = [&](Halves fallback) { return parse_halves(c.halves, fallback); };
  if (m == "st")
    return {check_hopf_morphism<Word, Perm>(schensted_to_mpr, wha_def(), mpr_def(), bound_or(c, 5), h(Halves::Algebra), m)};
  if (m == "std-surj")
    return {check_hopf_morphism<Word, Word>(std_surj_retract, wha_def(), wha_def(), bound_or(c, 5), h(Halves::Both), m)};
  if (m == "psi")
    return {check_hopf_morphism<Subst, Perm>(project_mpr, dwha_def(cap), mpr_def(), bound_or(c, dwha_bound(cap)),
                                             h(Halves::Both), m)};
  if (m == "embed")
    return {check_hopf_morphism<Perm, Subst>([](const Perm& s) { return Elem<Subst>(embed_dwha(s)); }, mpr_def(),
                                             dwha_def(cap), bound_or(c, cap.top), h(Halves::Both), m)};
  if (m == "embed2")
    return {check_hopf_morphism<Perm, Subst>([](const Perm& s) { return Elem<Subst>(embed_dwha(s)); }, mpr2_def(),
                                             dwha2_def(cap), bound_or(c, cap.top), h(Halves::Both), m)};
  if (m == "inverse")
    return {check_hopf_morphism<Perm, Perm>([](const Perm& s) { return Elem<Perm>(inverse(s)); }, mpr_def(),
                                            mpr2_def(), bound_or(c, 4), h(Halves::Both), m)};
  if (m == "pi")
    return {check_hopf_morphism<Perm, Word>(project_pi_m, mpr_def(), qsymm_def(), bound_or(c, 5), h(Halves::Both), m)};
  if (m == "i")
    return {check_hopf_morphism<Word, Perm>([](const Word& a) { return embed_i(nsymm(NBasis::Z, a)); }, nsymm_def(),
                                            mpr2_def(), bound_or(c, 5), h(Halves::Both), m)};
  if (m == "psi-lsd")
    return {check_hopf_morphism<Perm, Word>(psi_z, mpr2_def(), nsymm_def(), bound_or(c, 4), h(Halves::Algebra), m),
            check_nonlsd_ideal(bound_or(c, 4))};
  if (m == "section-lsd" || m == "section-lld") {
    Perm (*f)(const Word&) = m == "section-lsd" ? &section_lsd : &section_lld;
    return {check_hopf_morphism<Word, Perm>([f](const Word& a) { return section_on_monomial(f, a); }, qsymm_def(),
                                            mpr_def(), bound_or(c, 5), h(Halves::Coalgebra), m)};
  }
  if (m == "complement")
    return {check_hopf_morphism<Perm, Perm>([](const Perm& s) { return Elem<Perm>(complement(s)); }, mpr_def(),
                                            mpr_def(), bound_or(c, 5), h(Halves::Coalgebra), m)};
  if (m == "mpr-to-icc")
    return {check_hopf_morphism<Perm, Word>(mpr_to_icc, mpr_def(), icc_def(), bound_or(c, 5), h(Halves::Coalgebra), m)};
  if (m == "icc-to-qsymm")
    return {check_hopf_morphism<Word, Word>(icc_to_qsymm, icc_def(), qsymm_def(), bound_or(c, 5), h(Halves::Coalgebra), m)};
  throw UsageError("unknown map '" + m + "'");
}

std::vector<Report> run_suite(const CheckArgs& c) {
  if (c.suite == "bialgebra") return suite_structure(c, false);
  if (c.suite == "antipode") return suite_structure(c, true);
  if (c.suite == "dual-pair") return suite_dual(c.pairing, c);
  if (c.suite == "self-duality") {
    if (c.algebra != "mpr" && c.algebra != "dwha") throw UsageError("self-duality is checked for mpr and dwha");
    return suite_dual(c.algebra, c);
  }
  if (c.suite == "morphism") return suite_morphism(c);
  if (c.suite == "descent-theorem")
    return {check_descent_class_theorem(c.n), check_global_characterization(c.n), check_descent_class_product(c.n)};
  if (c.suite == "solomon") return {check_solomon(bound_or(c, 4))};
  if (c.suite == "distributivity") {
    if (c.side == "left") return {check_left_distributivity(bound_or(c, 4))};
    if (c.side == "right") return {check_right_distributivity(bound_or(c, 4))};
    throw UsageError("--side is left or right");
  }
  throw UsageError("unknown suite '" + c.suite + "'");
}

// "2,3" -> {2,3}; empty string -> {}.
std::set<int> parse_int_set(const std::string& s) {
  std::set<int> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw UsageError("bad descent position '" + item + "'");
    out.insert(v);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorial Hopf algebras on words and permutations"};
  app.require_subcommand(1);

  const std::vector<std::string> algebras{"shuffle", "liehopf", "mpr", "mpr2", "wha", "dwha", "nsymm", "qsymm", "icc"};

  EvalArgs ev;
  bool ev_json = false;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate one operation on literal operands");
  eval_cmd->add_option("algebra", ev.algebra, "Algebra id")->required()->check(CLI::IsMember(algebras));
  eval_cmd
      ->add_option("op", ev.op, "mul, mul2, comul, comul2, antipode, compose, pair, convert, embed, project, section")
      ->required()
      ->check(CLI::IsMember({"mul", "mul2", "comul", "comul2", "antipode", "compose", "pair", "convert", "embed",
                             "project", "section"}));
  // Operands are taken as raw extras: CLI11 would split "[1,2]" into a list.
  eval_cmd->allow_extras();
  eval_cmd->footer("Operands: element literals such as \"[1,2] - 2[2,1]\" or \"([1,1] | [1])\"");
  eval_cmd->add_option("--basis", ev.basis, "Operand basis: Z, S, R for nsymm (default Z); M, F for qsymm (default M)");
  eval_cmd->add_option("--to", ev.to, "Target basis for convert, or the qsymm basis of the second pair operand");
  eval_cmd->add_option("--target", ev.target,
                       "project: qsymm|nsymm|icc from mpr, std-surj|mpr from wha; section: lsd|lld; "
                       "convert: complement on mpr, swap on dwha");
  eval_cmd->add_option("--cap", ev.cap, "dwha enumeration cap (default 3)")->check(CLI::Range(0, 6));
  eval_cmd->add_flag("--json", ev_json, "Print {\"terms\":[{\"coeff\",\"key\"}]}");

  CheckArgs ck;
  bool ck_json = false;
  auto* check_cmd = app.add_subcommand("check", "Run a verification suite; exit 1 on the first counterexample");
  check_cmd->add_option("suite", ck.suite)
      ->required()
      ->check(CLI::IsMember({"bialgebra", "antipode", "dual-pair", "morphism", "descent-theorem", "self-duality",
                             "solomon", "distributivity"}));
  check_cmd->add_option("--algebra", ck.algebra, "Algebra for bialgebra/antipode/self-duality (default mpr; dwha2 also accepted)");
  check_cmd->add_option("--pairing", ck.pairing, "lie-shuffle, nsymm-qsymm (default), z-m, mpr, mpr-mpr2, dwha");
  check_cmd->add_option("--map", ck.map,
                        "st, std-surj, psi, embed, embed2, inverse, pi (default), i, psi-lsd, section-lsd, "
                        "section-lld, complement, mpr-to-icc, icc-to-qsymm");
  check_cmd->add_option("--halves", ck.halves, "algebra, coalgebra or both (default depends on the map)");
  check_cmd->add_option("--side", ck.side, "distributivity side: left (default) or right");
  check_cmd->add_option("--cap", ck.cap, "dwha cap on top and bottom length (default 3)")->check(CLI::Range(0, 5));
  check_cmd->add_option("--n", ck.n, "Permutation size for descent-theorem (default 6)")->check(CLI::Range(0, 7));
  check_cmd->add_option("--bound", ck.bound, "Degree bound (default depends on the algebra: 5 words, 4 mpr, 2*cap dwha)")
      ->check(CLI::Range(0, 8));
  check_cmd->add_flag("--json", ck_json, "Print reports as JSON");

  int hn = 3;
  std::string highlight, output;
  std::optional<int> ambient;
  auto* hasse_cmd = app.add_subcommand("hasse", "Print the left weak order on S_n as a graphviz digraph");
  hasse_cmd->add_option("--n", hn, "Permutation size, at most 8")->required();
  auto* hl = hasse_cmd->add_option("--highlight", highlight, "Descent set to color, e.g. 2,3");
  hasse_cmd->add_option("--ambient", ambient, "Size the highlighted descent set lives in (default n)")->needs(hl);
  hasse_cmd->add_option("--output", output, "Write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*eval_cmd) {
      for (const auto& x : eval_cmd->remaining()) {
        if (x.rfind("--", 0) == 0) throw UsageError("unknown option " + x);
        ev.operands.push_back(x);
      }
      Out o = eval(ev);
      std::cout << (ev_json ? o.j.dump() : o.text) << "\n";
      return 0;
    }
    if (*check_cmd) {
      std::vector<Report> reports = run_suite(ck);
      bool ok = true;
      json all = json::array();
      for (const auto& r : reports) {
        ok = ok && r.passed();
        if (ck_json)
          all.push_back(r.to_json());
        else
          std::cout << r.to_text() << "\n";
      }
      if (ck_json) std::cout << all.dump(2) << "\n";
      return ok ? 0 : 1;
    }
    if (*hasse_cmd) {
      if (hn < 0 || hn > 8) throw UsageError("--n must be between 0 and 8");
      std::optional<DescentSet> d;
      if (!hl->empty()) d = DescentSet(ambient.value_or(hn), parse_int_set(highlight));
      std::string dot = to_dot(hasse(hn, d));
      if (output.empty()) {
        std::cout << dot;
      } else {
        std::ofstream f(output);
        if (!f) throw UsageError("cannot write " + output);
        f << dot;
      }
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const OverflowError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
