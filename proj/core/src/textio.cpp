#include "relpca/textio.hpp"

#include <json.hpp>
#include <sstream>

namespace relpca {

namespace {

RelPCA doc_rel_pca(const AlgebraDoc& d) {
  return {doc_op(d, "dot"), doc_op(d, "circ"), doc_map(d, "P"), doc_map(d, "Q")};
}

RelPoisson doc_rel_poisson(const AlgebraDoc& d) {
  return {doc_op(d, "dot"), doc_op(d, "bracket"), doc_map(d, "P")};
}

RelPrePCA doc_rel_pre_pca(const AlgebraDoc& d) {
  return {doc_op(d, "star"), doc_op(d, "succ"), doc_op(d, "prec"), doc_map(d, "P"),
          doc_map(d, "Q")};
}

int doc_split(const AlgebraDoc& d) {
  if (!d.split || *d.split * 2 != d.dim)
    throw DocError("this kind needs 'split n' with dim = 2n");
  return *d.split;
}

std::vector<std::string> dual_basis(const AlgebraDoc& d) {
  if (d.basis.empty()) return {};
  std::vector<std::string> b = d.basis;
  for (const std::string& name : d.basis) b.push_back(name + "*");
  return b;
}

AlgebraDoc fresh_doc(int dim, const std::string& kind, std::vector<std::string> basis) {
  AlgebraDoc out;
  out.dim = dim;
  out.kind = kind;
  out.basis = std::move(basis);
  return out;
}

}  // namespace

std::vector<std::string> known_kinds() {
  return {"commutative-associative",
          "lie",
          "anti-pre-lie",
          "pre-lie",
          "zinbiel",
          "pre-apl",
          "poisson",
          "pca",
          "jacobi",
          "commutative-differential",
          "admissible-commutative-differential",
          "relative-poisson",
          "relative-pca",
          "relative-pre-poisson",
          "admissible-differential-zinbiel",
          "relative-pre-pca",
          "manin-triple",
          "double-frobenius",
          "invariant-c2c-form",
          "asi-bialgebra",
          "apl-bialgebra",
          "differential-asi-bialgebra",
          "relative-pca-coalgebra",
          "relative-pca-bialgebra",
          "rpca-ybe",
          "q-admissible-aybe"};
}

Conditions check_kind(const AlgebraDoc& d, const std::string& kind) {
  if (kind == "commutative-associative") return check_comm_assoc(doc_op(d, "dot"));
  if (kind == "lie") return check_lie(doc_op(d, "bracket"));
  if (kind == "anti-pre-lie") return check_anti_pre_lie(doc_op(d, "circ"));
  if (kind == "pre-lie") return check_pre_lie(doc_op(d, "diamond"));
  if (kind == "zinbiel") return check_zinbiel(doc_op(d, "star"));
  if (kind == "pre-apl") return check_pre_apl(doc_op(d, "succ"), doc_op(d, "prec"));
  if (kind == "poisson") return check_poisson(doc_op(d, "dot"), doc_op(d, "bracket"));
  if (kind == "pca") return check_pca(doc_op(d, "dot"), doc_op(d, "circ"));
  if (kind == "jacobi") return check_jacobi(doc_op(d, "dot"), doc_op(d, "bracket"));
  if (kind == "commutative-differential") {
    Conditions out;
    out.add_all(check_comm_assoc(doc_op(d, "dot")));
    out.add_all(check_derivation(doc_op(d, "dot"), doc_map(d, "P"), "deriv-dot"));
    return out;
  }
  if (kind == "admissible-commutative-differential")
    return check_adm_comm_diff({doc_op(d, "dot"), doc_map(d, "P"), doc_map(d, "Q")});
  if (kind == "relative-poisson") return check_rel_poisson(doc_rel_poisson(d));
  if (kind == "relative-pca") return check_rel_pca(doc_rel_pca(d));
  if (kind == "relative-pre-poisson")
    return check_rel_pre_poisson(doc_op(d, "star"), doc_op(d, "diamond"), doc_map(d, "P"));
  if (kind == "admissible-differential-zinbiel")
    return check_adm_diff_zinbiel(doc_op(d, "star"), doc_map(d, "P"), doc_map(d, "Q"));
  if (kind == "relative-pre-pca") return check_rel_pre_pca(doc_rel_pre_pca(d));
  if (kind == "manin-triple") {
    int n = doc_split(d);
    return check_manin_triple({doc_rel_poisson(d), n, standard_pairing(n)});
  }
  if (kind == "double-frobenius") {
    int n = doc_split(d);
    return check_double_construction_frobenius(doc_op(d, "dot"), doc_map(d, "P"), n);
  }
  if (kind == "invariant-c2c-form")
    return form_checks(doc_op(d, "dot"), doc_op(d, "bracket"), doc_form(d, "B"));
  if (kind == "asi-bialgebra") return check_asi_bialgebra(doc_op(d, "dot"), doc_coproduct(d, "Delta"));
  if (kind == "apl-bialgebra")
    return check_apl_bialgebra(doc_op(d, "circ"), doc_coproduct(d, "theta"));
  if (kind == "differential-asi-bialgebra")
    return check_diff_asi_bialgebra(doc_op(d, "dot"), doc_coproduct(d, "Delta"), doc_map(d, "P"),
                                    doc_map(d, "Q"));
  if (kind == "relative-pca-coalgebra")
    return check_rel_pca_coalgebra(doc_coproduct(d, "Delta"), doc_coproduct(d, "theta"),
                                   doc_map(d, "Q"), doc_map(d, "P"));
  if (kind == "relative-pca-bialgebra")
    return check_rel_pca_bialgebra(
        {doc_rel_pca(d), doc_coproduct(d, "Delta"), doc_coproduct(d, "theta")});
  if (kind == "rpca-ybe") return check_rpca_ybe(doc_rel_pca(d), doc_tensor(d, "r"));
  if (kind == "q-admissible-aybe")
    return check_q_admissible_aybe({doc_op(d, "dot"), doc_map(d, "P"), doc_map(d, "Q")},
                                   doc_tensor(d, "r"));
  throw DocError("unknown kind '" + kind + "'");
}

std::vector<std::string> known_recipes() {
  return {"witt",  "circ-from-admissible", "pre-pca",        "sub-adjacent",
          "double", "manin",               "cobound", "lift-o-operator"};
}

AlgebraDoc run_recipe(const AlgebraDoc& d, const std::string& recipe, const std::string& arg) {
  if (recipe == "witt") {
    RelPoisson s = witt_rel_poisson(doc_op(d, "dot"), doc_map(d, "P"));
    AlgebraDoc out = fresh_doc(d.dim, "relative-poisson", d.basis);
    add_op(out, "dot", s.dot);
    add_op(out, "bracket", s.bracket);
    add_map(out, "P", s.P);
    return out;
  }
  if (recipe == "circ-from-admissible") {
    RelPCA s = circ_from_admissible({doc_op(d, "dot"), doc_map(d, "P"), doc_map(d, "Q")});
    AlgebraDoc out = fresh_doc(d.dim, "relative-pca", d.basis);
    add_op(out, "dot", s.dot);
    add_op(out, "circ", s.circ);
    add_map(out, "P", s.P);
    add_map(out, "Q", s.Q);
    return out;
  }
  if (recipe == "pre-pca") {
    RelPrePCA s = pre_pca_from_adm_zinbiel(doc_op(d, "star"), doc_map(d, "P"), doc_map(d, "Q"));
    AlgebraDoc out = fresh_doc(d.dim, "relative-pre-pca", d.basis);
    add_op(out, "star", s.star);
    add_op(out, "succ", s.succ);
    add_op(out, "prec", s.prec);
    add_map(out, "P", s.P);
    add_map(out, "Q", s.Q);
    return out;
  }
  if (recipe == "sub-adjacent") {
    RelPCA s = sub_adjacent_rel_pca(doc_rel_pre_pca(d));
    AlgebraDoc out = fresh_doc(d.dim, "relative-pca", d.basis);
    add_op(out, "dot", s.dot);
    add_op(out, "circ", s.circ);
    add_map(out, "P", s.P);
    add_map(out, "Q", s.Q);
    return out;
  }
  if (recipe == "double") {
    RelPCARep rep = d.resolve(DocSection::Op, "succ") ? pre_rep(doc_rel_pre_pca(d))
                                                      : adjoint_rep(doc_rel_pca(d));
    RelPCA dbl = semidirect_rel_pca(dual_rel_pca_rep(rep));
    AlgebraDoc out = fresh_doc(2 * d.dim, "relative-pca", dual_basis(d));
    out.split = d.dim;
    add_op(out, "dot", dbl.dot);
    add_op(out, "circ", dbl.circ);
    add_map(out, "P", dbl.P);
    add_map(out, "Q", dbl.Q);
    return out;
  }
  if (recipe == "manin") {
    RelPCA a = doc_rel_pca(d);
    RelPCA astar{BinOp(d.dim), BinOp(d.dim), a.Q.transpose(), a.P.transpose()};
    ManinTriple t = build_manin_triple(a, astar);
    AlgebraDoc out = fresh_doc(2 * d.dim, "manin-triple", dual_basis(d));
    out.split = d.dim;
    add_op(out, "dot", t.dbl.dot);
    add_op(out, "bracket", t.dbl.bracket);
    add_map(out, "P", t.dbl.P);
    add_form(out, "B", t.form);
    return out;
  }
  if (recipe == "cobound") {
    if (arg.empty()) throw DocError("cobound needs --r <tensor-name>");
    RelPCA s = doc_rel_pca(d);
    RelPCABialgebra b = bialgebra_from_ybe(s, doc_tensor(d, arg));
    AlgebraDoc out = fresh_doc(d.dim, "relative-pca-bialgebra", d.basis);
    out.split = d.split;
    add_op(out, "dot", s.dot);
    add_op(out, "circ", s.circ);
    add_map(out, "P", s.P);
    add_map(out, "Q", s.Q);
    add_coproduct(out, "Delta", b.Delta);
    add_coproduct(out, "theta", b.theta);
    return out;
  }
  if (recipe == "lift-o-operator") {
    RelPrePCA pre = doc_rel_pre_pca(d);
    Mat T = arg.empty() ? Mat::identity(d.dim) : doc_map(d, arg);
    auto [dbl, r] = lift_o_operator({pre_rep(pre), T});
    AlgebraDoc out = fresh_doc(2 * d.dim, "relative-pca", dual_basis(d));
    out.split = d.dim;
    add_op(out, "dot", dbl.dot);
    add_op(out, "circ", dbl.circ);
    add_map(out, "P", dbl.P);
    add_map(out, "Q", dbl.Q);
    add_tensor(out, "r", r);
    return out;
  }
  throw DocError("unknown recipe '" + recipe + "'");
}

std::string format_value(const Vec& v, const std::vector<std::string>& basis) {
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!first) out << " + ";
    std::string name = i < basis.size() ? basis[i] : "e" + std::to_string(i + 1);
    out << rat_to_string(v[i]) << "*" << name;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

std::string format_conditions_text(const std::string& structure, const Conditions& c,
                                   const std::vector<std::string>& basis) {
  std::ostringstream out;
  out << "structure: " << structure << "\n";
  for (const auto& [label, rep] : c.items) {
    out << "  [" << (rep.passed ? "PASS" : "FAIL") << "] " << label;
    if (!rep.passed && rep.witness) {
      const Witness& w = *rep.witness;
      if (!w.indices.empty()) {
        out << " at (";
        for (size_t i = 0; i < w.indices.size(); ++i)
          out << (i ? "," : "") << w.indices[i] + 1;
        out << ")";
      }
      if (!w.residual.empty()) out << ": residual = " << format_value(w.residual, basis);
    }
    out << "\n";
  }
  out << (c.all() ? "all conditions passed" : "CHECK FAILED") << "\n";
  return out.str();
}

namespace {

nlohmann::json doc_to_json(const AlgebraDoc& d) {
  nlohmann::json j;
  j["dim"] = d.dim;
  if (!d.kind.empty()) j["kind"] = d.kind;
  if (!d.basis.empty()) j["basis"] = d.basis;
  if (d.split) j["split"] = *d.split;
  nlohmann::json sections = nlohmann::json::array();
  for (const DocSection& s : d.sections) {
    nlohmann::json sec;
    switch (s.type) {
      case DocSection::Op: sec["type"] = "op"; break;
      case DocSection::Map: sec["type"] = "map"; break;
      case DocSection::Form: sec["type"] = "form"; break;
      case DocSection::Tensor: sec["type"] = "tensor"; break;
      case DocSection::Coproduct: sec["type"] = "coproduct"; break;
    }
    sec["name"] = s.name;
    nlohmann::json entries = nlohmann::json::array();
    for (const DocEntry& e : s.entries) {
      nlohmann::json entry = nlohmann::json::array();
      for (int i : e.idx) entry.push_back(i + 1);
      entry.push_back(rat_to_string(e.c));
      entries.push_back(entry);
    }
    sec["entries"] = entries;
    sections.push_back(sec);
  }
  j["sections"] = sections;
  nlohmann::json roles = nlohmann::json::object();
  for (const auto& [role, target] : d.roles) roles[role] = target;
  j["roles"] = roles;
  return j;
}

}  // namespace

std::string format_report_json(const std::string& structure, const Conditions& c,
                               const AlgebraDoc* constructed) {
  nlohmann::json j;
  j["structure"] = structure;
  nlohmann::json conds = nlohmann::json::array();
  for (const auto& [label, rep] : c.items) {
    nlohmann::json jc;
    jc["label"] = label;
    jc["passed"] = rep.passed;
    if (!rep.passed && rep.witness) {
      nlohmann::json w;
      w["identity"] = rep.witness->identity;
      nlohmann::json idx = nlohmann::json::array();
      for (int i : rep.witness->indices) idx.push_back(i + 1);
      w["indices"] = idx;
      nlohmann::json res = nlohmann::json::array();
      for (const Rat& x : rep.witness->residual) res.push_back(rat_to_string(x));
      w["residual"] = res;
      jc["witness"] = w;
    }
    conds.push_back(jc);
  }
  j["conditions"] = conds;
  j["passed"] = c.all();
  if (constructed) j["constructed"] = doc_to_json(*constructed);
  return j.dump(2) + "\n";
}

}  // namespace relpca
