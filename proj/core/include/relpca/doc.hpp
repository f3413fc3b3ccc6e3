#pragma once

#include "relpca/coalg.hpp"

namespace relpca {

// Textual interchange format. Line-oriented, sparse, exact-rational
// coefficients; see docs/format.md for the grammar. Indices are 1-based in
// files, 0-based in memory.

struct DocError : std::runtime_error {
  int line{0};
  DocError(const std::string& msg, int l = 0)
      : std::runtime_error(l > 0 ? "line " + std::to_string(l) + ": " + msg : msg), line(l) {}
};

struct DocEntry {
  std::vector<int> idx;  // 0-based; size 3 for ops/coproducts, 2 otherwise
  Rat c;
};

struct DocSection {
  enum Type { Op, Map, Form, Tensor, Coproduct };
  Type type;
  std::string name;
  std::vector<DocEntry> entries;
};

struct AlgebraDoc {
  int dim{0};
  std::string kind;
  std::vector<std::string> basis;
  std::optional<int> split;
  std::vector<DocSection> sections;
  std::vector<std::pair<std::string, std::string>> roles;

  const DocSection* find(DocSection::Type t, const std::string& name) const;
  // Role-aware lookup: resolves a role binding first, then a literal name.
  const DocSection* resolve(DocSection::Type t, const std::string& role) const;
};

AlgebraDoc parse_doc(const std::string& text);
std::string emit_doc(const AlgebraDoc& doc);

BinOp doc_op(const AlgebraDoc& doc, const std::string& role);
Mat doc_map(const AlgebraDoc& doc, const std::string& role);
Mat doc_form(const AlgebraDoc& doc, const std::string& role);
Tensor2 doc_tensor(const AlgebraDoc& doc, const std::string& role);
Coproduct doc_coproduct(const AlgebraDoc& doc, const std::string& role);

void add_op(AlgebraDoc& doc, const std::string& name, const BinOp& op);
void add_map(AlgebraDoc& doc, const std::string& name, const Mat& m);
void add_form(AlgebraDoc& doc, const std::string& name, const Mat& m);
void add_tensor(AlgebraDoc& doc, const std::string& name, const Tensor2& t);
void add_coproduct(AlgebraDoc& doc, const std::string& name, const Coproduct& c);
void add_role(AlgebraDoc& doc, const std::string& role, const std::string& target);

}  // namespace relpca
