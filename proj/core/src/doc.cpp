#include "relpca/doc.hpp"

#include <algorithm>
#include <sstream>

namespace relpca {

namespace {

constexpr int kMaxDim = 16;

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::string cur;
  for (char ch : line) {
    if (ch == '#') break;
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      if (!cur.empty()) toks.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) toks.push_back(std::move(cur));
  return toks;
}

int parse_index(const std::string& tok, int dim, int line) {
  size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    throw DocError("expected index, got '" + tok + "'", line);
  }
  if (pos != tok.size()) throw DocError("expected index, got '" + tok + "'", line);
  if (v < 1 || v > dim) throw DocError("index " + tok + " out of range 1.." + std::to_string(dim), line);
  return v - 1;
}

DocSection::Type section_type(const std::string& kw) {
  if (kw == "op") return DocSection::Op;
  if (kw == "map") return DocSection::Map;
  if (kw == "form") return DocSection::Form;
  if (kw == "tensor") return DocSection::Tensor;
  return DocSection::Coproduct;
}

const char* section_keyword(DocSection::Type t) {
  switch (t) {
    case DocSection::Op: return "op";
    case DocSection::Map: return "map";
    case DocSection::Form: return "form";
    case DocSection::Tensor: return "tensor";
    default: return "coproduct";
  }
}

int index_count(DocSection::Type t) {
  return t == DocSection::Op || t == DocSection::Coproduct ? 3 : 2;
}

// role name -> section type it must bind to
std::optional<DocSection::Type> role_target_type(const std::string& role) {
  static const std::vector<std::pair<std::string, DocSection::Type>> table = {
      {"dot", DocSection::Op},        {"circ", DocSection::Op},
      {"bracket", DocSection::Op},    {"star", DocSection::Op},
      {"succ", DocSection::Op},       {"prec", DocSection::Op},
      {"diamond", DocSection::Op},
      {"P", DocSection::Map},         {"Q", DocSection::Map},
      {"alpha", DocSection::Map},     {"beta", DocSection::Map},
      {"T", DocSection::Map},         {"B", DocSection::Form},
      {"r", DocSection::Tensor},      {"Delta", DocSection::Coproduct},
      {"theta", DocSection::Coproduct}};
  for (const auto& [name, type] : table)
    if (name == role) return type;
  return std::nullopt;
}

}  // namespace

const DocSection* AlgebraDoc::find(DocSection::Type t, const std::string& name) const {
  for (const DocSection& s : sections)
    if (s.type == t && s.name == name) return &s;
  return nullptr;
}

const DocSection* AlgebraDoc::resolve(DocSection::Type t, const std::string& role) const {
  for (const auto& [r, target] : roles)
    if (r == role) return find(t, target);
  return find(t, role);
}

AlgebraDoc parse_doc(const std::string& text) {
  AlgebraDoc doc;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_dim = false;
  DocSection* open = nullptr;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::string> toks = tokenize(line);
    if (toks.empty()) continue;
    if (open) {
      if (toks[0] == "end") {
        if (toks.size() != 1) throw DocError("unexpected tokens after 'end'", lineno);
        std::sort(open->entries.begin(), open->entries.end(),
                  [](const DocEntry& a, const DocEntry& b) { return a.idx < b.idx; });
        for (size_t i = 1; i < open->entries.size(); ++i)
          if (open->entries[i].idx == open->entries[i - 1].idx)
            throw DocError("duplicate entry in section '" + open->name + "'", lineno);
        open = nullptr;
        continue;
      }
      int nidx = index_count(open->type);
      if (static_cast<int>(toks.size()) != nidx + 1)
        throw DocError("expected " + std::to_string(nidx) + " indices and a coefficient", lineno);
      DocEntry e;
      for (int i = 0; i < nidx; ++i) e.idx.push_back(parse_index(toks[static_cast<size_t>(i)], doc.dim, lineno));
      try {
        e.c = rat_from_string(toks.back());
      } catch (const std::invalid_argument& ex) {
        throw DocError(ex.what(), lineno);
      }
      if (e.c == 0) throw DocError("explicit zero coefficient not allowed", lineno);
      open->entries.push_back(std::move(e));
      continue;
    }
    const std::string& kw = toks[0];
    if (kw == "dim") {
      if (have_dim) throw DocError("duplicate 'dim'", lineno);
      if (toks.size() != 2) throw DocError("usage: dim <n>", lineno);
      try {
        doc.dim = std::stoi(toks[1]);
      } catch (const std::exception&) {
        throw DocError("bad dimension '" + toks[1] + "'", lineno);
      }
      if (doc.dim < 1 || doc.dim > kMaxDim)
        throw DocError("dimension must be in 1.." + std::to_string(kMaxDim), lineno);
      have_dim = true;
    } else if (kw == "kind") {
      if (toks.size() != 2) throw DocError("usage: kind <name>", lineno);
      doc.kind = toks[1];
    } else if (kw == "basis") {
      if (!have_dim) throw DocError("'basis' before 'dim'", lineno);
      if (static_cast<int>(toks.size()) != doc.dim + 1)
        throw DocError("basis needs exactly dim names", lineno);
      doc.basis.assign(toks.begin() + 1, toks.end());
    } else if (kw == "split") {
      if (!have_dim) throw DocError("'split' before 'dim'", lineno);
      if (toks.size() != 2) throw DocError("usage: split <n>", lineno);
      int sp = 0;
      try {
        sp = std::stoi(toks[1]);
      } catch (const std::exception&) {
        throw DocError("bad split '" + toks[1] + "'", lineno);
      }
      if (sp < 1 || sp >= doc.dim) throw DocError("split out of range", lineno);
      doc.split = sp;
    } else if (kw == "op" || kw == "map" || kw == "form" || kw == "tensor" || kw == "coproduct") {
      if (!have_dim) throw DocError("section before 'dim'", lineno);
      if (toks.size() != 2) throw DocError("usage: " + kw + " <name>", lineno);
      DocSection s;
      s.type = section_type(kw);
      s.name = toks[1];
      if (doc.find(s.type, s.name))
        throw DocError("duplicate " + kw + " '" + s.name + "'", lineno);
      doc.sections.push_back(std::move(s));
      open = &doc.sections.back();
    } else if (kw == "role") {
      if (toks.size() != 3) throw DocError("usage: role <role-name> <section-name>", lineno);
      std::optional<DocSection::Type> t = role_target_type(toks[1]);
      if (!t) throw DocError("unknown role '" + toks[1] + "'", lineno);
      if (!doc.find(*t, toks[2]))
        throw DocError("role '" + toks[1] + "' binds missing " +
                           std::string(section_keyword(*t)) + " '" + toks[2] + "'",
                       lineno);
      doc.roles.emplace_back(toks[1], toks[2]);
    } else {
      throw DocError("unknown directive '" + kw + "'", lineno);
    }
  }
  if (open) throw DocError("unterminated section '" + open->name + "'", lineno);
  if (!have_dim) throw DocError("missing 'dim'");
  return doc;
}

std::string emit_doc(const AlgebraDoc& doc) {
  std::ostringstream out;
  out << "dim " << doc.dim << "\n";
  if (!doc.kind.empty()) out << "kind " << doc.kind << "\n";
  if (!doc.basis.empty()) {
    out << "basis";
    for (const std::string& b : doc.basis) out << " " << b;
    out << "\n";
  }
  if (doc.split) out << "split " << *doc.split << "\n";
  for (const DocSection& s : doc.sections) {
    out << section_keyword(s.type) << " " << s.name << "\n";
    std::vector<DocEntry> entries = s.entries;
    std::sort(entries.begin(), entries.end(),
              [](const DocEntry& a, const DocEntry& b) { return a.idx < b.idx; });
    for (const DocEntry& e : entries) {
      for (int i : e.idx) out << i + 1 << " ";
      out << rat_to_string(e.c) << "\n";
    }
    out << "end\n";
  }
  for (const auto& [role, target] : doc.roles) out << "role " << role << " " << target << "\n";
  return out.str();
}

namespace {

const DocSection& need(const AlgebraDoc& doc, DocSection::Type t, const std::string& role) {
  const DocSection* s = doc.resolve(t, role);
  if (!s)
    throw DocError("document has no " + std::string(section_keyword(t)) + " for role '" + role +
                   "'");
  return *s;
}

}  // namespace

BinOp doc_op(const AlgebraDoc& doc, const std::string& role) {
  const DocSection& s = need(doc, DocSection::Op, role);
  BinOp op(doc.dim);
  for (const DocEntry& e : s.entries) op.at(e.idx[0], e.idx[1], e.idx[2]) = e.c;
  return op;
}

Mat doc_map(const AlgebraDoc& doc, const std::string& role) {
  const DocSection& s = need(doc, DocSection::Map, role);
  Mat m(doc.dim, doc.dim);
  for (const DocEntry& e : s.entries) m(e.idx[0], e.idx[1]) = e.c;
  return m;
}

Mat doc_form(const AlgebraDoc& doc, const std::string& role) {
  const DocSection& s = need(doc, DocSection::Form, role);
  Mat m(doc.dim, doc.dim);
  for (const DocEntry& e : s.entries) m(e.idx[0], e.idx[1]) = e.c;
  return m;
}

Tensor2 doc_tensor(const AlgebraDoc& doc, const std::string& role) {
  const DocSection& s = need(doc, DocSection::Tensor, role);
  Tensor2 t(doc.dim, doc.dim);
  for (const DocEntry& e : s.entries) t(e.idx[0], e.idx[1]) = e.c;
  return t;
}

Coproduct doc_coproduct(const AlgebraDoc& doc, const std::string& role) {
  const DocSection& s = need(doc, DocSection::Coproduct, role);
  Coproduct c = Coproduct::zero(doc.dim);
  for (const DocEntry& e : s.entries) c.delta[static_cast<size_t>(e.idx[0])](e.idx[1], e.idx[2]) = e.c;
  return c;
}

namespace {

void add_section(AlgebraDoc& doc, DocSection::Type t, const std::string& name,
                 std::vector<DocEntry> entries) {
  if (doc.find(t, name)) throw DocError("duplicate section '" + name + "'");
  std::sort(entries.begin(), entries.end(),
            [](const DocEntry& a, const DocEntry& b) { return a.idx < b.idx; });
  doc.sections.push_back({t, name, std::move(entries)});
}

}  // namespace

void add_op(AlgebraDoc& doc, const std::string& name, const BinOp& op) {
  std::vector<DocEntry> entries;
  for (int i = 0; i < op.dim; ++i)
    for (int j = 0; j < op.dim; ++j)
      for (int k = 0; k < op.dim; ++k)
        if (op.at(i, j, k) != 0) entries.push_back({{i, j, k}, op.at(i, j, k)});
  add_section(doc, DocSection::Op, name, std::move(entries));
}

void add_map(AlgebraDoc& doc, const std::string& name, const Mat& m) {
  std::vector<DocEntry> entries;
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m(i, j) != 0) entries.push_back({{i, j}, m(i, j)});
  add_section(doc, DocSection::Map, name, std::move(entries));
}

void add_form(AlgebraDoc& doc, const std::string& name, const Mat& m) {
  std::vector<DocEntry> entries;
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m(i, j) != 0) entries.push_back({{i, j}, m(i, j)});
  add_section(doc, DocSection::Form, name, std::move(entries));
}

void add_tensor(AlgebraDoc& doc, const std::string& name, const Tensor2& t) {
  std::vector<DocEntry> entries;
  for (int i = 0; i < t.dl; ++i)
    for (int j = 0; j < t.dr; ++j)
      if (t(i, j) != 0) entries.push_back({{i, j}, t(i, j)});
  add_section(doc, DocSection::Tensor, name, std::move(entries));
}

void add_coproduct(AlgebraDoc& doc, const std::string& name, const Coproduct& c) {
  std::vector<DocEntry> entries;
  for (int k = 0; k < c.dim; ++k)
    for (int i = 0; i < c.dim; ++i)
      for (int j = 0; j < c.dim; ++j)
        if (c.delta[static_cast<size_t>(k)](i, j) != 0)
          entries.push_back({{k, i, j}, c.delta[static_cast<size_t>(k)](i, j)});
  add_section(doc, DocSection::Coproduct, name, std::move(entries));
}

void add_role(AlgebraDoc& doc, const std::string& role, const std::string& target) {
  std::optional<DocSection::Type> t = role_target_type(role);
  if (!t) throw DocError("unknown role '" + role + "'");
  if (!doc.find(*t, target)) throw DocError("role target '" + target + "' missing");
  doc.roles.emplace_back(role, target);
}

}  // namespace relpca
