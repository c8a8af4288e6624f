#include <chlat/latcat/catalog.hpp>

#include <chlat/cxhyp/heisenberg.hpp>
#include <chlat/groups/group_ops.hpp>
#include <chlat/latcat/words.hpp>

#include <cctype>
#include <deque>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace chlat::latcat {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& msg) {
  throw std::runtime_error("catalog: " + where + ": " + msg);
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

Rat parse_rat(const std::string& text, const std::string& where) {
  std::string t = trim(text);
  if (t.empty()) fail(where, "empty rational");
  try {
    size_t slash = t.find('/');
    if (slash == std::string::npos) return Rat(Int(t));
    return make_rat(Int(trim(t.substr(0, slash))), Int(trim(t.substr(slash + 1))));
  } catch (const std::exception&) {
    fail(where, "bad rational '" + t + "'");
  }
}

long parse_long(const std::string& text, const std::string& where) {
  try {
    size_t used = 0;
    long v = std::stol(trim(text), &used);
    if (used != trim(text).size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    fail(where, "bad integer '" + text + "'");
  }
}

bool parse_bool(const std::string& text, const std::string& where) {
  std::string t = trim(text);
  if (t == "true") return true;
  if (t == "false") return false;
  fail(where, "expected true/false, got '" + t + "'");
}

// ---------------------------------------------------------------------------
// Field-element expression evaluator.
//   expr   := term (('+'|'-') term)*
//   term   := unary ('*' unary)*
//   unary  := ('-' | '~')* atom ('^' int)?        (~ = field conjugation)
//   atom   := rational | name | '(' expr ')'
// ---------------------------------------------------------------------------

struct ExprEval {
  const std::string& s;
  size_t pos = 0;
  const NumberFieldPtr& field;
  const std::map<std::string, NFElem>& names;
  const std::string& where;

  [[noreturn]] void bad(const std::string& msg) const {
    fail(where, msg + " at position " + std::to_string(pos) + " in '" + s + "'");
  }
  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])) != 0) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  NFElem parse_expr() {
    NFElem v = parse_term();
    for (;;) {
      skip();
      if (eat('+')) {
        v = v + parse_term();
      } else if (pos < s.size() && s[pos] == '-') {
        ++pos;
        v = v - parse_term();
      } else {
        return v;
      }
    }
  }

  NFElem parse_term() {
    NFElem v = parse_unary();
    while (eat('*')) v = v * parse_unary();
    return v;
  }

  NFElem parse_unary() {
    skip();
    if (eat('-')) return NFElem(Rat(0)) - parse_unary();
    if (eat('~')) return parse_unary().conj();
    NFElem v = parse_atom();
    if (eat('^')) {
      skip();
      bool neg = eat('-');
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])) != 0) ++pos;
      if (start == pos) bad("expected exponent");
      long e = std::stol(s.substr(start, pos - start));
      v = v.pow(neg ? -e : e);
    }
    return v;
  }

  NFElem parse_atom() {
    skip();
    if (pos >= s.size()) bad("unexpected end of expression");
    if (eat('(')) {
      NFElem v = parse_expr();
      if (!eat(')')) bad("missing ')'");
      return v;
    }
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])) != 0) ++pos;
      Int num(s.substr(start, pos - start));
      skip();
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        skip();
        size_t dstart = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])) != 0) ++pos;
        if (dstart == pos) bad("expected denominator");
        return field->from_rat(make_rat(num, Int(s.substr(dstart, pos - dstart))));
      }
      return field->from_rat(Rat(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_') {
      size_t start = pos;
      while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) != 0 || s[pos] == '_'))
        ++pos;
      std::string name = s.substr(start, pos - start);
      auto it = names.find(name);
      if (it == names.end()) bad("unknown name '" + name + "'");
      return it->second;
    }
    bad(std::string("unexpected character '") + c + "'");
  }
};

NFElem eval_expr(const std::string& text, const NumberFieldPtr& field,
                 const std::map<std::string, NFElem>& names, const std::string& where) {
  ExprEval ev{text, 0, field, names, where};
  NFElem v = ev.parse_expr();
  ev.skip();
  if (ev.pos != text.size()) ev.bad("trailing input");
  return v;
}

NFMat3 eval_matrix(const std::string& value, const NumberFieldPtr& field,
                   const std::map<std::string, NFElem>& names, const std::string& where) {
  auto entries = split(value, ',');
  if (entries.size() != 9) fail(where, "expected 9 comma-separated entries");
  NFMat3 m;
  for (int i = 0; i < 9; ++i)
    m.m[size_t(i)] = eval_expr(entries[size_t(i)], field, names, where);
  return m;
}

NFMat3 eval_word_matrix(const Word& w, const std::vector<NFMat3>& gens) {
  NFMat3 acc = NFMat3::identity();
  for (int letter : w) {
    const NFMat3& g = gens[size_t(std::abs(letter)) - 1];
    acc = acc * (letter > 0 ? g : g.inverse());
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Raw section scanner.
// ---------------------------------------------------------------------------

struct RawLine {
  std::string key;    // first word of the left side
  std::string label;  // optional second word (const/matrix/subgroup names)
  std::string value;  // right of '='
  int line_no = 0;
};

struct RawSection {
  std::string kind;  // FIELD or GROUP
  std::string name;
  std::vector<RawLine> lines;
  int line_no = 0;
};

std::vector<RawSection> scan_sections(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(path, "cannot open file");
  std::vector<RawSection> sections;
  std::string line;
  int line_no = 0;
  std::string pending;
  int pending_line = 0;
  auto flush_pending = [&]() {
    if (pending.empty()) return;
    std::string text = trim(pending);
    pending.clear();
    if (text.empty()) return;
    if (sections.empty()) fail(path, "line " + std::to_string(pending_line) + ": data before any section");
    size_t eq = text.find('=');
    if (eq == std::string::npos)
      fail(path, "line " + std::to_string(pending_line) + ": expected 'key = value'");
    std::string left = trim(text.substr(0, eq));
    std::string value = trim(text.substr(eq + 1));
    std::istringstream ls(left);
    RawLine rl;
    rl.line_no = pending_line;
    rl.value = value;
    ls >> rl.key;
    ls >> rl.label;
    std::string extra;
    if (ls >> extra)
      fail(path, "line " + std::to_string(pending_line) + ": too many words before '='");
    sections.back().lines.push_back(std::move(rl));
  };
  while (std::getline(in, line)) {
    ++line_no;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::string t = trim(line);
    if (t.empty()) continue;
    if (t.front() == '[') {
      flush_pending();
      if (t.back() != ']') fail(path, "line " + std::to_string(line_no) + ": unterminated section header");
      std::istringstream hs(t.substr(1, t.size() - 2));
      RawSection sec;
      sec.line_no = line_no;
      hs >> sec.kind >> sec.name;
      std::string extra;
      if (sec.kind.empty() || sec.name.empty() || (hs >> extra))
        fail(path, "line " + std::to_string(line_no) + ": section header must be [KIND name]");
      sections.push_back(std::move(sec));
      continue;
    }
    // Backslash continuation.
    if (pending.empty()) pending_line = line_no;
    if (!t.empty() && t.back() == '\\') {
      pending += t.substr(0, t.size() - 1) + " ";
      continue;
    }
    pending += t;
    flush_pending();
  }
  flush_pending();
  return sections;
}

// ---------------------------------------------------------------------------
// Section builders.
// ---------------------------------------------------------------------------

struct FieldData {
  NumberFieldPtr field;
  std::map<std::string, NFElem> names;  // generator + declared constants
};

QPoly poly_from_coeff_list(const std::string& value, const std::string& where) {
  std::vector<Rat> coeffs;
  std::istringstream vs(value);
  std::string tok;
  while (vs >> tok) coeffs.push_back(parse_rat(tok, where));
  if (coeffs.empty()) fail(where, "empty coefficient list");
  return QPoly(std::move(coeffs));
}

FieldData build_field(const RawSection& sec, const std::string& path) {
  const std::string where = path + " [FIELD " + sec.name + "]";
  NumberField::Spec spec;
  spec.name = sec.name;
  spec.gen_name = "t";
  spec.conj_gen_image = QPoly::x_power(1);
  bool have_min = false, have_approx = false;
  std::vector<std::pair<std::string, std::string>> consts;
  for (const RawLine& rl : sec.lines) {
    if (rl.key == "min_poly" && rl.label.empty()) {
      spec.min_poly = poly_from_coeff_list(rl.value, where);
      have_min = true;
    } else if (rl.key == "conj" && rl.label.empty()) {
      spec.conj_gen_image = poly_from_coeff_list(rl.value, where);
    } else if (rl.key == "approx" && rl.label.empty()) {
      std::istringstream vs(rl.value);
      if (!(vs >> spec.approx_re >> spec.approx_im)) fail(where, "approx needs two numbers");
      have_approx = true;
    } else if (rl.key == "gen" && rl.label.empty()) {
      spec.gen_name = trim(rl.value);
    } else if (rl.key == "const" && !rl.label.empty()) {
      consts.emplace_back(rl.label, rl.value);
    } else {
      fail(where, "unknown key '" + rl.key + (rl.label.empty() ? "" : " " + rl.label) + "'");
    }
  }
  if (!have_min) fail(where, "missing min_poly");
  if (!have_approx && spec.min_poly.degree() > 1) fail(where, "missing approx");
  FieldData fd;
  fd.field = NumberField::create(spec);
  const NFElem gen = fd.field->degree() == 1 ? fd.field->from_rat(-spec.min_poly.coeff(0))
                                             : fd.field->gen();
  fd.names.emplace(spec.gen_name, gen);
  for (const auto& [name, value] : consts) {
    if (fd.names.count(name) != 0) fail(where, "duplicate constant '" + name + "'");
    fd.names.emplace(name, eval_expr(value, fd.field, fd.names, where + " const " + name));
  }
  return fd;
}

std::vector<Word> parse_word_list(const std::string& value, int ngens, const std::string& where) {
  std::vector<Word> out;
  for (const std::string& part : split(value, ',')) {
    if (part.empty()) fail(where, "empty word in list");
    try {
      out.push_back(parse_digit_word(part, ngens));
    } catch (const std::exception& e) {
      fail(where, e.what());
    }
  }
  return out;
}

// Detects a top-level braid macro "brN(u,v)" and returns (N, u, v).
std::optional<std::tuple<int, Word, Word>> braid_shape(const std::string& text, int ngens) {
  std::string t = trim(text);
  if (t.size() < 6 || t.compare(0, 2, "br") != 0 || t.back() != ')') return std::nullopt;
  size_t open = t.find('(');
  if (open == std::string::npos) return std::nullopt;
  std::string num = trim(t.substr(2, open - 2));
  if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
  // Split the argument list at the top-level comma.
  int depth = 0;
  size_t comma = std::string::npos;
  for (size_t i = open + 1; i + 1 < t.size(); ++i) {
    if (t[i] == '(') ++depth;
    if (t[i] == ')') --depth;
    if (t[i] == ',' && depth == 0) {
      if (comma != std::string::npos) return std::nullopt;
      comma = i;
    }
  }
  if (comma == std::string::npos) return std::nullopt;
  try {
    Word u = parse_digit_word(t.substr(open + 1, comma - open - 1), ngens);
    Word v = parse_digit_word(t.substr(comma + 1, t.size() - comma - 2), ngens);
    return std::make_tuple(std::stoi(num), u, v);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

const LatticeRecord* Catalog::find(const std::string& slug) const {
  for (const auto& r : records)
    if (r.slug == slug) return &r;
  return nullptr;
}

const LatticeRecord& Catalog::require(const std::string& slug) const {
  const LatticeRecord* r = find(slug);
  if (r == nullptr) throw std::runtime_error("catalog: no record named '" + slug + "'");
  return *r;
}

Catalog load_catalog(const std::string& path) {
  Catalog cat;
  std::map<std::string, FieldData> fields;
  std::set<std::string> slugs;

  for (const RawSection& sec : scan_sections(path)) {
    if (sec.kind == "FIELD") {
      if (fields.count(sec.name) != 0) fail(path, "duplicate field '" + sec.name + "'");
      FieldData fd = build_field(sec, path);
      cat.fields.emplace(sec.name, fd.field);
      fields.emplace(sec.name, std::move(fd));
      continue;
    }
    if (sec.kind != "GROUP") fail(path, "unknown section kind '" + sec.kind + "'");
    if (!slugs.insert(sec.name).second) fail(path, "duplicate group '" + sec.name + "'");

    const std::string where = "[GROUP " + sec.name + "]";
    LatticeRecord rec;
    rec.slug = sec.name;

    // Pass 1: scalar keys.
    std::set<std::string> seen;
    std::vector<const RawLine*> matrix_lines;   // in file order
    std::vector<const RawLine*> word_lines;     // isotropy/cusp/subgroup/wordlist/relators
    const RawLine* form_line = nullptr;
    std::string field_name;
    std::optional<bool> pc_key;
    for (const RawLine& rl : sec.lines) {
      const std::string k = rl.key + (rl.label.empty() ? "" : " " + rl.label);
      const std::string lw = where + " " + k;
      if (rl.key == "isotropy" || rl.key == "cusp" || rl.key == "subgroup" ||
          rl.key == "wordlist" || rl.key == "relators") {
        if (rl.key == "relators" && !rl.label.empty()) fail(lw, "unexpected label");
        if ((rl.key == "subgroup" || rl.key == "wordlist") && rl.label.empty())
          fail(lw, "missing name");
        word_lines.push_back(&rl);
        continue;
      }
      if (rl.key == "matrix" || rl.key == "matrix_aux") {
        if (rl.label.empty()) fail(lw, "missing name");
        matrix_lines.push_back(&rl);
        continue;
      }
      if (!rl.label.empty()) fail(lw, "unexpected label");
      if (!seen.insert(rl.key).second) fail(lw, "duplicate key");
      if (rl.key == "name") rec.name = rl.value;
      else if (rl.key == "family") rec.family = rl.value;
      else if (rl.key == "p") rec.p = int(parse_long(rl.value, lw));
      else if (rl.key == "t") rec.t_label = rl.value;
      else if (rl.key == "chi_orb") rec.chi_orb = parse_rat(rl.value, lw);
      else if (rl.key == "cocompact") rec.cocompact = parse_bool(rl.value, lw);
      else if (rl.key == "arithmetic") rec.arithmetic = parse_bool(rl.value, lw);
      else if (rl.key == "lcm") rec.claimed_lcm = parse_long(rl.value, lw);
      else if (rl.key == "ab") {
        try {
          rec.claimed_ab = AbelianInvariants::parse(rl.value);
        } catch (const std::exception& e) {
          fail(lw, e.what());
        }
      } else if (rl.key == "two_k") rec.two_k = int(parse_long(rl.value, lw));
      else if (rl.key == "exp_rr") rec.exp_rr = parse_long(rl.value, lw);
      else if (rl.key == "exp_jrr") rec.exp_jrr = parse_long(rl.value, lw);
      else if (rl.key == "presentation_complete") pc_key = parse_bool(rl.value, lw);
      else if (rl.key == "field") field_name = trim(rl.value);
      else if (rl.key == "form") form_line = &rl;
      else if (rl.key == "congruence") {
        auto parts = split(rl.value, ':');
        if (parts.size() < 2 || parts.size() > 3) fail(lw, "expected prime : order [: name]");
        CongruenceNote note;
        note.prime = parse_long(parts[0], lw);
        note.claimed_order = Int(parts[1]);
        if (parts.size() == 3) note.image_name = parts[2];
        if (note.prime < 2 || note.claimed_order < 1) fail(lw, "bad prime or order");
        rec.congruence = std::move(note);
      } else if (rl.key == "mu_k_target" || rl.key == "mu_l_target") {
        std::istringstream vs(rl.value);
        std::array<int, 3> tgt{};
        if (!(vs >> tgt[0] >> tgt[1] >> tgt[2])) fail(lw, "expected three integers");
        (rl.key == "mu_k_target" ? rec.largeness.mu_k_target : rec.largeness.mu_l_target) = tgt;
      } else if (rl.key == "largeness_index") {
        rec.largeness.printed_index = parse_long(rl.value, lw);
      } else {
        fail(lw, "unknown key");
      }
    }

    // Basic requirements.
    if (rec.name.empty()) fail(where, "missing name");
    if (rec.family != "mostow" && rec.family != "sporadic" && rec.family != "thompson")
      fail(where, "family must be mostow, sporadic, or thompson");
    if (rec.p < 2) fail(where, "missing or bad p");
    if (seen.count("chi_orb") == 0) fail(where, "missing chi_orb");
    if (seen.count("cocompact") == 0) fail(where, "missing cocompact");
    if (seen.count("arithmetic") == 0) fail(where, "missing arithmetic");
    if (rec.claimed_lcm <= 0) fail(where, "missing or bad lcm");

    // Pass 2: the presentation.
    std::vector<Word> relator_words;
    const RawLine* relator_line = nullptr;
    for (const RawLine* rl : word_lines)
      if (rl->key == "relators") {
        if (relator_line != nullptr) fail(where, "duplicate relators key");
        relator_line = rl;
      }
    if (rec.family == "mostow") {
      if (relator_line != nullptr) fail(where, "mostow records derive their relators; drop 'relators'");
      rec.presentation.gen_names = {"r1", "r2", "r3", "j"};
      if (rec.two_k > 0) {
        rec.presentation = mostow_presentation(rec.p, rec.two_k, rec.exp_rr, rec.exp_jrr);
        rec.presentation_complete = pc_key.value_or(true);
      } else {
        rec.presentation_complete = false;
        if (pc_key.value_or(false)) fail(where, "no two_k: presentation cannot be complete");
      }
    } else {
      if (rec.two_k != 0 || rec.exp_rr || rec.exp_jrr)
        fail(where, "two_k/exp overrides apply to mostow records only");
      rec.presentation.gen_names = rec.family == "sporadic"
                                       ? std::vector<std::string>{"r1", "r2", "r3", "j"}
                                       : std::vector<std::string>{"r1", "r2", "r3"};
      if (relator_line != nullptr) {
        relator_words = parse_word_list(relator_line->value, rec.presentation.ngens(),
                                        where + " relators");
        rec.presentation.relators = relator_words;
        rec.presentation_complete = pc_key.value_or(true);
      } else {
        rec.presentation_complete = false;
        if (pc_key.value_or(false)) fail(where, "no relators: presentation cannot be complete");
      }
    }
    rec.presentation.validate();
    const int ngens = rec.presentation.ngens();

    // Pass 3: word-valued keys.
    for (const RawLine* rlp : word_lines) {
      const RawLine& rl = *rlp;
      const std::string lw = where + " " + rl.key + (rl.label.empty() ? "" : " " + rl.label);
      if (rl.key == "relators") continue;
      if (rl.key == "isotropy") {
        auto parts = split(rl.value, ':');
        if (parts.size() != 2) fail(lw, "expected words : order");
        IsotropyEntry ent;
        ent.gens = parse_word_list(parts[0], ngens, lw);
        ent.claimed_order = parse_long(parts[1], lw);
        if (ent.claimed_order <= 0) fail(lw, "isotropy order must be positive");
        rec.isotropy.push_back(std::move(ent));
      } else if (rl.key == "cusp") {
        auto parts = split(rl.value, ':');
        if (parts.size() != 2) fail(lw, "expected ambient words : local relators");
        CuspEntry ent;
        ent.gens = parse_word_list(parts[0], ngens, lw);
        const int local = int(ent.gens.size());
        ent.relations.gen_names.clear();
        for (int i = 1; i <= local; ++i) ent.relations.gen_names.push_back("c" + std::to_string(i));
        ent.relations.relators = parse_word_list(parts[1], local, lw);
        ent.relations.validate();
        rec.cusps.push_back(std::move(ent));
      } else if (rl.key == "subgroup") {
        if (!rec.subgroups.emplace(rl.label, parse_word_list(rl.value, ngens, lw)).second)
          fail(lw, "duplicate subgroup name");
      } else if (rl.key == "wordlist") {
        if (!rec.wordlists.emplace(rl.label, parse_word_list(rl.value, ngens, lw)).second)
          fail(lw, "duplicate wordlist name");
      }
    }

    // Pass 4: the matrix model.
    if (!field_name.empty() || form_line != nullptr || !matrix_lines.empty()) {
      if (field_name.empty()) fail(where, "matrix model requires a field key");
      if (form_line == nullptr) fail(where, "matrix model requires a form key");
      auto fit = fields.find(field_name);
      if (fit == fields.end()) fail(where, "unknown field '" + field_name + "'");
      const FieldData& fd = fit->second;
      MatrixModel model;
      model.field = fd.field;
      try {
        model.form = make_hermitian_form(
            eval_matrix(form_line->value, fd.field, fd.names, where + " form"));
      } catch (const std::exception& e) {
        fail(where + " form", e.what());
      }
      std::map<std::string, NFMat3> named;
      std::vector<std::optional<NFMat3>> gens(size_t(ngens));
      for (const RawLine* rlp : matrix_lines) {
        const RawLine& rl = *rlp;
        const std::string lw = where + " " + rl.key + " " + rl.label;
        NFMat3 m;
        std::string v = trim(rl.value);
        if (v.rfind("word", 0) == 0 &&
            (v.size() == 4 || std::isspace(static_cast<unsigned char>(v[4])) != 0)) {
          std::vector<NFMat3> sofar;
          for (int i = 0; i < ngens; ++i) {
            if (!gens[size_t(i)]) break;
            sofar.push_back(*gens[size_t(i)]);
          }
          Word w;
          try {
            w = parse_digit_word(v.substr(4), int(sofar.size()));
          } catch (const std::exception& e) {
            fail(lw, std::string(e.what()) + " (matrix words may only use generators already defined)");
          }
          m = eval_word_matrix(w, sofar);
        } else {
          m = eval_matrix(v, fd.field, fd.names, lw);
        }
        if (rl.key == "matrix") {
          int gi = rec.presentation.gen_index(rl.label);
          if (gi < 0) fail(lw, "no generator named '" + rl.label + "'");
          if (gens[size_t(gi)]) fail(lw, "duplicate matrix for generator");
          gens[size_t(gi)] = m;
        } else {
          if (!named.emplace(rl.label, m).second) fail(lw, "duplicate matrix_aux name");
        }
      }
      for (int i = 0; i < ngens; ++i) {
        if (!gens[size_t(i)])
          fail(where, "matrix model incomplete: no matrix for generator '" +
                          rec.presentation.gen_names[size_t(i)] + "'");
        model.generators.push_back(*gens[size_t(i)]);
      }
      model.aux = std::move(named);
      rec.model = std::move(model);

      // Load-time invariant: every presentation relator is a projective
      // identity in the model.
      for (const Word& r : rec.presentation.relators) {
        if (!eval_word_matrix(r, rec.model->generators).is_scalar())
          fail(where, "relator " + digit_word_to_string(r) + " does not die in the matrix model");
      }
    }

    // Load-time invariant: non-cocompact records must exhibit a cusp.
    if (!rec.cocompact && rec.cusps.empty())
      fail(where, "non-cocompact record without a cusp entry");

    cat.records.push_back(std::move(rec));
  }
  return cat;
}

namespace {

// Exact closure enumeration of the projectivized subgroup generated by the
// images of the given words; returns nullopt when the closure exceeds cap.
std::optional<long> projective_closure_order(const std::vector<Word>& gens,
                                             const MatrixModel& model, long cap) {
  auto proj_key = [](const NFMat3& m) {
    int lead = -1;
    for (int i = 0; i < 9 && lead < 0; ++i)
      if (!m.m[size_t(i)].is_zero()) lead = i;
    NFMat3 s = m.scaled(m.m[size_t(lead)].inverse());
    std::string key;
    for (const auto& e : s.m) key += e.to_string() + ";";
    return key;
  };
  std::vector<NFMat3> seeds;
  for (const Word& w : gens) {
    NFMat3 g = eval_word_matrix(w, model.generators);
    seeds.push_back(g);
    seeds.push_back(g.inverse());
  }
  std::map<std::string, NFMat3> seen;
  std::deque<NFMat3> frontier;
  NFMat3 id = NFMat3::identity();
  seen.emplace(proj_key(id), id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    NFMat3 cur = frontier.front();
    frontier.pop_front();
    for (const NFMat3& g : seeds) {
      NFMat3 next = cur * g;
      std::string key = proj_key(next);
      if (seen.count(key) != 0) continue;
      if (long(seen.size()) >= cap) return std::nullopt;
      seen.emplace(std::move(key), next);
      frontier.push_back(next);
    }
  }
  return long(seen.size());
}

// The braid-centrality facts for br6 in the exact Heisenberg model of the
// (3,3,3) cusp group: a, b unit-rotation screws about vertical axes at
// distance 1, rotation part exp(i pi / 3).
std::vector<std::string> check_br6_centrality() {
  std::vector<std::string> errors;
  NumberField::Spec spec;
  spec.min_poly = QPoly::from_int_coeffs({1, 1, 1});     // x^2 + x + 1, x = omega
  spec.conj_gen_image = QPoly::from_int_coeffs({-1, -1});  // conj(omega) = -1 - omega
  spec.approx_re = -0.5;
  spec.approx_im = 0.8660254037844386;
  spec.name = "Q(omega)";
  spec.gen_name = "w";
  NumberFieldPtr f = NumberField::create(spec);
  const NFElem zeta = f->one() + f->gen();  // 1 + omega = exp(i pi/3)
  const HeisenbergElement a = make_heisenberg(f->zero(), f->zero(), zeta);
  const HeisenbergElement b = make_heisenberg(f->one(), f->zero(), zeta);
  auto eval = [&](const Word& w) {
    HeisenbergElement acc = heisenberg_identity();
    for (int letter : w) {
      HeisenbergElement g = (std::abs(letter) == 1) ? a : b;
      if (letter < 0) g = heisenberg_inverse(g);
      acc = heisenberg_mul(acc, g);
    }
    return acc;
  };
  if (!eval(braid_relator(6, 1, 2)).is_identity())
    errors.push_back("br6 fails in the Heisenberg screw model");
  const Word ab3 = word_power({1, 2}, 3);
  for (int g : {1, 2}) {
    Word comm = concat(concat(ab3, {g}), concat(inverse_word(ab3), {-g}));
    if (!eval(comm).is_identity())
      errors.push_back("(ab)^3 does not centralize generator " + std::to_string(g) +
                       " in the Heisenberg screw model");
  }
  return errors;
}

}  // namespace

ValidationReport validate(const LatticeRecord& rec, long order_bound) {
  ValidationReport rep;
  auto err = [&](const std::string& m) { rep.errors.push_back(rec.slug + ": " + m); };
  auto note = [&](const std::string& m) { rep.notes.push_back(rec.slug + ": " + m); };

  // LCM / lopt consistency.
  try {
    (void)lopt(rec);
  } catch (const std::exception& e) {
    err(e.what());
  }

  // Stated abelianization against a complete presentation.
  if (rec.presentation_complete && !rec.presentation.relators.empty()) {
    AbelianInvariants ab = abelianization(rec.presentation);
    if (!(ab == rec.claimed_ab))
      err("abelianization " + ab.to_string() + " disagrees with stated " +
          rec.claimed_ab.to_string());
  } else if (!rec.presentation.relators.empty()) {
    note("partial presentation: abelianization not compared");
  }

  // Isotropy orders.
  if (rec.has_model()) {
    for (size_t i = 0; i < rec.isotropy.size(); ++i) {
      const IsotropyEntry& iso = rec.isotropy[i];
      if (iso.claimed_order > order_bound) {
        note("isotropy #" + std::to_string(i + 1) + ": order " +
             std::to_string(iso.claimed_order) + " above bound, skipped");
        continue;
      }
      auto got = projective_closure_order(iso.gens, *rec.model, 2 * iso.claimed_order + 100);
      if (!got)
        err("isotropy #" + std::to_string(i + 1) + ": closure exceeds claimed order " +
            std::to_string(iso.claimed_order));
      else if (*got != iso.claimed_order)
        err("isotropy #" + std::to_string(i + 1) + ": order " + std::to_string(*got) +
            " != claimed " + std::to_string(iso.claimed_order));
    }
  } else if (!rec.isotropy.empty()) {
    note("isotropy orders unverified (no matrix model; orders of finite subgroups of an "
         "infinite group are not computable from the presentation alone)");
  }

  // Cusp relations in the matrix model.
  for (size_t c = 0; c < rec.cusps.size(); ++c) {
    const CuspEntry& cusp = rec.cusps[c];
    if (rec.has_model()) {
      std::vector<NFMat3> local;
      for (const Word& w : cusp.gens) local.push_back(eval_word_matrix(w, rec.model->generators));
      for (const Word& r : cusp.relations.relators) {
        if (!eval_word_matrix(r, local).is_scalar())
          err("cusp #" + std::to_string(c + 1) + ": relation " + digit_word_to_string(r) +
              " fails in the matrix model");
      }
    } else if (!cusp.relations.relators.empty()) {
      note("cusp #" + std::to_string(c + 1) + ": relations unverified (no matrix model)");
    }
  }

  // Formal braid-centrality facts for br6 cusps.
  bool has_br6 = false;
  for (const CuspEntry& cusp : rec.cusps)
    for (const Word& r : cusp.relations.relators)
      if (cusp.relations.ngens() >= 2 && r == braid_relator(6, 1, 2)) has_br6 = true;
  if (has_br6)
    for (const std::string& e : check_br6_centrality()) err(e);

  if (!rec.cocompact && rec.cusps.empty()) err("non-cocompact record without a cusp");
  return rep;
}

}  // namespace chlat::latcat
