#include "hyperfuzz/format.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace hyperfuzz {

namespace {

struct Token {
  std::string text;
  int col = 0;  // 1-based
};

// One logical input line: comment stripped, tokens split on whitespace,
// with ':' always a token of its own (element names cannot contain it).
struct Line {
  int number = 0;
  std::vector<Token> tokens;
};

std::vector<Line> lex(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(pos, (eol == std::string_view::npos ? text.size() : eol) - pos);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    ++number;

    Line line;
    line.number = number;
    int col = 1;
    std::string current;
    int current_col = 0;
    auto flush = [&]() {
      if (!current.empty()) {
        line.tokens.push_back({current, current_col});
        current.clear();
      }
    };
    for (char c : raw) {
      if (c == '#') break;
      if (c == ' ' || c == '\t' || c == '\f' || c == '\v') {
        flush();
      } else if (c == ':') {
        flush();
        line.tokens.push_back({":", col});
      } else {
        if (current.empty()) current_col = col;
        current += c;
      }
      ++col;
    }
    flush();
    if (!line.tokens.empty()) lines.push_back(std::move(line));

    pos = eol == std::string_view::npos ? text.size() : eol + 1;
  }
  // Remember where the document ends so missing-item diagnostics have a
  // position to point at.
  lines.push_back(Line{number + 1, {}});
  return lines;
}

[[noreturn]] void fail(ParseErrorKind kind, int line, int col, const std::string& msg) {
  throw ParseError(kind, line, col, msg);
}

bool valid_name_token(const std::string& t) {
  for (char c : t) {
    if (c == ':' || c == '{' || c == '}') return false;
  }
  return !t.empty();
}

Element resolve(const HyperGroupoid& h, const Token& tok, int line) {
  if (auto e = h.find(tok.text)) return *e;
  fail(ParseErrorKind::unknown_element, line, tok.col, "unknown element '" + tok.text + "'");
}

Grade parse_grade_token(const Token& tok, int line) {
  const std::string& t = tok.text;
  // digits with at most one '/': anything else (sign, decimal point,
  // exponent) is a grammar error, not a value error
  for (char c : t) {
    if ((c < '0' || c > '9') && c != '/') {
      fail(ParseErrorKind::syntax, line, tok.col,
           "malformed grade '" + t + "' (expected 0, 1 or p/q)");
    }
  }
  const std::size_t slash = t.find('/');
  const std::string_view num_part(t.data(), slash == std::string::npos ? t.size() : slash);
  auto parse_int = [&](std::string_view part, int col) -> std::int64_t {
    std::int64_t value = 0;
    if (part.empty()) fail(ParseErrorKind::syntax, line, col, "malformed grade '" + t + "'");
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec == std::errc::result_out_of_range) {
      fail(ParseErrorKind::syntax, line, col, "grade component out of range in '" + t + "'");
    }
    if (ec != std::errc() || ptr != part.data() + part.size()) {
      fail(ParseErrorKind::syntax, line, col,
           "malformed grade '" + t + "' (expected 0, 1 or p/q)");
    }
    return value;
  };
  const std::int64_t num = parse_int(num_part, tok.col);
  std::int64_t den = 1;
  if (slash != std::string::npos) {
    den = parse_int(std::string_view(t).substr(slash + 1), tok.col);
  }
  try {
    return Grade::of(num, den);
  } catch (const GradeError& e) {
    fail(ParseErrorKind::grade_out_of_range, line, tok.col, e.what());
  }
}

}  // namespace

HyperGroupoid parse_hypergroupoid(std::string_view text) {
  const std::vector<Line> lines = lex(text);
  const Line& eof = lines.back();

  std::size_t li = 0;
  if (lines.size() == 1) {
    fail(ParseErrorKind::syntax, 1, 1, "missing 'elements:' header");
  }

  // Header: elements: <tok> <tok> ...
  const Line& header = lines[li++];
  if (header.tokens.size() < 2 || header.tokens[0].text != "elements" ||
      header.tokens[1].text != ":") {
    fail(ParseErrorKind::syntax, header.number, header.tokens[0].col,
         "expected 'elements: <name> <name> ...'");
  }
  std::vector<std::string> names;
  for (std::size_t i = 2; i < header.tokens.size(); ++i) {
    const Token& tok = header.tokens[i];
    if (tok.text == ":" || !valid_name_token(tok.text)) {
      fail(ParseErrorKind::syntax, header.number, tok.col,
           "invalid element name '" + tok.text + "'");
    }
    for (const std::string& prev : names) {
      if (prev == tok.text) {
        fail(ParseErrorKind::syntax, header.number, tok.col,
             "duplicate element name '" + tok.text + "'");
      }
    }
    names.push_back(tok.text);
  }
  if (names.empty()) {
    fail(ParseErrorKind::syntax, header.number, header.tokens[1].col + 1,
         "the carrier must list at least one element");
  }
  const int n = static_cast<int>(names.size());

  auto index_of = [&](const Token& tok, int line) -> int {
    for (int i = 0; i < n; ++i) {
      if (names[static_cast<std::size_t>(i)] == tok.text) return i;
    }
    fail(ParseErrorKind::unknown_element, line, tok.col, "unknown element '" + tok.text + "'");
  };

  std::vector<ElementSet> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  std::vector<bool> seen(table.size(), false);

  for (; li + 1 < lines.size(); ++li) {
    const Line& line = lines[li];
    const auto& toks = line.tokens;
    if (toks.size() < 3 || toks[2].text != ":") {
      fail(ParseErrorKind::syntax, line.number, toks[0].col,
           "expected '<x> <y> : <e1> <e2> ...'");
    }
    const int x = index_of(toks[0], line.number);
    const int y = index_of(toks[1], line.number);
    const std::size_t idx = static_cast<std::size_t>(x) * static_cast<std::size_t>(n) +
                            static_cast<std::size_t>(y);
    if (seen[idx]) {
      fail(ParseErrorKind::duplicate_cell, line.number, toks[0].col,
           "cell (" + toks[0].text + "," + toks[1].text + ") given twice");
    }
    if (toks.size() == 3) {
      fail(ParseErrorKind::empty_set, line.number, toks[2].col,
           "cell (" + toks[0].text + "," + toks[1].text + ") has an empty set");
    }
    ElementSet value;
    for (std::size_t i = 3; i < toks.size(); ++i) {
      if (toks[i].text == ":") {
        fail(ParseErrorKind::syntax, line.number, toks[i].col, "unexpected ':'");
      }
      const Element e{index_of(toks[i], line.number)};
      if (value.contains(e)) {
        fail(ParseErrorKind::syntax, line.number, toks[i].col,
             "duplicate member '" + toks[i].text + "' in cell");
      }
      value.insert(e);
    }
    seen[idx] = true;
    table[idx] = value;
  }

  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!seen[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) +
                static_cast<std::size_t>(y)]) {
        fail(ParseErrorKind::missing_cell, eof.number, 1,
             "cell (" + names[static_cast<std::size_t>(x)] + "," +
                 names[static_cast<std::size_t>(y)] + ") is missing");
      }
    }
  }

  return HyperGroupoid(std::move(names), std::move(table));
}

FuzzySubset parse_fuzzy(std::string_view text, const HyperGroupoid& h) {
  const std::vector<Line> lines = lex(text);
  const Line& eof = lines.back();
  const int n = h.size();

  std::vector<Grade> grades(static_cast<std::size_t>(n));
  std::vector<bool> seen(static_cast<std::size_t>(n), false);

  for (std::size_t li = 0; li + 1 < lines.size(); ++li) {
    const Line& line = lines[li];
    const auto& toks = line.tokens;
    if (toks.size() != 2) {
      const int col = toks.size() > 2 ? toks[2].col : toks[0].col;
      fail(ParseErrorKind::syntax, line.number, col, "expected '<element> <grade>'");
    }
    const Element e = resolve(h, toks[0], line.number);
    if (seen[static_cast<std::size_t>(e.index)]) {
      fail(ParseErrorKind::duplicate_element, line.number, toks[0].col,
           "element '" + toks[0].text + "' assigned twice");
    }
    grades[static_cast<std::size_t>(e.index)] = parse_grade_token(toks[1], line.number);
    seen[static_cast<std::size_t>(e.index)] = true;
  }

  for (int i = 0; i < n; ++i) {
    if (!seen[static_cast<std::size_t>(i)]) {
      fail(ParseErrorKind::missing_element, eof.number, 1,
           "element '" + h.name(Element{i}) + "' has no grade");
    }
  }

  return FuzzySubset(std::move(grades));
}

std::string render_hypergroupoid(const HyperGroupoid& h) {
  std::string out = "elements:";
  for (const std::string& name : h.names()) {
    out += ' ';
    out += name;
  }
  out += '\n';
  for (Element x : h.elements()) {
    for (Element y : h.elements()) {
      out += h.name(x);
      out += ' ';
      out += h.name(y);
      out += " :";
      for (Element e : h.cell(x, y)) {
        out += ' ';
        out += h.name(e);
      }
      out += '\n';
    }
  }
  return out;
}

std::string render_fuzzy(const HyperGroupoid& h, const FuzzySubset& f) {
  std::string out;
  for (Element e : h.elements()) {
    out += h.name(e);
    out += ' ';
    out += to_string(f.at(e));
    out += '\n';
  }
  return out;
}

std::string render_element_set(const HyperGroupoid& h, ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (Element e : s) {
    if (!first) out += ' ';
    out += h.name(e);
    first = false;
  }
  out += '}';
  return out;
}

namespace {

const char* characterization_formula(IdealKind kind) {
  switch (kind) {
    case IdealKind::right: return "(f o 1)";
    case IdealKind::left: return "(1 o f)";
    case IdealKind::quasi: return "((f o 1) ^ (1 o f))";
    case IdealKind::bi: return "(f o 1 o f)";
  }
  return "?";
}

}  // namespace

std::string render_witness(const HyperGroupoid& h, const Witness& witness,
                           std::optional<IdealKind> kind) {
  std::string out;
  if (const auto* w = std::get_if<AssocWitness>(&witness)) {
    out += "counterexample: x=" + h.name(w->x) + " y=" + h.name(w->y) + " z=" + h.name(w->z) + "\n";
    out += "  (x o y)*{z} = " + render_element_set(h, w->lhs) + "\n";
    out += "  {x}*(y o z) = " + render_element_set(h, w->rhs) + "\n";
  } else if (const auto* w = std::get_if<OneSidedWitness>(&witness)) {
    const char* side = (kind && *kind == IdealKind::left) ? "y" : "x";
    out += "counterexample: x=" + h.name(w->x) + " y=" + h.name(w->y) + " u=" + h.name(w->u) + "\n";
    out += "  f(u) = " + to_string(w->fu) + "\n";
    out += std::string("  f(") + side + ") = " + to_string(w->bound) + "\n";
  } else if (const auto* w = std::get_if<QuasiWitness>(&witness)) {
    out += "counterexample: x=" + h.name(w->x) + " b=" + h.name(w->b) + " s=" + h.name(w->s) +
           " t=" + h.name(w->t) + " c=" + h.name(w->c) + "\n";
    out += "  f(x) = " + to_string(w->fx) + "\n";
    out += "  f(b) = " + to_string(w->fb) + "\n";
    out += "  f(c) = " + to_string(w->fc) + "\n";
  } else if (const auto* w = std::get_if<BiWitness>(&witness)) {
    out += "counterexample: x=" + h.name(w->x) + " y=" + h.name(w->y) + " z=" + h.name(w->z) +
           " u=" + h.name(w->u) + "\n";
    out += "  f(u) = " + to_string(w->fu) + "\n";
    out += "  f(x) = " + to_string(w->fx) + "\n";
    out += "  f(z) = " + to_string(w->fz) + "\n";
  } else if (const auto* w = std::get_if<BoundWitness>(&witness)) {
    const char* formula = kind ? characterization_formula(*kind) : "lhs";
    out += "counterexample: a=" + h.name(w->a) + "\n";
    out += std::string("  ") + formula + "(a) = " + to_string(w->lhs) + "\n";
    out += "  f(a) = " + to_string(w->fa) + "\n";
  }
  return out;
}

std::string render_check_report(const HyperGroupoid& h, const CheckReport& report) {
  std::string out;
  if (report.method) {
    out += std::string("method: ") +
           (*report.method == Method::definition ? "definition" : "characterization") + "\n";
  }
  out += std::string("verdict: ") + (report.pass ? "pass" : "fail") + "\n";
  if (report.witness) {
    out += render_witness(h, *report.witness, report.kind);
  }
  return out;
}

std::string render_ideal_profile(const IdealProfile& profile) {
  auto word = [](bool b) { return b ? "pass" : "fail"; };
  std::string out;
  out += std::string("associative: ") + (profile.associative ? "yes" : "no") + "\n";
  out += std::string("right: ") + word(profile.right) + "\n";
  out += std::string("left: ") + word(profile.left) + "\n";
  out += std::string("quasi: ") + word(profile.quasi) + "\n";
  out += std::string("bi: ") + (profile.bi ? word(*profile.bi) : "n/a (not a hypersemigroup)") + "\n";
  return out;
}

std::string render_verification_report(const VerificationReport& report, bool include_time) {
  const VerificationScope& sc = report.scope;
  std::string out;
  out += std::string("theorem: ") + theorem_name(report.theorem) + "\n";
  out += "scope: n=" + std::to_string(sc.carrier_size) + " k=" + std::to_string(sc.grid);
  if (sc.mode == Mode::exhaustive) {
    out += " exhaustive";
  } else {
    out += " sampled m=" + std::to_string(sc.samples) + " seed=" + std::to_string(sc.seed);
  }
  if (sc.assoc_only) out += " assoc-only";
  out += '\n';
  out += "tables: " + std::to_string(report.tables_checked) + "\n";
  out += "instances: " + std::to_string(report.instances_checked) + "\n";
  out += "disagreements: " + std::to_string(report.disagreements) + "\n";
  if (report.first_disagreement) {
    out += "first disagreement: instance " + std::to_string(report.first_disagreement->instance_index) + "\n";
    std::istringstream in(report.first_disagreement->description);
    std::string line;
    while (std::getline(in, line)) {
      out += "  " + line + "\n";
    }
  }
  if (include_time) {
    out += "time: " + std::to_string(report.wall_time.count()) + " ms\n";
  }
  return out;
}

}  // namespace hyperfuzz
