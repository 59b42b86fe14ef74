#include "aprel/tptp.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

namespace aprel {

namespace {

enum class Tok {
  lower_word,
  upper_word,
  quoted,
  dollar_word,
  integer,
  punct,
  end,
};

struct Token {
  Tok kind = Tok::end;
  std::string text;
  std::size_t line = 0;
};

class Lexer {
 public:
  Lexer(std::string_view text, std::string source) : text_(text), source_(std::move(source)) {}

  const Token& peek() {
    if (!lookahead_) lookahead_ = scan();
    return *lookahead_;
  }

  Token next() {
    Token t = peek();
    lookahead_.reset();
    return t;
  }

  const std::string& source() const { return source_; }

 private:
  Token scan() {
    skip_space();
    Token t;
    t.line = line_;
    if (pos_ >= text_.size()) return t;
    char ch = text_[pos_];
    auto word_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
    if (std::islower(static_cast<unsigned char>(ch)) || std::isupper(static_cast<unsigned char>(ch)) ||
        ch == '_' || ch == '$') {
      std::size_t start = pos_++;
      if (ch == '$' && pos_ < text_.size() && text_[pos_] == '$') ++pos_;
      while (pos_ < text_.size() && word_char(text_[pos_])) ++pos_;
      t.text = std::string(text_.substr(start, pos_ - start));
      t.kind = ch == '$' ? Tok::dollar_word
               : std::islower(static_cast<unsigned char>(ch)) ? Tok::lower_word
                                                              : Tok::upper_word;
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      t.kind = Tok::integer;
      t.text = std::string(text_.substr(start, pos_ - start));
      return t;
    }
    if (ch == '\'' || ch == '"') {
      char quote = ch;
      ++pos_;
      std::string value;
      while (true) {
        if (pos_ >= text_.size()) throw ParseError(source_, t.line, "unterminated quoted name");
        char c = text_[pos_++];
        if (c == '\\' && pos_ < text_.size()) {
          value.push_back(text_[pos_++]);
          continue;
        }
        if (c == quote) break;
        if (c == '\n') ++line_;
        value.push_back(c);
      }
      if (quote == '"') throw ParseError(source_, t.line, "distinct objects are not supported");
      t.kind = Tok::quoted;
      t.text = std::move(value);
      return t;
    }
    static const char* const multi[] = {"<=>", "<~>", "=>", "<=", "!=", "~|", "~&"};
    for (const char* m : multi) {
      std::string_view mv(m);
      if (text_.substr(pos_, mv.size()) == mv) {
        pos_ += mv.size();
        t.kind = Tok::punct;
        t.text = std::string(mv);
        return t;
      }
    }
    ++pos_;
    t.kind = Tok::punct;
    t.text = std::string(1, ch);
    return t;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char ch = text_[pos_];
      if (ch == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        ++pos_;
      } else if (ch == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (ch == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '*') {
        pos_ += 2;
        while (pos_ + 1 < text_.size() && !(text_[pos_] == '*' && text_[pos_ + 1] == '/')) {
          if (text_[pos_] == '\n') ++line_;
          ++pos_;
        }
        pos_ = std::min(text_.size(), pos_ + 2);
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::string source_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::optional<Token> lookahead_;
};

struct RawTerm {
  std::string name;
  bool variable = false;
  bool integer = false;
  std::vector<RawTerm> args;
};

struct RawLiteral {
  bool positive = true;
  bool equality = false;
  RawTerm lhs;
  RawTerm rhs;
};

class Reader {
 public:
  Reader(const TptpOptions& options, std::shared_ptr<SymbolTable> symbols)
      : options_(options), symbols_(std::move(symbols)), set_(symbols_, SourceFormat::tptp) {}

  void read(std::string_view text, const std::string& source,
            const std::set<std::string>* selection) {
    Lexer lex(text, source);
    while (lex.peek().kind != Tok::end) {
      Token head = lex.next();
      if (head.kind != Tok::lower_word) {
        throw ParseError(source, head.line, "expected an annotated formula, got '" + head.text + "'");
      }
      if (head.text == "cnf") {
        read_cnf(lex, head.line, selection);
      } else if (head.text == "include") {
        read_include(lex, head.line);
      } else if (head.text == "fof" || head.text == "tff" || head.text == "thf" ||
                 head.text == "tcf") {
        throw ParseError(source, head.line, "non-CNF formula kind '" + head.text + "'");
      } else {
        throw ParseError(source, head.line, "unknown directive '" + head.text + "'");
      }
    }
  }

  ClauseSet take() { return std::move(set_); }

  std::vector<std::filesystem::path> include_stack;

 private:
  static void expect(Lexer& lex, const char* punct, const std::string& context) {
    Token t = lex.next();
    if (t.kind != Tok::punct || t.text != punct) {
      throw ParseError(lex.source(), t.line,
                       context + ": expected '" + punct + "', got '" +
                           (t.kind == Tok::end ? std::string("end of input") : t.text) + "'");
    }
  }

  static bool accept(Lexer& lex, const char* punct) {
    const Token& t = lex.peek();
    if (t.kind == Tok::punct && t.text == punct) {
      lex.next();
      return true;
    }
    return false;
  }

  void read_cnf(Lexer& lex, std::size_t line, const std::set<std::string>* selection) {
    expect(lex, "(", "cnf");
    Token name = lex.next();
    if (name.kind != Tok::lower_word && name.kind != Tok::quoted && name.kind != Tok::integer &&
        name.kind != Tok::upper_word) {
      throw ParseError(lex.source(), name.line, "cnf: invalid formula name '" + name.text + "'");
    }
    const std::string context = "cnf(" + name.text + ")";
    expect(lex, ",", context);
    Token role_tok = lex.next();
    Role role;
    if (role_tok.text == "axiom") {
      role = Role::axiom;
    } else if (role_tok.text == "hypothesis") {
      role = Role::hypothesis;
    } else if (role_tok.text == "negated_conjecture") {
      role = Role::negated_conjecture;
    } else {
      throw ParseError(lex.source(), role_tok.line,
                       context + ": unsupported role '" + role_tok.text + "'");
    }
    expect(lex, ",", context);
    std::vector<RawLiteral> literals;
    read_disjunction(lex, context, literals);
    if (accept(lex, ",")) skip_annotations(lex, context);
    expect(lex, ")", context);
    expect(lex, ".", context);

    if (selection && !selection->count(name.text)) return;
    add_clause(lex, line, name.text, role, literals, context);
  }

  void read_disjunction(Lexer& lex, const std::string& context, std::vector<RawLiteral>& out) {
    read_literal(lex, context, out);
    while (true) {
      const Token& t = lex.peek();
      if (t.kind != Tok::punct) break;
      if (t.text == "|") {
        lex.next();
        read_literal(lex, context, out);
        continue;
      }
      if (t.text == "&" || t.text == "=>" || t.text == "<=" || t.text == "<=>" ||
          t.text == "<~>" || t.text == "~|" || t.text == "~&") {
        throw ParseError(lex.source(), t.line, context + ": non-CNF formula (connective '" +
                                                   t.text + "')");
      }
      break;
    }
  }

  void read_literal(Lexer& lex, const std::string& context, std::vector<RawLiteral>& out) {
    const Token t = lex.peek();
    if (t.kind == Tok::punct && (t.text == "!" || t.text == "?")) {
      throw ParseError(lex.source(), t.line, context + ": non-CNF formula (quantifier)");
    }
    if (accept(lex, "(")) {
      read_disjunction(lex, context, out);
      expect(lex, ")", context);
      return;
    }
    if (accept(lex, "~")) {
      std::vector<RawLiteral> inner;
      read_literal(lex, context, inner);
      if (inner.size() != 1) {
        throw ParseError(lex.source(), t.line, context + ": non-CNF formula (negated disjunction)");
      }
      inner[0].positive = !inner[0].positive;
      out.push_back(std::move(inner[0]));
      return;
    }
    if (t.kind == Tok::dollar_word) {
      Token d = lex.next();
      if (d.text == "$false") return;
      throw ParseError(lex.source(), d.line, context + ": unsupported literal '" + d.text + "'");
    }
    std::size_t line = t.line;
    RawLiteral lit;
    lit.lhs = read_term(lex, context);
    if (accept(lex, "=")) {
      lit.equality = true;
      lit.rhs = read_term(lex, context);
    } else if (accept(lex, "!=")) {
      lit.equality = true;
      lit.positive = false;
      lit.rhs = read_term(lex, context);
    } else if (lit.lhs.variable || lit.lhs.integer) {
      throw ParseError(lex.source(), line, context + ": '" + lit.lhs.name + "' is not an atom");
    }
    out.push_back(std::move(lit));
  }

  RawTerm read_term(Lexer& lex, const std::string& context) {
    Token t = lex.next();
    RawTerm term;
    term.name = t.text;
    switch (t.kind) {
      case Tok::upper_word:
        term.variable = true;
        return term;
      case Tok::integer:
        term.integer = true;
        return term;
      case Tok::lower_word:
      case Tok::quoted:
        break;
      default:
        throw ParseError(lex.source(), t.line,
                         context + ": expected a term, got '" +
                             (t.kind == Tok::end ? std::string("end of input") : t.text) + "'");
    }
    if (accept(lex, "(")) {
      do {
        term.args.push_back(read_term(lex, context));
      } while (accept(lex, ","));
      expect(lex, ")", context);
    }
    return term;
  }

  static void skip_annotations(Lexer& lex, const std::string& context) {
    int depth = 0;
    while (true) {
      const Token& t = lex.peek();
      if (t.kind == Tok::end) throw ParseError(lex.source(), t.line, context + ": unexpected end");
      if (t.kind == Tok::punct) {
        if (t.text == "(" || t.text == "[") ++depth;
        if (t.text == ")" || t.text == "]") {
          if (depth == 0) return;
          --depth;
        }
      }
      lex.next();
    }
  }

  Term convert(const RawTerm& raw, std::unordered_map<std::string, VarId>& vars,
               std::vector<std::string>& names) {
    if (raw.variable) {
      auto [it, inserted] = vars.emplace(raw.name, static_cast<VarId>(names.size()));
      if (inserted) names.push_back(raw.name);
      return Term::variable(it->second);
    }
    std::vector<Term> args;
    args.reserve(raw.args.size());
    for (const auto& a : raw.args) args.push_back(convert(a, vars, names));
    SymbolId f = symbols_->intern(raw.name, raw.args.size(), SymbolKind::function);
    return Term::compound(f, std::move(args));
  }

  void add_clause(Lexer& lex, std::size_t line, const std::string& name, Role role,
                  const std::vector<RawLiteral>& raw, const std::string& context) {
    std::unordered_map<std::string, VarId> vars;
    std::vector<std::string> names;
    std::vector<Literal> literals;
    try {
      for (const auto& r : raw) {
        if (r.equality) {
          std::vector<Term> args;
          args.push_back(convert(r.lhs, vars, names));
          args.push_back(convert(r.rhs, vars, names));
          SymbolId eq = symbols_->intern("=", 2, SymbolKind::predicate);
          literals.push_back(Literal{r.positive, Term::compound(eq, std::move(args))});
          continue;
        }
        std::vector<Term> args;
        for (const auto& a : r.lhs.args) args.push_back(convert(a, vars, names));
        SymbolId p = symbols_->intern(r.lhs.name, r.lhs.args.size(), SymbolKind::predicate);
        literals.push_back(Literal{r.positive, Term::compound(p, std::move(args))});
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(lex.source(), line, context + ": " + e.what());
    }
    ClauseId id = set_.next_id();
    set_.add(make_clause(id, std::move(literals), std::move(names), *symbols_),
             ClauseOrigin{name, role, line, lex.source()});
  }

  void read_include(Lexer& lex, std::size_t line) {
    expect(lex, "(", "include");
    Token file = lex.next();
    if (file.kind != Tok::quoted) {
      throw ParseError(lex.source(), file.line, "include: expected a quoted file name");
    }
    const std::string context = "include('" + file.text + "')";
    std::set<std::string> selection;
    bool selective = false;
    if (accept(lex, ",")) {
      expect(lex, "[", context);
      selective = true;
      if (!accept(lex, "]")) {
        do {
          Token n = lex.next();
          selection.insert(n.text);
        } while (accept(lex, ","));
        expect(lex, "]", context);
      }
    }
    expect(lex, ")", context);
    expect(lex, ".", context);

    std::filesystem::path path = options_.include_base.empty()
                                     ? std::filesystem::path(file.text)
                                     : options_.include_base / file.text;
    std::error_code ec;
    auto canonical = std::filesystem::weakly_canonical(path, ec);
    if (ec) canonical = path;
    if (std::find(include_stack.begin(), include_stack.end(), canonical) != include_stack.end()) {
      throw ParseError(lex.source(), line, context + ": include cycle");
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(lex.source(), line, context + ": cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    include_stack.push_back(canonical);
    read(buffer.str(), path.string(), selective ? &selection : nullptr);
    include_stack.pop_back();
  }

  const TptpOptions& options_;
  std::shared_ptr<SymbolTable> symbols_;
  ClauseSet set_;
};

}  // namespace

ClauseSet parse_tptp_cnf(std::string_view text, const TptpOptions& options,
                         const std::string& source) {
  Reader reader(options, std::make_shared<SymbolTable>());
  reader.read(text, source, nullptr);
  return reader.take();
}

ClauseSet read_tptp_file(const std::filesystem::path& path, const TptpOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  Reader reader(options, std::make_shared<SymbolTable>());
  std::error_code ec;
  auto canonical = std::filesystem::weakly_canonical(path, ec);
  reader.include_stack.push_back(ec ? path : canonical);
  reader.read(buffer.str(), path.string(), nullptr);
  return reader.take();
}

void write_tptp(std::ostream& out, const ClauseSet& set) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    const auto& clause = set[i];
    const auto& origin = set.origin(i);
    std::string name = origin.name.empty() ? "c" + std::to_string(clause.id()) : origin.name;
    bool integer = std::all_of(name.begin(), name.end(),
                               [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    out << "cnf(" << (integer ? name : quote_name(name)) << ", " << role_name(origin.role) << ", "
        << format_clause(clause, set.symbols()) << ").\n";
  }
}

std::string print_tptp(const ClauseSet& set) {
  std::ostringstream out;
  write_tptp(out, set);
  return out.str();
}

}  // namespace aprel
