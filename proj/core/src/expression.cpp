#include "arithcomp/expression.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <vector>

#include "arithcomp/errors.hpp"

namespace arithcomp {

namespace {

enum class TokenKind { Name, Int, LParen, RParen, Slash, Star, Caret, Minus, End };

struct Token {
  TokenKind kind;
  std::string_view text;
  std::size_t offset;
  unsigned iterations = 1;  // Name tokens: value of an "_k" suffix
  bool has_suffix = false;
};

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) {
    row[j] = j;
  }
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

std::string candidate_list(std::string_view unknown) {
  std::vector<std::string_view> close;
  std::vector<std::string_view> all;
  for (FunctionId fid : kAllFunctions) {
    const std::string_view name = function_name(fid);
    all.push_back(name);
    if (edit_distance(unknown, name) <= 2 || name.starts_with(unknown) ||
        unknown.starts_with(name)) {
      close.push_back(name);
    }
  }
  const auto& chosen = close.empty() ? all : close;
  std::string out;
  for (std::string_view name : chosen) {
    out += out.empty() ? "" : ", ";
    out += name;
  }
  return out;
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) {
        tokens.push_back({TokenKind::End, {}, pos_});
        return tokens;
      }
      const char c = text_[pos_];
      const std::size_t start = pos_;
      if (std::islower(static_cast<unsigned char>(c))) {
        tokens.push_back(name_token());
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        }
        tokens.push_back({TokenKind::Int, text_.substr(start, pos_ - start), start});
      } else {
        TokenKind kind;
        switch (c) {
          case '(': kind = TokenKind::LParen; break;
          case ')': kind = TokenKind::RParen; break;
          case '/': kind = TokenKind::Slash; break;
          case '*': kind = TokenKind::Star; break;
          case '^': kind = TokenKind::Caret; break;
          case '-': kind = TokenKind::Minus; break;
          default:
            throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
        ++pos_;
        tokens.push_back({kind, text_.substr(start, 1), start});
      }
    }
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  Token name_token() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::islower(static_cast<unsigned char>(text_[pos_])) ||
                                   std::isdigit(static_cast<unsigned char>(text_[pos_])))) {
      ++pos_;
    }
    Token token{TokenKind::Name, text_.substr(start, pos_ - start), start};
    if (pos_ < text_.size() && text_[pos_] == '_') {
      const std::size_t digits = pos_ + 1;
      std::size_t end = digits;
      while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) {
        ++end;
      }
      if (end == digits) {
        throw ParseError("iteration suffix '_' must be followed by digits", pos_);
      }
      const auto [ptr, ec] =
          std::from_chars(text_.data() + digits, text_.data() + end, token.iterations);
      if (ec != std::errc{}) {
        throw ParseError("iteration count out of range", digits);
      }
      token.has_suffix = true;
      pos_ = end;
    }
    return token;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

struct LogFactor {
  bool is_loglog;
  int exponent;
  Composition argument;
  std::size_t offset;
};

struct Product {
  std::vector<std::pair<Composition, std::size_t>> compositions;
  std::vector<LogFactor> logs;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  std::variant<Composition, RatioSpec> parse() {
    Product numerator = product();
    Product denominator;
    bool has_slash = false;
    if (peek().kind == TokenKind::Slash) {
      advance();
      has_slash = true;
      if (peek().kind == TokenKind::LParen) {
        advance();
        denominator = product();
        expect(TokenKind::RParen, "')' closing the denominator");
      } else {
        factor_into(denominator);
      }
    }
    if (peek().kind != TokenKind::End) {
      throw ParseError("unexpected trailing input '" + std::string(peek().text) + "'",
                       peek().offset);
    }
    return assemble(std::move(numerator), std::move(denominator), has_slash);
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }

  void expect(TokenKind kind, std::string_view what) {
    if (peek().kind != kind) {
      throw ParseError("expected " + std::string(what), peek().offset);
    }
    advance();
  }

  Product product() {
    Product result;
    factor_into(result);
    while (peek().kind == TokenKind::Star) {
      advance();
      factor_into(result);
    }
    return result;
  }

  void factor_into(Product& out) {
    const Token& token = peek();
    if (token.kind == TokenKind::Name && (token.text == "log" || token.text == "loglog")) {
      out.logs.push_back(log_factor());
    } else {
      const std::size_t offset = token.offset;
      out.compositions.emplace_back(composition(), offset);
    }
  }

  LogFactor log_factor() {
    const Token& head = advance();
    if (head.has_suffix) {
      throw ParseError("log factors take no iteration suffix", head.offset);
    }
    LogFactor factor{head.text == "loglog", 1, {}, head.offset};
    expect(TokenKind::LParen, "'(' after " + std::string(head.text));
    factor.argument = composition();
    expect(TokenKind::RParen, "')' closing " + std::string(head.text));
    if (peek().kind == TokenKind::Caret) {
      advance();
      bool negative = false;
      if (peek().kind == TokenKind::Minus) {
        advance();
        negative = true;
      }
      const Token& digits = peek();
      if (digits.kind != TokenKind::Int) {
        throw ParseError("expected integer exponent", digits.offset);
      }
      advance();
      int value = 0;
      const auto [ptr, ec] =
          std::from_chars(digits.text.data(), digits.text.data() + digits.text.size(), value);
      if (ec != std::errc{}) {
        throw ParseError("exponent out of range", digits.offset);
      }
      factor.exponent = negative ? -value : value;
    }
    return factor;
  }

  Composition composition() {
    Composition result;
    std::size_t open = 0;
    while (true) {
      const Token& token = peek();
      if (token.kind != TokenKind::Name) {
        throw ParseError("expected a function name or 'n'", token.offset);
      }
      advance();
      // "n(...)" is an explicit identity stage; bare "n" ends the chain.
      if (token.text == "n" && peek().kind != TokenKind::LParen) {
        if (token.has_suffix) {
          throw ParseError("'n' takes no iteration suffix", token.offset);
        }
        for (; open > 0; --open) {
          expect(TokenKind::RParen, "')'");
        }
        return result;
      }
      if (token.text == "log" || token.text == "loglog") {
        throw ParseError("log factors cannot be nested inside a composition", token.offset);
      }
      const auto fid = function_from_name(token.text);
      if (!fid) {
        throw ParseError("unknown function '" + std::string(token.text) +
                             "' (candidates: " + candidate_list(token.text) + ")",
                         token.offset);
      }
      result.stages.push_back(Stage{*fid, token.iterations});
      expect(TokenKind::LParen, "'(' after " + std::string(token.text));
      ++open;
    }
  }

  static std::variant<Composition, RatioSpec> assemble(Product numerator, Product denominator,
                                                       bool has_slash) {
    if (numerator.compositions.size() != 1) {
      const std::size_t offset = numerator.compositions.size() > 1
                                     ? numerator.compositions[1].second
                                     : (numerator.logs.empty() ? 0 : numerator.logs[0].offset);
      throw ParseError("numerator must contain exactly one composition", offset);
    }
    if (denominator.compositions.size() > 1) {
      throw ParseError("denominator may contain at most one composition",
                       denominator.compositions[1].second);
    }
    RatioSpec spec;
    spec.numerator = std::move(numerator.compositions[0].first);
    if (!denominator.compositions.empty()) {
      spec.denominator = std::move(denominator.compositions[0].first);
    }
    if (!has_slash && numerator.logs.empty()) {
      return spec.numerator;
    }

    std::optional<LogArgument> arg;
    auto fold = [&](const LogFactor& factor, int sign) {
      LogArgument this_arg;
      if (factor.argument.stages.empty()) {
        this_arg = LogArgument::N;
      } else if (factor.argument == spec.numerator) {
        this_arg = LogArgument::NumeratorValue;
      } else if (factor.argument == spec.denominator) {
        this_arg = LogArgument::DenominatorValue;
      } else {
        throw ParseError(
            "log argument must be n, the numerator, or the denominator composition",
            factor.offset);
      }
      if (arg && *arg != this_arg) {
        throw ParseError("all log factors must share one argument", factor.offset);
      }
      arg = this_arg;
      (factor.is_loglog ? spec.loglog_exp : spec.log_exp) += sign * factor.exponent;
    };
    for (const auto& factor : numerator.logs) {
      fold(factor, +1);
    }
    for (const auto& factor : denominator.logs) {
      fold(factor, -1);
    }
    if (spec.log_exp == 0 && spec.loglog_exp == 0) {
      arg = LogArgument::N;
    }
    spec.log_arg = arg.value_or(LogArgument::N);
    return spec;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::string log_factor_text(std::string_view name, int exponent, const std::string& arg) {
  std::string out = std::string(name) + "(" + arg + ")";
  const int magnitude = exponent < 0 ? -exponent : exponent;
  if (magnitude != 1) {
    out += "^" + std::to_string(magnitude);
  }
  return out;
}

bool is_constant_one(const Composition& c) {
  return c.stages.size() == 1 && c.stages[0].fid == FunctionId::One &&
         c.stages[0].iterations == 1;
}

}  // namespace

std::variant<Composition, RatioSpec> parse_expression(std::string_view text) {
  return Parser(Lexer(text).run()).parse();
}

Composition parse_composition(std::string_view text) {
  auto parsed = parse_expression(text);
  if (auto* c = std::get_if<Composition>(&parsed)) {
    return std::move(*c);
  }
  throw ParseError("expected a single composition, got a ratio", 0);
}

RatioSpec parse_ratio(std::string_view text) {
  auto parsed = parse_expression(text);
  if (auto* spec = std::get_if<RatioSpec>(&parsed)) {
    return std::move(*spec);
  }
  RatioSpec spec;
  spec.numerator = std::get<Composition>(std::move(parsed));
  return spec;
}

std::string to_string(const Composition& composition) {
  std::string head;
  for (const Stage& stage : composition.stages) {
    head += function_name(stage.fid);
    if (stage.iterations != 1) {
      head += "_" + std::to_string(stage.iterations);
    }
    head += "(";
  }
  return head + "n" + std::string(composition.stages.size(), ')');
}

std::string to_string(const RatioSpec& spec) {
  std::string arg;
  switch (spec.log_arg) {
    case LogArgument::N: arg = "n"; break;
    case LogArgument::NumeratorValue: arg = to_string(spec.numerator); break;
    case LogArgument::DenominatorValue: arg = to_string(spec.denominator); break;
  }
  std::vector<std::string> top{to_string(spec.numerator)};
  std::vector<std::string> bottom;
  if (!is_constant_one(spec.denominator)) {
    bottom.push_back(to_string(spec.denominator));
  }
  if (spec.log_exp != 0) {
    (spec.log_exp > 0 ? top : bottom).push_back(log_factor_text("log", spec.log_exp, arg));
  }
  if (spec.loglog_exp != 0) {
    (spec.loglog_exp > 0 ? top : bottom)
        .push_back(log_factor_text("loglog", spec.loglog_exp, arg));
  }
  auto join = [](const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& part : parts) {
      out += out.empty() ? "" : "*";
      out += part;
    }
    return out;
  };
  if (bottom.empty()) {
    return join(top);
  }
  return join(top) + "/(" + join(bottom) + ")";
}

}  // namespace arithcomp
