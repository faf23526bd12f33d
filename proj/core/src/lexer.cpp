// Copyright 2026 The rolecheck Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lexer.hpp"

namespace rolecheck::detail {

std::string_view token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::kIdent: return "identifier";
    case TokenKind::kNumber: return "number";
    case TokenKind::kLBrace: return "'{'";
    case TokenKind::kRBrace: return "'}'";
    case TokenKind::kComma: return "','";
    case TokenKind::kStar: return "'*'";
    case TokenKind::kEquals: return "'='";
    case TokenKind::kEnd: return "end of input";
  }
  return "token";
}

namespace {

bool is_alpha(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

std::vector<Token> tokenize(std::string_view source) {
  std::vector<Token> tokens;
  int line = 1;
  int column = 1;
  std::size_t i = 0;

  auto advance = [&] {
    if (source[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
    ++i;
  };

  while (i < source.size()) {
    const char c = source[i];
    if (c == '#') {
      while (i < source.size() && source[i] != '\n') advance();
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance();
      continue;
    }
    Token tok;
    tok.loc = SourceLoc{line, column};
    if (is_alpha(c)) {
      tok.kind = TokenKind::kIdent;
      while (i < source.size() &&
             (is_alpha(source[i]) || is_digit(source[i]) || source[i] == '_')) {
        tok.text.push_back(source[i]);
        advance();
      }
    } else if (is_digit(c)) {
      tok.kind = TokenKind::kNumber;
      while (i < source.size() && is_digit(source[i])) {
        tok.text.push_back(source[i]);
        advance();
      }
      if (i < source.size() && (is_alpha(source[i]) || source[i] == '_')) {
        throw Error(ErrorCode::kMalformedIdentifier,
                    "identifiers must start with a letter",
                    tok.loc);
      }
    } else {
      switch (c) {
        case '{': tok.kind = TokenKind::kLBrace; break;
        case '}': tok.kind = TokenKind::kRBrace; break;
        case ',': tok.kind = TokenKind::kComma; break;
        case '*': tok.kind = TokenKind::kStar; break;
        case '=': tok.kind = TokenKind::kEquals; break;
        default:
          throw Error(ErrorCode::kSyntaxError,
                      std::string("unexpected character '") + c + "'",
                      tok.loc);
      }
      tok.text.push_back(c);
      advance();
    }
    tokens.push_back(std::move(tok));
  }
  tokens.push_back(Token{TokenKind::kEnd, "", SourceLoc{line, column}});
  return tokens;
}

}  // namespace rolecheck::detail
