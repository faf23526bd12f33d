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

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rolecheck/error.hpp"

namespace rolecheck::detail {

enum class TokenKind { kIdent, kNumber, kLBrace, kRBrace, kComma, kStar, kEquals, kEnd };

struct Token {
  TokenKind kind = TokenKind::kEnd;
  std::string text;
  SourceLoc loc;
};

std::string_view token_kind_name(TokenKind kind);

// `#` starts a comment that runs to end of line. Newlines are plain
// whitespace. Identifiers are returned as written; keywords are recognised
// by the parser.
std::vector<Token> tokenize(std::string_view source);

}  // namespace rolecheck::detail
