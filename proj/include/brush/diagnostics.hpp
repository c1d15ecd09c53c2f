#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "brush/source_span.hpp"

namespace brush {

enum class Category { Syntax, Runtime, Warning };

std::string_view category_name(Category category);

/// Every diagnostic the engine can emit. The catalog in diagnostics.cpp maps
/// each one to a stable code string, a category and a message template.
enum class DiagCode {
  // syntax
  UnexpectedCharacter,
  UnterminatedString,
  MissingCloseParen,
  MissingCloseBracket,
  MissingCloseBrace,
  MalformedNumber,
  UnexpectedWord,
  MissingValue,
  MissingOpenParen,
  MissingName,
  ReservedWord,
  Unsupported,
  ConstNeedsValue,
  CannotAssign,
  ForNeedsSemicolon,
  ReturnOutsideFunction,
  UnterminatedComment,
  SourceTooLong,
  NestingTooDeep,
  MissingSeparator,
  ElseWithoutIf,
  MissingOpenBrace,
  // runtime
  UnknownName,
  ConstReassign,
  WrongArgCount,
  IndexOutOfRange,
  CannotCompare,
  NotDrawableNumber,
  NotPositive,
  StepBudget,
  CallDepth,
  NotCallable,
  BadOperands,
  UnknownColor,
  WrongArgType,
  UnknownMathMember,
  TooManyShapes,
  ListTooLong,
  IndexNotWhole,
  UnknownProperty,
  ConditionNotBoolean,
  StarRadii,
  BadSpikes,
  AlreadyDeclared,
  BuiltinReassign,
  BadOperand,
  NotAList,
  TextTooLong,
  // warnings
  AnimationReplaced,
};

struct CatalogEntry {
  DiagCode id;
  std::string_view code;
  Category category;
  /// fmt-style template; `{}` placeholders are filled positionally.
  std::string_view message;
  /// Default hint, may be empty. Call sites can supply a more specific one.
  std::string_view hint;
};

std::span<const CatalogEntry> diagnostic_catalog();
const CatalogEntry& catalog_entry(DiagCode id);

struct Diagnostic {
  std::string code;
  Category category = Category::Syntax;
  SourceSpan span;
  std::string message;
  std::optional<std::string> hint;

  bool is_error() const { return category != Category::Warning; }
};

/// Instantiate a catalog template. Arguments longer than 40 characters are
/// shortened so messages stay readable.
Diagnostic make_diagnostic(DiagCode id, SourceSpan span,
                           std::vector<std::string> args = {},
                           std::optional<std::string> hint = std::nullopt);

/// Maximum number of diagnostics reported for one program.
inline constexpr std::size_t kMaxDiagnostics = 20;

/// Words a learner-facing message must never contain.
std::span<const std::string_view> banned_jargon();

enum class DiagnosticStyle { Plain, Pretty, Json };

std::string format_diagnostic(const Diagnostic& d, std::string_view source,
                              DiagnosticStyle style);

/// JSON array of diagnostic objects, one per entry.
std::string diagnostics_to_json(std::span<const Diagnostic> diagnostics);

/// The full catalog as a JSON document for the editor's error pane.
std::string catalog_json();

/// Thrown inside the evaluator and builtins; carries a finished diagnostic.
/// When `argument_index` is set and the span is still empty, the caller
/// points the span at that argument.
class ScriptError : public std::runtime_error {
 public:
  explicit ScriptError(Diagnostic d, std::optional<std::size_t> argument_index = std::nullopt)
      : std::runtime_error(d.message), diagnostic_(std::move(d)), argument_index_(argument_index) {}

  const Diagnostic& diagnostic() const { return diagnostic_; }
  Diagnostic& diagnostic() { return diagnostic_; }
  std::optional<std::size_t> argument_index() const { return argument_index_; }
  bool has_span() const { return has_span_; }
  void set_span(SourceSpan span) {
    diagnostic_.span = span;
    has_span_ = true;
  }

 private:
  Diagnostic diagnostic_;
  std::optional<std::size_t> argument_index_;
  bool has_span_ = false;
};

/// Throws a ScriptError without a span; the evaluator attaches one.
[[noreturn]] void raise(DiagCode id, std::vector<std::string> args = {},
                        std::optional<std::string> hint = std::nullopt,
                        std::optional<std::size_t> argument_index = std::nullopt);

}  // namespace brush
