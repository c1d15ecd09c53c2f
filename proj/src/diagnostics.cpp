#include "brush/diagnostics.hpp"

#include <fmt/args.h>
#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <json.hpp>

namespace brush {

namespace {

using enum DiagCode;
constexpr Category S = Category::Syntax;
constexpr Category R = Category::Runtime;
constexpr Category W = Category::Warning;

constexpr std::array kCatalog = {
    CatalogEntry{UnexpectedCharacter, "E001", S, "I don't understand the character '{}' here.",
                 "Check for a typo, or delete it."},
    CatalogEntry{UnterminatedString, "E002", S, "This text is missing its closing quote {}.",
                 "Text must start and end with the same quote on one line."},
    CatalogEntry{MissingCloseParen, "E003", S, "It looks like a ')' is missing here.",
                 "Every '(' needs a matching ')'."},
    CatalogEntry{MissingCloseBracket, "E004", S, "It looks like a ']' is missing here.",
                 "Every '[' needs a matching ']'."},
    CatalogEntry{MissingCloseBrace, "E005", S, "It looks like a '}}' is missing here.",
                 "Every '{{' needs a matching '}}'."},
    CatalogEntry{MalformedNumber, "E006", S, "'{}' is not a number I can read.",
                 "Numbers look like 42 or 3.5."},
    CatalogEntry{UnexpectedWord, "E007", S, "I didn't expect '{}' here.",
                 "Check this line for a typo or a missing symbol."},
    CatalogEntry{MissingValue, "E008", S, "Something is missing after '{}'.",
                 "Add a number, a name or a function call here."},
    CatalogEntry{MissingOpenParen, "E009", S, "'{}' needs a '(' right after it.", ""},
    CatalogEntry{MissingName, "E010", S, "'{}' needs a name after it.",
                 "Names start with a letter, like myColor."},
    CatalogEntry{ReservedWord, "E011", S, "'{}' is a special word, so you can't use it as a name.",
                 "Try a different name."},
    CatalogEntry{Unsupported, "E012", S, "{} is not part of this drawing language.", ""},
    CatalogEntry{ConstNeedsValue, "E013", S, "'{}' is made with const, so it needs a value right away.",
                 "Write it like this: const size = 10;"},
    CatalogEntry{CannotAssign, "E014", S, "You can only change a variable or a spot in a list.", ""},
    CatalogEntry{ForNeedsSemicolon, "E015", S, "A for loop needs ';' between its three parts.",
                 "Like this: for (let i = 0; i < 10; i++)"},
    CatalogEntry{ReturnOutsideFunction, "E016", S, "You can only use return inside a function.", ""},
    CatalogEntry{UnterminatedComment, "E017", S, "This comment never ends.", "Close it with */"},
    CatalogEntry{SourceTooLong, "E018", S, "Your program is too long to run here.",
                 "Try making a smaller drawing."},
    CatalogEntry{NestingTooDeep, "E019", S, "Too many things are nested inside each other here.",
                 "Try using fewer levels of {{ }} or ( )."},
    CatalogEntry{MissingSeparator, "E020", S,
                 "Put each instruction on its own line, or end it with ';'.", ""},
    CatalogEntry{ElseWithoutIf, "E021", S, "This else has no if before it.", ""},
    CatalogEntry{MissingOpenBrace, "E022", S, "A function needs a '{{' to start its body.",
                 "Like this: function wave() {{ ... }}"},

    CatalogEntry{UnknownName, "E100", R, "I don't know what '{}' is.",
                 "Create it first with let, or check the spelling."},
    CatalogEntry{ConstReassign, "E101", R, "'{}' can't change because it was made with const.",
                 "Use let if the value needs to change."},
    CatalogEntry{WrongArgCount, "E102", R, "{} needs {}{}", ""},
    CatalogEntry{IndexOutOfRange, "E103", R, "There is no spot {} in this list. It has {} items.",
                 "Spots are numbered from 0 up to the length minus 1."},
    CatalogEntry{CannotCompare, "E104", R, "You can't compare {} with {} using '{}'.",
                 "Both sides must be the same kind, like two numbers."},
    CatalogEntry{NotDrawableNumber, "E105", R, "{} must be a number you can draw with, got {}.",
                 "Check for a division by zero or a square root of a negative number."},
    CatalogEntry{NotPositive, "E106", R, "{} must be a positive number, got {}.", "Sizes must be bigger than 0."},
    CatalogEntry{StepBudget, "E107", R, "Your program ran too long. Check your loops.",
                 "Make sure every loop has a way to stop."},
    CatalogEntry{CallDepth, "E108", R, "Your functions called each other too many times.",
                 "A function that calls itself needs a way to stop."},
    CatalogEntry{NotCallable, "E109", R, "This is {}, not something you can call.", ""},
    CatalogEntry{BadOperands, "E110", R, "You can't use '{}' with {} and {}.",
                 "Use numbers with numbers, or join text with text."},
    CatalogEntry{UnknownColor, "E111", R, "I don't know the color '{}'.", ""},
    CatalogEntry{WrongArgType, "E112", R, "{} must be {}, got {}.", ""},
    CatalogEntry{UnknownMathMember, "E113", R, "Math.{} is not available.",
                 "You can use Math.cos, sin, floor, ceil, round, abs, sqrt, min, max, random and PI."},
    CatalogEntry{TooManyShapes, "E114", R, "You drew too many shapes in one picture.", ""},
    CatalogEntry{ListTooLong, "E115", R, "This list is getting too long.", ""},
    CatalogEntry{IndexNotWhole, "E116", R, "Spots in a list must be whole numbers, got {}.", ""},
    CatalogEntry{UnknownProperty, "E117", R, "{} has no part called '{}'.", ""},
    CatalogEntry{ConditionNotBoolean, "E118", R, "A check needs true or false, got {}.",
                 "Use a comparison, like x < 10."},
    CatalogEntry{StarRadii, "E119", R, "innerR must be smaller than outerR, got {} and {}.", ""},
    CatalogEntry{BadSpikes, "E120", R, "spikes must be a whole number from 2 to 100, got {}.", ""},
    CatalogEntry{AlreadyDeclared, "E121", R, "'{}' was already created.",
                 "To change it, leave out the let: {} = ..."},
    CatalogEntry{BuiltinReassign, "E122", R, "'{}' is built in, so you can't change it.",
                 "Pick a different name for your own variable."},
    CatalogEntry{BadOperand, "E123", R, "You can't use '{}' with {}.", ""},
    CatalogEntry{NotAList, "E124", R, "You can only use [ ] on a list, not on {}.", ""},
    CatalogEntry{TextTooLong, "E125", R, "This text is getting too long.",
                 "Text can hold up to a million letters."},

    CatalogEntry{AnimationReplaced, "W001", W,
                 "requestAnimationFrame was called twice in one frame, so only the last call counts.",
                 ""},
};

constexpr std::array<std::string_view, 4> kBannedJargon = {"token", "expression", "undefined",
                                                           "null"};

std::string shorten(std::string s) {
  constexpr std::size_t kMax = 40;
  if (s.size() > kMax) {
    std::size_t cut = kMax - 3;
    while (cut > 0 && (static_cast<unsigned char>(s[cut]) & 0xC0) == 0x80) --cut;
    s.resize(cut);
    s += "...";
  }
  return s;
}

std::string line_text(std::string_view source, int line) {
  int current = 1;
  std::size_t start = 0;
  for (std::size_t i = 0; i < source.size() && current < line; ++i) {
    if (source[i] == '\n') {
      ++current;
      start = i + 1;
    }
  }
  if (current != line) return {};
  auto stop = source.find('\n', start);
  if (stop == std::string_view::npos) stop = source.size();
  std::string text(source.substr(start, stop - start));
  if (!text.empty() && text.back() == '\r') text.pop_back();
  return text;
}

nlohmann::ordered_json to_json(const Diagnostic& d) {
  nlohmann::ordered_json j;
  j["code"] = d.code;
  j["category"] = category_name(d.category);
  j["line"] = d.span.start_line;
  j["col"] = d.span.start_col;
  j["endLine"] = d.span.end_line;
  j["endCol"] = d.span.end_col;
  j["message"] = d.message;
  j["hint"] = d.hint ? nlohmann::ordered_json(*d.hint) : nlohmann::ordered_json(nullptr);
  return j;
}

}  // namespace

std::string_view category_name(Category category) {
  switch (category) {
    case Category::Syntax: return "SYNTAX";
    case Category::Runtime: return "RUNTIME";
    case Category::Warning: return "WARNING";
  }
  return "RUNTIME";
}

std::span<const CatalogEntry> diagnostic_catalog() { return kCatalog; }

const CatalogEntry& catalog_entry(DiagCode id) {
  for (const auto& entry : kCatalog)
    if (entry.id == id) return entry;
  throw std::logic_error("diagnostic code missing from catalog");
}

std::span<const std::string_view> banned_jargon() { return kBannedJargon; }

Diagnostic make_diagnostic(DiagCode id, SourceSpan span, std::vector<std::string> args,
                           std::optional<std::string> hint) {
  const auto& entry = catalog_entry(id);
  fmt::dynamic_format_arg_store<fmt::format_context> store;
  for (auto& a : args) store.push_back(shorten(std::move(a)));
  Diagnostic d;
  d.code = std::string(entry.code);
  d.category = entry.category;
  d.span = span;
  d.message = fmt::vformat(entry.message, store);
  if (hint) {
    d.hint = std::move(hint);
  } else if (!entry.hint.empty()) {
    d.hint = fmt::vformat(entry.hint, store);
  }
  return d;
}

void raise(DiagCode id, std::vector<std::string> args, std::optional<std::string> hint,
           std::optional<std::size_t> argument_index) {
  throw ScriptError(make_diagnostic(id, SourceSpan{}, std::move(args), std::move(hint)),
                    argument_index);
}

std::string format_diagnostic(const Diagnostic& d, std::string_view source,
                              DiagnosticStyle style) {
  if (style == DiagnosticStyle::Json) return to_json(d).dump(-1, ' ', false, nlohmann::ordered_json::error_handler_t::replace);

  std::string out =
      fmt::format("{}:{} [{}] {}", d.span.start_line, d.span.start_col, d.code, d.message);
  if (style == DiagnosticStyle::Plain) return out;

  const std::string text = line_text(source, d.span.start_line);
  const std::string gutter = fmt::format("{:>4} | ", d.span.start_line);
  out += '\n';
  out += gutter;
  out += text;
  out += '\n';
  int width = 1;
  if (d.span.end_line == d.span.start_line && d.span.end_col > d.span.start_col)
    width = d.span.end_col - d.span.start_col;
  out += std::string(gutter.size() - 2, ' ');
  out += "| ";
  out += std::string(static_cast<std::size_t>(std::max(0, d.span.start_col - 1)), ' ');
  out += std::string(static_cast<std::size_t>(width), '^');
  if (d.hint) {
    out += "\n     hint: ";
    out += *d.hint;
  }
  return out;
}

std::string diagnostics_to_json(std::span<const Diagnostic> diagnostics) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& d : diagnostics) arr.push_back(to_json(d));
  return arr.dump(-1, ' ', false, nlohmann::ordered_json::error_handler_t::replace);
}

std::string catalog_json() {
  nlohmann::ordered_json doc;
  doc["version"] = 1;
  auto& entries = doc["codes"] = nlohmann::ordered_json::array();
  for (const auto& e : kCatalog) {
    nlohmann::ordered_json j;
    j["code"] = e.code;
    j["category"] = category_name(e.category);
    j["template"] = e.message;
    j["hint"] = e.hint;
    entries.push_back(std::move(j));
  }
  return doc.dump(2);
}

}  // namespace brush
