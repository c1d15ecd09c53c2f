#include "brush/ast.hpp"

#include <algorithm>
#include <charconv>

namespace brush::ast {

namespace {

std::string number_text(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string quoted(const std::string& text, char quote) {
  std::string out(1, quote);
  for (char c : text) {
    switch (c) {
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      case '\0': out += "\\0"; break;
      case '\\': out += "\\\\"; break;
      default:
        if (c == quote) out += '\\';
        out += c;
    }
  }
  out += quote;
  return out;
}

class Printer {
 public:
  std::string run(const Node& n) {
    if (n.is_expression()) return expr(n);
    stmt(n, 0);
    return std::move(out_);
  }

 private:
  static bool needs_parens(const Node& n) {
    return n.kind == NodeKind::Binary || n.kind == NodeKind::Logical ||
           n.kind == NodeKind::Unary;
  }

  std::string operand(const Node& n) { return needs_parens(n) ? "(" + expr(n) + ")" : expr(n); }

  std::string expr(const Node& n) {
    switch (n.kind) {
      case NodeKind::NumberLit: return number_text(std::get<double>(*n.literal));
      case NodeKind::StringLit: return quoted(std::get<std::string>(*n.literal), n.quote);
      case NodeKind::BoolLit: return std::get<bool>(*n.literal) ? "true" : "false";
      case NodeKind::Identifier: return n.name;
      case NodeKind::ArrayLit: {
        std::string s = "[";
        for (std::size_t i = 0; i < n.children.size(); ++i) {
          if (i) s += ", ";
          s += expr(*n.children[i]);
        }
        return s + "]";
      }
      case NodeKind::Index: return operand(n.child(0)) + "[" + expr(n.child(1)) + "]";
      case NodeKind::Member: return operand(n.child(0)) + "." + n.name;
      case NodeKind::Call: {
        std::string s = operand(n.child(0)) + "(";
        for (std::size_t i = 1; i < n.children.size(); ++i) {
          if (i > 1) s += ", ";
          s += expr(*n.children[i]);
        }
        return s + ")";
      }
      case NodeKind::Unary: return n.op + operand(n.child(0));
      case NodeKind::Binary:
      case NodeKind::Logical:
        return operand(n.child(0)) + " " + n.op + " " + operand(n.child(1));
      default: return {};
    }
  }

  void line(int indent, const std::string& text) {
    out_.append(static_cast<std::size_t>(indent) * 4, ' ');
    out_ += text;
    out_ += '\n';
  }

  // Statement text without trailing terminator, used for for-headers.
  std::string simple(const Node& n) {
    switch (n.kind) {
      case NodeKind::VarDecl: {
        std::string s = (n.is_const ? "const " : "let ") + n.name;
        if (!n.children.empty()) s += " = " + expr(n.child(0));
        return s;
      }
      case NodeKind::Assign: return expr(n.child(0)) + " " + n.op + " " + expr(n.child(1));
      case NodeKind::Update: return expr(n.child(0)) + n.op;
      case NodeKind::ExprStmt: return expr(n.child(0));
      case NodeKind::Return: return n.children.empty() ? "return" : "return " + expr(n.child(0));
      case NodeKind::Empty: return {};
      default: return expr(n);
    }
  }

  void body(const Node& n, int indent) {
    // Bodies are always printed as blocks; a braceless body re-parses as a
    // block holding one statement, so keep the original shape instead.
    if (n.kind == NodeKind::Block) {
      out_ += "{\n";
      for (const auto& c : n.children) stmt(*c, indent + 1);
      out_.append(static_cast<std::size_t>(indent) * 4, ' ');
      out_ += "}";
    } else {
      out_ += "\n";
      stmt(n, indent + 1);
      out_.append(static_cast<std::size_t>(indent) * 4, ' ');
    }
  }

  void stmt(const Node& n, int indent) {
    switch (n.kind) {
      case NodeKind::Program:
        for (const auto& c : n.children) stmt(*c, indent);
        return;
      case NodeKind::Block:
        out_.append(static_cast<std::size_t>(indent) * 4, ' ');
        body(n, indent);
        out_ += '\n';
        return;
      case NodeKind::For:
        out_.append(static_cast<std::size_t>(indent) * 4, ' ');
        out_ += "for (" + simple(n.child(0)) + "; " + simple(n.child(1)) + "; " +
                simple(n.child(2)) + ") ";
        body(n.child(3), indent);
        out_ += '\n';
        return;
      case NodeKind::While:
        out_.append(static_cast<std::size_t>(indent) * 4, ' ');
        out_ += "while (" + expr(n.child(0)) + ") ";
        body(n.child(1), indent);
        out_ += '\n';
        return;
      case NodeKind::If: {
        out_.append(static_cast<std::size_t>(indent) * 4, ' ');
        const Node* cur = &n;
        while (true) {
          out_ += "if (" + expr(cur->child(0)) + ") ";
          body(cur->child(1), indent);
          if (cur->children.size() < 3) break;
          const Node& alt = cur->child(2);
          if (alt.kind == NodeKind::If) {
            out_ += " else ";
            cur = &alt;
            continue;
          }
          out_ += " else ";
          body(alt, indent);
          break;
        }
        out_ += '\n';
        return;
      }
      case NodeKind::FunctionDecl: {
        std::string head = "function " + n.name + "(";
        for (std::size_t i = 0; i < n.param_count(); ++i) {
          if (i) head += ", ";
          head += n.child(i).name;
        }
        out_.append(static_cast<std::size_t>(indent) * 4, ' ');
        out_ += head + ") ";
        body(n.body(), indent);
        out_ += '\n';
        return;
      }
      case NodeKind::Empty: line(indent, ";"); return;
      default: line(indent, simple(n) + ";"); return;
    }
  }

  std::string out_;
};

}  // namespace

std::string_view kind_name(NodeKind kind) {
  switch (kind) {
    case NodeKind::Program: return "Program";
    case NodeKind::Block: return "Block";
    case NodeKind::VarDecl: return "VarDecl";
    case NodeKind::Assign: return "Assign";
    case NodeKind::Update: return "Update";
    case NodeKind::ExprStmt: return "ExprStmt";
    case NodeKind::For: return "For";
    case NodeKind::While: return "While";
    case NodeKind::If: return "If";
    case NodeKind::FunctionDecl: return "FunctionDecl";
    case NodeKind::Return: return "Return";
    case NodeKind::Empty: return "Empty";
    case NodeKind::NumberLit: return "NumberLit";
    case NodeKind::StringLit: return "StringLit";
    case NodeKind::BoolLit: return "BoolLit";
    case NodeKind::ArrayLit: return "ArrayLit";
    case NodeKind::Identifier: return "Identifier";
    case NodeKind::Index: return "Index";
    case NodeKind::Member: return "Member";
    case NodeKind::Call: return "Call";
    case NodeKind::Unary: return "Unary";
    case NodeKind::Binary: return "Binary";
    case NodeKind::Logical: return "Logical";
  }
  return "?";
}

bool structurally_equal(const Node& a, const Node& b) {
  if (a.kind != b.kind || a.name != b.name || a.op != b.op || a.is_const != b.is_const ||
      a.literal != b.literal || a.children.size() != b.children.size())
    return false;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (!structurally_equal(*a.children[i], *b.children[i])) return false;
  return true;
}

std::string to_source(const Node& node) { return Printer().run(node); }

std::size_t depth(const Node& node) {
  std::size_t deepest = 0;
  for (const auto& c : node.children) deepest = std::max(deepest, depth(*c));
  return deepest + 1;
}

}  // namespace brush::ast
