#pragma once

#include "singclass/parse_error.hpp"
#include "singclass/trees/marked_tree.hpp"

#include <cctype>
#include <string>
#include <string_view>

namespace singclass {

namespace detail {

class TreeScanner {
public:
    TreeScanner(std::string_view text, std::size_t offset) : text_(text), offset_(offset) {}

    TreeNode parse_tree() {
        skip_ws();
        if (peek() == '(') {
            ++pos_;
            TreeNode node{parse_int(), {}};
            expect(';');
            node.children.push_back(parse_tree());
            skip_ws();
            if (peek() != ',') fail("internal vertex needs at least two children");
            while (peek() == ',') {
                ++pos_;
                node.children.push_back(parse_tree());
                skip_ws();
            }
            expect(')');
            return node;
        }
        return TreeNode{parse_int(), {}};
    }

    void expect_end() {
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, offset_ + pos_); }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    int parse_int() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a nonnegative integer marking");
        return std::stoi(std::string(text_.substr(start, pos_ - start)));
    }

    std::string_view text_;
    std::size_t offset_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// TREE := LEAF | "(" INT ";" TREE ("," TREE)+ ")" ; LEAF := INT.
/// A top-level bare INT m is the stick with marking m. `offset` shifts the
/// reported error positions when the tree is embedded in a longer string.
inline MarkedTree parse_tree(std::string_view text, std::size_t offset = 0) {
    detail::TreeScanner scanner(text, offset);
    TreeNode raw = scanner.parse_tree();
    scanner.expect_end();
    return MarkedTree(std::move(raw));
}

}  // namespace singclass
