#include "saf/io.hpp"

#include <fstream>
#include <sstream>

namespace saf::io {

namespace {

bool is_name_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

class Scanner {
public:
    Scanner(std::string_view text) : text_(text) {}

    // Skips whitespace and comments.
    void skip() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else {
                break;
            }
        }
    }

    bool done() {
        skip();
        return pos_ >= text_.size();
    }

    std::string name(const char* what) {
        skip();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && is_name_char(text_[pos_])) advance();
        if (start == pos_) fail(std::string("expected ") + what);
        return std::string(text_.substr(start, pos_ - start));
    }

    void expect(char c) {
        skip();
        if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
        advance();
    }

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(line_, column_, message); }

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

}  // namespace

SafDocument parse(std::string_view text, std::string source) {
    SafDocument doc{std::move(source), {}};
    Scanner in(text);
    while (!in.done()) {
        Fact fact;
        fact.line = in.line();
        fact.column = in.column();
        const std::string functor = in.name("fact");
        if (functor == "arg") {
            fact.kind = FactKind::arg;
        } else if (functor == "att") {
            fact.kind = FactKind::att;
        } else if (functor == "sub") {
            fact.kind = FactKind::sub;
        } else {
            throw UnknownFactType(fact.line, fact.column, functor);
        }
        in.expect('(');
        fact.first = in.name("argument name");
        if (fact.kind != FactKind::arg) {
            in.expect(',');
            fact.second = in.name("argument name");
        }
        in.expect(')');
        in.expect('.');
        doc.facts.push_back(std::move(fact));
    }
    return doc;
}

SafDocument parse_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path.string());
}

Saf to_saf(const SafDocument& doc) {
    std::vector<std::string> arguments;
    std::vector<NamePair> attacks;
    std::vector<NamePair> subargs;
    for (const auto& f : doc.facts) {
        switch (f.kind) {
            case FactKind::arg: arguments.push_back(f.first); break;
            case FactKind::att: attacks.emplace_back(f.first, f.second); break;
            case FactKind::sub: subargs.emplace_back(f.first, f.second); break;
        }
    }
    return Saf::validate(std::move(arguments), attacks, subargs);
}

Saf load_saf(const std::filesystem::path& path) { return to_saf(parse_file(path)); }

namespace {

void write_pairs(std::ostream& os, const char* functor, const ArgumentTable& table, const std::vector<Edge>& edges) {
    for (auto [a, b] : edges) os << functor << '(' << table.name(a) << ',' << table.name(b) << ").\n";
}

}  // namespace

std::string serialize(const Saf& saf) {
    std::ostringstream os;
    for (const auto& n : saf.names()) os << "arg(" << n << ").\n";
    write_pairs(os, "att", saf.table(), saf.attacks());
    write_pairs(os, "sub", saf.table(), saf.subargs());
    return os.str();
}

std::string serialize(const DungAF& af) {
    std::ostringstream os;
    for (const auto& n : af.names()) os << "arg(" << n << ").\n";
    write_pairs(os, "att", af.table(), af.attacks());
    return os.str();
}

}  // namespace saf::io
