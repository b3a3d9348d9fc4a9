#include "hk/format.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hk {

namespace {

struct Token {
    std::string text;
    int column;
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        if (line[i] == '#') break;
        size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        out.push_back({std::string(line.substr(start, i - start)), static_cast<int>(start) + 1});
    }
    return out;
}

class Parser {
public:
    Parser(std::string_view text, std::string path) : text_(text), path_(std::move(path)) {}

    StructureFile run() {
        size_t pos = 0;
        int lineno = 0;
        while (pos <= text_.size()) {
            size_t eol = text_.find('\n', pos);
            std::string_view line =
                text_.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
            ++lineno;
            handle_line(tokenize(line), lineno);
            last_line_ = lineno;
            if (eol == std::string_view::npos) break;
            pos = eol + 1;
        }
        finish();
        StructureFile out;
        out.path = path_;
        out.table = std::make_shared<HyperringTable>(std::move(table_));
        out.endos = std::move(endos_);
        return out;
    }

private:
    [[noreturn]] void fail(int line, int col, const std::string& msg) {
        std::ostringstream os;
        if (!path_.empty()) os << path_ << ":";
        os << line << ":" << col << ": " << msg;
        throw Error(ErrorKind::Parse, os.str());
    }

    Elem element(const Token& tok, int line) {
        auto idx = table_.index_of(tok.text);
        if (!idx) fail(line, tok.column, "unknown element '" + tok.text + "'");
        return *idx;
    }

    void require_header(int line, int col) {
        if (table_.m == 0 || table_.n == 0) fail(line, col, "m and n must be declared first");
        if (table_.labels.empty()) fail(line, col, "elements must be declared first");
    }

    void handle_line(const std::vector<Token>& toks, int line) {
        if (toks.empty()) return;
        const std::string& head = toks[0].text;
        if (head == "hyperring") {
            if (toks.size() != 2) fail(line, toks[0].column, "expected: hyperring NAME");
            table_.name = toks[1].text;
        } else if (head == "m" || head == "n") {
            if (toks.size() != 2) fail(line, toks[0].column, "expected: " + head + " INT");
            if (!add_rows_.empty() || !mul_rows_.empty())
                fail(line, toks[0].column, "arity declared after table rows");
            int v = 0;
            try {
                v = std::stoi(toks[1].text);
            } catch (...) {
                fail(line, toks[1].column, "not an integer: '" + toks[1].text + "'");
            }
            if (v < 2) fail(line, toks[1].column, head + " must be at least 2");
            (head == "m" ? table_.m : table_.n) = v;
        } else if (head == "elements") {
            if (!table_.labels.empty()) fail(line, toks[0].column, "elements declared twice");
            if (toks.size() < 2) fail(line, toks[0].column, "expected at least one element label");
            for (size_t i = 1; i < toks.size(); ++i) {
                const std::string& lab = toks[i].text;
                if (lab == "default" || lab.find("->") != std::string::npos)
                    fail(line, toks[i].column, "reserved element label '" + lab + "'");
                if (table_.index_of(lab)) fail(line, toks[i].column, "duplicate element '" + lab + "'");
                table_.labels.push_back(lab);
            }
        } else if (head == "zero") {
            if (toks.size() != 2) fail(line, toks[0].column, "expected: zero L");
            require_header(line, toks[0].column);
            table_.zero = element(toks[1], line);
            zero_seen_ = true;
        } else if (head == "one") {
            if (toks.size() != 2) fail(line, toks[0].column, "expected: one L");
            require_header(line, toks[0].column);
            table_.one = element(toks[1], line);
        } else if (head == "commutative") {
            if (toks.size() != 2 || (toks[1].text != "add" && toks[1].text != "mul"))
                fail(line, toks[0].column, "expected: commutative add|mul");
            if (toks[1].text == "add") {
                if (!add_rows_.empty()) fail(line, toks[0].column, "commutative add after add rows");
                table_.commutative_add = true;
            } else {
                if (!mul_rows_.empty() || mul_default_)
                    fail(line, toks[0].column, "commutative mul after mul rows");
                table_.commutative_mul = true;
            }
        } else if (head == "add") {
            require_header(line, toks[0].column);
            size_t arrow = find_arrow(toks, line);
            if (arrow != static_cast<size_t>(table_.m) + 1)
                fail(line, toks[0].column,
                     "expected " + std::to_string(table_.m) + " arguments before ->");
            if (arrow + 1 >= toks.size())
                fail(line, toks[0].column, "hyperaddition image must be non-empty");
            std::vector<Elem> key;
            for (int i = 1; i <= table_.m; ++i) key.push_back(element(toks[i], line));
            if (table_.commutative_add) std::sort(key.begin(), key.end());
            ElemSet img(static_cast<int>(table_.labels.size()));
            for (size_t i = arrow + 1; i < toks.size(); ++i) img.insert(element(toks[i], line));
            auto [it, fresh] = add_rows_.emplace(key, img);
            if (!fresh)
                fail(line, toks[1].column, "duplicate tuple " + tuple_text(key));
        } else if (head == "mul") {
            require_header(line, toks[0].column);
            if (toks.size() >= 2 && toks[1].text == "default") {
                if (toks.size() != 4 || toks[2].text != "->")
                    fail(line, toks[0].column, "expected: mul default -> b");
                if (mul_default_) fail(line, toks[0].column, "duplicate mul default");
                mul_default_ = element(toks[3], line);
                return;
            }
            size_t arrow = find_arrow(toks, line);
            if (arrow != static_cast<size_t>(table_.n) + 1)
                fail(line, toks[0].column,
                     "expected " + std::to_string(table_.n) + " arguments before ->");
            if (arrow + 2 != toks.size())
                fail(line, toks[0].column, "multiplication image must be a single element");
            std::vector<Elem> key;
            for (int i = 1; i <= table_.n; ++i) key.push_back(element(toks[i], line));
            if (table_.commutative_mul) std::sort(key.begin(), key.end());
            Elem img = element(toks[toks.size() - 1], line);
            auto [it, fresh] = mul_rows_.emplace(key, img);
            if (!fresh)
                fail(line, toks[1].column, "duplicate tuple " + tuple_text(key));
        } else if (head == "endo") {
            require_header(line, toks[0].column);
            if (toks.size() < 3) fail(line, toks[0].column, "expected: endo NAME: a->b ...");
            std::string ename = toks[1].text;
            if (!ename.empty() && ename.back() == ':') ename.pop_back();
            if (ename.empty()) fail(line, toks[1].column, "endomorphism needs a name");
            const int N = static_cast<int>(table_.labels.size());
            std::vector<Elem> map(N, -1);
            for (size_t i = 2; i < toks.size(); ++i) {
                const std::string& t = toks[i].text;
                size_t at = t.find("->");
                if (at == std::string::npos)
                    fail(line, toks[i].column, "expected a->b, got '" + t + "'");
                auto from = table_.index_of(t.substr(0, at));
                auto to = table_.index_of(t.substr(at + 2));
                if (!from) fail(line, toks[i].column, "unknown element '" + t.substr(0, at) + "'");
                if (!to) fail(line, toks[i].column, "unknown element '" + t.substr(at + 2) + "'");
                if (map[*from] >= 0)
                    fail(line, toks[i].column, "element mapped twice: '" + t.substr(0, at) + "'");
                map[*from] = *to;
            }
            for (int i = 0; i < N; ++i)
                if (map[i] < 0)
                    fail(line, toks[0].column,
                         "endo " + ename + " is not total: missing image of '" + table_.labels[i] + "'");
            endos_.push_back({ename, std::move(map), line});
        } else {
            fail(line, toks[0].column, "unknown directive '" + head + "'");
        }
    }

    size_t find_arrow(const std::vector<Token>& toks, int line) {
        for (size_t i = 1; i < toks.size(); ++i)
            if (toks[i].text == "->") return i;
        fail(line, toks[0].column, "missing ->");
    }

    std::string tuple_text(const std::vector<Elem>& key) const {
        std::string s = "(";
        for (size_t i = 0; i < key.size(); ++i) {
            if (i) s += ",";
            s += table_.labels[key[i]];
        }
        return s + ")";
    }

    void finish() {
        if (table_.name.empty()) fail(1, 1, "missing 'hyperring NAME'");
        if (table_.m == 0 || table_.n == 0) fail(1, 1, "missing 'm' or 'n' declaration");
        if (table_.labels.empty()) fail(1, 1, "missing 'elements' declaration");
        if (!zero_seen_) fail(1, 1, "missing 'zero' declaration");
        const int N = static_cast<int>(table_.labels.size());

        size_t add_total = 1;
        for (int i = 0; i < table_.m; ++i) add_total *= N;
        table_.add_table.assign(add_total, ElemSet(N));
        std::vector<Elem> t(table_.m, 0);
        do {
            std::vector<Elem> key = t;
            if (table_.commutative_add) std::sort(key.begin(), key.end());
            auto it = add_rows_.find(key);
            if (it == add_rows_.end())
                fail(last_line_, 1, "missing tuple " + tuple_text(key) + " in add table");
            table_.add_table[table_.rank(t)] = it->second;
        } while (next_tuple(t, N));

        size_t mul_total = 1;
        for (int i = 0; i < table_.n; ++i) mul_total *= N;
        table_.mul_table.assign(mul_total, 0);
        t.assign(table_.n, 0);
        do {
            std::vector<Elem> key = t;
            if (table_.commutative_mul) std::sort(key.begin(), key.end());
            auto it = mul_rows_.find(key);
            if (it == mul_rows_.end()) {
                if (!mul_default_)
                    fail(last_line_, 1, "missing tuple " + tuple_text(key) + " in mul table");
                table_.mul_table[table_.rank(t)] = *mul_default_;
            } else {
                table_.mul_table[table_.rank(t)] = it->second;
            }
        } while (next_tuple(t, N));

        table_.validate();
    }

    std::string_view text_;
    std::string path_;
    int last_line_ = 1;
    HyperringTable table_ = [] {
        HyperringTable t;
        t.m = 0;  // not yet declared
        t.n = 0;
        return t;
    }();
    bool zero_seen_ = false;
    std::map<std::vector<Elem>, ElemSet> add_rows_;
    std::map<std::vector<Elem>, Elem> mul_rows_;
    std::optional<Elem> mul_default_;
    std::vector<ParsedEndo> endos_;
};

}  // namespace

StructureFile parse_structure(std::string_view text, std::string path) {
    return Parser(text, std::move(path)).run();
}

std::string serialize(const HyperringTable& table, const std::vector<ParsedEndo>& endos) {
    std::ostringstream os;
    os << "hyperring " << table.name << "\n";
    os << "m " << table.m << "\n";
    os << "n " << table.n << "\n";
    os << "elements";
    for (const auto& l : table.labels) os << " " << l;
    os << "\n";
    os << "zero " << table.labels[table.zero] << "\n";
    if (table.one) os << "one " << table.labels[*table.one] << "\n";
    if (table.commutative_add) os << "commutative add\n";
    if (table.commutative_mul) os << "commutative mul\n";

    const int N = table.size();
    std::vector<Elem> t(table.m, 0);
    do {
        if (table.commutative_add && !std::is_sorted(t.begin(), t.end())) continue;
        os << "add";
        for (Elem e : t) os << " " << table.labels[e];
        os << " ->";
        table.add(t).for_each([&](Elem e) { os << " " << table.labels[e]; });
        os << "\n";
    } while (next_tuple(t, N));

    t.assign(table.n, 0);
    do {
        if (table.commutative_mul && !std::is_sorted(t.begin(), t.end())) continue;
        os << "mul";
        for (Elem e : t) os << " " << table.labels[e];
        os << " -> " << table.labels[table.mul(t)] << "\n";
    } while (next_tuple(t, N));

    for (const auto& endo : endos) {
        os << "endo " << endo.name << ":";
        for (int i = 0; i < N; ++i)
            os << " " << table.labels[i] << "->" << table.labels[endo.map[i]];
        os << "\n";
    }
    return os.str();
}

ElemSet parse_element_list(const HyperringTable& table, std::string_view text) {
    // strip whitespace, then one surrounding {...} layer if present
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.size() >= 2 && text.front() == '{' && text.back() == '}')
        text = trim(text.substr(1, text.size() - 2));

    ElemSet out(table.size());
    if (text.empty()) return out;
    int depth = 0;
    size_t start = 0;
    auto take = [&](std::string_view piece) {
        piece = trim(piece);
        if (piece.empty()) throw Error(ErrorKind::Parse, "empty element in list");
        auto idx = table.index_of(std::string(piece));
        if (!idx)
            throw Error(ErrorKind::Parse,
                        "unknown element '" + std::string(piece) + "' in " + table.name);
        out.insert(*idx);
    };
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '(') ++depth;
        else if (c == ')') --depth;
        else if (c == ',' && depth == 0) {
            take(text.substr(start, i - start));
            start = i + 1;
        }
    }
    take(text.substr(start));
    return out;
}

std::vector<Elem> parse_map_literal(const HyperringTable& table, std::string_view text) {
    std::vector<Elem> map(table.size(), -1);
    std::istringstream is{std::string(text)};
    std::string tok;
    while (is >> tok) {
        size_t at = tok.find("->");
        if (at == std::string::npos)
            throw Error(ErrorKind::Parse, "expected a->b in map literal, got '" + tok + "'");
        auto from = table.index_of(tok.substr(0, at));
        auto to = table.index_of(tok.substr(at + 2));
        if (!from || !to) throw Error(ErrorKind::Parse, "unknown element in map literal '" + tok + "'");
        if (map[*from] >= 0) throw Error(ErrorKind::Parse, "element mapped twice in map literal");
        map[*from] = *to;
    }
    for (int i = 0; i < table.size(); ++i)
        if (map[i] < 0)
            throw Error(ErrorKind::Parse, "map literal is not total: missing '" + table.labels[i] + "'");
    return map;
}

}  // namespace hk
