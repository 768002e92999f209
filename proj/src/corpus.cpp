#include "floorcheck/corpus.hpp"

#include <fstream>
#include <sstream>

#include "floorcheck/parser.hpp"
#include "floorcheck/printer.hpp"

namespace floorcheck {

namespace {

Substitution parse_substitution(const std::string& text, const std::string& where) {
    Substitution s;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw corpus_error(where + ": substitution entry '" + item + "' has no '='");
        auto trim = [](std::string v) {
            size_t b = v.find_first_not_of(" \t");
            size_t e = v.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : v.substr(b, e - b + 1);
        };
        std::string var = trim(item.substr(0, eq));
        std::string image = trim(item.substr(eq + 1));
        if (var.empty()) throw corpus_error(where + ": empty substitution variable");
        s.map.emplace_back(var, parse_expression(image));
    }
    if (s.map.empty()) throw corpus_error(where + ": empty substitution");
    return s;
}

std::string serialize_substitution(const Substitution& s) {
    std::string out;
    for (size_t i = 0; i < s.map.size(); ++i) {
        if (i) out += ", ";
        out += s.map[i].first + "=" + print_expr(s.map[i].second);
    }
    return out;
}

struct RawRecord {
    std::vector<std::pair<std::string, std::string>> fields;
    int line = 0;

    const std::string* get(const std::string& key) const {
        for (const auto& [k, v] : fields)
            if (k == key) return &v;
        return nullptr;
    }
};

bool valid_image(const Expr& e) {
    if (e.kind == NodeKind::Var) return true; // x or an auxiliary parameter
    if ((e.kind == NodeKind::Floor || e.kind == NodeKind::Frac) &&
        e.args[0].kind == NodeKind::Var && e.args[0].var == "x")
        return true;
    return false;
}

} // namespace

Corpus parse_corpus(const std::string& text) {
    std::vector<RawRecord> raw;
    {
        std::istringstream in(text);
        std::string line;
        int lineno = 0;
        RawRecord cur;
        bool open = false;
        auto flush = [&] {
            if (open && !cur.fields.empty()) raw.push_back(cur);
            cur = RawRecord{};
            open = false;
        };
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            size_t first = line.find_first_not_of(" \t");
            if (first == std::string::npos) {
                flush();
                continue;
            }
            if (line[first] == '#') continue;
            auto colon = line.find(':', first);
            if (colon == std::string::npos)
                throw corpus_error("line " + std::to_string(lineno) + ": expected 'key: value'");
            std::string key = line.substr(first, colon - first);
            std::string value = line.substr(colon + 1);
            size_t vb = value.find_first_not_of(" \t");
            value = vb == std::string::npos ? std::string() : value.substr(vb);
            if (!open) {
                cur.line = lineno;
                open = true;
            }
            cur.fields.emplace_back(key, value);
        }
        flush();
    }

    Corpus c;
    for (const auto& r : raw) {
        const std::string* id = r.get("id");
        if (!id) throw corpus_error("record at line " + std::to_string(r.line) + " has no id");
        std::string where = "record " + *id + " (line " + std::to_string(r.line) + ")";
        try {
            if (r.get("base") || r.get("subst")) {
                TheoremRecord t;
                t.id = *id;
                const std::string* st = r.get("statement");
                if (!st) throw corpus_error(where + ": missing statement");
                t.as_printed = parse_statement(*st);
                if (const std::string* co = r.get("corrected")) t.corrected = parse_statement(*co);
                const std::string* base = r.get("base");
                if (!base) throw corpus_error(where + ": missing base id");
                t.base_id = *base;
                const std::string* subst = r.get("subst");
                if (!subst) throw corpus_error(where + ": missing substitution");
                t.subst = parse_substitution(*subst, where);
                if (const std::string* sp = r.get("subst_printed"))
                    t.subst_printed = parse_substitution(*sp, where);
                const std::string* mode = r.get("mode");
                if (!mode) throw corpus_error(where + ": missing mode");
                if (*mode == "verbatim")
                    t.mode = DerivationMode::Verbatim;
                else if (*mode == "simplified")
                    t.mode = DerivationMode::Simplified;
                else
                    throw corpus_error(where + ": mode must be 'verbatim' or 'simplified'");
                if (const std::string* note = r.get("note")) t.note = *note;
                if (c.find_theorem(t.id)) throw corpus_error("duplicate id " + t.id);
                c.theorems.push_back(std::move(t));
            } else {
                BaseRecord b;
                b.id = *id;
                if (const std::string* st = r.get("statement")) b.statement = parse_statement(*st);
                if (const std::string* g = r.get("garbled")) b.garbled = (*g == "true");
                if (const std::string* note = r.get("note")) b.note = *note;
                if (c.find_base(b.id)) throw corpus_error("duplicate id " + b.id);
                c.bases.push_back(std::move(b));
            }
        } catch (const ParseError& pe) {
            throw corpus_error(where + ": " + pe.what());
        }
    }

    auto diags = validate_corpus(c);
    if (!diags.empty()) {
        std::string msg = "corpus validation failed:";
        for (const auto& d : diags) msg += "\n  " + d;
        throw corpus_error(msg);
    }
    return c;
}

Corpus load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw corpus_error("cannot open corpus file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_corpus(buf.str());
}

std::string serialize_corpus(const Corpus& c) {
    std::ostringstream os;
    for (const auto& b : c.bases) {
        os << "id: " << b.id << "\n";
        if (b.statement) os << "statement: " << print_statement(*b.statement) << "\n";
        if (b.garbled) os << "garbled: true\n";
        if (!b.note.empty()) os << "note: " << b.note << "\n";
        os << "\n";
    }
    for (const auto& t : c.theorems) {
        os << "id: " << t.id << "\n";
        os << "statement: " << print_statement(t.as_printed) << "\n";
        if (t.corrected) os << "corrected: " << print_statement(*t.corrected) << "\n";
        os << "base: " << t.base_id << "\n";
        os << "subst: " << serialize_substitution(t.subst) << "\n";
        if (t.subst_printed) os << "subst_printed: " << serialize_substitution(*t.subst_printed) << "\n";
        os << "mode: " << (t.mode == DerivationMode::Verbatim ? "verbatim" : "simplified") << "\n";
        if (!t.note.empty()) os << "note: " << t.note << "\n";
        os << "\n";
    }
    return os.str();
}

namespace {

void check_statement_scope(const Statement& st, const std::string& where,
                           std::vector<std::string>& diags) {
    for (const Expr* side : {&st.lhs, &st.rhs}) {
        for (const auto& v : collect_vars(*side)) {
            if (!st.domain.find(v))
                diags.push_back(where + ": variable '" + v + "' not declared in domain");
        }
    }
    for (const auto& vc : st.domain.vars) {
        if (vc.lower && vc.upper && !(*vc.lower < *vc.upper))
            diags.push_back(where + ": empty range for '" + vc.name + "'");
    }
}

} // namespace

std::vector<std::string> validate_base(const BaseRecord& b) {
    std::vector<std::string> diags;
    if (b.statement) check_statement_scope(*b.statement, b.id, diags);
    if (b.garbled && b.note.empty())
        diags.push_back(b.id + ": base marked garbled but carries no note");
    if (!b.statement && !b.garbled)
        diags.push_back(b.id + ": base without statement must be marked garbled");
    return diags;
}

std::vector<std::string> validate_record(const Corpus& c, const TheoremRecord& t) {
    std::vector<std::string> diags;
    check_statement_scope(t.as_printed, t.id, diags);
    if (t.corrected) check_statement_scope(*t.corrected, t.id + " (corrected)", diags);

    for (const Expr* side : {&t.as_printed.lhs, &t.as_printed.rhs}) {
        if (has_nonvar_floor_frac(*side))
            diags.push_back(t.id + ": floor/frac applied to a non-variable expression");
    }

    const BaseRecord* base = c.find_base(t.base_id);
    if (!base) {
        diags.push_back(t.id + ": missing base " + t.base_id);
        return diags;
    }
    if (base->statement) {
        for (const auto& v : collect_vars(base->statement->lhs)) {
            if (!t.subst.find(v))
                diags.push_back(t.id + ": substitution does not cover base variable '" + v + "'");
        }
        for (const auto& v : collect_vars(base->statement->rhs)) {
            if (!t.subst.find(v))
                diags.push_back(t.id + ": substitution does not cover base variable '" + v + "'");
        }
    }
    for (const auto& [var, image] : t.subst.map) {
        if (!valid_image(image))
            diags.push_back(t.id + ": substitution image for '" + var +
                            "' is not x, floor(x), frac(x) or a parameter");
        if (image.kind == NodeKind::Var && image.var != "x" &&
            !t.as_printed.domain.find(image.var))
            diags.push_back(t.id + ": substitution parameter '" + image.var +
                            "' not declared in the theorem domain");
    }
    return diags;
}

std::vector<std::string> validate_corpus(const Corpus& c) {
    std::vector<std::string> diags;
    for (const auto& b : c.bases) {
        auto d = validate_base(b);
        diags.insert(diags.end(), d.begin(), d.end());
    }
    for (const auto& t : c.theorems) {
        auto d = validate_record(c, t);
        diags.insert(diags.end(), d.begin(), d.end());
    }
    return diags;
}

} // namespace floorcheck
