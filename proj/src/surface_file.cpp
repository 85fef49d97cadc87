#include "hilbrel/surface_file.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace hilbrel {

ParseError::ParseError(const std::string& source, std::size_t line, const std::string& message)
    : Error(source + ":" + std::to_string(line) + ": " + message), line_(line)
{
}

const LatticeClass* SurfaceDocument::find_class(const std::string& name) const
{
    for (const auto& [n, c] : classes)
        if (n == name)
            return &c;
    return nullptr;
}

const NamedMoments* SurfaceDocument::find_moments(const std::string& name) const
{
    for (const auto& m : moments)
        if (m.name == name)
            return &m;
    return nullptr;
}

const NamedForm* SurfaceDocument::find_form(const std::string& name) const
{
    for (const auto& f : forms)
        if (f.name == name)
            return &f;
    return nullptr;
}

namespace {

std::vector<std::string> split(const std::string& line)
{
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok)
        out.push_back(tok);
    return out;
}

std::optional<Integer> parse_integer(const std::string& tok)
{
    std::size_t start = (!tok.empty() && (tok[0] == '-' || tok[0] == '+')) ? 1 : 0;
    if (start == tok.size())
        return std::nullopt;
    for (std::size_t i = start; i < tok.size(); ++i)
        if (tok[i] < '0' || tok[i] > '9')
            return std::nullopt;
    Integer v;
    v.set_str(tok[0] == '+' ? tok.substr(1) : tok, 10);
    return v;
}

bool is_name(const std::string& tok)
{
    if (tok.empty() || parse_integer(tok) || tok == "end" || tok == "->")
        return false;
    for (char ch : tok)
        if (ch == ':' || ch == '#')
            return false;
    return true;
}

class Parser {
public:
    explicit Parser(std::string source) : source_(std::move(source)) {}

    SurfaceDocument run(std::istream& in)
    {
        std::string raw;
        while (std::getline(in, raw)) {
            ++line_;
            if (auto hash = raw.find('#'); hash != std::string::npos)
                raw.erase(hash);
            if (!raw.empty() && raw.back() == '\r')
                raw.pop_back();
            const auto tokens = split(raw);
            if (tokens.empty())
                continue;
            if (block_ == Block::none)
                directive(tokens);
            else if (tokens.size() == 1 && tokens[0] == "end")
                close_block();
            else
                block_line(raw, tokens);
        }
        if (block_ != Block::none)
            fail("unterminated '" + block_name_ + "' block (missing 'end')");
        finish();
        return std::move(doc_);
    }

private:
    enum class Block { none, gram, cup, classes, moments, form };

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(source_, line_, msg); }

    Integer integer(const std::string& tok) const
    {
        auto v = parse_integer(tok);
        if (!v)
            fail("expected an integer, found '" + tok + "'");
        return *v;
    }

    int small_int(const std::string& tok, long lo, long hi) const
    {
        const Integer v = integer(tok);
        if (v < lo || v > hi)
            fail("value " + v.get_str() + " outside " + std::to_string(lo) + ".." + std::to_string(hi));
        return static_cast<int>(v.get_si());
    }

    std::size_t require_rank() const
    {
        if (!rank_)
            fail("'h2_rank' must be given before this line");
        return *rank_;
    }

    int require_q() const
    {
        if (!q_)
            fail("'q' must be given before this line");
        return *q_;
    }

    LatticeClass vector_of(const std::vector<std::string>& tokens, std::size_t from) const
    {
        const std::size_t rank = require_rank();
        if (tokens.size() - from != rank)
            fail("expected " + std::to_string(rank) + " coordinates, found " +
                 std::to_string(tokens.size() - from));
        std::vector<Integer> v;
        for (std::size_t i = from; i < tokens.size(); ++i)
            v.push_back(integer(tokens[i]));
        return LatticeClass(std::move(v));
    }

    void once(const std::string& key)
    {
        if (!seen_.emplace(key, line_).second)
            fail("duplicate '" + key + "'");
    }

    void directive(const std::vector<std::string>& t)
    {
        const std::string& key = t[0];
        auto arity = [&](std::size_t n) {
            if (t.size() != n)
                fail("'" + key + "' expects " + std::to_string(n - 1) + " argument(s)");
        };
        if (key == "q") {
            arity(2);
            once(key);
            q_ = small_int(t[1], 0, max_half_rank);
            doc_.surface.q = *q_;
        } else if (key == "chi") {
            arity(2);
            once(key);
            doc_.surface.chi = integer(t[1]);
        } else if (key == "h2_rank") {
            arity(2);
            once(key);
            rank_ = static_cast<std::size_t>(small_int(t[1], 0, 4096));
        } else if (key == "pg_positive") {
            arity(2);
            once(key);
            if (t[1] == "1" || t[1] == "true")
                doc_.surface.pg_positive = true;
            else if (t[1] == "0" || t[1] == "false")
                doc_.surface.pg_positive = false;
            else
                fail("pg_positive expects 0 or 1");
        } else if (key == "k") {
            once(key);
            doc_.surface.k = vector_of(t, 1);
        } else if (key == "gram") {
            arity(1);
            once(key);
            require_rank();
            open(Block::gram, key);
        } else if (key == "cup") {
            arity(1);
            once(key);
            require_rank();
            require_q();
            open(Block::cup, key);
        } else if (key == "classes") {
            arity(1);
            require_rank();
            open(Block::classes, key);
        } else if (key == "moments") {
            arity(3);
            require_q();
            if (!is_name(t[1]))
                fail("invalid moment sequence name '" + t[1] + "'");
            if (doc_.find_moments(t[1]) || doc_.find_form(t[1]))
                fail("name '" + t[1] + "' already used");
            const LatticeClass* cls = doc_.find_class(t[2]);
            if (!cls)
                fail("unknown class '" + t[2] + "' (classes must be declared first)");
            doc_.moments.push_back({t[1], t[2], MomentSequence{*cls, {}}});
            current_moment_.reset();
            open(Block::moments, key);
        } else if (key == "form") {
            if (t.size() != 2 && t.size() != 3)
                fail("'form' expects a name and an optional side");
            const int q = require_q();
            if (!is_name(t[1]))
                fail("invalid form name '" + t[1] + "'");
            if (doc_.find_moments(t[1]) || doc_.find_form(t[1]))
                fail("name '" + t[1] + "' already used");
            Side side = Side::primal;
            if (t.size() == 3) {
                if (t[2] == "dual")
                    side = Side::dual;
                else if (t[2] != "primal")
                    fail("form side must be 'primal' or 'dual'");
            }
            doc_.forms.push_back({t[1], ExtForm(q, side)});
            open(Block::form, key);
        } else {
            fail("unknown directive '" + key + "'");
        }
    }

    void open(Block b, const std::string& name)
    {
        block_ = b;
        block_name_ = name;
    }

    void close_block()
    {
        if (block_ == Block::gram) {
            if (gram_rows_.size() != *rank_)
                fail("gram has " + std::to_string(gram_rows_.size()) + " rows, expected " +
                     std::to_string(*rank_));
            try {
                doc_.surface.h2 = Lattice(gram_rows_);
            } catch (const DimensionError& e) {
                fail(e.what());
            }
            gram_done_ = true;
        }
        block_ = Block::none;
    }

    void add_terms(ExtForm& form, const std::string& raw)
    {
        const auto colon = raw.find(':');
        if (colon == std::string::npos || raw.find(':', colon + 1) != std::string::npos)
            fail("expected a term 'indices: coefficient'");
        const auto left = split(raw.substr(0, colon));
        const auto right = split(raw.substr(colon + 1));
        if (right.size() != 1)
            fail("expected exactly one coefficient after ':'");
        std::vector<int> idx;
        for (const auto& tok : left)
            idx.push_back(small_int(tok, 1, 2 * form.q()));
        Subset s = 0;
        try {
            s = subset_from_indices(idx, form.q());
        } catch (const DimensionError& e) {
            fail(e.what());
        }
        if (form.coefficient(s) != 0)
            fail("duplicate term for this index set");
        const Integer c = integer(right[0]);
        if (c == 0)
            return;
        form.add_term(s, c);
    }

    void block_line(const std::string& raw, const std::vector<std::string>& t)
    {
        switch (block_) {
        case Block::gram: {
            if (gram_rows_.size() == *rank_)
                fail("too many gram rows (expected " + std::to_string(*rank_) + ")");
            gram_rows_.push_back(vector_of(t, 0).coords());
            break;
        }
        case Block::cup: {
            if (t.size() < 3 || t[2] != "->")
                fail("expected 'i j -> vector'");
            const int n = 2 * *q_;
            const int i = small_int(t[0], 1, n);
            const int j = small_int(t[1], 1, n);
            if (i >= j)
                fail("cup entries need i < j");
            if (doc_.surface.cup11.count({i, j}))
                fail("duplicate cup entry for (" + t[0] + "," + t[1] + ")");
            LatticeClass v = vector_of(t, 3);
            doc_.surface.cup11[{i, j}] = std::move(v);
            break;
        }
        case Block::classes: {
            if (!is_name(t[0]))
                fail("invalid class name '" + t[0] + "'");
            if (doc_.find_class(t[0]))
                fail("duplicate class '" + t[0] + "'");
            doc_.classes.emplace_back(t[0], vector_of(t, 1));
            break;
        }
        case Block::moments: {
            auto& seq = doc_.moments.back().sequence.moments;
            if (t[0] == "a") {
                if (t.size() != 2)
                    fail("expected 'a <index>'");
                const int i = small_int(t[1], 0, 1 << 20);
                if (static_cast<std::size_t>(i) < seq.size() && !seq[i].is_zero())
                    fail("moment a_" + t[1] + " given twice");
                if (seq.size() <= static_cast<std::size_t>(i))
                    seq.resize(i + 1, ExtForm(*q_, Side::primal));
                current_moment_ = static_cast<std::size_t>(i);
                break;
            }
            if (!current_moment_)
                fail("moment terms must follow an 'a <index>' header");
            add_terms(seq[*current_moment_], raw);
            break;
        }
        case Block::form:
            add_terms(doc_.forms.back().form, raw);
            break;
        case Block::none:
            break;
        }
    }

    void finish()
    {
        if (!q_)
            fail("missing 'q'");
        if (!seen_.count("chi"))
            fail("missing 'chi'");
        if (!rank_)
            fail("missing 'h2_rank'");
        if (!seen_.count("k"))
            fail("missing 'k'");
        if (!gram_done_) {
            if (*rank_ != 0)
                fail("missing 'gram'");
            doc_.surface.h2 = Lattice();
        }
        for (auto& m : doc_.moments)
            while (!m.sequence.moments.empty() && m.sequence.moments.back().is_zero())
                m.sequence.moments.pop_back();
    }

    std::string source_;
    std::size_t line_ = 0;
    Block block_ = Block::none;
    std::string block_name_;
    std::optional<int> q_;
    std::optional<std::size_t> rank_;
    std::map<std::string, std::size_t> seen_;
    std::vector<std::vector<Integer>> gram_rows_;
    bool gram_done_ = false;
    std::optional<std::size_t> current_moment_;
    SurfaceDocument doc_;
};

std::string vector_text(const LatticeClass& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ' ';
        out += v[i].get_str();
    }
    return out;
}

}  // namespace

SurfaceDocument parse_surface(std::istream& in, const std::string& source)
{
    return Parser(source).run(in);
}

SurfaceDocument parse_surface_string(const std::string& text, const std::string& source)
{
    std::istringstream in(text);
    return parse_surface(in, source);
}

SurfaceDocument load_surface(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError(path, 0, "cannot open file");
    return parse_surface(in, path);
}

std::string write_surface(const SurfaceDocument& doc)
{
    const SurfaceTopology& s = doc.surface;
    std::ostringstream out;
    out << "q " << s.q << "\n";
    out << "chi " << s.chi.get_str() << "\n";
    out << "h2_rank " << s.h2.rank() << "\n";
    out << "pg_positive " << (s.pg_positive ? 1 : 0) << "\n";
    out << "k";
    if (s.k.size())
        out << ' ' << vector_text(s.k);
    out << "\n";
    if (s.h2.rank()) {
        out << "gram\n";
        for (const auto& row : s.h2.gram())
            out << vector_text(LatticeClass(row)) << "\n";
        out << "end\n";
    }
    if (!s.cup11.empty()) {
        out << "cup\n";
        for (const auto& [key, v] : s.cup11)
            out << key.first << ' ' << key.second << " -> " << vector_text(v) << "\n";
        out << "end\n";
    }
    if (!doc.classes.empty()) {
        out << "classes\n";
        for (const auto& [name, v] : doc.classes)
            out << name << ' ' << vector_text(v) << "\n";
        out << "end\n";
    }
    for (const auto& m : doc.moments) {
        out << "moments " << m.name << ' ' << m.class_name << "\n";
        for (std::size_t i = 0; i < m.sequence.moments.size(); ++i) {
            if (m.sequence.moments[i].is_zero())
                continue;
            out << "a " << i << "\n" << format_terms(m.sequence.moments[i]);
        }
        out << "end\n";
    }
    for (const auto& f : doc.forms) {
        out << "form " << f.name << ' ' << to_string(f.form.side()) << "\n";
        out << format_terms(f.form) << "end\n";
    }
    return out.str();
}

ExtForm parse_terms(const std::string& text, int q, Side side)
{
    std::ostringstream doc;
    doc << "q " << q << "\nchi 0\nh2_rank 0\nk\nform F " << to_string(side) << "\n" << text;
    if (!text.empty() && text.back() != '\n')
        doc << "\n";
    doc << "end\n";
    return parse_surface_string(doc.str(), "<terms>").forms.front().form;
}

}  // namespace hilbrel
