#include "gtwist/fixture_format.hpp"

#include "gtwist/error.hpp"

#include <algorithm>
#include <sstream>

namespace gtwist {

namespace {

struct Token {
    std::string text;
    int line;
    int column;
};

struct Line {
    std::vector<Token> tokens;
    int line_no;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    int line_no = 1;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string raw =
            eol == std::string::npos ? text.substr(pos) : text.substr(pos, eol - pos);
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        Line line{{}, line_no};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            std::size_t start = i;
            while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            if (i > start)
                line.tokens.push_back(
                    {raw.substr(start, i - start), line_no, static_cast<int>(start + 1)});
        }
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        if (eol == std::string::npos) break;
        pos = eol + 1;
        ++line_no;
    }
    return lines;
}

[[noreturn]] void fail(const Token& t, const std::string& msg) {
    throw ParseError(t.line, t.column, msg);
}

[[noreturn]] void fail_line(const Line& l, const std::string& msg) {
    throw ParseError(l.line_no, 1, msg);
}

std::int64_t parse_int(const Token& t) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(t.text, &used);
        if (used != t.text.size()) fail(t, "expected an integer, got '" + t.text + "'");
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        fail(t, "expected an integer, got '" + t.text + "'");
    }
}

std::size_t parse_size(const Token& t) {
    std::int64_t v = parse_int(t);
    if (v < 0) fail(t, "expected a nonnegative integer");
    return static_cast<std::size_t>(v);
}

GroupElement parse_element(const GradingGroup& g, const Token& t) {
    try {
        return g.parse_element(t.text);
    } catch (const Error& e) {
        fail(t, e.what());
    }
}

Scalar parse_scalar(const Field& f, const Token& t) {
    try {
        return f.parse(t.text);
    } catch (const Error& e) {
        fail(t, e.what());
    }
}

// index of the ":" separator token, or -1
int find_colon(const Line& l, std::size_t from) {
    for (std::size_t i = from; i < l.tokens.size(); ++i)
        if (l.tokens[i].text == ":") return static_cast<int>(i);
    return -1;
}

Window parse_window_tokens(const Line& l, std::size_t at) {
    if (at >= l.tokens.size()) fail_line(l, "window needs arguments");
    if (l.tokens[at].text == "full") return Window::full();
    if (at + 1 >= l.tokens.size()) fail_line(l, "window needs two bounds");
    std::int64_t lo = parse_int(l.tokens[at]);
    std::int64_t hi = parse_int(l.tokens[at + 1]);
    if (lo > hi) fail(l.tokens[at], "window bounds out of order");
    return Window::integer_range(lo, hi);
}

struct RawSection {
    std::string kind;
    std::string name;
    std::vector<Line> lines;
    int line_no;
};

// ---- building objects from raw sections ----

Mat parse_block_matrix(const Field& f, const Line& l, std::size_t dims_at) {
    // ... : <r> <c> : <entries...>
    if (dims_at + 1 >= l.tokens.size()) fail_line(l, "block needs dimensions");
    std::size_t r = parse_size(l.tokens[dims_at]);
    std::size_t c = parse_size(l.tokens[dims_at + 1]);
    std::size_t entries_at = dims_at + 2;
    if (entries_at >= l.tokens.size() || l.tokens[entries_at].text != ":")
        fail_line(l, "block needs ':' before entries");
    ++entries_at;
    if (l.tokens.size() - entries_at != r * c)
        fail_line(l, "block has " + std::to_string(l.tokens.size() - entries_at) +
                          " entries, expected " + std::to_string(r * c));
    Mat m(r, c);
    for (std::size_t i = 0; i < r * c; ++i)
        m.data()[i] = parse_scalar(f, l.tokens[entries_at + i]);
    return m;
}

std::shared_ptr<const GradedAlgebra> build_algebra(const Field& field, const GradingGroup& group,
                                                   const RawSection& s) {
    GradedAlgebra a;
    a.field = field;
    a.group = group;
    bool have_window = false, have_unit = false;
    std::vector<const Line*> degree_lines, sc_lines;
    const Line* unit_line = nullptr;

    for (const auto& l : s.lines) {
        const std::string& k = l.tokens[0].text;
        if (k == "window") {
            a.window = parse_window_tokens(l, 1);
            have_window = true;
        } else if (k == "degree") {
            degree_lines.push_back(&l);
        } else if (k == "unit") {
            unit_line = &l;
            have_unit = true;
        } else if (k == "sc") {
            sc_lines.push_back(&l);
        } else {
            fail(l.tokens[0], "unknown line '" + k + "' in algebra section");
        }
    }
    if (!have_window) fail_line(s.lines.empty() ? Line{{}, s.line_no} : s.lines[0],
                                "algebra section needs a window");
    if (group.kind() == GroupKind::finite) a.window = Window::full();
    require_degree_window(group, a.window);

    for (const Line* lp : degree_lines) {
        const Line& l = *lp;
        if (l.tokens.size() < 3 || l.tokens[2].text != ":")
            fail_line(l, "degree line is 'degree <g> : <labels...>'");
        GroupElement g = parse_element(group, l.tokens[1]);
        if (!window_contains(group, a.window, g)) fail(l.tokens[1], "degree out of window");
        std::vector<std::string> labels;
        for (std::size_t i = 3; i < l.tokens.size(); ++i) labels.push_back(l.tokens[i].text);
        if (a.basis.count(g)) fail(l.tokens[1], "duplicate degree line");
        a.basis[g] = std::move(labels);
    }
    for (auto g : window_elements(group, a.window))
        if (!a.basis.count(g))
            fail_line(s.lines[0], "missing degree line for " + group.format_element(g));

    // zero tensors everywhere, then the sparse entries
    for (auto g : window_elements(group, a.window))
        for (auto h : window_elements(group, a.window)) {
            GroupElement gh = group.op(g, h);
            if (!window_contains(group, a.window, gh)) continue;
            a.structure[{g, h}] =
                Tensor3(a.basis.at(g).size(), a.basis.at(h).size(), a.basis.at(gh).size());
        }
    for (const Line* lp : sc_lines) {
        const Line& l = *lp;
        // sc <g> <i> <h> <j> <m> : <coeff>
        if (l.tokens.size() != 8 || l.tokens[6].text != ":")
            fail_line(l, "structure line is 'sc <g> <i> <h> <j> <m> : <coeff>'");
        GroupElement g = parse_element(group, l.tokens[1]);
        std::size_t i = parse_size(l.tokens[2]);
        GroupElement h = parse_element(group, l.tokens[3]);
        std::size_t j = parse_size(l.tokens[4]);
        std::size_t m = parse_size(l.tokens[5]);
        auto it = a.structure.find({g, h});
        if (it == a.structure.end()) fail(l.tokens[1], "structure entry out of window");
        Tensor3& t = it->second;
        if (i >= t.dim0() || j >= t.dim1() || m >= t.dim2())
            fail(l.tokens[2], "structure index out of range");
        t.at(i, j, m) = parse_scalar(field, l.tokens[7]);
    }

    if (!have_unit || unit_line->tokens.size() < 2 || unit_line->tokens[1].text != ":")
        fail_line(s.lines[0], "algebra section needs 'unit : <coords...>'");
    for (std::size_t i = 2; i < unit_line->tokens.size(); ++i)
        a.unit.push_back(parse_scalar(field, unit_line->tokens[i]));
    if (a.unit.size() != a.basis.at(group.identity()).size())
        fail_line(*unit_line, "unit length does not match the identity-degree dimension");
    return std::make_shared<const GradedAlgebra>(std::move(a));
}

std::shared_ptr<const GAlgebraWindow> build_galgebra(
    const Field& field, const GradingGroup& group, const RawSection& s,
    const std::map<std::string, std::shared_ptr<const GradedAlgebra>>& algebras) {
    GAlgebraWindow r;
    r.field = field;
    r.group = group;
    bool have_window = false;
    std::vector<const Line*> sc_lines;

    for (const auto& l : s.lines) {
        const std::string& k = l.tokens[0].text;
        if (k == "window") {
            r.index_window = parse_window_tokens(l, 1);
            have_window = true;
        } else if (k == "component") {
            if (l.tokens.size() < 4 || l.tokens[3].text != ":")
                fail_line(l, "component line is 'component <f> <g> : <labels...>'");
            GroupElement f = parse_element(group, l.tokens[1]);
            GroupElement g = parse_element(group, l.tokens[2]);
            std::vector<std::string> labels;
            for (std::size_t i = 4; i < l.tokens.size(); ++i) labels.push_back(l.tokens[i].text);
            if (r.components.count({f, g})) fail(l.tokens[1], "duplicate component");
            r.components[{f, g}] = std::move(labels);
        } else if (k == "unit") {
            if (l.tokens.size() < 3 || l.tokens[2].text != ":")
                fail_line(l, "unit line is 'unit <f> : <coords...>'");
            GroupElement f = parse_element(group, l.tokens[1]);
            std::vector<Scalar> u;
            for (std::size_t i = 3; i < l.tokens.size(); ++i)
                u.push_back(parse_scalar(field, l.tokens[i]));
            r.local_units[f] = std::move(u);
        } else if (k == "sc") {
            sc_lines.push_back(&l);
        } else if (k == "assoc") {
            if (l.tokens.size() != 3 || (l.tokens[1].text != "right" && l.tokens[1].text != "left"))
                fail_line(l, "assoc line is 'assoc right|left <algebra>'");
            auto it = algebras.find(l.tokens[2].text);
            if (it == algebras.end()) fail(l.tokens[2], "unknown algebra '" + l.tokens[2].text + "'");
            r.assoc = GAlgebraWindow::Assoc{l.tokens[1].text == "right", it->second};
        } else {
            fail(l.tokens[0], "unknown line '" + k + "' in galgebra section");
        }
    }
    if (!have_window) fail_line(s.lines[0], "galgebra section needs a window");
    if (group.kind() == GroupKind::finite) r.index_window = Window::full();

    for (const auto& [key, labels] : r.components) {
        (void)labels;
        if (!window_contains(group, r.index_window, key.first) ||
            !window_contains(group, r.index_window, key.second))
            fail_line(s.lines[0],
                      "component " + format_component(group, key) + " out of window");
    }

    for (const auto& [key1, labels1] : r.components)
        for (const auto& [key2, labels2] : r.components) {
            if (key2.first != key1.second) continue;
            if (!r.present(key1.first, key2.second)) continue;
            r.structure[{key1.first, key1.second, key2.second}] = Tensor3(
                labels1.size(), labels2.size(), r.dim(key1.first, key2.second));
        }
    for (const Line* lp : sc_lines) {
        const Line& l = *lp;
        // sc <f> <g> <h> <i> <j> <m> : <coeff>
        if (l.tokens.size() != 9 || l.tokens[7].text != ":")
            fail_line(l, "structure line is 'sc <f> <g> <h> <i> <j> <m> : <coeff>'");
        GroupElement f = parse_element(group, l.tokens[1]);
        GroupElement g = parse_element(group, l.tokens[2]);
        GroupElement h = parse_element(group, l.tokens[3]);
        std::size_t i = parse_size(l.tokens[4]);
        std::size_t j = parse_size(l.tokens[5]);
        std::size_t m = parse_size(l.tokens[6]);
        auto it = r.structure.find({f, g, h});
        if (it == r.structure.end()) fail(l.tokens[1], "structure entry for absent components");
        Tensor3& t = it->second;
        if (i >= t.dim0() || j >= t.dim1() || m >= t.dim2())
            fail(l.tokens[4], "structure index out of range");
        t.at(i, j, m) = parse_scalar(field, l.tokens[8]);
    }
    return std::make_shared<const GAlgebraWindow>(std::move(r));
}

TwistingSystem build_twist(const Field& field, const GradingGroup& group, const RawSection& s,
                           const std::map<std::string, std::shared_ptr<const GradedAlgebra>>&
                               algebras) {
    std::shared_ptr<const GradedAlgebra> carrier;
    std::map<GroupElement, std::map<GroupElement, Mat>> family;
    std::map<GroupElement, Mat> sigma_blocks;
    bool has_family = false, has_sigma = false;

    for (const auto& l : s.lines) {
        const std::string& k = l.tokens[0].text;
        if (k == "on") {
            if (l.tokens.size() != 2) fail_line(l, "on line is 'on <algebra>'");
            auto it = algebras.find(l.tokens[1].text);
            if (it == algebras.end()) fail(l.tokens[1], "unknown algebra '" + l.tokens[1].text + "'");
            carrier = it->second;
        } else if (k == "block") {
            if (l.tokens.size() < 4 || l.tokens[3].text != ":")
                fail_line(l, "block line is 'block <g> <h> : <r> <c> : <entries...>'");
            GroupElement g = parse_element(group, l.tokens[1]);
            GroupElement h = parse_element(group, l.tokens[2]);
            family[g][h] = parse_block_matrix(field, l, 4);
            has_family = true;
        } else if (k == "sigma") {
            if (l.tokens.size() < 3 || l.tokens[2].text != ":")
                fail_line(l, "sigma line is 'sigma <h> : <r> <c> : <entries...>'");
            GroupElement h = parse_element(group, l.tokens[1]);
            sigma_blocks[h] = parse_block_matrix(field, l, 3);
            has_sigma = true;
        } else {
            fail(l.tokens[0], "unknown line '" + k + "' in twist section");
        }
    }
    if (!carrier) fail_line(s.lines[0], "twist section needs 'on <algebra>'");
    if (has_family && has_sigma)
        fail_line(s.lines[0], "twist section mixes family blocks and a sigma generator");
    if (has_sigma) {
        GradedLinearMap sigma;
        sigma.source = carrier;
        sigma.target = carrier;
        sigma.shift = group.identity();
        sigma.blocks = std::move(sigma_blocks);
        return TwistingSystem::sigma_powers(carrier, sigma);
    }
    return TwistingSystem::from_family(carrier, std::move(family));
}

PrincipalMap build_principal(
    const Field& field, const GradingGroup& group, const RawSection& s,
    const std::map<std::string, std::shared_ptr<const GAlgebraWindow>>& g_algebras) {
    std::shared_ptr<const GAlgebraWindow> carrier;
    std::map<GroupElement, std::map<ComponentKey, Mat>> family;
    std::map<ComponentKey, Mat> generator;
    bool has_family = false, has_generator = false, has_window = false;
    Window family_window;

    for (const auto& l : s.lines) {
        const std::string& k = l.tokens[0].text;
        if (k == "on") {
            if (l.tokens.size() != 2) fail_line(l, "on line is 'on <galgebra>'");
            auto it = g_algebras.find(l.tokens[1].text);
            if (it == g_algebras.end())
                fail(l.tokens[1], "unknown galgebra '" + l.tokens[1].text + "'");
            carrier = it->second;
        } else if (k == "window") {
            family_window = parse_window_tokens(l, 1);
            has_window = true;
        } else if (k == "block") {
            if (l.tokens.size() < 5 || l.tokens[4].text != ":")
                fail_line(l, "block line is 'block <g> <h> <l> : <r> <c> : <entries...>'");
            GroupElement g = parse_element(group, l.tokens[1]);
            GroupElement h = parse_element(group, l.tokens[2]);
            GroupElement ll = parse_element(group, l.tokens[3]);
            family[g][{h, ll}] = parse_block_matrix(field, l, 5);
            has_family = true;
        } else if (k == "generator") {
            if (l.tokens.size() < 4 || l.tokens[3].text != ":")
                fail_line(l, "generator line is 'generator <h> <l> : <r> <c> : <entries...>'");
            GroupElement h = parse_element(group, l.tokens[1]);
            GroupElement ll = parse_element(group, l.tokens[2]);
            generator[{h, ll}] = parse_block_matrix(field, l, 4);
            has_generator = true;
        } else {
            fail(l.tokens[0], "unknown line '" + k + "' in principal section");
        }
    }
    if (!carrier) fail_line(s.lines[0], "principal section needs 'on <galgebra>'");
    if (has_family && has_generator)
        fail_line(s.lines[0], "principal section mixes family blocks and a generator");
    if (has_generator) return PrincipalMap::from_generator(carrier, generator);
    if (!has_window) family_window = shift_window(group, carrier->index_window);
    return PrincipalMap::from_family(carrier, family_window, std::move(family));
}

GAlgebraMorphism build_morphism(
    const Field& field, const GradingGroup& group, const RawSection& s,
    const std::map<std::string, std::shared_ptr<const GAlgebraWindow>>& g_algebras) {
    GAlgebraMorphism phi;
    for (const auto& l : s.lines) {
        const std::string& k = l.tokens[0].text;
        if (k == "from") {
            if (l.tokens.size() != 4 || l.tokens[2].text != "to")
                fail_line(l, "from line is 'from <galgebra> to <galgebra>'");
            auto it = g_algebras.find(l.tokens[1].text);
            if (it == g_algebras.end())
                fail(l.tokens[1], "unknown galgebra '" + l.tokens[1].text + "'");
            auto jt = g_algebras.find(l.tokens[3].text);
            if (jt == g_algebras.end())
                fail(l.tokens[3], "unknown galgebra '" + l.tokens[3].text + "'");
            phi.source = it->second;
            phi.target = jt->second;
        } else if (k == "block") {
            if (l.tokens.size() < 4 || l.tokens[3].text != ":")
                fail_line(l, "block line is 'block <f> <g> : <r> <c> : <entries...>'");
            GroupElement f = parse_element(group, l.tokens[1]);
            GroupElement g = parse_element(group, l.tokens[2]);
            phi.blocks[{f, g}] = parse_block_matrix(field, l, 4);
        } else {
            fail(l.tokens[0], "unknown line '" + k + "' in morphism section");
        }
    }
    if (!phi.source) fail_line(s.lines[0], "morphism section needs 'from ... to ...'");
    return phi;
}

BigradedModule build_module(const GradingGroup& group, const RawSection& s,
                            const std::map<std::string, std::shared_ptr<const GradedAlgebra>>&
                                algebras) {
    BigradedModule p;
    for (const auto& l : s.lines) {
        const std::string& k = l.tokens[0].text;
        if (k == "base") {
            if (l.tokens.size() != 2) fail_line(l, "base line is 'base <algebra>'");
            auto it = algebras.find(l.tokens[1].text);
            if (it == algebras.end()) fail(l.tokens[1], "unknown algebra '" + l.tokens[1].text + "'");
            p.base = it->second;
        } else if (k == "row") {
            if (l.tokens.size() < 3 || l.tokens[2].text != ":")
                fail_line(l, "row line is 'row <g> : <shifts...>'");
            GroupElement g = parse_element(group, l.tokens[1]);
            std::vector<GroupElement> shifts;
            for (std::size_t i = 3; i < l.tokens.size(); ++i)
                shifts.push_back(parse_element(group, l.tokens[i]));
            p.rows[g] = std::move(shifts);
        } else {
            fail(l.tokens[0], "unknown line '" + k + "' in module section");
        }
    }
    if (!p.base) fail_line(s.lines[0], "module section needs 'base <algebra>'");
    return p;
}

}  // namespace

FixtureFile parse_fixture_file(const std::string& text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(1, 1, "empty file");
    std::size_t at = 0;

    // header
    {
        const Line& l = lines[at];
        if (l.tokens.size() != 2 || l.tokens[0].text != "gtwist" || l.tokens[1].text != "1")
            fail_line(l, "expected header 'gtwist 1'");
        ++at;
    }

    FixtureFile f;
    bool have_field = false, have_group = false;
    std::vector<RawSection> sections;

    while (at < lines.size()) {
        const Line& l = lines[at];
        const std::string& k = l.tokens[0].text;
        if (k == "field") {
            if (l.tokens.size() < 2) fail_line(l, "field line is 'field q' or 'field fp <p>'");
            if (l.tokens[1].text == "q" && l.tokens.size() == 2) {
                f.field = Field(0);
            } else if (l.tokens[1].text == "fp" && l.tokens.size() == 3) {
                std::int64_t p = parse_int(l.tokens[2]);
                try {
                    f.field = Field(p);
                } catch (const Error& e) {
                    fail(l.tokens[2], e.what());
                }
            } else {
                fail_line(l, "field line is 'field q' or 'field fp <p>'");
            }
            have_field = true;
            ++at;
        } else if (k == "group") {
            if (l.tokens.size() >= 2 && l.tokens[1].text == "integers") {
                f.group = GradingGroup::integers();
            } else if (l.tokens.size() >= 2 && l.tokens[1].text == "finite") {
                // group finite <n> : <labels...> : <table labels row-major>
                if (l.tokens.size() < 4 || l.tokens[3].text != ":")
                    fail_line(l, "finite group line is 'group finite <n> : <labels> : <table>'");
                std::size_t n = parse_size(l.tokens[2]);
                if (l.tokens.size() < 4 + n + 1 + n * n)
                    fail_line(l, "finite group line is too short");
                std::vector<std::string> labels;
                for (std::size_t i = 0; i < n; ++i) labels.push_back(l.tokens[4 + i].text);
                if (l.tokens[4 + n].text != ":") fail(l.tokens[4 + n], "expected ':'");
                std::vector<std::int64_t> table;
                for (std::size_t i = 0; i < n * n; ++i) {
                    const Token& t = l.tokens[5 + n + i];
                    auto it = std::find(labels.begin(), labels.end(), t.text);
                    if (it == labels.end()) fail(t, "unknown element label '" + t.text + "'");
                    table.push_back(it - labels.begin());
                }
                try {
                    f.group = GradingGroup::finite(labels, table);
                } catch (const Error& e) {
                    fail_line(l, e.what());
                }
            } else {
                fail_line(l, "group line is 'group integers' or 'group finite ...'");
            }
            have_group = true;
            ++at;
        } else if (k == "begin") {
            if (l.tokens.size() != 3) fail_line(l, "section starts 'begin <kind> <name>'");
            RawSection s{l.tokens[1].text, l.tokens[2].text, {}, l.line_no};
            ++at;
            bool closed = false;
            while (at < lines.size()) {
                if (lines[at].tokens[0].text == "end") {
                    closed = true;
                    ++at;
                    break;
                }
                s.lines.push_back(lines[at]);
                ++at;
            }
            if (!closed) fail_line(l, "section '" + s.name + "' is never closed");
            if (s.lines.empty()) fail_line(l, "section '" + s.name + "' is empty");
            sections.push_back(std::move(s));
        } else {
            fail(l.tokens[0], "unexpected '" + k + "'");
        }
    }
    if (!have_field) throw ParseError(1, 1, "file declares no field");
    if (!have_group) throw ParseError(1, 1, "file declares no group");

    auto named = [&](const std::string& kind) {
        std::vector<const RawSection*> out;
        for (const auto& s : sections)
            if (s.kind == kind) out.push_back(&s);
        return out;
    };
    for (const auto& s : sections)
        if (s.kind != "algebra" && s.kind != "galgebra" && s.kind != "twist" &&
            s.kind != "principal" && s.kind != "morphism" && s.kind != "module")
            throw ParseError(s.line_no, 1, "unknown section kind '" + s.kind + "'");

    for (const auto* s : named("algebra")) {
        if (f.algebras.count(s->name))
            throw ParseError(s->line_no, 1, "duplicate algebra '" + s->name + "'");
        f.algebras[s->name] = build_algebra(f.field, f.group, *s);
    }
    for (const auto* s : named("galgebra")) {
        if (f.g_algebras.count(s->name))
            throw ParseError(s->line_no, 1, "duplicate galgebra '" + s->name + "'");
        f.g_algebras[s->name] = build_galgebra(f.field, f.group, *s, f.algebras);
    }
    for (const auto* s : named("twist")) {
        if (f.twists.count(s->name))
            throw ParseError(s->line_no, 1, "duplicate twist '" + s->name + "'");
        f.twists.emplace(s->name, build_twist(f.field, f.group, *s, f.algebras));
    }
    for (const auto* s : named("principal")) {
        if (f.principals.count(s->name))
            throw ParseError(s->line_no, 1, "duplicate principal '" + s->name + "'");
        f.principals.emplace(s->name, build_principal(f.field, f.group, *s, f.g_algebras));
    }
    for (const auto* s : named("morphism")) {
        if (f.morphisms.count(s->name))
            throw ParseError(s->line_no, 1, "duplicate morphism '" + s->name + "'");
        f.morphisms.emplace(s->name, build_morphism(f.field, f.group, *s, f.g_algebras));
    }
    for (const auto* s : named("module")) {
        if (f.modules.count(s->name))
            throw ParseError(s->line_no, 1, "duplicate module '" + s->name + "'");
        f.modules.emplace(s->name, build_module(f.group, *s, f.algebras));
    }
    return f;
}

// ---- serialization ----

namespace {

struct Namer {
    const FixtureFile& f;

    std::string algebra_name(const std::shared_ptr<const GradedAlgebra>& a) const {
        for (const auto& [name, x] : f.algebras)
            if (x == a) return name;
        for (const auto& [name, x] : f.algebras)
            if (algebra_equal(*x, *a)) return name;
        throw InvalidArgumentError("serialized object references an algebra not in the file");
    }
    std::string galgebra_name(const std::shared_ptr<const GAlgebraWindow>& r) const {
        for (const auto& [name, x] : f.g_algebras)
            if (x == r) return name;
        for (const auto& [name, x] : f.g_algebras)
            if (g_algebra_equal(*x, *r)) return name;
        throw InvalidArgumentError("serialized object references a G-algebra not in the file");
    }
};

std::string window_text(const Window& w) {
    if (w.whole_group) return "window full";
    return "window " + std::to_string(w.lo) + " " + std::to_string(w.hi);
}

void write_matrix(std::ostringstream& out, const Field& field, const Mat& m) {
    out << m.rows() << " " << m.cols() << " :";
    for (const auto& v : m.data()) out << " " << field.format(v);
    out << "\n";
}

}  // namespace

std::string serialize_fixture_file(const FixtureFile& f) {
    std::ostringstream out;
    const Field& F = f.field;
    const GradingGroup& G = f.group;
    Namer namer{f};

    out << "gtwist 1\n";
    if (F.kind() == FieldKind::rationals)
        out << "field q\n";
    else
        out << "field fp " << F.characteristic() << "\n";
    if (G.kind() == GroupKind::integers) {
        out << "group integers\n";
    } else {
        out << "group finite " << G.order() << " :";
        for (const auto& l : G.labels()) out << " " << l;
        out << " :";
        for (std::size_t i = 0; i < G.order(); ++i)
            for (std::size_t j = 0; j < G.order(); ++j)
                out << " "
                    << G.format_element(G.op(static_cast<GroupElement>(i),
                                             static_cast<GroupElement>(j)));
        out << "\n";
    }

    for (const auto& [name, ap] : f.algebras) {
        const GradedAlgebra& a = *ap;
        out << "\nbegin algebra " << name << "\n";
        out << window_text(a.window) << "\n";
        for (const auto& [g, labels] : a.basis) {
            out << "degree " << G.format_element(g) << " :";
            for (const auto& l : labels) out << " " << l;
            out << "\n";
        }
        out << "unit :";
        for (const auto& v : a.unit) out << " " << F.format(v);
        out << "\n";
        for (const auto& [key, t] : a.structure)
            for (std::size_t i = 0; i < t.dim0(); ++i)
                for (std::size_t j = 0; j < t.dim1(); ++j)
                    for (std::size_t m = 0; m < t.dim2(); ++m)
                        if (t.at(i, j, m) != 0)
                            out << "sc " << G.format_element(key.first) << " " << i << " "
                                << G.format_element(key.second) << " " << j << " " << m << " : "
                                << F.format(t.at(i, j, m)) << "\n";
        out << "end\n";
    }

    for (const auto& [name, rp] : f.g_algebras) {
        const GAlgebraWindow& r = *rp;
        out << "\nbegin galgebra " << name << "\n";
        out << window_text(r.index_window) << "\n";
        if (r.assoc)
            out << "assoc " << (r.assoc->right ? "right" : "left") << " "
                << namer.algebra_name(r.assoc->algebra) << "\n";
        for (const auto& [key, labels] : r.components) {
            out << "component " << G.format_element(key.first) << " "
                << G.format_element(key.second) << " :";
            for (const auto& l : labels) out << " " << l;
            out << "\n";
        }
        for (const auto& [g, u] : r.local_units) {
            out << "unit " << G.format_element(g) << " :";
            for (const auto& v : u) out << " " << F.format(v);
            out << "\n";
        }
        for (const auto& [key, t] : r.structure)
            for (std::size_t i = 0; i < t.dim0(); ++i)
                for (std::size_t j = 0; j < t.dim1(); ++j)
                    for (std::size_t m = 0; m < t.dim2(); ++m)
                        if (t.at(i, j, m) != 0)
                            out << "sc " << G.format_element(key[0]) << " "
                                << G.format_element(key[1]) << " " << G.format_element(key[2])
                                << " " << i << " " << j << " " << m << " : "
                                << F.format(t.at(i, j, m)) << "\n";
        out << "end\n";
    }

    for (const auto& [name, tau] : f.twists) {
        out << "\nbegin twist " << name << "\n";
        out << "on " << namer.algebra_name(tau.carrier) << "\n";
        for (const auto& [g, blocks] : tau.family)
            for (const auto& [h, m] : blocks) {
                out << "block " << G.format_element(g) << " " << G.format_element(h) << " : ";
                write_matrix(out, F, m);
            }
        out << "end\n";
    }

    for (const auto& [name, t] : f.principals) {
        out << "\nbegin principal " << name << "\n";
        out << "on " << namer.galgebra_name(t.carrier) << "\n";
        out << window_text(t.family_window) << "\n";
        for (const auto& [g, blocks] : t.family)
            for (const auto& [key, m] : blocks) {
                out << "block " << G.format_element(g) << " " << G.format_element(key.first)
                    << " " << G.format_element(key.second) << " : ";
                write_matrix(out, F, m);
            }
        out << "end\n";
    }

    for (const auto& [name, phi] : f.morphisms) {
        out << "\nbegin morphism " << name << "\n";
        out << "from " << namer.galgebra_name(phi.source) << " to "
            << namer.galgebra_name(phi.target) << "\n";
        for (const auto& [key, m] : phi.blocks) {
            out << "block " << G.format_element(key.first) << " " << G.format_element(key.second)
                << " : ";
            write_matrix(out, F, m);
        }
        out << "end\n";
    }

    for (const auto& [name, p] : f.modules) {
        out << "\nbegin module " << name << "\n";
        out << "base " << namer.algebra_name(p.base) << "\n";
        for (const auto& [g, shifts] : p.rows) {
            out << "row " << G.format_element(g) << " :";
            for (auto s : shifts) out << " " << G.format_element(s);
            out << "\n";
        }
        out << "end\n";
    }
    return out.str();
}

bool file_equal(const FixtureFile& a, const FixtureFile& b) {
    if (a.field != b.field || a.group != b.group) return false;
    if (a.algebras.size() != b.algebras.size() || a.g_algebras.size() != b.g_algebras.size() ||
        a.twists.size() != b.twists.size() || a.principals.size() != b.principals.size() ||
        a.morphisms.size() != b.morphisms.size() || a.modules.size() != b.modules.size())
        return false;
    for (const auto& [name, x] : a.algebras) {
        auto it = b.algebras.find(name);
        if (it == b.algebras.end() || !algebra_equal(*x, *it->second)) return false;
    }
    for (const auto& [name, x] : a.g_algebras) {
        auto it = b.g_algebras.find(name);
        if (it == b.g_algebras.end() || !g_algebra_equal(*x, *it->second)) return false;
    }
    for (const auto& [name, x] : a.twists) {
        auto it = b.twists.find(name);
        if (it == b.twists.end() || !twisting_equal(x, it->second)) return false;
    }
    for (const auto& [name, x] : a.principals) {
        auto it = b.principals.find(name);
        if (it == b.principals.end() || !principal_equal(x, it->second)) return false;
    }
    for (const auto& [name, x] : a.morphisms) {
        auto it = b.morphisms.find(name);
        if (it == b.morphisms.end() || x.blocks != it->second.blocks ||
            !g_algebra_equal(*x.source, *it->second.source) ||
            !g_algebra_equal(*x.target, *it->second.target))
            return false;
    }
    for (const auto& [name, x] : a.modules) {
        auto it = b.modules.find(name);
        if (it == b.modules.end() || x.rows != it->second.rows ||
            !algebra_equal(*x.base, *it->second.base))
            return false;
    }
    return true;
}

FixtureFile merge_files(std::vector<FixtureFile> files) {
    if (files.empty()) throw InvalidArgumentError("no input files");
    FixtureFile out = std::move(files[0]);
    for (std::size_t i = 1; i < files.size(); ++i) {
        FixtureFile& f = files[i];
        if (f.field != out.field) throw InvalidArgumentError("input files use different fields");
        if (f.group != out.group) throw InvalidArgumentError("input files use different groups");
        auto move_all = [](auto& from, auto& to, const char* kind) {
            for (auto& [name, obj] : from) {
                if (to.count(name))
                    throw InvalidArgumentError(std::string("duplicate ") + kind + " '" + name +
                                               "' across input files");
                to.emplace(name, std::move(obj));
            }
        };
        move_all(f.algebras, out.algebras, "algebra");
        move_all(f.g_algebras, out.g_algebras, "galgebra");
        move_all(f.twists, out.twists, "twist");
        move_all(f.principals, out.principals, "principal");
        move_all(f.morphisms, out.morphisms, "morphism");
        move_all(f.modules, out.modules, "module");
    }
    return out;
}

FixtureFile bundle_to_file(const FixtureBundle& b) {
    FixtureFile f;
    f.field = b.field;
    f.group = b.group;
    f.algebras = b.algebras;
    f.g_algebras = b.g_algebras;
    f.twists = b.twists;
    f.principals = b.principal_maps;
    f.morphisms = b.morphisms;
    f.modules = b.modules;

    // gamma and conjugation build fresh carriers; make sure every referenced
    // carrier is a named section so references resolve
    auto ensure_algebra = [&](const std::shared_ptr<const GradedAlgebra>& a) {
        for (const auto& [name, x] : f.algebras)
            if (x == a || algebra_equal(*x, *a)) return;
        f.algebras["algebra" + std::to_string(f.algebras.size())] = a;
    };
    auto ensure_galgebra = [&](const std::shared_ptr<const GAlgebraWindow>& r) {
        if (r->assoc) ensure_algebra(r->assoc->algebra);
        for (const auto& [name, x] : f.g_algebras)
            if (x == r || g_algebra_equal(*x, *r)) return;
        f.g_algebras["galgebra" + std::to_string(f.g_algebras.size())] = r;
    };
    for (const auto& [name, r] : b.g_algebras) {
        (void)name;
        if (r->assoc) ensure_algebra(r->assoc->algebra);
    }
    for (const auto& [name, t] : b.twists) {
        (void)name;
        ensure_algebra(t.carrier);
    }
    for (const auto& [name, t] : b.principal_maps) {
        (void)name;
        ensure_galgebra(t.carrier);
    }
    for (const auto& [name, m] : b.morphisms) {
        (void)name;
        ensure_galgebra(m.source);
        ensure_galgebra(m.target);
    }
    for (const auto& [name, p] : b.modules) {
        (void)name;
        ensure_algebra(p.base);
    }
    return f;
}

}  // namespace gtwist
