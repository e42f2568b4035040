#include "sflab/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "sflab/errors.hpp"

namespace sflab {

namespace {

struct Token
{
    std::string_view text;
    std::size_t column; // 1-based
};

struct Line
{
    std::size_t number; // 1-based
    std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text)
{
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        ++number;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        Line parsed{number, {}};
        std::size_t i = 0;
        while (i < line.size()) {
            if (line[i] == ' ' || line[i] == '\t') {
                ++i;
                continue;
            }
            const std::size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t')
                ++i;
            parsed.tokens.push_back({line.substr(start, i - start), start + 1});
        }
        if (!parsed.tokens.empty())
            out.push_back(std::move(parsed));
        if (end == text.size())
            break;
        pos = end + 1;
    }
    return out;
}

std::uint64_t parse_unsigned(const Line& line, const Token& tok, const char* what)
{
    std::uint64_t v = 0;
    const char* first = tok.text.data();
    const char* last = first + tok.text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (tok.text.empty() || ec != std::errc() || ptr != last)
        throw ParseError(line.number, tok.column, std::string("expected ") + what + ", found '" + std::string(tok.text) + "'");
    return v;
}

const Token& token_at(const Line& line, std::size_t i, const char* what)
{
    if (i >= line.tokens.size()) {
        const Token& last = line.tokens.back();
        throw ParseError(line.number, last.column + last.text.size(), std::string("missing ") + what);
    }
    return line.tokens[i];
}

void expect_end(const Line& line, std::size_t count)
{
    if (line.tokens.size() > count)
        throw ParseError(line.number, line.tokens[count].column, "unexpected token '" + std::string(line.tokens[count].text) + "'");
}

void expect_keyword(const Line& line, std::size_t i, std::string_view word)
{
    const Token& tok = token_at(line, i, "keyword");
    if (tok.text != word)
        throw ParseError(line.number, tok.column, "expected '" + std::string(word) + "', found '" + std::string(tok.text) + "'");
}

Rational parse_rational_token(const Line& line, const Token& tok)
{
    try {
        return parse_rational(tok.text);
    } catch (const InvalidArgument& e) {
        throw ParseError(line.number, tok.column, e.what());
    }
}

} // namespace

std::string write_setfam(const SetFamily& family)
{
    std::ostringstream out;
    out << "setfam 1 " << family.ground_size() << ' ' << family.size() << ' ' << (family.multifamily() ? "multi" : "-")
        << '\n';
    for (const Set& s : family.members()) {
        out << s.size() << ':';
        for (Element e : s)
            out << ' ' << e;
        out << '\n';
    }
    return out.str();
}

SetFamily read_setfam(std::string_view text)
{
    const std::vector<Line> lines = tokenize(text);
    if (lines.empty())
        throw ParseError(1, 1, "empty input, expected a 'setfam' header");
    const Line& head = lines[0];
    expect_keyword(head, 0, "setfam");
    const Token& version = token_at(head, 1, "version");
    if (parse_unsigned(head, version, "version") != 1)
        throw ParseError(head.number, version.column, "unsupported setfam version");
    const Token& ntok = token_at(head, 2, "ground size");
    const std::uint64_t n = parse_unsigned(head, ntok, "ground size");
    if (n > UINT32_MAX)
        throw ParseError(head.number, ntok.column, "ground size too large");
    const std::uint64_t m = parse_unsigned(head, token_at(head, 3, "member count"), "member count");
    bool multi = false;
    if (head.tokens.size() > 4) {
        const Token& flags = head.tokens[4];
        if (flags.text == "multi")
            multi = true;
        else if (flags.text != "-")
            throw ParseError(head.number, flags.column, "unknown flag '" + std::string(flags.text) + "'");
        expect_end(head, 5);
    }
    if (lines.size() - 1 != m) {
        const Line& at = lines.size() - 1 > m ? lines[m + 1] : lines.back();
        throw ParseError(at.number, 1,
                         "header declares " + std::to_string(m) + " members, found " + std::to_string(lines.size() - 1));
    }

    std::vector<Set> members;
    members.reserve(m);
    std::set<Set> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        const Token& size_tok = line.tokens[0];
        if (size_tok.text.size() < 2 || size_tok.text.back() != ':')
            throw ParseError(line.number, size_tok.column, "expected '<size>:'");
        const Token bare{size_tok.text.substr(0, size_tok.text.size() - 1), size_tok.column};
        const std::uint64_t size = parse_unsigned(line, bare, "member size");
        if (line.tokens.size() - 1 != size)
            throw ParseError(line.number, size_tok.column,
                             "member declares " + std::to_string(size) + " elements, found "
                                 + std::to_string(line.tokens.size() - 1));
        Set s;
        s.reserve(size);
        for (std::size_t t = 1; t < line.tokens.size(); ++t) {
            const Token& tok = line.tokens[t];
            const std::uint64_t e = parse_unsigned(line, tok, "element");
            if (e >= n)
                throw ParseError(line.number, tok.column, "element " + std::to_string(e) + " outside ground set of size " + std::to_string(n));
            if (!s.empty() && e <= s.back())
                throw ParseError(line.number, tok.column, "elements must be strictly increasing");
            s.push_back(static_cast<Element>(e));
        }
        if (!multi && !seen.insert(s).second)
            throw ParseError(line.number, 1, "repeated member in a family without the multi flag");
        members.push_back(std::move(s));
    }
    return SetFamily(static_cast<std::uint32_t>(n), std::move(members), multi);
}

Rational parse_rational(std::string_view text)
{
    const auto bad = [&] { return InvalidArgument("malformed rational '" + std::string(text) + "'"); };
    const auto is_integer = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && s[0] == '-')
            s.remove_prefix(1);
        if (s.empty())
            return false;
        for (char c : s)
            if (c < '0' || c > '9')
                return false;
        return true;
    };
    const std::size_t slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    if (!is_integer(num, true))
        throw bad();
    BigInt den = 1;
    if (slash != std::string_view::npos) {
        const std::string_view d = text.substr(slash + 1);
        if (!is_integer(d, false))
            throw bad();
        den = BigInt(std::string(d));
        if (den == 0)
            throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
    }
    Rational q(BigInt(std::string(num)), den);
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& value)
{
    return value.get_str();
}

std::string write_scene(const Scene2& scene)
{
    std::ostringstream out;
    out << "scene2 1 " << scene.points.size() << '\n';
    for (const Point2& p : scene.points)
        out << "p " << format_rational(p.x) << ' ' << format_rational(p.y) << '\n';
    for (const Disk& d : scene.disks)
        out << "d " << format_rational(d.center.x) << ' ' << format_rational(d.center.y) << ' '
            << format_rational(d.radius_squared) << '\n';
    return out.str();
}

std::string write_scene(const Scene3& scene)
{
    std::ostringstream out;
    out << "scene3 1 " << scene.points.size() << '\n';
    for (const Point3& p : scene.points)
        out << "p " << format_rational(p.x) << ' ' << format_rational(p.y) << ' ' << format_rational(p.z) << '\n';
    for (const Halfspace3& h : scene.halfspaces)
        out << "h " << format_rational(h.a) << ' ' << format_rational(h.b) << ' ' << format_rational(h.c) << ' '
            << format_rational(h.w) << '\n';
    return out.str();
}

Scene read_scene(std::string_view text)
{
    const std::vector<Line> lines = tokenize(text);
    if (lines.empty())
        throw ParseError(1, 1, "empty input, expected a scene header");
    const Line& head = lines[0];
    const Token& kind = head.tokens[0];
    if (kind.text != "scene2" && kind.text != "scene3")
        throw ParseError(head.number, kind.column, "expected 'scene2' or 'scene3'");
    const bool planar = kind.text == "scene2";
    const Token& version = token_at(head, 1, "version");
    if (parse_unsigned(head, version, "version") != 1)
        throw ParseError(head.number, version.column, "unsupported scene version");
    const std::uint64_t np = parse_unsigned(head, token_at(head, 2, "point count"), "point count");
    expect_end(head, 3);
    if (lines.size() - 1 < np)
        throw ParseError(lines.back().number, 1, "header declares " + std::to_string(np) + " points");

    const std::size_t dims = planar ? 2 : 3;
    const std::size_t region_fields = planar ? 3 : 4;
    const char* region_word = planar ? "d" : "h";
    Scene2 s2;
    Scene3 s3;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        const bool point_line = i <= np;
        expect_keyword(line, 0, point_line ? "p" : region_word);
        const std::size_t fields = point_line ? dims : region_fields;
        std::vector<Rational> v;
        for (std::size_t f = 1; f <= fields; ++f)
            v.push_back(parse_rational_token(line, token_at(line, f, "coordinate")));
        expect_end(line, fields + 1);
        if (point_line) {
            if (planar)
                s2.points.push_back({v[0], v[1]});
            else
                s3.points.push_back({v[0], v[1], v[2]});
        } else if (planar) {
            if (v[2] <= 0)
                throw ParseError(line.number, line.tokens[3].column, "radius squared must be positive");
            s2.disks.push_back({{v[0], v[1]}, v[2]});
        } else {
            if (v[0] == 0 && v[1] == 0 && v[2] == 0)
                throw ParseError(line.number, line.tokens[1].column, "half-space normal must be nonzero");
            s3.halfspaces.push_back({v[0], v[1], v[2], v[3]});
        }
    }
    if (planar)
        return s2;
    return s3;
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write '" + path.string() + "'");
    out << content;
    if (!out)
        throw Error("write to '" + path.string() + "' failed");
}

} // namespace sflab
