#include <zf/dsl.hh>
#include <zf/families.hh>

#include <cctype>
#include <charconv>
#include <ostream>
#include <sstream>

using namespace zf;

namespace
{
    class Parser
    {
        public:
            explicit Parser(std::string_view text) : _text(text)
            {
            }

            auto parse() -> Graph
            {
                auto g = term();
                skip();
                if (_pos != _text.size())
                    fail("unexpected trailing input");
                return g;
            }

        private:
            std::string_view _text;
            std::size_t _pos = 0;

            [[noreturn]] auto fail(const std::string & message) const -> void
            {
                throw ParseError(message, _pos);
            }

            auto skip() -> void
            {
                while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos])))
                    ++_pos;
            }

            auto peek() -> char
            {
                skip();
                return _pos < _text.size() ? _text[_pos] : '\0';
            }

            auto expect(char c) -> void
            {
                if (peek() != c)
                    fail(std::string("expected '") + c + "'");
                ++_pos;
            }

            auto accept(char c) -> bool
            {
                if (peek() != c)
                    return false;
                ++_pos;
                return true;
            }

            auto identifier() -> std::string
            {
                skip();
                std::size_t start = _pos;
                while (_pos < _text.size() && (std::isalnum(static_cast<unsigned char>(_text[_pos])) || _text[_pos] == '_'))
                    ++_pos;
                if (start == _pos)
                    fail("expected a family name");
                return std::string(_text.substr(start, _pos - start));
            }

            auto number() -> int
            {
                skip();
                int value = 0;
                auto [end, ec] = std::from_chars(_text.data() + _pos, _text.data() + _text.size(), value);
                if (ec != std::errc{} || value < 0)
                    fail("expected a nonnegative integer");
                _pos = static_cast<std::size_t>(end - _text.data());
                return value;
            }

            auto numbers() -> std::vector<int>
            {
                std::vector<int> result{ number() };
                while (accept(','))
                    result.push_back(number());
                return result;
            }

            auto term() -> Graph
            {
                auto name = identifier();
                expect('(');
                if (name == "pc")
                    return pc();
                auto g = body(name);
                expect(')');
                return g;
            }

            auto pc() -> Graph
            {
                PCSpec spec;
                spec.n = numbers();
                expect(')');
                if (accept('[')) {
                    if (identifier() != "chords")
                        fail("expected 'chords'");
                    expect(':');
                    spec.chords.assign(spec.n.size(), {});
                    do {
                        int i = number();
                        expect('@');
                        int j = number();
                        if (i < 1 || i > static_cast<int>(spec.n.size()))
                            fail("chord cycle index out of range");
                        spec.chords[i - 1].push_back(j);
                    } while (accept(','));
                    expect(']');
                }
                return pc_graph(spec);
            }

            auto body(const std::string & name) -> Graph
            {
                if (name == "path")          return path(number());
                if (name == "cycle")         return cycle(number());
                if (name == "complete")      return complete(number());
                if (name == "star")          return star(number());
                if (name == "wheel")         return wheel(number());
                if (name == "supertriangle") return supertriangle(number());
                if (name == "empty")         return empty_graph(number());
                if (name == "multipartite")  return complete_multipartite(numbers());

                if (name == "cartesian" || name == "strong" || name == "corona" || name == "union") {
                    auto a = term();
                    expect(',');
                    auto b = term();
                    if (name == "cartesian") return cartesian(a, b);
                    if (name == "strong")    return strong(a, b);
                    if (name == "corona")    return corona(a, b);
                    return disjoint_union(a, b);
                }

                if (name == "gencorona") {
                    auto base = term();
                    expect(';');
                    std::vector<Graph> attached{ term() };
                    while (accept(','))
                        attached.push_back(term());
                    return generalized_corona(base, attached);
                }

                if (name == "vsum") {
                    auto a = term();
                    expect(',');
                    int v = number();
                    expect(',');
                    auto b = term();
                    expect(',');
                    int w = number();
                    return vertex_sum(a, v, b, w);
                }

                fail("unknown family '" + name + "'");
            }
    };
}

auto zf::parse_family_dsl(std::string_view text) -> Graph
{
    return Parser(text).parse();
}

auto zf::parse_edge_list(std::string_view text) -> Graph
{
    std::istringstream in{ std::string(text) };
    std::string line;
    int declared = -1, max_id = -1;
    std::vector<Edge> edges;
    std::size_t offset = 0;

    while (std::getline(in, line)) {
        std::size_t line_start = offset;
        offset += line.size() + 1;
        if (auto hash = line.find('#') ; hash != std::string::npos)
            line.erase(hash);

        std::istringstream fields(line);
        std::string first;
        if (! (fields >> first))
            continue;

        if (first == "n") {
            if (declared >= 0 || ! edges.empty())
                throw ParseError("header 'n' must come first and only once", line_start);
            if (! (fields >> declared) || declared < 1)
                throw ParseError("header needs a positive vertex count", line_start);
        }
        else {
            int u = 0, v = 0;
            auto [p, ec] = std::from_chars(first.data(), first.data() + first.size(), u);
            if (ec != std::errc{} || p != first.data() + first.size() || ! (fields >> v) || u < 0 || v < 0)
                throw ParseError("expected 'u v'", line_start);
            std::string extra;
            if (fields >> extra)
                throw ParseError("trailing text after edge", line_start);
            edges.emplace_back(u, v);
            max_id = std::max({ max_id, u, v });
        }
    }

    int n = declared >= 0 ? declared : max_id + 1;
    if (n < 1)
        throw Error(ErrorKind::EmptyVertexSet, "edge list describes no vertices");
    return Graph(n, edges);
}

auto zf::write_edge_list(std::ostream & out, const Graph & g) -> void
{
    out << "n " << g.size() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

auto zf::to_edge_list(const Graph & g) -> std::string
{
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}
