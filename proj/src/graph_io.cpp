#include "glcs/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "glcs/errors.hpp"
#include "glcs/unicode.hpp"

namespace glcs {

namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\v' || c == '\f';
}

struct Token {
    std::string text;
    bool quoted = false;
};

std::vector<Token> tokenize(std::string_view line, size_t line_no) {
    std::vector<Token> tokens;
    size_t i = 0;
    while (true) {
        while (i < line.size() && is_space(line[i])) {
            ++i;
        }
        if (i == line.size()) {
            break;
        }
        Token token;
        if (line[i] == '"') {
            token.quoted = true;
            ++i;
            bool closed = false;
            while (i < line.size()) {
                char c = line[i++];
                if (c == '"') {
                    closed = true;
                    break;
                }
                if (c == '\\') {
                    if (i == line.size() || (line[i] != '"' && line[i] != '\\')) {
                        throw ParseError(line_no, "invalid escape in quoted label");
                    }
                    c = line[i++];
                }
                token.text.push_back(c);
            }
            if (!closed) {
                throw ParseError(line_no, "unterminated quoted label");
            }
            if (i < line.size() && !is_space(line[i])) {
                throw ParseError(line_no, "unexpected text after closing quote");
            }
        }
        else {
            while (i < line.size() && !is_space(line[i])) {
                token.text.push_back(line[i++]);
            }
        }
        tokens.push_back(std::move(token));
    }
    return tokens;
}

vertex_id parse_id(const Token& token, size_t line_no) {
    const auto& s = token.text;
    if (token.quoted || s.empty()) {
        throw ParseError(line_no, "expected a vertex id, found '" + s + "'");
    }
    for (char c : s) {
        if (c < '0' || c > '9') {
            throw ParseError(line_no, "expected a vertex id, found '" + s + "'");
        }
    }
    vertex_id id = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), id);
    if (ec == std::errc::result_out_of_range) {
        throw ParseError(line_no, "vertex id " + s + " is out of range");
    }
    if (ec != std::errc() || end != s.data() + s.size()) {
        throw ParseError(line_no, "expected a vertex id, found '" + s + "'");
    }
    return id;
}

}

LabeledGraph parse_graph(std::string_view text) {
    LabeledGraph graph;
    size_t line_no = 0;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        auto line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }

        size_t first = 0;
        while (first < line.size() && is_space(line[first])) {
            ++first;
        }
        if (first == line.size() || line[first] == '#') {
            continue;
        }

        auto tokens = tokenize(line, line_no);
        const auto& keyword = tokens[0].text;
        if (tokens[0].quoted || (keyword != "vertex" && keyword != "edge")) {
            throw ParseError(line_no, "unknown line type '" + keyword + "'");
        }
        if (tokens.size() != 3) {
            throw ParseError(line_no, keyword + " line needs exactly 2 fields, found " +
                                          std::to_string(tokens.size() - 1));
        }
        if (keyword == "vertex") {
            vertex_id id = parse_id(tokens[1], line_no);
            auto label = decode_utf8(tokens[2].text);
            if (!label) {
                throw ParseError(line_no, "label is not valid UTF-8");
            }
            if (label->empty()) {
                throw ParseError(line_no, "empty label for vertex " + std::to_string(id));
            }
            if (graph.has_vertex(id)) {
                throw ParseError(line_no, "duplicate vertex id " + std::to_string(id));
            }
            graph.add_vertex(id, std::move(*label));
        }
        else {
            vertex_id from = parse_id(tokens[1], line_no);
            vertex_id to = parse_id(tokens[2], line_no);
            for (vertex_id endpoint : {from, to}) {
                if (!graph.has_vertex(endpoint)) {
                    throw ParseError(line_no, "unknown endpoint " + std::to_string(endpoint));
                }
            }
            if (graph.has_edge(from, to)) {
                throw ParseError(line_no, "duplicate edge " + std::to_string(from) + " " +
                                              std::to_string(to));
            }
            graph.add_edge(from, to);
        }
    }
    return graph;
}

LabeledGraph read_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError(0, "cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw ParseError(0, "cannot read " + path);
    }
    return parse_graph(buffer.str());
}

namespace {

std::string write_label(std::u32string_view label, bool force_quote) {
    auto bytes = encode_utf8(label);
    bool quote = force_quote || bytes.empty() || bytes.front() == '"';
    for (char c : bytes) {
        if (c == '\n' || c == '\r') {
            throw InvalidGraph("labels with line breaks cannot be written to a graph file");
        }
        quote = quote || is_space(c);
    }
    if (!quote) {
        return bytes;
    }
    std::string out = "\"";
    for (char c : bytes) {
        if (c == '"' || c == '\\') {
            out.push_back('\\');
        }
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

}

std::string format_label(std::u32string_view label) {
    return write_label(label, false);
}

std::string serialize_graph(const LabeledGraph& graph) {
    std::string out;
    for (const auto& v : graph.vertices()) {
        out += "vertex " + std::to_string(v.id) + " " + format_label(v.label) + "\n";
    }
    for (const auto& [from, to] : graph.edges()) {
        out += "edge " + std::to_string(from) + " " + std::to_string(to) + "\n";
    }
    return out;
}

std::string serialize_graph(const AtomicGraph& graph) {
    std::string out;
    for (size_t v = 0; v < graph.size(); ++v) {
        out += "vertex " + std::to_string(v + 1) + " " +
               format_label(std::u32string(1, graph.label(v))) + "\n";
    }
    for (const auto& [from, to] : graph.edge_list()) {
        out += "edge " + std::to_string(from + 1) + " " + std::to_string(to + 1) + "\n";
    }
    return out;
}

std::string serialize_graph(const CondensedGraph& graph) {
    std::string out;
    for (size_t c = 0; c < graph.size(); ++c) {
        const auto& comp = graph.component(c);
        std::u32string chars(comp.label_set.begin(), comp.label_set.end());
        // always quoted, so a set is never mistaken for a plain label
        out += "vertex " + std::to_string(c + 1) + " " + write_label(chars, true);
        if (comp.is_cyclic) {
            out += " cyclic";
        }
        out += "\n";
    }
    for (size_t c = 0; c < graph.size(); ++c) {
        for (size_t d : graph.out_edges(c)) {
            out += "edge " + std::to_string(c + 1) + " " + std::to_string(d + 1) + "\n";
        }
    }
    return out;
}

}
