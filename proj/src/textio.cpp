#include "hadamard/textio.hpp"

#include <istream>
#include <sstream>
#include <vector>

namespace hadamard {

namespace {

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

bool skippable(const std::string& line) {
    std::string t = strip(line);
    return t.empty() || t.front() == '#';
}

int parse_int(const std::string& tok, const std::string& what) {
    try {
        std::size_t used = 0;
        int value = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return value;
    } catch (const std::exception&) {
        throw ParseError("expected an integer for " + what + ", got '" + tok + "'");
    }
}

// "name=1,2,3" with a fixed name prefix.
std::vector<int> parse_int_list(const std::string& tok, const std::string& name) {
    const std::string prefix = name + "=";
    if (tok.rfind(prefix, 0) != 0)
        throw ParseError("expected '" + prefix + "...', got '" + tok + "'");
    std::vector<int> out;
    std::string payload = tok.substr(prefix.size());
    if (payload.empty()) return out;
    std::stringstream ss(payload);
    std::string piece;
    while (std::getline(ss, piece, ','))
        out.push_back(parse_int(piece, name + " entry"));
    return out;
}

int parse_keyed_int(const std::string& tok, const std::string& key) {
    const std::string prefix = key + "=";
    if (tok.rfind(prefix, 0) != 0)
        throw ParseError("expected '" + prefix + "<int>', got '" + tok + "'");
    return parse_int(tok.substr(prefix.size()), key);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

Block parse_block_payload(const std::string& payload, Modulus v) {
    std::vector<std::string> toks = split_ws(payload);
    if (!toks.empty() && toks[0] == "orbit") {
        if (toks.size() != 3)
            throw ParseError("orbit form needs 'orbit H=... reps=...', got '" + payload + "'");
        std::vector<int> subgroup = parse_int_list(toks[1], "H");
        std::vector<int> reps = parse_int_list(toks[2], "reps");
        try {
            return expand_orbits({v, subgroup, reps});
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("bad orbit block: ") + e.what());
        }
    }
    std::vector<int> elements;
    elements.reserve(toks.size());
    for (const std::string& t : toks) elements.push_back(parse_int(t, "block element"));
    try {
        return Block::from_elements(v, elements);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad block: ") + e.what());
    }
}

}  // namespace

DifferenceFamily parse_family(std::istream& in) {
    std::string line;
    bool have_header = false;
    int v_value = 0;
    int lambda = 0;
    std::vector<Block> blocks;
    std::vector<BlockTag> tags;

    while (std::getline(in, line)) {
        if (skippable(line)) continue;
        std::string t = strip(line);
        if (!have_header) {
            std::vector<std::string> toks = split_ws(t);
            if (toks.size() != 2)
                throw ParseError("header must be 'v=<int> lambda=<int>', got '" + t + "'");
            v_value = parse_keyed_int(toks[0], "v");
            lambda = parse_keyed_int(toks[1], "lambda");
            if (v_value < 1) throw ParseError("v must be >= 1");
            if (lambda < 0) throw ParseError("lambda must be >= 0");
            have_header = true;
            continue;
        }
        std::size_t colon = t.find(':');
        if (colon == std::string::npos)
            throw ParseError("block line needs 'X<i>[tag]: elements', got '" + t + "'");
        std::string head = strip(t.substr(0, colon));
        std::string payload = t.substr(colon + 1);

        BlockTag tag = BlockTag::none;
        std::size_t bracket = head.find('[');
        if (bracket != std::string::npos) {
            if (head.back() != ']') throw ParseError("unterminated tag in '" + head + "'");
            std::string tag_name = head.substr(bracket + 1, head.size() - bracket - 2);
            if (tag_name == "skew")
                tag = BlockTag::skew;
            else if (tag_name == "sym")
                tag = BlockTag::symmetric;
            else
                throw ParseError("unknown tag '" + tag_name + "' (use skew or sym)");
            head = head.substr(0, bracket);
        }
        const int expected = static_cast<int>(blocks.size());
        if (head != "X" + std::to_string(expected))
            throw ParseError("expected block 'X" + std::to_string(expected) + "', got '" + head +
                             "'");
        blocks.push_back(parse_block_payload(payload, Modulus(v_value)));
        tags.push_back(tag);
    }
    if (!have_header) throw ParseError("missing 'v=<int> lambda=<int>' header");
    if (blocks.empty()) throw ParseError("family has no blocks");
    return DifferenceFamily::from_blocks(std::move(blocks), lambda, std::move(tags));
}

DifferenceFamily parse_family_string(const std::string& text) {
    std::istringstream in(text);
    return parse_family(in);
}

std::string serialize_family(const DifferenceFamily& f) {
    std::ostringstream out;
    out << "v=" << f.v() << " lambda=" << f.params().lambda << "\n";
    for (int i = 0; i < f.m(); ++i) {
        out << "X" << i;
        if (f.tag(i) == BlockTag::skew) out << "[skew]";
        if (f.tag(i) == BlockTag::symmetric) out << "[sym]";
        out << ":";
        f.block(i).bits().for_each_set([&](int x) { out << " " << x; });
        out << "\n";
    }
    return out.str();
}

SquareSignMatrix parse_matrix(std::istream& in) {
    std::string line;
    bool have_header = false;
    int n = 0;
    int row = 0;
    SquareSignMatrix m(1);

    while (std::getline(in, line)) {
        if (skippable(line)) continue;
        std::string t = strip(line);
        if (!have_header) {
            n = parse_keyed_int(t, "order");
            if (n < 1) throw ParseError("order must be >= 1");
            m = SquareSignMatrix(n);
            have_header = true;
            continue;
        }
        if (row >= n) throw ParseError("more than order=" + std::to_string(n) + " rows");
        if (static_cast<int>(t.size()) != n)
            throw ParseError("row " + std::to_string(row) + " has " + std::to_string(t.size()) +
                             " characters, expected " + std::to_string(n));
        for (int c = 0; c < n; ++c) {
            const char ch = t[static_cast<std::size_t>(c)];
            if (ch == '+')
                m.set(row, c, +1);
            else if (ch == '-')
                m.set(row, c, -1);
            else
                throw ParseError(std::string("illegal character '") + ch + "' in row " +
                                 std::to_string(row));
        }
        ++row;
    }
    if (!have_header) throw ParseError("missing 'order=<n>' header");
    if (row != n)
        throw ParseError("matrix has " + std::to_string(row) + " rows, expected " +
                         std::to_string(n));
    return m;
}

std::string serialize_matrix(const SquareSignMatrix& m) {
    std::string out = "order=" + std::to_string(m.order()) + "\n";
    out.reserve(out.size() +
                static_cast<std::size_t>(m.order()) * (static_cast<std::size_t>(m.order()) + 1));
    for (int r = 0; r < m.order(); ++r) {
        for (int c = 0; c < m.order(); ++c) out.push_back(m.at(r, c) > 0 ? '+' : '-');
        out.push_back('\n');
    }
    return out;
}

}  // namespace hadamard
