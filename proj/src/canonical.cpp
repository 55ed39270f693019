#include "unimod/canonical.hpp"

#include "unimod/detail/search.hpp"
#include "unimod/errors.hpp"

#include <array>

namespace unimod {

CanonicalCode make_code(CodeKind kind, bool diagonal, std::size_t n, const std::string& bits)
{
    std::string bytes;
    bytes.reserve(4 + bits.size());
    bytes.push_back(static_cast<char>(kind));
    bytes.push_back(static_cast<char>(diagonal ? 1 : 0));
    bytes.push_back(static_cast<char>((n >> 8U) & 0xFFU));
    bytes.push_back(static_cast<char>(n & 0xFFU));
    bytes += bits;
    return CanonicalCode(std::move(bytes));
}

namespace {

std::size_t expected_length(std::size_t n) { return 4 + (n * (n - 1) / 2 + 7) / 8; }

void validate_layout(const std::string& bytes)
{
    if (bytes.size() < 4) {
        throw ParseError("canonical code too short");
    }
    auto kind = static_cast<unsigned char>(bytes[0]);
    auto flags = static_cast<unsigned char>(bytes[1]);
    std::size_t n = (static_cast<unsigned char>(bytes[2]) << 8U) |
                    static_cast<unsigned char>(bytes[3]);
    if (kind > 2 || flags > 1 || n == 0 || bytes.size() != expected_length(n)) {
        throw ParseError("malformed canonical code");
    }
    if (flags == 1 && kind != static_cast<unsigned char>(CodeKind::doubly_rooted)) {
        throw ParseError("diagonal flag on a code that is not doubly rooted");
    }
    std::size_t roots = kind == 2 ? (flags ? 1 : 2) : kind;
    if (roots > n) {
        throw ParseError("canonical code has more roots than vertices");
    }
}

} // namespace

CanonicalCode CanonicalCode::from_bytes(std::string bytes)
{
    validate_layout(bytes);
    return CanonicalCode(std::move(bytes));
}

CanonicalCode CanonicalCode::from_hex(std::string_view hex)
{
    if (hex.size() % 2 != 0) {
        throw ParseError("hex code has odd length");
    }
    auto nibble = [](char c) -> unsigned {
        if (c >= '0' && c <= '9') {
            return static_cast<unsigned>(c - '0');
        }
        if (c >= 'a' && c <= 'f') {
            return static_cast<unsigned>(c - 'a' + 10);
        }
        if (c >= 'A' && c <= 'F') {
            return static_cast<unsigned>(c - 'A' + 10);
        }
        throw ParseError("invalid hex digit");
    };
    std::string bytes;
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        bytes.push_back(static_cast<char>((nibble(hex[i]) << 4U) | nibble(hex[i + 1])));
    }
    return from_bytes(std::move(bytes));
}

CodeKind CanonicalCode::kind() const
{
    if (bytes_.empty()) {
        throw InvalidArgument("empty canonical code");
    }
    return static_cast<CodeKind>(bytes_[0]);
}

std::string CanonicalCode::hex() const
{
    static constexpr std::array<char, 16> digits{'0', '1', '2', '3', '4', '5', '6', '7',
                                                 '8', '9', 'a', 'b', 'c', 'd', 'e', 'f'};
    std::string out;
    out.reserve(bytes_.size() * 2);
    for (char ch : bytes_) {
        auto b = static_cast<unsigned char>(ch);
        out.push_back(digits[b >> 4U]);
        out.push_back(digits[b & 0xFU]);
    }
    return out;
}

CanonicalCode canonical_code(const FiniteGraph& g, std::span<const Vertex> roots,
                             const SizeGuard& guard)
{
    if (roots.size() > 2) {
        throw InvalidArgument("at most two roots");
    }
    guard.check(g);
    if (g.vertex_count() > 0xFFFF) {
        throw InvalidArgument("graph too large for a canonical code");
    }
    for (Vertex r : roots) {
        g.check_vertex(r);
    }
    if (!roots.empty() && !g.is_connected()) {
        throw DisconnectedError("rooted canonical code of a disconnected graph");
    }
    auto kind = static_cast<CodeKind>(roots.size());
    bool diagonal = roots.size() == 2 && roots[0] == roots[1];
    auto group = detail::search_group(g, roots);
    auto labeling = detail::canonical_labeling(g, roots, std::move(group.generators));
    return make_code(kind, diagonal, g.vertex_count(), labeling.adjacency_bits);
}

CanonicalCode canonical_code(const FiniteGraph& g, const SizeGuard& guard)
{
    return canonical_code(g, std::span<const Vertex>{}, guard);
}

CanonicalCode canonical_code(const RootedGraph& g, const SizeGuard& guard)
{
    std::array<Vertex, 1> roots{g.root};
    return canonical_code(g.graph, roots, guard);
}

CanonicalCode canonical_code(const DoublyRootedGraph& g, const SizeGuard& guard)
{
    std::array<Vertex, 2> roots{g.primary_root, g.secondary_root};
    return canonical_code(g.graph, roots, guard);
}

bool are_isomorphic(const RootedGraph& a, const RootedGraph& b, const SizeGuard& guard)
{
    return canonical_code(a, guard) == canonical_code(b, guard);
}

DecodedGraph decode(const CanonicalCode& code)
{
    const auto& bytes = code.bytes();
    validate_layout(bytes);
    auto kind = static_cast<unsigned char>(bytes[0]);
    bool diagonal = bytes[1] != 0;
    std::size_t n = (static_cast<unsigned char>(bytes[2]) << 8U) |
                    static_cast<unsigned char>(bytes[3]);
    std::vector<Edge> edges;
    std::size_t k = 0;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j, ++k) {
            auto byte = static_cast<unsigned char>(bytes[4 + k / 8]);
            if (byte & (0x80U >> (k % 8))) {
                edges.emplace_back(i, j);
            }
        }
    }
    std::vector<Vertex> roots;
    if (kind == 1) {
        roots = {0};
    } else if (kind == 2) {
        roots = diagonal ? std::vector<Vertex>{0, 0} : std::vector<Vertex>{0, 1};
    }
    return {FiniteGraph(n, edges), std::move(roots)};
}

} // namespace unimod
