#ifndef UNIMOD_CANONICAL_HPP
#define UNIMOD_CANONICAL_HPP

#include "unimod/graph.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace unimod {

enum class CodeKind : std::uint8_t { unrooted = 0, rooted = 1, doubly_rooted = 2 };

// Canonical byte encoding of an isomorphism class of (possibly rooted) graphs.
//
// Layout: kind byte, flags byte (bit 0: the two roots coincide), vertex count
// as two big-endian bytes, then the upper triangle of the canonically
// relabeled adjacency matrix packed MSB first. Roots take the first canonical
// labels, primary before secondary.
class CanonicalCode {
public:
    CanonicalCode() = default;

    // Throws ParseError on a malformed hex string or layout.
    static CanonicalCode from_hex(std::string_view hex);
    static CanonicalCode from_bytes(std::string bytes);

    CodeKind kind() const;
    const std::string& bytes() const { return bytes_; }
    std::string hex() const;
    bool empty() const { return bytes_.empty(); }

    auto operator<=>(const CanonicalCode&) const = default;

private:
    explicit CanonicalCode(std::string bytes) : bytes_(std::move(bytes)) {}
    friend CanonicalCode make_code(CodeKind, bool, std::size_t, const std::string&);

    std::string bytes_;
};

// Zero roots: unrooted code. One root: rooted. Two: doubly rooted.
// Rooted kinds require a connected graph (DisconnectedError); all kinds
// respect the size guard.
CanonicalCode canonical_code(const FiniteGraph& g, std::span<const Vertex> roots,
                             const SizeGuard& guard = {});

CanonicalCode canonical_code(const FiniteGraph& g, const SizeGuard& guard = {});
CanonicalCode canonical_code(const RootedGraph& g, const SizeGuard& guard = {});
CanonicalCode canonical_code(const DoublyRootedGraph& g, const SizeGuard& guard = {});

bool are_isomorphic(const RootedGraph& a, const RootedGraph& b, const SizeGuard& guard = {});

// The canonical representative encoded by a code: roots are vertices 0
// (and 1 unless the roots coincide).
struct DecodedGraph {
    FiniteGraph graph;
    std::vector<Vertex> roots;
};

DecodedGraph decode(const CanonicalCode& code);

} // namespace unimod

#endif // UNIMOD_CANONICAL_HPP
