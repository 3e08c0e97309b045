#ifndef EWB_IO_HPP
#define EWB_IO_HPP

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ewb/effect_monoid.hpp"
#include "ewb/ortho.hpp"
#include "ewb/poset.hpp"
#include "ewb/qinterval.hpp"
#include "ewb/report.hpp"

namespace ewb {

enum class DocKind { Poset, Omp, EffectAlgebra, EffectMonoid, Map, RChain };

/// A map document names its endpoints; binding them to actual structures
/// happens at the point of use, not at parse time.
struct MapDocument {
    std::string name, from, to;
    std::vector<std::pair<std::string, std::string>> sends;
};

/// One parsed document. Parsing checks shape only (tokens, ranges,
/// duplicates); the law checkers decide validity. Only the fields for the
/// parsed kind are meaningful.
struct ParsedDocument {
    DocKind kind = DocKind::Poset;
    std::string name;
    std::vector<std::string> labels; // element labels, id = position
    RawPoset raw;                    // poset, omp (relation = closure of covers)
    std::vector<ElemId> perp;        // omp
    FinEffectAlgebra ea;             // effectalgebra
    FinEffectMonoid em;              // effectmonoid
    MapDocument map;
    RationalChain rchain;
};

/// Line-oriented grammar, '#' comments, whitespace-separated tokens:
///   poset NAME / elements l... / bottom l / top l / cover x y
///   omp NAME adds perp x y (mirrored; every element needs one)
///   effectalgebra NAME: elements, zero l, one l, sum x y z, perp x y
///     (sums with zero and commutative mirrors are implicit)
///   effectmonoid NAME adds mul x y z (products with 0 and 1 implicit,
///     every other ordered pair required)
///   map NAME FROM TO with send x y; rchain NAME with points p/q ...
/// Throws MalformedInput("line N: ...") naming the offending token;
/// duplicate definitions are rejected.
ParsedDocument parse_document(const std::string& text);

/// Canonical text: fixed section order, derived cover lines, one line per
/// unordered perp pair, sums without mirrors or zero, lines sorted within
/// each section. parse then serialize is the identity on its own output.
std::string serialize_document(const ParsedDocument& doc);

/// Reads the file and parses it; unreadable paths are MalformedInput.
ParsedDocument parse_file(const std::string& path);

/// Hasse diagram: cover edges only, bottom at the lowest rank, nodes in id
/// order. The ortho overlay adds one dashed pairing edge per complement pair.
std::string export_dot(const BoundedPoset& p, const std::string& name = "poset");
std::string export_dot(const OrthoPoset& p);

/// The command-line surface. Subcommands: validate, kalmbach, check-omp,
/// check-ea, check-em, action, factorize, decompose, enumerate, census,
/// counterexample. Exit codes: 0 pass, 1 law violation or classification
/// failure, 2 malformed input or usage error, 3 budget refusal.
int run_cli(const std::vector<std::string>& args, std::ostream& out);

} // namespace ewb

#endif
