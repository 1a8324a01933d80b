#pragma once

// Text documents for every artifact kind. A document is a JSON object
// {"kind": ..., "format_version": 1, "payload": ...} with sorted keys and
// elements written as strings ("x", "*") or nested two-element arrays.

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "opencat/elements.hpp"
#include "opencat/fincat.hpp"
#include "opencat/openfun.hpp"
#include "opencat/opennat.hpp"

namespace opencat::harness {

inline constexpr int format_version = 1;

/// A law to evaluate on explicit instances. Which fields are used depends on
/// the law: pentagon takes four open functors, triangle two, unitor-nat one
/// transformation, assoc-nat three, interchange four, homcat three.
struct LawRequest {
    std::string law;
    std::vector<OpenFunctor> open_functors;
    std::vector<OpenNatTrans> open_nat_trans;
};

using Payload = std::variant<CategoryRef, Presheaf, FinFunctor, NatTrans, OpenFunctor, OpenNatTrans, LawRequest>;

struct Document {
    Payload payload;

    /// "category", "presheaf", "functor", "nattrans", "open_functor",
    /// "open_nat_trans" or "law_request".
    std::string kind() const;
};

std::string serialize(const FinCategory& c);
std::string serialize(const Presheaf& p);
std::string serialize(const FinFunctor& f);
std::string serialize(const NatTrans& t);
std::string serialize(const OpenFunctor& f);
std::string serialize(const OpenNatTrans& t);
std::string serialize(const LawRequest& r);
std::string serialize(const Document& d);

/// Throws Error(Parse) with line and column on malformed text and
/// Error(Malformed) on duplicate or dangling identifiers. Category axioms and
/// naturality are left to the validators.
Document parse(std::string_view text);

/// Reads and parses a file; Error(Parse) if it cannot be read.
Document parse_file(const std::string& path);

}  // namespace opencat::harness
