#pragma once

// Domain specification files (JSON). Schemas are listed in README.md.

#include <stdexcept>
#include <string>
#include <vector>

#include "nullvar/domain.hpp"

namespace nullvar {

/// Malformed or unreadable specification text.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses one domain object. Throws ParseError on malformed input and
/// InvalidDomain when the described domain violates its invariants.
DomainSpec parseDomain(const std::string& text);
DomainSpec loadDomain(const std::string& path);

/// Inverse of parseDomain (spiky profiles are written with a, delta, deltaTilde).
std::string domainToJson(const DomainSpec& spec);

struct FamilyMember {
    std::string label;
    double parameter = 0.0;
    DomainSpec spec;
};

/// Parametric families for sweeps: "rectangleAspect", "starEpsilon",
/// "regularPolygon", "corpus" or an explicit "list".
std::vector<FamilyMember> parseFamily(const std::string& text);
std::vector<FamilyMember> loadFamily(const std::string& path);

std::string readFile(const std::string& path);

}  // namespace nullvar
