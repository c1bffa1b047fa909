#include "nullvar/spec_io.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "nullvar/corpus.hpp"
#include "nullvar/counterexample.hpp"

namespace nullvar {

using nlohmann::json;

namespace {

json parseJson(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

template <class T>
T field(const json& j, const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw ParseError(std::string("field \"") + key + "\" has the wrong type");
    }
}

template <class T>
T fieldOr(const json& j, const char* key, T fallback) {
    return j.contains(key) ? field<T>(j, key) : fallback;
}

RadialProfile profileFrom(const json& j) {
    RadialProfile F;
    for (const auto& m : field<std::vector<std::vector<double>>>(j, "modes")) {
        if (m.size() != 2) throw ParseError("each mode is a pair [cos, sin]");
        F.p.push_back(m[0]);
        F.q.push_back(m[1]);
    }
    if (F.modes() > RadialProfile::kMaxModes) throw ParseError("too many modes");
    return F;
}

DomainSpec domainFrom(const json& j) {
    if (!j.is_object()) throw ParseError("a domain is a JSON object");
    const auto type = field<std::string>(j, "type");
    if (type == "ball") return makeBall(fieldOr(j, "dim", 2), fieldOr(j, "radius", 1.0));
    if (type == "rectangle") return makeRectangle(field<std::vector<double>>(j, "halfSides"));
    if (type == "polygon") {
        std::vector<Vec2> v;
        for (const auto& p : field<std::vector<std::vector<double>>>(j, "vertices")) {
            if (p.size() != 2) throw ParseError("polygon vertices are pairs [x, y]");
            v.push_back({p[0], p[1]});
        }
        return makeConvexPolygon(std::move(v));
    }
    if (type == "regularPolygon")
        return makeRegularPolygon(field<int>(j, "halfCount"), fieldOr(j, "radius", 1.0), fieldOr(j, "rotation", 0.0));
    if (type == "star") return makeStarShaped(profileFrom(j), field<double>(j, "epsilon"), fieldOr(j, "scale", 1.0));
    if (type == "spiky") {
        const double dt = fieldOr(j, "deltaTilde", 0.2);
        // without delta, the first δ̃/4, δ̃/8, ... with l(j11) > 0
        const ZetaProfile z = j.contains("delta") ? counterex::buildZeta(dt, field<double>(j, "delta"))
                                                  : counterex::chooseDelta(dt);
        return makeSpiky(field<int>(j, "n"), z, fieldOr(j, "scale", 1.0));
    }
    if (type == "intervalUnion") return makeIntervalUnion(field<std::vector<double>>(j, "centers"));
    if (type == "revolution") return makeRevolutionBody(field<double>(j, "alpha"));
    throw ParseError("unknown domain type \"" + type + "\"");
}

json domainJson(const DomainSpec& spec) {
    return std::visit(
        [](const auto& s) -> json {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, shape::Ball>) return {{"type", "ball"}, {"dim", s.dim}, {"radius", s.radius}};
            if constexpr (std::is_same_v<T, shape::Rectangle>) return {{"type", "rectangle"}, {"halfSides", s.halfSides}};
            if constexpr (std::is_same_v<T, shape::ConvexPolygon>) {
                json v = json::array();
                for (Vec2 p : s.vertices) v.push_back({p.x, p.y});
                return {{"type", "polygon"}, {"vertices", v}};
            }
            if constexpr (std::is_same_v<T, shape::StarShaped>) {
                json m = json::array();
                for (int i = 1; i <= s.profile.modes(); ++i) m.push_back({s.profile.cosCoeff(i), s.profile.sinCoeff(i)});
                return {{"type", "star"}, {"modes", m}, {"epsilon", s.epsilon}, {"scale", s.scale}};
            }
            if constexpr (std::is_same_v<T, shape::Spiky>)
                return {{"type", "spiky"},   {"n", s.n},       {"deltaTilde", s.zeta.deltaTilde},
                        {"delta", s.zeta.delta}, {"a", s.zeta.a}, {"scale", s.scale}};
            if constexpr (std::is_same_v<T, shape::IntervalUnion>) return {{"type", "intervalUnion"}, {"centers", s.centers}};
            if constexpr (std::is_same_v<T, shape::RevolutionBody>) return {{"type", "revolution"}, {"alpha", s.alpha}};
        },
        spec);
}

std::vector<double> linspace(const json& j) {
    const double from = field<double>(j, "from"), to = field<double>(j, "to");
    const int steps = field<int>(j, "steps");
    if (steps < 1) throw ParseError("\"steps\" must be positive");
    std::vector<double> out;
    for (int i = 0; i < steps; ++i) out.push_back(steps == 1 ? from : from + (to - from) * i / (steps - 1));
    return out;
}

std::string fmt(double x) {
    std::ostringstream s;
    s.precision(6);
    s << x;
    return s.str();
}

}  // namespace

std::string readFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

DomainSpec parseDomain(const std::string& text) { return domainFrom(parseJson(text)); }

DomainSpec loadDomain(const std::string& path) { return parseDomain(readFile(path)); }

std::string domainToJson(const DomainSpec& spec) { return domainJson(spec).dump(); }

std::vector<FamilyMember> parseFamily(const std::string& text) {
    const json j = parseJson(text);
    const auto family = field<std::string>(j, "family");
    std::vector<FamilyMember> out;
    if (family == "rectangleAspect") {
        // [−a/2, a/2] × [−1/2, 1/2]
        for (double a : linspace(j)) out.push_back({"rectangle a=" + fmt(a), a, makeRectangle({0.5 * a, 0.5})});
    } else if (family == "starEpsilon") {
        const RadialProfile F = profileFrom(j);
        for (double e : linspace(j)) out.push_back({"star eps=" + fmt(e), e, makeStarShaped(F, e)});
    } else if (family == "regularPolygon") {
        for (int h = field<int>(j, "from"); h <= field<int>(j, "to"); ++h)
            out.push_back({"regular " + std::to_string(2 * h) + "-gon", double(2 * h), makeRegularPolygon(h, 1.0)});
    } else if (family == "corpus") {
        const auto c = makeCorpus(fieldOr<std::uint64_t>(j, "seed", 1), fieldOr(j, "polygons", 10), fieldOr(j, "stars", 10));
        for (std::size_t i = 0; i < c.polygons.size(); ++i)
            out.push_back({"polygon " + std::to_string(i), double(i), c.polygons[i]});
        for (std::size_t i = 0; i < c.stars.size(); ++i) out.push_back({"star " + std::to_string(i), double(i), c.stars[i]});
    } else if (family == "list") {
        int i = 0;
        for (const auto& d : field<json>(j, "domains")) {
            auto spec = domainFrom(d);
            out.push_back({fieldOr<std::string>(d, "label", typeName(spec) + " " + std::to_string(i)), double(i), spec});
            ++i;
        }
    } else {
        throw ParseError("unknown family \"" + family + "\"");
    }
    return out;
}

std::vector<FamilyMember> loadFamily(const std::string& path) { return parseFamily(readFile(path)); }

}  // namespace nullvar
