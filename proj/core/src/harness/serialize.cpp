#include "opencat/harness/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace opencat::harness {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------- writing

json element_json(const Element& x)
{
    switch (x.kind()) {
    case Element::Kind::Star:
        return "*";
    case Element::Kind::Atom:
        return std::string(x.label());
    case Element::Kind::Pair:
        return json::array({element_json(x.first()), element_json(x.second())});
    }
    return nullptr;
}

std::vector<Element> sorted(std::span<const Element> xs)
{
    std::vector<Element> out(xs.begin(), xs.end());
    std::sort(out.begin(), out.end());
    return out;
}

json map_json(const ElementMap& m)
{
    json out = json::array();
    for (const auto& [x, y] : m)
        out.push_back(json::array({element_json(x), element_json(y)}));
    return out;
}

json category_json(const FinCategory& c)
{
    json objects = json::array();
    for (const auto& o : c.objects())
        objects.push_back({{"id", o.str()}, {"identity", c.identity(o).str()}});
    json arrows = json::array();
    for (const auto& f : c.arrows()) {
        if (c.is_identity(f))
            continue;
        arrows.push_back({{"id", f.str()}, {"src", c.src(f).str()}, {"tgt", c.tgt(f).str()}});
    }
    // Unit laws that hold are implied; everything else is written out.
    json compose = json::array();
    for (const auto& [key, gf] : c.composition_table()) {
        const auto& [g, f] = key;
        if (c.is_identity(g) && gf == f && c.tgt(f) == c.src(g))
            continue;
        if (c.is_identity(f) && gf == g && c.tgt(f) == c.src(g))
            continue;
        compose.push_back({{"g", g.str()}, {"f", f.str()}, {"result", gf.str()}});
    }
    return {{"objects", objects}, {"arrows", arrows}, {"compose", compose}};
}

json presheaf_json(const Presheaf& p)
{
    json fibers = json::array();
    for (const auto& c : p.base().objects()) {
        json xs = json::array();
        for (const auto& x : sorted(p.fiber(c)))
            xs.push_back(element_json(x));
        fibers.push_back({{"object", c.str()}, {"elements", xs}});
    }
    json actions = json::array();
    for (const auto& f : p.base().arrows())
        if (const ElementMap* m = p.action(f))
            actions.push_back({{"arrow", f.str()}, {"map", map_json(*m)}});
    return {{"base", category_json(p.base())}, {"fibers", fibers}, {"actions", actions}};
}

json functor_json(const FinFunctor& f)
{
    json objects = json::array();
    for (const auto& [a, b] : f.on_objects())
        objects.push_back({{"from", a.str()}, {"to", b.str()}});
    json arrows = json::array();
    for (const auto& [a, b] : f.on_arrows())
        arrows.push_back({{"from", a.str()}, {"to", b.str()}});
    return {{"dom", category_json(f.dom())},
            {"cod", category_json(f.cod())},
            {"on_objects", objects},
            {"on_arrows", arrows}};
}

json nattrans_json(const NatTrans& t)
{
    json components = json::array();
    for (const auto& [c, a] : t.components())
        components.push_back({{"object", c.str()}, {"arrow", a.str()}});
    return {{"dom", functor_json(t.dom())}, {"cod", functor_json(t.cod())}, {"components", components}};
}

json open_functor_json(const OpenFunctor& f)
{
    const Presheaf& alpha = f.alpha();
    json objects = json::array();
    for (const auto& c : f.dom().objects())
        for (const auto& x : sorted(alpha.fiber(c)))
            if (const ObjId* d = f.beta().find(element_object(c, x)))
                objects.push_back({{"object", c.str()}, {"element", element_json(x)}, {"image", d->str()}});
    json arrows = json::array();
    for (const auto& a : f.dom().arrows())
        for (const auto& x : sorted(alpha.fiber(f.dom().tgt(a))))
            if (const ArrId* g = f.beta().find(element_arrow(a, x)))
                arrows.push_back({{"arrow", a.str()}, {"element", element_json(x)}, {"image", g->str()}});
    json p = presheaf_json(alpha);
    return {{"dom", p["base"]},
            {"cod", category_json(f.cod())},
            {"alpha", {{"fibers", p["fibers"]}, {"actions", p["actions"]}}},
            {"beta", {{"objects", objects}, {"arrows", arrows}}}};
}

json open_nat_json(const OpenNatTrans& t)
{
    json alpha = json::array();
    for (const auto& [c, m] : t.alpha().components())
        alpha.push_back({{"object", c.str()}, {"map", map_json(m)}});
    json beta = json::array();
    const OpenFunctor& G = t.cod();
    for (const auto& c : G.dom().objects())
        for (const auto& y : sorted(G.alpha().fiber(c)))
            if (const ArrId* a = t.beta().find(element_object(c, y)))
                beta.push_back({{"object", c.str()}, {"element", element_json(y)}, {"arrow", a->str()}});
    return {{"dom", open_functor_json(t.dom())},
            {"cod", open_functor_json(t.cod())},
            {"alpha", alpha},
            {"beta", beta}};
}

json law_request_json(const LawRequest& r)
{
    json fs = json::array();
    for (const auto& f : r.open_functors)
        fs.push_back(open_functor_json(f));
    json ts = json::array();
    for (const auto& t : r.open_nat_trans)
        ts.push_back(open_nat_json(t));
    return {{"law", r.law}, {"open_functors", fs}, {"open_nat_trans", ts}};
}

std::string document(const std::string& kind, json payload)
{
    json doc = {{"kind", kind}, {"format_version", format_version}, {"payload", std::move(payload)}};
    return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------- reading

[[noreturn]] void fail(const std::string& path, const std::string& what)
{
    throw Error(ErrorKind::Parse, path + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& path)
{
    if (!j.is_object())
        fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end())
        fail(path, std::string("missing field '") + key + "'");
    return *it;
}

const json& array_field(const json& j, const char* key, const std::string& path)
{
    const json& v = field(j, key, path);
    if (!v.is_array())
        fail(path + "." + key, "expected an array");
    return v;
}

std::string string_field(const json& j, const char* key, const std::string& path)
{
    const json& v = field(j, key, path);
    if (!v.is_string())
        fail(path + "." + key, "expected a string");
    return v.get<std::string>();
}

std::string item(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

Element read_element(const json& j, const std::string& path)
{
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "*")
            return Element::star();
        if (!Element::valid_atom_label(s))
            fail(path, "'" + s + "' is not a valid atom label");
        return Element::atom(std::move(s));
    }
    if (j.is_array() && j.size() == 2)
        return Element::pair(read_element(j[0], path + "[0]"), read_element(j[1], path + "[1]"));
    fail(path, "an element is a string or a two-element array");
}

ElementMap read_map(const json& j, const std::string& path)
{
    if (!j.is_array())
        fail(path, "expected an array of [from, to] pairs");
    ElementMap m;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const json& e = j[i];
        if (!e.is_array() || e.size() != 2)
            fail(item(path, i), "expected a [from, to] pair");
        Element from = read_element(e[0], item(path, i) + "[0]");
        if (!m.emplace(from, read_element(e[1], item(path, i) + "[1]")).second)
            fail(item(path, i), "element " + from.encode() + " is mapped twice");
    }
    return m;
}

template <class F>
auto semantic(const std::string& path, F&& build)
{
    try {
        return build();
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Parse)
            throw;
        throw Error(e.kind(), path + ": " + e.what());
    }
}

CategoryRef read_category(const json& j, const std::string& path)
{
    FinCategory::Builder b;
    const json& objects = array_field(j, "objects", path);
    for (std::size_t i = 0; i < objects.size(); ++i) {
        std::string p = item(path + ".objects", i);
        b.object(ObjId(string_field(objects[i], "id", p)), ArrId(string_field(objects[i], "identity", p)));
    }
    const json& arrows = array_field(j, "arrows", path);
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        std::string p = item(path + ".arrows", i);
        b.arrow(ArrId(string_field(arrows[i], "id", p)), ObjId(string_field(arrows[i], "src", p)),
                ObjId(string_field(arrows[i], "tgt", p)));
    }
    const json& compose = array_field(j, "compose", path);
    std::set<ComposeKey> seen;
    for (std::size_t i = 0; i < compose.size(); ++i) {
        std::string p = item(path + ".compose", i);
        ArrId g(string_field(compose[i], "g", p));
        ArrId f(string_field(compose[i], "f", p));
        if (!seen.emplace(g, f).second)
            throw Error(ErrorKind::Malformed, p + ": composite of (" + g.str() + ", " + f.str() + ") given twice");
        b.compose(g, f, ArrId(string_field(compose[i], "result", p)));
    }
    return semantic(path, [&] { return b.build_ref(); });
}

// Reuses `known` when the category has the same content, so that artifacts
// parsed from one document share their categories.
CategoryRef intern(CategoryRef c, std::vector<CategoryRef>& known)
{
    for (const auto& k : known)
        if (*k == *c)
            return k;
    known.push_back(c);
    return c;
}

Presheaf read_presheaf_body(const json& j, CategoryRef base, const std::string& path)
{
    std::map<ObjId, std::vector<Element>> fibers;
    const json& fs = array_field(j, "fibers", path);
    for (std::size_t i = 0; i < fs.size(); ++i) {
        std::string p = item(path + ".fibers", i);
        ObjId c(string_field(fs[i], "object", p));
        const json& xs = array_field(fs[i], "elements", p);
        if (fibers.contains(c))
            throw Error(ErrorKind::Malformed, p + ": fiber over '" + c.str() + "' given twice");
        auto& fiber = fibers[c];
        for (std::size_t k = 0; k < xs.size(); ++k)
            fiber.push_back(read_element(xs[k], item(p + ".elements", k)));
    }
    std::map<ArrId, ElementMap> actions;
    const json& as = array_field(j, "actions", path);
    for (std::size_t i = 0; i < as.size(); ++i) {
        std::string p = item(path + ".actions", i);
        ArrId f(string_field(as[i], "arrow", p));
        if (!actions.emplace(f, read_map(field(as[i], "map", p), p + ".map")).second)
            throw Error(ErrorKind::Malformed, p + ": action of '" + f.str() + "' given twice");
    }
    return semantic(path, [&] { return Presheaf(std::move(base), std::move(fibers), std::move(actions)); });
}

template <class From, class To>
std::map<From, To> read_table(const json& j, const char* key, const std::string& path)
{
    std::map<From, To> out;
    const json& rows = array_field(j, key, path);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::string p = item(path + "." + key, i);
        From from(string_field(rows[i], "from", p));
        if (!out.emplace(from, To(string_field(rows[i], "to", p))).second)
            throw Error(ErrorKind::Malformed, p + ": '" + from.str() + "' mapped twice");
    }
    return out;
}

FinFunctor read_functor(const json& j, const std::string& path, std::vector<CategoryRef>& known)
{
    CategoryRef dom = intern(read_category(field(j, "dom", path), path + ".dom"), known);
    CategoryRef cod = intern(read_category(field(j, "cod", path), path + ".cod"), known);
    return FinFunctor(std::move(dom), std::move(cod), read_table<ObjId, ObjId>(j, "on_objects", path),
                      read_table<ArrId, ArrId>(j, "on_arrows", path));
}

NatTrans read_nattrans(const json& j, const std::string& path, std::vector<CategoryRef>& known)
{
    FinFunctor dom = read_functor(field(j, "dom", path), path + ".dom", known);
    FinFunctor cod = read_functor(field(j, "cod", path), path + ".cod", known);
    std::map<ObjId, ArrId> components;
    const json& rows = array_field(j, "components", path);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::string p = item(path + ".components", i);
        ObjId c(string_field(rows[i], "object", p));
        if (!components.emplace(c, ArrId(string_field(rows[i], "arrow", p))).second)
            throw Error(ErrorKind::Malformed, p + ": component at '" + c.str() + "' given twice");
    }
    return NatTrans(std::move(dom), std::move(cod), std::move(components));
}

OpenFunctor read_open_functor(const json& j, const std::string& path, std::vector<CategoryRef>& known)
{
    CategoryRef dom = intern(read_category(field(j, "dom", path), path + ".dom"), known);
    CategoryRef cod = intern(read_category(field(j, "cod", path), path + ".cod"), known);
    Presheaf alpha = read_presheaf_body(field(j, "alpha", path), dom, path + ".alpha");
    const json& beta = field(j, "beta", path);
    std::string bp = path + ".beta";
    std::map<ObjId, ObjId> on_obj;
    const json& objects = array_field(beta, "objects", bp);
    for (std::size_t i = 0; i < objects.size(); ++i) {
        std::string p = item(bp + ".objects", i);
        ObjId key = element_object(ObjId(string_field(objects[i], "object", p)),
                                   read_element(field(objects[i], "element", p), p + ".element"));
        if (!on_obj.emplace(key, ObjId(string_field(objects[i], "image", p))).second)
            throw Error(ErrorKind::Malformed, p + ": image of " + key.str() + " given twice");
    }
    std::map<ArrId, ArrId> on_arr;
    const json& arrows = array_field(beta, "arrows", bp);
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        std::string p = item(bp + ".arrows", i);
        ArrId key = element_arrow(ArrId(string_field(arrows[i], "arrow", p)),
                                  read_element(field(arrows[i], "element", p), p + ".element"));
        if (!on_arr.emplace(key, ArrId(string_field(arrows[i], "image", p))).second)
            throw Error(ErrorKind::Malformed, p + ": image of " + key.str() + " given twice");
    }
    return make_open_functor(std::move(alpha), std::move(cod), std::move(on_obj), std::move(on_arr));
}

OpenNatTrans read_open_nat(const json& j, const std::string& path, std::vector<CategoryRef>& known)
{
    OpenFunctor dom = read_open_functor(field(j, "dom", path), path + ".dom", known);
    OpenFunctor cod = read_open_functor(field(j, "cod", path), path + ".cod", known);
    std::map<ObjId, ElementMap> alpha;
    const json& as = array_field(j, "alpha", path);
    for (std::size_t i = 0; i < as.size(); ++i) {
        std::string p = item(path + ".alpha", i);
        ObjId c(string_field(as[i], "object", p));
        if (!alpha.emplace(c, read_map(field(as[i], "map", p), p + ".map")).second)
            throw Error(ErrorKind::Malformed, p + ": component at '" + c.str() + "' given twice");
    }
    std::map<ObjId, ArrId> beta;
    const json& bs = array_field(j, "beta", path);
    for (std::size_t i = 0; i < bs.size(); ++i) {
        std::string p = item(path + ".beta", i);
        ObjId key = element_object(ObjId(string_field(bs[i], "object", p)),
                                   read_element(field(bs[i], "element", p), p + ".element"));
        if (!beta.emplace(key, ArrId(string_field(bs[i], "arrow", p))).second)
            throw Error(ErrorKind::Malformed, p + ": component at " + key.str() + " given twice");
    }
    PresheafMorphism a(dom.alpha(), cod.alpha(), std::move(alpha));
    return semantic(path, [&] { return OpenNatTrans(dom, cod, std::move(a), std::move(beta)); });
}

LawRequest read_law_request(const json& j, const std::string& path, std::vector<CategoryRef>& known)
{
    LawRequest r;
    r.law = string_field(j, "law", path);
    const json& fs = array_field(j, "open_functors", path);
    for (std::size_t i = 0; i < fs.size(); ++i)
        r.open_functors.push_back(read_open_functor(fs[i], item(path + ".open_functors", i), known));
    const json& ts = array_field(j, "open_nat_trans", path);
    for (std::size_t i = 0; i < ts.size(); ++i)
        r.open_nat_trans.push_back(read_open_nat(ts[i], item(path + ".open_nat_trans", i), known));
    return r;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset)
{
    offset = std::min(offset, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

}  // namespace

std::string Document::kind() const
{
    static const char* const names[] = {"category",     "presheaf",       "functor",    "nattrans",
                                        "open_functor", "open_nat_trans", "law_request"};
    return names[payload.index()];
}

std::string serialize(const FinCategory& c) { return document("category", category_json(c)); }
std::string serialize(const Presheaf& p) { return document("presheaf", presheaf_json(p)); }
std::string serialize(const FinFunctor& f) { return document("functor", functor_json(f)); }
std::string serialize(const NatTrans& t) { return document("nattrans", nattrans_json(t)); }
std::string serialize(const OpenFunctor& f) { return document("open_functor", open_functor_json(f)); }
std::string serialize(const OpenNatTrans& t) { return document("open_nat_trans", open_nat_json(t)); }
std::string serialize(const LawRequest& r) { return document("law_request", law_request_json(r)); }

std::string serialize(const Document& d)
{
    return std::visit(
        [](const auto& v) {
            if constexpr (std::is_same_v<std::decay_t<decltype(v)>, CategoryRef>)
                return serialize(*v);
            else
                return serialize(v);
        },
        d.payload);
}

Document parse(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
        std::string what = e.what();
        if (auto pos = what.find("syntax error"); pos != std::string::npos)
            what = what.substr(pos);
        throw Error(ErrorKind::Parse,
                    "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
    }
    const std::string kind = string_field(doc, "kind", "document");
    const json& version = field(doc, "format_version", "document");
    if (!version.is_number_integer() || version.get<int>() != format_version)
        fail("document.format_version", "unsupported format version " + version.dump());
    const json& payload = field(doc, "payload", "document");
    std::vector<CategoryRef> known;
    if (kind == "category")
        return {read_category(payload, "payload")};
    if (kind == "presheaf")
        return {read_presheaf_body(payload, read_category(field(payload, "base", "payload"), "payload.base"),
                                   "payload")};
    if (kind == "functor")
        return {read_functor(payload, "payload", known)};
    if (kind == "nattrans")
        return {read_nattrans(payload, "payload", known)};
    if (kind == "open_functor")
        return {read_open_functor(payload, "payload", known)};
    if (kind == "open_nat_trans")
        return {read_open_nat(payload, "payload", known)};
    if (kind == "law_request")
        return {read_law_request(payload, "payload", known)};
    fail("document.kind", "unknown kind '" + kind + "'");
}

Document parse_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::Parse, "cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

}  // namespace opencat::harness
