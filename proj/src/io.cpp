#include "l2v/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "l2v/errors.hpp"

namespace l2v {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what, const std::string& where) {
    throw ParseError(what, where);
}

const json& field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object()) fail("expected an object", where);
    auto it = j.find(key);
    if (it == j.end()) fail(std::string("missing field '") + key + "'", where);
    return *it;
}

size_t count_field(const json& j, const char* key, const std::string& where) {
    const json& v = field(j, key, where);
    if (!v.is_number_unsigned()) fail(std::string("field '") + key + "' must be a nonnegative integer", where);
    return static_cast<size_t>(v.get<unsigned long long>());
}

size_t dim_field(const json& j, const char* key, const std::string& where) {
    size_t n = count_field(j, key, where);
    if (n > 64) fail(std::string("field '") + key + "' is unreasonably large (max 64)", where);
    return n;
}

std::string str_field(const json& j, const char* key, const std::string& where) {
    const json& v = field(j, key, where);
    if (!v.is_string()) fail(std::string("field '") + key + "' must be a string", where);
    return v.get<std::string>();
}

Rat rat_value(const json& v, const std::string& where) {
    if (!v.is_string()) fail("rational values must be strings like \"-3/2\"", where);
    try {
        return rat_parse(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
        fail(std::string("bad rational '") + v.get<std::string>() + "': " + e.what(), where);
    }
}

json rat_json(const Rat& r) { return rat_str(r); }

json vec_json(const Vec& v) {
    json a = json::array();
    for (const auto& c : v) a.push_back(rat_json(c));
    return a;
}

Vec vec_value(const json& v, size_t dim, const std::string& where) {
    if (!v.is_array() || v.size() != dim)
        fail("expected an array of " + std::to_string(dim) + " rationals", where);
    Vec out = vec_zero(dim);
    for (size_t i = 0; i < dim; ++i)
        out[i] = rat_value(v[i], where + "[" + std::to_string(i + 1) + "]");
    return out;
}

json mat_json(const Mat& m) {
    json a = json::array();
    for (const auto& row : m) a.push_back(vec_json(row));
    return a;
}

Mat mat_value(const json& v, size_t rows, size_t cols, const std::string& where) {
    if (!v.is_array() || v.size() != rows)
        fail("expected a matrix with " + std::to_string(rows) + " rows", where);
    Mat out = mat_zero(rows, cols);
    for (size_t i = 0; i < rows; ++i)
        out[i] = vec_value(v[i], cols, where + " row " + std::to_string(i + 1));
    return out;
}

json tensor_json(const StructureTensor& t) {
    json entries = json::array();
    std::vector<size_t> idx(t.arity(), 0);
    const size_t total = t.entries.size();
    for (size_t flat = 0; flat < total; ++flat) {
        const Vec& v = t.entries[flat];
        if (!vec_is_zero(v)) {
            json at = json::array();
            for (size_t k : idx) at.push_back(k + 1);
            entries.push_back(json{{"at", at}, {"value", vec_json(v)}});
        }
        for (size_t pos = idx.size(); pos-- > 0;) {
            if (++idx[pos] < t.sources[pos].dim) break;
            idx[pos] = 0;
        }
    }
    return entries;
}

StructureTensor tensor_value(const json& v, std::vector<FinSpace> sources, FinSpace target,
                             const std::string& where) {
    StructureTensor t = StructureTensor::zero(std::move(sources), target);
    if (!v.is_array()) fail("expected an array of {at, value} entries", where);
    size_t count = 0;
    for (const auto& entry : v) {
        std::string ew = where + " entry " + std::to_string(++count);
        const json& at = field(entry, "at", ew);
        if (!at.is_array() || at.size() != t.arity())
            fail("'at' must list " + std::to_string(t.arity()) + " 1-based indices", ew);
        std::vector<size_t> idx(t.arity());
        for (size_t k = 0; k < t.arity(); ++k) {
            if (!at[k].is_number_unsigned() || at[k].get<unsigned long long>() == 0)
                fail("'at' indices are 1-based positive integers", ew);
            size_t i = static_cast<size_t>(at[k].get<unsigned long long>());
            if (i > t.sources[k].dim)
                fail("'at' index " + std::to_string(i) + " exceeds dimension " +
                         std::to_string(t.sources[k].dim),
                     ew);
            idx[k] = i - 1;
        }
        Vec& slot = t.at_mut(idx);
        if (!vec_is_zero(slot)) fail("duplicate 'at' tuple", ew);
        slot = vec_value(field(entry, "value", ew), target.dim, ew + " value");
    }
    return t;
}

template <class Tag>
json alt_json(const AltTensor<Tag>& a) {
    json entries = json::array();
    for (const auto& [idx, p] : a.comp) {
        json at = json::array();
        for (size_t k : idx) at.push_back(k + 1);
        entries.push_back(json{{"at", at}, {"coeff", p.str()}});
    }
    return entries;
}

template <class Tag>
AltTensor<Tag> alt_value(const json& v, size_t n, size_t deg, const std::string& where) {
    AltTensor<Tag> a(n, deg);
    if (!v.is_array()) fail("expected an array of {at, coeff} entries", where);
    size_t count = 0;
    for (const auto& entry : v) {
        std::string ew = where + " entry " + std::to_string(++count);
        const json& at = field(entry, "at", ew);
        if (!at.is_array() || at.size() != deg)
            fail("'at' must list " + std::to_string(deg) + " strictly increasing 1-based indices", ew);
        IdxTuple idx(deg);
        for (size_t k = 0; k < deg; ++k) {
            if (!at[k].is_number_unsigned() || at[k].get<unsigned long long>() == 0)
                fail("'at' indices are 1-based positive integers", ew);
            size_t i = static_cast<size_t>(at[k].get<unsigned long long>());
            if (i > n) fail("'at' index " + std::to_string(i) + " exceeds ambient dimension " + std::to_string(n), ew);
            if (k > 0 && i <= idx[k - 1] + 1) fail("'at' indices must be strictly increasing", ew);
            idx[k] = i - 1;
        }
        if (a.comp.count(idx)) fail("duplicate 'at' tuple", ew);
        std::string coeff = str_field(entry, "coeff", ew);
        Poly p(n);
        try {
            p = Poly::parse(n, coeff);
        } catch (const ParseError& e) {
            fail(std::string("bad coefficient: ") + e.what(), ew);
        }
        if (!p.is_zero()) a.add_term(idx, p);
    }
    return a;
}

// --- per-kind serializers -------------------------------------------------

json sh_json(const ShLeibniz2& a) {
    json j;
    j["kind"] = "sh-leibniz";
    j["dim_v1"] = a.c.v1.dim;
    j["dim_v0"] = a.c.v0.dim;
    j["d"] = mat_json(a.c.d.m);
    j["l2_00"] = tensor_json(a.l2_00);
    j["l2_01"] = tensor_json(a.l2_01);
    j["l2_10"] = tensor_json(a.l2_10);
    j["l3"] = tensor_json(a.l3);
    return j;
}

ShLeibniz2 sh_value(const json& j, const std::string& w) {
    size_t m = dim_field(j, "dim_v1", w);
    size_t n = dim_field(j, "dim_v0", w);
    ShLeibniz2 a = ShLeibniz2::zero(m, n, mat_value(field(j, "d", w), n, m, w + " d"));
    FinSpace v0 = a.c.v0, v1 = a.c.v1;
    a.l2_00 = tensor_value(field(j, "l2_00", w), {v0, v0}, v0, w + " l2_00");
    a.l2_01 = tensor_value(field(j, "l2_01", w), {v0, v1}, v1, w + " l2_01");
    a.l2_10 = tensor_value(field(j, "l2_10", w), {v1, v0}, v1, w + " l2_10");
    a.l3 = tensor_value(field(j, "l3", w), {v0, v0, v0}, v1, w + " l3");
    validate_shapes(a);
    return a;
}

json crossed_json(const CrossedModule& cm) {
    json j;
    j["kind"] = "crossed-module";
    j["dim_g"] = cm.g.space.dim;
    j["dim_h"] = cm.h.space.dim;
    j["g_bracket"] = tensor_json(cm.g.bracket);
    j["h_bracket"] = tensor_json(cm.h.bracket);
    j["mu"] = mat_json(cm.mu.m);
    j["left"] = tensor_json(cm.left);
    j["right"] = tensor_json(cm.right);
    return j;
}

CrossedModule crossed_value(const json& j, const std::string& w) {
    size_t dg = dim_field(j, "dim_g", w);
    size_t dh = dim_field(j, "dim_h", w);
    CrossedModule cm;
    cm.g = LeibnizAlgebra::zero(dg);
    cm.h = LeibnizAlgebra::zero(dh);
    FinSpace gs = cm.g.space, hs = cm.h.space;
    cm.g.bracket = tensor_value(field(j, "g_bracket", w), {gs, gs}, gs, w + " g_bracket");
    cm.h.bracket = tensor_value(field(j, "h_bracket", w), {hs, hs}, hs, w + " h_bracket");
    cm.mu = LinearMap{gs, hs, mat_value(field(j, "mu", w), dh, dg, w + " mu")};
    cm.left = tensor_value(field(j, "left", w), {hs, gs}, gs, w + " left");
    cm.right = tensor_value(field(j, "right", w), {gs, hs}, gs, w + " right");
    return cm;
}

json quad_json(const SkeletalQuadruple& q) {
    json j;
    j["kind"] = "skeletal-quadruple";
    j["dim_g"] = q.g.space.dim;
    j["dim_v"] = q.v.dim;
    j["bracket"] = tensor_json(q.g.bracket);
    j["left"] = tensor_json(q.left);
    j["right"] = tensor_json(q.right);
    j["phi"] = tensor_json(q.phi);
    return j;
}

SkeletalQuadruple quad_value(const json& j, const std::string& w) {
    size_t dg = dim_field(j, "dim_g", w);
    size_t dv = dim_field(j, "dim_v", w);
    SkeletalQuadruple q;
    q.g = LeibnizAlgebra::zero(dg);
    q.v = FinSpace{dv, "m"};
    FinSpace gs = q.g.space;
    q.g.bracket = tensor_value(field(j, "bracket", w), {gs, gs}, gs, w + " bracket");
    q.left = tensor_value(field(j, "left", w), {gs, q.v}, q.v, w + " left");
    q.right = tensor_value(field(j, "right", w), {q.v, gs}, q.v, w + " right");
    q.phi = tensor_value(field(j, "phi", w), {gs, gs, gs}, q.v, w + " phi");
    return q;
}

json endauto_json(const EndAutoFile& ea) {
    json j;
    j["kind"] = "end-automorphism";
    j["dim_v1"] = ea.complex.v1.dim;
    j["dim_v0"] = ea.complex.v0.dim;
    j["d"] = mat_json(ea.complex.d.m);
    j["f0"] = mat_json(ea.f.f0.m);
    j["f1"] = mat_json(ea.f.f1.m);
    j["f2"] = tensor_json(ea.f.f2);
    return j;
}

EndAutoFile endauto_value(const json& j, const std::string& w) {
    size_t m = dim_field(j, "dim_v1", w);
    size_t n = dim_field(j, "dim_v0", w);
    TwoTermComplex c = TwoTermComplex::make(m, n, mat_value(field(j, "d", w), n, m, w + " d"));
    EndDgla e = build_end(c);
    DglaAutomorphism f;
    f.f0 = LinearMap{e.deg0, e.deg0,
                     mat_value(field(j, "f0", w), e.deg0.dim, e.deg0.dim, w + " f0")};
    f.f1 = LinearMap{e.deg1, e.deg1,
                     mat_value(field(j, "f1", w), e.deg1.dim, e.deg1.dim, w + " f1")};
    f.f2 = tensor_value(field(j, "f2", w), {e.deg0, e.deg0}, e.deg1, w + " f2");
    return EndAutoFile{c, f};
}

json tca_json(const ExactTca& t) {
    json j;
    j["kind"] = "exact-tca";
    j["n"] = t.n;
    j["h"] = alt_json(t.h);
    return j;
}

ExactTca tca_value(const json& j, const std::string& w) {
    size_t n = dim_field(j, "n", w);
    return ExactTca::make(n, alt_value<FormTag>(field(j, "h", w), n, 3, w + " h"));
}

json tp_json(const TwistedPoisson& tp) {
    json j;
    j["kind"] = "twisted-poisson";
    j["n"] = tp.n;
    j["pi"] = alt_json(tp.pi);
    j["h"] = alt_json(tp.h);
    return j;
}

TwistedPoisson tp_value(const json& j, const std::string& w) {
    size_t n = dim_field(j, "n", w);
    return TwistedPoisson::make(n, alt_value<MvTag>(field(j, "pi", w), n, 2, w + " pi"),
                                alt_value<FormTag>(field(j, "h", w), n, 3, w + " h"));
}

json report_json(const VerifyReport& r) {
    json j;
    j["kind"] = "report";
    j["subject"] = r.subject;
    j["seed"] = r.seed;
    json checks = json::array();
    for (const auto& c : r.checks) {
        json cj;
        cj["name"] = c.name;
        cj["label"] = c.label;
        cj["pass"] = c.pass;
        cj["checked"] = c.checked;
        cj["failed"] = c.failed;
        json ws = json::array();
        for (const auto& wt : c.witnesses)
            ws.push_back(json{{"at", wt.at}, {"residual", wt.residual}});
        cj["witnesses"] = ws;
        checks.push_back(cj);
    }
    j["checks"] = checks;
    json notes = json::array();
    for (const auto& [name, value] : r.notes)
        notes.push_back(json{{"name", name}, {"value", value}});
    j["notes"] = notes;
    return j;
}

VerifyReport report_value(const json& j, const std::string& w) {
    VerifyReport r;
    r.subject = str_field(j, "subject", w);
    const json& seed = field(j, "seed", w);
    if (!seed.is_number_unsigned()) fail("field 'seed' must be a nonnegative integer", w);
    r.seed = seed.get<unsigned long>();
    const json& checks = field(j, "checks", w);
    if (!checks.is_array()) fail("field 'checks' must be an array", w);
    size_t count = 0;
    for (const auto& cj : checks) {
        std::string cw = w + " check " + std::to_string(++count);
        CheckResult& c = r.add(str_field(cj, "name", cw), str_field(cj, "label", cw));
        const json& pass = field(cj, "pass", cw);
        if (!pass.is_boolean()) fail("field 'pass' must be a boolean", cw);
        c.pass = pass.get<bool>();
        c.checked = count_field(cj, "checked", cw);
        c.failed = count_field(cj, "failed", cw);
        const json& ws = field(cj, "witnesses", cw);
        if (!ws.is_array()) fail("field 'witnesses' must be an array", cw);
        for (const auto& wj : ws)
            c.witnesses.push_back(
                Witness{str_field(wj, "at", cw), str_field(wj, "residual", cw)});
        if (c.pass && c.failed > 0) fail("passing check reports failures", cw);
        if (!c.pass && c.failed == 0) fail("failing check reports no failures", cw);
    }
    const json& notes = field(j, "notes", w);
    if (!notes.is_array()) fail("field 'notes' must be an array", w);
    size_t ncount = 0;
    for (const auto& nj : notes) {
        std::string nw = w + " note " + std::to_string(++ncount);
        r.note(str_field(nj, "name", nw), str_field(nj, "value", nw));
    }
    return r;
}

} // namespace

std::string structure_kind(const Structure& s) {
    switch (s.index()) {
        case 0: return "sh-leibniz";
        case 1: return "crossed-module";
        case 2: return "skeletal-quadruple";
        case 3: return "end-automorphism";
        case 4: return "exact-tca";
        case 5: return "twisted-poisson";
        default: return "report";
    }
}

Structure parse_structure(const std::string& text, const std::string& where) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(std::string("invalid JSON: ") + e.what(), where);
    }
    if (!j.is_object()) fail("top level must be a JSON object", where);
    std::string kind = str_field(j, "kind", where);
    try {
        if (kind == "sh-leibniz") return sh_value(j, where);
        if (kind == "crossed-module") return crossed_value(j, where);
        if (kind == "skeletal-quadruple") return quad_value(j, where);
        if (kind == "end-automorphism") return endauto_value(j, where);
        if (kind == "exact-tca") return tca_value(j, where);
        if (kind == "twisted-poisson") return tp_value(j, where);
        if (kind == "report") return report_value(j, where);
    } catch (const ShapeError& e) {
        fail(std::string("inconsistent shapes: ") + e.what(), where);
    }
    fail("unknown kind '" + kind + "'", where);
}

Structure load_structure(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot read file", path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_structure(buf.str(), path);
}

std::string serialize(const Structure& s) {
    json j;
    switch (s.index()) {
        case 0: j = sh_json(std::get<0>(s)); break;
        case 1: j = crossed_json(std::get<1>(s)); break;
        case 2: j = quad_json(std::get<2>(s)); break;
        case 3: j = endauto_json(std::get<3>(s)); break;
        case 4: j = tca_json(std::get<4>(s)); break;
        case 5: j = tp_json(std::get<5>(s)); break;
        default: j = report_json(std::get<6>(s)); break;
    }
    return j.dump(2) + "\n";
}

void save_structure(const Structure& s, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("cannot write file", path);
    out << serialize(s);
}

} // namespace l2v
