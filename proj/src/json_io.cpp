#include "dskit/json_io.hpp"

#include "dskit/errors.hpp"

namespace dskit::json_io {

namespace {

const json& field(const json& j, const char* key, const std::string& ptr) {
    if (!j.is_object()) throw InputError("expected an object", ptr);
    auto it = j.find(key);
    if (it == j.end()) throw InputError(std::string("missing field \"") + key + "\"", ptr + "/" + key);
    return *it;
}

long get_int(const json& j, const std::string& ptr) {
    if (!j.is_number_integer()) throw InputError("expected an integer", ptr);
    return j.get<long>();
}

const json& get_array(const json& j, const std::string& ptr) {
    if (!j.is_array()) throw InputError("expected an array", ptr);
    return j;
}

std::string at(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

// Re-raise errors from constructors with the document location attached.
template <class F>
auto located(const std::string& ptr, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const InputError& e) {
        if (!e.pointer().empty() && e.pointer().front() == '/') throw InputError(e.what(), ptr + e.pointer());
        throw InputError(e.what(), ptr);
    }
}

}  // namespace

void check_schema(const json& doc) {
    const json& s = field(doc, "schema", "");
    if (!s.is_string() || s.get<std::string>() != kSchema)
        throw InputError(std::string("schema must be \"") + kSchema + "\"", "/schema");
}

Scalar scalar_from_json(const json& j, const std::string& ptr) {
    if (j.is_number_integer()) return Scalar(j.get<long>());
    if (j.is_string()) return located(ptr, [&] { return Scalar::parse(j.get<std::string>()); });
    if (j.is_array()) {
        if (j.size() != 4) throw InputError("scalar array must be [re_num, re_den, im_num, im_den]", ptr);
        long v[4];
        for (std::size_t i = 0; i < 4; ++i) v[i] = get_int(j[i], at(ptr, i));
        if (v[1] == 0) throw InputError("zero denominator", at(ptr, 1));
        if (v[3] == 0) throw InputError("zero denominator", at(ptr, 3));
        mpq_class re(v[0], v[1]), im(v[2], v[3]);
        re.canonicalize();
        im.canonicalize();
        return Scalar(re, im);
    }
    throw InputError("expected a scalar", ptr);
}

json scalar_to_json(const Scalar& s) { return s.to_string(); }

Partition partition_from_json(const json& j, const std::string& ptr) {
    std::vector<int> parts;
    const json& a = get_array(j, ptr);
    for (std::size_t i = 0; i < a.size(); ++i) parts.push_back(static_cast<int>(get_int(a[i], at(ptr, i))));
    return located(ptr, [&] { return Partition(parts); });
}

OrbitSpec orbit_from_json(const json& j, const std::string& ptr) {
    const long n = get_int(field(j, "n", ptr), ptr + "/n");
    if (n < 1) throw InputError("n must be positive", ptr + "/n");
    const json& blocks = get_array(field(j, "blocks", ptr), ptr + "/blocks");
    std::vector<EigenBlock> out;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const std::string bp = at(ptr + "/blocks", i);
        out.push_back({scalar_from_json(field(blocks[i], "eig", bp), bp + "/eig"),
                       partition_from_json(field(blocks[i], "partition", bp), bp + "/partition")});
        if (out.back().jordan.empty()) throw InputError("empty partition", bp + "/partition");
    }
    return located(ptr, [&] { return OrbitSpec(static_cast<int>(n), std::move(out)); });
}

json orbit_to_json(const OrbitSpec& o) {
    json blocks = json::array();
    for (const auto& b : o.blocks()) blocks.push_back({{"eig", scalar_to_json(b.eigenvalue)}, {"partition", b.jordan.parts()}});
    return {{"n", o.n()}, {"blocks", blocks}};
}

LaurentMatrix laurent_from_json(const json& j, const std::string& ptr) {
    const long n = get_int(field(j, "n", ptr), ptr + "/n");
    if (n < 1) throw InputError("n must be positive", ptr + "/n");
    std::optional<int> trunc;
    if (auto it = j.find("trunc"); it != j.end() && !it->is_null())
        trunc = static_cast<int>(get_int(*it, ptr + "/trunc"));
    LaurentMatrix m(static_cast<std::size_t>(n), trunc);
    const json& terms = get_array(field(j, "terms", ptr), ptr + "/terms");
    for (std::size_t t = 0; t < terms.size(); ++t) {
        const std::string tp = at(ptr + "/terms", t);
        const int deg = static_cast<int>(get_int(field(terms[t], "deg", tp), tp + "/deg"));
        if (!m.known(deg)) throw InputError("term degree at or beyond trunc", tp + "/deg");
        const json& rows = get_array(field(terms[t], "entries", tp), tp + "/entries");
        if (rows.size() != static_cast<std::size_t>(n)) throw InputError("expected n rows", tp + "/entries");
        Matrix c(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
        for (std::size_t a = 0; a < rows.size(); ++a) {
            const std::string rp = at(tp + "/entries", a);
            const json& row = get_array(rows[a], rp);
            if (row.size() != static_cast<std::size_t>(n)) throw InputError("expected n entries", rp);
            for (std::size_t b = 0; b < row.size(); ++b) c(a, b) = scalar_from_json(row[b], at(rp, b));
        }
        m.add_term(deg, c);
    }
    return m;
}

json laurent_to_json(const LaurentMatrix& m) {
    json terms = json::array();
    for (const auto& [deg, c] : m.terms()) {
        json rows = json::array();
        for (std::size_t a = 0; a < c.rows(); ++a) {
            json row = json::array();
            for (std::size_t b = 0; b < c.cols(); ++b) row.push_back(scalar_to_json(c(a, b)));
            rows.push_back(row);
        }
        terms.push_back({{"deg", deg}, {"entries", rows}});
    }
    json out = {{"n", m.n()}, {"terms", terms}};
    out["trunc"] = m.trunc() ? json(*m.trunc()) : json(nullptr);
    return out;
}

UnramFormalType unram_from_json(const json& j, const std::string& ptr) {
    const json& blocks = get_array(field(j, "blocks", ptr), ptr + "/blocks");
    std::vector<UnramBlock> out;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const std::string bp = at(ptr + "/blocks", i);
        UnramBlock b;
        const json& q = get_array(field(blocks[i], "q", bp), bp + "/q");
        for (std::size_t k = 0; k < q.size(); ++k) b.q.push_back(scalar_from_json(q[k], at(bp + "/q", k)));
        b.dim = static_cast<int>(get_int(field(blocks[i], "dim", bp), bp + "/dim"));
        b.residue = orbit_from_json(field(blocks[i], "residue", bp), bp + "/residue");
        out.push_back(std::move(b));
    }
    return located(ptr, [&] { return UnramFormalType(std::move(out)); });
}

json int_vector_to_json(const IntVector& v) { return json(v); }

json def_vector_to_json(const DefVector& v) {
    json out = json::array();
    for (const auto& s : v) out.push_back(scalar_to_json(s));
    return out;
}

std::string rational_to_string(const mpq_class& q) { return dskit::to_string(q); }

}  // namespace dskit::json_io
