#include "dskit/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "dskit/coxeter.hpp"
#include "dskit/errors.hpp"
#include "dskit/formal.hpp"
#include "dskit/fuchsian.hpp"
#include "dskit/json_io.hpp"
#include "dskit/unramified.hpp"

namespace dskit::cli {

using json = nlohmann::json;
namespace jio = json_io;

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return os.str();
}

namespace {

struct Options {
    std::vector<std::string> flags;
    std::size_t budget = SearchOptions{}.budget;

    bool has(const std::string& f) const { return std::find(flags.begin(), flags.end(), f) != flags.end(); }
    SearchOptions search() const { return SearchOptions{budget, 2}; }
};

struct Outcome {
    int code = kDecided;
    json result = json::object();
    std::vector<std::string> notes;
};

json read_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
    jio::check_schema(doc);
    return doc;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

std::vector<OrbitSpec> orbits_of(const json& doc) {
    const auto it = doc.find("orbits");
    if (it == doc.end() || !it->is_array()) throw InputError("expected an array of orbits", "/orbits");
    std::vector<OrbitSpec> orbits;
    for (std::size_t i = 0; i < it->size(); ++i) orbits.push_back(jio::orbit_from_json((*it)[i], "/orbits/" + std::to_string(i)));
    if (orbits.empty()) throw InputError("at least one orbit is required", "/orbits");
    return orbits;
}

std::optional<std::vector<std::vector<Scalar>>> seqs_of(const json& doc) {
    const auto it = doc.find("factor_seqs");
    if (it == doc.end() || it->is_null()) return std::nullopt;
    if (!it->is_array()) throw InputError("expected an array", "/factor_seqs");
    std::vector<std::vector<Scalar>> seqs;
    for (std::size_t i = 0; i < it->size(); ++i) {
        const std::string p = "/factor_seqs/" + std::to_string(i);
        if (!(*it)[i].is_array()) throw InputError("expected an array", p);
        std::vector<Scalar> s;
        for (std::size_t k = 0; k < (*it)[i].size(); ++k) s.push_back(jio::scalar_from_json((*it)[i][k], p + "/" + std::to_string(k)));
        seqs.push_back(std::move(s));
    }
    return seqs;
}

std::vector<UnramFormalType> types_of(const json& doc) {
    const auto it = doc.find("types");
    if (it == doc.end() || !it->is_array()) throw InputError("expected an array of formal types", "/types");
    std::vector<UnramFormalType> types;
    for (std::size_t i = 0; i < it->size(); ++i) types.push_back(jio::unram_from_json((*it)[i], "/types/" + std::to_string(i)));
    if (types.empty()) throw InputError("at least one formal type is required", "/types");
    return types;
}

json quiver_json(const Quiver& q, const DimVector& alpha, const DefVector& lambda) {
    return {{"vertices", q.vertices()}, {"alpha", jio::int_vector_to_json(alpha)}, {"lambda", jio::def_vector_to_json(lambda)}};
}

json vectors_json(const std::vector<IntVector>& vs) {
    json out = json::array();
    for (const auto& v : vs) out.push_back(jio::int_vector_to_json(v));
    return out;
}

void directed_note(const Quiver& q, const DimVector& alpha, Outcome& o) {
    const CartanMatrix directed = cartan_of_quiver(q, EdgeCounting::Directed);
    o.notes.push_back("directed-cartan: p(alpha) = " + jio::rational_to_string(p_value(directed, alpha)) +
                      " under directed edge counting (decision uses undirected counts)");
}

Outcome fuchsian(const json& doc, const Options& opt, const std::string& emit, bool rigidity_only) {
    Outcome o;
    const FuchsianVerdict v = fuchsian_decide(orbits_of(doc), seqs_of(doc), opt.search());
    if (!emit.empty())
        write_file(emit, to_dot(v.data.quiver, quiver_labels(v.data.quiver, v.data.alpha, v.data.lambda), "cb"));
    if (!rigidity_only) o.result["exists"] = v.exists;
    o.result["rigidity"] = to_string(v.rigidity);
    o.result["alpha_class"] = to_string(v.sigma.alpha_class);
    o.result["lambda_orthogonal"] = v.sigma.lambda_orthogonal;
    o.result["p_alpha"] = v.sigma.p_alpha;
    o.result["quiver"] = quiver_json(v.data.quiver, v.data.alpha, v.data.lambda);
    if (!v.sigma.witness.empty()) o.result["decomposition"] = vectors_json(v.sigma.witness);
    o.notes.push_back("search states: " + std::to_string(v.sigma.nodes));
    if (v.sigma.alpha_class == RootClass::RealRoot && v.sigma.lambda_orthogonal)
        o.notes.push_back(v.sigma.real_shortcut ? "real-root criterion agrees"
                                                : "real-root criterion not evaluated (budget)");
    if (opt.has("directed-cartan")) directed_note(v.data.quiver, v.data.alpha, o);
    return o;
}

Outcome unramified(const json& doc, const Options& opt, const std::string& emit) {
    Outcome o;
    const bool strict = opt.has("ell-gt-2");
    const UnramVerdict v = unramified_decide(types_of(doc), strict, opt.search());
    if (!emit.empty())
        write_file(emit, to_dot(v.data.quiver, quiver_labels(v.data.quiver, v.data.alpha, v.data.lambda), "hiroe"));
    const auto& chosen = strict ? v.exists_gt2 : v.exists_ge2;
    o.result["exists"] = *chosen;
    o.result["decomposition_rule"] = strict ? "ell-gt-2" : "ell-ge-2";
    o.result["alpha_class"] = to_string(v.alpha_class);
    o.result["lambda_orthogonal"] = v.lambda_orthogonal;
    o.result["p_alpha"] = v.p_alpha;
    o.result["quiver"] = quiver_json(v.data.quiver, v.data.alpha, v.data.lambda);
    const auto& w = strict ? v.witness_gt2 : v.witness_ge2;
    if (!w.empty()) o.result["decomposition"] = vectors_json(w);
    if (v.data.order.front() != 0)
        o.notes.push_back("type " + std::to_string(v.data.order.front()) + " used as the irregular base type 0");
    const auto& other = strict ? v.exists_ge2 : v.exists_gt2;
    if (!other)
        o.notes.push_back(std::string("the ") + (strict ? "ell-ge-2" : "ell-gt-2") + " reading ran out of budget");
    else if (*other != *chosen)
        o.notes.push_back(std::string("flag-sensitive: ell-ge-2 gives ") + (*v.exists_ge2 ? "true" : "false") +
                          ", ell-gt-2 gives " + (*v.exists_gt2 ? "true" : "false"));
    o.notes.push_back("search states: " + std::to_string(v.nodes));
    if (opt.has("directed-cartan")) directed_note(v.data.quiver, v.data.alpha, o);
    return o;
}

Outcome count_rank2(const json& doc) {
    Outcome o;
    const auto t = doc.find("type");
    if (t == doc.end()) throw InputError("missing field \"type\"", "/type");
    const auto ob = doc.find("orbit");
    if (ob == doc.end()) throw InputError("missing field \"orbit\"", "/orbit");
    o.result["count"] = count_rank2_moduli(jio::unram_from_json(*t, "/type"), jio::orbit_from_json(*ob, "/orbit"));
    return o;
}

Outcome coxeter(int n, int r, const std::string& p0, const json& orbit_doc) {
    Outcome o;
    std::vector<Scalar> p(static_cast<std::size_t>(std::max(r, 0)) + 1, Scalar(0));
    try {
        p.front() = Scalar::parse(p0);
    } catch (const InputError& e) {
        throw InputError(e.what(), "/p0");
    }
    p.back() += Scalar(1);
    if (r == 0) throw InputError("r must be positive", "/r");
    const CoxeterFormalType f = coxeter_canonical_type(n, r, p);
    const OrbitSpec orbit = jio::orbit_from_json(orbit_doc, "/orbit");
    const CoxeterDecision d = coxeter_ds_decide(f, orbit);
    o.result["exists"] = d.exists;
    o.result["trace_condition"] = d.trace_condition;
    o.result["in_filter"] = d.in_filter;
    o.result["generator"] = jio::orbit_to_json(d.generator);
    o.result["slope"] = jio::rational_to_string(f.slope());
    return o;
}

Outcome coxeter_rigidity(int n, int r, const json& orbit_doc) {
    Outcome o;
    const OrbitSpec orbit = jio::orbit_from_json(orbit_doc, "/orbit");
    o.result["rigid"] = is_rigid_coxeter_gl(n, r, orbit);
    o.result["h1"] = h1_dimension(n, r, orbit);
    o.result["generator"] = jio::orbit_to_json(ds_generator(r, CharPolySpec({{Scalar(0), n}})));
    o.notes.push_back("cohomological rigidity of the Coxeter connection");
    return o;
}

Outcome table(const std::string& type, int rank, int r, const Options& opt) {
    Outcome o;
    SimpleTypeQuery q{parse_family(type), rank, r};
    const bool conj = opt.has("table-conjunction");
    const bool rigid = rigid_table_simple_type(q, conj);
    o.result["rigid"] = rigid;
    o.result["coxeter_number"] = coxeter_number(q.family, rank);
    if ((q.family == SimpleFamily::B || q.family == SimpleFamily::D) && rigid_table_simple_type(q, !conj) != rigid)
        o.notes.push_back("flag-sensitive: the table-conjunction reading gives the opposite answer");
    return o;
}

Outcome slope(const json& doc) {
    Outcome o;
    const SlopeResult s = certify_slope(FormalConnection{jio::laurent_from_json(doc, "")});
    o.result["kind"] = to_string(s.kind);
    if (s.value) o.result["slope"] = jio::rational_to_string(*s.value);
    if (s.witness) o.result["parahoric"] = s.witness->j();
    o.notes.push_back("standard parahorics scanned: " + std::to_string(s.parahorics_scanned));
    if (s.kind == SlopeKind::UpperBoundOnly) {
        o.code = kInconclusive;
        o.notes.push_back("no fundamental stratum in this trivialization; value is an upper bound");
    }
    if (s.kind == SlopeKind::RegularSingularCandidate) o.notes.push_back("no negative powers; regular singularity not certified");
    return o;
}

Outcome normalize(const json& doc, int order) {
    Outcome o;
    o.result["gauge"] = jio::laurent_to_json(regsing_normalize(FormalConnection{jio::laurent_from_json(doc, "")}, order));
    return o;
}

void emit_error(std::ostream& err, const std::string& command, const std::string& what, const std::string& pointer) {
    json e = {{"schema", jio::kSchema}, {"command", command}, {"error", what}};
    if (!pointer.empty()) e["pointer"] = pointer;
    err << e.dump(2) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Deligne-Simpson decisions, rigidity and formal-connection analysis", "ds_kit"};
    app.fallthrough();
    app.require_subcommand(1);
    Options opt;
    app.add_option("--flag", opt.flags, "ell-ge-2 | ell-gt-2 | table-conjunction | directed-cartan")
        ->check(CLI::IsMember({"ell-ge-2", "ell-gt-2", "table-conjunction", "directed-cartan"}));
    app.add_option("--budget", opt.budget, "search-state budget")->check(CLI::PositiveNumber);

    std::string input, emit, orbit, matrix, output, type, p0 = "0";
    int n = 0, r = 0, order = 0, rank = 0;

    auto* fuchs = app.add_subcommand("fuchsian-ds", "irreducible Fuchsian connection with given residue orbits");
    fuchs->add_option("--input", input)->required();
    fuchs->add_option("--emit-quiver", emit);
    auto* unram = app.add_subcommand("unramified-ds", "irreducible connection with unramified formal types");
    unram->add_option("--input", input)->required();
    unram->add_option("--emit-quiver", emit);
    auto* cox = app.add_subcommand("coxeter-ds", "Coxeter connection with slope r/n and residue orbit at infinity");
    cox->add_option("--n", n)->required();
    cox->add_option("--r", r)->required();
    cox->add_option("--p0", p0);
    cox->add_option("--orbit", orbit)->required();
    auto* rig = app.add_subcommand("rigidity", "Fuchsian rigidity (--input) or Coxeter rigidity (--n --r --orbit)");
    rig->add_option("--input", input);
    rig->add_option("--n", n);
    rig->add_option("--r", r);
    rig->add_option("--orbit", orbit);
    auto* tab = app.add_subcommand("rigidity-table", "rigid homogeneous Coxeter connections by root system");
    tab->add_option("--type", type)->required();
    tab->add_option("--rank", rank);
    tab->add_option("--r", r)->required();
    auto* slo = app.add_subcommand("slope", "certify the slope of a formal connection");
    slo->add_option("--matrix", matrix)->required();
    auto* nrs = app.add_subcommand("normalize-regsing", "gauge a nonresonant regular singular connection to its residue");
    nrs->add_option("--matrix", matrix)->required();
    nrs->add_option("--order", order)->required();
    auto* c2 = app.add_subcommand("count-rank2", "moduli count for a rank-2 slope-1 type and one orbit");
    c2->add_option("--input", input)->required();
    auto* qe = app.add_subcommand("quiver-export", "DOT for the quiver of an input document");
    qe->add_option("--input", input)->required();
    qe->add_option("--output", output);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        return kInputError;
    }
    const std::string command = app.get_subcommands().front()->get_name();
    if (opt.has("ell-ge-2") && opt.has("ell-gt-2")) {
        emit_error(err, command, "ell-ge-2 and ell-gt-2 are exclusive", "");
        return kInputError;
    }

    json inputs = {{"flags", opt.flags}, {"budget", opt.budget}};
    Outcome o;
    try {
        if (command == "fuchsian-ds" || command == "unramified-ds" || command == "count-rank2" ||
            command == "quiver-export" || (command == "rigidity" && !input.empty())) {
            if (command == "rigidity" && (*rig->get_option("--orbit") || *rig->get_option("--n")))
                throw InputError("rigidity takes either --input or --n/--r/--orbit");
            const json doc = read_document(input);
            inputs["input"] = doc;
            if (command == "fuchsian-ds")
                o = fuchsian(doc, opt, emit, false);
            else if (command == "rigidity")
                o = fuchsian(doc, opt, "", true);
            else if (command == "unramified-ds")
                o = unramified(doc, opt, emit);
            else if (command == "count-rank2")
                o = count_rank2(doc);
            else {
                std::string dot;
                if (doc.contains("orbits")) {
                    const CBData d = build_cb_data(orbits_of(doc), seqs_of(doc));
                    dot = to_dot(d.quiver, quiver_labels(d.quiver, d.alpha, d.lambda), "cb");
                } else if (doc.contains("types")) {
                    const HiroeData h = build_hiroe_data(types_of(doc));
                    dot = to_dot(h.quiver, quiver_labels(h.quiver, h.alpha, h.lambda), "hiroe");
                } else {
                    dot = to_dot(build_base_quiver(jio::unram_from_json(doc, "")), {}, "base");
                }
                if (output.empty()) {
                    out << dot;
                    return kDecided;
                }
                write_file(output, dot);
                o.result["dot_file"] = output;
            }
        } else if (command == "rigidity") {
            if (orbit.empty() || !*rig->get_option("--n") || !*rig->get_option("--r"))
                throw InputError("rigidity needs --input, or --n, --r and --orbit");
            const json doc = read_document(orbit);
            inputs["orbit"] = doc;
            inputs["n"] = n;
            inputs["r"] = r;
            o = coxeter_rigidity(n, r, doc);
        } else if (command == "coxeter-ds") {
            const json doc = read_document(orbit);
            inputs["orbit"] = doc;
            inputs["n"] = n;
            inputs["r"] = r;
            inputs["p0"] = p0;
            o = coxeter(n, r, p0, doc);
        } else if (command == "rigidity-table") {
            inputs["type"] = type;
            inputs["rank"] = rank;
            inputs["r"] = r;
            o = table(type, rank, r, opt);
        } else if (command == "slope") {
            const json doc = read_document(matrix);
            inputs["matrix"] = doc;
            o = slope(doc);
        } else if (command == "normalize-regsing") {
            const json doc = read_document(matrix);
            inputs["matrix"] = doc;
            inputs["order"] = order;
            o = normalize(doc, order);
        }
    } catch (const InputError& e) {
        emit_error(err, command, e.what(), e.pointer());
        return kInputError;
    } catch (const BudgetExceeded& e) {
        o = Outcome{};
        o.code = kInconclusive;
        o.result["decided"] = false;
        o.result["reason"] = "budget exceeded";
        o.notes.push_back(std::string(e.what()) + " (budget " + std::to_string(e.budget()) + ")");
    } catch (const std::exception& e) {
        emit_error(err, command, std::string("internal error: ") + e.what(), "");
        return 1;
    }

    json verdict = {{"schema", jio::kSchema},
                    {"command", command},
                    {"inputs_digest", sha256_hex(command + "\n" + inputs.dump())},
                    {"result", o.result},
                    {"notes", o.notes}};
    out << verdict.dump(2) << "\n";
    return o.code;
}

}  // namespace dskit::cli
