#include "pierce/io.hpp"

#include <algorithm>
#include <fstream>

namespace pierce {

using json = nlohmann::ordered_json;

namespace {

FieldSpec field_from(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "Q") return FieldSpec{};
        throw UsageError("unknown field spec '" + j.get<std::string>() + "'");
    }
    if (j.is_object() && j.contains("Fp")) {
        long p = j.at("Fp").get<long>();
        if (p < 2) throw UsageError("field characteristic must be a prime >= 2");
        for (long q = 2; q * q <= p; ++q)
            if (p % q == 0) throw UsageError(std::to_string(p) + " is not prime");
        return FieldSpec{p};
    }
    throw UsageError("field spec must be \"Q\" or {\"Fp\": p}");
}

json field_to(const FieldSpec& f) {
    if (f.is_rational()) return json("Q");
    return json{{"Fp", f.p}};
}

Mat mat_from_triples_json(const json& j, long rows, long cols, const FieldSpec& f) {
    std::vector<Mat::Triple> ts;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3) throw UsageError("matrix triple must be [r,c,value]");
        long r = t[0].get<long>(), c = t[1].get<long>();
        if (r < 0 || r >= rows || c < 0 || c >= cols)
            throw UsageError("matrix triple out of range");
        ts.push_back({r, c, Scalar::parse(t[2].get<std::string>(), f)});
    }
    return Mat::from_triples(rows, cols, f, std::move(ts));
}

}  // namespace

SpecDocument parse_spec(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw UsageError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
        throw UsageError("spec document must be an object with a \"kind\"");
    std::string kind = j.at("kind").get<std::string>();
    static const std::vector<std::string> kinds{"algebra", "module", "idempotent", "group-action",
                                                "context-job"};
    if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end())
        throw UsageError("unknown spec kind '" + kind + "'");
    return SpecDocument{kind, std::move(j)};
}

SpecDocument load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open file " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_spec(text);
}

AlgP algebra_from_doc(const SpecDocument& doc) {
    if (doc.kind != "algebra") throw UsageError("expected an algebra document");
    const json& j = doc.raw;
    FieldSpec f = field_from(j.at("field"));
    long dim = j.at("dim").get<long>();
    if (dim < 0) throw UsageError("algebra dim must be >= 0");
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    std::vector<Algebra::ProdEntry> prods(dim * dim);
    for (const auto& t : j.at("constants")) {
        if (!t.is_array() || t.size() != 4)
            throw UsageError("structure constant must be [i,j,k,value]");
        long i = t[0].get<long>(), jj = t[1].get<long>(), k = t[2].get<long>();
        if (i < 0 || i >= dim || jj < 0 || jj >= dim || k < 0 || k >= dim)
            throw UsageError("structure constant index out of range");
        Scalar v = Scalar::parse(t[3].get<std::string>(), f);
        if (!v.is_zero()) prods[i * dim + jj].push_back({k, v});
    }
    for (auto& e : prods)
        std::sort(e.begin(), e.end(), [](auto& a, auto& b) { return a.first < b.first; });
    Vec unit;
    for (const auto& u : j.at("unit")) unit.push_back(Scalar::parse(u.get<std::string>(), f));
    if ((long)unit.size() != dim) throw UsageError("unit vector length mismatch");
    auto alg = std::make_shared<Algebra>(f, dim, labels, std::move(prods), std::move(unit));
    auto rep = validate_algebra(*alg);
    if (!rep.ok) throw ValidationError("algebra invalid: " + rep.violations.front());
    return alg;
}

RightModule module_from_doc(const SpecDocument& doc, const AlgP& A) {
    if (doc.kind != "module") throw UsageError("expected a module document");
    const json& j = doc.raw;
    long dim = j.at("dim").get<long>();
    const json& acts = j.at("actions");
    if ((long)acts.size() != A->dim())
        throw UsageError("module needs one action matrix per algebra basis element");
    RightModule m{A, dim, {}, {}};
    for (const auto& a : acts) m.rho.push_back(mat_from_triples_json(a, dim, dim, A->field()));
    auto rep = validate_right_module(m);
    if (!rep.ok) throw ValidationError("module invalid: " + rep.violations.front());
    return m;
}

Idempotent idempotent_from_doc(const SpecDocument& doc, const AlgP& A) {
    if (doc.kind != "idempotent") throw UsageError("expected an idempotent document");
    Vec v;
    for (const auto& c : doc.raw.at("coeffs"))
        v.push_back(Scalar::parse(c.get<std::string>(), A->field()));
    if ((long)v.size() != A->dim()) throw UsageError("idempotent coefficient length mismatch");
    return make_idempotent(*A, v);
}

GroupAction action_from_doc(const SpecDocument& doc, const AlgP& S) {
    if (doc.kind != "group-action") throw UsageError("expected a group-action document");
    const json& j = doc.raw;
    long order = j.at("order").get<long>();
    std::vector<std::vector<long>> table = j.at("table").get<std::vector<std::vector<long>>>();
    if ((long)table.size() != order) throw UsageError("group table size mismatch");
    FiniteGroup G = make_group(std::move(table));
    GroupAction act{G, S, {}};
    for (const auto& m : j.at("matrices"))
        act.mats.push_back(mat_from_triples_json(m, S->dim(), S->dim(), S->field()));
    auto rep = validate_action(act);
    if (!rep.ok) throw ValidationError("group action invalid: " + rep.violations.front());
    return act;
}

JobParams job_from_doc(const SpecDocument& doc) {
    if (doc.kind != "context-job") throw UsageError("expected a context-job document");
    JobParams p;
    const json& j = doc.raw;
    if (j.contains("cutoff")) p.cutoff = j.at("cutoff").get<long>();
    if (j.contains("bar_cap")) p.bar_cap = j.at("bar_cap").get<long>();
    if (j.contains("resolution_cap")) p.resolution_cap = j.at("resolution_cap").get<long>();
    return p;
}

std::string emit_algebra(const Algebra& a, const std::string& name) {
    json j;
    j["kind"] = "algebra";
    if (!name.empty()) j["name"] = name;
    j["field"] = field_to(a.field());
    j["dim"] = a.dim();
    j["labels"] = a.labels();
    json unit = json::array();
    for (const auto& u : a.unit()) unit.push_back(u.str());
    j["unit"] = unit;
    json cons = json::array();
    for (long i = 0; i < a.dim(); ++i)
        for (long jj = 0; jj < a.dim(); ++jj)
            for (const auto& [k, v] : a.basis_product(i, jj))
                cons.push_back(json::array({i, jj, k, v.str()}));
    j["constants"] = cons;
    return j.dump(2) + "\n";
}

namespace {

json mat_to_triples_json(const Mat& m) {
    json arr = json::array();
    m.for_nonzero([&](long r, long c, const Scalar& v) {
        arr.push_back(json::array({r, c, v.str()}));
    });
    return arr;
}

}  // namespace

std::string emit_module(const RightModule& m, const std::string& name) {
    json j;
    j["kind"] = "module";
    if (!name.empty()) j["name"] = name;
    j["dim"] = m.dim;
    json acts = json::array();
    for (const auto& r : m.rho) acts.push_back(mat_to_triples_json(r));
    j["actions"] = acts;
    return j.dump(2) + "\n";
}

std::string emit_idempotent(const Vec& v, const std::string& name) {
    json j;
    j["kind"] = "idempotent";
    if (!name.empty()) j["name"] = name;
    json c = json::array();
    for (const auto& x : v) c.push_back(x.str());
    j["coeffs"] = c;
    return j.dump(2) + "\n";
}

std::string emit_action(const GroupAction& act, const std::string& name) {
    json j;
    j["kind"] = "group-action";
    if (!name.empty()) j["name"] = name;
    j["order"] = act.G.order;
    j["table"] = act.G.table;
    json mats = json::array();
    for (const auto& m : act.mats) mats.push_back(mat_to_triples_json(m));
    j["matrices"] = mats;
    return j.dump(2) + "\n";
}

std::string emit_job(const JobParams& p) {
    json j;
    j["kind"] = "context-job";
    j["cutoff"] = p.cutoff;
    j["bar_cap"] = p.bar_cap;
    j["resolution_cap"] = p.resolution_cap;
    return j.dump(2) + "\n";
}

std::string report_to_json(const Report& r) {
    json j;
    j["command"] = r.command;
    j["cutoff"] = r.cutoff;
    std::vector<Check> sorted = r.checks;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const Check& a, const Check& b) { return a.name < b.name; });
    json arr = json::array();
    for (const auto& c : sorted) {
        json cj;
        cj["name"] = c.name;
        cj["status"] = c.status;
        json data;
        for (const auto& [k, v] : c.data) data[k] = v;
        cj["data"] = data;
        arr.push_back(cj);
    }
    j["checks"] = arr;
    j["passed"] = r.all_passed();
    j["wall_ms"] = r.wall_ms;
    return j.dump(2) + "\n";
}

}  // namespace pierce
