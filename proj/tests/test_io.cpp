#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "pierce/corpus.hpp"
#include "pierce/io.hpp"

using namespace pierce;

namespace {

std::string fixture_dir() {
    // tests run from the build tree; fixtures live in the source tree
    for (const char* p : {"fixtures", "../fixtures", "../../fixtures"})
        if (std::filesystem::exists(p)) return p;
    return "fixtures";
}

}  // namespace

TEST_CASE("algebra round trip") {
    auto A = corpus::qx3();
    std::string text = emit_algebra(*A, "qx3");
    AlgP back = algebra_from_doc(parse_spec(text));
    CHECK(back->dim() == A->dim());
    std::string text2 = emit_algebra(*back, "qx3");
    CHECK(text == text2);  // parse -> emit -> parse is stable
    for (long i = 0; i < A->dim(); ++i)
        for (long j = 0; j < A->dim(); ++j)
            CHECK(A->basis_product(i, j) == back->basis_product(i, j));
}

TEST_CASE("parse errors carry precise causes") {
    CHECK_THROWS_AS(parse_spec("not json"), UsageError);
    CHECK_THROWS_AS(parse_spec("{\"kind\":\"nope\"}"), UsageError);
    // a denominator that collides with the characteristic
    std::string bad = R"({"kind":"algebra","field":{"Fp":3},"dim":1,
        "labels":["1"],"unit":["1"],"constants":[[0,0,0,"1/3"]]})";
    CHECK_THROWS_AS(algebra_from_doc(parse_spec(bad)), UsageError);
    // an associativity failure is reported with the offending triple
    std::string assoc = R"({"kind":"algebra","field":"Q","dim":3,
        "labels":["a","b","c"],"unit":["1","0","0"],
        "constants":[[0,0,0,"1"],[0,1,1,"1"],[1,0,1,"1"],[0,2,2,"1"],[2,0,2,"1"],
                     [1,1,2,"1"],[1,2,1,"1"],[2,1,2,"1"]]})";
    try {
        algebra_from_doc(parse_spec(assoc));
        CHECK(false);
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("associativity") != std::string::npos);
    }
}

TEST_CASE("module and idempotent documents validate against their algebra") {
    auto A = corpus::dual_numbers();
    RightModule s = corpus::dual_simple();
    RightModule back = module_from_doc(parse_spec(emit_module(s)), A);
    CHECK(back.dim == 1);
    // an action violating the structure constants is rejected
    std::string bad = R"({"kind":"module","dim":1,"actions":[[[0,0,"1"]],[[0,0,"1"]]]})";
    CHECK_THROWS_AS(module_from_doc(parse_spec(bad), A), ValidationError);

    Vec e = vec_zero(2, A->field());
    e[0] = Scalar(1, A->field());
    Idempotent idem = idempotent_from_doc(parse_spec(emit_idempotent(e)), A);
    CHECK(idem.v == e);
    std::string notidem = R"({"kind":"idempotent","coeffs":["0","1"]})";
    CHECK_THROWS_AS(idempotent_from_doc(parse_spec(notidem), A), ValidationError);
}

TEST_CASE("group action documents") {
    GroupAction act = corpus::z2_on_qx3();
    GroupAction back = action_from_doc(parse_spec(emit_action(act)), corpus::qx3());
    CHECK(back.G.order == 2);
    CHECK(back.mats[1] == act.mats[1]);
}

TEST_CASE("job parameters") {
    JobParams p = job_from_doc(parse_spec(emit_job(JobParams{4, 1000, 500})));
    CHECK(p.cutoff == 4);
    CHECK(p.bar_cap == 1000);
    CHECK(p.resolution_cap == 500);
}

TEST_CASE("every shipped fixture parses and validates") {
    std::string dir = fixture_dir();
    REQUIRE(std::filesystem::exists(dir));
    long count = 0;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.path().extension() != ".json") continue;
        ++count;
        SpecDocument doc = load_spec_file(entry.path().string());
        CAPTURE(entry.path().string());
        if (doc.kind == "algebra") {
            AlgP a = algebra_from_doc(doc);  // validates internally
            CHECK(a->dim() >= 0);
        } else if (doc.kind == "module") {
            // shipped module fixtures are over their documented algebras
            std::string name = entry.path().filename().string();
            if (name == "simple-dual.json")
                CHECK(module_from_doc(doc, corpus::dual_numbers()).dim == 1);
            if (name == "middle-qx3.json")
                CHECK(module_from_doc(doc, corpus::qx3()).dim == 2);
        } else if (doc.kind == "idempotent") {
            std::string name = entry.path().filename().string();
            if (name == "e11-m2q.json") idempotent_from_doc(doc, corpus::m2q());
            if (name == "e11-ut2.json" || name == "e22-ut2.json")
                idempotent_from_doc(doc, corpus::ut2());
            if (name == "e1-a2path.json") idempotent_from_doc(doc, corpus::a2path());
        } else if (doc.kind == "group-action") {
            std::string name = entry.path().filename().string();
            if (name == "action-z2-qx3.json") action_from_doc(doc, corpus::qx3());
            if (name == "action-z3-q3.json") action_from_doc(doc, corpus::q3());
            if (name == "action-z2-qsqrt2.json") action_from_doc(doc, corpus::qsqrt2());
        } else if (doc.kind == "context-job") {
            job_from_doc(doc);
        }
    }
    CHECK(count >= 20);
}

TEST_CASE("fixtures agree with the built-in corpus") {
    std::string dir = fixture_dir();
    AlgP dual = algebra_from_doc(load_spec_file(dir + "/dual-numbers.json"));
    auto ref = corpus::dual_numbers();
    CHECK(dual->dim() == ref->dim());
    for (long i = 0; i < 2; ++i)
        for (long j = 0; j < 2; ++j) CHECK(dual->basis_product(i, j) == ref->basis_product(i, j));
    AlgP sg = algebra_from_doc(load_spec_file(dir + "/sg-q3-z3.json"));
    CHECK(sg->dim() == 9);
}

TEST_CASE("reports serialize deterministically with sorted checks") {
    Report r;
    r.command = "demo";
    r.checks.push_back(Check::make("z-last", true));
    r.checks.push_back(Check::make("a-first", true).with("dims", "[1,0]"));
    std::string s1 = report_to_json(r);
    std::string s2 = report_to_json(r);
    CHECK(s1 == s2);
    CHECK(s1.find("a-first") < s1.find("z-last"));
    CHECK(r.all_passed());
    r.checks.push_back(Check::make("bad", false));
    CHECK_FALSE(r.all_passed());
}
