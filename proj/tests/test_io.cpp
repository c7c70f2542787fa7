#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>

#include "l2v/builtin.hpp"
#include "l2v/errors.hpp"
#include "l2v/io.hpp"

using namespace l2v;
namespace bi = l2v::builtin;

namespace {

// serialize must be a fixed point of parse . serialize.
void expect_round_trip(const Structure& s, const std::string& kind) {
    CHECK(structure_kind(s) == kind);
    std::string text = serialize(s);
    Structure back = parse_structure(text, "mem");
    CHECK(structure_kind(back) == kind);
    CHECK(serialize(back) == text);
}

EndAutoFile identity_auto() {
    TwoTermComplex c = TwoTermComplex::make(1, 2, mat_zero(2, 1));
    EndDgla e = build_end(c);
    DglaAutomorphism f;
    f.f0 = LinearMap{e.deg0, e.deg0, mat_identity(e.deg0.dim)};
    f.f1 = LinearMap{e.deg1, e.deg1, mat_identity(e.deg1.dim)};
    f.f2 = StructureTensor::zero({e.deg0, e.deg0}, e.deg1);
    return EndAutoFile{c, f};
}

const std::string kMinimalSh = R"({
  "kind": "sh-leibniz",
  "dim_v1": 1,
  "dim_v0": 1,
  "d": [["0"]],
  "l2_00": [],
  "l2_01": [],
  "l2_10": [],
  "l3": []
})";

} // namespace

TEST_CASE("every structure kind round-trips byte for byte") {
    expect_round_trip(bi::skeletal_l3(), "sh-leibniz");
    expect_round_trip(bi::dg_nilpotent(), "sh-leibniz");
    expect_round_trip(bi::sh_from_algebra(bi::nonabelian_lie2()), "sh-leibniz");

    expect_round_trip(bi::adjoint_crossed(bi::heisenberg3()), "crossed-module");
    expect_round_trip(bi::crossed_zero_actions(), "crossed-module");

    expect_round_trip(skeletal_to_quadruple(bi::skeletal_l3()), "skeletal-quadruple");

    expect_round_trip(identity_auto(), "end-automorphism");

    expect_round_trip(bi::tca_r3(), "exact-tca");
    expect_round_trip(bi::tca_r4(), "exact-tca");

    expect_round_trip(bi::tp_r5(), "twisted-poisson");
    expect_round_trip(bi::tp_bad(), "twisted-poisson");
}

TEST_CASE("reports round-trip, including witnesses, notes and seed") {
    VerifyReport pass = check_leibniz(bi::heisenberg3());
    REQUIRE(pass.ok());
    expect_round_trip(pass, "report");

    VerifyReport fail = check_leibniz(bi::broken_pair());
    REQUIRE_FALSE(fail.ok());
    REQUIRE_FALSE(fail.checks.front().witnesses.empty());
    fail.seed = 424242;
    fail.note("context", "unit test");
    expect_round_trip(fail, "report");

    // Parsed reports carry the same verdicts.
    Structure back = parse_structure(serialize(fail), "mem");
    const VerifyReport& r = std::get<VerifyReport>(back);
    CHECK_FALSE(r.ok());
    CHECK(r.seed == 424242);
    REQUIRE(r.notes.size() == 1);
    CHECK(r.notes[0].first == "context");
    const CheckResult* c = r.find("leibniz");
    REQUIRE(c != nullptr);
    CHECK(c->witnesses[0].at == "(e1,e1,e1)");
}

TEST_CASE("parsed structures are semantically usable") {
    Structure t = parse_structure(serialize(bi::tca_r3()), "mem");
    const ExactTca& tca = std::get<ExactTca>(t);
    CHECK(tca.n == 3);
    CHECK(tca.h == bi::tca_r3().h);
    CHECK(check_tca_axioms(tca, coordinate_sections(3)).ok());

    Structure p = parse_structure(serialize(bi::tp_bad()), "mem");
    const TwistedPoisson& tp = std::get<TwistedPoisson>(p);
    CHECK(tp.pi == bi::tp_bad().pi);
    CHECK_FALSE(check_twisted_poisson(tp).ok());

    Structure q = parse_structure(serialize(skeletal_to_quadruple(bi::skeletal_l3())), "mem");
    CHECK(std::get<SkeletalQuadruple>(q) == skeletal_to_quadruple(bi::skeletal_l3()));
}

TEST_CASE("entry order in the file does not matter; output is canonical") {
    std::string shuffled = R"({
      "kind": "exact-tca",
      "n": 4,
      "h": [
        {"at": [2, 3, 4], "coeff": "5"},
        {"at": [1, 2, 3], "coeff": "x1 - 1"}
      ]
    })";
    PolyForm h = form_monomial(4, {1, 2, 3}, Poly::constant(4, Rat(5))) +
                 form_monomial(4, {0, 1, 2}, Poly::var(4, 0) - Poly::constant(4, Rat(1)));
    std::string canonical = serialize(ExactTca::make(4, h));
    CHECK(serialize(parse_structure(shuffled, "mem")) == canonical);
    CHECK(canonical.find("\"x1 - 1\"") != std::string::npos);

    // Multilinear map entries may also arrive in any order.
    std::string sh = R"({
      "kind": "sh-leibniz",
      "dim_v1": 1,
      "dim_v0": 2,
      "d": [["0"], ["0"]],
      "l2_00": [
        {"at": [2, 1], "value": ["0", "1"]},
        {"at": [1, 2], "value": ["0", "-1"]}
      ],
      "l2_01": [],
      "l2_10": [],
      "l3": []
    })";
    Structure s = parse_structure(sh, "mem");
    std::string text = serialize(s);
    CHECK(serialize(parse_structure(text, "mem")) == text);
    CHECK(text.find("\"at\"") != std::string::npos);
}

TEST_CASE("malformed input is rejected with a parse error") {
    auto reject = [](const std::string& text) {
        CHECK_THROWS_AS(parse_structure(text, "mem"), ParseError);
    };

    reject("not json at all");
    reject("[]");
    reject("{}");
    reject(R"({"kind": "no-such-kind"})");
    reject(R"({"kind": "sh-leibniz", "dim_v1": 1})");
    reject(R"({"kind": "sh-leibniz", "dim_v1": 65, "dim_v0": 1,
               "d": [], "l2_00": [], "l2_01": [], "l2_10": [], "l3": []})");
    reject(R"({"kind": "sh-leibniz", "dim_v1": -1, "dim_v0": 1,
               "d": [], "l2_00": [], "l2_01": [], "l2_10": [], "l3": []})");

    auto mutate = [](std::string text, const std::string& from, const std::string& to) {
        auto pos = text.find(from);
        REQUIRE(pos != std::string::npos);
        return text.replace(pos, from.size(), to);
    };
    // Wrong matrix shape, numeric rationals, bad rational syntax.
    reject(mutate(kMinimalSh, R"([["0"]])", R"([])"));
    reject(mutate(kMinimalSh, R"([["0"]])", R"([["0"], ["0"]])"));
    reject(mutate(kMinimalSh, R"([["0"]])", R"([[0]])"));
    reject(mutate(kMinimalSh, R"([["0"]])", R"([["1.5"]])"));
    reject(mutate(kMinimalSh, R"([["0"]])", R"([["1/0"]])"));
    // Tensor entries: 0-based, out of range, wrong arity, wrong value length,
    // duplicate tuples.
    reject(mutate(kMinimalSh, R"("l2_00": [])",
                  R"("l2_00": [{"at": [0, 1], "value": ["1"]}])"));
    reject(mutate(kMinimalSh, R"("l2_00": [])",
                  R"("l2_00": [{"at": [1, 2], "value": ["1"]}])"));
    reject(mutate(kMinimalSh, R"("l2_00": [])",
                  R"("l2_00": [{"at": [1], "value": ["1"]}])"));
    reject(mutate(kMinimalSh, R"("l2_00": [])",
                  R"("l2_00": [{"at": [1, 1], "value": ["1", "0"]}])"));
    reject(mutate(kMinimalSh, R"("l2_00": [])",
                  R"("l2_00": [{"at": [1, 1], "value": ["1"]},
                               {"at": [1, 1], "value": ["2"]}])"));

    // Alternating-tensor entries: indices must strictly increase, stay in
    // range, and coefficients must parse over the right variable count.
    std::string tca = R"({"kind": "exact-tca", "n": 3, "h": [HOLE]})";
    auto tca_with = [&](const std::string& entry) {
        std::string t = tca;
        return t.replace(t.find("HOLE"), 4, entry);
    };
    CHECK(std::get<ExactTca>(parse_structure(
              tca_with(R"({"at": [1, 2, 3], "coeff": "x3"})"), "mem"))
              .h == bi::tca_r3().h);
    reject(tca_with(R"({"at": [1, 3, 2], "coeff": "1"})"));
    reject(tca_with(R"({"at": [1, 2, 2], "coeff": "1"})"));
    reject(tca_with(R"({"at": [1, 2, 4], "coeff": "1"})"));
    reject(tca_with(R"({"at": [1, 2], "coeff": "1"})"));
    reject(tca_with(R"({"at": [1, 2, 3], "coeff": "x4"})"));
    reject(tca_with(R"({"at": [1, 2, 3], "coeff": ""})"));

    // Reports must be internally consistent.
    std::string rep = R"({"kind": "report", "subject": "s", "seed": 0,
      "checks": [{"name": "n", "label": "l", "pass": PASS,
                  "checked": 1, "failed": FAILED, "witnesses": []}],
      "notes": []})";
    auto rep_with = [&](const std::string& pass, const std::string& failed) {
        std::string t = rep;
        t.replace(t.find("PASS"), 4, pass);
        t.replace(t.find("FAILED"), 6, failed);
        return t;
    };
    CHECK(std::get<VerifyReport>(parse_structure(rep_with("true", "0"), "mem")).ok());
    reject(rep_with("true", "1"));
    reject(rep_with("false", "0"));
    reject(rep_with("\"yes\"", "0"));
}

TEST_CASE("file save and load") {
    std::string path = "/tmp/l2v_io_roundtrip.json";
    Structure s = bi::tp_r5();
    save_structure(s, path);
    Structure back = load_structure(path);
    CHECK(serialize(back) == serialize(s));
    std::remove(path.c_str());

    CHECK_THROWS_AS(load_structure("/tmp/l2v_io_missing_file.json"), ParseError);
}
