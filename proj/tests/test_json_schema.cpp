#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <regex>
#include <string>

#include "monogen/json_io.hpp"

using namespace monogen;

// minimal JSON Schema checker covering the subset the shipped schema uses:
// $ref into $defs, oneOf, type, enum, pattern, properties, required,
// additionalProperties, items, minItems, maxItems

static bool validate(const json& root, const json& schema, const json& inst);

static const json* resolve_ref(const json& root, const std::string& ref) {
    const std::string prefix = "#/$defs/";
    if (ref.rfind(prefix, 0) != 0) return nullptr;
    const json& defs = root.at("$defs");
    auto it = defs.find(ref.substr(prefix.size()));
    return it == defs.end() ? nullptr : &*it;
}

static bool type_matches(const std::string& t, const json& inst) {
    if (t == "object") return inst.is_object();
    if (t == "array") return inst.is_array();
    if (t == "string") return inst.is_string();
    if (t == "boolean") return inst.is_boolean();
    if (t == "integer") return inst.is_number_integer() || inst.is_number_unsigned();
    if (t == "number") return inst.is_number();
    if (t == "null") return inst.is_null();
    return false;
}

static bool validate(const json& root, const json& schema, const json& inst) {
    if (schema.contains("$ref")) {
        const json* target = resolve_ref(root, schema["$ref"].get<std::string>());
        return target && validate(root, *target, inst);
    }
    if (schema.contains("oneOf")) {
        int hits = 0;
        for (const json& sub : schema["oneOf"]) hits += validate(root, sub, inst) ? 1 : 0;
        if (hits != 1) return false;
    }
    if (schema.contains("type")) {
        const json& t = schema["type"];
        if (t.is_string()) {
            if (!type_matches(t.get<std::string>(), inst)) return false;
        } else {
            bool any = false;
            for (const json& alt : t) any = any || type_matches(alt.get<std::string>(), inst);
            if (!any) return false;
        }
    }
    if (schema.contains("enum")) {
        bool found = false;
        for (const json& v : schema["enum"]) found = found || v == inst;
        if (!found) return false;
    }
    if (schema.contains("pattern") && inst.is_string()) {
        std::regex re(schema["pattern"].get<std::string>());
        if (!std::regex_search(inst.get<std::string>(), re)) return false;
    }
    if (inst.is_object()) {
        if (schema.contains("required")) {
            for (const json& key : schema["required"])
                if (!inst.contains(key.get<std::string>())) return false;
        }
        const json* props = schema.contains("properties") ? &schema["properties"] : nullptr;
        for (auto it = inst.begin(); it != inst.end(); ++it) {
            if (props && props->contains(it.key())) {
                if (!validate(root, (*props)[it.key()], it.value())) return false;
            } else if (schema.contains("additionalProperties") &&
                       schema["additionalProperties"].is_boolean() &&
                       !schema["additionalProperties"].get<bool>()) {
                return false;
            }
        }
    }
    if (inst.is_array()) {
        if (schema.contains("minItems") && inst.size() < schema["minItems"].get<size_t>())
            return false;
        if (schema.contains("maxItems") && inst.size() > schema["maxItems"].get<size_t>())
            return false;
        if (schema.contains("items")) {
            for (const json& item : inst)
                if (!validate(root, schema["items"], item)) return false;
        }
    }
    return true;
}

static json load_schema() {
    std::ifstream in(MONOGEN_SCHEMA_PATH);
    REQUIRE(in.good());
    return json::parse(in);
}

static json run_cli(const std::string& args) {
    std::string cmd = std::string(MONOGEN_BIN_PATH) + " " + args + " --json 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    pclose(pipe);
    REQUIRE(!out.empty());
    return json::parse(out);
}

TEST_CASE("the validator itself distinguishes shapes") {
    json schema = load_schema();
    CHECK(validate(schema, schema, json{{"coeffs", {1, 2, 3}}, {"discriminant", "49"}}));
    CHECK(!validate(schema, schema, json{{"coeffs", {1, 2, 3}}}));
    CHECK(!validate(schema, schema, json{{"coeffs", {1.5}}, {"discriminant", 49}}));
    CHECK(!validate(schema, schema, json{{"coeffs", {1}}, {"discriminant", "x"}}));
    CHECK(!validate(schema, schema, json::array({1, 2})));
}

TEST_CASE("every CLI output kind validates against the shipped schema") {
    json schema = load_schema();
    std::vector<std::string> invocations = {
        "disc --coeffs 1,1,-2,-1",
        "content --coeffs 6,-4,10",
        "act --coeffs 1,0,0,-1,1 --matrix 1,1,0,1 --mode quartic",
        "resolve-pair --gram-a 0,0,1,0,-2,0,1,0,0 --gram-b 2,0,0,0,0,-1,0,-1,2",
        "embed --coeffs 1,2,3,4,5",
        "invert --gram-b 2,0,0,0,0,-1,0,-1,2",
        "rho --matrix 0,1,1,0",
        "resolvent --poly 0,0,-1,1",
        "count --poly 0,0,-1,1",
        "monogenizers --cubic 1,1,-2,-1 --height 30",
        "monogenizers --order 1,0,0,-1,1 --height 10",
        "thue --coeffs 1,1,-2,-1 --target 1 --height 50",
        "thue --coeffs 1,0,0,0,1 --target pm1 --height 10 --sign-identified",
        "bounds table --k-list 6,7",
        "bounds optimize --C 1000000",
        "bounds threshold --kappa 888888889/1000000000",
        "bounds sublattices --r 6",
        "bounds cover --r 2 --box 30",
        // error outputs share the schema too
        "disc --coeffs 5",
        "count --poly 0,0,0,0",
    };
    for (const std::string& args : invocations) {
        CAPTURE(args);
        CHECK(validate(schema, schema, run_cli(args)));
    }
}

TEST_CASE("huge integers are emitted as decimal strings") {
    json schema = load_schema();
    json out = run_cli("disc --coeffs 123456789123,0,0,-1,1");
    CHECK(validate(schema, schema, out));
    CHECK(out["discriminant"].is_string());
    CHECK(int_from_json(out["discriminant"]) == discriminant(make_form({Int("123456789123"), 0, 0, -1, 1})));
}

TEST_CASE("a partial count report validates inside the error shape") {
    json schema = load_schema();
    try {
        count_monogenizations(monic_quartic{0, 0, -1, 1}, 200, 200, 0);
        FAIL("expected reduction_incomplete");
    } catch (const reduction_incomplete& e) {
        json err{{"error", "reduction_incomplete"}, {"message", e.what()}, {"partial", to_json(e.partial)}};
        CHECK(validate(schema, schema, err));
    }
}

TEST_CASE("library to_json output validates against the named definitions") {
    json schema = load_schema();
    const json& defs = schema["$defs"];
    CHECK(validate(schema, defs["ring"], to_json(cubic_ring_from_form(make_form({1, 1, -2, -1})))));
    CHECK(validate(schema, defs["pair"], to_json(pair_from_quartic(make_form({1, 2, 3, 4, 5})))));
    CHECK(validate(schema, defs["form"], to_json(make_form({1, 0, 0, -1, 1}))));
    json sub = to_json(sublattices(12));
    CHECK(sub.size() == 24);
}

TEST_CASE("ring JSON round trip") {
    rank_ring r = cubic_ring_from_form(make_form({1, 1, -2, -1}));
    CHECK(ring_from_json(to_json(r)) == r);

    json doc = json::parse(R"({
        "rank": 3,
        "m": [[2, 1], [1, 1]],
        "c": [[[-1, 1], [0, 0]], [[0, 0], [1, -2]]]
    })");
    CHECK(ring_from_json(doc) == r);

    json big = to_json(rescale(r, Int("10000000000000000000")));
    rank_ring back = ring_from_json(big);
    CHECK(back == rescale(r, Int("10000000000000000000")));
    json schema = load_schema();
    CHECK(validate(schema, schema["$defs"]["ring"], big));

    CHECK_THROWS_AS(ring_from_json(json::parse(R"({"rank": 3, "m": []})")), precondition_failed);
    CHECK_THROWS_AS(ring_from_json(json::parse(R"({"rank": 2, "m": [["x"]], "c": [[[ ]]]})")),
                    precondition_failed);
}

TEST_CASE("int_to_json boundary behaviour") {
    CHECK(int_to_json(Int(0)).is_number_integer());
    CHECK(int_to_json(Int("9223372036854775807")).is_number_integer());
    CHECK(int_to_json(Int("9223372036854775808")).is_string());
    CHECK(int_to_json(Int("-9223372036854775808")).is_number_integer());
    CHECK(int_to_json(Int("-9223372036854775809")).is_string());
    for (const char* s : {"0", "123", "-456", "123456789012345678901234567890"}) {
        CHECK(int_from_json(int_to_json(Int(s))) == Int(s));
    }
    CHECK_THROWS_AS(int_from_json(json("1.5")), precondition_failed);
    CHECK_THROWS_AS(int_from_json(json(1.5)), precondition_failed);
}
