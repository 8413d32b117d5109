#include <doctest.h>

#include <string>

#include <qring/errors.hpp>
#include <qring/hom.hpp>
#include <qring/serialize.hpp>

using namespace qring;

namespace {

void check_round_trip(const PresentationPtr& p) {
    auto back = presentation_from_json(presentation_to_json(p));
    CHECK(*back == *p);
    // Kind and size survive even though they do not affect equality of the
    // relation data.
    CHECK(back->kind() == p->kind());
    CHECK(back->n() == p->n());
    CHECK(back->weights() == p->weights());
    CHECK(back->gens() == p->gens());
}

}  // namespace

TEST_CASE("presentations survive a JSON round trip") {
    check_round_trip(preset_quantum_plane());
    check_round_trip(preset_quantum_affine(3));
    check_round_trip(preset_quantum_affine_multiparam(3));
    check_round_trip(preset_quantum_matrices(2));
    check_round_trip(preset_quantum_matrices(3));
    check_round_trip(tensor_square(preset_quantum_plane()));
}

TEST_CASE("square-root aliases travel with the parameter space") {
    auto space = make_param_space_with_root({"p", "l1"}, "q", "p");
    auto p = preset_quantum_affine(CommutationSpec::single_parameter(3, space, "q"));
    auto back = presentation_from_json(presentation_to_json(p));
    CHECK(*back == *p);
    auto q = back->params()->resolve("q");
    REQUIRE(q.has_value());
    CHECK(q->second == 2);
    CHECK(back->params()->name(q->first) == "p");
    // The rebuilt rules quote q as p^2.
    CHECK(back->rule(1, 0).lead == Scalar::param(back->params(), "q").inverse());
}

TEST_CASE("serialization is deterministic and indentation is cosmetic") {
    auto p = preset_quantum_matrices(2);
    const std::string compact = presentation_to_json(p);
    CHECK(compact == presentation_to_json(p));
    CHECK(compact.find('\n') == std::string::npos);

    const std::string pretty = presentation_to_json(p, 2);
    CHECK(pretty != compact);
    CHECK(pretty.find('\n') != std::string::npos);
    CHECK(*presentation_from_json(pretty) == *presentation_from_json(compact));
}

TEST_CASE("deserialized data goes back through full validation") {
    // Corrupting the lead of one rule into a two-term scalar must trip the
    // unit check that guards straightening.
    auto text = presentation_to_json(preset_quantum_plane(), 2);
    const std::string needle = "\"lead\": [";
    auto at = text.find(needle);
    REQUIRE(at != std::string::npos);
    text.insert(at + needle.size(),
                "{\"exponents\": [0], \"coeff\": \"1\"},");
    CHECK_THROWS_AS(presentation_from_json(text), PresentationError);
}

TEST_CASE("malformed documents raise parse errors") {
    CHECK_THROWS_AS(presentation_from_json("{ not json"), ParseError);
    CHECK_THROWS_AS(presentation_from_json("[1,2,3]"), ParseError);
    CHECK_THROWS_AS(presentation_from_json("{\"format\": \"something-else\"}"),
                    ParseError);

    // Structurally valid JSON with schema violations.
    auto base = presentation_to_json(preset_quantum_affine(3));

    SUBCASE("missing rule") {
        auto text = base;
        auto at = text.find("{\"corrections\":[],\"lead\"");
        REQUIRE(at != std::string::npos);
        auto end = text.find('}', at);
        end = text.find('}', end + 1);  // rule objects nest one level
        text.erase(at, end - at + 2);   // drop "{...},"
        CHECK_THROWS_WITH_AS(presentation_from_json(text),
                             doctest::Contains("missing rule"), ParseError);
    }
    SUBCASE("duplicate rule") {
        auto text = base;
        auto at = text.find("\"rules\":[");
        REQUIRE(at != std::string::npos);
        auto obj_start = at + std::string("\"rules\":[").size();
        auto end = text.find('}', obj_start);
        end = text.find('}', end + 1);
        const std::string first = text.substr(obj_start, end - obj_start + 1);
        text.insert(obj_start, first + ",");
        CHECK_THROWS_WITH_AS(presentation_from_json(text),
                             doctest::Contains("duplicate rule"), ParseError);
    }
    SUBCASE("rule pair out of range") {
        auto text = base;
        auto at = text.find("\"u\":1");
        REQUIRE(at != std::string::npos);
        text.replace(at, 5, "\"u\":9");
        CHECK_THROWS_WITH_AS(presentation_from_json(text),
                             doctest::Contains("out of range"), ParseError);
    }
    SUBCASE("missing generators key") {
        auto text = base;
        auto at = text.find("\"generators\"");
        REQUIRE(at != std::string::npos);
        text.replace(at, std::string("\"generators\"").size(), "\"gens\"");
        CHECK_THROWS_WITH_AS(presentation_from_json(text),
                             doctest::Contains("schema error"), ParseError);
    }
    SUBCASE("malformed coefficient") {
        auto text = base;
        auto at = text.find("\"coeff\":\"1\"");
        REQUIRE(at != std::string::npos);
        text.replace(at, std::string("\"coeff\":\"1\"").size(),
                     "\"coeff\":\"one\"");
        CHECK_THROWS_WITH_AS(presentation_from_json(text),
                             doctest::Contains("malformed coefficient"),
                             ParseError);
    }
    SUBCASE("unknown kind") {
        auto text = base;
        auto at = text.find("\"quantum-affine\"");
        REQUIRE(at != std::string::npos);
        text.replace(at, std::string("\"quantum-affine\"").size(),
                     "\"quantum-cubes\"");
        CHECK_THROWS_WITH_AS(presentation_from_json(text),
                             doctest::Contains("unknown algebra kind"),
                             ParseError);
    }
}
