#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "megset/gen.hpp"
#include "megset/setcover.hpp"

using namespace megset;

namespace {

// Worked instance used throughout: 5 items, S1={0,1,2}, S2={1,2}, S3={1,3,4},
// S4={2,4}.
SetCoverInstance worked_instance() {
    return make_instance(5, {{0, 1, 2}, {1, 2}, {1, 3, 4}, {2, 4}});
}

}  // namespace

TEST_CASE("instance construction validates and sorts") {
    const SetCoverInstance inst = make_instance(3, {{2, 0}, {1}});
    CHECK(inst.sets[0] == std::vector<int>{0, 2});
    CHECK(inst.set_name(0) == "S1");
    CHECK(inst.set_name(1) == "S2");

    const SetCoverInstance named = make_instance(1, {{0}}, {"base"});
    CHECK(named.set_name(0) == "base");

    CHECK_THROWS_AS(make_instance(3, {{0, 0}}), ValidationError);
    CHECK_THROWS_AS(make_instance(3, {{3}}), ValidationError);
    CHECK_THROWS_AS(make_instance(3, {{-1}}), ValidationError);
    CHECK_THROWS_AS(make_instance(-1, {}), ValidationError);
}

TEST_CASE("cover membership checks") {
    const SetCoverInstance inst = worked_instance();
    CHECK(is_cover(inst, {0, 2}));
    CHECK(!is_cover(inst, {1, 3}));
    CHECK(is_cover(inst, {0, 1, 2, 3}));
    CHECK_THROWS_AS(is_cover(inst, {4}), ValidationError);
    CHECK_THROWS_AS(is_cover(inst, {0, 0}), ValidationError);
}

TEST_CASE("normalized-form predicate") {
    CHECK(!is_normalized(worked_instance()));  // items 0 and 3 appear once
    CHECK(is_normalized(make_instance(3, {{0, 1}, {1, 2}, {0, 2}})));
    CHECK(!is_normalized(make_instance(2, {{0, 1}})));          // single set
    CHECK(!is_normalized(make_instance(3, {{0, 1, 2}, {2}})));  // small set
}

TEST_CASE("normalization fully solves the worked instance") {
    const NormalizedInstance norm = normalize(worked_instance());
    CHECK(norm.forced == std::vector<int>{0, 2});
    CHECK(norm.fully_solved());
    CHECK(norm.item_map.empty());
    CHECK(norm.set_map.empty());
}

TEST_CASE("normalization leaves normalized instances alone") {
    const SetCoverInstance inst = make_instance(3, {{0, 1}, {1, 2}, {0, 2}});
    const NormalizedInstance norm = normalize(inst);
    CHECK(norm.forced.empty());
    CHECK(!norm.fully_solved());
    CHECK(norm.instance.item_count == 3);
    CHECK(norm.instance.sets == inst.sets);
    CHECK(norm.item_map == std::vector<int>{0, 1, 2});
    CHECK(norm.set_map == std::vector<int>{0, 1, 2});
}

TEST_CASE("a set covering everything is forced immediately") {
    const NormalizedInstance norm = normalize(make_instance(4, {{0, 1, 2, 3}, {1, 2}}));
    CHECK(norm.forced == std::vector<int>{0});
    CHECK(norm.fully_solved());
}

TEST_CASE("normalization rejects uncoverable items") {
    CHECK_THROWS_AS(normalize(make_instance(2, {{0}})), ValidationError);
}

TEST_CASE("normalization preserves the optimum") {
    for (uint64_t seed = 501; seed <= 525; ++seed) {
        const SetCoverInstance inst =
            random_cover_instance(2 + static_cast<int>(seed % 7),
                                  2 + static_cast<int>(seed % 5), seed);
        INFO("seed " << seed);
        const NormalizedInstance norm = normalize(inst);
        const size_t residual_opt =
            norm.fully_solved() ? 0 : exact_min_cover(norm.instance).size();
        CHECK(norm.forced.size() + residual_opt == exact_min_cover(inst).size());
        if (!norm.fully_solved()) {
            CHECK(is_normalized(norm.instance));
            // Residual solution maps back to a cover of the original.
            std::vector<int> full = norm.forced;
            for (int j : exact_min_cover(norm.instance))
                full.push_back(norm.set_map[static_cast<size_t>(j)]);
            CHECK(is_cover(inst, full));
        }
    }
}

TEST_CASE("exact cover solver") {
    CHECK(exact_min_cover(worked_instance()) == std::vector<int>{0, 2});
    CHECK(exact_min_cover(make_instance(1, {{0}})) == std::vector<int>{0});
    CHECK(exact_min_cover(make_instance(2, {{0}, {1}, {0, 1}})) == std::vector<int>{2});
    CHECK(exact_min_cover(make_instance(0, {})).empty());
    CHECK_THROWS_AS(exact_min_cover(make_instance(2, {{0}})), ValidationError);
}

TEST_CASE("greedy cover solver") {
    CHECK(greedy_cover(worked_instance()) == std::vector<int>{0, 2});
    CHECK(greedy_cover(make_instance(4, {{0, 1}, {2, 3}})) == std::vector<int>{0, 1});
    CHECK(greedy_cover(make_instance(3, {{0}, {0, 1, 2}, {1}})) == std::vector<int>{1});
    CHECK_THROWS_AS(greedy_cover(make_instance(2, {{0}})), ValidationError);

    for (uint64_t seed = 551; seed <= 570; ++seed) {
        const SetCoverInstance inst =
            random_cover_instance(3 + static_cast<int>(seed % 6),
                                  2 + static_cast<int>(seed % 6), seed);
        const auto greedy = greedy_cover(inst);
        const auto exact = exact_min_cover(inst);
        CHECK(is_cover(inst, greedy));
        CHECK(is_cover(inst, exact));
        CHECK(greedy.size() >= exact.size());
    }
}

TEST_CASE("instance files round-trip") {
    const SetCoverInstance inst = worked_instance();
    std::stringstream buf;
    write_instance(inst, buf);
    CHECK(buf.str() == "5 4\n0 1 2\n1 2\n1 3 4\n2 4\n");
    const SetCoverInstance back = read_instance(buf);
    CHECK(back.item_count == inst.item_count);
    CHECK(back.sets == inst.sets);
}

TEST_CASE("instance parser handles comments, blanks and errors") {
    std::istringstream ok(
        "# worked instance\n"
        "5 4\n"
        "0 1 2\n"
        "1 2\n"
        "# a comment between sets\n"
        "1 3 4\n"
        "2 4\n");
    CHECK(read_instance(ok).sets.size() == 4);

    // A blank line inside the set block is an empty set.
    std::istringstream with_empty("2 2\n\n0 1\n");
    const SetCoverInstance inst = read_instance(with_empty);
    CHECK(inst.sets[0].empty());
    CHECK(inst.sets[1] == std::vector<int>{0, 1});

    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return read_instance(in);
    };
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("5\n"), ParseError);
    CHECK_THROWS_AS(parse("5 4 1\n"), ParseError);
    CHECK_THROWS_AS(parse("2 2\n0 1\n"), ParseError);       // missing set line
    CHECK_THROWS_AS(parse("2 1\n0 1\n0\n"), ParseError);    // trailing content
    CHECK_THROWS_AS(parse("2 1\n0 x\n"), ParseError);
    CHECK_THROWS_AS(parse("2 1\n0 9\n"), ValidationError);  // item out of range
}
